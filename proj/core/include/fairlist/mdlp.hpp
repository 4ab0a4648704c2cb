#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fairlist/table.hpp"

namespace fairlist {

/// Outcome of entropy-based discretization over a table. Numeric columns are
/// replaced by interval-valued categorical columns ("<=3.5", "(3.5,7]", ">7");
/// columns where no split passes the MDL test collapse to a single interval
/// and are recorded in passed_through (they carry no information and are
/// dropped from the rewritten table).
struct MdlpResult {
    RawTable table;
    std::map<std::string, std::vector<double>> thresholds;
    std::vector<std::string> passed_through;
};

/// Minimum description length cut acceptance: recursively split a numeric
/// column at the entropy-minimizing boundary, keeping a cut only when the
/// information gain beats the MDL penalty (log2(N-1) + delta) / N.
///
/// values/labels must be parallel; labels are the binary training labels.
/// Returns accepted thresholds in ascending order (possibly empty).
std::vector<double> mdlp_thresholds(const std::vector<double>& values,
                                    const std::vector<bool>& labels);

/// Columns of `table` whose every cell parses as a finite double and which
/// take more than two distinct values. The label and sensitive columns are
/// never considered numeric.
std::vector<std::string> detect_numeric_columns(const RawTable& table);

/// Discretize `numeric_columns` of `table`. Thresholds are learned on the
/// first ceil(split_fraction * rows) rows only, then applied to the whole
/// table; split_fraction <= 0 learns on (and applies to) all rows. Binary and
/// categorical columns pass through untouched.
MdlpResult mdlp_discretize(const RawTable& table,
                           const std::vector<std::string>& numeric_columns,
                           double split_fraction);

/// Interval label for a value given ascending thresholds, e.g. "<=3.5".
std::string interval_label(double value, const std::vector<double>& thresholds);

/// All interval labels for a threshold list, in ascending order.
std::vector<std::string> interval_labels(const std::vector<double>& thresholds);

} // namespace fairlist
