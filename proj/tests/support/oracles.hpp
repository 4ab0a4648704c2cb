#pragma once

// Independent reference implementations ("oracles") that the library is
// checked against. These favor obviousness over speed and deliberately avoid
// sharing code paths with the implementations under test.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <fairlist/antecedents.hpp>
#include <fairlist/dataset.hpp>
#include <fairlist/fairness.hpp>
#include <fairlist/rule_list.hpp>

namespace fairlist::test {

/// One fully evaluated candidate rule list (default derived as the majority
/// label of uncaptured samples, ties to 0).
struct EnumeratedModel {
    RuleList model;
    std::size_t length = 0;
    double error = 0.0;
    std::array<double, 6> unfairness{}; ///< indexed by kAllMetrics order
};

/// Every rule list over the antecedent set up to max_length rules: all
/// orderings of distinct antecedents, all prediction assignments.
std::vector<EnumeratedModel> enumerate_models(const BinaryDataset& data,
                                              const AntecedentSet& set,
                                              std::size_t max_length);

struct OracleOptimum {
    bool feasible = false;
    double objective = 0.0; ///< min over feasible models; meaningless if none
};

/// Constrained minimum of error + lambda*length over an enumeration.
OracleOptimum oracle_optimum(const std::vector<EnumeratedModel>& models,
                             double lambda, Metric metric, double epsilon);

/// Unfairness recomputed directly from per-sample loops (no bit tricks).
double oracle_unfairness(const BitVector& predictions, const BinaryDataset& data,
                         Metric metric);

/// Quadratic pairwise dominance filter: minimize both coordinates, exact
/// duplicates keep the earliest index. Returns kept indices ascending.
std::vector<std::size_t> oracle_pareto(
    const std::vector<std::pair<double, double>>& points);

/// Entropy/MDL discretization recomputed with plain per-segment scans.
std::vector<double> oracle_mdlp(const std::vector<double>& values,
                                const std::vector<bool>& labels);

} // namespace fairlist::test
