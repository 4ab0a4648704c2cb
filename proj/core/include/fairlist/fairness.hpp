#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fairlist/bitvector.hpp"
#include "fairlist/dataset.hpp"
#include "fairlist/rule_list.hpp"

namespace fairlist {

/// The statistical-fairness notions the search can constrain. Each reduces to
/// an absolute gap (or sum of gaps) between per-group rates.
enum class Metric {
    StatisticalParity,    ///< gap in positive prediction rate
    PredictiveParity,     ///< gap in positive predictive value
    PredictiveEquality,   ///< gap in false positive rate
    EqualOpportunity,     ///< gap in true positive rate
    EqualizedOdds,        ///< TPR gap + FPR gap
    ConditionalUseAccuracy ///< PPV gap + NPV gap
};

inline constexpr std::array<Metric, 6> kAllMetrics = {
    Metric::StatisticalParity,    Metric::PredictiveParity,
    Metric::PredictiveEquality,   Metric::EqualOpportunity,
    Metric::EqualizedOdds,        Metric::ConditionalUseAccuracy,
};

/// Canonical short names: sp, pp, pe, eopp, eodds, cuae.
std::string metric_name(Metric m);
Metric parse_metric(const std::string& name); ///< throws InputError

struct GroupCounts {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;

    std::size_t total() const { return tp + fp + tn + fn; }
};

/// Per-group confusion counts; g1 is the sensitive group (group bit set).
struct GroupConfusion {
    GroupCounts g0, g1;
};

/// One fused pass over the prediction/label/group vectors.
GroupConfusion confusion(const BitVector& predictions, const BinaryDataset& data);

/// The metric value for a confusion table. Any rate whose denominator is
/// zero in either group contributes 0 to the gap (degenerate groups cannot
/// witness unfairness).
double unfairness(const GroupConfusion& conf, Metric m);

double unfairness_of(const RuleList& model, const BinaryDataset& data,
                     const AntecedentSet& set, Metric m);

/// Full audit of a model on a dataset: accuracy plus every metric with its
/// per-group rate terms and degeneracy flags.
struct AuditReport {
    std::size_t num_samples = 0;
    double accuracy = 0.0;
    GroupConfusion conf;

    struct Entry {
        Metric metric;
        double value = 0.0;
        double rate_g0 = 0.0, rate_g1 = 0.0;       ///< primary rate per group
        double rate2_g0 = 0.0, rate2_g1 = 0.0;      ///< second rate (eodds/cuae)
        bool degenerate = false;                    ///< any zero denominator hit
    };
    std::vector<Entry> entries;
};

AuditReport audit(const RuleList& model, const BinaryDataset& data,
                  const AntecedentSet& set, const std::vector<Metric>& metrics);

std::string audit_csv(const AuditReport& report);
std::string audit_table(const AuditReport& report);

} // namespace fairlist
