#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fairlist::test {
namespace {

std::size_t metric_index(Metric m) {
    for (std::size_t i = 0; i < kAllMetrics.size(); ++i)
        if (kAllMetrics[i] == m) return i;
    return 0;
}

struct Tally {
    long tp = 0, fp = 0, tn = 0, fn = 0;
};

// A rate that "fails" when its denominator is zero; failed rates zero out the
// term they appear in, per the library's documented convention.
struct MaybeRate {
    double value = 0.0;
    bool ok = false;
};

MaybeRate make_rate(long num, long den) {
    if (den == 0) return {0.0, false};
    return {static_cast<double>(num) / static_cast<double>(den), true};
}

double term(MaybeRate a, MaybeRate b) {
    if (!a.ok || !b.ok) return 0.0;
    return std::fabs(a.value - b.value);
}

void evaluate(const BinaryDataset& data, const AntecedentSet& set,
              const std::vector<Rule>& rules, EnumeratedModel& out) {
    const std::size_t m = data.num_samples;
    std::vector<int> fired(m, -1);
    long unc_pos = 0, unc_neg = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < rules.size(); ++k) {
            if (set[rules[k].antecedent].capture.test(i)) {
                fired[i] = static_cast<int>(k);
                break;
            }
        }
        if (fired[i] < 0) (data.labels.test(i) ? unc_pos : unc_neg) += 1;
    }
    const bool default_prediction = unc_pos > unc_neg; // tie -> 0

    out.model.rules = rules;
    out.model.default_prediction = default_prediction;
    out.length = rules.size();

    BitVector predictions(m);
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool p = fired[i] >= 0
                           ? rules[static_cast<std::size_t>(fired[i])].prediction
                           : default_prediction;
        if (p) predictions.set(i);
        if (p != data.labels.test(i)) ++wrong;
    }
    out.error = static_cast<double>(wrong) / static_cast<double>(m);
    for (std::size_t mi = 0; mi < kAllMetrics.size(); ++mi)
        out.unfairness[mi] = oracle_unfairness(predictions, data, kAllMetrics[mi]);
}

void enumerate_rec(const BinaryDataset& data, const AntecedentSet& set,
                   std::size_t max_length, std::vector<Rule>& prefix,
                   std::vector<EnumeratedModel>& out) {
    out.emplace_back();
    evaluate(data, set, prefix, out.back());
    if (prefix.size() >= max_length) return;
    for (std::uint32_t a = 0; a < set.size(); ++a) {
        bool used = false;
        for (const auto& rule : prefix) used = used || rule.antecedent == a;
        if (used) continue;
        for (const bool p : {false, true}) {
            prefix.push_back({a, p});
            enumerate_rec(data, set, max_length, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::vector<EnumeratedModel> enumerate_models(const BinaryDataset& data,
                                              const AntecedentSet& set,
                                              std::size_t max_length) {
    std::vector<EnumeratedModel> out;
    std::vector<Rule> prefix;
    enumerate_rec(data, set, max_length, prefix, out);
    return out;
}

OracleOptimum oracle_optimum(const std::vector<EnumeratedModel>& models,
                             double lambda, Metric metric, double epsilon) {
    const std::size_t mi = metric_index(metric);
    OracleOptimum best;
    best.objective = std::numeric_limits<double>::infinity();
    for (const auto& candidate : models) {
        if (candidate.unfairness[mi] > 1.0 - epsilon) continue;
        const double objective =
            candidate.error + lambda * static_cast<double>(candidate.length);
        if (!best.feasible || objective < best.objective) {
            best.feasible = true;
            best.objective = objective;
        }
    }
    return best;
}

double oracle_unfairness(const BitVector& predictions, const BinaryDataset& data,
                         Metric metric) {
    Tally g[2];
    for (std::size_t i = 0; i < data.num_samples; ++i) {
        Tally& t = g[data.group.test(i) ? 1 : 0];
        const bool p = predictions.test(i);
        const bool y = data.labels.test(i);
        if (p && y) t.tp++;
        else if (p && !y) t.fp++;
        else if (!p && y) t.fn++;
        else t.tn++;
    }

    const auto pr = [&](int k) {
        return make_rate(g[k].tp + g[k].fp, g[k].tp + g[k].fp + g[k].tn + g[k].fn);
    };
    const auto ppv = [&](int k) { return make_rate(g[k].tp, g[k].tp + g[k].fp); };
    const auto npv = [&](int k) { return make_rate(g[k].tn, g[k].tn + g[k].fn); };
    const auto tpr = [&](int k) { return make_rate(g[k].tp, g[k].tp + g[k].fn); };
    const auto fpr = [&](int k) { return make_rate(g[k].fp, g[k].fp + g[k].tn); };

    switch (metric) {
    case Metric::StatisticalParity: return term(pr(0), pr(1));
    case Metric::PredictiveParity: return term(ppv(0), ppv(1));
    case Metric::PredictiveEquality: return term(fpr(0), fpr(1));
    case Metric::EqualOpportunity: return term(tpr(0), tpr(1));
    case Metric::EqualizedOdds: return term(tpr(0), tpr(1)) + term(fpr(0), fpr(1));
    case Metric::ConditionalUseAccuracy:
        return term(ppv(0), ppv(1)) + term(npv(0), npv(1));
    }
    return 0.0;
}

std::vector<std::size_t> oracle_pareto(
    const std::vector<std::pair<double, double>>& points) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool ruled_out = false;
        for (std::size_t j = 0; j < points.size() && !ruled_out; ++j) {
            if (j == i) continue;
            const bool weakly =
                points[j].first <= points[i].first &&
                points[j].second <= points[i].second;
            const bool strictly =
                weakly && (points[j].first < points[i].first ||
                           points[j].second < points[i].second);
            if (strictly) ruled_out = true;
            // exact duplicate: only the earliest survives
            if (j < i && points[j] == points[i]) ruled_out = true;
        }
        if (!ruled_out) kept.push_back(i);
    }
    return kept;
}

namespace {

using Pairs = std::vector<std::pair<double, bool>>;

double seg_entropy(const Pairs& seg) {
    long pos = 0;
    for (const auto& [v, y] : seg) pos += y ? 1 : 0;
    const long n = static_cast<long>(seg.size());
    double e = 0.0;
    for (const long c : {pos, n - pos}) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(n);
        e -= p * std::log2(p);
    }
    return e;
}

long seg_classes(const Pairs& seg) {
    bool any0 = false, any1 = false;
    for (const auto& [v, y] : seg) (y ? any1 : any0) = true;
    return (any0 ? 1 : 0) + (any1 ? 1 : 0);
}

void mdlp_rec(const Pairs& seg, std::vector<double>& out) {
    const std::size_t n = seg.size();
    if (n < 2) return;
    const double full = seg_entropy(seg);

    double best_gain = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (seg[i - 1].first == seg[i].first) continue;
        const Pairs left(seg.begin(), seg.begin() + static_cast<long>(i));
        const Pairs right(seg.begin() + static_cast<long>(i), seg.end());
        const double gain =
            full -
            static_cast<double>(left.size()) / static_cast<double>(n) *
                seg_entropy(left) -
            static_cast<double>(right.size()) / static_cast<double>(n) *
                seg_entropy(right);
        if (gain > best_gain) {
            best_gain = gain;
            best_i = i;
        }
    }
    if (best_i == 0) return;

    const Pairs left(seg.begin(), seg.begin() + static_cast<long>(best_i));
    const Pairs right(seg.begin() + static_cast<long>(best_i), seg.end());
    const double delta =
        std::log2(std::pow(3.0, static_cast<double>(seg_classes(seg))) - 2.0) -
        (static_cast<double>(seg_classes(seg)) * full -
         static_cast<double>(seg_classes(left)) * seg_entropy(left) -
         static_cast<double>(seg_classes(right)) * seg_entropy(right));
    const double bar =
        (std::log2(static_cast<double>(n - 1)) + delta) / static_cast<double>(n);
    if (best_gain <= bar) return;

    out.push_back((seg[best_i - 1].first + seg[best_i].first) / 2.0);
    mdlp_rec(left, out);
    mdlp_rec(right, out);
}

} // namespace

std::vector<double> oracle_mdlp(const std::vector<double>& values,
                                const std::vector<bool>& labels) {
    Pairs pairs;
    for (std::size_t i = 0; i < values.size(); ++i)
        pairs.emplace_back(values[i], labels[i]);
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<double> out;
    mdlp_rec(pairs, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fairlist::test
