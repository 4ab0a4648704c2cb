#include "fairlist/fairness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fairlist/errors.hpp"

namespace fairlist {
namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct RatePair {
    double g0 = 0.0, g1 = 0.0;
    bool degenerate = false; ///< a denominator was zero in either group

    /// The metric term: |g0 - g1|, or 0 when either denominator was zero
    /// (a group that cannot witness the rate shows no disparity).
    double gap() const { return degenerate ? 0.0 : std::abs(g0 - g1); }
};

RatePair rate_pair(std::size_t num0, std::size_t den0,
                   std::size_t num1, std::size_t den1) {
    RatePair r;
    r.degenerate = den0 == 0 || den1 == 0;
    r.g0 = den0 == 0 ? 0.0 : static_cast<double>(num0) / static_cast<double>(den0);
    r.g1 = den1 == 0 ? 0.0 : static_cast<double>(num1) / static_cast<double>(den1);
    return r;
}

RatePair positive_rate(const GroupConfusion& c) { // selection rate
    return rate_pair(c.g0.tp + c.g0.fp, c.g0.total(),
                     c.g1.tp + c.g1.fp, c.g1.total());
}
RatePair ppv(const GroupConfusion& c) {
    return rate_pair(c.g0.tp, c.g0.tp + c.g0.fp, c.g1.tp, c.g1.tp + c.g1.fp);
}
RatePair npv(const GroupConfusion& c) {
    return rate_pair(c.g0.tn, c.g0.tn + c.g0.fn, c.g1.tn, c.g1.tn + c.g1.fn);
}
RatePair tpr(const GroupConfusion& c) {
    return rate_pair(c.g0.tp, c.g0.tp + c.g0.fn, c.g1.tp, c.g1.tp + c.g1.fn);
}
RatePair fpr(const GroupConfusion& c) {
    return rate_pair(c.g0.fp, c.g0.fp + c.g0.tn, c.g1.fp, c.g1.fp + c.g1.tn);
}

} // namespace

std::string metric_name(Metric m) {
    switch (m) {
    case Metric::StatisticalParity: return "sp";
    case Metric::PredictiveParity: return "pp";
    case Metric::PredictiveEquality: return "pe";
    case Metric::EqualOpportunity: return "eopp";
    case Metric::EqualizedOdds: return "eodds";
    case Metric::ConditionalUseAccuracy: return "cuae";
    }
    return "?";
}

Metric parse_metric(const std::string& name) {
    for (const Metric m : kAllMetrics)
        if (metric_name(m) == name) return m;
    throw InputError("unknown fairness metric '" + name +
                     "' (expected sp, pp, pe, eopp, eodds or cuae)");
}

GroupConfusion confusion(const BitVector& predictions, const BinaryDataset& data) {
    if (predictions.size() != data.num_samples)
        throw InputError("confusion: prediction vector length mismatch");

    // One pass; derive all eight cells from seven popcounts to avoid
    // complements.
    const auto pw = predictions.words();
    const auto yw = data.labels.words();
    const auto gw = data.group.words();
    std::size_t np = 0, npy = 0, npg = 0, npyg = 0, ny = 0, ng = 0, nyg = 0;
    for (std::size_t i = 0; i < pw.size(); ++i) {
        const auto p = pw[i], y = yw[i], g = gw[i];
        np += static_cast<std::size_t>(std::popcount(p));
        npy += static_cast<std::size_t>(std::popcount(p & y));
        npg += static_cast<std::size_t>(std::popcount(p & g));
        npyg += static_cast<std::size_t>(std::popcount(p & y & g));
        ny += static_cast<std::size_t>(std::popcount(y));
        ng += static_cast<std::size_t>(std::popcount(g));
        nyg += static_cast<std::size_t>(std::popcount(y & g));
    }

    GroupConfusion c;
    c.g1.tp = npyg;
    c.g1.fp = npg - npyg;
    c.g1.fn = nyg - npyg;
    c.g1.tn = ng - c.g1.tp - c.g1.fp - c.g1.fn;
    c.g0.tp = npy - npyg;
    c.g0.fp = (np - npg) - c.g0.tp;
    c.g0.fn = (ny - nyg) - c.g0.tp;
    c.g0.tn = (data.num_samples - ng) - c.g0.tp - c.g0.fp - c.g0.fn;
    return c;
}

double unfairness(const GroupConfusion& conf, Metric m) {
    switch (m) {
    case Metric::StatisticalParity: return positive_rate(conf).gap();
    case Metric::PredictiveParity: return ppv(conf).gap();
    case Metric::PredictiveEquality: return fpr(conf).gap();
    case Metric::EqualOpportunity: return tpr(conf).gap();
    case Metric::EqualizedOdds: return tpr(conf).gap() + fpr(conf).gap();
    case Metric::ConditionalUseAccuracy: return ppv(conf).gap() + npv(conf).gap();
    }
    return 0.0;
}

double unfairness_of(const RuleList& model, const BinaryDataset& data,
                     const AntecedentSet& set, Metric m) {
    return unfairness(confusion(predict(model, data, set).predictions, data), m);
}

AuditReport audit(const RuleList& model, const BinaryDataset& data,
                  const AntecedentSet& set, const std::vector<Metric>& metrics) {
    AuditReport report;
    report.num_samples = data.num_samples;
    const auto pv = predict(model, data, set);
    report.conf = confusion(pv.predictions, data);
    const std::size_t wrong =
        BitVector::count_and_not(pv.predictions, data.labels) +
        BitVector::count_and_not(data.labels, pv.predictions);
    report.accuracy = 1.0 - static_cast<double>(wrong) /
                                static_cast<double>(data.num_samples);

    for (const Metric m : metrics) {
        AuditReport::Entry entry;
        entry.metric = m;
        entry.value = unfairness(report.conf, m);
        RatePair first, second;
        bool has_second = false;
        switch (m) {
        case Metric::StatisticalParity: first = positive_rate(report.conf); break;
        case Metric::PredictiveParity: first = ppv(report.conf); break;
        case Metric::PredictiveEquality: first = fpr(report.conf); break;
        case Metric::EqualOpportunity: first = tpr(report.conf); break;
        case Metric::EqualizedOdds:
            first = tpr(report.conf);
            second = fpr(report.conf);
            has_second = true;
            break;
        case Metric::ConditionalUseAccuracy:
            first = ppv(report.conf);
            second = npv(report.conf);
            has_second = true;
            break;
        }
        entry.rate_g0 = first.g0;
        entry.rate_g1 = first.g1;
        entry.degenerate = first.degenerate;
        if (has_second) {
            entry.rate2_g0 = second.g0;
            entry.rate2_g1 = second.g1;
            entry.degenerate = entry.degenerate || second.degenerate;
        }
        report.entries.push_back(entry);
    }
    return report;
}

std::string audit_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "metric,value,rate_group0,rate_group1,rate2_group0,rate2_group1,degenerate\n";
    out << "accuracy," << format_value(report.accuracy) << ",,,,,\n";
    for (const auto& entry : report.entries) {
        out << metric_name(entry.metric) << ',' << format_value(entry.value) << ','
            << format_value(entry.rate_g0) << ',' << format_value(entry.rate_g1) << ',';
        const bool has_second = entry.metric == Metric::EqualizedOdds ||
                                entry.metric == Metric::ConditionalUseAccuracy;
        if (has_second)
            out << format_value(entry.rate2_g0) << ',' << format_value(entry.rate2_g1);
        else
            out << ',';
        out << ',' << (entry.degenerate ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string audit_table(const AuditReport& report) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "samples: %zu  accuracy: %.4f\n",
                  report.num_samples, report.accuracy);
    out << line;
    std::snprintf(line, sizeof line, "%-8s %10s %12s %12s %s\n", "metric", "value",
                  "group0", "group1", "flags");
    out << line;
    for (const auto& entry : report.entries) {
        std::string rates0 = format_value(entry.rate_g0);
        std::string rates1 = format_value(entry.rate_g1);
        if (entry.metric == Metric::EqualizedOdds ||
            entry.metric == Metric::ConditionalUseAccuracy) {
            rates0 += "/" + format_value(entry.rate2_g0);
            rates1 += "/" + format_value(entry.rate2_g1);
        }
        std::snprintf(line, sizeof line, "%-8s %10s %12s %12s %s\n",
                      metric_name(entry.metric).c_str(),
                      format_value(entry.value).c_str(), rates0.c_str(),
                      rates1.c_str(), entry.degenerate ? "degenerate" : "");
        out << line;
    }
    return out.str();
}

} // namespace fairlist
