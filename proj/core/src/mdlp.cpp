#include "fairlist/mdlp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace fairlist {
namespace {

bool parse_double(const std::string& cell, double& out) {
    if (cell.empty()) return false;
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + cell.size() && std::isfinite(out);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double entropy(std::size_t pos, std::size_t total) {
    if (total == 0) return 0.0;
    const std::size_t neg = total - pos;
    double e = 0.0;
    for (const std::size_t c : {pos, neg}) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        e -= p * std::log2(p);
    }
    return e;
}

std::size_t classes_present(std::size_t pos, std::size_t total) {
    return (pos > 0 ? 1u : 0u) + (pos < total ? 1u : 0u);
}

struct SortedColumn {
    std::vector<double> values;     // ascending
    std::vector<std::size_t> pos_prefix; // pos_prefix[i] = positives among first i
};

// Recursive entropy partitioning on [lo, hi).
void split_segment(const SortedColumn& col, std::size_t lo, std::size_t hi,
                   std::vector<double>& out) {
    const std::size_t n = hi - lo;
    if (n < 2) return;
    const std::size_t pos = col.pos_prefix[hi] - col.pos_prefix[lo];
    const double ent = entropy(pos, n);
    if (ent == 0.0) return; // pure segment

    double best_gain = -1.0;
    std::size_t best_cut = 0;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        if (col.values[i - 1] == col.values[i]) continue;
        const std::size_t ln = i - lo;
        const std::size_t lpos = col.pos_prefix[i] - col.pos_prefix[lo];
        const std::size_t rn = hi - i;
        const std::size_t rpos = pos - lpos;
        const double weighted =
            (static_cast<double>(ln) * entropy(lpos, ln) +
             static_cast<double>(rn) * entropy(rpos, rn)) /
            static_cast<double>(n);
        const double gain = ent - weighted;
        if (gain > best_gain) { // strict: ties keep the smallest threshold
            best_gain = gain;
            best_cut = i;
        }
    }
    if (best_cut == 0) return; // all values equal

    const std::size_t ln = best_cut - lo;
    const std::size_t lpos = col.pos_prefix[best_cut] - col.pos_prefix[lo];
    const std::size_t rn = hi - best_cut;
    const std::size_t rpos = pos - lpos;
    const std::size_t k = classes_present(pos, n);
    const std::size_t k1 = classes_present(lpos, ln);
    const std::size_t k2 = classes_present(rpos, rn);
    const double delta =
        std::log2(std::pow(3.0, static_cast<double>(k)) - 2.0) -
        (static_cast<double>(k) * ent -
         static_cast<double>(k1) * entropy(lpos, ln) -
         static_cast<double>(k2) * entropy(rpos, rn));
    const double threshold_cost =
        (std::log2(static_cast<double>(n - 1)) + delta) / static_cast<double>(n);
    if (best_gain <= threshold_cost) return;

    out.push_back((col.values[best_cut - 1] + col.values[best_cut]) / 2.0);
    split_segment(col, lo, best_cut, out);
    split_segment(col, best_cut, hi, out);
}

} // namespace

std::vector<double> mdlp_thresholds(const std::vector<double>& values,
                                    const std::vector<bool>& labels) {
    if (values.size() != labels.size())
        throw InputError("mdlp: values/labels size mismatch");

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });

    SortedColumn col;
    col.values.reserve(values.size());
    col.pos_prefix.assign(1, 0);
    for (const std::size_t idx : order) {
        col.values.push_back(values[idx]);
        col.pos_prefix.push_back(col.pos_prefix.back() + (labels[idx] ? 1 : 0));
    }

    std::vector<double> thresholds;
    split_segment(col, 0, col.values.size(), thresholds);
    std::sort(thresholds.begin(), thresholds.end());
    return thresholds;
}

std::vector<std::string> detect_numeric_columns(const RawTable& table) {
    std::vector<std::string> numeric;
    for (std::size_t c = 0; c < table.num_cols(); ++c) {
        if (c == table.label_col || c == table.sensitive_col) continue;
        std::vector<double> distinct;
        bool all_numeric = true;
        for (const auto& row : table.rows) {
            double v = 0.0;
            if (!parse_double(row[c], v)) {
                all_numeric = false;
                break;
            }
            if (std::find(distinct.begin(), distinct.end(), v) == distinct.end())
                distinct.push_back(v);
        }
        // One- or two-valued numeric columns are already categorical.
        if (all_numeric && distinct.size() > 2)
            numeric.push_back(table.columns[c]);
    }
    return numeric;
}

std::string interval_label(double value, const std::vector<double>& thresholds) {
    if (thresholds.empty()) return "all";
    if (value <= thresholds.front()) return "<=" + format_number(thresholds.front());
    if (value > thresholds.back()) return ">" + format_number(thresholds.back());
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        if (value <= thresholds[i])
            return "(" + format_number(thresholds[i - 1]) + "," +
                   format_number(thresholds[i]) + "]";
    }
    return ">" + format_number(thresholds.back()); // unreachable
}

std::vector<std::string> interval_labels(const std::vector<double>& thresholds) {
    std::vector<std::string> labels;
    if (thresholds.empty()) return labels;
    labels.push_back("<=" + format_number(thresholds.front()));
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        labels.push_back("(" + format_number(thresholds[i - 1]) + "," +
                         format_number(thresholds[i]) + "]");
    labels.push_back(">" + format_number(thresholds.back()));
    return labels;
}

MdlpResult mdlp_discretize(const RawTable& table,
                           const std::vector<std::string>& numeric_columns,
                           double split_fraction) {
    const std::size_t total = table.num_rows();
    std::size_t learn_rows = total;
    if (split_fraction > 0.0 && split_fraction < 1.0) {
        learn_rows = static_cast<std::size_t>(
            std::ceil(split_fraction * static_cast<double>(total)));
        learn_rows = std::clamp<std::size_t>(learn_rows, 1, total);
    }

    const BinaryMapping label_map = binary_mapping(table, table.label_col);
    std::vector<bool> learn_labels(learn_rows);
    for (std::size_t r = 0; r < learn_rows; ++r)
        learn_labels[r] = label_map.to_bit(table.rows[r][table.label_col]);

    MdlpResult result;
    std::vector<std::size_t> drop_cols;
    std::vector<std::pair<std::size_t, std::vector<double>>> rewrites;

    for (const auto& name : numeric_columns) {
        const std::size_t c = table.column_index(name);
        if (c == table.label_col || c == table.sensitive_col)
            throw InputError("mdlp: cannot discretize label/sensitive column '" +
                             name + "'");
        std::vector<double> learn_values(learn_rows);
        for (std::size_t r = 0; r < learn_rows; ++r) {
            if (!parse_double(table.rows[r][c], learn_values[r]))
                throw InputError("mdlp: column '" + name +
                                 "' has non-numeric value '" + table.rows[r][c] + "'");
        }
        auto thresholds = mdlp_thresholds(learn_values, learn_labels);
        if (thresholds.empty()) {
            result.passed_through.push_back(name);
            drop_cols.push_back(c);
        } else {
            rewrites.emplace_back(c, thresholds);
            result.thresholds[name] = std::move(thresholds);
        }
    }

    RawTable out;
    const std::string label_name = table.columns[table.label_col];
    const std::string sensitive_name = table.columns[table.sensitive_col];
    for (std::size_t c = 0; c < table.num_cols(); ++c)
        if (std::find(drop_cols.begin(), drop_cols.end(), c) == drop_cols.end())
            out.columns.push_back(table.columns[c]);

    out.rows.reserve(total);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        cells.reserve(out.columns.size());
        for (std::size_t c = 0; c < table.num_cols(); ++c) {
            if (std::find(drop_cols.begin(), drop_cols.end(), c) != drop_cols.end())
                continue;
            const auto rewrite = std::find_if(
                rewrites.begin(), rewrites.end(),
                [&](const auto& rw) { return rw.first == c; });
            if (rewrite == rewrites.end()) {
                cells.push_back(row[c]);
            } else {
                double v = 0.0;
                if (!parse_double(row[c], v))
                    throw InputError("mdlp: column '" + table.columns[c] +
                                     "' has non-numeric value '" + row[c] + "'");
                cells.push_back(interval_label(v, rewrite->second));
            }
        }
        out.rows.push_back(std::move(cells));
    }

    out.dropped_rows = table.dropped_rows;
    out.label_col = out.column_index(label_name);
    out.sensitive_col = out.column_index(sensitive_name);
    result.table = std::move(out);
    return result;
}

} // namespace fairlist
