#include "fairlist/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "fairlist/errors.hpp"

namespace fairlist {
namespace {

constexpr std::uint32_t kNoParent = 0xFFFFFFFFu;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Node {
    std::uint32_t parent = kNoParent;
    std::uint32_t antecedent = 0;
    std::uint32_t captured = 0;      // samples captured by the whole prefix
    std::uint32_t misclassified = 0; // captured samples the prefix gets wrong
    double bound = 0.0;
    double objective = 0.0;
    std::uint16_t depth = 0;
    std::uint8_t prediction = 0;
    std::uint8_t default_prediction = 0;
};

struct HeapEntry {
    double primary = 0.0;
    double secondary = 0.0;
    std::uint64_t seq = 0;
    std::uint32_t node = 0;
};

// std::priority_queue serves the largest element; invert so the smallest
// (primary, secondary, seq) triple is served, making ties FIFO.
struct HeapAfter {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.primary != b.primary) return a.primary > b.primary;
        if (a.secondary != b.secondary) return a.secondary > b.secondary;
        return a.seq > b.seq;
    }
};

/// Rules of a node's prefix in list order, plus its antecedent ids.
void collect_prefix(const std::vector<Node>& nodes, std::uint32_t idx,
                    std::vector<Rule>& rules) {
    rules.clear();
    for (std::uint32_t cur = idx; nodes[cur].parent != kNoParent;
         cur = nodes[cur].parent)
        rules.push_back({nodes[cur].antecedent, nodes[cur].prediction != 0});
    std::reverse(rules.begin(), rules.end());
}

RuleList majority_default_list() {
    return RuleList{};
}

} // namespace

std::string strategy_name(Strategy s) {
    switch (s) {
    case Strategy::Bfs: return "bfs";
    case Strategy::BfsObjAware: return "bfs-obj";
    case Strategy::Curious: return "curious";
    case Strategy::LowerBound: return "lower-bound";
    }
    return "?";
}

Strategy parse_strategy(const std::string& name) {
    for (const Strategy s : {Strategy::Bfs, Strategy::BfsObjAware,
                             Strategy::Curious, Strategy::LowerBound})
        if (strategy_name(s) == name) return s;
    throw InputError("unknown strategy '" + name +
                     "' (expected bfs, bfs-obj, curious or lower-bound)");
}

std::string status_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::Optimal: return "optimal";
    case SearchStatus::NodeCap: return "node-cap";
    case SearchStatus::TimeLimit: return "time-limit";
    case SearchStatus::Infeasible: return "infeasible";
    }
    return "?";
}

double lower_bound_value(std::size_t misclassified, std::size_t num_samples,
                         double lambda, std::size_t length) {
    return static_cast<double>(misclassified) / static_cast<double>(num_samples) +
           lambda * static_cast<double>(length);
}

QueueKey priority_key(Strategy s, std::size_t depth, double bound,
                      double objective, std::size_t captured,
                      std::size_t num_samples, bool bfs_low_objective_first) {
    switch (s) {
    case Strategy::Bfs:
        return {static_cast<double>(depth), 0.0};
    case Strategy::BfsObjAware:
        // Serve higher-objective prefixes first within a depth; the hidden
        // knob flips that for experimentation.
        return {static_cast<double>(depth),
                bfs_low_objective_first ? objective : -objective};
    case Strategy::Curious: {
        // Bound over normalized support; zero-capture prefixes count as one
        // sample to keep the ratio finite.
        const double frac =
            captured == 0
                ? 1.0 / static_cast<double>(num_samples)
                : static_cast<double>(captured) / static_cast<double>(num_samples);
        return {bound / frac, 0.0};
    }
    case Strategy::LowerBound:
        return {bound, 0.0};
    }
    return {0.0, 0.0};
}

PrefixEval evaluate_prefix(const std::vector<Rule>& prefix,
                           const BinaryDataset& data, const AntecedentSet& set,
                           double lambda, Metric metric) {
    const std::size_t m = data.num_samples;
    BitVector not_captured(m, true);
    std::size_t misclassified = 0;
    for (const auto& rule : prefix) {
        BitVector fired = set[rule.antecedent].capture;
        fired &= not_captured;
        const std::size_t pos = BitVector::count_and(fired, data.labels);
        misclassified += rule.prediction ? fired.count() - pos : pos;
        not_captured.and_not_assign(fired);
    }
    const std::size_t unc_pos = BitVector::count_and(not_captured, data.labels);
    const std::size_t unc_neg = not_captured.count() - unc_pos;

    PrefixEval eval;
    eval.completed.rules = prefix;
    eval.completed.default_prediction = unc_pos > unc_neg; // tie -> 0
    eval.bound = lower_bound_value(misclassified, m, lambda, prefix.size());
    eval.error = error_rate(eval.completed, data, set);
    eval.objective = eval.error + lambda * static_cast<double>(prefix.size());
    eval.unfairness = unfairness_of(eval.completed, data, set, metric);
    return eval;
}

SearchResult search(const BinaryDataset& data, const AntecedentSet& set,
                    const SearchConfig& config,
                    const std::optional<RuleList>& initial) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(clock::now() - start).count();
    };

    if (config.epsilon < 0.0 || config.epsilon > 1.0)
        throw InputError("epsilon must lie in [0,1]");
    if (config.lambda < 0.0) throw InputError("lambda must be nonnegative");
    if (config.max_nodes < 1) throw InputError("max-nodes must be at least 1");
    for (const auto& a : set.items)
        if (a.capture.size() != data.num_samples)
            throw InputError("antecedent captures sized for a different dataset");

    const std::size_t m = data.num_samples;
    const double slack = 1.0 - config.epsilon;
    const std::size_t total_pos = data.labels.count();

    SearchResult result;
    result.objective = kInf;

    // r0: the supplied incumbent, else the empty list with majority default.
    RuleList r0 = initial ? *initial : majority_default_list();
    if (!initial) {
        r0.default_prediction = total_pos > m - total_pos; // tie -> 0
    }
    {
        const double u0 = unfairness_of(r0, data, set, config.metric);
        const double err0 = error_rate(r0, data, set);
        if (initial && u0 > slack)
            throw InputError("initial model violates the fairness constraint");
        if (u0 <= slack) {
            result.best = r0;
            result.objective =
                err0 + config.lambda * static_cast<double>(r0.length());
            result.train_error = err0;
            result.train_unfairness = u0;
        }
    }
    double best_objective = result.objective;

    std::vector<Node> nodes;
    nodes.reserve(std::min<std::size_t>(config.max_nodes, 1u << 20));
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapAfter> queue;
    std::uint64_t next_seq = 0;

    auto push_node = [&](Node node) {
        const std::uint32_t idx = static_cast<std::uint32_t>(nodes.size());
        const QueueKey key = priority_key(
            config.strategy, node.depth, node.bound, node.objective,
            node.captured, m, config.bfs_low_objective_first);
        nodes.push_back(node);
        queue.push({key.primary, key.secondary, next_seq++, idx});
        ++result.inserted;
    };

    {
        Node root;
        root.parent = kNoParent;
        root.depth = 0;
        root.captured = 0;
        root.misclassified = 0;
        root.default_prediction = total_pos > m - total_pos ? 1 : 0;
        const std::size_t def_err =
            root.default_prediction ? m - total_pos : total_pos;
        root.bound = lower_bound_value(0, m, config.lambda, 0);
        root.objective = lower_bound_value(def_err, m, config.lambda, 0);
        push_node(root);
    }

    // Optional permutation dominance: per antecedent-id set, the lowest
    // misclassification count seen. Only sound when the fairness constraint
    // cannot bind.
    std::map<std::vector<std::uint32_t>, std::uint32_t> best_permutation;

    std::uint32_t best_node = kNoParent;
    bool truncated_by_nodes = false;
    bool truncated_by_time = false;
    std::vector<Rule> rules;
    std::vector<std::uint32_t> used;

    while (!queue.empty()) {
        if (config.time_limit_s && (result.explored & 0xFF) == 0 &&
            elapsed() > *config.time_limit_s) {
            truncated_by_time = true;
            break;
        }

        const HeapEntry top = queue.top();
        queue.pop();
        const Node node = nodes[top.node];
        if (!(node.bound < best_objective)) continue; // stale: cannot improve

        ++result.explored;
        if (config.progress_interval != 0 && config.on_progress &&
            result.explored % config.progress_interval == 0) {
            SearchProgress progress;
            progress.explored = result.explored;
            progress.inserted = result.inserted;
            progress.queue_size = queue.size();
            progress.incumbent_objective = best_objective;
            progress.elapsed_s = elapsed();
            config.on_progress(progress);
        }

        // Rebuild the prefix's uncaptured set and predictions from the chain.
        collect_prefix(nodes, top.node, rules);
        used.clear();
        for (const auto& rule : rules) used.push_back(rule.antecedent);

        BitVector not_captured(m, true);
        BitVector predictions(m);
        for (const auto& rule : rules) {
            BitVector fired = set[rule.antecedent].capture;
            fired &= not_captured;
            if (rule.prediction) predictions |= fired;
            not_captured.and_not_assign(fired);
        }
        if (node.default_prediction) predictions |= not_captured;

        // Incumbent test (Algorithm 1's acceptance: objective strictly better
        // AND constraint satisfied).
        if (node.objective < best_objective) {
            const double u =
                unfairness(confusion(predictions, data), config.metric);
            if (u <= slack) {
                const std::size_t wrong =
                    BitVector::count_and_not(predictions, data.labels) +
                    BitVector::count_and_not(data.labels, predictions);
                best_objective = node.objective;
                best_node = top.node;
                result.objective = node.objective;
                result.train_error =
                    static_cast<double>(wrong) / static_cast<double>(m);
                result.train_unfairness = u;
                if (top.node == 0) { // root re-derives r0
                    result.best = RuleList{};
                    result.best->default_prediction = node.default_prediction != 0;
                }
            }
        }

        if (config.max_length && node.depth >= *config.max_length) continue;

        const std::size_t unc_pos =
            BitVector::count_and(not_captured, data.labels);
        const std::size_t unc_total = m - node.captured;
        const std::size_t unc_neg = unc_total - unc_pos;

        bool out_of_nodes = false;
        for (std::uint32_t a = 0;
             a < set.size() && !out_of_nodes; ++a) {
            if (std::find(used.begin(), used.end(), a) != used.end()) continue;
            const std::size_t n_new =
                BitVector::count_and(set[a].capture, not_captured);
            if (n_new == 0 && config.min_capture_pruning) continue;
            const std::size_t pos_new =
                BitVector::count_and3(set[a].capture, not_captured, data.labels);
            const std::size_t neg_new = n_new - pos_new;

            const std::size_t child_captured = node.captured + n_new;
            const std::size_t child_unc_pos = unc_pos - pos_new;
            const std::size_t child_unc_neg = unc_neg - neg_new;
            const bool child_default = child_unc_pos > child_unc_neg; // tie -> 0
            const std::size_t default_errors =
                child_default ? child_unc_neg : child_unc_pos;
            const std::size_t child_depth = node.depth + 1u;

            for (const bool sign : {false, true}) {
                const std::size_t misclassified =
                    node.misclassified + (sign ? neg_new : pos_new);
                const double bound =
                    lower_bound_value(misclassified, m, config.lambda, child_depth);
                const double objective =
                    lower_bound_value(misclassified + default_errors, m,
                                      config.lambda, child_depth);
                if (!(bound < best_objective)) {
                    ++result.pruned;
                    continue;
                }
                // Lookahead: a child worth queuing must either admit an
                // improving extension (costing at least one more lambda) or
                // improve the incumbent itself.
                if (config.lookahead_pruning &&
                    !(bound + config.lambda <= best_objective) &&
                    !(objective < best_objective)) {
                    ++result.pruned;
                    continue;
                }
                if (config.permutation_pruning) {
                    std::vector<std::uint32_t> ids = used;
                    ids.push_back(a);
                    std::sort(ids.begin(), ids.end());
                    const auto it = best_permutation.find(ids);
                    if (it != best_permutation.end() &&
                        it->second <= misclassified) {
                        ++result.pruned;
                        continue;
                    }
                    if (it == best_permutation.end())
                        best_permutation.emplace(std::move(ids),
                                                 static_cast<std::uint32_t>(misclassified));
                    else
                        it->second = static_cast<std::uint32_t>(misclassified);
                }
                if (result.inserted >= config.max_nodes) {
                    truncated_by_nodes = true;
                    out_of_nodes = true;
                    break;
                }
                Node child;
                child.parent = top.node;
                child.antecedent = a;
                child.captured = static_cast<std::uint32_t>(child_captured);
                child.misclassified = static_cast<std::uint32_t>(misclassified);
                child.bound = bound;
                child.objective = objective;
                child.depth = static_cast<std::uint16_t>(child_depth);
                child.prediction = sign ? 1 : 0;
                child.default_prediction = child_default ? 1 : 0;
                push_node(child);
            }
        }
        if (out_of_nodes) break;
    }

    if (best_node != kNoParent && best_node != 0) {
        RuleList best;
        collect_prefix(nodes, best_node, best.rules);
        best.default_prediction = nodes[best_node].default_prediction != 0;
        result.best = std::move(best);
    }

    if (truncated_by_time)
        result.status = SearchStatus::TimeLimit;
    else if (truncated_by_nodes)
        result.status = SearchStatus::NodeCap;
    else if (!result.best)
        result.status = SearchStatus::Infeasible;
    else
        result.status = SearchStatus::Optimal;

    result.wall_time_s = elapsed();
    return result;
}

} // namespace fairlist
