#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "fairlist/antecedents.hpp"
#include "fairlist/dataset.hpp"
#include "fairlist/fairness.hpp"
#include "fairlist/rule_list.hpp"

namespace fairlist {

/// Exploration order of the prefix tree.
enum class Strategy {
    Bfs,         ///< depth, then insertion order
    BfsObjAware, ///< depth, then current objective (worse first)
    Curious,     ///< lower bound per captured fraction
    LowerBound,  ///< plain best-first on the bound
};

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name); ///< throws InputError

enum class SearchStatus {
    Optimal,   ///< queue exhausted: certified best under the constraint
    NodeCap,   ///< node budget hit; best-so-far returned
    TimeLimit, ///< wall-clock budget hit; best-so-far returned
    Infeasible ///< no rule list satisfied the constraint before exhaustion
};

std::string status_name(SearchStatus s);

struct SearchConfig {
    double lambda = 1e-3;        ///< per-rule penalty in the objective
    double epsilon = 0.0;        ///< require unfairness <= 1 - epsilon
    Metric metric = Metric::StatisticalParity;
    Strategy strategy = Strategy::Curious;
    std::size_t max_nodes = 4'000'000; ///< cap on tree nodes ever created
    std::optional<std::size_t> max_length; ///< cap on rules per list
    std::optional<double> time_limit_s;
    bool lookahead_pruning = true;   ///< b + lambda vs incumbent at insertion
    bool min_capture_pruning = true; ///< skip extensions capturing nothing new
    bool permutation_pruning = false; ///< keep only the best permutation of each
                                      ///< antecedent set (unsafe when the fairness
                                      ///< constraint binds; off by default)
    bool bfs_low_objective_first = false; ///< experimental: flip the BfsObjAware
                                          ///< comparator to serve low objectives first
    std::size_t progress_interval = 0; ///< nodes between callbacks; 0 = never
    std::function<void(const struct SearchProgress&)> on_progress;
};

struct SearchProgress {
    std::size_t explored = 0;
    std::size_t inserted = 0;
    std::size_t queue_size = 0;
    double incumbent_objective = 0.0;
    double elapsed_s = 0.0;
};

struct SearchResult {
    std::optional<RuleList> best;   ///< absent when status == Infeasible
    double objective = 0.0;         ///< +inf when infeasible
    double train_error = 0.0;
    double train_unfairness = 0.0;
    SearchStatus status = SearchStatus::Optimal;
    std::size_t explored = 0;       ///< nodes popped and evaluated
    std::size_t inserted = 0;       ///< nodes ever pushed (root included)
    std::size_t pruned = 0;         ///< insertions rejected by a bound
    double wall_time_s = 0.0;
};

/// Branch-and-bound over prefixes of signed rules. Every queue node is a
/// prefix; its default prediction is always the majority label of the
/// uncaptured samples (ties -> 0). A prefix becomes the incumbent only if its
/// objective beats the incumbent AND its unfairness obeys the constraint;
/// pruning uses only the constraint-free lower bound, so the returned model
/// is exact whenever status is Optimal.
///
/// `initial`, when given, seeds the incumbent (it must already satisfy the
/// constraint); otherwise the empty list with the majority default plays that
/// role. When even that is infeasible the search starts with no incumbent.
SearchResult search(const BinaryDataset& data, const AntecedentSet& set,
                    const SearchConfig& config,
                    const std::optional<RuleList>& initial = std::nullopt);

/// error-so-far + lambda * length: the admissible lower bound on any
/// completion of a prefix with `misclassified` captured-and-wrong samples.
double lower_bound_value(std::size_t misclassified, std::size_t num_samples,
                         double lambda, std::size_t length);

/// Independent evaluation of an explicit prefix (default derived as in the
/// search). Used by tests to cross-check node bookkeeping.
struct PrefixEval {
    RuleList completed;     ///< prefix + derived default
    double objective = 0.0;
    double bound = 0.0;
    double error = 0.0;
    double unfairness = 0.0;
};
PrefixEval evaluate_prefix(const std::vector<Rule>& prefix,
                           const BinaryDataset& data, const AntecedentSet& set,
                           double lambda, Metric metric);

/// Priority of a node under a strategy, exposed for unit tests. Lower is
/// served first; ties fall back to insertion order.
struct QueueKey {
    double primary = 0.0;
    double secondary = 0.0;
};
QueueKey priority_key(Strategy s, std::size_t depth, double bound,
                      double objective, std::size_t captured,
                      std::size_t num_samples,
                      bool bfs_low_objective_first = false);

} // namespace fairlist
