#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairlist/antecedents.hpp"
#include "fairlist/dataset.hpp"
#include "fairlist/rule_list.hpp"
#include "fairlist/search.hpp"

namespace fairlist {

/// Evenly spaced values from lo to hi inclusive (count >= 2), or {lo} when
/// count == 1.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Deterministic k-fold assignment: a seeded shuffle of sample indices split
/// into k contiguous blocks (the first M mod k folds get the extra sample).
/// Returns fold id per sample.
std::vector<std::size_t> kfold_assignment(std::size_t num_samples,
                                          std::size_t folds,
                                          std::uint64_t seed);

struct SweepConfig {
    std::vector<double> epsilon_grid;           ///< default: 60 values over [0,1]
    Metric metric = Metric::StatisticalParity;
    std::vector<Strategy> strategies;           ///< default: all four
    std::size_t folds = 5;
    std::uint64_t seed = 42;
    SearchConfig base;                          ///< lambda/budgets shared by all runs
    std::size_t jobs = 1;                       ///< worker threads

    static SweepConfig defaults();
};

/// One (epsilon, strategy, fold) training run.
struct RunRecord {
    double epsilon = 0.0;
    Strategy strategy = Strategy::Curious;
    std::size_t fold = 0;
    double train_error = 0.0, test_error = 0.0;
    double train_unfairness = 0.0, test_unfairness = 0.0;
    std::size_t length = 0;
    std::size_t nodes_explored = 0;
    SearchStatus status = SearchStatus::Optimal;
    std::optional<RuleList> model; ///< antecedent ids index the full mined set
};

/// Fold-averaged test performance of one (epsilon, strategy) cell, with the
/// fold model closest to the cell means kept as representative.
struct SweepPoint {
    double epsilon = 0.0;
    Strategy strategy = Strategy::Curious;
    double mean_test_error = 0.0;
    double mean_test_unfairness = 0.0;
    double mean_train_error = 0.0;
    double mean_train_unfairness = 0.0;
    double mean_length = 0.0;
    std::size_t feasible_folds = 0;
    std::optional<RuleList> representative;
};

struct SweepOutcome {
    std::vector<RunRecord> runs;    ///< grid-major, strategy, then fold order
    std::vector<SweepPoint> points; ///< one per (epsilon, strategy) with >=1 feasible fold
};

/// Cross-validated constraint sweep over the epsilon grid, one search per
/// (epsilon, strategy, fold). Deterministic for a fixed config regardless of
/// jobs.
SweepOutcome sweep(const BinaryDataset& data, const AntecedentSet& set,
                   const SweepConfig& config);

/// Indices of non-dominated points, minimizing (error, unfairness):
/// kept points form a strictly improving staircase in unfairness as error
/// grows. Exact duplicates keep the earliest index.
std::vector<std::size_t> pareto_filter(const std::vector<std::pair<double, double>>& points);

/// The Pareto front over every strategy's sweep points.
std::vector<SweepPoint> compute_front(const std::vector<SweepPoint>& points);

/// CSV renderings (fixed column order, %.12g values).
std::string runs_csv(const std::vector<RunRecord>& runs, Metric metric);
std::string front_csv(const std::vector<SweepPoint>& front,
                      const std::vector<std::string>& model_paths);

} // namespace fairlist
