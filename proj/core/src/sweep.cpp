#include "fairlist/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "fairlist/errors.hpp"
#include "fairlist/table.hpp"

namespace fairlist {
namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct FoldData {
    BinaryDataset train, test;
    AntecedentSet train_set, test_set;
};

} // namespace

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out;
    if (count == 0) return out;
    if (count == 1) return {lo};
    out.reserve(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i + 1 < count; ++i)
        out.push_back(lo + step * static_cast<double>(i));
    out.push_back(hi); // exact endpoint, no accumulated rounding
    return out;
}

std::vector<std::size_t> kfold_assignment(std::size_t num_samples,
                                          std::size_t folds,
                                          std::uint64_t seed) {
    if (folds < 2) throw InputError("folds must be at least 2");
    if (folds > num_samples)
        throw InputError("folds exceed the number of samples");

    std::vector<std::size_t> perm(num_samples);
    std::iota(perm.begin(), perm.end(), 0);

    // Hand-rolled Fisher-Yates over raw engine draws (std::shuffle's draw
    // pattern is implementation-defined; this keeps assignments identical
    // across standard libraries).
    std::mt19937_64 rng(seed);
    for (std::size_t i = num_samples - 1; i > 0; --i) {
        const std::uint64_t bound = i + 1;
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t draw;
        do {
            draw = rng();
        } while (draw >= limit);
        std::swap(perm[i], perm[draw % bound]);
    }

    std::vector<std::size_t> fold_of(num_samples);
    const std::size_t base = num_samples / folds;
    const std::size_t extra = num_samples % folds;
    std::size_t pos = 0;
    for (std::size_t f = 0; f < folds; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        for (std::size_t j = 0; j < size; ++j) fold_of[perm[pos++]] = f;
    }
    return fold_of;
}

SweepConfig SweepConfig::defaults() {
    SweepConfig config;
    config.epsilon_grid = linspace(0.0, 1.0, 60);
    config.strategies = {Strategy::Bfs, Strategy::BfsObjAware, Strategy::Curious,
                         Strategy::LowerBound};
    return config;
}

SweepOutcome sweep(const BinaryDataset& data, const AntecedentSet& set,
                   const SweepConfig& config) {
    if (config.epsilon_grid.empty()) throw InputError("sweep: empty epsilon grid");
    for (std::size_t i = 0; i < config.epsilon_grid.size(); ++i) {
        const double e = config.epsilon_grid[i];
        if (e < 0.0 || e > 1.0)
            throw InputError("sweep: epsilon grid values must lie in [0,1]");
        if (i > 0 && !(config.epsilon_grid[i - 1] < e))
            throw InputError("sweep: epsilon grid must be strictly increasing");
    }
    if (config.strategies.empty()) throw InputError("sweep: no strategies");

    const auto fold_of =
        kfold_assignment(data.num_samples, config.folds, config.seed);

    std::vector<FoldData> folds(config.folds);
    for (std::size_t f = 0; f < config.folds; ++f) {
        std::vector<std::size_t> train_rows, test_rows;
        for (std::size_t i = 0; i < data.num_samples; ++i)
            (fold_of[i] == f ? test_rows : train_rows).push_back(i);
        folds[f].train = subset(data, train_rows);
        folds[f].test = subset(data, test_rows);
        folds[f].train_set = subset_antecedents(set, folds[f].train, train_rows);
        folds[f].test_set = subset_antecedents(set, folds[f].test, test_rows);
    }

    const std::size_t num_strategies = config.strategies.size();
    const std::size_t tasks =
        config.epsilon_grid.size() * num_strategies * config.folds;
    std::vector<RunRecord> runs(tasks);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (std::size_t t = next.fetch_add(1); t < tasks;
                 t = next.fetch_add(1)) {
                const std::size_t f = t % config.folds;
                const std::size_t s = (t / config.folds) % num_strategies;
                const std::size_t e = t / (config.folds * num_strategies);

                SearchConfig sc = config.base;
                sc.epsilon = config.epsilon_grid[e];
                sc.metric = config.metric;
                sc.strategy = config.strategies[s];
                sc.on_progress = nullptr; // per-run progress is off inside sweeps
                sc.progress_interval = 0;

                const FoldData& fold = folds[f];
                const SearchResult result = search(fold.train, fold.train_set, sc);

                RunRecord& record = runs[t];
                record.epsilon = sc.epsilon;
                record.strategy = sc.strategy;
                record.fold = f;
                record.nodes_explored = result.explored;
                record.status = result.status;
                if (result.best) {
                    record.model = result.best;
                    record.length = result.best->length();
                    record.train_error = result.train_error;
                    record.train_unfairness = result.train_unfairness;
                    record.test_error =
                        error_rate(*result.best, fold.test, fold.test_set);
                    record.test_unfairness = unfairness_of(
                        *result.best, fold.test, fold.test_set, config.metric);
                } else {
                    const double nan = std::numeric_limits<double>::quiet_NaN();
                    record.train_error = nan;
                    record.train_unfairness = nan;
                    record.test_error = nan;
                    record.test_unfairness = nan;
                }
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    const std::size_t jobs =
        std::clamp<std::size_t>(config.jobs == 0 ? 1 : config.jobs, 1, tasks);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    if (failure) std::rethrow_exception(failure);

    SweepOutcome outcome;
    outcome.runs = std::move(runs);

    for (std::size_t e = 0; e < config.epsilon_grid.size(); ++e) {
        for (std::size_t s = 0; s < num_strategies; ++s) {
            SweepPoint point;
            point.epsilon = config.epsilon_grid[e];
            point.strategy = config.strategies[s];
            std::vector<const RunRecord*> feasible;
            for (std::size_t f = 0; f < config.folds; ++f) {
                const RunRecord& record =
                    outcome.runs[(e * num_strategies + s) * config.folds + f];
                if (record.model) feasible.push_back(&record);
            }
            if (feasible.empty()) continue;
            for (const RunRecord* record : feasible) {
                point.mean_test_error += record->test_error;
                point.mean_test_unfairness += record->test_unfairness;
                point.mean_train_error += record->train_error;
                point.mean_train_unfairness += record->train_unfairness;
                point.mean_length += static_cast<double>(record->length);
            }
            const double n = static_cast<double>(feasible.size());
            point.mean_test_error /= n;
            point.mean_test_unfairness /= n;
            point.mean_train_error /= n;
            point.mean_train_unfairness /= n;
            point.mean_length /= n;
            point.feasible_folds = feasible.size();

            // Representative: the fold model nearest the cell means in
            // (test error, test unfairness); first fold wins ties.
            double best_dist = std::numeric_limits<double>::infinity();
            for (const RunRecord* record : feasible) {
                const double de = record->test_error - point.mean_test_error;
                const double du =
                    record->test_unfairness - point.mean_test_unfairness;
                const double dist = de * de + du * du;
                if (dist < best_dist) {
                    best_dist = dist;
                    point.representative = record->model;
                }
            }
            outcome.points.push_back(std::move(point));
        }
    }
    return outcome;
}

std::vector<std::size_t> pareto_filter(
    const std::vector<std::pair<double, double>>& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].first != points[b].first)
            return points[a].first < points[b].first;
        if (points[a].second != points[b].second)
            return points[a].second < points[b].second;
        return a < b; // exact duplicates: earliest input index first
    });

    std::vector<std::size_t> kept;
    double best_second = std::numeric_limits<double>::infinity();
    for (const std::size_t idx : order) {
        if (points[idx].second < best_second) {
            kept.push_back(idx);
            best_second = points[idx].second;
        }
    }
    std::sort(kept.begin(), kept.end()); // report in input order
    return kept;
}

std::vector<SweepPoint> compute_front(const std::vector<SweepPoint>& points) {
    std::vector<std::pair<double, double>> coords;
    coords.reserve(points.size());
    for (const auto& point : points)
        coords.emplace_back(point.mean_test_error, point.mean_test_unfairness);
    const auto kept = pareto_filter(coords);

    std::vector<SweepPoint> front;
    front.reserve(kept.size());
    for (const std::size_t idx : kept) front.push_back(points[idx]);
    std::sort(front.begin(), front.end(),
              [](const SweepPoint& a, const SweepPoint& b) {
                  if (a.mean_test_error != b.mean_test_error)
                      return a.mean_test_error < b.mean_test_error;
                  return a.epsilon < b.epsilon;
              });
    return front;
}

std::string runs_csv(const std::vector<RunRecord>& runs, Metric metric) {
    std::ostringstream out;
    out << "epsilon,metric,strategy,fold,train_error,test_error,train_unf,"
           "test_unf,length,nodes_explored,status\n";
    for (const auto& record : runs) {
        out << format_value(record.epsilon) << ',' << metric_name(metric) << ','
            << strategy_name(record.strategy) << ',' << record.fold << ','
            << format_value(record.train_error) << ','
            << format_value(record.test_error) << ','
            << format_value(record.train_unfairness) << ','
            << format_value(record.test_unfairness) << ',' << record.length
            << ',' << record.nodes_explored << ',' << status_name(record.status)
            << '\n';
    }
    return out.str();
}

std::string front_csv(const std::vector<SweepPoint>& front,
                      const std::vector<std::string>& model_paths) {
    if (!model_paths.empty() && model_paths.size() != front.size())
        throw InputError("front_csv: model path list size mismatch");
    std::ostringstream out;
    out << "epsilon,strategy,mean_test_error,mean_test_unf,model_path\n";
    for (std::size_t i = 0; i < front.size(); ++i) {
        out << format_value(front[i].epsilon) << ','
            << strategy_name(front[i].strategy) << ','
            << format_value(front[i].mean_test_error) << ','
            << format_value(front[i].mean_test_unfairness) << ','
            << (model_paths.empty() ? "" : csv_escape(model_paths[i])) << '\n';
    }
    return out.str();
}

} // namespace fairlist
