#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairlist/antecedents.hpp"
#include "fairlist/dataset.hpp"
#include "fairlist/errors.hpp"
#include "fairlist/fairness.hpp"
#include "fairlist/mdlp.hpp"
#include "fairlist/rule_list.hpp"
#include "fairlist/search.hpp"
#include "fairlist/sweep.hpp"
#include "fairlist/table.hpp"

#include "manifest.hpp"

namespace fs = std::filesystem;
using namespace fairlist;
using fairlist::cli::RunManifest;

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, ',')) {
        const auto begin = current.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = current.find_last_not_of(" \t");
        parts.push_back(current.substr(begin, end - begin + 1));
    }
    return parts;
}

std::string join_list(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += ",";
        out += part;
    }
    return out;
}

/// "60" -> 60 evenly spaced points over [0,1]; "0,0.25,0.9" -> those values.
std::vector<double> parse_grid(const std::string& text) {
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        const unsigned long count = std::stoul(text);
        if (count == 0) throw InputError("grid point count must be positive");
        return linspace(0.0, 1.0, count);
    }
    std::vector<double> grid;
    for (const auto& part : split_list(text)) {
        char* end = nullptr;
        const double value = std::strtod(part.c_str(), &end);
        if (end == part.c_str() || *end != '\0' || !std::isfinite(value)) {
            throw InputError("bad grid value: " + part);
        }
        grid.push_back(value);
    }
    if (grid.empty()) throw InputError("empty epsilon grid");
    return grid;
}

// Search knobs shared by train and sweep. Sentinels: max_length 0 and
// time_limit < 0 mean "no cap".
struct SearchFlags {
    double lambda = 1e-3;
    std::size_t max_nodes = 4'000'000;
    std::size_t max_length = 0;
    double time_limit = -1.0;
    bool no_lookahead = false;
    bool no_min_capture = false;
    bool permutation = false;
    bool bfs_low_obj = false;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
    cmd->add_option("--lambda", f.lambda, "Per-rule penalty added to the error")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber)
        ->envname("FAIRLIST_LAMBDA");
    cmd->add_option("--max-nodes", f.max_nodes,
                    "Cap on prefix-tree nodes created per search")
        ->capture_default_str()
        ->envname("FAIRLIST_MAX_NODES");
    cmd->add_option("--max-length", f.max_length,
                    "Cap on rules per list (0 = unlimited)")
        ->envname("FAIRLIST_MAX_LENGTH");
    cmd->add_option("--time-limit", f.time_limit,
                    "Wall-clock budget per search, seconds (omit for none)")
        ->envname("FAIRLIST_TIME_LIMIT");
    cmd->add_flag("--no-lookahead", f.no_lookahead,
                  "Disable the one-step lookahead bound")
        ->envname("FAIRLIST_NO_LOOKAHEAD");
    cmd->add_flag("--no-min-capture", f.no_min_capture,
                  "Keep extensions that capture no new samples")
        ->envname("FAIRLIST_NO_MIN_CAPTURE");
    cmd->add_flag("--permutation-pruning", f.permutation,
                  "Keep only the best-seen permutation of each antecedent set "
                  "(unsafe when the fairness constraint binds)")
        ->envname("FAIRLIST_PERMUTATION_PRUNING");
    cmd->add_flag("--bfs-low-obj-first", f.bfs_low_obj, "")
        ->group("")  // experimental; hidden from --help
        ->envname("FAIRLIST_BFS_LOW_OBJ_FIRST");
}

SearchConfig to_search_config(const SearchFlags& f) {
    SearchConfig cfg;
    cfg.lambda = f.lambda;
    cfg.max_nodes = f.max_nodes;
    if (f.max_length > 0) cfg.max_length = f.max_length;
    if (f.time_limit >= 0.0) cfg.time_limit_s = f.time_limit;
    cfg.lookahead_pruning = !f.no_lookahead;
    cfg.min_capture_pruning = !f.no_min_capture;
    cfg.permutation_pruning = f.permutation;
    cfg.bfs_low_objective_first = f.bfs_low_obj;
    return cfg;
}

void add_search_flag_config(RunManifest& manifest, const SearchFlags& f) {
    manifest.add_config("lambda", f.lambda);
    manifest.add_config("max_nodes", static_cast<std::int64_t>(f.max_nodes));
    manifest.add_config("max_length", static_cast<std::int64_t>(f.max_length));
    manifest.add_config("time_limit", f.time_limit);
    manifest.add_config("lookahead_pruning", !f.no_lookahead);
    manifest.add_config("min_capture_pruning", !f.no_min_capture);
    manifest.add_config("permutation_pruning", f.permutation);
    manifest.add_config("bfs_low_objective_first", f.bfs_low_obj);
}

const char* kDatasetFiles[] = {"features.txt", "labels.txt", "group.txt"};

BinaryDataset load_dataset_dir(const std::string& dir, AntecedentSet* set) {
    BinaryDataset data = read_dataset(dir);
    if (set) *set = read_antecedents_csv(dir + "/antecedents.csv", data);
    return data;
}

void add_dataset_inputs(RunManifest& manifest, const std::string& dir,
                        bool with_antecedents) {
    for (const char* name : kDatasetFiles) {
        manifest.add_input(dir + "/" + std::string(name));
    }
    if (with_antecedents) manifest.add_input(dir + "/antecedents.csv");
}

void ensure_parent_dir(const std::string& path) {
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
}

ParsedModel load_model(const std::string& path) {
    return from_record(read_text_file(path));
}

// ---------------------------------------------------------------- mine ----

struct MineArgs {
    std::string csv;
    std::string label;
    std::string sensitive;
    std::string out;
    std::string numeric;
    bool numeric_given = false;
    double min_support = 0.01;
    double mdlp_fraction = 1.0 / 3.0;
    bool no_negations = false;
    std::size_t max_arity = 2;
};

int cmd_mine(const MineArgs& a, int argc, char** argv) {
    Timer timer;
    RawTable table = load_csv(a.csv, a.label, a.sensitive);
    const std::vector<std::string> numeric =
        a.numeric_given ? split_list(a.numeric) : detect_numeric_columns(table);
    MdlpResult disc = mdlp_discretize(table, numeric, a.mdlp_fraction);
    BinaryDataset data = binarize(disc.table);

    MiningConfig mining;
    mining.min_support = a.min_support;
    mining.include_negations = !a.no_negations;
    mining.max_clause_arity = a.max_arity;
    AntecedentSet set = mine_antecedents(data, mining);
    if (set.size() == 0) {
        std::fprintf(stderr,
                     "warning: no antecedents mined; only constant "
                     "classifiers can be trained from this dataset\n");
    }

    fs::create_directories(a.out);
    write_dataset(data, a.out);
    write_antecedents_csv(set, a.out + "/antecedents.csv");

    nlohmann::ordered_json splits;
    splits["label"] = a.label;
    splits["sensitive"] = a.sensitive;
    splits["rows"] = table.num_rows();
    splits["dropped_rows"] = table.dropped_rows;
    nlohmann::ordered_json thresholds = nlohmann::ordered_json::object();
    for (const auto& [column, cuts] : disc.thresholds) thresholds[column] = cuts;
    splits["thresholds"] = std::move(thresholds);
    splits["passed_through"] = disc.passed_through;
    write_text_file(a.out + "/splits.json", splits.dump(2) + "\n");

    RunManifest manifest("mine", argc, argv);
    manifest.add_config("csv", a.csv);
    manifest.add_config("label", a.label);
    manifest.add_config("sensitive", a.sensitive);
    manifest.add_config("min_support", a.min_support);
    manifest.add_config("mdlp_fraction", a.mdlp_fraction);
    manifest.add_config("negations", !a.no_negations);
    manifest.add_config("max_arity", static_cast<std::int64_t>(a.max_arity));
    manifest.add_config("numeric", a.numeric_given ? a.numeric : std::string("auto"));
    manifest.add_config("out", a.out);
    manifest.add_input(a.csv);
    for (const char* name : kDatasetFiles) {
        manifest.add_output(a.out + "/" + std::string(name));
    }
    manifest.add_output(a.out + "/antecedents.csv");
    manifest.add_output(a.out + "/splits.json");
    manifest.set_wall_time(timer.elapsed());
    manifest.write(a.out + "/manifest.json");

    std::printf("mined %s: samples=%zu dropped=%zu features=%zu "
                "antecedents=%zu split_columns=%zu\n",
                a.out.c_str(), data.num_samples, table.dropped_rows,
                data.num_features(), set.size(), disc.thresholds.size());
    return 0;
}

// --------------------------------------------------------------- train ----

struct TrainArgs {
    std::string dataset;
    std::string out;
    std::string metric = "sp";
    std::string strategy = "curious";
    std::string initial;
    double epsilon = 0.0;
    SearchFlags search;
};

nlohmann::ordered_json result_record(const SearchResult& result,
                                     const SearchConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["status"] = status_name(result.status);
    doc["feasible"] = result.best.has_value();
    if (std::isfinite(result.objective)) {
        doc["objective"] = result.objective;
        doc["train_error"] = result.train_error;
        doc["train_unfairness"] = result.train_unfairness;
        doc["length"] = result.best ? result.best->length() : 0;
    }
    doc["explored"] = result.explored;
    doc["inserted"] = result.inserted;
    doc["pruned"] = result.pruned;
    doc["wall_time_s"] = result.wall_time_s;
    doc["epsilon"] = cfg.epsilon;
    doc["metric"] = metric_name(cfg.metric);
    doc["lambda"] = cfg.lambda;
    doc["strategy"] = strategy_name(cfg.strategy);
    return doc;
}

int cmd_train(const TrainArgs& a, int argc, char** argv) {
    Timer timer;
    AntecedentSet set;
    BinaryDataset data = load_dataset_dir(a.dataset, &set);

    SearchConfig cfg = to_search_config(a.search);
    cfg.epsilon = a.epsilon;
    cfg.metric = parse_metric(a.metric);
    cfg.strategy = parse_strategy(a.strategy);

    std::optional<RuleList> initial;
    if (!a.initial.empty()) initial = resolve(load_model(a.initial), set);

    SearchResult result = search(data, set, cfg, initial);

    RuleList baseline;  // what the search started from
    if (initial) {
        baseline = *initial;
    } else {
        baseline.default_prediction = 2 * data.positive_count() > data.num_samples;
    }

    ensure_parent_dir(a.out);
    RunManifest manifest("train", argc, argv);
    manifest.add_config("dataset", a.dataset);
    manifest.add_config("epsilon", a.epsilon);
    manifest.add_config("metric", a.metric);
    manifest.add_config("strategy", a.strategy);
    manifest.add_config("initial", a.initial);
    manifest.add_config("out", a.out);
    add_search_flag_config(manifest, a.search);
    add_dataset_inputs(manifest, a.dataset, true);
    if (!a.initial.empty()) manifest.add_input(a.initial);

    if (result.best) {
        RuleList model = *result.best;
        model.provenance = {
            {"command", "train"},
            {"dataset", a.dataset},
            {"epsilon", std::to_string(a.epsilon)},
            {"metric", metric_name(cfg.metric)},
            {"lambda", std::to_string(cfg.lambda)},
            {"strategy", strategy_name(cfg.strategy)},
            {"status", status_name(result.status)},
        };
        write_text_file(a.out + ".txt", to_text(model, set));
        write_text_file(a.out + ".json", to_record(model, set));
        manifest.add_output(a.out + ".txt");
        manifest.add_output(a.out + ".json");
        std::fputs(to_text(model, set).c_str(), stdout);
        std::printf("status=%s objective=%.6g train_error=%.6g "
                    "train_unfairness=%.6g length=%zu explored=%zu\n",
                    status_name(result.status).c_str(), result.objective,
                    result.train_error, result.train_unfairness,
                    result.best->length(), result.explored);
    } else {
        std::printf("status=%s explored=%zu — no rule list satisfies the "
                    "constraint; nothing written\n",
                    status_name(result.status).c_str(), result.explored);
    }

    write_text_file(a.out + ".result.json",
                    result_record(result, cfg).dump(2) + "\n");
    manifest.add_output(a.out + ".result.json");
    manifest.set_wall_time(timer.elapsed());
    manifest.write(a.out + ".manifest.json");

    const bool truncated = result.status == SearchStatus::NodeCap ||
                           result.status == SearchStatus::TimeLimit;
    const bool improved = result.best.has_value() && !(*result.best == baseline);
    return truncated && !improved ? 3 : 0;
}

// --------------------------------------------------------------- sweep ----

struct SweepArgs {
    std::string dataset;
    std::string out_dir;
    std::string metric = "sp";
    std::string grid = "60";
    std::string strategies = "bfs,bfs-obj,curious,lower-bound";
    std::size_t folds = 5;
    std::uint64_t seed = 42;
    std::size_t jobs = 1;
    SearchFlags search;
};

int cmd_sweep(const SweepArgs& a, int argc, char** argv) {
    Timer timer;
    AntecedentSet set;
    BinaryDataset data = load_dataset_dir(a.dataset, &set);

    SweepConfig cfg;
    cfg.epsilon_grid = parse_grid(a.grid);
    cfg.metric = parse_metric(a.metric);
    for (const auto& name : split_list(a.strategies)) {
        cfg.strategies.push_back(parse_strategy(name));
    }
    cfg.folds = a.folds;
    cfg.seed = a.seed;
    cfg.jobs = a.jobs;
    cfg.base = to_search_config(a.search);

    SweepOutcome outcome = sweep(data, set, cfg);
    const std::vector<SweepPoint> front = compute_front(outcome.points);

    fs::create_directories(a.out_dir + "/models");
    RunManifest manifest("sweep", argc, argv);
    manifest.add_config("dataset", a.dataset);
    manifest.add_config("metric", a.metric);
    manifest.add_config("grid", a.grid);
    manifest.add_config("strategies", a.strategies);
    manifest.add_config("folds", static_cast<std::int64_t>(a.folds));
    manifest.add_config("seed", static_cast<std::int64_t>(a.seed));
    manifest.add_config("jobs", static_cast<std::int64_t>(a.jobs));
    manifest.add_config("out_dir", a.out_dir);
    add_search_flag_config(manifest, a.search);
    add_dataset_inputs(manifest, a.dataset, true);

    write_text_file(a.out_dir + "/runs.csv", runs_csv(outcome.runs, cfg.metric));
    manifest.add_output(a.out_dir + "/runs.csv");

    std::vector<std::string> model_paths;
    model_paths.reserve(front.size());
    for (std::size_t i = 0; i < front.size(); ++i) {
        char rel[64];
        std::snprintf(rel, sizeof rel, "models/front_%03zu", i);
        RuleList model = *front[i].representative;
        char spelled[64];
        std::snprintf(spelled, sizeof spelled, "%.12g", front[i].epsilon);
        model.provenance = {
            {"command", "sweep"},
            {"dataset", a.dataset},
            {"epsilon", spelled},
            {"metric", metric_name(cfg.metric)},
            {"strategy", strategy_name(front[i].strategy)},
        };
        const std::string base = a.out_dir + "/" + rel;
        write_text_file(base + ".json", to_record(model, set));
        write_text_file(base + ".txt", to_text(model, set));
        manifest.add_output(base + ".json");
        manifest.add_output(base + ".txt");
        model_paths.push_back(std::string(rel) + ".json");
    }

    write_text_file(a.out_dir + "/front.csv", front_csv(front, model_paths));
    manifest.add_output(a.out_dir + "/front.csv");
    manifest.set_wall_time(timer.elapsed());
    manifest.write(a.out_dir + "/manifest.json");

    std::size_t feasible = 0;
    for (const auto& run : outcome.runs) feasible += run.model.has_value();
    std::printf("swept %zu runs (%zu feasible) over %zu epsilon values; "
                "%zu sweep points, front size %zu\n",
                outcome.runs.size(), feasible, cfg.epsilon_grid.size(),
                outcome.points.size(), front.size());
    return 0;
}

// --------------------------------------------------------------- audit ----

struct AuditArgs {
    std::string model;
    std::string dataset;
    std::string metric = "all";
    bool csv = false;
};

int cmd_audit(const AuditArgs& a) {
    BinaryDataset data = read_dataset(a.dataset);
    auto [model, set] = bind(load_model(a.model), data);

    std::vector<Metric> metrics;
    if (a.metric == "all") {
        metrics.assign(kAllMetrics.begin(), kAllMetrics.end());
    } else {
        for (const auto& name : split_list(a.metric)) {
            metrics.push_back(parse_metric(name));
        }
    }

    const AuditReport report = audit(model, data, set, metrics);
    for (const auto& entry : report.entries) {
        if (entry.degenerate) {
            std::fprintf(stderr,
                         "warning: %s: a per-group rate has an empty "
                         "denominator; that term counts as 0\n",
                         metric_name(entry.metric).c_str());
        }
    }
    std::fputs((a.csv ? audit_csv(report) : audit_table(report)).c_str(),
               stdout);
    return 0;
}

// ------------------------------------------------------------- predict ----

struct PredictArgs {
    std::string model;
    std::string dataset;
    std::string out = "-";
};

int cmd_predict(const PredictArgs& a, int argc, char** argv) {
    Timer timer;
    BinaryDataset data = read_dataset(a.dataset);
    auto [model, set] = bind(load_model(a.model), data);
    const PredictionVector pv = predict(model, data, set);

    std::string csv = "index,prediction,rule\n";
    char line[64];
    for (std::size_t i = 0; i < data.num_samples; ++i) {
        std::snprintf(line, sizeof line, "%zu,%d,%u\n", i,
                      pv.predictions.test(i) ? 1 : 0, pv.firing_rule[i]);
        csv += line;
    }

    if (a.out == "-") {
        std::fputs(csv.c_str(), stdout);
        return 0;
    }
    ensure_parent_dir(a.out);
    write_text_file(a.out, csv);

    RunManifest manifest("predict", argc, argv);
    manifest.add_config("model", a.model);
    manifest.add_config("dataset", a.dataset);
    manifest.add_config("out", a.out);
    manifest.add_input(a.model);
    for (const char* name : kDatasetFiles) {
        manifest.add_input(a.dataset + "/" + std::string(name));
    }
    manifest.add_output(a.out);
    manifest.set_wall_time(timer.elapsed());
    manifest.write(a.out + ".manifest.json");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rule lists under hard statistical-fairness constraints"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fairlist::cli::kVersion);

    MineArgs mine_args;
    CLI::App* mine = app.add_subcommand(
        "mine", "Discretize a CSV, binarize it, and mine candidate rule bodies");
    mine->add_option("csv", mine_args.csv, "Input CSV with a header row")
        ->required();
    mine->add_option("--label", mine_args.label, "Binary label column")
        ->required()
        ->envname("FAIRLIST_LABEL");
    mine->add_option("--sensitive", mine_args.sensitive,
                     "Binary protected-attribute column")
        ->required()
        ->envname("FAIRLIST_SENSITIVE");
    mine->add_option("--min-support", mine_args.min_support,
                     "Minimum joint-support fraction for paired rule bodies")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0))
        ->envname("FAIRLIST_MIN_SUPPORT");
    mine->add_option("--mdlp-fraction", mine_args.mdlp_fraction,
                     "Fraction of rows used to learn split thresholds "
                     "(<=0 learns on all rows)")
        ->capture_default_str()
        ->envname("FAIRLIST_MDLP_FRACTION");
    mine->add_option("--out", mine_args.out, "Output dataset directory")
        ->required()
        ->envname("FAIRLIST_OUT");
    CLI::Option* numeric_opt =
        mine->add_option("--numeric", mine_args.numeric,
                         "Comma-separated numeric columns to discretize "
                         "(default: auto-detect)")
            ->envname("FAIRLIST_NUMERIC");
    mine->add_flag("--no-negations", mine_args.no_negations,
                   "Skip negated single-feature rule bodies")
        ->envname("FAIRLIST_NO_NEGATIONS");
    mine->add_option("--max-arity", mine_args.max_arity,
                     "Largest rule-body size to mine (1 or 2)")
        ->capture_default_str()
        ->check(CLI::Range(1, 2))
        ->envname("FAIRLIST_MAX_ARITY");

    TrainArgs train_args;
    CLI::App* train = app.add_subcommand(
        "train", "Learn one certified rule list under a fairness constraint");
    train->add_option("dataset", train_args.dataset,
                      "Dataset directory produced by mine")
        ->required();
    train->add_option("--epsilon", train_args.epsilon,
                      "Constraint strength: require unfairness <= 1 - epsilon")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0))
        ->envname("FAIRLIST_EPSILON");
    train->add_option("--metric", train_args.metric,
                      "Fairness metric: sp|pp|pe|eopp|eodds|cuae")
        ->capture_default_str()
        ->envname("FAIRLIST_METRIC");
    train->add_option("--strategy", train_args.strategy,
                      "Queue order: bfs|bfs-obj|curious|lower-bound")
        ->capture_default_str()
        ->envname("FAIRLIST_STRATEGY");
    train->add_option("--initial", train_args.initial,
                      "Model JSON used to seed the incumbent")
        ->envname("FAIRLIST_INITIAL");
    train->add_option("--out", train_args.out,
                      "Output path prefix for model/result files")
        ->required()
        ->envname("FAIRLIST_OUT");
    add_search_flags(train, train_args.search);

    SweepArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Cross-validated epsilon sweep producing a Pareto front");
    sweep_cmd->add_option("dataset", sweep_args.dataset,
                          "Dataset directory produced by mine")
        ->required();
    sweep_cmd->add_option("--metric", sweep_args.metric,
                          "Fairness metric: sp|pp|pe|eopp|eodds|cuae")
        ->capture_default_str()
        ->envname("FAIRLIST_METRIC");
    sweep_cmd->add_option("--grid", sweep_args.grid,
                          "Epsilon grid: a point count spread over [0,1], or "
                          "an explicit increasing comma-separated list")
        ->capture_default_str()
        ->envname("FAIRLIST_GRID");
    sweep_cmd->add_option("--folds", sweep_args.folds, "Cross-validation folds")
        ->capture_default_str()
        ->envname("FAIRLIST_FOLDS");
    sweep_cmd->add_option("--seed", sweep_args.seed, "Fold-shuffle seed")
        ->capture_default_str()
        ->envname("FAIRLIST_SEED");
    sweep_cmd->add_option("--strategies", sweep_args.strategies,
                          "Comma-separated queue orders to sweep")
        ->capture_default_str()
        ->envname("FAIRLIST_STRATEGIES");
    sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->envname("FAIRLIST_JOBS");
    sweep_cmd->add_option("--out-dir", sweep_args.out_dir, "Output directory")
        ->required()
        ->envname("FAIRLIST_OUT_DIR");
    add_search_flags(sweep_cmd, sweep_args.search);

    AuditArgs audit_args;
    CLI::App* audit_cmd = app.add_subcommand(
        "audit", "Report accuracy and per-group fairness of a saved model");
    audit_cmd->add_option("model", audit_args.model, "Model JSON path")
        ->required();
    audit_cmd->add_option("dataset", audit_args.dataset,
                          "Dataset directory produced by mine")
        ->required();
    audit_cmd->add_option("--metric", audit_args.metric,
                          "Comma-separated metrics to report (default: all)")
        ->capture_default_str()
        ->envname("FAIRLIST_METRIC");
    audit_cmd->add_flag("--csv", audit_args.csv, "Emit CSV instead of a table")
        ->envname("FAIRLIST_CSV");

    PredictArgs predict_args;
    CLI::App* predict_cmd = app.add_subcommand(
        "predict", "Write per-sample predictions and firing-rule indices");
    predict_cmd->add_option("model", predict_args.model, "Model JSON path")
        ->required();
    predict_cmd->add_option("dataset", predict_args.dataset,
                            "Dataset directory produced by mine")
        ->required();
    predict_cmd->add_option("--out", predict_args.out,
                            "Output CSV path (- for stdout)")
        ->capture_default_str()
        ->envname("FAIRLIST_OUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        mine_args.numeric_given = numeric_opt->count() > 0;
        if (mine->parsed()) return cmd_mine(mine_args, argc, argv);
        if (train->parsed()) return cmd_train(train_args, argc, argv);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, argc, argv);
        if (audit_cmd->parsed()) return cmd_audit(audit_args);
        if (predict_cmd->parsed()) return cmd_predict(predict_args, argc, argv);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 4;
    }
    return 0;
}
