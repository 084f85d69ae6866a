#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ust/experiment.hpp"

namespace {

struct CommonOptions {
    std::string train_path;
    std::string test_path;
    std::string measure = "ued";
    std::string ordering = "simple";
    std::string classifier = "gnb";
    std::size_t k = 100;
    std::size_t min_len = 3;
    std::size_t max_len = 0;  // 0 = m-1
    int cdf_k = 100;
    long contract_seconds = 600;
    double c = 0.0;
    std::uint64_t seed = 0;
    std::string out_path;
};

void add_selection_flags(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--measure", opt.measure, "Dissimilarity: ed|ued|dust-uniform|dust-normal");
    cmd.add_option("--ordering", opt.ordering, "Ordering: simple|stochastic|interval|natural");
    cmd.add_option("--cdf-k", opt.cdf_k, "Discretization count of the stochastic ordering");
    cmd.add_option("--k", opt.k, "Number of shapelets to keep");
    cmd.add_option("--min-len", opt.min_len, "Minimum shapelet length");
    cmd.add_option("--max-len", opt.max_len, "Maximum shapelet length (0 = series length - 1)");
    cmd.add_option("--contract-seconds", opt.contract_seconds, "Wall-clock budget for the search");
}

ust::SelectionConfig selection_config(const CommonOptions& opt) {
    ust::SelectionConfig cfg;
    cfg.k = opt.k;
    cfg.min_len = opt.min_len;
    cfg.max_len = opt.max_len;
    cfg.contract = std::chrono::seconds(opt.contract_seconds);
    cfg.measure = ust::measure_from_string(opt.measure);
    cfg.ordering = {ust::ordering_kind_from_string(opt.ordering), opt.cdf_k};
    return cfg;
}

ust::ModelSpec model_spec(const CommonOptions& opt) {
    return {ust::measure_from_string(opt.measure),
            {ust::ordering_kind_from_string(opt.ordering), opt.cdf_k},
            ust::classifier_from_string(opt.classifier)};
}

// Appends one row, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const ust::ExperimentResult& result) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    if (fresh) out << ust::csv_header() << '\n';
    out << ust::to_csv_row(result) << '\n';
}

void emit_result(const CommonOptions& opt, const ust::ExperimentResult& result) {
    if (!opt.out_path.empty()) {
        append_csv(opt.out_path, result);
    }
    std::cout << ust::to_csv_row(result) << '\n';
}

int cmd_inject(const CommonOptions& opt) {
    const ust::RawDataset raw = ust::load_ucr_tsv(opt.train_path);
    const ust::UncertainDataset uncertain = ust::inject_uncertainty(raw, {opt.c, opt.seed});
    ust::save_uncertain_tsv(uncertain, opt.out_path);
    return 0;
}

int cmd_select(const CommonOptions& opt) {
    const ust::RawDataset raw = ust::load_ucr_tsv(opt.train_path);
    const ust::UncertainDataset uncertain = ust::inject_uncertainty(raw, {opt.c, opt.seed});
    const ust::SelectionResult result = ust::select_shapelets(uncertain, selection_config(opt));

    nlohmann::json shapelets = nlohmann::json::array();
    for (const auto& s : result.shapelets) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : s.values) {
            values.push_back({{"best", v.best()}, {"delta", v.delta()}});
        }
        shapelets.push_back({{"source_index", s.source_index},
                             {"offset", s.offset},
                             {"length", s.length},
                             {"quality", s.quality},
                             {"values", values}});
    }
    const nlohmann::json doc = {{"dataset", raw.name},
                                {"candidates_assessed", result.candidates_assessed},
                                {"shapelets", shapelets}};
    std::cout << doc.dump(2) << '\n';
    return 0;
}

int cmd_run(const CommonOptions& opt) {
    const ust::ExperimentResult result = ust::run_experiment(
        opt.train_path, opt.test_path, model_spec(opt), {opt.c, opt.seed}, selection_config(opt));
    emit_result(opt, result);
    return 0;
}

int cmd_bench(const CommonOptions& opt, const std::vector<double>& c_levels,
              const std::vector<std::uint64_t>& seeds) {
    struct Entry {
        const char* measure;
        const char* ordering;
        const char* classifier;
    };
    const Entry models[] = {
        {"ed", "natural", "gnb"},          {"dust-uniform", "natural", "gnb"},
        {"dust-normal", "natural", "gnb"}, {"ued", nullptr, "gnb"},
        {"ued", nullptr, "ugnb"},
    };
    for (const auto& model : models) {
        CommonOptions run = opt;
        run.measure = model.measure;
        run.ordering = model.ordering == nullptr ? opt.ordering : model.ordering;
        run.classifier = model.classifier;
        for (const double c : c_levels) {
            for (const std::uint64_t seed : seeds) {
                run.c = c;
                run.seed = seed;
                const ust::ExperimentResult result =
                    ust::run_experiment(run.train_path, run.test_path, model_spec(run),
                                        {run.c, run.seed}, selection_config(run));
                emit_result(run, result);
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uncertain shapelet transform classification experiments"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::vector<double> c_levels{0.1, 0.4, 0.8, 1.2, 2.0};
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};

    CLI::App* inject = app.add_subcommand("inject", "Inject uncertainty and write an uncertain dataset file");
    inject->add_option("--train", opt.train_path, "Input UCR-style TSV")->required();
    inject->add_option("--c", opt.c, "Uncertainty level");
    inject->add_option("--seed", opt.seed, "Random seed");
    inject->add_option("--out", opt.out_path, "Output path")->required();

    CLI::App* select = app.add_subcommand("select", "Print the top-k shapelets as JSON");
    select->add_option("--train", opt.train_path, "Training UCR-style TSV")->required();
    select->add_option("--c", opt.c, "Uncertainty level");
    select->add_option("--seed", opt.seed, "Random seed");
    add_selection_flags(*select, opt);

    CLI::App* run = app.add_subcommand("run", "Run one experiment and emit a CSV row");
    run->add_option("--train", opt.train_path, "Training UCR-style TSV")->required();
    run->add_option("--test", opt.test_path, "Test UCR-style TSV")->required();
    run->add_option("--classifier", opt.classifier, "Classifier: gnb|ugnb");
    run->add_option("--c", opt.c, "Uncertainty level");
    run->add_option("--seed", opt.seed, "Random seed");
    run->add_option("--out", opt.out_path, "CSV file to append to");
    add_selection_flags(*run, opt);

    CLI::App* bench = app.add_subcommand("bench", "Run the model matrix over c levels and seeds");
    bench->add_option("--train", opt.train_path, "Training UCR-style TSV")->required();
    bench->add_option("--test", opt.test_path, "Test UCR-style TSV")->required();
    bench->add_option("--c", c_levels, "Uncertainty levels");
    bench->add_option("--seed", seeds, "Seeds");
    bench->add_option("--out", opt.out_path, "CSV file to append to");
    bench->add_option("--ordering", opt.ordering, "Ordering for the UED models");
    bench->add_option("--cdf-k", opt.cdf_k, "Discretization count of the stochastic ordering");
    bench->add_option("--k", opt.k, "Number of shapelets to keep");
    bench->add_option("--min-len", opt.min_len, "Minimum shapelet length");
    bench->add_option("--max-len", opt.max_len, "Maximum shapelet length (0 = series length - 1)");
    bench->add_option("--contract-seconds", opt.contract_seconds, "Wall-clock budget per run");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inject->parsed()) return cmd_inject(opt);
        if (select->parsed()) return cmd_select(opt);
        if (run->parsed()) return cmd_run(opt);
        if (bench->parsed()) return cmd_bench(opt, c_levels, seeds);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
