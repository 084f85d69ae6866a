#include "ust/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ust {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

[[noreturn]] void stage_error(const char* stage, const std::exception& e) {
    throw std::runtime_error(std::string("stage '") + stage + "' failed: " + e.what());
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (const char ch : value) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> parse_csv_fields(const std::string& row) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const char ch = row[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < row.size() && row[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

double parse_double_field(const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::runtime_error("csv: non-numeric field '" + text + "'");
    }
    return value;
}

}  // namespace

double accuracy(std::span<const std::string> predictions, std::span<const std::string> labels) {
    if (predictions.size() != labels.size() || predictions.empty()) {
        throw std::invalid_argument("accuracy: need matching non-empty predictions and labels");
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] == labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

void validate_model_spec(const ModelSpec& spec) {
    const bool uncertain_measure = spec.measure == Measure::Ued;
    if (spec.classifier == ClassifierKind::Ugnb && !uncertain_measure) {
        throw std::invalid_argument(
            "invalid configuration: classifier 'ugnb' needs uncertain features, which only "
            "measure 'ued' produces; valid combinations are ued+{simple|stochastic|interval}+"
            "{gnb|ugnb} and {ed|dust-uniform|dust-normal}+natural+gnb");
    }
    if (uncertain_measure && spec.ordering.kind == OrderingKind::Natural) {
        throw std::invalid_argument(
            "invalid configuration: measure 'ued' needs an uncertain ordering "
            "(simple|stochastic|interval), not 'natural'");
    }
    if (!uncertain_measure && spec.ordering.kind != OrderingKind::Natural) {
        throw std::invalid_argument("invalid configuration: measure '" + to_string(spec.measure) +
                                    "' produces plain reals; use ordering 'natural'");
    }
}

std::string model_name(const ModelSpec& spec) {
    switch (spec.measure) {
        case Measure::Ed: return "ST";
        case Measure::DustUniform: return "UST(DUST_UNIFORM)";
        case Measure::DustNormal: return "UST(DUST_NORMAL)";
        case Measure::Ued:
            return spec.classifier == ClassifierKind::Ugnb ? "UST(UED,UGNB)" : "UST(UED,GNB)";
    }
    throw std::logic_error("model_name: unknown measure");
}

ExperimentResult run_experiment(const std::filesystem::path& train_path,
                                const std::filesystem::path& test_path, const ModelSpec& model,
                                const InjectionConfig& injection,
                                const SelectionConfig& selection_in) {
    validate_model_spec(model);
    SelectionConfig selection = selection_in;
    selection.measure = model.measure;
    selection.ordering = model.ordering;

    RawDataset raw_train, raw_test;
    try {
        raw_train = load_ucr_tsv(train_path);
        raw_test = load_ucr_tsv(test_path);
    } catch (const std::exception& e) {
        stage_error("load", e);
    }

    std::optional<UncertainDataset> train_opt, test_opt;
    try {
        train_opt = inject_uncertainty(raw_train, injection);
        test_opt = inject_uncertainty(raw_test, {injection.c, injection.seed + 1});
    } catch (const std::exception& e) {
        stage_error("inject", e);
    }
    const UncertainDataset& train = *train_opt;
    const UncertainDataset& test = *test_opt;

    ExperimentResult result;
    result.dataset = raw_train.name;
    result.model = model_name(model);
    result.ordering = to_string(model.ordering.kind);
    result.measure = to_string(model.measure);
    result.classifier = to_string(model.classifier);
    result.c = injection.c;
    result.seed = injection.seed;

    const auto train_start = Clock::now();
    SelectionResult selected;
    UncertainFeatureMatrix train_matrix;
    GaussianNBModel classifier;
    try {
        selected = select_shapelets(train, selection);
        train_matrix = transform_fit(train, selected.shapelets, model.measure, model.ordering);
        if (model.classifier == ClassifierKind::Gnb) {
            std::vector<std::vector<double>> flat;
            flat.reserve(train_matrix.rows.size());
            for (const auto& row : train_matrix.rows) flat.push_back(flatten(row));
            classifier = gnb_fit(flat, train.labels());
        } else {
            classifier = ugnb_fit(train_matrix.rows, train.labels());
        }
    } catch (const std::exception& e) {
        stage_error("train", e);
    }
    result.train_seconds = seconds_since(train_start);
    result.shapelets_evaluated = selected.candidates_assessed;

    const auto test_start = Clock::now();
    try {
        const UncertainFeatureMatrix test_matrix =
            transform_apply(test, selected.shapelets, train_matrix, model.measure, model.ordering);
        std::vector<std::string> predictions;
        predictions.reserve(test_matrix.rows.size());
        for (const auto& row : test_matrix.rows) {
            std::vector<double> proba;
            if (model.classifier == ClassifierKind::Gnb) {
                proba = gnb_predict_proba(classifier, flatten(row));
            } else {
                proba = ugnb_predict_proba(classifier, row);
            }
            predictions.push_back(predict_label(classifier, proba));
        }
        result.accuracy = accuracy(predictions, test.labels());
    } catch (const std::exception& e) {
        stage_error("test", e);
    }
    result.test_seconds = seconds_since(test_start);
    return result;
}

std::string csv_header() {
    return "dataset,model,ordering,measure,classifier,c,seed,accuracy,train_seconds,"
           "test_seconds,shapelets_evaluated";
}

std::string to_csv_row(const ExperimentResult& r) {
    std::string row = csv_field(r.dataset);
    row += ',' + csv_field(r.model);
    row += ',' + csv_field(r.ordering);
    row += ',' + csv_field(r.measure);
    row += ',' + csv_field(r.classifier);
    row += ',' + format_double(r.c);
    row += ',' + std::to_string(r.seed);
    row += ',' + format_double(r.accuracy);
    row += ',' + format_double(r.train_seconds);
    row += ',' + format_double(r.test_seconds);
    row += ',' + std::to_string(r.shapelets_evaluated);
    return row;
}

ExperimentResult parse_csv_row(const std::string& row) {
    const auto fields = parse_csv_fields(row);
    if (fields.size() != 11) {
        throw std::runtime_error("csv: expected 11 fields, got " + std::to_string(fields.size()));
    }
    ExperimentResult r;
    r.dataset = fields[0];
    r.model = fields[1];
    r.ordering = fields[2];
    r.measure = fields[3];
    r.classifier = fields[4];
    r.c = parse_double_field(fields[5]);
    r.seed = static_cast<std::uint64_t>(std::stoull(fields[6]));
    r.accuracy = parse_double_field(fields[7]);
    r.train_seconds = parse_double_field(fields[8]);
    r.test_seconds = parse_double_field(fields[9]);
    r.shapelets_evaluated = static_cast<std::size_t>(std::stoull(fields[10]));
    return r;
}

}  // namespace ust
