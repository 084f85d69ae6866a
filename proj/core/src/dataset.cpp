#include "ust/dataset.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ust {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

double parse_double(const std::string& text, std::size_t line_no, std::size_t col_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ", column " +
                                 std::to_string(col_no) + ": non-numeric value '" + text + "'");
    }
    return value;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

RawDataset load_ucr_tsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file: " + path.string());
    }
    RawDataset dataset;
    dataset.name = path.stem().string();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() < 2) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected a label and at least one value");
        }
        if (fields[0].empty()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": empty label");
        }
        std::vector<double> row;
        row.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            row.push_back(parse_double(fields[i], line_no, i + 1));
        }
        if (!dataset.series.empty() && row.size() != dataset.length()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": ragged row with " +
                                     std::to_string(row.size()) + " values, expected " +
                                     std::to_string(dataset.length()));
        }
        dataset.series.push_back(std::move(row));
        dataset.labels.push_back(fields[0]);
    }
    if (dataset.series.empty()) {
        throw std::runtime_error("empty dataset file: " + path.string());
    }
    return dataset;
}

void save_uncertain_tsv(const UncertainDataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write dataset file: " + path.string());
    }
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        out << dataset.label(i);
        for (const auto& v : dataset.series(i)) {
            out << '\t' << format_double(v.best()) << ':' << format_double(v.delta());
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

UncertainDataset load_uncertain_tsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file: " + path.string());
    }
    std::vector<UncertainSeries> series;
    std::vector<std::string> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() < 2 || fields[0].empty()) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected a label and at least one best:delta pair");
        }
        std::vector<UncertainValue> values;
        values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const std::size_t colon = fields[i].find(':');
            if (colon == std::string::npos) {
                throw std::runtime_error("line " + std::to_string(line_no) + ", column " +
                                         std::to_string(i + 1) + ": expected best:delta pair");
            }
            const double best = parse_double(fields[i].substr(0, colon), line_no, i + 1);
            const double delta = parse_double(fields[i].substr(colon + 1), line_no, i + 1);
            values.emplace_back(best, delta);
        }
        series.emplace_back(std::move(values));
        labels.push_back(fields[0]);
    }
    if (series.empty()) {
        throw std::runtime_error("empty dataset file: " + path.string());
    }
    return {std::move(series), std::move(labels)};
}

}  // namespace ust
