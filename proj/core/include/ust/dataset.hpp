#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ust/uncertain.hpp"

namespace ust {

// A certain (point-valued) labeled dataset, as read from a UCR-style TSV.
struct RawDataset {
    std::vector<std::vector<double>> series;  // n x m
    std::vector<std::string> labels;
    std::string name;

    std::size_t size() const { return series.size(); }
    std::size_t length() const { return series.empty() ? 0 : series.front().size(); }
};

// UCR-style TSV: one series per line, class label first, then m values,
// tab-separated. Errors carry the offending line (and column) number.
RawDataset load_ucr_tsv(const std::filesystem::path& path);

// Uncertain dataset file: per line a label, then m `best:delta` pairs,
// tab-separated. Values round-trip exactly.
void save_uncertain_tsv(const UncertainDataset& dataset, const std::filesystem::path& path);
UncertainDataset load_uncertain_tsv(const std::filesystem::path& path);

}  // namespace ust
