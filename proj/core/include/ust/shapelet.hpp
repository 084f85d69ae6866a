#pragma once

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "ust/dissimilarity.hpp"
#include "ust/ordering.hpp"
#include "ust/uncertain.hpp"

namespace ust {

// An uncertain subsequence with its provenance and information gain.
struct Shapelet {
    std::vector<UncertainValue> values;
    std::size_t source_index = 0;
    std::size_t offset = 0;
    std::size_t length = 0;
    double quality = 0.0;  // information gain, bits
};

struct SelectionConfig {
    std::size_t k = 100;
    std::size_t min_len = 3;
    std::size_t max_len = 0;  // 0 means "series length - 1"
    std::chrono::nanoseconds contract = std::chrono::minutes(10);
    OrderingStrategy ordering;
    Measure measure = Measure::Ued;
};

struct SplitThreshold {
    UncertainValue threshold;
    double gain = 0.0;
};

// A candidate subsequence of one series, referenced in place.
struct Candidate {
    std::span<const UncertainValue> values;
    std::size_t offset = 0;
};

// A transformed dataset entry: per-channel z-scored dissimilarity. The
// delta channel is centered, so unlike UncertainValue it may be negative.
struct FeatureValue {
    double best = 0.0;
    double delta = 0.0;

    bool operator==(const FeatureValue&) const = default;
};

// n x k grid of scaled dissimilarities plus the per-column scaling
// statistics fitted on the training set (empty for applied matrices).
struct UncertainFeatureMatrix {
    std::vector<std::vector<FeatureValue>> rows;
    std::vector<double> col_best_mean, col_best_std;
    std::vector<double> col_delta_mean, col_delta_std;

    bool has_stats() const { return !col_best_mean.empty(); }
};

struct SelectionResult {
    std::vector<Shapelet> shapelets;  // sorted by descending gain
    std::size_t candidates_assessed = 0;
};

// All contiguous subsequences of T with length in [min_len, max_len],
// ordered by increasing length then increasing offset.
std::vector<Candidate> gen_candidates(std::span<const UncertainValue> series,
                                      std::size_t min_len, std::size_t max_len);

// Best information-gain threshold over the distances, sorted under `ord`.
// Every boundary between consecutive sorted positions is evaluated; the
// threshold is the lower of the two straddling distances. Gain ties go to
// the more balanced split, then the smaller threshold.
SplitThreshold best_split(std::span<const UncertainValue> distances,
                          std::span<const std::string> labels,
                          const OrderingStrategy& ord);

// Information gain of a candidate used as a separator for the dataset.
double assess_candidate(std::span<const UncertainValue> candidate,
                        const UncertainDataset& dataset, Measure measure,
                        const OrderingStrategy& ordering);

// Top-k selection under the wall-clock contract. The contract is checked
// after each candidate assessment; at least one candidate is always
// assessed. Quality ties are broken toward the candidate with the smaller
// total delta, then by (source_index, length, offset).
SelectionResult select_shapelets(const UncertainDataset& dataset, const SelectionConfig& config);

// Dissimilarity of every series to every shapelet, each column's best and
// delta channels z-scored with the column's own (population) statistics.
// Zero-variance columns map to 0. The fitted statistics are stored.
UncertainFeatureMatrix transform_fit(const UncertainDataset& dataset,
                                     std::span<const Shapelet> shapelets, Measure measure,
                                     const OrderingStrategy& ordering);

// Same transform scaled with the statistics fitted on the training set.
UncertainFeatureMatrix transform_apply(const UncertainDataset& dataset,
                                       std::span<const Shapelet> shapelets,
                                       const UncertainFeatureMatrix& fitted, Measure measure,
                                       const OrderingStrategy& ordering);

}  // namespace ust
