#include "ust/shapelet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ust {

namespace {

// Class frequencies as (label, count), in first-seen order.
class LabelCounts {
public:
    void add(const std::string& label) {
        for (auto& [l, c] : counts_) {
            if (l == label) {
                ++c;
                return;
            }
        }
        counts_.emplace_back(label, 1);
    }

    void remove(const std::string& label) {
        for (auto& [l, c] : counts_) {
            if (l == label) {
                --c;
                return;
            }
        }
    }

    std::size_t distinct() const {
        std::size_t d = 0;
        for (const auto& [l, c] : counts_) d += c > 0 ? 1 : 0;
        return d;
    }

    double entropy(std::size_t total) const {
        if (total == 0) return 0.0;
        double h = 0.0;
        for (const auto& [l, c] : counts_) {
            if (c == 0) continue;
            const double p = static_cast<double>(c) / static_cast<double>(total);
            h -= p * std::log2(p);
        }
        return h;
    }

private:
    std::vector<std::pair<std::string, std::size_t>> counts_;
};

}  // namespace

std::vector<Candidate> gen_candidates(std::span<const UncertainValue> series,
                                      std::size_t min_len, std::size_t max_len) {
    if (min_len < 1 || min_len > max_len || max_len > series.size()) {
        throw std::invalid_argument("gen_candidates: need 1 <= min_len <= max_len <= series length");
    }
    std::vector<Candidate> candidates;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        for (std::size_t off = 0; off + len <= series.size(); ++off) {
            candidates.push_back({series.subspan(off, len), off});
        }
    }
    return candidates;
}

SplitThreshold best_split(std::span<const UncertainValue> distances,
                          std::span<const std::string> labels,
                          const OrderingStrategy& ord) {
    const std::size_t n = distances.size();
    if (n != labels.size() || n < 2) {
        throw std::invalid_argument("best_split: need matching distances/labels with n >= 2");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Ordering3 c = compare(distances[a], distances[b], ord);
        if (c != Ordering3::Equal) return c == Ordering3::Less;
        return a < b;
    });

    LabelCounts total;
    for (const auto& l : labels) total.add(l);
    if (total.distinct() < 2) {
        throw std::invalid_argument("best_split: need at least 2 distinct labels");
    }
    const double h_total = total.entropy(n);

    LabelCounts left;
    LabelCounts right = total;
    bool found = false;
    double best_gain = 0.0;
    std::size_t best_imbalance = 0;
    std::size_t best_boundary = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        left.add(labels[order[p]]);
        right.remove(labels[order[p]]);
        const std::size_t n_left = p + 1;
        const std::size_t n_right = n - n_left;
        const double gain = h_total -
                            (static_cast<double>(n_left) / n) * left.entropy(n_left) -
                            (static_cast<double>(n_right) / n) * right.entropy(n_right);
        const std::size_t imbalance =
            n_left > n_right ? n_left - n_right : n_right - n_left;
        // Boundaries are visited in ascending threshold order, so strict
        // improvement keeps the smallest threshold among equal splits.
        if (!found || gain > best_gain ||
            (gain == best_gain && imbalance < best_imbalance)) {
            found = true;
            best_gain = gain;
            best_imbalance = imbalance;
            best_boundary = p;
        }
    }
    return {distances[order[best_boundary]], best_gain};
}

double assess_candidate(std::span<const UncertainValue> candidate,
                        const UncertainDataset& dataset, Measure measure,
                        const OrderingStrategy& ordering) {
    std::vector<UncertainValue> distances;
    distances.reserve(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        distances.push_back(measure_subseq(dataset.series(i).view(), candidate, measure, ordering));
    }
    return best_split(distances, dataset.labels(), ordering).gain;
}

namespace {

struct ScoredCandidate {
    double gain = 0.0;
    double total_delta = 0.0;
    std::size_t source = 0;
    std::size_t length = 0;
    std::size_t offset = 0;
};

bool better_candidate(const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    if (a.total_delta != b.total_delta) return a.total_delta < b.total_delta;
    if (a.source != b.source) return a.source < b.source;
    if (a.length != b.length) return a.length < b.length;
    return a.offset < b.offset;
}

}  // namespace

SelectionResult select_shapelets(const UncertainDataset& dataset, const SelectionConfig& config) {
    if (dataset.distinct_label_count() < 2) {
        throw std::invalid_argument("select_shapelets: need at least 2 distinct labels");
    }
    if (config.contract <= std::chrono::nanoseconds::zero()) {
        throw std::invalid_argument("select_shapelets: time contract must be positive");
    }
    if (config.k == 0) {
        throw std::invalid_argument("select_shapelets: k must be positive");
    }
    const std::size_t m = dataset.length();
    const std::size_t max_len = config.max_len == 0 ? m - 1 : config.max_len;
    if (config.min_len < 3 || config.min_len > max_len || max_len > m - 1) {
        throw std::invalid_argument("select_shapelets: need 3 <= min_len <= max_len <= m-1");
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<ScoredCandidate> scored;
    bool out_of_time = false;
    for (std::size_t i = 0; i < dataset.size() && !out_of_time; ++i) {
        const auto candidates = gen_candidates(dataset.series(i).view(), config.min_len, max_len);
        for (const auto& cand : candidates) {
            const double gain = assess_candidate(cand.values, dataset, config.measure, config.ordering);
            double total_delta = 0.0;
            for (const auto& v : cand.values) total_delta += v.delta();
            scored.push_back({gain, total_delta, i, cand.values.size(), cand.offset});
            if (std::chrono::steady_clock::now() - start >= config.contract) {
                out_of_time = true;
                break;
            }
        }
    }

    std::sort(scored.begin(), scored.end(), better_candidate);
    const std::size_t kept = std::min(config.k, scored.size());

    SelectionResult result;
    result.candidates_assessed = scored.size();
    result.shapelets.reserve(kept);
    for (std::size_t i = 0; i < kept; ++i) {
        const auto& s = scored[i];
        const auto window = dataset.series(s.source).window(s.offset, s.length);
        result.shapelets.push_back({std::vector<UncertainValue>(window.begin(), window.end()),
                                    s.source, s.offset, s.length, s.gain});
    }
    return result;
}

namespace {

std::vector<std::vector<FeatureValue>> raw_transform(const UncertainDataset& dataset,
                                                     std::span<const Shapelet> shapelets,
                                                     Measure measure,
                                                     const OrderingStrategy& ordering) {
    if (shapelets.empty()) {
        throw std::invalid_argument("transform: shapelet set must be non-empty");
    }
    for (const auto& s : shapelets) {
        if (s.values.size() > dataset.length()) {
            throw std::invalid_argument("transform: shapelet length " +
                                        std::to_string(s.values.size()) +
                                        " exceeds series length " +
                                        std::to_string(dataset.length()));
        }
    }
    std::vector<std::vector<FeatureValue>> rows(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        rows[i].reserve(shapelets.size());
        for (const auto& s : shapelets) {
            const UncertainValue d =
                measure_subseq(dataset.series(i).view(), s.values, measure, ordering);
            rows[i].push_back({d.best(), d.delta()});
        }
    }
    return rows;
}

struct ChannelStats {
    double mean = 0.0;
    double std = 0.0;  // population
};

ChannelStats column_stats(const std::vector<std::vector<FeatureValue>>& rows, std::size_t col,
                          bool delta_channel) {
    const double n = static_cast<double>(rows.size());
    double mean = 0.0;
    for (const auto& row : rows) {
        mean += delta_channel ? row[col].delta : row[col].best;
    }
    mean /= n;
    double var = 0.0;
    for (const auto& row : rows) {
        const double v = (delta_channel ? row[col].delta : row[col].best) - mean;
        var += v * v;
    }
    return {mean, std::sqrt(var / n)};
}

double z_score(double value, double mean, double std) {
    return std == 0.0 ? 0.0 : (value - mean) / std;
}

}  // namespace

UncertainFeatureMatrix transform_fit(const UncertainDataset& dataset,
                                     std::span<const Shapelet> shapelets, Measure measure,
                                     const OrderingStrategy& ordering) {
    UncertainFeatureMatrix matrix;
    matrix.rows = raw_transform(dataset, shapelets, measure, ordering);
    const std::size_t k = shapelets.size();
    matrix.col_best_mean.resize(k);
    matrix.col_best_std.resize(k);
    matrix.col_delta_mean.resize(k);
    matrix.col_delta_std.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const ChannelStats best = column_stats(matrix.rows, j, false);
        const ChannelStats delta = column_stats(matrix.rows, j, true);
        matrix.col_best_mean[j] = best.mean;
        matrix.col_best_std[j] = best.std;
        matrix.col_delta_mean[j] = delta.mean;
        matrix.col_delta_std[j] = delta.std;
        for (auto& row : matrix.rows) {
            row[j].best = z_score(row[j].best, best.mean, best.std);
            row[j].delta = z_score(row[j].delta, delta.mean, delta.std);
        }
    }
    return matrix;
}

UncertainFeatureMatrix transform_apply(const UncertainDataset& dataset,
                                       std::span<const Shapelet> shapelets,
                                       const UncertainFeatureMatrix& fitted, Measure measure,
                                       const OrderingStrategy& ordering) {
    if (!fitted.has_stats() || fitted.col_best_mean.size() != shapelets.size()) {
        throw std::invalid_argument("transform_apply: fitted scaling statistics required");
    }
    UncertainFeatureMatrix matrix;
    matrix.rows = raw_transform(dataset, shapelets, measure, ordering);
    for (auto& row : matrix.rows) {
        for (std::size_t j = 0; j < shapelets.size(); ++j) {
            row[j].best = z_score(row[j].best, fitted.col_best_mean[j], fitted.col_best_std[j]);
            row[j].delta = z_score(row[j].delta, fitted.col_delta_mean[j], fitted.col_delta_std[j]);
        }
    }
    return matrix;
}

}  // namespace ust
