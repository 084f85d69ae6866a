#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ust {

// PDF-model uncertain scalar: a best guess and a maximum deviation,
// written x = best ± delta. Immutable after construction.
class UncertainValue {
public:
    UncertainValue() = default;

    UncertainValue(double best, double delta) : best_(best), delta_(delta) {
        if (!std::isfinite(best) || !std::isfinite(delta)) {
            throw std::invalid_argument("UncertainValue: components must be finite");
        }
        if (delta < 0.0) {
            throw std::invalid_argument("UncertainValue: negative deviation " +
                                        std::to_string(delta));
        }
    }

    double best() const { return best_; }
    double delta() const { return delta_; }

    // Interval bounds [best - delta, best + delta].
    double lower() const { return best_ - delta_; }
    double upper() const { return best_ + delta_; }

    // Exact component-wise equality, intended for tests. Semantic
    // comparison lives in ordering.hpp.
    bool operator==(const UncertainValue&) const = default;

private:
    double best_ = 0.0;
    double delta_ = 0.0;
};

inline UncertainValue uadd(const UncertainValue& x, const UncertainValue& y) {
    return {x.best() + y.best(), x.delta() + y.delta()};
}

// Deltas add under subtraction as well: usub(x, x) is 0 ± 2*delta.
inline UncertainValue usub(const UncertainValue& x, const UncertainValue& y) {
    return {x.best() - y.best(), x.delta() + y.delta()};
}

// Integer power. The delta rule is written as |n * best^(n-1)| * delta,
// which stays defined at best == 0.
inline UncertainValue upow(const UncertainValue& x, int n) {
    if (n < 1) {
        throw std::invalid_argument("upow: exponent must be a positive integer");
    }
    const double best = std::pow(x.best(), n);
    const double delta = std::abs(static_cast<double>(n) * std::pow(x.best(), n - 1)) * x.delta();
    return {best, delta};
}

// An ordered sequence of uncertain observations. Length is fixed at
// construction and always >= 1.
class UncertainSeries {
public:
    explicit UncertainSeries(std::vector<UncertainValue> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw std::invalid_argument("UncertainSeries: length must be >= 1");
        }
    }

    std::size_t size() const { return values_.size(); }
    const UncertainValue& operator[](std::size_t i) const { return values_[i]; }

    std::span<const UncertainValue> view() const { return values_; }
    std::span<const UncertainValue> window(std::size_t offset, std::size_t len) const {
        return std::span<const UncertainValue>(values_).subspan(offset, len);
    }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool operator==(const UncertainSeries&) const = default;

private:
    std::vector<UncertainValue> values_;
};

// A labeled collection of equal-length uncertain series.
class UncertainDataset {
public:
    UncertainDataset(std::vector<UncertainSeries> series, std::vector<std::string> labels)
        : series_(std::move(series)), labels_(std::move(labels)) {
        if (series_.empty() || series_.size() != labels_.size()) {
            throw std::invalid_argument("UncertainDataset: need n >= 1 series with matching labels");
        }
        const std::size_t m = series_.front().size();
        for (const auto& s : series_) {
            if (s.size() != m) {
                throw std::invalid_argument("UncertainDataset: all series must share one length");
            }
        }
    }

    std::size_t size() const { return series_.size(); }
    std::size_t length() const { return series_.front().size(); }

    const UncertainSeries& series(std::size_t i) const { return series_[i]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t distinct_label_count() const {
        std::vector<std::string> seen;
        for (const auto& l : labels_) {
            bool found = false;
            for (const auto& s : seen) found = found || s == l;
            if (!found) seen.push_back(l);
        }
        return seen.size();
    }

private:
    std::vector<UncertainSeries> series_;
    std::vector<std::string> labels_;
};

}  // namespace ust
