#include "ust/dissimilarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ust {

namespace {

void check_equal_lengths(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

void check_window_fits(std::size_t series_len, std::size_t query_len) {
    if (query_len == 0 || query_len > series_len) {
        throw std::invalid_argument("subsequence search: query length " +
                                    std::to_string(query_len) + " not in [1, " +
                                    std::to_string(series_len) + "]");
    }
}

}  // namespace

UncertainValue ued(std::span<const UncertainValue> a, std::span<const UncertainValue> b) {
    check_equal_lengths(a.size(), b.size(), "ued");
    if (a.empty()) {
        throw std::invalid_argument("ued: empty input");
    }
    double best = 0.0;
    double delta = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double gap = a[i].best() - b[i].best();
        best += gap * gap;
        delta += std::abs(gap) * (a[i].delta() + b[i].delta());
    }
    return {best, 2.0 * delta};
}

UncertainValue ued_subseq(std::span<const UncertainValue> series,
                          std::span<const UncertainValue> query,
                          const OrderingStrategy& ordering) {
    check_window_fits(series.size(), query.size());
    UncertainValue min = ued(query, series.first(query.size()));
    const std::size_t windows = series.size() - query.size() + 1;
    for (std::size_t off = 1; off < windows; ++off) {
        const UncertainValue d = ued(query, series.subspan(off, query.size()));
        if (compare(d, min, ordering) == Ordering3::Less) {
            min = d;
        }
    }
    return min;
}

double dust_point(const UncertainValue& x, const UncertainValue& y, DustFlavor flavor) {
    const double sigma = std::max(x.delta(), y.delta());
    const double gap = std::abs(x.best() - y.best());
    if (sigma == 0.0) {
        return gap;
    }
    switch (flavor) {
        case DustFlavor::Uniform: return gap / (2.0 * sigma);
        case DustFlavor::Normal: return gap / (2.0 * sigma * (1.0 + sigma * sigma));
    }
    throw std::logic_error("dust_point: unknown flavor");
}

double dust(std::span<const UncertainValue> a, std::span<const UncertainValue> b,
            DustFlavor flavor) {
    check_equal_lengths(a.size(), b.size(), "dust");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = dust_point(a[i], b[i], flavor);
        sum += d * d;
    }
    return std::sqrt(sum);
}

double ed_sq(std::span<const double> a, std::span<const double> b) {
    check_equal_lengths(a.size(), b.size(), "ed_sq");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double gap = a[i] - b[i];
        sum += gap * gap;
    }
    return sum;
}

namespace {

double ed_sq_uncertain(std::span<const UncertainValue> a, std::span<const UncertainValue> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double gap = a[i].best() - b[i].best();
        sum += gap * gap;
    }
    return sum;
}

}  // namespace

UncertainValue measure_subseq(std::span<const UncertainValue> series,
                              std::span<const UncertainValue> query,
                              Measure measure, const OrderingStrategy& ordering) {
    if (measure == Measure::Ued) {
        return ued_subseq(series, query, ordering);
    }
    check_window_fits(series.size(), query.size());
    const std::size_t windows = series.size() - query.size() + 1;
    double min = 0.0;
    for (std::size_t off = 0; off < windows; ++off) {
        const auto window = series.subspan(off, query.size());
        double d = 0.0;
        switch (measure) {
            case Measure::Ed: d = ed_sq_uncertain(query, window); break;
            case Measure::DustUniform: d = dust(query, window, DustFlavor::Uniform); break;
            case Measure::DustNormal: d = dust(query, window, DustFlavor::Normal); break;
            case Measure::Ued: break;  // handled above
        }
        if (off == 0 || d < min) {
            min = d;
        }
    }
    return {min, 0.0};
}

std::string to_string(Measure measure) {
    switch (measure) {
        case Measure::Ed: return "ed";
        case Measure::Ued: return "ued";
        case Measure::DustUniform: return "dust-uniform";
        case Measure::DustNormal: return "dust-normal";
    }
    throw std::logic_error("to_string: unknown measure");
}

Measure measure_from_string(const std::string& name) {
    if (name == "ed") return Measure::Ed;
    if (name == "ued") return Measure::Ued;
    if (name == "dust-uniform") return Measure::DustUniform;
    if (name == "dust-normal") return Measure::DustNormal;
    throw std::invalid_argument("unknown measure '" + name +
                                "' (expected ed|ued|dust-uniform|dust-normal)");
}

}  // namespace ust
