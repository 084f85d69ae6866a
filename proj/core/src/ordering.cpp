#include "ust/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ust {

Ordering3 cmp_simple(const UncertainValue& x, const UncertainValue& y) {
    if (x.best() < y.best()) return Ordering3::Less;
    if (x.best() > y.best()) return Ordering3::Greater;
    if (x.delta() < y.delta()) return Ordering3::Less;
    if (x.delta() > y.delta()) return Ordering3::Greater;
    return Ordering3::Equal;
}

double gaussian_cdf(double t, const UncertainValue& x) {
    if (x.delta() == 0.0) {
        return t < x.best() ? 0.0 : 1.0;
    }
    return 0.5 * (1.0 + std::erf((t - x.best()) / (x.delta() * std::sqrt(2.0))));
}

Ordering3 cmp_stochastic(const UncertainValue& x, const UncertainValue& y, int k) {
    if (k < 2) {
        throw std::invalid_argument("cmp_stochastic: discretization count must be >= 2");
    }
    const double lo = std::min(x.lower(), y.lower());
    const double hi = std::max(x.upper(), y.upper());
    const double step = (hi - lo) / static_cast<double>(k);
    int x_dominates = 0;  // points where CDF_X > CDF_Y (X stochastically smaller)
    int y_dominates = 0;
    for (int i = 0; i <= k; ++i) {
        const double t = lo + static_cast<double>(i) * step;
        const double cx = gaussian_cdf(t, x);
        const double cy = gaussian_cdf(t, y);
        if (cx > cy) {
            ++x_dominates;
        } else if (cx < cy) {
            ++y_dominates;
        }
    }
    if (x_dominates > y_dominates) return Ordering3::Less;
    if (y_dominates > x_dominates) return Ordering3::Greater;
    return cmp_simple(x, y);
}

double interval_geq_prob(const UncertainValue& x, const UncertainValue& y) {
    const double spread = 2.0 * (x.delta() + y.delta());
    if (spread == 0.0) {
        return x.best() >= y.best() ? 1.0 : 0.0;
    }
    const double degree = (x.upper() - y.lower()) / spread;
    return std::clamp(degree, 0.0, 1.0);
}

Ordering3 cmp_interval(const UncertainValue& x, const UncertainValue& y) {
    const double p = interval_geq_prob(y, x);
    if (p > 0.5) return Ordering3::Less;
    if (p < 0.5) return Ordering3::Greater;
    return cmp_simple(x, y);
}

Ordering3 cmp_natural(const UncertainValue& x, const UncertainValue& y) {
    if (x.best() < y.best()) return Ordering3::Less;
    if (x.best() > y.best()) return Ordering3::Greater;
    return Ordering3::Equal;
}

Ordering3 compare(const UncertainValue& x, const UncertainValue& y,
                  const OrderingStrategy& strategy) {
    switch (strategy.kind) {
        case OrderingKind::Simple: return cmp_simple(x, y);
        case OrderingKind::Stochastic: return cmp_stochastic(x, y, strategy.cdf_points);
        case OrderingKind::Interval: return cmp_interval(x, y);
        case OrderingKind::Natural: return cmp_natural(x, y);
    }
    throw std::logic_error("compare: unknown ordering kind");
}

std::string to_string(OrderingKind kind) {
    switch (kind) {
        case OrderingKind::Simple: return "simple";
        case OrderingKind::Stochastic: return "stochastic";
        case OrderingKind::Interval: return "interval";
        case OrderingKind::Natural: return "natural";
    }
    throw std::logic_error("to_string: unknown ordering kind");
}

OrderingKind ordering_kind_from_string(const std::string& name) {
    if (name == "simple") return OrderingKind::Simple;
    if (name == "stochastic") return OrderingKind::Stochastic;
    if (name == "interval") return OrderingKind::Interval;
    if (name == "natural") return OrderingKind::Natural;
    throw std::invalid_argument("unknown ordering '" + name +
                                "' (expected simple|stochastic|interval|natural)");
}

}  // namespace ust
