#pragma once

#include <string>

#include "ust/uncertain.hpp"

namespace ust {

enum class Ordering3 { Less, Equal, Greater };

enum class OrderingKind { Simple, Stochastic, Interval, Natural };

// Comparison strategy for uncertain measures. `cdf_points` is the
// discretization count of the stochastic ordering (k in the CDF grid).
struct OrderingStrategy {
    OrderingKind kind = OrderingKind::Simple;
    int cdf_points = 100;
};

// Lexicographic on (best, delta): with equal best guesses the value with
// the smaller uncertainty is the smaller one. A total order.
Ordering3 cmp_simple(const UncertainValue& x, const UncertainValue& y);

// CDF of the Gaussian N(best, delta^2) associated with x, evaluated at t.
// Degenerates to a step function when delta == 0.
double gaussian_cdf(double t, const UncertainValue& x);

// Relaxed stochastic ordering: both CDFs are compared on a grid of k+1
// points spanning the union of the two intervals and the majority wins.
// An inconclusive count falls back to cmp_simple so the result is total.
Ordering3 cmp_stochastic(const UncertainValue& x, const UncertainValue& y, int k);

// Possibility degree Pr[x >= y] of the interval ranking, clamped to [0,1].
// With two degenerate intervals this is the 0/1 indicator of best >= best.
double interval_geq_prob(const UncertainValue& x, const UncertainValue& y);

// x < y when Pr[y >= x] > 0.5; ties (exactly 0.5) fall back to cmp_simple.
Ordering3 cmp_interval(const UncertainValue& x, const UncertainValue& y);

// Order on best guesses only, for plain-real measures (ED, DUST).
Ordering3 cmp_natural(const UncertainValue& x, const UncertainValue& y);

Ordering3 compare(const UncertainValue& x, const UncertainValue& y,
                  const OrderingStrategy& strategy);

inline bool is_less(const UncertainValue& x, const UncertainValue& y,
                    const OrderingStrategy& strategy) {
    return compare(x, y, strategy) == Ordering3::Less;
}

std::string to_string(OrderingKind kind);
OrderingKind ordering_kind_from_string(const std::string& name);

}  // namespace ust
