#pragma once

#include <span>
#include <string>

#include "ust/ordering.hpp"
#include "ust/uncertain.hpp"

namespace ust {

enum class DustFlavor { Uniform, Normal };

// Dissimilarity measure used by the shapelet pipeline. Ed and the two
// DUST flavors produce plain reals (delta 0); Ued propagates uncertainty.
enum class Measure { Ed, Ued, DustUniform, DustNormal };

// Uncertain Euclidean distance between equal-length sequences, in squared
// form: best = sum (a_i - b_i)^2, delta = 2 * sum |a_i - b_i| (da_i + db_i).
UncertainValue ued(std::span<const UncertainValue> a, std::span<const UncertainValue> b);

// Minimum, under the given comparator, of ued(S, window) over all
// contiguous windows of T with |S| elements. Ties go to the earliest offset.
UncertainValue ued_subseq(std::span<const UncertainValue> series,
                          std::span<const UncertainValue> query,
                          const OrderingStrategy& ordering);

// Pointwise DUST with sigma = max(dx, dy); falls back to |x - y| when both
// deltas are zero.
double dust_point(const UncertainValue& x, const UncertainValue& y, DustFlavor flavor);

// Root-sum-of-squares aggregation of pointwise DUST values.
double dust(std::span<const UncertainValue> a, std::span<const UncertainValue> b,
            DustFlavor flavor);

// Classical squared Euclidean distance.
double ed_sq(std::span<const double> a, std::span<const double> b);

// Sliding-window dissimilarity between a series and a shorter query under
// the selected measure. Ed/DUST results carry delta 0 and are minimized
// under the natural order; Ued is minimized under `ordering`.
UncertainValue measure_subseq(std::span<const UncertainValue> series,
                              std::span<const UncertainValue> query,
                              Measure measure, const OrderingStrategy& ordering);

std::string to_string(Measure measure);
Measure measure_from_string(const std::string& name);

}  // namespace ust
