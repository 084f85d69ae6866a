#include <doctest.h>

#include <random>
#include <vector>

#include "ust/dissimilarity.hpp"

using namespace ust;

namespace {

std::vector<UncertainValue> random_series(std::mt19937& rng, std::size_t len, double max_delta) {
    std::uniform_real_distribution<double> val(-5.0, 5.0);
    std::uniform_real_distribution<double> dev(0.0, max_delta);
    std::vector<UncertainValue> s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) s.emplace_back(val(rng), dev(rng));
    return s;
}

}  // namespace

TEST_CASE("ued hand-verified example") {
    const std::vector<UncertainValue> a{{1.0, 0.1}, {2.0, 0.2}};
    const std::vector<UncertainValue> b{{1.0, 0.0}, {0.0, 0.1}};
    const UncertainValue d = ued(a, b);
    CHECK(d.best() == doctest::Approx(4.0));
    CHECK(d.delta() == doctest::Approx(1.2));
}

TEST_CASE("ued identity and classical reduction") {
    std::mt19937 rng(5);
    const auto t = random_series(rng, 8, 1.0);
    const UncertainValue self = ued(t, t);
    CHECK(self.best() == 0.0);
    CHECK(self.delta() == 0.0);

    const auto a = random_series(rng, 8, 0.0);
    const auto b = random_series(rng, 8, 0.0);
    std::vector<double> ab, bb;
    for (const auto& v : a) ab.push_back(v.best());
    for (const auto& v : b) bb.push_back(v.best());
    CHECK(ued(a, b).best() == doctest::Approx(ed_sq(ab, bb)).epsilon(1e-9));
    CHECK(ued(a, b).delta() == 0.0);
}

TEST_CASE("ued is symmetric and non-negative") {
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_series(rng, 6, 2.0);
        const auto b = random_series(rng, 6, 2.0);
        CHECK(ued(a, b) == ued(b, a));
        CHECK(ued(a, b).best() >= 0.0);
        CHECK(ued(a, b).delta() >= 0.0);
    }
}

TEST_CASE("ued length mismatch names both lengths") {
    const std::vector<UncertainValue> a{{1.0, 0.0}, {2.0, 0.0}};
    const std::vector<UncertainValue> b{{1.0, 0.0}};
    CHECK_THROWS_WITH_AS(ued(a, b), "ued: length mismatch (2 vs 1)", std::invalid_argument);
}

TEST_CASE("ued_subseq") {
    const std::vector<UncertainValue> t{{3.0, 0.0}, {1.0, 0.0}, {5.0, 0.0}};
    const std::vector<UncertainValue> s{{0.0, 0.1}};
    const UncertainValue d = ued_subseq(t, s, {});
    CHECK(d.best() == doctest::Approx(1.0));
    CHECK(d.delta() == doctest::Approx(0.2));

    // exact zero-delta window
    const std::vector<UncertainValue> s2{{1.0, 0.0}, {5.0, 0.0}};
    CHECK(ued_subseq(t, s2, {}) == UncertainValue{0.0, 0.0});

    // degenerate slide
    CHECK(ued_subseq(t, t, {}) == ued(t, t));

    CHECK_THROWS_AS(ued_subseq(s, t, {}), std::invalid_argument);
}

TEST_CASE("ued_subseq equals the left-to-right running minimum") {
    // The simple ordering is total, so its minimum also beats every window
    // globally. The stochastic and interval comparators are not transitive,
    // so only the sequential scan itself is well-defined for them.
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::size_t> t_len(4, 32);
    for (const auto kind : {OrderingKind::Simple, OrderingKind::Stochastic, OrderingKind::Interval}) {
        const OrderingStrategy ord{kind, 100};
        for (int i = 0; i < 40; ++i) {
            const auto t = random_series(rng, t_len(rng), 1.5);
            const std::size_t s_len = std::uniform_int_distribution<std::size_t>(1, t.size())(rng);
            const auto s = random_series(rng, s_len, 1.5);
            const UncertainValue min = ued_subseq(t, s, ord);

            UncertainValue running{0.0, 0.0};
            for (std::size_t off = 0; off + s.size() <= t.size(); ++off) {
                const UncertainValue d =
                    ued(s, std::span<const UncertainValue>(t).subspan(off, s.size()));
                if (off == 0 || compare(d, running, ord) == Ordering3::Less) running = d;
                if (kind == OrderingKind::Simple) {
                    CHECK(compare(d, min, ord) != Ordering3::Less);
                }
            }
            CHECK(min == running);
        }
    }
}

TEST_CASE("dust_point") {
    CHECK(dust_point({1.0, 0.5}, {2.0, 0.25}, DustFlavor::Uniform) == doctest::Approx(1.0));
    CHECK(dust_point({1.0, 0.5}, {2.0, 0.25}, DustFlavor::Normal) == doctest::Approx(0.8));
    CHECK(dust_point({3.0, 0.7}, {3.0, 0.2}, DustFlavor::Uniform) == 0.0);
    CHECK(dust_point({3.0, 0.7}, {3.0, 0.2}, DustFlavor::Normal) == 0.0);
    // both deltas zero: plain absolute gap
    CHECK(dust_point({1.0, 0.0}, {4.0, 0.0}, DustFlavor::Uniform) == doctest::Approx(3.0));
}

TEST_CASE("dust aggregation") {
    const std::vector<UncertainValue> a{{1.0, 0.5}, {1.0, 0.5}};
    const std::vector<UncertainValue> b{{2.0, 0.25}, {2.0, 0.25}};
    CHECK(dust(a, b, DustFlavor::Uniform) == doctest::Approx(1.41421).epsilon(1e-5));
    CHECK(dust(a, a, DustFlavor::Uniform) == 0.0);

    const std::vector<UncertainValue> single_a{{1.0, 0.5}};
    const std::vector<UncertainValue> single_b{{2.0, 0.25}};
    CHECK(dust(single_a, single_b, DustFlavor::Normal) ==
          doctest::Approx(dust_point(single_a[0], single_b[0], DustFlavor::Normal)));
    CHECK_THROWS_AS(dust(a, single_b, DustFlavor::Uniform), std::invalid_argument);
}

TEST_CASE("ed_sq") {
    const std::vector<double> a{0.0, 0.0};
    const std::vector<double> b{3.0, 4.0};
    CHECK(ed_sq(a, b) == doctest::Approx(25.0));
    CHECK(ed_sq(a, a) == 0.0);
    CHECK(ed_sq(std::vector<double>{2.0}, std::vector<double>{5.0}) == doctest::Approx(9.0));
    CHECK_THROWS_AS(ed_sq(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("measure_subseq baselines carry no uncertainty") {
    std::mt19937 rng(41);
    const auto t = random_series(rng, 12, 1.0);
    const auto s = random_series(rng, 4, 1.0);
    for (const auto measure : {Measure::Ed, Measure::DustUniform, Measure::DustNormal}) {
        const UncertainValue d = measure_subseq(t, s, measure, {OrderingKind::Natural});
        CHECK(d.delta() == 0.0);
        CHECK(d.best() >= 0.0);
    }
}

TEST_CASE("measure_subseq ed argmin coincides with ued argmin at zero delta") {
    std::mt19937 rng(43);
    for (int i = 0; i < 50; ++i) {
        const auto t = random_series(rng, 16, 0.0);
        const auto s = random_series(rng, 5, 0.0);
        const UncertainValue via_ued = ued_subseq(t, s, {OrderingKind::Simple});
        const UncertainValue via_ed = measure_subseq(t, s, Measure::Ed, {OrderingKind::Natural});
        CHECK(via_ued.best() == doctest::Approx(via_ed.best()).epsilon(1e-9));
    }
}

TEST_CASE("measure names round-trip") {
    for (const auto m : {Measure::Ed, Measure::Ued, Measure::DustUniform, Measure::DustNormal}) {
        CHECK(measure_from_string(to_string(m)) == m);
    }
    CHECK_THROWS_AS(measure_from_string("manhattan"), std::invalid_argument);
}
