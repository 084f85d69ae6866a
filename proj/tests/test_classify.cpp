#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ust/classify.hpp"

using namespace ust;

namespace {

const std::vector<std::string> two_class_labels{"A", "A", "B", "B"};

std::vector<std::vector<FeatureValue>> uncertain_rows(
    std::initializer_list<std::initializer_list<FeatureValue>> rows) {
    std::vector<std::vector<FeatureValue>> out;
    for (const auto& row : rows) out.emplace_back(row);
    return out;
}

}  // namespace

TEST_CASE("flatten") {
    const std::vector<FeatureValue> row{{1.0, 0.1}, {2.0, 0.2}};
    CHECK(flatten(row) == std::vector<double>{1.0, 2.0, 0.1, 0.2});
    CHECK(flatten(std::vector<FeatureValue>{{3.0, 0.5}}) == std::vector<double>{3.0, 0.5});
    const std::vector<FeatureValue> certain{{4.0, 0.0}, {5.0, 0.0}};
    CHECK(flatten(certain) == std::vector<double>{4.0, 5.0, 0.0, 0.0});
    CHECK_THROWS_AS(flatten(std::vector<FeatureValue>{}), std::invalid_argument);
}

TEST_CASE("gnb_fit moments and priors") {
    const std::vector<std::vector<double>> x{{0.0}, {2.0}, {5.0}, {5.0}, {5.0}};
    const std::vector<std::string> y{"A", "A", "B", "B", "B"};
    const GaussianNBModel model = gnb_fit(x, y);
    REQUIRE(model.classes == std::vector<std::string>{"A", "B"});
    CHECK(model.priors[0] == doctest::Approx(0.4));
    CHECK(model.priors[1] == doctest::Approx(0.6));
    CHECK(model.mean[0][0] == doctest::Approx(1.0));
    CHECK(model.variance[0][0] == doctest::Approx(1.0 + model.variance_floor));
    // one effective sample spread of zero: variance equals the floor
    CHECK(model.variance[1][0] == doctest::Approx(model.variance_floor));
    CHECK(model.variance_floor > 0.0);
}

TEST_CASE("gnb_fit rejects a single class") {
    const std::vector<std::vector<double>> x{{0.0}, {1.0}};
    CHECK_THROWS_AS(gnb_fit(x, std::vector<std::string>{"A", "A"}), std::invalid_argument);
}

TEST_CASE("gnb_predict_proba") {
    const std::vector<std::vector<double>> x{{0.0}, {0.2}, {100.0}, {100.2}};
    const GaussianNBModel model = gnb_fit(x, two_class_labels);

    const auto at_a = gnb_predict_proba(model, std::vector<double>{0.1});
    CHECK(at_a[0] > 0.99);

    const auto midway = gnb_predict_proba(model, std::vector<double>{50.1});
    CHECK(midway[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(midway[1] == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(gnb_predict_proba(model, std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("ugnb_fit inflates variance with the mean squared delta") {
    const auto rows = uncertain_rows({{{0.0, 1.0}}, {{0.0, 1.0}}, {{-1.0, 0.0}}, {{1.0, 0.0}}});
    const GaussianNBModel model = ugnb_fit(rows, two_class_labels);
    CHECK(model.mean[0][0] == doctest::Approx(0.0));
    CHECK(model.variance[0][0] == doctest::Approx(1.0 + model.variance_floor));
    CHECK(model.mean[1][0] == doctest::Approx(0.0));
    CHECK(model.variance[1][0] == doctest::Approx(1.0 + model.variance_floor));
}

TEST_CASE("ugnb zero-delta fit equals gnb on the best guesses") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<FeatureValue>> rows;
        std::vector<std::vector<double>> flat;
        std::vector<std::string> labels;
        for (int i = 0; i < 12; ++i) {
            const double a = val(rng), b = val(rng);
            rows.push_back({{a, 0.0}, {b, 0.0}});
            flat.push_back({a, b});
            labels.push_back(i % 2 == 0 ? "A" : "B");
        }
        const GaussianNBModel u = ugnb_fit(rows, labels);
        const GaussianNBModel g = gnb_fit(flat, labels);
        for (std::size_t c = 0; c < 2; ++c) {
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(u.mean[c][j] == doctest::Approx(g.mean[c][j]).epsilon(1e-9));
                CHECK(u.variance[c][j] == doctest::Approx(g.variance[c][j]).epsilon(1e-9));
            }
        }
        // and the predictions agree element-wise
        for (const auto& row : rows) {
            const auto pu = ugnb_predict_proba(u, row);
            const auto pg =
                gnb_predict_proba(g, std::vector<double>{row[0].best, row[1].best});
            for (std::size_t c = 0; c < 2; ++c) {
                CHECK(pu[c] == doctest::Approx(pg[c]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("ugnb_predict_proba standard-normal density check") {
    // class A fitted to mean 0, variance 1
    const auto rows = uncertain_rows({{{-1.0, 0.0}}, {{1.0, 0.0}}, {{99.0, 0.0}}, {{101.0, 0.0}}});
    const GaussianNBModel model = ugnb_fit(rows, two_class_labels);
    REQUIRE(model.variance[0][0] == doctest::Approx(1.0).epsilon(1e-6));
    // log-likelihood of class A at 0 +/- 0 corresponds to density 0.398942
    const double density =
        std::exp(-0.5 * std::log(2.0 * 3.14159265358979323846 * model.variance[0][0]));
    CHECK(density == doctest::Approx(0.398942).epsilon(1e-4));
    const auto proba = ugnb_predict_proba(model, std::vector<FeatureValue>{{0.0, 0.0}});
    CHECK(proba[0] > 0.999);
}

TEST_CASE("large test delta washes out the evidence") {
    const std::vector<std::string> labels{"A", "A", "B", "B", "B"};
    const auto three_rows = uncertain_rows(
        {{{-1.0, 0.0}}, {{1.0, 0.0}}, {{9.0, 0.0}}, {{11.0, 0.0}}, {{10.0, 0.0}}});
    const GaussianNBModel model = ugnb_fit(three_rows, labels);
    const auto washed = ugnb_predict_proba(model, std::vector<FeatureValue>{{0.0, 1e6}});
    CHECK(washed[0] == doctest::Approx(model.priors[0]).epsilon(1e-3));
    CHECK(washed[1] == doctest::Approx(model.priors[1]).epsilon(1e-3));
}

TEST_CASE("posteriors are normalized distributions") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> val(-5.0, 5.0);
    std::uniform_real_distribution<double> dev(0.0, 3.0);
    std::vector<std::vector<FeatureValue>> rows;
    std::vector<std::string> labels;
    for (int i = 0; i < 30; ++i) {
        rows.push_back({{val(rng), dev(rng)}, {val(rng), dev(rng)}, {val(rng), dev(rng)}});
        labels.push_back(i % 3 == 0 ? "A" : (i % 3 == 1 ? "B" : "C"));
    }
    const GaussianNBModel model = ugnb_fit(rows, labels);
    for (int i = 0; i < 100; ++i) {
        const std::vector<FeatureValue> x{{val(rng), dev(rng)}, {val(rng), dev(rng)},
                                          {val(rng), dev(rng)}};
        const auto proba = ugnb_predict_proba(model, x);
        double sum = 0.0;
        for (const double p : proba) {
            CHECK(p >= 0.0);
            sum += p;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("growing delta moves the posterior toward the prior") {
    const auto rows = uncertain_rows({{{-1.0, 0.0}}, {{1.0, 0.0}}, {{9.0, 0.0}}, {{11.0, 0.0}}});
    const GaussianNBModel model = ugnb_fit(rows, two_class_labels);
    double previous_kl = 1e18;
    for (const double delta : {0.0, 1.0, 4.0, 16.0, 64.0, 256.0}) {
        const auto proba = ugnb_predict_proba(model, std::vector<FeatureValue>{{0.0, delta}});
        double kl = 0.0;
        for (std::size_t c = 0; c < proba.size(); ++c) {
            if (proba[c] > 0.0) kl += proba[c] * std::log(proba[c] / model.priors[c]);
        }
        CHECK(kl <= previous_kl + 1e-12);
        previous_kl = kl;
    }
}

TEST_CASE("predict_label picks the argmax class") {
    const auto rows = uncertain_rows({{{0.0, 0.0}}, {{0.1, 0.0}}, {{5.0, 0.0}}, {{5.1, 0.0}}});
    const GaussianNBModel model = ugnb_fit(rows, two_class_labels);
    const auto proba = ugnb_predict_proba(model, std::vector<FeatureValue>{{5.05, 0.0}});
    CHECK(predict_label(model, proba) == "B");
}

TEST_CASE("classifier names round-trip") {
    CHECK(classifier_from_string("gnb") == ClassifierKind::Gnb);
    CHECK(classifier_from_string("ugnb") == ClassifierKind::Ugnb);
    CHECK(to_string(ClassifierKind::Ugnb) == "ugnb");
    CHECK_THROWS_AS(classifier_from_string("svm"), std::invalid_argument);
}
