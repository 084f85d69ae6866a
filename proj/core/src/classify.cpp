#include "ust/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ust {

namespace {

std::vector<std::string> distinct_sorted(std::span<const std::string> labels) {
    std::vector<std::string> classes(labels.begin(), labels.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

std::size_t class_index(const std::vector<std::string>& classes, const std::string& label) {
    const auto it = std::lower_bound(classes.begin(), classes.end(), label);
    return static_cast<std::size_t>(it - classes.begin());
}

// Shared moment fitting: `value` and `sq_delta` extract the best guess and
// the squared uncertainty of sample feature (i, j).
template <typename Value, typename SqDelta>
GaussianNBModel fit_moments(std::size_t n, std::size_t d, std::span<const std::string> labels,
                            Value value, SqDelta sq_delta) {
    if (n == 0 || n != labels.size()) {
        throw std::invalid_argument("fit: need matching non-empty features and labels");
    }
    GaussianNBModel model;
    model.classes = distinct_sorted(labels);
    const std::size_t c = model.classes.size();
    if (c < 2) {
        throw std::invalid_argument("fit: need at least 2 classes");
    }

    std::vector<std::size_t> counts(c, 0);
    model.mean.assign(c, std::vector<double>(d, 0.0));
    model.variance.assign(c, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ci = class_index(model.classes, labels[i]);
        ++counts[ci];
        for (std::size_t j = 0; j < d; ++j) {
            model.mean[ci][j] += value(i, j);
        }
    }
    for (std::size_t ci = 0; ci < c; ++ci) {
        for (std::size_t j = 0; j < d; ++j) {
            model.mean[ci][j] /= static_cast<double>(counts[ci]);
        }
    }
    // Population variance of best guesses plus the mean squared delta.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ci = class_index(model.classes, labels[i]);
        for (std::size_t j = 0; j < d; ++j) {
            const double gap = value(i, j) - model.mean[ci][j];
            model.variance[ci][j] += gap * gap + sq_delta(i, j);
        }
    }
    double max_variance = 0.0;
    for (std::size_t ci = 0; ci < c; ++ci) {
        for (std::size_t j = 0; j < d; ++j) {
            model.variance[ci][j] /= static_cast<double>(counts[ci]);
            max_variance = std::max(max_variance, model.variance[ci][j]);
        }
    }
    model.variance_floor = max_variance > 0.0 ? 1e-9 * max_variance : 1e-9;
    for (auto& row : model.variance) {
        for (auto& v : row) v += model.variance_floor;
    }

    model.priors.resize(c);
    for (std::size_t ci = 0; ci < c; ++ci) {
        model.priors[ci] = static_cast<double>(counts[ci]) / static_cast<double>(n);
    }
    return model;
}

// log N(x; mean, var)
double log_gaussian(double x, double mean, double var) {
    const double gap = x - mean;
    return -0.5 * std::log(2.0 * std::numbers::pi * var) - gap * gap / (2.0 * var);
}

std::vector<double> normalize_log_posterior(std::vector<double> log_post) {
    const double max = *std::max_element(log_post.begin(), log_post.end());
    double sum = 0.0;
    for (auto& lp : log_post) {
        lp = std::exp(lp - max);
        sum += lp;
    }
    for (auto& lp : log_post) lp /= sum;
    return log_post;
}

}  // namespace

std::vector<double> flatten(std::span<const FeatureValue> row) {
    if (row.empty()) {
        throw std::invalid_argument("flatten: empty feature row");
    }
    std::vector<double> flat;
    flat.reserve(2 * row.size());
    for (const auto& f : row) flat.push_back(f.best);
    for (const auto& f : row) flat.push_back(f.delta);
    return flat;
}

GaussianNBModel gnb_fit(const std::vector<std::vector<double>>& features,
                        std::span<const std::string> labels) {
    const std::size_t d = features.empty() ? 0 : features.front().size();
    return fit_moments(
        features.size(), d, labels, [&](std::size_t i, std::size_t j) { return features[i][j]; },
        [](std::size_t, std::size_t) { return 0.0; });
}

std::vector<double> gnb_predict_proba(const GaussianNBModel& model, std::span<const double> x) {
    if (x.size() != model.feature_count()) {
        throw std::invalid_argument("gnb_predict_proba: expected " +
                                    std::to_string(model.feature_count()) + " features, got " +
                                    std::to_string(x.size()));
    }
    std::vector<double> log_post(model.classes.size());
    for (std::size_t ci = 0; ci < model.classes.size(); ++ci) {
        double lp = std::log(model.priors[ci]);
        for (std::size_t j = 0; j < x.size(); ++j) {
            lp += log_gaussian(x[j], model.mean[ci][j], model.variance[ci][j]);
        }
        log_post[ci] = lp;
    }
    return normalize_log_posterior(std::move(log_post));
}

GaussianNBModel ugnb_fit(const std::vector<std::vector<FeatureValue>>& features,
                         std::span<const std::string> labels) {
    const std::size_t d = features.empty() ? 0 : features.front().size();
    return fit_moments(
        features.size(), d, labels,
        [&](std::size_t i, std::size_t j) { return features[i][j].best; },
        [&](std::size_t i, std::size_t j) {
            return features[i][j].delta * features[i][j].delta;
        });
}

std::vector<double> ugnb_predict_proba(const GaussianNBModel& model,
                                       std::span<const FeatureValue> x) {
    if (x.size() != model.feature_count()) {
        throw std::invalid_argument("ugnb_predict_proba: expected " +
                                    std::to_string(model.feature_count()) + " features, got " +
                                    std::to_string(x.size()));
    }
    std::vector<double> log_post(model.classes.size());
    for (std::size_t ci = 0; ci < model.classes.size(); ++ci) {
        double lp = std::log(model.priors[ci]);
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double var = model.variance[ci][j] + x[j].delta * x[j].delta;
            lp += log_gaussian(x[j].best, model.mean[ci][j], var);
        }
        log_post[ci] = lp;
    }
    return normalize_log_posterior(std::move(log_post));
}

std::string predict_label(const GaussianNBModel& model, std::span<const double> proba) {
    const auto it = std::max_element(proba.begin(), proba.end());
    return model.classes[static_cast<std::size_t>(it - proba.begin())];
}

std::string to_string(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::Gnb: return "gnb";
        case ClassifierKind::Ugnb: return "ugnb";
    }
    throw std::logic_error("to_string: unknown classifier");
}

ClassifierKind classifier_from_string(const std::string& name) {
    if (name == "gnb") return ClassifierKind::Gnb;
    if (name == "ugnb") return ClassifierKind::Ugnb;
    throw std::invalid_argument("unknown classifier '" + name + "' (expected gnb|ugnb)");
}

}  // namespace ust
