#pragma once

#include <span>
#include <string>
#include <vector>

#include "ust/shapelet.hpp"

namespace ust {

// Fitted per-class, per-feature Gaussian statistics shared by GNB and UGNB.
struct GaussianNBModel {
    std::vector<std::string> classes;
    std::vector<double> priors;
    std::vector<std::vector<double>> mean;      // [class][feature]
    std::vector<std::vector<double>> variance;  // [class][feature], floored
    double variance_floor = 0.0;

    std::size_t feature_count() const { return mean.empty() ? 0 : mean.front().size(); }
};

enum class ClassifierKind { Gnb, Ugnb };

// [b1..bk, d1..dk] layout for the flattened GNB input.
std::vector<double> flatten(std::span<const FeatureValue> row);

GaussianNBModel gnb_fit(const std::vector<std::vector<double>>& features,
                        std::span<const std::string> labels);

std::vector<double> gnb_predict_proba(const GaussianNBModel& model, std::span<const double> x);

// Uncertainty-aware fit: per-sample Gaussians N(best, delta^2) are
// moment-matched, inflating each class variance by the mean squared delta.
GaussianNBModel ugnb_fit(const std::vector<std::vector<FeatureValue>>& features,
                         std::span<const std::string> labels);

// Convolution likelihood N(best; mean, variance + delta^2), log-space.
std::vector<double> ugnb_predict_proba(const GaussianNBModel& model,
                                       std::span<const FeatureValue> x);

std::string predict_label(const GaussianNBModel& model, std::span<const double> proba);

std::string to_string(ClassifierKind kind);
ClassifierKind classifier_from_string(const std::string& name);

}  // namespace ust
