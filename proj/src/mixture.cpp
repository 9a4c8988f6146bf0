#include "laf/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "laf/errors.hpp"
#include "laf/tokenize.hpp"

namespace laf {

namespace {

constexpr double kWeightTolerance = 1e-9;

// log N(z; mean, s2 * I) for isotropic covariance.
double log_gaussian(std::span<const double> z, std::span<const double> mean,
                    double scale, double s2) {
    const double d = static_cast<double>(z.size());
    double sq = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double diff = z[i] - scale * mean[i];
        sq += diff * diff;
    }
    return -0.5 * d * std::log(2.0 * std::numbers::pi * s2) - sq / (2.0 * s2);
}

// Softmax of log-weights, numerically safe.
std::vector<double> softmax(std::vector<double> logits) {
    const double max_logit = *std::max_element(logits.begin(), logits.end());
    double total = 0.0;
    for (double& v : logits) {
        v = std::exp(v - max_logit);
        total += v;
    }
    for (double& v : logits) v /= total;
    return logits;
}

} // namespace

ScoreModel::ScoreModel(int dimension, std::vector<MixtureComponent> components)
    : dimension_(dimension), components_(std::move(components)) {
    if (dimension_ < 1)
        throw std::invalid_argument("model dimension must be >= 1");
    if (components_.empty())
        throw std::invalid_argument("model needs at least one component");
    double weight_sum = 0.0;
    for (const MixtureComponent& c : components_) {
        if (c.label.empty() ||
            c.label.find_first_of(" \t\n") != std::string::npos)
            throw std::invalid_argument("component label must be one word");
        if (c.mean.size() != static_cast<std::size_t>(dimension_))
            throw DimensionMismatch("component '" + c.label + "' mean has " +
                                    std::to_string(c.mean.size()) +
                                    " entries, model dimension is " +
                                    std::to_string(dimension_));
        if (!(c.variance > 0.0))
            throw std::invalid_argument("component '" + c.label +
                                        "' variance must be > 0");
        if (!(c.weight > 0.0))
            throw std::invalid_argument("component '" + c.label +
                                        "' weight must be > 0");
        weight_sum += c.weight;
    }
    if (std::abs(weight_sum - 1.0) > kWeightTolerance)
        throw std::invalid_argument("component weights sum to " +
                                    std::to_string(weight_sum) + ", not 1");
    for (std::size_t i = 0; i < components_.size(); ++i)
        for (std::size_t j = i + 1; j < components_.size(); ++j)
            if (components_[i].label == components_[j].label)
                throw std::invalid_argument("duplicate component label '" +
                                            components_[i].label + "'");
}

std::size_t ScoreModel::component_index(std::string_view label) const {
    const std::string key = to_lower(label);
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].label == key) return i;
    std::string known;
    for (const MixtureComponent& c : components_) {
        if (!known.empty()) known += ", ";
        known += c.label;
    }
    throw ConceptUnknown("no component labelled '" + key + "' (have: " +
                         known + ")");
}

std::size_t ScoreModel::match_phrase(std::string_view phrase) const {
    std::istringstream words(to_lower(phrase));
    std::vector<std::string> parts;
    for (std::string word; words >> word;) parts.push_back(word);

    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (std::find(parts.begin(), parts.end(), components_[i].label) !=
            parts.end())
            hits.push_back(i);

    if (hits.empty()) {
        std::string known;
        for (const MixtureComponent& c : components_) {
            if (!known.empty()) known += ", ";
            known += c.label;
        }
        throw ConceptUnknown("phrase '" + std::string(phrase) +
                             "' matches no component label (have: " + known +
                             ")");
    }
    if (hits.size() > 1) {
        std::string which;
        for (std::size_t i : hits) {
            if (!which.empty()) which += ", ";
            which += components_[i].label;
        }
        throw ConceptAmbiguous("phrase '" + std::string(phrase) +
                               "' matches several components: " + which);
    }
    return hits.front();
}

void ScoreModel::check_dim(std::span<const double> z) const {
    if (z.size() != static_cast<std::size_t>(dimension_))
        throw DimensionMismatch("vector has " + std::to_string(z.size()) +
                                " entries, model dimension is " +
                                std::to_string(dimension_));
}

std::vector<double> ScoreModel::epsilon(
    std::span<const double> z, double alpha_bar,
    std::optional<std::size_t> component) const {
    check_dim(z);
    if (!(alpha_bar > 0.0) || alpha_bar > 1.0)
        throw std::invalid_argument("alpha_bar must be in (0, 1]");
    const double scale = std::sqrt(alpha_bar);
    const double noise_scale = std::sqrt(1.0 - alpha_bar);

    auto component_eps = [&](const MixtureComponent& c,
                             std::vector<double>& out, double coeff) {
        const double s2 = alpha_bar * c.variance + (1.0 - alpha_bar);
        for (std::size_t i = 0; i < z.size(); ++i)
            out[i] += coeff * noise_scale * (z[i] - scale * c.mean[i]) / s2;
    };

    std::vector<double> eps(z.size(), 0.0);
    if (component) {
        if (*component >= components_.size())
            throw std::out_of_range("component index out of range");
        component_eps(components_[*component], eps, 1.0);
        return eps;
    }

    // Unconditional: responsibility-weighted blend under the noised mixture.
    std::vector<double> logits(components_.size());
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const MixtureComponent& c = components_[k];
        const double s2 = alpha_bar * c.variance + (1.0 - alpha_bar);
        logits[k] = std::log(c.weight) + log_gaussian(z, c.mean, scale, s2);
    }
    const std::vector<double> resp = softmax(std::move(logits));
    for (std::size_t k = 0; k < components_.size(); ++k)
        component_eps(components_[k], eps, resp[k]);
    return eps;
}

double ScoreModel::log_density(std::span<const double> z) const {
    check_dim(z);
    double max_term = -std::numeric_limits<double>::infinity();
    std::vector<double> terms(components_.size());
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const MixtureComponent& c = components_[k];
        terms[k] =
            std::log(c.weight) + log_gaussian(z, c.mean, 1.0, c.variance);
        max_term = std::max(max_term, terms[k]);
    }
    double total = 0.0;
    for (double term : terms) total += std::exp(term - max_term);
    return max_term + std::log(total);
}

std::vector<double> ScoreModel::responsibilities(
    std::span<const double> z) const {
    check_dim(z);
    std::vector<double> logits(components_.size());
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const MixtureComponent& c = components_[k];
        logits[k] =
            std::log(c.weight) + log_gaussian(z, c.mean, 1.0, c.variance);
    }
    return softmax(std::move(logits));
}

ScoreModel ScoreModel::from_json_text(std::string_view text,
                                      const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        const int dimension = doc.at("dimension").get<int>();
        std::vector<MixtureComponent> components;
        for (const auto& c : doc.at("components")) {
            MixtureComponent mc;
            mc.label = to_lower(c.at("label").get<std::string>());
            mc.mean = c.at("mean").get<std::vector<double>>();
            mc.variance = c.at("variance").get<double>();
            mc.weight = c.at("weight").get<double>();
            components.push_back(std::move(mc));
        }
        return ScoreModel(dimension, std::move(components));
    } catch (const nlohmann::json::exception& e) {
        throw IoError("model " + origin + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError("model " + origin + ": " + e.what());
    } catch (const DimensionMismatch& e) {
        throw IoError("model " + origin + ": " + e.what());
    }
}

ScoreModel ScoreModel::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open model '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str(), "'" + path + "'");
}

std::string ScoreModel::to_json_string(int indent) const {
    nlohmann::json doc;
    doc["dimension"] = dimension_;
    auto& list = doc["components"] = nlohmann::json::array();
    for (const MixtureComponent& c : components_)
        list.push_back({{"label", c.label},
                        {"mean", c.mean},
                        {"variance", c.variance},
                        {"weight", c.weight}});
    return doc.dump(indent);
}

} // namespace laf
