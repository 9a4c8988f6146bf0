#include "laf/metrics.hpp"

#include <cmath>
#include <string>

#include "laf/errors.hpp"

namespace laf {

namespace {

constexpr double kNormFloor = 1e-12;
constexpr double kProbTolerance = 1e-9;

void check_sizes(std::span<const double> a, std::span<const double> b,
                 const char* what) {
    if (a.size() != b.size())
        throw DimensionMismatch(std::string(what) + ": " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

} // namespace

double clip_t(std::span<const double> a, std::span<const double> b) {
    check_sizes(a, b, "clip_t");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    na = std::sqrt(na);
    nb = std::sqrt(nb);
    if (na < kNormFloor || nb < kNormFloor)
        throw ZeroNorm("clip_t: zero-length embedding");
    return dot / (na * nb);
}

double inception_score(const std::vector<std::vector<double>>& class_probs) {
    if (class_probs.empty())
        throw NotAProbability("inception_score: empty batch");
    const std::size_t k = class_probs.front().size();
    if (k == 0) throw NotAProbability("inception_score: zero classes");

    for (const auto& row : class_probs) {
        if (row.size() != k)
            throw DimensionMismatch("inception_score: ragged rows");
        double total = 0.0;
        for (double p : row) {
            if (p < 0.0)
                throw NotAProbability("inception_score: negative probability");
            total += p;
        }
        if (std::abs(total - 1.0) > kProbTolerance)
            throw NotAProbability("inception_score: row sums to " +
                                  std::to_string(total));
    }

    std::vector<double> marginal(k, 0.0);
    for (const auto& row : class_probs)
        for (std::size_t j = 0; j < k; ++j) marginal[j] += row[j];
    for (double& m : marginal) m /= static_cast<double>(class_probs.size());

    // mean KL(p_i || marginal), with the 0 * log 0 = 0 convention.
    double mean_kl = 0.0;
    for (const auto& row : class_probs) {
        double kl = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (row[j] <= 0.0) continue;
            kl += row[j] * (std::log(row[j]) - std::log(marginal[j]));
        }
        mean_kl += kl;
    }
    mean_kl /= static_cast<double>(class_probs.size());
    return std::exp(mean_kl);
}

double l1(std::span<const double> a, std::span<const double> b) {
    check_sizes(a, b, "l1");
    if (a.empty()) throw DimensionMismatch("l1: empty vectors");
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += std::abs(a[i] - b[i]);
    return total / static_cast<double>(a.size());
}

double clip_d(std::span<const double> emb_out, std::span<const double> emb_in,
              std::span<const double> emb_ref) {
    const double sim_ref = clip_t(emb_out, emb_ref);
    const double sim_in = clip_t(emb_out, emb_in);
    if (std::abs(sim_in) < 1e-9)
        throw DivisionByNearZero("clip_d: output is orthogonal to input");
    return (sim_ref - sim_in) / sim_in;
}

Embedding toy_embed(std::span<const double> z, const ScoreModel& model) {
    return model.responsibilities(z);
}

Embedding toy_embed_phrase(std::string_view phrase, const ScoreModel& model) {
    Embedding embedding(model.components().size(), 0.0);
    embedding[model.match_phrase(phrase)] = 1.0;
    return embedding;
}

} // namespace laf
