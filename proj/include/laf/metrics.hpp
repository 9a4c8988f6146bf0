#ifndef LAF_METRICS_HPP
#define LAF_METRICS_HPP

#include <span>
#include <string_view>
#include <vector>

#include "laf/mixture.hpp"

namespace laf {

using Embedding = std::vector<double>;

// Cosine similarity in [-1, 1]. Throws ZeroNorm when either vector has
// near-zero length, DimensionMismatch on unequal sizes.
double clip_t(std::span<const double> a, std::span<const double> b);

// exp(mean_i KL(p_i || mean_j p_j)) over class-probability rows, natural
// logarithm, 0 * log 0 = 0. Rows must be same-length vectors of
// non-negatives summing to 1 within 1e-9 (else NotAProbability). Result is
// always in [1, K] for K classes.
double inception_score(const std::vector<std::vector<double>>& class_probs);

// Mean absolute difference between two equal-length vectors.
double l1(std::span<const double> a, std::span<const double> b);

// Relative drift of the output towards an external reference:
//   (sim(out, ref) - sim(out, in)) / sim(out, in)
// Positive when the edit moved the output closer to the reference than to
// its own input. Throws DivisionByNearZero when |sim(out, in)| < 1e-9.
double clip_d(std::span<const double> emb_out, std::span<const double> emb_in,
              std::span<const double> emb_ref);

// Toy embedding space shared by images and text: a vector embeds as its
// clean-mixture component responsibilities, a phrase as the one-hot of its
// matched component. Same dimension (number of components), so cosines
// between them are meaningful.
Embedding toy_embed(std::span<const double> z, const ScoreModel& model);
Embedding toy_embed_phrase(std::string_view phrase, const ScoreModel& model);

struct EvalReport {
    double clip_t = 0.0; // raw cosine; reports also carry it scaled x100
    double inception_score = 1.0;
    double l1 = 0.0;
    double clip_d = 0.0;
    int sample_count = 0;
};

} // namespace laf

#endif
