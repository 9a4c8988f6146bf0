#ifndef LAF_GUIDANCE_HPP
#define LAF_GUIDANCE_HPP

#include <span>
#include <vector>

namespace laf {

// One denoiser output: predicted noise for a latent at timestep t.
struct NoisePrediction {
    std::vector<double> values;
    int t = 0;
};

struct GuidanceParams {
    double w = 10.0;   // positive guidance scale
    double eta = 2.5;  // forgetting (negative guidance) scale

    void validate() const; // both must be >= 0
};

// Classifier-free guidance:  cond + w * (cond - uncond).
NoisePrediction compose_cfg(const NoisePrediction& uncond,
                            const NoisePrediction& cond, double w);

// Plain negative guidance:   cond_neg - eta * (cond_neg - uncond).
NoisePrediction compose_negative(const NoisePrediction& uncond,
                                 const NoisePrediction& cond_neg, double eta);

// Locate-and-forget composition around the unconditional prediction:
//   uncond + w * (pos - uncond) - eta * (neg - uncond).
// The w term is skipped entirely when w == 0 and the eta term when eta == 0
// or no negative is given, so those cases are bit-identical to the shorter
// formulas (eta == 0 reproduces compose_cfg built on uncond; w == eta == 0
// returns uncond unchanged).
NoisePrediction compose_laf(const NoisePrediction& uncond,
                            const NoisePrediction& pos,
                            const NoisePrediction* neg,
                            const GuidanceParams& params);

// Several forgetting elements subtract one eta-term each (no normalization):
//   uncond + w * (pos - uncond) - eta * sum_k (neg_k - uncond).
NoisePrediction compose_laf(const NoisePrediction& uncond,
                            const NoisePrediction& pos,
                            std::span<const NoisePrediction> negs,
                            const GuidanceParams& params);

} // namespace laf

#endif
