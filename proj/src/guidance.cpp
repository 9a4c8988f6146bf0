#include "laf/guidance.hpp"

#include <stdexcept>
#include <string>

#include "laf/errors.hpp"

namespace laf {

void GuidanceParams::validate() const {
    if (w < 0.0 || eta < 0.0)
        throw std::invalid_argument(
            "guidance scales must be non-negative (w=" + std::to_string(w) +
            ", eta=" + std::to_string(eta) + ")");
}

namespace {

void check_pair(const NoisePrediction& a, const NoisePrediction& b,
                const char* what) {
    if (a.values.size() != b.values.size())
        throw DimensionMismatch(std::string(what) + ": " +
                                std::to_string(a.values.size()) + " vs " +
                                std::to_string(b.values.size()));
    if (a.t != b.t)
        throw TimestepOrder(std::string(what) + ": predictions for t=" +
                            std::to_string(a.t) + " and t=" +
                            std::to_string(b.t) + " cannot be combined");
}

} // namespace

NoisePrediction compose_cfg(const NoisePrediction& uncond,
                            const NoisePrediction& cond, double w) {
    check_pair(uncond, cond, "compose_cfg");
    NoisePrediction out = cond;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += w * (cond.values[i] - uncond.values[i]);
    return out;
}

NoisePrediction compose_negative(const NoisePrediction& uncond,
                                 const NoisePrediction& cond_neg, double eta) {
    check_pair(uncond, cond_neg, "compose_negative");
    NoisePrediction out = cond_neg;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] -= eta * (cond_neg.values[i] - uncond.values[i]);
    return out;
}

NoisePrediction compose_laf(const NoisePrediction& uncond,
                            const NoisePrediction& pos,
                            const NoisePrediction* neg,
                            const GuidanceParams& params) {
    std::span<const NoisePrediction> negs;
    if (neg) negs = std::span<const NoisePrediction>(neg, 1);
    return compose_laf(uncond, pos, negs, params);
}

NoisePrediction compose_laf(const NoisePrediction& uncond,
                            const NoisePrediction& pos,
                            std::span<const NoisePrediction> negs,
                            const GuidanceParams& params) {
    check_pair(uncond, pos, "compose_laf");
    for (const NoisePrediction& neg : negs)
        check_pair(uncond, neg, "compose_laf");

    // Terms are applied only when active so that eta = 0 is bit-identical
    // to pure positive guidance and w = eta = 0 returns uncond unchanged.
    NoisePrediction out = uncond;
    if (params.w != 0.0)
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += params.w * (pos.values[i] - uncond.values[i]);
    if (params.eta != 0.0)
        for (const NoisePrediction& neg : negs)
            for (std::size_t i = 0; i < out.values.size(); ++i)
                out.values[i] -=
                    params.eta * (neg.values[i] - uncond.values[i]);
    return out;
}

} // namespace laf
