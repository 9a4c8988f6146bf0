#ifndef LAF_SAMPLER_HPP
#define LAF_SAMPLER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laf/guidance.hpp"
#include "laf/locate.hpp"
#include "laf/mixture.hpp"
#include "laf/rng.hpp"
#include "laf/schedule.hpp"

namespace laf {

struct LatentState {
    std::vector<double> z;
    int t = 0; // current noise timestep; 0 means clean
};

// Full denoising record: states.front() is the start latent, states.back()
// the clean output. seed/params echo how the run was produced.
struct Trajectory {
    std::vector<LatentState> states;
    std::uint64_t seed = 0;
    GuidanceParams params;

    const LatentState& final_state() const { return states.back(); }
};

// Noise prediction from the analytic model for the current latent,
// conditioned on a component label or unconditional when absent.
NoisePrediction gm_epsilon(const ScoreModel& model, const NoiseSchedule& sched,
                           const LatentState& state,
                           const std::optional<std::string>& concept_label);

// One deterministic denoising transition t -> t_prev (t_prev < t):
//   x0_hat = (z - sqrt(1 - ab_t) * eps) / sqrt(ab_t)
//   z_prev = sqrt(ab_prev) * x0_hat + sqrt(1 - ab_prev) * eps
// Throws TimestepOrder unless state.t > t_prev >= 0, and DimensionMismatch
// when eps and z disagree in length.
LatentState ddim_step(const LatentState& state, const NoisePrediction& eps,
                      int t_prev, const NoiseSchedule& sched);

// Partial-noising entry point for editing an existing vector: picks the grid
// timestep closest to strength * T (ties to the noisier one) and forms
//   z = sqrt(ab_t) * x + sqrt(1 - ab_t) * xi,   xi ~ N(0, I) from rng.
// Consumes exactly x.size() normal draws. strength must lie in (0, 1].
LatentState img2img_init(std::span<const double> x_input, double strength,
                         const NoiseSchedule& sched, SplitMix64& rng);

// Deterministic guided DDIM run from `init` down to t = 0. Per transition the
// composed prediction is
//   eps = uncond + w * (mean-of-positives - uncond)
//              - eta * sum_over_forgetting (neg_k - uncond),
// with concepts resolved against component labels once up front
// (ConceptUnknown / ConceptAmbiguous propagate from there). The plan must
// carry at least one positive concept. No randomness is consumed;
// record_seed is only stored on the returned trajectory.
Trajectory sample(const ScoreModel& model, const EditPlan& plan,
                  const GuidanceParams& params, const NoiseSchedule& sched,
                  LatentState init, std::uint64_t record_seed = 0);

// CSV rows "t,z0,z1,..." (header included), one per stored state, values
// printed with %.17g so a re-run is byte-identical.
std::string trajectory_csv(const Trajectory& traj);

std::string trajectory_json(const Trajectory& traj, int indent = 2);

// {"t": 0, "z": [...]} for the last state; accepted back by vector loaders.
std::string final_state_json(const Trajectory& traj);

} // namespace laf

#endif
