#include "laf/sampler.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

#include "laf/errors.hpp"

namespace laf {

namespace {

std::string g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace

NoisePrediction gm_epsilon(const ScoreModel& model, const NoiseSchedule& sched,
                           const LatentState& state,
                           const std::optional<std::string>& concept_label) {
    std::optional<std::size_t> component;
    if (concept_label) component = model.component_index(*concept_label);
    NoisePrediction pred;
    pred.t = state.t;
    pred.values = model.epsilon(state.z, sched.alpha_bar_at(state.t), component);
    return pred;
}

LatentState ddim_step(const LatentState& state, const NoisePrediction& eps,
                      int t_prev, const NoiseSchedule& sched) {
    if (t_prev < 0 || t_prev >= state.t)
        throw TimestepOrder("ddim_step: need 0 <= t_prev < t, got t=" +
                            std::to_string(state.t) + ", t_prev=" +
                            std::to_string(t_prev));
    if (eps.t != state.t)
        throw TimestepOrder("ddim_step: prediction is for t=" +
                            std::to_string(eps.t) + ", state is at t=" +
                            std::to_string(state.t));
    if (eps.values.size() != state.z.size())
        throw DimensionMismatch("ddim_step: eps has " +
                                std::to_string(eps.values.size()) +
                                " entries, latent has " +
                                std::to_string(state.z.size()));

    const double ab_t = sched.alpha_bar_at(state.t);
    const double ab_prev = sched.alpha_bar_at(t_prev);
    const double sqrt_ab_t = std::sqrt(ab_t);
    const double sqrt_one_minus_ab_t = std::sqrt(1.0 - ab_t);
    const double sqrt_ab_prev = std::sqrt(ab_prev);
    const double sqrt_one_minus_ab_prev = std::sqrt(1.0 - ab_prev);

    LatentState next;
    next.t = t_prev;
    next.z.resize(state.z.size());
    for (std::size_t i = 0; i < state.z.size(); ++i) {
        const double x0_hat =
            (state.z[i] - sqrt_one_minus_ab_t * eps.values[i]) / sqrt_ab_t;
        next.z[i] = sqrt_ab_prev * x0_hat + sqrt_one_minus_ab_prev * eps.values[i];
    }
    return next;
}

LatentState img2img_init(std::span<const double> x_input, double strength,
                         const NoiseSchedule& sched, SplitMix64& rng) {
    if (!(strength > 0.0) || strength > 1.0)
        throw std::invalid_argument("strength must be in (0, 1], got " +
                                    std::to_string(strength));
    const int target = static_cast<int>(
        std::llround(strength * sched.training_steps));
    const int t_start = sched.snap_to_grid(target);
    const double ab = sched.alpha_bar_at(t_start);
    const double signal = std::sqrt(ab);
    const double noise = std::sqrt(1.0 - ab);

    LatentState init;
    init.t = t_start;
    init.z.resize(x_input.size());
    for (std::size_t i = 0; i < x_input.size(); ++i)
        init.z[i] = signal * x_input[i] + noise * rng.normal();
    return init;
}

Trajectory sample(const ScoreModel& model, const EditPlan& plan,
                  const GuidanceParams& params, const NoiseSchedule& sched,
                  LatentState init, std::uint64_t record_seed) {
    params.validate();
    if (plan.positive_concepts.empty())
        throw std::invalid_argument("sample: plan has no positive concepts");

    // Resolve every phrase once; unknown or ambiguous concepts fail here,
    // before any arithmetic happens.
    std::vector<std::size_t> positive;
    for (const std::string& phrase : plan.positive_concepts)
        positive.push_back(model.match_phrase(phrase));
    std::vector<std::size_t> negative;
    for (const std::string& phrase : plan.forgetting_elements)
        negative.push_back(model.match_phrase(phrase));

    Trajectory traj;
    traj.seed = record_seed;
    traj.params = params;
    traj.states.push_back(std::move(init));

    auto predict = [&](const LatentState& state,
                       std::optional<std::size_t> comp) {
        NoisePrediction pred;
        pred.t = state.t;
        pred.values =
            model.epsilon(state.z, sched.alpha_bar_at(state.t), comp);
        return pred;
    };

    auto advance = [&](int t_prev) {
        const LatentState& state = traj.states.back();
        const NoisePrediction uncond = predict(state, std::nullopt);

        NoisePrediction pos = predict(state, positive.front());
        for (std::size_t i = 1; i < positive.size(); ++i) {
            const NoisePrediction extra = predict(state, positive[i]);
            for (std::size_t j = 0; j < pos.values.size(); ++j)
                pos.values[j] += extra.values[j];
        }
        if (positive.size() > 1)
            for (double& v : pos.values)
                v /= static_cast<double>(positive.size());

        std::vector<NoisePrediction> negs;
        negs.reserve(negative.size());
        for (std::size_t comp : negative) negs.push_back(predict(state, comp));

        const NoisePrediction composed =
            compose_laf(uncond, pos, std::span<const NoisePrediction>(negs),
                        params);
        traj.states.push_back(ddim_step(state, composed, t_prev, sched));
    };

    for (int t : sched.inference_grid)
        if (t < traj.states.back().t) advance(t);
    if (traj.states.back().t > 0) advance(0);
    return traj;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string csv = "t";
    const std::size_t dim =
        traj.states.empty() ? 0 : traj.states.front().z.size();
    for (std::size_t i = 0; i < dim; ++i)
        csv += ",z" + std::to_string(i);
    csv += '\n';
    for (const LatentState& state : traj.states) {
        csv += std::to_string(state.t);
        for (double v : state.z) {
            csv += ',';
            csv += g17(v);
        }
        csv += '\n';
    }
    return csv;
}

std::string trajectory_json(const Trajectory& traj, int indent) {
    nlohmann::json doc;
    doc["seed"] = traj.seed;
    doc["params"] = {{"w", traj.params.w}, {"eta", traj.params.eta}};
    auto& states = doc["states"] = nlohmann::json::array();
    for (const LatentState& state : traj.states)
        states.push_back({{"t", state.t}, {"z", state.z}});
    return doc.dump(indent);
}

std::string final_state_json(const Trajectory& traj) {
    const LatentState& last = traj.final_state();
    nlohmann::json doc;
    doc["t"] = last.t;
    doc["z"] = last.z;
    return doc.dump(2);
}

} // namespace laf
