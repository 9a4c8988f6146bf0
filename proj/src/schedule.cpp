#include "laf/schedule.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "laf/errors.hpp"

namespace laf {

double NoiseSchedule::alpha_bar_at(int t) const {
    if (t < 0 || t > training_steps)
        throw TimestepOrder("timestep " + std::to_string(t) +
                            " outside 0.." + std::to_string(training_steps));
    return alpha_bar[static_cast<std::size_t>(t)];
}

int NoiseSchedule::snap_to_grid(int t) const {
    int best = inference_grid.front();
    long best_dist = std::labs(static_cast<long>(best) - t);
    for (int candidate : inference_grid) {
        const long dist = std::labs(static_cast<long>(candidate) - t);
        // Strict < keeps the earlier (larger, noisier) timestep on ties.
        if (dist < best_dist) {
            best = candidate;
            best_dist = dist;
        }
    }
    return best;
}

NoiseSchedule make_schedule(int training_steps, double beta_start,
                            double beta_end, int inference_steps) {
    if (training_steps < 1)
        throw InvalidScheduleParams("training_steps must be >= 1, got " +
                                    std::to_string(training_steps));
    if (!(beta_start > 0.0) || !(beta_start < beta_end) || !(beta_end < 1.0))
        throw InvalidScheduleParams(
            "need 0 < beta_start < beta_end < 1, got [" +
            std::to_string(beta_start) + ", " + std::to_string(beta_end) + "]");
    if (inference_steps < 1 || inference_steps > training_steps)
        throw InvalidScheduleParams(
            "inference_steps must be in 1..training_steps, got " +
            std::to_string(inference_steps));

    NoiseSchedule sched;
    sched.training_steps = training_steps;
    sched.beta_start = beta_start;
    sched.beta_end = beta_end;

    sched.alpha_bar.resize(static_cast<std::size_t>(training_steps) + 1);
    sched.alpha_bar[0] = 1.0;
    double product = 1.0;
    for (int t = 1; t <= training_steps; ++t) {
        const double beta =
            training_steps == 1
                ? beta_start
                : beta_start + (static_cast<double>(t - 1) *
                                (beta_end - beta_start) /
                                static_cast<double>(training_steps - 1));
        product *= 1.0 - beta;
        sched.alpha_bar[static_cast<std::size_t>(t)] = product;
    }

    sched.inference_grid.reserve(static_cast<std::size_t>(inference_steps));
    for (int i = 0; i < inference_steps; ++i) {
        const long long t = static_cast<long long>(training_steps) *
                            (inference_steps - i) / inference_steps;
        sched.inference_grid.push_back(static_cast<int>(t));
    }
    return sched;
}

NoiseSchedule default_schedule(int inference_steps) {
    return make_schedule(kDefaultTrainingSteps, kDefaultBetaStart,
                         kDefaultBetaEnd, inference_steps);
}

} // namespace laf
