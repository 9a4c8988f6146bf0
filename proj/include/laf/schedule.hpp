#ifndef LAF_SCHEDULE_HPP
#define LAF_SCHEDULE_HPP

#include <vector>

namespace laf {

inline constexpr int kDefaultTrainingSteps = 1000;
inline constexpr double kDefaultBetaStart = 1e-4;
inline constexpr double kDefaultBetaEnd = 0.02;
inline constexpr int kDefaultInferenceSteps = 50;

// Linear variance schedule plus the strided timestep grid used at inference.
//
//   beta_t     = beta_start + (t-1) * (beta_end - beta_start) / (T-1),
//                t = 1..T (a single-step schedule uses beta_1 = beta_start)
//   alpha_bar  : alpha_bar[0] = 1, alpha_bar[t] = prod_{s<=t} (1 - beta_s)
//   grid[i]    = floor(T * (steps - i) / steps), i = 0..steps-1  (descending,
//                starts at T, never reaches 0; the final denoising transition
//                goes from grid.back() to t = 0)
struct NoiseSchedule {
    int training_steps = 0; // T
    double beta_start = 0.0;
    double beta_end = 0.0;
    std::vector<double> alpha_bar;   // size T+1
    std::vector<int> inference_grid; // strictly descending

    double alpha_bar_at(int t) const; // throws TimestepOrder if t outside 0..T

    // Nearest grid timestep; ties go to the larger (noisier) one.
    int snap_to_grid(int t) const;
};

// Throws InvalidScheduleParams unless T >= 1, 0 < beta_start < beta_end < 1
// and 1 <= inference_steps <= T.
NoiseSchedule make_schedule(int training_steps, double beta_start,
                            double beta_end, int inference_steps);

NoiseSchedule default_schedule(int inference_steps = kDefaultInferenceSteps);

} // namespace laf

#endif
