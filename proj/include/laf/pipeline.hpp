#ifndef LAF_PIPELINE_HPP
#define LAF_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laf/lexicon.hpp"
#include "laf/locate.hpp"
#include "laf/sampler.hpp"

namespace laf {

// Everything one run needs; CLI flags and config files both fill this in.
struct RunConfig {
    std::string caption;
    std::string prompt;
    LocateMode mode = LocateMode::ImageResidual;
    double w = 10.0;
    double eta = 2.5;
    int steps = 50;
    double strength = 0.8;
    std::uint64_t seed = 0;
    std::string model_path;
    std::string lexicon_path;
    std::string output_dir = "out";
    std::optional<std::vector<double>> input; // explicit input vector

    GuidanceParams guidance() const { return {w, eta}; }
};

// Applies the keys present in a JSON object file on top of `base`; flags
// given on the command line are applied afterwards and win. Throws IoError.
RunConfig apply_config_file(RunConfig base, const std::string& path);

std::string run_config_json(const RunConfig& config, const EditPlan& plan,
                            int indent = 2);

// Caption + prompt -> edit plan, via tokenize / tag / chunk on both sides.
// An empty (or whitespace) caption is allowed and locates against an empty
// chunk set; an empty prompt throws EmptyPrompt.
EditPlan locate_from_text(const std::string& caption, const std::string& prompt,
                          const Lexicon& lexicon, LocateMode mode);

struct ChainResult {
    std::vector<double> x_input;
    Trajectory trajectory;
};

// One reproducible edit chain. The chain RNG is seeded directly with
// `seed_for_chain` (callers derive it via chain_seed(master, k)). When
// x_input is given it is used as-is and the input draw is skipped entirely;
// otherwise the input is drawn from source_component (required then). The
// img2img noising draw follows, then the deterministic sampler.
ChainResult run_chain(const ScoreModel& model, const EditPlan& plan,
                      const NoiseSchedule& sched, const GuidanceParams& params,
                      double strength, std::uint64_t seed_for_chain,
                      std::optional<std::vector<double>> x_input,
                      std::optional<std::size_t> source_component);

// The component the caption's first chunk resolves to; nullopt for an empty
// caption. Used to synthesize inputs.
std::optional<std::size_t> source_component_for_caption(
    const std::string& caption, const Lexicon& lexicon,
    const ScoreModel& model);

struct AblationRow {
    double eta = 0.0;
    int runs = 0;
    double clip_t_mean = 0.0;
    double clip_t_se = 0.0;
    double log_likelihood_mean = 0.0;
    double log_likelihood_se = 0.0;
    double inception_score = 1.0;
};

// Sweeps eta with everything else fixed: `runs` chains per grid point, chain
// k seeded with chain_seed(master_seed, k) (the same inputs and noise are
// reused across grid points, so rows differ only through eta and are fully
// independent of each other). Rows come back sorted by eta, duplicates kept,
// whatever order the grid was given in. Per row:
// mean/SE of prompt alignment (cosine of positive-concept embedding vs
// output embedding, averaged over positives), mean/SE of the clean-mixture
// log likelihood of the output, and the batch inception score.
std::vector<AblationRow> run_ablation(
    const ScoreModel& model, const EditPlan& plan, const NoiseSchedule& sched,
    double w, const std::vector<double>& eta_grid, int runs,
    std::uint64_t master_seed, double strength,
    std::optional<std::vector<double>> x_input,
    std::optional<std::size_t> source_component);

// eta,runs,clip_t_mean,clip_t_se,log_likelihood_mean,log_likelihood_se,
// inception_score — one row per grid point, %.17g values.
std::string ablation_csv(const std::vector<AblationRow>& rows);

// Two stacked panels (alignment and log likelihood vs eta) as a standalone
// SVG document.
std::string ablation_svg(const std::vector<AblationRow>& rows);

} // namespace laf

#endif
