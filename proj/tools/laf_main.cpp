// laf: locate-and-forget editing on an analytic toy diffusion backend.
//
// Subcommands:
//   locate    caption + prompt -> edit plan JSON
//   sample    guided DDIM edit -> trajectory CSV/JSON + final state + metadata
//   evaluate  manifest of edits -> alignment/quality report JSON
//   ablate    eta sweep -> CSV table + SVG curves + metadata
//
// Exit codes: 0 ok, 1 I/O or bad file, 2 text parse/locate error,
// 3 concept resolution error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "laf/errors.hpp"
#include "laf/eval.hpp"
#include "laf/pipeline.hpp"
#include "laf/version.hpp"

namespace {

#ifndef LAF_DEFAULT_DATA_DIR
#define LAF_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;

laf::LocateMode parse_mode(const std::string& name) {
    if (name == "paper_literal") return laf::LocateMode::PaperLiteral;
    if (name == "image_residual") return laf::LocateMode::ImageResidual;
    throw laf::IoError("unknown mode '" + name +
                       "' (expected image_residual or paper_literal)");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw laf::IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw laf::IoError("short write to '" + path.string() + "'");
}

// Flag values land in `flags`; whatever the user actually passed then wins
// over config-file values, which in turn win over defaults.
struct CommonOptions {
    laf::RunConfig flags;
    std::string mode_name = "image_residual";
    std::string input_path;
    std::string config_path;

    CLI::Option* caption_opt = nullptr;
    CLI::Option* prompt_opt = nullptr;
    CLI::Option* mode_opt = nullptr;
    CLI::Option* w_opt = nullptr;
    CLI::Option* eta_opt = nullptr;
    CLI::Option* steps_opt = nullptr;
    CLI::Option* strength_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* model_opt = nullptr;
    CLI::Option* lexicon_opt = nullptr;
    CLI::Option* outdir_opt = nullptr;
    CLI::Option* input_opt = nullptr;

    void add_text_flags(CLI::App& cmd) {
        caption_opt = cmd.add_option("--caption", flags.caption,
                                     "caption of the current image (may be "
                                     "empty)");
        prompt_opt =
            cmd.add_option("--prompt", flags.prompt, "edit prompt text");
        mode_opt = cmd.add_option("--mode", mode_name,
                                  "locating mode: image_residual (default) "
                                  "or paper_literal")
                       ->check(CLI::IsMember(
                           {"image_residual", "paper_literal"}));
        lexicon_opt = cmd.add_option("--lexicon", flags.lexicon_path,
                                     "path to the word list TSV");
        cmd.add_option("--config", config_path,
                       "JSON config file; explicit flags win");
    }

    void add_sampling_flags(CLI::App& cmd) {
        w_opt = cmd.add_option("--w", flags.w, "positive guidance scale")
                    ->check(CLI::NonNegativeNumber);
        eta_opt = cmd.add_option("--eta", flags.eta, "forgetting scale")
                      ->check(CLI::NonNegativeNumber);
        steps_opt = cmd.add_option("--steps", flags.steps,
                                   "denoising steps (1..1000)")
                        ->check(CLI::Range(1, 1000));
        strength_opt = cmd.add_option("--strength", flags.strength,
                                      "how much noise to add to the input, "
                                      "in (0, 1]");
        seed_opt = cmd.add_option("--seed", flags.seed, "master seed");
        model_opt = cmd.add_option("--model", flags.model_path,
                                   "mixture model JSON");
        outdir_opt = cmd.add_option("--outdir", flags.output_dir,
                                    "output directory");
        input_opt = cmd.add_option("--input", input_path,
                                   "vector file to edit (defaults to a "
                                   "seeded draw from the caption concept)");
    }

    // defaults -> config file -> explicit flags.
    laf::RunConfig resolve() const {
        laf::RunConfig cfg;
        cfg.lexicon_path = std::string(LAF_DEFAULT_DATA_DIR) + "/lexicon.tsv";
        if (!config_path.empty())
            cfg = laf::apply_config_file(std::move(cfg), config_path);
        auto passed = [](const CLI::Option* opt) {
            return opt && opt->count() > 0;
        };
        if (passed(caption_opt)) cfg.caption = flags.caption;
        if (passed(prompt_opt)) cfg.prompt = flags.prompt;
        if (passed(mode_opt)) cfg.mode = parse_mode(mode_name);
        if (passed(w_opt)) cfg.w = flags.w;
        if (passed(eta_opt)) cfg.eta = flags.eta;
        if (passed(steps_opt)) cfg.steps = flags.steps;
        if (passed(strength_opt)) cfg.strength = flags.strength;
        if (passed(seed_opt)) cfg.seed = flags.seed;
        if (passed(model_opt)) cfg.model_path = flags.model_path;
        if (passed(lexicon_opt)) cfg.lexicon_path = flags.lexicon_path;
        if (passed(outdir_opt)) cfg.output_dir = flags.output_dir;
        if (passed(input_opt)) cfg.input = laf::load_vector_file(input_path);
        if (!(cfg.strength > 0.0) || cfg.strength > 1.0)
            throw laf::IoError("strength must be in (0, 1]");
        // Subcommands with sampling flags need a model from somewhere.
        if (model_opt && cfg.model_path.empty())
            throw laf::IoError(
                "a mixture model is required (--model or config file)");
        return cfg;
    }
};

int cmd_locate(const CommonOptions& options, const std::string& out_path) {
    const laf::RunConfig cfg = options.resolve();
    const laf::Lexicon lexicon = laf::Lexicon::from_file(cfg.lexicon_path);
    const laf::EditPlan plan =
        laf::locate_from_text(cfg.caption, cfg.prompt, lexicon, cfg.mode);
    const std::string json = laf::to_json_string(plan);
    if (out_path.empty())
        std::cout << json << "\n";
    else
        write_file(out_path, json + "\n");
    return 0;
}

int cmd_sample(const CommonOptions& options) {
    const laf::RunConfig cfg = options.resolve();
    const laf::Lexicon lexicon = laf::Lexicon::from_file(cfg.lexicon_path);
    const laf::ScoreModel model =
        laf::ScoreModel::from_json_file(cfg.model_path);
    const laf::EditPlan plan =
        laf::locate_from_text(cfg.caption, cfg.prompt, lexicon, cfg.mode);
    const laf::NoiseSchedule sched = laf::default_schedule(cfg.steps);

    std::optional<std::size_t> source;
    if (!cfg.input)
        source = laf::source_component_for_caption(cfg.caption, lexicon, model);
    const laf::ChainResult chain = laf::run_chain(
        model, plan, sched, cfg.guidance(), cfg.strength,
        laf::chain_seed(cfg.seed, 0), cfg.input, source);

    const fs::path outdir(cfg.output_dir);
    fs::create_directories(outdir);
    write_file(outdir / "trajectory.csv",
               laf::trajectory_csv(chain.trajectory));
    write_file(outdir / "trajectory.json",
               laf::trajectory_json(chain.trajectory) + "\n");
    write_file(outdir / "final.json",
               laf::final_state_json(chain.trajectory) + "\n");
    write_file(outdir / "run_meta.json",
               laf::run_config_json(cfg, plan) + "\n");

    std::cout << "wrote " << (outdir / "trajectory.csv").string() << "\n"
              << "wrote " << (outdir / "trajectory.json").string() << "\n"
              << "wrote " << (outdir / "final.json").string() << "\n"
              << "wrote " << (outdir / "run_meta.json").string() << "\n";
    return 0;
}

int cmd_evaluate(const std::string& manifest_path, const std::string& out_path) {
    const laf::Manifest manifest = laf::load_manifest(manifest_path);
    const laf::ScoreModel model =
        laf::ScoreModel::from_json_file(manifest.model_path);
    const laf::BatchEval result = laf::evaluate_manifest(manifest, model);
    const std::string json = laf::eval_report_json(result);
    if (out_path.empty())
        std::cout << json << "\n";
    else
        write_file(out_path, json + "\n");
    return 0;
}

int cmd_ablate(const CommonOptions& options, const std::vector<double>& grid,
               int runs) {
    const laf::RunConfig cfg = options.resolve();
    const laf::Lexicon lexicon = laf::Lexicon::from_file(cfg.lexicon_path);
    const laf::ScoreModel model =
        laf::ScoreModel::from_json_file(cfg.model_path);
    const laf::EditPlan plan =
        laf::locate_from_text(cfg.caption, cfg.prompt, lexicon, cfg.mode);
    const laf::NoiseSchedule sched = laf::default_schedule(cfg.steps);

    std::optional<std::size_t> source;
    if (!cfg.input)
        source = laf::source_component_for_caption(cfg.caption, lexicon, model);
    const std::vector<laf::AblationRow> rows =
        laf::run_ablation(model, plan, sched, cfg.w, grid, runs, cfg.seed,
                          cfg.strength, cfg.input, source);

    const fs::path outdir(cfg.output_dir);
    fs::create_directories(outdir);
    write_file(outdir / "ablation.csv", laf::ablation_csv(rows));
    write_file(outdir / "ablation.svg", laf::ablation_svg(rows));
    write_file(outdir / "run_meta.json",
               laf::run_config_json(cfg, plan) + "\n");

    std::cout << "wrote " << (outdir / "ablation.csv").string() << "\n"
              << "wrote " << (outdir / "ablation.svg").string() << "\n"
              << "wrote " << (outdir / "run_meta.json").string() << "\n";
    return 0;
}

template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const laf::ConceptError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const laf::EmptyPrompt& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const laf::NoChunkFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const laf::RootMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"locate-and-forget guided editing on an analytic mixture "
                 "backend"};
    app.set_version_flag("--version", laf::kVersion);
    app.require_subcommand(1);

    // locate
    CommonOptions locate_options;
    std::string locate_out;
    CLI::App* locate_cmd =
        app.add_subcommand("locate", "derive an edit plan from caption and "
                                     "prompt");
    locate_options.add_text_flags(*locate_cmd);
    locate_cmd->add_option("--out", locate_out,
                           "write the plan here instead of stdout");

    // sample
    CommonOptions sample_options;
    CLI::App* sample_cmd =
        app.add_subcommand("sample", "run one guided denoising chain");
    sample_options.add_text_flags(*sample_cmd);
    sample_options.add_sampling_flags(*sample_cmd);

    // evaluate
    std::string manifest_path, evaluate_out;
    CLI::App* evaluate_cmd =
        app.add_subcommand("evaluate", "score edits listed in a manifest");
    evaluate_cmd->add_option("--manifest", manifest_path, "manifest JSON")
        ->required();
    evaluate_cmd->add_option("--out", evaluate_out,
                             "write the report here instead of stdout");

    // ablate
    CommonOptions ablate_options;
    std::vector<double> eta_grid{0.0, 1.0, 2.5, 5.0, 10.0, 20.0};
    int runs = 100;
    CLI::App* ablate_cmd =
        app.add_subcommand("ablate", "sweep the forgetting scale");
    ablate_options.add_text_flags(*ablate_cmd);
    ablate_options.add_sampling_flags(*ablate_cmd);
    ablate_cmd->add_option("--eta-grid", eta_grid,
                           "comma-separated eta values")
        ->delimiter(',');
    ablate_cmd->add_option("--runs", runs, "chains per grid point")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    if (locate_cmd->parsed())
        return guarded([&] { return cmd_locate(locate_options, locate_out); });
    if (sample_cmd->parsed())
        return guarded([&] { return cmd_sample(sample_options); });
    if (evaluate_cmd->parsed())
        return guarded([&] { return cmd_evaluate(manifest_path, evaluate_out); });
    if (ablate_cmd->parsed())
        return guarded([&] { return cmd_ablate(ablate_options, eta_grid, runs); });
    return 0;
}
