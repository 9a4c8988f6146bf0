#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

#include "laf/errors.hpp"
#include "laf/metrics.hpp"
#include "laf/pipeline.hpp"
#include "laf/version.hpp"
#include "helpers.hpp"

using namespace laf;
using testutil::ScratchDir;
using testutil::default_lexicon;
using testutil::write_file;

namespace {

ScoreModel two_mode() {
    return ScoreModel(1, {{"bus", {3.0}, 0.5, 0.5}, {"car", {-3.0}, 0.5, 0.5}});
}

EditPlan bus_not_car() {
    EditPlan plan;
    plan.positive_concepts = {"yellow bus"};
    plan.forgetting_elements = {"red car"};
    return plan;
}

bool rows_equal(const AblationRow& a, const AblationRow& b) {
    return a.eta == b.eta && a.runs == b.runs &&
           a.clip_t_mean == b.clip_t_mean && a.clip_t_se == b.clip_t_se &&
           a.log_likelihood_mean == b.log_likelihood_mean &&
           a.log_likelihood_se == b.log_likelihood_se &&
           a.inception_score == b.inception_score;
}

} // namespace

TEST_CASE("locate_from_text parses both sides and locates") {
    auto plan = locate_from_text("a red car", "a yellow bus",
                                 default_lexicon(), LocateMode::ImageResidual);
    CHECK(plan.positive_concepts == std::vector<std::string>{"yellow bus"});
    CHECK(plan.forgetting_elements == std::vector<std::string>{"red car"});
}

TEST_CASE("an empty or blank caption locates against nothing") {
    for (const char* caption : {"", "   \t"}) {
        auto plan = locate_from_text(caption, "a yellow bus",
                                     default_lexicon(),
                                     LocateMode::ImageResidual);
        CHECK(plan.positive_concepts ==
              std::vector<std::string>{"yellow bus"});
        CHECK(plan.forgetting_elements.empty());
    }
}

TEST_CASE("an empty prompt is rejected before locating") {
    CHECK_THROWS_AS(locate_from_text("a red car", "", default_lexicon(),
                                     LocateMode::ImageResidual),
                    EmptyPrompt);
    CHECK_THROWS_AS(locate_from_text("a red car", "  ", default_lexicon(),
                                     LocateMode::ImageResidual),
                    EmptyPrompt);
}

TEST_CASE("the source component comes from the caption's first chunk") {
    auto model = two_mode();
    auto src = source_component_for_caption("a red car", default_lexicon(),
                                            model);
    REQUIRE(src.has_value());
    CHECK(*src == 1);
    auto multi = source_component_for_caption("a red car on a street",
                                              default_lexicon(), model);
    REQUIRE(multi.has_value());
    CHECK(*multi == 1);
    CHECK_FALSE(source_component_for_caption("", default_lexicon(), model)
                    .has_value());
    CHECK_THROWS_AS(source_component_for_caption("a green boat",
                                                 default_lexicon(), model),
                    ConceptUnknown);
}

TEST_CASE("chain 0 reproduces the frozen input, latent, and final") {
    auto model = two_mode();
    auto sched = default_schedule();
    auto chain = run_chain(model, bus_not_car(), sched,
                           GuidanceParams{10.0, 2.5}, 0.8, chain_seed(0, 0),
                           std::nullopt, 1 /* car */);
    REQUIRE(chain.x_input.size() == 1);
    CHECK(chain.x_input[0] ==
          doctest::Approx(-3.197194348863578).epsilon(1e-12));
    CHECK(chain.trajectory.states.front().t == 800);
    CHECK(chain.trajectory.states.front().z[0] ==
          doctest::Approx(-0.8887815197509917).epsilon(1e-12));
    CHECK(chain.trajectory.final_state().z[0] ==
          doctest::Approx(18.062414014358254).epsilon(1e-12));
    CHECK(chain.trajectory.seed == chain_seed(0, 0));
}

TEST_CASE("an explicit input vector skips the synthesis draw") {
    auto model = two_mode();
    auto sched = default_schedule();
    const std::vector<double> x = {-2.5};

    auto chain = run_chain(model, bus_not_car(), sched, GuidanceParams{10, 2.5},
                           0.8, chain_seed(0, 0), x, std::nullopt);
    CHECK(chain.x_input == x);

    // the noising draw is now the chain's first normal
    SplitMix64 rng(chain_seed(0, 0));
    auto expected = img2img_init(x, 0.8, sched, rng);
    CHECK(chain.trajectory.states.front().z == expected.z);
}

TEST_CASE("run_chain validates its input configuration") {
    auto model = two_mode();
    auto sched = default_schedule();
    CHECK_THROWS_AS(run_chain(model, bus_not_car(), sched, GuidanceParams{},
                              0.8, 0, std::vector<double>{1.0, 2.0},
                              std::nullopt),
                    DimensionMismatch);
    CHECK_THROWS_AS(run_chain(model, bus_not_car(), sched, GuidanceParams{},
                              0.8, 0, std::nullopt, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("config files override defaults key by key") {
    ScratchDir dir("laf-config");
    write_file(dir.path() / "run.json", R"({
      "caption": "a red car",
      "prompt": "a yellow bus",
      "w": 3.5,
      "steps": 25,
      "mode": "paper_literal",
      "output_dir": "results"
    })");
    RunConfig cfg = apply_config_file(RunConfig{},
                                      (dir.path() / "run.json").string());
    CHECK(cfg.caption == "a red car");
    CHECK(cfg.prompt == "a yellow bus");
    CHECK(cfg.w == 3.5);
    CHECK(cfg.steps == 25);
    CHECK(cfg.mode == LocateMode::PaperLiteral);
    CHECK(cfg.output_dir == "results");
    // untouched keys keep their defaults
    CHECK(cfg.eta == 2.5);
    CHECK(cfg.strength == 0.8);
    CHECK(cfg.seed == 0);
    CHECK_FALSE(cfg.input.has_value());
}

TEST_CASE("config files validate mode names and JSON shape") {
    ScratchDir dir("laf-badconfig");
    write_file(dir.path() / "mode.json", R"({"mode": "sideways"})");
    CHECK_THROWS_AS(
        apply_config_file(RunConfig{}, (dir.path() / "mode.json").string()),
        IoError);
    write_file(dir.path() / "junk.json", "[1, 2, 3]");
    CHECK_THROWS_AS(
        apply_config_file(RunConfig{}, (dir.path() / "junk.json").string()),
        IoError);
    CHECK_THROWS_AS(apply_config_file(RunConfig{}, "/nonexistent/cfg.json"),
                    IoError);
}

TEST_CASE("run metadata captures the full configuration and the plan") {
    RunConfig cfg;
    cfg.caption = "a red car";
    cfg.prompt = "a yellow bus";
    cfg.model_path = "m.json";
    cfg.seed = 9;
    auto plan = locate_from_text(cfg.caption, cfg.prompt, default_lexicon(),
                                 cfg.mode);
    auto doc = nlohmann::json::parse(run_config_json(cfg, plan));
    CHECK(doc["version"] == kVersion);
    CHECK(doc["caption"] == "a red car");
    CHECK(doc["prompt"] == "a yellow bus");
    CHECK(doc["mode"] == "image_residual");
    CHECK(doc["w"] == 10.0);
    CHECK(doc["eta"] == 2.5);
    CHECK(doc["steps"] == 50);
    CHECK(doc["strength"] == 0.8);
    CHECK(doc["seed"] == 9);
    CHECK(doc["model"] == "m.json");
    CHECK(doc["input"].is_null());
    CHECK(doc["plan"]["forgetting_elements"] ==
          nlohmann::json::array({"red car"}));

    cfg.input = std::vector<double>{1.5};
    auto with_input = nlohmann::json::parse(run_config_json(cfg, plan));
    CHECK(with_input["input"] == nlohmann::json::array({1.5}));
}

TEST_CASE("a single-point eta grid reproduces the plain-guidance statistics") {
    auto model = two_mode();
    auto sched = default_schedule();
    auto plan = bus_not_car();
    const int runs = 5;
    auto rows = run_ablation(model, plan, sched, 7.5, {0.0}, runs, 0, 0.8,
                             std::nullopt, 1);
    REQUIRE(rows.size() == 1);
    const AblationRow& row = rows[0];
    CHECK(row.eta == 0.0);
    CHECK(row.runs == runs);

    // recompute from scratch with the library primitives
    std::vector<double> aligns, logliks;
    std::vector<std::vector<double>> resp;
    auto text = toy_embed_phrase("yellow bus", model);
    for (int k = 0; k < runs; ++k) {
        auto chain =
            run_chain(model, plan, sched, GuidanceParams{7.5, 0.0}, 0.8,
                      chain_seed(0, static_cast<std::uint64_t>(k)),
                      std::nullopt, 1);
        const auto& z = chain.trajectory.final_state().z;
        aligns.push_back(clip_t(text, toy_embed(z, model)));
        logliks.push_back(model.log_density(z));
        resp.push_back(toy_embed(z, model));
    }
    double mean = 0.0;
    for (double a : aligns) mean += a;
    mean /= runs;
    double ss = 0.0;
    for (double a : aligns) ss += (a - mean) * (a - mean);
    double se = std::sqrt(ss / (runs - 1.0) / runs);

    CHECK(row.clip_t_mean == doctest::Approx(mean).epsilon(1e-14));
    CHECK(row.clip_t_se == doctest::Approx(se).epsilon(1e-12));
    double ll_mean = 0.0;
    for (double l : logliks) ll_mean += l;
    ll_mean /= runs;
    CHECK(row.log_likelihood_mean == doctest::Approx(ll_mean).epsilon(1e-14));
    CHECK(row.inception_score ==
          doctest::Approx(inception_score(resp)).epsilon(1e-14));
}

TEST_CASE("ablation rows come back sorted by eta, duplicates kept") {
    auto model = two_mode();
    auto sched = default_schedule();
    auto rows = run_ablation(model, bus_not_car(), sched, 7.5,
                             {5.0, 0.5, 5.0}, 2, 0, 0.8, std::nullopt, 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].eta == 0.5);
    CHECK(rows[1].eta == 5.0);
    CHECK(rows[2].eta == 5.0);
    CHECK(rows_equal(rows[1], rows[2])); // identical grid point, same chains
}

TEST_CASE("grid points share chains: a sub-grid reproduces the same row") {
    auto model = two_mode();
    auto sched = default_schedule();
    auto full = run_ablation(model, bus_not_car(), sched, 7.5, {0.0, 1.0}, 3,
                             0, 0.8, std::nullopt, 1);
    auto only_zero = run_ablation(model, bus_not_car(), sched, 7.5, {0.0}, 3,
                                  0, 0.8, std::nullopt, 1);
    REQUIRE(full.size() == 2);
    CHECK(rows_equal(full[0], only_zero[0]));
}

TEST_CASE("a single run per point has zero standard error") {
    auto model = two_mode();
    auto sched = default_schedule();
    auto rows = run_ablation(model, bus_not_car(), sched, 7.5, {1.0}, 1, 0,
                             0.8, std::nullopt, 1);
    CHECK(rows[0].clip_t_se == 0.0);
    CHECK(rows[0].log_likelihood_se == 0.0);
}

TEST_CASE("ablation rejects bad sweeps up front") {
    auto model = two_mode();
    auto sched = default_schedule();
    CHECK_THROWS_AS(run_ablation(model, bus_not_car(), sched, 7.5, {}, 3, 0,
                                 0.8, std::nullopt, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_ablation(model, bus_not_car(), sched, 7.5, {0.0}, 0, 0,
                                 0.8, std::nullopt, 1),
                    std::invalid_argument);
    EditPlan unknown = bus_not_car();
    unknown.positive_concepts = {"green boat"};
    CHECK_THROWS_AS(run_ablation(model, unknown, sched, 7.5, {0.0}, 1, 0, 0.8,
                                 std::nullopt, 1),
                    ConceptUnknown);
}

TEST_CASE("ablation CSV round-trips header and full-precision values") {
    auto model = two_mode();
    auto sched = default_schedule();
    auto rows = run_ablation(model, bus_not_car(), sched, 7.5, {0.0, 2.5}, 2,
                             0, 0.8, std::nullopt, 1);
    auto csv = ablation_csv(rows);
    CHECK(csv.rfind("eta,runs,clip_t_mean,clip_t_se,log_likelihood_mean,"
                    "log_likelihood_se,inception_score\n",
                    0) == 0);
    // one line per row plus the header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.find("\n0,2,") != std::string::npos);
    CHECK(csv.find("\n2.5,2,") != std::string::npos);

    // the mean survives the %.17g round trip exactly
    auto row_start = csv.find("\n0,2,") + 5;
    auto next_comma = csv.find(',', row_start);
    const double parsed =
        std::stod(csv.substr(row_start, next_comma - row_start));
    CHECK(parsed == rows[0].clip_t_mean);
}

TEST_CASE("ablation SVG is a standalone two-panel document") {
    auto model = two_mode();
    auto sched = default_schedule();
    auto rows = run_ablation(model, bus_not_car(), sched, 7.5, {0.0, 1.0, 2.5},
                             2, 0, 0.8, std::nullopt, 1);
    auto svg = ablation_svg(rows);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("Prompt alignment") != std::string::npos);
    CHECK(svg.find("log likelihood") != std::string::npos);
    CHECK(svg.find("#1f77b4") != std::string::npos);
    CHECK(svg.find("#d62728") != std::string::npos);
}

TEST_CASE("guidance parameters flow out of a run configuration") {
    RunConfig cfg;
    cfg.w = 4.0;
    cfg.eta = 1.5;
    auto params = cfg.guidance();
    CHECK(params.w == 4.0);
    CHECK(params.eta == 1.5);
}
