#include "laf/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "laf/errors.hpp"
#include "laf/metrics.hpp"
#include "laf/svg.hpp"
#include "laf/tokenize.hpp"
#include "laf/version.hpp"

namespace laf {

namespace {

std::string g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe out;
    const double n = static_cast<double>(xs.size());
    for (double x : xs) out.mean += x;
    out.mean /= n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.se = std::sqrt(ss / (n - 1.0) / n);
    }
    return out;
}

} // namespace

RunConfig apply_config_file(RunConfig base, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
        if (!doc.is_object())
            throw IoError("config '" + path + "': expected a JSON object");
        if (doc.contains("caption"))
            base.caption = doc["caption"].get<std::string>();
        if (doc.contains("prompt"))
            base.prompt = doc["prompt"].get<std::string>();
        if (doc.contains("mode")) {
            const std::string mode = doc["mode"].get<std::string>();
            if (mode == "paper_literal")
                base.mode = LocateMode::PaperLiteral;
            else if (mode == "image_residual")
                base.mode = LocateMode::ImageResidual;
            else
                throw IoError("config '" + path + "': unknown mode '" + mode +
                              "'");
        }
        if (doc.contains("w")) base.w = doc["w"].get<double>();
        if (doc.contains("eta")) base.eta = doc["eta"].get<double>();
        if (doc.contains("steps")) base.steps = doc["steps"].get<int>();
        if (doc.contains("strength"))
            base.strength = doc["strength"].get<double>();
        if (doc.contains("seed"))
            base.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("model"))
            base.model_path = doc["model"].get<std::string>();
        if (doc.contains("lexicon"))
            base.lexicon_path = doc["lexicon"].get<std::string>();
        if (doc.contains("output_dir"))
            base.output_dir = doc["output_dir"].get<std::string>();
        if (doc.contains("input"))
            base.input = doc["input"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("config '" + path + "': " + e.what());
    }
    return base;
}

std::string run_config_json(const RunConfig& config, const EditPlan& plan,
                            int indent) {
    nlohmann::json doc;
    doc["version"] = kVersion;
    doc["caption"] = config.caption;
    doc["prompt"] = config.prompt;
    doc["mode"] = to_string(config.mode);
    doc["w"] = config.w;
    doc["eta"] = config.eta;
    doc["steps"] = config.steps;
    doc["strength"] = config.strength;
    doc["seed"] = config.seed;
    doc["model"] = config.model_path;
    doc["lexicon"] = config.lexicon_path;
    doc["output_dir"] = config.output_dir;
    if (config.input)
        doc["input"] = *config.input;
    else
        doc["input"] = nullptr;
    doc["plan"] = nlohmann::json::parse(to_json_string(plan));
    return doc.dump(indent);
}

EditPlan locate_from_text(const std::string& caption, const std::string& prompt,
                          const Lexicon& lexicon, LocateMode mode) {
    const std::vector<Token> caption_tokens = tokenize(caption);
    ChunkSet caption_chunks; // empty captions locate against nothing
    if (!caption_tokens.empty())
        caption_chunks = parse_chunks(tag_pos(caption_tokens, lexicon), caption);
    else
        caption_chunks.source_text = caption;

    const std::vector<Token> prompt_tokens = tokenize(prompt);
    if (prompt_tokens.empty()) throw EmptyPrompt("edit prompt is empty");
    const ChunkSet prompt_chunks =
        parse_chunks(tag_pos(prompt_tokens, lexicon), prompt);

    return locate(caption_chunks, prompt_chunks, mode);
}

std::optional<std::size_t> source_component_for_caption(
    const std::string& caption, const Lexicon& lexicon,
    const ScoreModel& model) {
    const std::vector<Token> tokens = tokenize(caption);
    if (tokens.empty()) return std::nullopt;
    const ChunkSet chunks = parse_chunks(tag_pos(tokens, lexicon), caption);
    return model.match_phrase(chunk_phrase(chunks.chunks.front()));
}

ChainResult run_chain(const ScoreModel& model, const EditPlan& plan,
                      const NoiseSchedule& sched, const GuidanceParams& params,
                      double strength, std::uint64_t seed_for_chain,
                      std::optional<std::vector<double>> x_input,
                      std::optional<std::size_t> source_component) {
    SplitMix64 rng(seed_for_chain);

    ChainResult result;
    if (x_input) {
        if (x_input->size() != static_cast<std::size_t>(model.dimension()))
            throw DimensionMismatch(
                "input vector has " + std::to_string(x_input->size()) +
                " entries, model dimension is " +
                std::to_string(model.dimension()));
        result.x_input = std::move(*x_input);
    } else if (source_component) {
        const MixtureComponent& src = model.components()[*source_component];
        const double sigma = std::sqrt(src.variance);
        result.x_input.resize(src.mean.size());
        for (std::size_t i = 0; i < src.mean.size(); ++i)
            result.x_input[i] = src.mean[i] + sigma * rng.normal();
    } else {
        throw std::invalid_argument(
            "run_chain: need an explicit input vector or a source component");
    }

    LatentState init = img2img_init(result.x_input, strength, sched, rng);
    result.trajectory = sample(model, plan, params, sched, std::move(init),
                               seed_for_chain);
    return result;
}

std::vector<AblationRow> run_ablation(
    const ScoreModel& model, const EditPlan& plan, const NoiseSchedule& sched,
    double w, const std::vector<double>& eta_grid, int runs,
    std::uint64_t master_seed, double strength,
    std::optional<std::vector<double>> x_input,
    std::optional<std::size_t> source_component) {
    if (eta_grid.empty())
        throw std::invalid_argument("run_ablation: empty eta grid");
    if (runs < 1)
        throw std::invalid_argument("run_ablation: need at least one run");

    // Resolve the prompt-side embeddings once; failures surface before the
    // first chain starts.
    std::vector<Embedding> positive_embeddings;
    for (const std::string& phrase : plan.positive_concepts)
        positive_embeddings.push_back(toy_embed_phrase(phrase, model));

    // Canonical output order: ascending eta (duplicates kept), independent
    // of how the grid was written or executed.
    std::vector<double> grid = eta_grid;
    std::sort(grid.begin(), grid.end());

    std::vector<AblationRow> rows;
    for (double eta : grid) {
        const GuidanceParams params{w, eta};
        std::vector<double> aligns, logliks;
        std::vector<std::vector<double>> responsibilities;
        aligns.reserve(static_cast<std::size_t>(runs));
        logliks.reserve(static_cast<std::size_t>(runs));
        for (int k = 0; k < runs; ++k) {
            const ChainResult chain = run_chain(
                model, plan, sched, params, strength,
                chain_seed(master_seed, static_cast<std::uint64_t>(k)),
                x_input, source_component);
            const std::vector<double>& final_z =
                chain.trajectory.final_state().z;
            const Embedding image = toy_embed(final_z, model);
            double align = 0.0;
            for (const Embedding& text : positive_embeddings)
                align += clip_t(text, image);
            align /= static_cast<double>(positive_embeddings.size());
            aligns.push_back(align);
            logliks.push_back(model.log_density(final_z));
            responsibilities.push_back(image);
        }
        const MeanSe align_stats = mean_se(aligns);
        const MeanSe loglik_stats = mean_se(logliks);
        AblationRow row;
        row.eta = eta;
        row.runs = runs;
        row.clip_t_mean = align_stats.mean;
        row.clip_t_se = align_stats.se;
        row.log_likelihood_mean = loglik_stats.mean;
        row.log_likelihood_se = loglik_stats.se;
        row.inception_score = inception_score(responsibilities);
        rows.push_back(row);
    }
    return rows;
}

std::string ablation_csv(const std::vector<AblationRow>& rows) {
    std::string csv =
        "eta,runs,clip_t_mean,clip_t_se,log_likelihood_mean,"
        "log_likelihood_se,inception_score\n";
    for (const AblationRow& row : rows) {
        csv += g17(row.eta);
        csv += ',' + std::to_string(row.runs);
        csv += ',' + g17(row.clip_t_mean);
        csv += ',' + g17(row.clip_t_se);
        csv += ',' + g17(row.log_likelihood_mean);
        csv += ',' + g17(row.log_likelihood_se);
        csv += ',' + g17(row.inception_score);
        csv += '\n';
    }
    return csv;
}

std::string ablation_svg(const std::vector<AblationRow>& rows) {
    SvgPanel alignment;
    alignment.title = "Prompt alignment vs forgetting scale";
    alignment.x_label = "eta";
    alignment.y_label = "mean cosine";
    SvgSeries align_series;
    align_series.label = "alignment";
    align_series.color = "#1f77b4";

    SvgPanel likelihood;
    likelihood.title = "Output log likelihood vs forgetting scale";
    likelihood.x_label = "eta";
    likelihood.y_label = "mean log likelihood";
    SvgSeries ll_series;
    ll_series.label = "log likelihood";
    ll_series.color = "#d62728";

    for (const AblationRow& row : rows) {
        align_series.points.emplace_back(row.eta, row.clip_t_mean);
        ll_series.points.emplace_back(row.eta, row.log_likelihood_mean);
    }
    alignment.series.push_back(std::move(align_series));
    likelihood.series.push_back(std::move(ll_series));
    return render_panels({alignment, likelihood});
}

} // namespace laf
