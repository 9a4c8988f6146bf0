#include "laf/eval.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "laf/errors.hpp"

namespace laf {

namespace {

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& path) {
    std::filesystem::path p(path);
    return p.is_absolute() ? p : base / p;
}

} // namespace

std::vector<double> load_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open vector file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.is_array()) return doc.get<std::vector<double>>();
        if (doc.is_object() && doc.contains("z"))
            return doc.at("z").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("vector file '" + path + "': " + e.what());
    }
    throw IoError("vector file '" + path +
                  "': expected a JSON array or an object with \"z\"");
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("manifest '" + path + "': " + e.what());
    }

    const std::filesystem::path base =
        std::filesystem::path(path).parent_path();
    Manifest manifest;
    try {
        manifest.model_path =
            resolve(base, doc.at("model").get<std::string>()).string();
        for (const auto& s : doc.at("samples")) {
            ManifestEntry entry;
            entry.input =
                resolve(base, s.at("input").get<std::string>()).string();
            entry.output =
                resolve(base, s.at("output").get<std::string>()).string();
            entry.reference =
                resolve(base, s.at("reference").get<std::string>()).string();
            entry.prompt = s.at("prompt").get<std::string>();
            manifest.samples.push_back(std::move(entry));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError("manifest '" + path + "': " + e.what());
    }
    if (manifest.samples.empty())
        throw IoError("manifest '" + path + "' lists no samples");
    return manifest;
}

BatchEval evaluate_manifest(const Manifest& manifest, const ScoreModel& model) {
    BatchEval result;
    std::vector<std::vector<double>> output_probs;
    double sum_clip_t = 0.0, sum_l1 = 0.0, sum_clip_d = 0.0;

    for (const ManifestEntry& entry : manifest.samples) {
        const std::vector<double> x_in = load_vector_file(entry.input);
        const std::vector<double> x_out = load_vector_file(entry.output);
        const std::vector<double> x_ref = load_vector_file(entry.reference);

        const Embedding emb_in = toy_embed(x_in, model);
        const Embedding emb_out = toy_embed(x_out, model);
        const Embedding emb_ref = toy_embed(x_ref, model);
        const Embedding emb_prompt = toy_embed_phrase(entry.prompt, model);

        SampleScores scores;
        scores.clip_t = clip_t(emb_prompt, emb_out);
        scores.l1 = l1(x_in, x_out);
        scores.clip_d = clip_d(emb_out, emb_in, emb_ref);
        result.per_sample.push_back(scores);

        sum_clip_t += scores.clip_t;
        sum_l1 += scores.l1;
        sum_clip_d += scores.clip_d;
        output_probs.push_back(emb_out);
    }

    const double n = static_cast<double>(manifest.samples.size());
    result.aggregate.clip_t = sum_clip_t / n;
    result.aggregate.l1 = sum_l1 / n;
    result.aggregate.clip_d = sum_clip_d / n;
    result.aggregate.inception_score = inception_score(output_probs);
    result.aggregate.sample_count = static_cast<int>(manifest.samples.size());
    return result;
}

std::string eval_report_json(const BatchEval& eval, int indent) {
    nlohmann::json doc;
    doc["aggregate"] = {
        {"clip_t", eval.aggregate.clip_t},
        {"clip_t_x100", 100.0 * eval.aggregate.clip_t},
        {"inception_score", eval.aggregate.inception_score},
        {"l1", eval.aggregate.l1},
        {"clip_d", eval.aggregate.clip_d},
        {"sample_count", eval.aggregate.sample_count},
    };
    auto& samples = doc["per_sample"] = nlohmann::json::array();
    for (const SampleScores& s : eval.per_sample)
        samples.push_back({{"clip_t", s.clip_t},
                           {"clip_t_x100", 100.0 * s.clip_t},
                           {"l1", s.l1},
                           {"clip_d", s.clip_d}});
    return doc.dump(indent);
}

} // namespace laf
