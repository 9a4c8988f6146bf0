#ifndef LAF_EVAL_HPP
#define LAF_EVAL_HPP

#include <string>
#include <vector>

#include "laf/metrics.hpp"
#include "laf/mixture.hpp"

namespace laf {

// One edit to score: the vector that went in, the vector that came out, an
// independent reference for the target concept, and the prompt used.
struct ManifestEntry {
    std::string input;     // path to vector file
    std::string output;    // path to vector file
    std::string reference; // path to vector file
    std::string prompt;    // prompt text, embedded via its first chunk-like
                           // word match against the model labels
};

struct Manifest {
    std::string model_path;
    std::vector<ManifestEntry> samples;
};

// {"model": path, "samples": [{"input", "output", "reference", "prompt"}]}.
// Relative paths inside the manifest resolve against the manifest's own
// directory. Throws IoError on unreadable/malformed files.
Manifest load_manifest(const std::string& path);

// Accepts a JSON array of numbers or an object with a "z" array (the shape
// written by the sampler's final-state output).
std::vector<double> load_vector_file(const std::string& path);

struct SampleScores {
    double clip_t = 0.0;
    double l1 = 0.0;
    double clip_d = 0.0;
};

struct BatchEval {
    std::vector<SampleScores> per_sample;
    EvalReport aggregate; // means over samples; IS over the output batch
};

// Scores every manifest entry against the model:
//   clip_t: prompt embedding vs output embedding
//   l1:     input vs output vectors
//   clip_d: output embedding vs input/reference embeddings
//   inception_score: over all output responsibility rows at once
BatchEval evaluate_manifest(const Manifest& manifest, const ScoreModel& model);

std::string eval_report_json(const BatchEval& eval, int indent = 2);

} // namespace laf

#endif
