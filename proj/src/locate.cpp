#include "laf/locate.hpp"

#include "json.hpp"

#include "laf/errors.hpp"

namespace laf {

const char* to_string(LocateMode mode) {
    switch (mode) {
    case LocateMode::PaperLiteral: return "paper_literal";
    case LocateMode::ImageResidual: return "image_residual";
    }
    return "image_residual";
}

const char* to_string(LocateRule rule) {
    switch (rule) {
    case LocateRule::SubjectChange: return "subject_change";
    case LocateRule::AttributeDiff: return "attribute_diff";
    }
    return "subject_change";
}

std::set<std::string> get_common_chunk(const ChunkSet& caption,
                                       const ChunkSet& prompt) {
    std::set<std::string> common;
    for (const Chunk& c : caption.chunks)
        if (find_chunk(prompt, c.root.lemma)) common.insert(c.root.lemma);
    return common;
}

std::vector<Token> diff_modifiers(const Chunk& caption_chunk,
                                  const Chunk& prompt_chunk, LocateMode mode) {
    if (caption_chunk.root.lemma != prompt_chunk.root.lemma)
        throw RootMismatch("diff_modifiers: '" + caption_chunk.root.lemma +
                           "' vs '" + prompt_chunk.root.lemma + "'");
    const Chunk& keep =
        mode == LocateMode::PaperLiteral ? prompt_chunk : caption_chunk;
    const Chunk& drop =
        mode == LocateMode::PaperLiteral ? caption_chunk : prompt_chunk;

    std::vector<Token> diff;
    for (const Token& tok : keep.children) {
        bool shared = false;
        for (const Token& other : drop.children)
            if (other.lemma == tok.lemma) { shared = true; break; }
        if (!shared) diff.push_back(tok);
    }
    return diff;
}

EditPlan locate(const ChunkSet& caption, const ChunkSet& prompt,
                LocateMode mode) {
    if (prompt.chunks.empty())
        throw EmptyPrompt("edit prompt has no chunks");

    EditPlan plan;
    plan.mode = mode;
    for (const Chunk& chunk : prompt.chunks)
        plan.positive_concepts.push_back(chunk_phrase(chunk));

    const std::set<std::string> common = get_common_chunk(caption, prompt);

    if (common.empty()) {
        // The prompt talks about different objects entirely: the whole
        // caption content has to go.
        for (const Chunk& chunk : caption.chunks) {
            const std::string phrase = chunk_phrase(chunk);
            plan.forgetting_elements.push_back(phrase);
            plan.provenance.push_back(
                {phrase, phrase, LocateRule::SubjectChange});
        }
        return plan;
    }

    // Shared objects: forget one "<modifier> <root>" phrase per modifier the
    // two sides disagree on. Visit roots in caption order for determinism.
    for (const Chunk& caption_chunk : caption.chunks) {
        if (!common.contains(caption_chunk.root.lemma)) continue;
        const Chunk* prompt_chunk = find_chunk(prompt, caption_chunk.root.lemma);
        const std::vector<Token> diff =
            diff_modifiers(caption_chunk, *prompt_chunk, mode);
        const Chunk& source =
            mode == LocateMode::PaperLiteral ? *prompt_chunk : caption_chunk;
        for (const Token& tok : diff) {
            const std::string element = tok.lemma + " " + caption_chunk.root.lemma;
            plan.forgetting_elements.push_back(element);
            plan.provenance.push_back(
                {element, chunk_phrase(source), LocateRule::AttributeDiff});
        }
    }
    return plan;
}

std::string to_json_string(const EditPlan& plan, int indent) {
    nlohmann::json doc;
    doc["positive_concepts"] = plan.positive_concepts;
    doc["forgetting_elements"] = plan.forgetting_elements;
    doc["mode"] = to_string(plan.mode);
    auto& prov = doc["provenance"] = nlohmann::json::array();
    for (const Provenance& p : plan.provenance)
        prov.push_back({{"element", p.element},
                        {"source_chunk", p.source_chunk},
                        {"rule", to_string(p.rule)}});
    return doc.dump(indent);
}

} // namespace laf
