#ifndef LAF_LOCATE_HPP
#define LAF_LOCATE_HPP

#include <set>
#include <string>
#include <vector>

#include "laf/chunker.hpp"

namespace laf {

// Which side contributes the attribute difference on a shared object.
// ImageResidual keeps the caption-side (current image) modifiers that the
// prompt drops — the thing that must be forgotten is what the image shows.
// PaperLiteral takes the prompt-side modifiers instead; on pure attribute
// edits this makes the forgetting phrase coincide with the positive concept,
// which is exactly why the mode is kept selectable.
enum class LocateMode {
    PaperLiteral,
    ImageResidual
};

const char* to_string(LocateMode mode);

enum class LocateRule {
    SubjectChange, // no shared root: forget entire caption chunks
    AttributeDiff  // shared root: forget "<modifier> <root>" phrases
};

const char* to_string(LocateRule rule);

// Records where each forgetting element came from.
struct Provenance {
    std::string element;      // the forgetting phrase
    std::string source_chunk; // phrase of the chunk it was derived from
    LocateRule rule = LocateRule::SubjectChange;
};

struct EditPlan {
    std::vector<std::string> positive_concepts;   // prompt chunk phrases
    std::vector<std::string> forgetting_elements; // phrases to suppress
    LocateMode mode = LocateMode::ImageResidual;
    std::vector<Provenance> provenance;           // one entry per element
};

// Root lemmas present in both sets.
std::set<std::string> get_common_chunk(const ChunkSet& caption,
                                       const ChunkSet& prompt);

// Modifier tokens (by lemma) present on one side only, for two chunks with
// the same root lemma: prompt-side minus caption-side for PaperLiteral,
// caption-side minus prompt-side for ImageResidual. Token order follows the
// source sentence. Throws RootMismatch when the roots differ.
std::vector<Token> diff_modifiers(const Chunk& caption_chunk,
                                  const Chunk& prompt_chunk,
                                  LocateMode mode);

// Splits an edit into what to steer towards and what to suppress:
//   positive concepts = every prompt chunk phrase;
//   no shared root    -> forget every caption chunk phrase (SubjectChange);
//   shared roots      -> for each, forget one "<modifier> <root>" phrase per
//                        differing modifier (AttributeDiff).
// Shared roots are visited in caption order; the caption side may be empty
// (nothing to forget), but an empty prompt throws EmptyPrompt.
EditPlan locate(const ChunkSet& caption, const ChunkSet& prompt,
                LocateMode mode = LocateMode::ImageResidual);

std::string to_json_string(const EditPlan& plan, int indent = 2);

} // namespace laf

#endif
