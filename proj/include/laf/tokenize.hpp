#ifndef LAF_TOKENIZE_HPP
#define LAF_TOKENIZE_HPP

#include <string_view>
#include <vector>

#include "laf/token.hpp"

namespace laf {

// Splits text on whitespace and strips ASCII punctuation from token edges;
// tokens that were pure punctuation are dropped. Each surviving token gets
// index 0,1,2,... in order, lemma = lowercased surface, pos = Other (tagging
// happens separately). Empty or all-whitespace input yields an empty vector.
// Non-ASCII bytes are passed through untouched, so UTF-8 words survive.
std::vector<Token> tokenize(std::string_view text);

// ASCII-only lowercasing used for lemmas and lexicon keys.
std::string to_lower(std::string_view s);

} // namespace laf

#endif
