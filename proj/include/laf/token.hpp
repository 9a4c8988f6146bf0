#ifndef LAF_TOKEN_HPP
#define LAF_TOKEN_HPP

#include <optional>
#include <string>
#include <string_view>

namespace laf {

// Coarse part-of-speech inventory; exactly what the chunker needs, no more.
enum class Pos {
    Det,   // determiners/articles: "a", "the", "some"
    Adj,   // adjectives: "red", "wooden"
    Noun,  // common nouns (the only chunk roots)
    Verb,  // verbs, including participles
    Adp,   // adpositions/prepositions: "on", "of", "near"
    Num,   // numerals: "two", "42"
    Other  // conjunctions, adverbs, anything else
};

const char* to_string(Pos pos);
std::optional<Pos> pos_from_string(std::string_view name);

struct Token {
    std::string surface; // as written, punctuation stripped
    std::string lemma;   // lowercased base form
    Pos pos = Pos::Other;
    int index = 0;       // ordinal position within the sentence

    bool operator==(const Token&) const = default;
};

// Participles ("parked", "riding") act as modifiers inside noun chunks.
inline bool is_participle(const Token& tok) {
    return tok.pos == Pos::Verb &&
           (tok.lemma.ends_with("ing") || tok.lemma.ends_with("ed"));
}

} // namespace laf

#endif
