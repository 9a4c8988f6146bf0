#include "laf/tokenize.hpp"

#include <cctype>

namespace laf {

const char* to_string(Pos pos) {
    switch (pos) {
    case Pos::Det: return "DET";
    case Pos::Adj: return "ADJ";
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adp: return "ADP";
    case Pos::Num: return "NUM";
    case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

std::optional<Pos> pos_from_string(std::string_view name) {
    if (name == "DET") return Pos::Det;
    if (name == "ADJ") return Pos::Adj;
    if (name == "NOUN") return Pos::Noun;
    if (name == "VERB") return Pos::Verb;
    if (name == "ADP") return Pos::Adp;
    if (name == "NUM") return Pos::Num;
    if (name == "OTHER") return Pos::Other;
    return std::nullopt;
}

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s)
        out.push_back(static_cast<char>(std::tolower(c)));
    return out;
}

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// ASCII punctuation only; multibyte UTF-8 passes through untouched.
bool is_punct(unsigned char c) { return c < 0x80 && std::ispunct(c) != 0; }

// Intra-word hyphens and apostrophes survive ("tennis-court", "dog's");
// edge punctuation does not ("court.", "\"red\"").
std::string_view strip_edges(std::string_view word) {
    while (!word.empty() && is_punct(static_cast<unsigned char>(word.front())))
        word.remove_prefix(1);
    while (!word.empty() && is_punct(static_cast<unsigned char>(word.back())))
        word.remove_suffix(1);
    return word;
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t start = i;
        while (i < text.size() &&
               !is_space(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start) continue;
        std::string_view word = strip_edges(text.substr(start, i - start));
        if (word.empty()) continue; // was pure punctuation
        Token tok;
        tok.surface = std::string(word);
        tok.lemma = to_lower(word);
        tok.pos = Pos::Other;
        tok.index = static_cast<int>(tokens.size());
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

} // namespace laf
