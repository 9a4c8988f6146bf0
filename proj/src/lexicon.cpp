#include "laf/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "laf/errors.hpp"
#include "laf/tokenize.hpp"

namespace laf {

namespace {

// Length floors keep short nouns ("ring", "shed", "bed") away from the verb
// rules; genuinely ambiguous words belong in the lexicon, which wins anyway.
std::vector<SuffixRule> default_rules() {
    return {
        {"ing", Pos::Verb, 5},
        {"ed", Pos::Verb, 5},
    };
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (!std::isdigit(c)) return false;
    return true;
}

} // namespace

Lexicon::Lexicon() : rules_(default_rules()) {}

void Lexicon::add(std::string_view surface, std::string_view lemma, Pos pos) {
    entries_[to_lower(surface)] = LexiconEntry{to_lower(lemma), pos};
}

const LexiconEntry* Lexicon::find(std::string_view surface_lower) const {
    auto it = entries_.find(std::string(surface_lower));
    return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::validate() const {
    for (const auto& [surface, entry] : entries_) {
        if (entry.lemma == surface) continue;
        if (!entries_.contains(entry.lemma))
            throw LexiconLoadError("lexicon: lemma '" + entry.lemma +
                                   "' of surface '" + surface +
                                   "' is not itself an entry");
    }
}

Lexicon Lexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw LexiconLoadError("lexicon: cannot open '" + path + "'");
    return from_stream(in, path);
}

Lexicon Lexicon::from_stream(std::istream& in, const std::string& name) {
    Lexicon lex;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view sv = line;
        if (sv.empty() || sv.front() == '#') continue;
        // surface \t lemma \t pos
        auto tab1 = sv.find('\t');
        auto tab2 = tab1 == std::string_view::npos
                        ? std::string_view::npos
                        : sv.find('\t', tab1 + 1);
        if (tab1 == std::string_view::npos || tab2 == std::string_view::npos ||
            sv.find('\t', tab2 + 1) != std::string_view::npos)
            throw LexiconLoadError(name + ":" + std::to_string(line_no) +
                                   ": expected 3 tab-separated fields");
        std::string_view surface = sv.substr(0, tab1);
        std::string_view lemma = sv.substr(tab1 + 1, tab2 - tab1 - 1);
        std::string_view pos_name = sv.substr(tab2 + 1);
        if (surface.empty() || lemma.empty())
            throw LexiconLoadError(name + ":" + std::to_string(line_no) +
                                   ": empty surface or lemma");
        auto pos = pos_from_string(pos_name);
        if (!pos)
            throw LexiconLoadError(name + ":" + std::to_string(line_no) +
                                   ": unknown POS '" + std::string(pos_name) +
                                   "'");
        lex.add(surface, lemma, *pos);
    }
    try {
        lex.validate();
    } catch (const LexiconLoadError& e) {
        throw LexiconLoadError(name + ": " + e.what());
    }
    return lex;
}

std::vector<Token> tag_pos(std::vector<Token> tokens, const Lexicon& lexicon) {
    for (Token& tok : tokens) {
        const std::string key = to_lower(tok.surface);
        if (const LexiconEntry* e = lexicon.find(key)) {
            tok.lemma = e->lemma;
            tok.pos = e->pos;
            continue;
        }
        // Plural strip: "cars" -> "car", "buses" -> "bus". Try the shorter
        // strip first; only stems that are themselves entries count.
        const LexiconEntry* stem_entry = nullptr;
        if (key.size() > 2 && key.ends_with('s') && !key.ends_with("ss"))
            stem_entry = lexicon.find(std::string_view(key).substr(0, key.size() - 1));
        if (!stem_entry && key.size() > 3 && key.ends_with("es"))
            stem_entry = lexicon.find(std::string_view(key).substr(0, key.size() - 2));
        if (stem_entry) {
            tok.lemma = stem_entry->lemma;
            tok.pos = stem_entry->pos;
            continue;
        }
        bool matched = false;
        for (const SuffixRule& rule : lexicon.fallback_rules()) {
            if (key.size() >= rule.min_length && key.ends_with(rule.suffix)) {
                tok.lemma = key;
                tok.pos = rule.pos;
                matched = true;
                break;
            }
        }
        if (matched) continue;
        tok.lemma = key;
        tok.pos = all_digits(key) ? Pos::Num : Pos::Noun;
    }
    return tokens;
}

} // namespace laf
