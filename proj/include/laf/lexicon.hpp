#ifndef LAF_LEXICON_HPP
#define LAF_LEXICON_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "laf/token.hpp"

namespace laf {

struct LexiconEntry {
    std::string lemma;
    Pos pos = Pos::Noun;
};

// Suffix fallback used for words the lexicon does not know. Rules are tried
// in order; a rule fires only for words of at least min_length characters,
// which keeps short nouns like "ring" or "shed" out of the verb rules.
struct SuffixRule {
    std::string suffix;
    Pos pos = Pos::Noun;
    std::size_t min_length = 0;
};

// Word list backing the tagger. Loaded from a TSV file with lines
//   surface <TAB> lemma <TAB> pos
// where pos is one of DET ADJ NOUN VERB ADP NUM OTHER; '#' starts a comment
// and blank lines are ignored. Surfaces are stored lowercased. validate()
// additionally requires every lemma to be resolvable: either equal to its
// own surface or present as a surface itself.
class Lexicon {
public:
    Lexicon();

    // Both loaders throw LexiconLoadError with the offending line number.
    static Lexicon from_file(const std::string& path);
    static Lexicon from_stream(std::istream& in, const std::string& name);

    void add(std::string_view surface, std::string_view lemma, Pos pos);
    const LexiconEntry* find(std::string_view surface_lower) const;

    void validate() const;

    const std::vector<SuffixRule>& fallback_rules() const { return rules_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, LexiconEntry> entries_;
    std::vector<SuffixRule> rules_;
};

// Assigns lemma and pos to every token:
//   1. exact lexicon entry for the lowercased surface wins;
//   2. plural strip: drop a trailing "s" (not "ss"), then "es", and accept
//      the first stem that is itself an entry (lemma/pos taken from it);
//   3. suffix fallback rules in order (-ing -> VERB, -ed -> VERB);
//   4. all-digit tokens -> NUM; everything else -> NOUN.
// Total: every token always receives some tag.
std::vector<Token> tag_pos(std::vector<Token> tokens, const Lexicon& lexicon);

} // namespace laf

#endif
