#ifndef LAF_CHUNKER_HPP
#define LAF_CHUNKER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "laf/token.hpp"

namespace laf {

enum class Relation {
    Subject,               // first chunk not governed by a preposition
    ObjectOfPreposition,   // first chunk after an adposition
    Other                  // any later chunk outside a prepositional phrase
};

const char* to_string(Relation rel);

// A flat noun phrase: one noun root plus its modifiers.
struct Chunk {
    Token root;                  // always a Noun
    std::vector<Token> children; // adjectives, numerals, participles,
                                 // compound nouns; never determiners
    Relation relation = Relation::Other;
};

struct ChunkSet {
    std::vector<Chunk> chunks;
    std::string source_text;
};

// Greedy left-to-right chunker for restricted caption English
// ("DET? modifier* NOUN+" phrases glued by prepositions/verbs):
//   * determiners open a phrase but are never emitted as children;
//   * adjectives, numerals and pre-nominal participles collect as pending
//     modifiers for the next noun;
//   * a noun followed by another noun is a compound modifier ("tennis ball");
//     otherwise it closes the phrase as root;
//   * a participle directly after a chunk root attaches to that chunk
//     ("a car parked ..."); anywhere else it is treated as pre-nominal;
//   * other verbs, adpositions and leftover words are boundaries;
//   * the first chunk is the Subject unless a preposition governs it; a
//     chunk right after an adposition is ObjectOfPreposition; the rest Other.
// Chunks with the same root lemma are merged (children unioned by lemma).
// Throws NoChunkFound when a non-empty token list contains no noun; an
// empty token list yields an empty ChunkSet.
ChunkSet parse_chunks(const std::vector<Token>& tagged_tokens,
                      std::string source_text = {});

// "red car": child lemmas in token order, then the root lemma.
std::string chunk_phrase(const Chunk& chunk);

const Chunk* find_chunk(const ChunkSet& set, std::string_view root_lemma);

// --- hand-checked reference parses ------------------------------------------

struct GoldChunk {
    std::string root;
    std::vector<std::string> children; // lemmas, order-insensitive
    Relation relation = Relation::Other;
};

struct GoldEntry {
    std::string text;
    std::vector<GoldChunk> chunks;
};

// JSON array of {"text": ..., "chunks": [{"root", "children", "relation"}]}.
std::vector<GoldEntry> load_gold_corpus(const std::string& path);

// Order-sensitive on chunks, order-insensitive on children.
bool matches_gold(const ChunkSet& parsed, const GoldEntry& gold);

} // namespace laf

#endif
