#include "laf/chunker.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

#include "laf/errors.hpp"

namespace laf {

const char* to_string(Relation rel) {
    switch (rel) {
    case Relation::Subject: return "subject";
    case Relation::ObjectOfPreposition: return "object_of_preposition";
    case Relation::Other: return "other";
    }
    return "other";
}

namespace {

std::optional<Relation> relation_from_string(std::string_view name) {
    if (name == "subject") return Relation::Subject;
    if (name == "object_of_preposition") return Relation::ObjectOfPreposition;
    if (name == "other") return Relation::Other;
    return std::nullopt;
}

// Children form a set keyed by lemma; first occurrence wins.
void add_child(std::vector<Token>& children, const Token& tok) {
    for (const Token& c : children)
        if (c.lemma == tok.lemma) return;
    children.push_back(tok);
}

} // namespace

ChunkSet parse_chunks(const std::vector<Token>& tagged_tokens,
                      std::string source_text) {
    ChunkSet result;
    result.source_text = std::move(source_text);
    if (tagged_tokens.empty()) return result;

    std::vector<Token> pending; // modifiers waiting for their root
    bool in_pp = false;         // adposition governs the next chunk
    bool subject_seen = false;
    int last_root_index = -2; // token index of the latest chunk root

    auto emit = [&](const Token& root) {
        Chunk chunk;
        chunk.root = root;
        for (const Token& tok : pending) add_child(chunk.children, tok);
        pending.clear();
        if (in_pp) {
            chunk.relation = Relation::ObjectOfPreposition;
            in_pp = false;
        } else if (!subject_seen) {
            chunk.relation = Relation::Subject;
            subject_seen = true;
        } else {
            chunk.relation = Relation::Other;
        }
        last_root_index = root.index;
        result.chunks.push_back(std::move(chunk));
    };

    const std::size_t n = tagged_tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Token& tok = tagged_tokens[i];
        switch (tok.pos) {
        case Pos::Det:
            break; // opens a phrase but never becomes a child
        case Pos::Adj:
        case Pos::Num:
            pending.push_back(tok);
            break;
        case Pos::Noun:
            // A noun directly followed by another noun modifies it
            // ("tennis ball"); the last noun of the run is the root.
            if (i + 1 < n && tagged_tokens[i + 1].pos == Pos::Noun)
                pending.push_back(tok);
            else
                emit(tok);
            break;
        case Pos::Verb:
            if (is_participle(tok)) {
                // "a car parked ..." attaches to the chunk just closed;
                // "a parked car" waits for its noun.
                if (!result.chunks.empty() && tok.index == last_root_index + 1)
                    add_child(result.chunks.back().children, tok);
                else
                    pending.push_back(tok);
            } else {
                pending.clear(); // finite verbs break the phrase
            }
            break;
        case Pos::Adp:
            pending.clear();
            in_pp = true;
            break;
        case Pos::Other:
            pending.clear();
            break;
        }
    }

    if (result.chunks.empty())
        throw NoChunkFound("no noun chunk in: \"" + result.source_text + "\"");

    // Merge repeated roots ("a red car ... the car") into one chunk.
    std::vector<Chunk> merged;
    for (Chunk& chunk : result.chunks) {
        Chunk* existing = nullptr;
        for (Chunk& m : merged)
            if (m.root.lemma == chunk.root.lemma) { existing = &m; break; }
        if (!existing) {
            merged.push_back(std::move(chunk));
        } else {
            for (const Token& c : chunk.children)
                add_child(existing->children, c);
        }
    }
    result.chunks = std::move(merged);
    return result;
}

std::string chunk_phrase(const Chunk& chunk) {
    std::vector<const Token*> mods;
    mods.reserve(chunk.children.size());
    for (const Token& c : chunk.children) mods.push_back(&c);
    std::sort(mods.begin(), mods.end(),
              [](const Token* a, const Token* b) { return a->index < b->index; });
    std::string phrase;
    for (const Token* m : mods) {
        phrase += m->lemma;
        phrase += ' ';
    }
    phrase += chunk.root.lemma;
    return phrase;
}

const Chunk* find_chunk(const ChunkSet& set, std::string_view root_lemma) {
    for (const Chunk& chunk : set.chunks)
        if (chunk.root.lemma == root_lemma) return &chunk;
    return nullptr;
}

std::vector<GoldEntry> load_gold_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open gold corpus '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("gold corpus '" + path + "': " + e.what());
    }
    if (!doc.is_array())
        throw IoError("gold corpus '" + path + "': expected a JSON array");

    std::vector<GoldEntry> corpus;
    for (const auto& item : doc) {
        GoldEntry entry;
        try {
            entry.text = item.at("text").get<std::string>();
            for (const auto& c : item.at("chunks")) {
                GoldChunk gc;
                gc.root = c.at("root").get<std::string>();
                for (const auto& child : c.at("children"))
                    gc.children.push_back(child.get<std::string>());
                auto rel = relation_from_string(
                    c.at("relation").get<std::string>());
                if (!rel)
                    throw IoError("gold corpus '" + path +
                                  "': bad relation in entry \"" + entry.text +
                                  "\"");
                gc.relation = *rel;
                entry.chunks.push_back(std::move(gc));
            }
        } catch (const nlohmann::json::exception& e) {
            throw IoError("gold corpus '" + path + "': " + e.what());
        }
        corpus.push_back(std::move(entry));
    }
    return corpus;
}

bool matches_gold(const ChunkSet& parsed, const GoldEntry& gold) {
    if (parsed.chunks.size() != gold.chunks.size()) return false;
    for (std::size_t i = 0; i < parsed.chunks.size(); ++i) {
        const Chunk& chunk = parsed.chunks[i];
        const GoldChunk& want = gold.chunks[i];
        if (chunk.root.lemma != want.root) return false;
        if (chunk.relation != want.relation) return false;
        std::set<std::string> got;
        for (const Token& c : chunk.children) got.insert(c.lemma);
        std::set<std::string> expected(want.children.begin(),
                                       want.children.end());
        if (got != expected) return false;
    }
    return true;
}

} // namespace laf
