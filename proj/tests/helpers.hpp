#pragma once

// Small conveniences shared by the test binaries: locating the data/
// directory that CMake points us at, loading the default lexicon once,
// and a scratch-directory guard for tests that write files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "laf/chunker.hpp"
#include "laf/lexicon.hpp"
#include "laf/tokenize.hpp"

namespace testutil {

inline std::filesystem::path data_dir() {
    return std::filesystem::path(LAF_DATA_DIR);
}

inline const laf::Lexicon& default_lexicon() {
    static laf::Lexicon lex =
        laf::Lexicon::from_file((data_dir() / "lexicon.tsv").string());
    return lex;
}

// Tokenize + tag + chunk in one go, the way the pipeline does it.
inline laf::ChunkSet parse(const std::string& text) {
    auto tagged = laf::tag_pos(laf::tokenize(text), default_lexicon());
    return laf::parse_chunks(tagged, text);
}

// Creates a unique directory under the system temp dir and removes it
// (recursively) on destruction.
class ScratchDir {
  public:
    explicit ScratchDir(const std::string& stem) {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / (stem + "-" + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("could not create scratch dir for " + stem);
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& body) {
    std::ofstream out(p);
    out << body;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
