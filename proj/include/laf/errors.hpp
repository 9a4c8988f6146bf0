#ifndef LAF_ERRORS_HPP
#define LAF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace laf {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- text parsing ---------------------------------------------------------

// Malformed lexicon file (bad column count, unknown POS, dangling lemma, ...).
class LexiconLoadError final : public Error {
public:
    using Error::Error;
};

// A non-empty sentence contained no noun, so no chunk could be built.
class NoChunkFound final : public Error {
public:
    using Error::Error;
};

// --- locating --------------------------------------------------------------

// The edit prompt parsed to an empty chunk set; there is nothing to aim for.
class EmptyPrompt final : public Error {
public:
    using Error::Error;
};

// Chunks handed to diff_modifiers() must share the same root lemma.
class RootMismatch final : public Error {
public:
    using Error::Error;
};

// --- score model / sampling -----------------------------------------------

// Vector lengths disagree (latents, noise predictions, embeddings, probs).
class DimensionMismatch final : public Error {
public:
    using Error::Error;
};

// A denoising transition was requested with t_prev >= t (or t out of range).
class TimestepOrder final : public Error {
public:
    using Error::Error;
};

// Noise schedule parameters violate 0 < beta_start < beta_end < 1,
// T >= 1 or 1 <= inference steps <= T.
class InvalidScheduleParams final : public Error {
public:
    using Error::Error;
};

// Concept-resolution failures map to their own CLI exit code, so they get a
// common base distinct from parse errors.
class ConceptError : public Error {
public:
    using Error::Error;
};

// Phrase or label matched no mixture component.
class ConceptUnknown final : public ConceptError {
public:
    using ConceptError::ConceptError;
};

// Phrase matched two or more component labels; refusing to guess.
class ConceptAmbiguous final : public ConceptError {
public:
    using ConceptError::ConceptError;
};

// --- metrics ----------------------------------------------------------------

// Cosine similarity of a (near-)zero vector is undefined.
class ZeroNorm final : public Error {
public:
    using Error::Error;
};

// A class-probability vector had negative entries or did not sum to 1.
class NotAProbability final : public Error {
public:
    using Error::Error;
};

// A ratio metric would divide by a (near-)zero denominator.
class DivisionByNearZero final : public Error {
public:
    using Error::Error;
};

// --- I/O --------------------------------------------------------------------

// File could not be read/written or contained syntactically invalid data.
class IoError final : public Error {
public:
    using Error::Error;
};

} // namespace laf

#endif
