#ifndef PLANARMATCH_ERRORS_HPP
#define PLANARMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace planarmatch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input graph / embedding is malformed (bad rotation system, Euler check failed).
struct EmbeddingInvalid : Error {
    using Error::Error;
};

// Vertex set passed to contraction induces a disconnected subgraph.
struct ContractionDisconnected : Error {
    using Error::Error;
};

// The (sub)graph has no perfect matching where one was required.
struct NoPerfectMatching : Error {
    explicit NoPerfectMatching(const std::string& what, int component = -1)
        : Error(what), component_id(component) {}
    int component_id;
};

struct NotTwoConnected : Error {
    using Error::Error;
};

struct DegenerateDoubleFace : Error {
    using Error::Error;
};

struct InvalidMatching : Error {
    using Error::Error;
};

struct NotBipartite : Error {
    using Error::Error;
};

struct Infeasible : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct PreconditionNotAllowed : Error {
    using Error::Error;
};

// A state that a correct run can never reach (broken Pfaffian orientation,
// failed stitch, exceeded recursion cap).  Always a bug, never user error.
struct InternalError : Error {
    using Error::Error;
};

struct InternalSignError : InternalError {
    using InternalError::InternalError;
};

struct StitchFailure : InternalError {
    using InternalError::InternalError;
};

struct ParseError : Error {
    ParseError(const std::string& what, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

}  // namespace planarmatch

#endif
