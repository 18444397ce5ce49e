#pragma once

// Error types shared across the library. Every failure mode callers are
// expected to handle gets its own type so tests can catch it precisely.

#include <stdexcept>
#include <string>

namespace mtp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -- construction / validation --------------------------------------------

class ValidationError : public Error {
public:
    enum class Kind {
        IntraPartArc,   // arc joins two vertices of the same part
        DoubleArc,      // both (u,v) and (v,u) present in a tournament
        MissingArc,     // cross-part pair with no orientation
        DuplicateArc,   // same arc listed twice
        Loop,           // arc (v,v)
        BadVertex,      // label out of range / not covered by parts
        BadParts,       // empty part, overlapping parts, bad labels
    };

    ValidationError(Kind kind, int u, int v, const std::string& what)
        : Error(what), kind(kind), u(u), v(v) {}

    Kind kind;
    int u;
    int v;
};

class EmptyGraph : public Error {
public:
    EmptyGraph() : Error("operation undefined on an empty digraph") {}
};

class OverlappingSets : public Error {
public:
    explicit OverlappingSets(int v)
        : Error("vertex " + std::to_string(v) + " lies in both sets"), vertex(v) {}
    int vertex;
};

class VertexNotOnCycle : public Error {
public:
    explicit VertexNotOnCycle(int v)
        : Error("vertex " + std::to_string(v) + " is not on the cycle"), vertex(v) {}
    int vertex;
};

// Would falsify the sink observation for multipartite tournaments; treated
// as an internal-consistency failure and must abort the computation.
class ObservationViolated : public Error {
public:
    using Error::Error;
};

// -- generators -------------------------------------------------------------

class ExhaustedAttempts : public Error {
public:
    using Error::Error;
};

class BadArity : public Error {
public:
    using Error::Error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

// -- packing ----------------------------------------------------------------

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class NotTriangleFree : public Error {
public:
    using Error::Error;
};

class TriangleFree : public Error {
public:
    using Error::Error;
};

class NonBipartiteTerminal : public Error {
public:
    using Error::Error;
};

class NotAnExtension : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// A complete search failed on an instance whose hypotheses hold. Either an
// implementation bug or a counterexample to a published theorem; the
// offending instance travels with the exception so it is never lost.
class InternalExhaustion : public Error {
public:
    InternalExhaustion(const std::string& what, std::string instance_mtg)
        : Error(what), instance_mtg(std::move(instance_mtg)) {}
    std::string instance_mtg;
};

// -- oracle -----------------------------------------------------------------

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotStrong : public Error {
public:
    using Error::Error;
};

// -- file format ------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

class CountMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace mtp
