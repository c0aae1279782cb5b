#pragma once

#include <stdexcept>
#include <string>

namespace paratwist {

// Invariant breach inside the library. Anything of this type escaping to a
// caller is a bug in this code, not a user error; the CLI maps it to exit 1.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// A GL2(Q) substitution left the half-integral lattice.
struct NonIntegralResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduction was asked for a form that is not positive definite.
struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient was requested at an index outside the admissible set
// (alpha not divisible by the level, alpha <= 0, or det <= 0).
struct OutsideANplus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Character evaluation of a rational whose denominator the prime divides.
struct NonPIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadratic character sum with both leading coefficients zero mod p; the
// closed form has no value there.
struct BothVanish : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition of a closed-form evaluation does not hold for the input.
struct HypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root finding mod p^2 requires a unit leading coefficient.
struct LeadingCoeffDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input rejected before any computation: bad prime, prime dividing the level,
// or a form outside the index set of the stated level.
struct OutsideLevel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidHeader : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    long line;
    std::string detail;
    ParseError(long line_, const std::string& detail_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + detail_ : detail_),
          line(line_),
          detail(detail_) {}
};

// Two table lines land on the same canonical key with different values.
// line is 0 when the conflict arises outside file ingestion.
struct DuplicateKeyConflict : std::runtime_error {
    long line;
    std::string detail;
    DuplicateKeyConflict(long line_, const std::string& detail_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + detail_ : detail_),
          line(line_),
          detail(detail_) {}
};

// The root-condition polynomial of a form whose entries lack the divisibility
// needed for integral coefficients.
struct NonIntegralCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace paratwist
