#pragma once

#include <iosfwd>
#include <string>

#include "paratwist/arith.hpp"

namespace paratwist {

// Symmetric matrix [alpha, beta; beta, gamma] with alpha, gamma integral and
// beta half-integral, stored as (alpha, two_beta, gamma). The off-diagonal
// entry is always carried doubled so every field is an integer.
struct HalfIntegralForm {
    Int alpha;
    Int two_beta;
    Int gamma;

    friend bool operator==(const HalfIntegralForm&, const HalfIntegralForm&) = default;
};

// Lexicographic (alpha, two_beta, gamma) order, for map keys and sorted output.
struct FormLess {
    bool operator()(const HalfIntegralForm& x, const HalfIntegralForm& y) const {
        if (x.alpha != y.alpha) return x.alpha < y.alpha;
        if (x.two_beta != y.two_beta) return x.two_beta < y.two_beta;
        return x.gamma < y.gamma;
    }
};

// Prints "alpha,two_beta,gamma".
std::ostream& operator<<(std::ostream& os, const HalfIntegralForm& f);
std::string form_to_string(const HalfIntegralForm& f);

// Parses "alpha,two_beta,gamma"; throws std::invalid_argument.
HalfIntegralForm parse_form(const std::string& s);

struct IntMat2 {
    Int a, b, c, d;  // [[a, b], [c, d]]
    Int det() const { return a * d - b * c; }
};

struct RatMat2 {
    Rat a, b, c, d;
    Rat det() const { return a * d - b * c; }
};

// (2 beta)^2 - 4 alpha gamma = -4 det(S). Negative exactly for positive
// definite forms with alpha > 0.
Int discriminant4(const HalfIntegralForm& f);

// gcd(alpha, two_beta, gamma) >= 0.
Int content(const HalfIntegralForm& f);

// Membership in the index set of level N: N | alpha, alpha > 0, det > 0.
bool in_ANplus(const HalfIntegralForm& f, const Int& N);

// S |-> M^t S M for integral M.
HalfIntegralForm transform(const HalfIntegralForm& f, const IntMat2& M);

// S |-> A^t S A for rational A; throws NonIntegralResult when the image
// leaves the half-integral lattice.
HalfIntegralForm transform(const HalfIntegralForm& f, const RatMat2& A);

// S |-> (M/den)^t S (M/den) with M integral, den > 0, dividing exactly;
// throws NonIntegralResult otherwise. This is the engine's integrality guard.
HalfIntegralForm transform_scaled(const HalfIntegralForm& f, const IntMat2& M, const Int& den);

struct ReductionResult {
    HalfIntegralForm reduced;  // 0 <= two_beta <= alpha <= gamma
    IntMat2 transform;         // paratwist::transform(reduced, transform) == input
    int det_sign;              // det(transform), +1 or -1
};

// Canonical representative of the GL2(Z) class of a positive definite form,
// with the recovering transform. Throws NotPositiveDefinite.
ReductionResult reduce_gl2z(const HalfIntegralForm& f);

}  // namespace paratwist
