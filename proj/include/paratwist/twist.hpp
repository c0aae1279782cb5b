#pragma once

#include <map>
#include <string>
#include <vector>

#include "paratwist/coeffs.hpp"
#include "paratwist/quadsolve.hpp"

namespace paratwist {

// Ambient data of a twist computation: source level N, weight k, and the odd
// prime p of the quadratic character, with p coprime to N. The twisted form
// lives at level N p^4; inputs to classification and twisting are indexed by
// that level, outputs reference level-N coefficients.
struct TwistContext {
    Int N;
    long k;
    Int p;

    TwistContext(const Int& N_, long k_, const Int& p_);  // throws OutsideLevel
};

enum class TwistCase { I, II, III, IV, V };

const char* case_name(TwistCase c);  // "Case I" ... "Case V"

// Valuation-pattern dispatch on (v_p(2 beta), v_p(alpha)); total on the
// level-N p^4 index set. Throws OutsideLevel for forms outside it.
TwistCase classify(const HalfIntegralForm& S, const TwistContext& ctx);

// The root-condition polynomial alpha p^-4 X^2 - 2 beta p^-2 X + gamma.
// Throws NonIntegralCoefficient unless p^4 | alpha and p^2 | 2 beta.
QuadPoly f_S(const HalfIntegralForm& S, const Int& p);

// One twisted coefficient as a formal combination of level-N coefficients.
// The combination multiplies the (symbolic, never evaluated) Gauss-sum
// factor W common to the whole twisted expansion.
struct SymbolicTwist {
    TwistCase case_label;
    LinearForm form;
    std::map<std::string, std::string> branches;
};
SymbolicTwist a_chi_symbolic(const HalfIntegralForm& S, const TwistContext& ctx);

struct TwistReport {
    TwistCase case_label;
    Rat value;  // multiplies the symbolic Gauss factor W
    bool approximate = false;
    std::vector<HalfIntegralForm> consumed;  // canonical keys, ascending
    std::map<std::string, std::string> branches;
    // Largest power of p appearing in a term-coefficient denominator; the
    // natural common denominator the evaluation was assembled over.
    long denom_exponent = 0;
};

// Numeric twisted coefficient against a table, which must carry the context's
// level and weight. assume_zero_outside treats absent keys as 0 and flags the
// report approximate; otherwise absence throws MissingCoefficient.
TwistReport a_chi(const HalfIntegralForm& S, const TwistContext& ctx, const CoeffTable& table,
                  bool assume_zero_outside = false);

// Canonical level-N keys a numeric evaluation would touch, ascending.
std::vector<HalfIntegralForm> required_support(const HalfIntegralForm& S, const TwistContext& ctx);

}  // namespace paratwist
