#pragma once

#include <optional>
#include <vector>

#include "paratwist/arith.hpp"

namespace paratwist {

struct QuadPoly {
    Int A, B, C;

    Int eval(const Int& x) const { return A * x * x + B * x + C; }
    Int disc() const { return B * B - 4 * A * C; }
};

// Least non-negative r with r^2 = a mod m, found by enumeration; absence is
// a value, not an error.
std::optional<Int> sqrt_mod(const Int& a, const Int& m);

// Least positive inverse of a mod m; throws NotInvertible.
Int inv_mod(const Int& a, const Int& m);

enum class RootSetKind { Empty, Pair, Line };

// Solutions of A x^2 + B x + C = 0 mod p^2 for unit A: none, two, or a full
// residue line r0 + p Z/p, as residues in [0, p^2) ascending.
struct RootSetModP2 {
    RootSetKind kind;
    std::vector<Int> roots;
};
RootSetModP2 roots_mod_p2(const QuadPoly& f, const Int& p);  // throws LeadingCoeffDivisible

// The two root-refinement predicate families, k in {1, 2}:
//   ModPClass   (r considered mod p):    2Ar + B = 0 mod p^(k-1)  and  f(r) = 0 mod p^k
//   ModP2Root   (r a root of f mod p^2): 2Ar + B = 0 mod p^k      and  f(r) = 0 mod p^(k+2)
// ModP2Root requires f(r) = 0 mod p^2 on entry. Both require a unit leading
// coefficient. Violations throw HypothesisViolated.
enum class RPredicate { ModPClass, ModP2Root };
bool satisfies_R(const QuadPoly& f, const Int& r, int k, RPredicate which, const Int& p);

}  // namespace paratwist
