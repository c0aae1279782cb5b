#include "paratwist/quadsolve.hpp"

#include <algorithm>

namespace paratwist {

std::optional<Int> sqrt_mod(const Int& a, const Int& m) {
    if (m <= 0) throw InternalError("sqrt_mod: modulus must be positive");
    Int target = mod_pos(a, m);
    for (Int r = 0; r < m; ++r)
        if (mod_pos(r * r, m) == target) return r;
    return std::nullopt;
}

Int inv_mod(const Int& a, const Int& m) {
    if (m <= 0) throw InternalError("inv_mod: modulus must be positive");
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertible(a.get_str() + " is not invertible mod " + m.get_str());
    if (r <= 0) r += m;
    return r;
}

RootSetModP2 roots_mod_p2(const QuadPoly& f, const Int& p) {
    if (divides(p, f.A))
        throw LeadingCoeffDivisible("leading coefficient " + f.A.get_str() + " divisible by " + p.get_str());
    Int p2 = p * p;
    Int D = f.disc();
    RootSetModP2 out;
    if (!divides(p, D)) {
        std::optional<Int> s = sqrt_mod(D, p2);
        if (!s) {
            out.kind = RootSetKind::Empty;
            return out;
        }
        Int i2A = inv_mod(2 * f.A, p2);
        Int r1 = mod_pos((-f.B + *s) * i2A, p2);
        Int r2 = mod_pos((-f.B - *s) * i2A, p2);
        out.kind = RootSetKind::Pair;
        out.roots = {r1, r2};
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }
    if (!divides(p2, D)) {
        out.kind = RootSetKind::Empty;
        return out;
    }
    Int r0 = mod_pos(-f.B * inv_mod(2 * f.A, p2), p2);
    out.kind = RootSetKind::Line;
    for (Int y = 0; y < p; ++y) out.roots.push_back(mod_pos(r0 + p * y, p2));
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

bool satisfies_R(const QuadPoly& f, const Int& r, int k, RPredicate which, const Int& p) {
    if (divides(p, f.A)) throw HypothesisViolated("unit leading coefficient required");
    if (k != 1 && k != 2) throw HypothesisViolated("k must be 1 or 2");
    Int deriv = 2 * f.A * r + f.B;
    Int value = f.eval(r);
    if (which == RPredicate::ModPClass) {
        Int m1 = pow_int(p, static_cast<unsigned long>(k - 1));
        Int m2 = pow_int(p, static_cast<unsigned long>(k));
        return divides(m1, deriv) && divides(m2, value);
    }
    if (!divides(p * p, value)) throw HypothesisViolated("r must solve the quadratic mod p^2");
    Int m1 = pow_int(p, static_cast<unsigned long>(k));
    Int m2 = pow_int(p, static_cast<unsigned long>(k + 2));
    return divides(m1, deriv) && divides(m2, value);
}

}  // namespace paratwist
