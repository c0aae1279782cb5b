#include "paratwist/charsum.hpp"

#include "paratwist/quadsolve.hpp"

namespace paratwist {

int legendre(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw HypothesisViolated("character modulus must be an odd prime, got " + p.get_str());
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int chi_rational(const Rat& x, const Int& p) {
    if (divides(p, x.get_den()))
        throw NonPIntegral("denominator of " + rat_to_string(x) + " is divisible by " + p.get_str());
    return legendre(x.get_num(), p) * legendre(x.get_den(), p);
}

Int gauss_trivial(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw HypothesisViolated("character modulus must be an odd prime, got " + p.get_str());
    return divides(p, a) ? Int(p - 1) : Int(-1);
}

GaussSymbolic gauss_chi(const Int& a, const Int& p) {
    return GaussSymbolic{legendre(a, p), Int(0)};
}

CyclotomicInt::CyclotomicInt(const Int& p) : p_(p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw HypothesisViolated("root-of-unity order must be an odd prime, got " + p.get_str());
    coords_.assign(static_cast<size_t>(p.get_ui()) - 1, Int(0));
}

CyclotomicInt CyclotomicInt::constant(const Int& p, const Int& c) {
    CyclotomicInt r(p);
    r.add_root_power(0, c);
    return r;
}

void CyclotomicInt::add_root_power(const Int& exponent, const Int& coeff) {
    Int e = mod_pos(exponent, p_);
    size_t idx = static_cast<size_t>(e.get_ui());
    if (idx < coords_.size()) {
        coords_[idx] += coeff;
    } else {
        // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        for (Int& c : coords_) c -= coeff;
    }
}

void CyclotomicInt::scale(const Int& c) {
    for (Int& x : coords_) x *= c;
}

CyclotomicInt gauss_bruteforce(bool twisted, const Int& a, const Int& p) {
    CyclotomicInt acc(p);
    for (Int b = 1; b < p; ++b) {
        Int coeff = twisted ? Int(legendre(b, p)) : Int(1);
        acc.add_root_power(a * b, coeff);
    }
    return acc;
}

Int sum_chi_quadratic(const Int& A, const Int& B, const Int& C, const Int& p) {
    if (divides(p, A) && divides(p, B))
        throw BothVanish("quadratic and linear coefficients both vanish mod " + p.get_str());
    Int D = B * B - 4 * A * C;
    int chiA = legendre(A, p);
    return divides(p, D) ? Int((p - 1) * chiA) : Int(-chiA);
}

Int sum_chi_quadratic_bruteforce(const Int& A, const Int& B, const Int& C, const Int& p) {
    Int acc = 0;
    for (Int x = 0; x < p; ++x) acc += legendre(A * x * x + B * x + C, p);
    return acc;
}

Int sum_ms(const Int& A, const Int& B, const Int& C, const Int& p) {
    Int D = B * B - 4 * A * C;
    if (divides(p, A) || !divides(p, D))
        throw HypothesisViolated("needs a unit leading coefficient and p | B^2 - 4AC");
    return Int(legendre(C, p) + legendre(-C, p));
}

PinnedUnitSums sum_ms_bruteforce(const Int& A, const Int& B, const Int& C, const Int& p) {
    Int D = B * B - 4 * A * C;
    if (divides(p, A) || !divides(p, D))
        throw HypothesisViolated("needs a unit leading coefficient and p | B^2 - 4AC");
    PinnedUnitSums out{Int(0), Int(0)};
    for (Int b = 1; b < p; ++b) {
        bool on_line = divides(p, 2 * A * b + B);
        bool on_root = divides(p, A * b * b + B * b + C);
        if (!on_line && !on_root) continue;
        for (Int x = 1; x < p; ++x) {
            if (x == 1) continue;
            Int xinv = inv_mod(x, p);
            for (Int y = 1; y < p; ++y) {
                if (y == 1) continue;
                Int winv = inv_mod(mod_pos(1 - y, p), p);
                if (on_line)
                    out.linear_pinned +=
                        legendre(y * (1 - x) * (A * winv * (y - x) * b * b - B * b - C * xinv), p);
                if (on_root) out.root_pinned += legendre(y * (A * winv * b * b - C * xinv), p);
            }
        }
    }
    return out;
}

Int sum_mm(const Int& A, const Int& B, const Int& C, const Int& p) {
    bool a0 = divides(p, A), b0 = divides(p, B), c0 = divides(p, C);
    int chiA = legendre(A, p), chimA = legendre(-A, p), chiC = legendre(C, p);
    Int D = B * B - 4 * A * C;
    int ell = legendre(D, p);

    if (a0 && b0) return Int((p - 1) * chiC);
    if (!a0 && !b0 && !c0) {
        if (ell == -1) return Int((p - 1) * (chiC + chiA) - chimA);
        if (ell == 1) return Int(-(p + 1) * (chiC + chiA) - chimA);
        return Int(-2 * chiC - chimA);
    }
    if (!a0 && !b0 && c0) return Int(-chimA - chiA);
    if (!a0 && b0 && !c0) {
        // D = -4AC is a unit here, so ell is never 0.
        if (ell == 1) return Int(-2 * chiC - (p + 1) * chiA);
        return Int((p - 1) * chiA);
    }
    if (!a0 && b0 && c0) return Int((p - 1) * (chimA + chiA));
    if (a0 && !b0 && !c0) return Int(-chiC);
    // a0 && !b0 && c0
    return Int(0);
}

Int sum_mm_bruteforce(const Int& A, const Int& B, const Int& C, const Int& p) {
    Int acc = 0;
    for (Int x = 2; x < p; ++x) {
        Int xinv = inv_mod(x, p);
        for (Int y = 2; y < p; ++y) {
            Int winv = inv_mod(mod_pos(1 - y, p), p);
            for (Int b = 1; b < p; ++b)
                acc += legendre(y * (1 - x) * (A * winv * (y - x) * b * b - B * b - C * xinv), p);
        }
    }
    return acc;
}

}  // namespace paratwist
