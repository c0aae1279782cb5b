#pragma once

#include <vector>

#include "paratwist/arith.hpp"

namespace paratwist {

// Legendre symbol (a/p), p an odd prime. Throws HypothesisViolated for even
// or sub-3 p; primality is the caller's contract.
int legendre(const Int& a, const Int& p);

// Character value of a rational: chi(num) chi(den). Throws NonPIntegral when
// p divides the denominator.
int chi_rational(const Rat& x, const Int& p);

// Sum over units b of e^(2 pi i a b / p) for the trivial character:
// p - 1 when p | a, otherwise -1.
Int gauss_trivial(const Int& a, const Int& p);

// Twisted sum over units b of chi(b) e^(2 pi i a b / p), reported against the
// symbolic reference value W = sum chi(b) e^(2 pi i b / p), which this
// artifact never evaluates numerically: value = w_chi_multiplier * W + plain.
struct GaussSymbolic {
    int w_chi_multiplier;
    Int plain;

    friend bool operator==(const GaussSymbolic&, const GaussSymbolic&) = default;
};
GaussSymbolic gauss_chi(const Int& a, const Int& p);

// Element of Z[zeta] for zeta a primitive p-th root of unity, stored on the
// Z-basis 1, zeta, ..., zeta^(p-2) with zeta^(p-1) = -(1 + ... + zeta^(p-2)).
class CyclotomicInt {
  public:
    explicit CyclotomicInt(const Int& p);
    static CyclotomicInt constant(const Int& p, const Int& c);

    void add_root_power(const Int& exponent, const Int& coeff);  // += coeff * zeta^exponent
    void scale(const Int& c);

    const Int& order() const { return p_; }
    const std::vector<Int>& coords() const { return coords_; }

    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

  private:
    Int p_;
    std::vector<Int> coords_;
};

// Literal root-of-unity sum over units b of chi(b)^(twisted) e^(2 pi i a b / p).
CyclotomicInt gauss_bruteforce(bool twisted, const Int& a, const Int& p);

// Closed form of sum over x mod p of chi(A x^2 + B x + C):
// (p - 1) chi(A) when p | B^2 - 4AC, otherwise -chi(A).
// Throws BothVanish when p | A and p | B.
Int sum_chi_quadratic(const Int& A, const Int& B, const Int& C, const Int& p);
Int sum_chi_quadratic_bruteforce(const Int& A, const Int& B, const Int& C, const Int& p);

// Closed form chi(C) + chi(-C) of the two pinned unit sums below; requires
// p coprime to A and p | B^2 - 4AC, else HypothesisViolated.
Int sum_ms(const Int& A, const Int& B, const Int& C, const Int& p);

// The two displayed sums the closed form covers, evaluated literally:
//   linear_pinned: b restricted by 2Ab + B = 0 mod p,
//     summand chi(y (1-x) (A (1-y)^-1 (y-x) b^2 - B b - C x^-1));
//   root_pinned: b restricted by A b^2 + B b + C = 0 mod p,
//     summand chi(y (A (1-y)^-1 b^2 - C x^-1));
// over units b, x, y with x != 1, y != 1.
struct PinnedUnitSums {
    Int linear_pinned;
    Int root_pinned;

    friend bool operator==(const PinnedUnitSums&, const PinnedUnitSums&) = default;
};
PinnedUnitSums sum_ms_bruteforce(const Int& A, const Int& B, const Int& C, const Int& p);

// Closed form of the unrestricted triple unit sum
//   sum over units b, x, y (x != 1, y != 1) of
//   chi(y (1-x) (A (1-y)^-1 (y-x) b^2 - B b - C x^-1)),
// dispatched on the residue pattern of (A, B, C) and the square class of
// B^2 - 4AC. Total over all residue patterns.
Int sum_mm(const Int& A, const Int& B, const Int& C, const Int& p);
Int sum_mm_bruteforce(const Int& A, const Int& B, const Int& C, const Int& p);

}  // namespace paratwist
