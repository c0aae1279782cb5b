#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "paratwist/twist.hpp"

namespace paratwist {

struct MissingJacobiCoefficient : std::runtime_error {
    Int D;
    MissingJacobiCoefficient(const Int& D_, const std::string& what_)
        : std::runtime_error(what_), D(D_) {}
};

// Coefficient table c(D) of a weight-k index-1 Jacobi form, keyed by
// discriminants D <= 0 with D = 0 or 1 mod 4.
//
// File format: '#' comments, blank lines skipped, header "k=<int>", then
// lines "D value".
struct JacobiCoeffs {
    long k = 0;
    std::map<Int, Rat> c;

    static JacobiCoeffs ingest(std::istream& in);
    void emit(std::ostream& out) const;
    const Rat& at(const Int& D) const;  // throws MissingJacobiCoefficient
};

// Ascending positive divisors of n >= 1.
std::vector<Int> divisors(const Int& n);

// Divisor-sum lift coefficient: sum over d | content(S) of
// d^(k-1) c(D(S)/d^2). Throws MissingJacobiCoefficient.
Rat maass_coeff(const HalfIntegralForm& S, long k, const JacobiCoeffs& jc);

// Level-1 table of lift coefficients over the canonical box
// 0 <= two_beta <= alpha <= gamma, alpha <= alpha_max, gamma <= gamma_max.
CoeffTable maass_table(const JacobiCoeffs& jc, long k, const Int& alpha_max, const Int& gamma_max);

// Formal rational combination of Jacobi coefficients keyed by discriminant.
class MaassLinearForm {
  public:
    void add(const Int& D, const Rat& coeff);
    bool zero() const { return terms_.empty(); }
    const std::map<Int, Rat>& terms() const { return terms_; }
    std::vector<Int> support() const;

  private:
    std::map<Int, Rat> terms_;
};

// The lift coefficient as a formal combination of Jacobi unknowns.
MaassLinearForm maass_symbolic(const HalfIntegralForm& S, long k);

// Composes the symbolic twisted coefficient with the symbolic lift: the
// result must be the zero combination for every level-1 lift of even weight.
// residual lists the offending discriminant keys when it is not.
struct VanishingReport {
    bool vanishes;
    TwistCase case_label;
    MaassLinearForm residual;
};
VanishingReport verify_maass_vanishing(const HalfIntegralForm& S, const TwistContext& ctx);

// Sweep inputs for the vanishing check, each with a human-readable valuation
// profile ("case=IV vD=6 chi(gamma alpha')=+1 p|gamma=no" and the like).
struct SweepEntry {
    HalfIntegralForm S;
    std::string profile;
};

// Deterministic list covering every reachable branch of the vanishing
// argument at this p: all five cases; for the fourth case every discriminant
// valuation 4..9 crossed with the reachable values of chi(gamma alpha')
// (both signs at valuation 4, +1 or p | gamma above); gamma divisible and
// indivisible by p; deep-dilation branches on and off. Throws InternalError
// if some target profile cannot be filled.
std::vector<SweepEntry> curated_sweep(const Int& p, long k);

// Seeded random forms from the level-p^4 box, deduplicated.
std::vector<SweepEntry> random_sweep(const Int& p, long k, unsigned long seed, int count);

}  // namespace paratwist
