#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "paratwist/qform.hpp"

namespace paratwist {

struct MissingCoefficient : std::runtime_error {
    HalfIntegralForm key;
    MissingCoefficient(const HalfIntegralForm& key_, const std::string& what_)
        : std::runtime_error(what_), key(key_) {}
};

// A coefficient reference resolved to its canonical key: value = sign * a(key).
struct CanonicalRef {
    HalfIntegralForm key;
    int sign;  // +1, or -1 for odd weight when the normalizing substitution has det -1
};

// Canonical key for lookup at level N and weight k. Level 1 reduces to the
// canonical GL2(Z) representative; higher level translates two_beta into
// [0, alpha] by a translation plus at most one det(-1) diagonal flip, both of
// which fix alpha. Throws OutsideANplus.
CanonicalRef canonicalize(const HalfIntegralForm& S, const Int& N, long k);

class CoeffTable;

// Formal rational combination of coefficient symbols at canonical keys.
// Zero coefficients are pruned as they arise, so support() is exactly the
// set of keys a numeric evaluation touches.
class LinearForm {
  public:
    void add(const CanonicalRef& ref, const Rat& coeff);
    void scale(const Rat& c);
    bool zero() const { return terms_.empty(); }

    const std::map<HalfIntegralForm, Rat, FormLess>& terms() const { return terms_; }
    std::vector<HalfIntegralForm> support() const;

    Rat evaluate(const CoeffTable& table) const;                // throws MissingCoefficient
    Rat evaluate_assuming_zero(const CoeffTable& table) const;  // absent keys count 0

  private:
    std::map<HalfIntegralForm, Rat, FormLess> terms_;
};

// Finite coefficient table keyed by canonical forms.
//
// File format: '#' starts a comment, blank lines are skipped; the first
// content line is the header "N=<int> k=<int>"; every further line is
// "alpha,two_beta,gamma value" with value "num" or "num/den". Keys are
// canonicalized on ingest (values sign-adjusted for odd weight); emission is
// sorted by key, so ingest-emit round trips are byte stable.
class CoeffTable {
  public:
    CoeffTable(const Int& N, long k);

    static CoeffTable ingest(std::istream& in);
    void emit(std::ostream& out) const;

    // Canonicalizes S and inserts; a repeated key with the same adjusted
    // value is idempotent, a different value throws DuplicateKeyConflict.
    void insert(const HalfIntegralForm& S, const Rat& value);

    Rat lookup(const HalfIntegralForm& S) const;  // throws OutsideANplus, MissingCoefficient
    CanonicalRef lookup_symbolic(const HalfIntegralForm& S) const;

    const Int& level() const { return N_; }
    long weight() const { return k_; }
    const std::map<HalfIntegralForm, Rat, FormLess>& entries() const { return entries_; }

  private:
    Int N_;
    long k_;
    std::map<HalfIntegralForm, Rat, FormLess> entries_;
};

}  // namespace paratwist
