#pragma once

#include <string>
#include <utility>
#include <vector>

#include "paratwist/charsum.hpp"
#include "paratwist/quadsolve.hpp"

namespace paratwist {

// Outcome of one closed-form-versus-oracle sweep.
struct CheckReport {
    bool ok = true;
    long cases = 0;
    std::string counterexample;  // first mismatch; empty when ok

    void fail(const std::string& why) {
        if (ok) {
            ok = false;
            counterexample = why;
        }
    }
};

// exhaustive = full residue sweeps; otherwise `samples` seeded random tuples.
struct CheckMode {
    bool exhaustive = true;
    long samples = 0;
    unsigned long seed = 0;
};

// Closed quadratic character sum versus the literal sum over x mod p,
// for every (A, B, C) with (A, B) not both divisible by p.
CheckReport check_quadratic_character_sum(const Int& p, const CheckMode& mode);

// Square roots modulo p^2 come in exactly the pairs {s, p^2 - s} for unit
// arguments, and sqrt_mod returns a member exactly when one exists.
CheckReport check_sqrt_two_valued(const Int& p, const CheckMode& mode);

// The mod-p root-class predicate versus its literal congruences and the
// closed root descriptions, across discriminant valuations 0, 1, >= 2.
CheckReport check_root_classes_mod_p(const Int& p, const CheckMode& mode);

// roots_mod_p2 versus direct enumeration of f(r) = 0 mod p^2, including the
// empty / pair / line trichotomy.
CheckReport check_root_sets_mod_p2(const Int& p, const CheckMode& mode);

// The mod-p^2 refinement predicate on actual roots versus its literal
// congruences and closed descriptions, over targeted discriminant-valuation
// families up to p^4 | D.
CheckReport check_root_refinement_mod_p2(const Int& p, const CheckMode& mode);

// Pinned triple unit sums (both displayed forms) versus the closed value
// chi(C) + chi(-C), wherever the hypotheses hold.
CheckReport check_pinned_triple_sum(const Int& p, const CheckMode& mode);

// Unrestricted triple unit sum versus its residue-pattern dispatch, over all
// (A, B, C) mod p.
CheckReport check_full_triple_sum(const Int& p, const CheckMode& mode);

// Root-of-unity sums: the trivial-character sum reduces to the two constant
// values, and the twisted sum is the character multiple of its base value.
CheckReport check_gauss_sum_identities(const Int& p);

// Runs the seven lemma sweeps for every p in ps, aggregated per label, in
// the fixed order: jlemma, p22, a2, quadeq, ccond, ms, mm.
std::vector<std::pair<std::string, CheckReport>> run_lemma_checks(const std::vector<Int>& ps,
                                                                 const CheckMode& mode);

}  // namespace paratwist
