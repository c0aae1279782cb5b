// Acceptance gate: every release-blocking property in one binary, one
// PASS/FAIL line per criterion, exit 0 only if all pass. Stated runtime
// budgets are enforced as failures so regressions in cost are caught the
// same way as regressions in correctness.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paratwist/charsum.hpp"
#include "paratwist/coeffs.hpp"
#include "paratwist/maass.hpp"
#include "paratwist/qform.hpp"
#include "paratwist/quadsolve.hpp"
#include "paratwist/twist.hpp"
#include "paratwist/verify.hpp"
#include "reduction_oracle.hpp"

using namespace paratwist;

namespace {

int failures = 0;

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// fn takes (long& cases) and returns "" on success or a failure reason.
template <typename Fn>
void criterion(const char* name, double budget_seconds, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    long cases = 0;
    try {
        why = fn(cases);
    } catch (const std::exception& e) {
        why = std::string("unexpected exception: ") + e.what();
    }
    double secs = seconds_since(start);
    if (why.empty() && budget_seconds > 0 && secs > budget_seconds) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "over budget: %.2fs > %.0fs", secs, budget_seconds);
        why = buf;
    }
    if (why.empty()) {
        std::printf("PASS %s (%.2fs, %ld checks)\n", name, secs, cases);
    } else {
        std::printf("FAIL %s: %s (%.2fs)\n", name, why.c_str(), secs);
        ++failures;
    }
    std::fflush(stdout);
}

std::string describe(const Int& p, const CheckReport& rep) {
    return "p=" + p.get_str() + ": " + rep.counterexample;
}

TwistCase expected_case(const HalfIntegralForm& S, const Int& p) {
    int e = S.two_beta == 0 ? 1000 : v_p(S.two_beta, p);
    int f = v_p(S.alpha, p);
    if (e == 0) return TwistCase::I;
    if (e == 1) return f == 4 ? TwistCase::II : TwistCase::III;
    return f == 4 ? TwistCase::IV : TwistCase::V;
}

reduction_oracle::Form unpack(std::uint64_t key) {
    return reduction_oracle::Form{static_cast<long>(key >> 40),
                                  static_cast<long>((key >> 20) & 0xFFFFF) - (1L << 19),
                                  static_cast<long>(key & 0xFFFFF)};
}

IntMat2 mat_mul(const IntMat2& x, const IntMat2& y) {
    return IntMat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                   x.c * y.b + x.d * y.d};
}

std::string quadratic_sum_closed_form(long& cases) {
    CheckMode mode;
    for (long pv : {3L, 5L, 7L, 11L, 13L}) {
        CheckReport rep = check_quadratic_character_sum(Int(pv), mode);
        if (!rep.ok) return describe(Int(pv), rep);
        cases += rep.cases;
    }
    return "";
}

std::string triple_sum_closed_forms(long& cases) {
    CheckMode mode;
    for (long pv : {3L, 5L, 7L}) {
        CheckReport ms = check_pinned_triple_sum(Int(pv), mode);
        if (!ms.ok) return describe(Int(pv), ms);
        CheckReport mm = check_full_triple_sum(Int(pv), mode);
        if (!mm.ok) return describe(Int(pv), mm);
        cases += ms.cases + mm.cases;
    }
    return "";
}

std::string root_structure_mod_p2(long& cases) {
    CheckMode mode;
    for (long pv : {3L, 5L}) {
        Int p(pv);
        for (auto check : {check_sqrt_two_valued, check_root_classes_mod_p, check_root_sets_mod_p2,
                           check_root_refinement_mod_p2}) {
            CheckReport rep = check(p, mode);
            if (!rep.ok) return describe(p, rep);
            cases += rep.cases;
        }
    }
    return "";
}

std::string gauss_sum_identities(long& cases) {
    for (long pv : {3L, 5L, 7L, 11L}) {
        CheckReport rep = check_gauss_sum_identities(Int(pv));
        if (!rep.ok) return describe(Int(pv), rep);
        cases += rep.cases;
    }
    return "";
}

std::string worked_example(long& cases) {
    std::ifstream in(std::string(PARATWIST_SOURCE_DIR) + "/data/example_k20.coeffs");
    if (!in.good()) return "cannot open data/example_k20.coeffs";
    CoeffTable table = CoeffTable::ingest(in);

    TwistContext ctx(Int(1), 20, Int(3));
    HalfIntegralForm S = parse_form("81,44,6");
    if (classify(S, ctx) != TwistCase::I) return "classification of the example input is wrong";

    TwistReport rep = a_chi(S, ctx, table);
    Rat assembled =
        (-table.lookup(parse_form("1,0,18")) + table.lookup(parse_form("2,0,9"))) /
        Rat(pow_int(Int(3), 19));
    assembled.canonicalize();
    // The reference computation this example was transcribed from ends with
    // a final fraction that contradicts its own penultimate line (the final
    // line drops one of the two summands from the numerator); the penultimate
    // line, -6586974535680/3^19, is the value consistent with the formulas
    // implemented here, and it is what this criterion pins. The discrepancy
    // is documented, not reconciled.
    if (rep.value != assembled) return "value disagrees with the hand-assembled sum";
    if (rep.value != rat_from_string("-6586974535680/1162261467"))
        return "value is " + rat_to_string(rep.value);
    if (rep.value == 0) return "value unexpectedly zero";
    if (rep.consumed.size() != 2 || rep.consumed[0] != parse_form("1,0,18") ||
        rep.consumed[1] != parse_form("2,0,9"))
        return "consumed keys differ from the two shipped coefficients";
    cases = 4;
    return "";
}

std::string lift_twist_vanishing(long& cases) {
    std::set<std::string> distinct;
    for (long k : {10L, 20L}) {
        for (long pv : {3L, 5L}) {
            Int p(pv);
            TwistContext ctx(Int(1), k, p);
            std::vector<SweepEntry> sweep = curated_sweep(p, k);
            std::set<std::string> profiles;
            for (const SweepEntry& e : sweep) {
                VanishingReport rep = verify_maass_vanishing(e.S, ctx);
                if (!rep.vanishes)
                    return "nonzero residual at S=" + form_to_string(e.S) + " (" + e.profile +
                           ", k=" + std::to_string(k) + ", p=" + p.get_str() + ")";
                profiles.insert(e.profile);
                distinct.insert(p.get_str() + "|" + form_to_string(e.S));
                ++cases;
            }
            auto covered = [&](const std::string& token) {
                for (const std::string& prof : profiles)
                    if (prof.find(token) != std::string::npos) return true;
                return false;
            };
            for (const char* label : {"case=I ", "case=II ", "case=III ", "case=V "})
                if (!covered(label)) return std::string("sweep lacks ") + label + "entries";
            for (int v = 4; v <= 9; ++v) {
                std::string head = "case=IV";
                if (!covered(" vD=" + std::to_string(v) + " "))
                    return head + " valuation " + std::to_string(v) + " not covered";
            }
            for (const char* token :
                 {"vD=4 chi(gamma alpha')=+1", "vD=4 chi(gamma alpha')=-1",
                  "chi(gamma alpha')=0", "p|gamma=yes", "p|gamma=no", "alpha'=nonresidue"})
                if (!covered(token)) return std::string("sweep lacks a ") + token + " entry";
        }
    }
    if (distinct.size() < 30)
        return "only " + std::to_string(distinct.size()) + " distinct sweep inputs";
    return "";
}

std::string classification_totality_box(long& cases) {
    TwistContext ctx(Int(1), 20, Int(3));
    std::vector<std::future<std::pair<long, std::string>>> rows;
    for (long j = 1; j <= 60; ++j) {
        rows.push_back(std::async(std::launch::async, [j, &ctx]() -> std::pair<long, std::string> {
            long alpha = 81 * j;
            long count = 0;
            for (long b2 = -200; b2 <= 200; ++b2) {
                for (long g = 1; g <= 200; ++g) {
                    if (b2 * b2 - 4 * alpha * g >= 0) continue;
                    HalfIntegralForm S{Int(alpha), Int(b2), Int(g)};
                    if (classify(S, ctx) != expected_case(S, ctx.p))
                        return {count, "case label mismatch at " + form_to_string(S)};
                    try {
                        SymbolicTwist sym = a_chi_symbolic(S, ctx);
                        (void)sym;
                    } catch (const std::exception& e) {
                        return {count, "twist construction failed at " + form_to_string(S) + ": " +
                                           e.what()};
                    }
                    ++count;
                }
            }
            return {count, ""};
        }));
    }
    std::string first_error;
    for (auto& fut : rows) {
        auto [count, err] = fut.get();
        cases += count;
        if (first_error.empty() && !err.empty()) first_error = err;
    }
    return first_error;
}

std::string reduction_and_symmetry(long& cases) {
    // Word-bounded minimum search: close every class of det <= 200 under
    // the generator moves and demand the canonicalizer lands on the root.
    reduction_oracle::OrbitIndex idx = reduction_oracle::build_orbit_index(800, 300);
    if (idx.conflict) return "orbit closure merged two distinct reduced roots";
    if (idx.root_of.size() < 10000) return "orbit closure visited implausibly few forms";
    for (const auto& [packed, root] : idx.root_of) {
        reduction_oracle::Form f = unpack(packed);
        HalfIntegralForm S{Int(f[0]), Int(f[1]), Int(f[2])};
        ReductionResult r = reduce_gl2z(S);
        if (r.reduced.alpha != root[0] || r.reduced.two_beta != root[1] ||
            r.reduced.gamma != root[2])
            return "reduction of " + form_to_string(S) + " missed its orbit root";
        if (transform(r.reduced, r.transform) != S)
            return "reduction transform of " + form_to_string(S) + " is not a witness";
        ++cases;
    }

    // Symmetry sign law on random pairs. Classes fixed by an
    // orientation-reversing substitution force their coefficient to vanish
    // at odd weight, so those table entries are stored as zero.
    const IntMat2 gens[] = {
        IntMat2{Int(1), Int(1), Int(0), Int(1)},
        IntMat2{Int(1), Int(-1), Int(0), Int(1)},
        IntMat2{Int(0), Int(-1), Int(1), Int(0)},
        IntMat2{Int(1), Int(0), Int(0), Int(-1)},
    };
    std::mt19937_64 rng(31337);
    for (long k : {19L, 20L}) {
        CoeffTable table(Int(1), k);
        for (int trial = 0; trial < 1000; ++trial) {
            long a = 1 + static_cast<long>(rng() % 25);
            long b2 = static_cast<long>(rng() % (2 * a + 1)) - a;
            long cmin = b2 * b2 / (4 * a) + 1;
            long c = cmin + static_cast<long>(rng() % 40);
            HalfIntegralForm S{Int(a), Int(b2), Int(c)};

            ReductionResult r = reduce_gl2z(S);
            bool ambiguous = r.reduced.two_beta == 0 || r.reduced.two_beta == r.reduced.alpha ||
                             r.reduced.alpha == r.reduced.gamma;
            bool stored = table.entries().count(r.reduced) != 0;
            if (!stored) {
                Rat value = (k % 2 != 0 && ambiguous) ? Rat(0)
                                                      : Rat(1 + static_cast<long>(rng() % 999));
                table.insert(r.reduced, value);
            }

            IntMat2 A = gens[rng() % 4];
            for (int step = 0; step < 5; ++step) A = mat_mul(A, gens[rng() % 4]);
            HalfIntegralForm T = transform(S, A);

            Rat expect = table.lookup(S);
            if (k % 2 != 0 && A.det() < 0) expect = -expect;
            if (table.lookup(T) != expect)
                return "sign law failed at k=" + std::to_string(k) + ", S=" + form_to_string(S);
            ++cases;
        }
    }
    return "";
}

}  // namespace

int main() {
    criterion("quadratic-sum-closed-form", 10, quadratic_sum_closed_form);
    criterion("triple-sum-closed-forms", 30, triple_sum_closed_forms);
    criterion("root-structure-mod-p2", 60, root_structure_mod_p2);
    criterion("gauss-sum-identities", 0, gauss_sum_identities);
    criterion("worked-example", 1, worked_example);
    criterion("lift-twist-vanishing", 300, lift_twist_vanishing);
    criterion("classification-totality-box", 120, classification_totality_box);
    criterion("reduction-and-symmetry", 0, reduction_and_symmetry);

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", failures);
    return 1;
}
