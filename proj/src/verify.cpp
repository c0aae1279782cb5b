#include "paratwist/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace paratwist {

namespace {

long lmod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

// chi(a) for a in [0, p), tabulated once per sweep.
std::vector<int> chi_table(const Int& p) {
    long pl = to_long_checked(p);
    std::vector<int> tbl(static_cast<size_t>(pl));
    for (long a = 0; a < pl; ++a) tbl[static_cast<size_t>(a)] = legendre(Int(a), p);
    return tbl;
}

long lvp(long n, long p) {
    if (n == 0) return -1;  // sentinel: infinite valuation
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool vp_at_least(long n, long p, long k) {
    long v = lvp(n, p);
    return v < 0 || v >= k;
}

std::mt19937_64 seeded_rng(const CheckMode& mode, const Int& p) {
    return std::mt19937_64(mode.seed ^ (static_cast<unsigned long>(to_long_checked(p)) *
                                        0x9E3779B97F4A7C15ULL));
}

std::string triple_str(const Int& p, long A, long B, long C) {
    std::ostringstream os;
    os << "p=" << p << " A=" << A << " B=" << B << " C=" << C;
    return os.str();
}

// Drives fn(A, B, C) over the full box [0, m)^3 or over sampled tuples.
template <typename F>
void sweep_triples(long m, const CheckMode& mode, const Int& p, F&& fn) {
    if (mode.exhaustive) {
        for (long A = 0; A < m; ++A)
            for (long B = 0; B < m; ++B)
                for (long C = 0; C < m; ++C) fn(A, B, C);
    } else {
        auto rng = seeded_rng(mode, p);
        for (long i = 0; i < mode.samples; ++i)
            fn(static_cast<long>(rng() % static_cast<unsigned long>(m)),
               static_cast<long>(rng() % static_cast<unsigned long>(m)),
               static_cast<long>(rng() % static_cast<unsigned long>(m)));
    }
}

}  // namespace

CheckReport check_quadratic_character_sum(const Int& p, const CheckMode& mode) {
    CheckReport rep;
    long pl = to_long_checked(p);
    sweep_triples(pl, mode, p, [&](long A, long B, long C) {
        if (!rep.ok) return;
        if (A % pl == 0 && B % pl == 0) {
            bool threw = false;
            try {
                sum_chi_quadratic(Int(A), Int(B), Int(C), p);
            } catch (const BothVanish&) {
                threw = true;
            }
            ++rep.cases;
            if (!threw) rep.fail(triple_str(p, A, B, C) + ": degenerate pair not rejected");
            return;
        }
        Int closed = sum_chi_quadratic(Int(A), Int(B), Int(C), p);
        Int oracle = sum_chi_quadratic_bruteforce(Int(A), Int(B), Int(C), p);
        ++rep.cases;
        if (closed != oracle)
            rep.fail(triple_str(p, A, B, C) + ": closed=" + closed.get_str() + " oracle=" +
                     oracle.get_str());
    });
    return rep;
}

CheckReport check_sqrt_two_valued(const Int& p, const CheckMode& mode) {
    CheckReport rep;
    long pl = to_long_checked(p);
    long p2 = pl * pl;
    auto run_one = [&](long a) {
        if (!rep.ok || a % pl == 0) return;
        std::vector<long> sols;
        for (long s = 0; s < p2; ++s)
            if ((s * s - a) % p2 == 0) sols.push_back(s);
        ++rep.cases;
        std::ostringstream tag;
        tag << "p=" << p << " a=" << a;
        if (sols.size() != 0 && sols.size() != 2) {
            rep.fail(tag.str() + ": " + std::to_string(sols.size()) + " square roots mod p^2");
            return;
        }
        if (sols.size() == 2 && sols[0] + sols[1] != p2) {
            rep.fail(tag.str() + ": roots are not a {s, p^2 - s} pair");
            return;
        }
        auto got = sqrt_mod(Int(a), Int(p2));
        if (got.has_value() != !sols.empty()) {
            rep.fail(tag.str() + ": sqrt_mod presence disagrees with enumeration");
            return;
        }
        if (got && std::find(sols.begin(), sols.end(), to_long_checked(*got)) == sols.end())
            rep.fail(tag.str() + ": sqrt_mod returned a non-root");
    };
    if (mode.exhaustive) {
        long squares = 0;
        for (long a = 0; a < p2; ++a) {
            if (a % pl != 0 && sqrt_mod(Int(a), Int(p2)).has_value()) ++squares;
            run_one(a);
        }
        ++rep.cases;
        if (rep.ok && squares != pl * (pl - 1) / 2)
            rep.fail("p=" + p.get_str() + ": unit square count " + std::to_string(squares) +
                     " != p(p-1)/2");
    } else {
        auto rng = seeded_rng(mode, p);
        for (long i = 0; i < mode.samples; ++i)
            run_one(static_cast<long>(rng() % static_cast<unsigned long>(p2)));
    }
    return rep;
}

CheckReport check_root_classes_mod_p(const Int& p, const CheckMode& mode) {
    CheckReport rep;
    long pl = to_long_checked(p);
    long p2 = pl * pl;
    std::vector<int> chi = chi_table(p);
    sweep_triples(p2, mode, p, [&](long A, long B, long C) {
        if (!rep.ok || A % pl == 0) return;
        QuadPoly f{Int(A), Int(B), Int(C)};
        long D = B * B - 4 * A * C;
        long v = lvp(D, pl);
        long inv2A = to_long_checked(inv_mod(Int(2 * A), p));
        long r0 = lmod(-B * inv2A, pl);
        // Closed root description per discriminant valuation.
        std::vector<long> k1_roots, k2_roots;
        if (v == 0) {
            if (chi[static_cast<size_t>(lmod(D, pl))] == 1) {
                long s = to_long_checked(*sqrt_mod(Int(lmod(D, pl)), p));
                k1_roots = {lmod((-B + s) * inv2A, pl), lmod((-B - s) * inv2A, pl)};
            }
        } else if (v == 1) {
            k1_roots = {r0};
        } else {
            k1_roots = {r0};
            k2_roots = {r0};
        }
        for (long r = 0; r < pl; ++r) {
            for (int k : {1, 2}) {
                bool lemma = k == 1 ? std::find(k1_roots.begin(), k1_roots.end(), r) != k1_roots.end()
                                    : std::find(k2_roots.begin(), k2_roots.end(), r) != k2_roots.end();
                bool literal = vp_at_least(2 * A * r + B, pl, k - 1) &&
                               vp_at_least(A * r * r + B * r + C, pl, k);
                bool got = satisfies_R(f, Int(r), k, RPredicate::ModPClass, p);
                ++rep.cases;
                if (got != lemma || got != literal) {
                    std::ostringstream os;
                    os << triple_str(p, A, B, C) << " r=" << r << " k=" << k << ": predicate=" << got
                       << " closed=" << lemma << " literal=" << literal;
                    rep.fail(os.str());
                    return;
                }
            }
        }
    });
    return rep;
}

CheckReport check_root_sets_mod_p2(const Int& p, const CheckMode& mode) {
    CheckReport rep;
    long pl = to_long_checked(p);
    long p2 = pl * pl;
    std::vector<int> chi = chi_table(p);
    bool rejected_checked = false;
    sweep_triples(p2, mode, p, [&](long A, long B, long C) {
        if (!rep.ok) return;
        QuadPoly f{Int(A), Int(B), Int(C)};
        if (A % pl == 0) {
            if (rejected_checked) return;
            rejected_checked = true;
            bool threw = false;
            try {
                roots_mod_p2(f, p);
            } catch (const LeadingCoeffDivisible&) {
                threw = true;
            }
            ++rep.cases;
            if (!threw) rep.fail(triple_str(p, A, B, C) + ": divisible leading coeff accepted");
            return;
        }
        std::vector<long> expect;
        for (long r = 0; r < p2; ++r)
            if (lmod(A * r * r + B * r + C, p2) == 0) expect.push_back(r);
        RootSetModP2 got = roots_mod_p2(f, p);
        std::vector<long> got_l;
        for (const Int& r : got.roots) got_l.push_back(to_long_checked(r));
        ++rep.cases;
        if (got_l != expect) {
            rep.fail(triple_str(p, A, B, C) + ": root set differs from enumeration");
            return;
        }
        long D = B * B - 4 * A * C;
        long v = lvp(D, pl);
        RootSetKind want_kind =
            v == 0 ? (chi[static_cast<size_t>(lmod(D, pl))] == 1 ? RootSetKind::Pair
                                                                 : RootSetKind::Empty)
                   : (v == 1 ? RootSetKind::Empty : RootSetKind::Line);
        size_t want_size = want_kind == RootSetKind::Pair ? 2 : (want_kind == RootSetKind::Line ? static_cast<size_t>(pl) : 0);
        if (got.kind != want_kind || got.roots.size() != want_size)
            rep.fail(triple_str(p, A, B, C) + ": trichotomy kind mismatch");
    });
    return rep;
}

CheckReport check_root_refinement_mod_p2(const Int& p, const CheckMode& mode) {
    CheckReport rep;
    long pl = to_long_checked(p);
    long p2 = pl * pl;
    long p4 = p2 * p2;
    long nonresidue = 0;
    for (long c = 2; c < pl; ++c)
        if (legendre(Int(c), p) == -1) {
            nonresidue = c;
            break;
        }
    // Families pin v_p(D) mod p^4: D = p^ord * unit, ord = 0..4.
    const std::pair<long, long> families[] = {{0, 1}, {0, nonresidue}, {1, 1}, {2, 1},
                                              {2, nonresidue}, {3, 1}, {4, 1}};
    auto run_one = [&](long A, long B, long ord, long unit) {
        if (!rep.ok || A % pl == 0) return;
        long target = lmod(unit, p4);
        for (long e = 0; e < ord; ++e) target = lmod(target * pl, p4);
        long C = lmod((B * B - target) * to_long_checked(inv_mod(Int(4 * A), Int(p4))), p4);
        QuadPoly f{Int(A), Int(B), Int(C)};
        long D = B * B - 4 * A * C;
        long v = lvp(D, pl);
        bool valuation_ok = ord < 4 ? v == ord : (v < 0 || v >= 4);
        if (!valuation_ok) throw InternalError("refinement family produced the wrong valuation");
        RootSetModP2 roots = roots_mod_p2(f, p);
        long r0 = lmod(-B * to_long_checked(inv_mod(Int(2 * A), Int(p2))), p2);
        for (const Int& rz : roots.roots) {
            long r = to_long_checked(rz);
            for (int k : {1, 2}) {
                bool lemma;
                if (v == 0)
                    lemma = false;
                else if (v == 2) {
                    long y = lmod((r - r0) / pl, pl);
                    lemma = k == 1 && lmod(4 * A * A * y * y - D / p2, pl) == 0;
                } else if (v == 3)
                    lemma = k == 1 && r == r0;
                else
                    lemma = r == r0;  // v >= 4 or D = 0
                bool literal = vp_at_least(2 * A * r + B, pl, k) &&
                               vp_at_least(A * r * r + B * r + C, pl, k + 2);
                bool got = satisfies_R(f, rz, k, RPredicate::ModP2Root, p);
                ++rep.cases;
                if (got != lemma || got != literal) {
                    std::ostringstream os;
                    os << triple_str(p, A, B, C) << " r=" << r << " k=" << k << ": predicate=" << got
                       << " closed=" << lemma << " literal=" << literal;
                    rep.fail(os.str());
                    return;
                }
            }
        }
    };
    if (mode.exhaustive) {
        for (long A = 1; A < p2; ++A)
            for (long B = 0; B < p2; ++B)
                for (auto [ord, unit] : families) run_one(A, B, ord, unit);
    } else {
        auto rng = seeded_rng(mode, p);
        for (long i = 0; i < mode.samples; ++i) {
            auto [ord, unit] = families[rng() % std::size(families)];
            run_one(static_cast<long>(rng() % static_cast<unsigned long>(p2)),
                    static_cast<long>(rng() % static_cast<unsigned long>(p2)), ord, unit);
        }
    }
    return rep;
}

CheckReport check_pinned_triple_sum(const Int& p, const CheckMode& mode) {
    CheckReport rep;
    long pl = to_long_checked(p);
    sweep_triples(pl, mode, p, [&](long A, long B, long C) {
        if (!rep.ok) return;
        long D = B * B - 4 * A * C;
        if (A % pl == 0 || D % pl != 0) {
            bool threw = false;
            try {
                sum_ms(Int(A), Int(B), Int(C), p);
            } catch (const HypothesisViolated&) {
                threw = true;
            }
            ++rep.cases;
            if (!threw) rep.fail(triple_str(p, A, B, C) + ": hypothesis violation not rejected");
            return;
        }
        Int closed = sum_ms(Int(A), Int(B), Int(C), p);
        PinnedUnitSums oracle = sum_ms_bruteforce(Int(A), Int(B), Int(C), p);
        ++rep.cases;
        if (closed != oracle.linear_pinned || closed != oracle.root_pinned)
            rep.fail(triple_str(p, A, B, C) + ": closed=" + closed.get_str() + " linear=" +
                     oracle.linear_pinned.get_str() + " root=" + oracle.root_pinned.get_str());
    });
    return rep;
}

CheckReport check_full_triple_sum(const Int& p, const CheckMode& mode) {
    CheckReport rep;
    long pl = to_long_checked(p);
    sweep_triples(pl, mode, p, [&](long A, long B, long C) {
        if (!rep.ok) return;
        Int closed = sum_mm(Int(A), Int(B), Int(C), p);
        Int oracle = sum_mm_bruteforce(Int(A), Int(B), Int(C), p);
        ++rep.cases;
        if (closed != oracle)
            rep.fail(triple_str(p, A, B, C) + ": closed=" + closed.get_str() + " oracle=" +
                     oracle.get_str());
    });
    return rep;
}

CheckReport check_gauss_sum_identities(const Int& p) {
    CheckReport rep;
    long pl = to_long_checked(p);
    CyclotomicInt base = gauss_bruteforce(true, Int(1), p);
    for (long a = 0; a < pl; ++a) {
        CyclotomicInt plain = gauss_bruteforce(false, Int(a), p);
        ++rep.cases;
        if (!(plain == CyclotomicInt::constant(p, gauss_trivial(Int(a), p)))) {
            rep.fail("p=" + p.get_str() + " a=" + std::to_string(a) +
                     ": trivial-character sum is not the expected constant");
            return rep;
        }
        CyclotomicInt twisted = gauss_bruteforce(true, Int(a), p);
        CyclotomicInt expect = base;
        expect.scale(Int(legendre(Int(a), p)));
        ++rep.cases;
        if (!(twisted == expect)) {
            rep.fail("p=" + p.get_str() + " a=" + std::to_string(a) +
                     ": twisted sum is not chi(a) times the base sum");
            return rep;
        }
    }
    return rep;
}

std::vector<std::pair<std::string, CheckReport>> run_lemma_checks(const std::vector<Int>& ps,
                                                                 const CheckMode& mode) {
    using Fn = CheckReport (*)(const Int&, const CheckMode&);
    const std::pair<const char*, Fn> table[] = {
        {"jlemma", check_quadratic_character_sum}, {"p22", check_sqrt_two_valued},
        {"a2", check_root_classes_mod_p},          {"quadeq", check_root_sets_mod_p2},
        {"ccond", check_root_refinement_mod_p2},   {"ms", check_pinned_triple_sum},
        {"mm", check_full_triple_sum},
    };
    std::vector<std::pair<std::string, CheckReport>> out;
    for (const auto& [label, fn] : table) {
        CheckReport agg;
        for (const Int& p : ps) {
            CheckReport one = fn(p, mode);
            agg.cases += one.cases;
            if (!one.ok) agg.fail(one.counterexample);
        }
        out.emplace_back(label, agg);
    }
    return out;
}

}  // namespace paratwist
