#include <doctest.h>

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "paratwist/maass.hpp"

using namespace paratwist;

namespace {

HalfIntegralForm F(long a, long b2, long c) { return HalfIntegralForm{Int(a), Int(b2), Int(c)}; }

JacobiCoeffs jacobi_from(const std::string& text) {
    std::istringstream in(text);
    return JacobiCoeffs::ingest(in);
}

JacobiCoeffs pinned_jacobi() {
    JacobiCoeffs jc;
    jc.k = 10;
    jc.c[Int(-3)] = 5;
    jc.c[Int(-4)] = 7;
    jc.c[Int(-12)] = 11;
    jc.c[Int(-16)] = 13;
    return jc;
}

}  // namespace

TEST_CASE("divisor lists are ascending and complete") {
    CHECK(divisors(Int(1)) == std::vector<Int>{Int(1)});
    CHECK(divisors(Int(12)) == std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6), Int(12)});
    CHECK(divisors(Int(49)) == std::vector<Int>{Int(1), Int(7), Int(49)});
    CHECK_THROWS_AS(divisors(Int(0)), InternalError);
}

TEST_CASE("Jacobi tables round trip byte-stably") {
    const std::string text =
        "# sample\n"
        "k=10\n"
        "\n"
        "-3 1\n"
        "-4 3\n"
        "0 7/2\n";
    JacobiCoeffs jc = jacobi_from(text);
    CHECK(jc.k == 10);
    CHECK(jc.c.size() == 3);
    CHECK(jc.at(Int(-4)) == 3);
    CHECK(jc.at(Int(0)) == Rat(7, 2));

    std::ostringstream out;
    jc.emit(out);
    CHECK(out.str() ==
          "k=10\n"
          "-4 3\n"
          "-3 1\n"
          "0 7/2\n");

    JacobiCoeffs again = jacobi_from(out.str());
    std::ostringstream out2;
    again.emit(out2);
    CHECK(out2.str() == out.str());
}

TEST_CASE("Jacobi ingest diagnoses malformed input with line numbers") {
    CHECK_THROWS_AS(jacobi_from(""), InvalidHeader);
    CHECK_THROWS_AS(jacobi_from("k=10 extra\n"), InvalidHeader);
    CHECK_THROWS_AS(jacobi_from("k=x\n"), InvalidHeader);
    CHECK_THROWS_AS(jacobi_from("-4 3\n"), InvalidHeader);

    try {
        jacobi_from("k=10\n5 1\n");
        FAIL("positive discriminant accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    try {
        jacobi_from("k=10\n# filler\n-6 1\n");
        FAIL("discriminant 2 mod 4 accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(jacobi_from("k=10\n-4\n"), ParseError);
    CHECK_THROWS_AS(jacobi_from("k=10\n-4 1 9\n"), ParseError);
    CHECK_THROWS_AS(jacobi_from("k=10\n-4 x\n"), ParseError);

    try {
        jacobi_from("k=10\n-3 1\n-3 2\n");
        FAIL("conflicting duplicate accepted");
    } catch (const DuplicateKeyConflict& e) {
        CHECK(e.line == 3);
    }
    JacobiCoeffs dup = jacobi_from("k=10\n-3 1\n-3 1\n");
    CHECK(dup.c.size() == 1);

    try {
        pinned_jacobi().at(Int(-7));
        FAIL("missing discriminant did not throw");
    } catch (const MissingJacobiCoefficient& e) {
        CHECK(e.D == -7);
    }
}

TEST_CASE("lift coefficients are divisor-weighted sums of Jacobi values") {
    JacobiCoeffs jc = pinned_jacobi();
    CHECK(maass_coeff(F(1, 0, 1), 10, jc) == 7);
    CHECK(maass_coeff(F(1, 1, 1), 10, jc) == 5);
    CHECK(maass_coeff(F(2, 2, 2), 10, jc) == Rat(11 + 512 * 5));
    CHECK(maass_coeff(F(2, 0, 2), 10, jc) == Rat(13 + 512 * 7));

    CHECK_THROWS_AS(maass_coeff(F(1, 0, 1), 12, jc), HypothesisViolated);
    try {
        maass_coeff(F(1, 1, 2), 10, jc);
        FAIL("missing discriminant did not throw");
    } catch (const MissingJacobiCoefficient& e) {
        CHECK(e.D == -7);
    }
}

TEST_CASE("lift coefficients are class invariants") {
    JacobiCoeffs jc = pinned_jacobi();
    const IntMat2 words[] = {
        IntMat2{Int(1), Int(1), Int(0), Int(1)},
        IntMat2{Int(0), Int(1), Int(-1), Int(0)},
        IntMat2{Int(1), Int(0), Int(3), Int(1)},
        IntMat2{Int(2), Int(1), Int(1), Int(1)},
    };
    for (const HalfIntegralForm& S : {F(2, 2, 2), F(1, 0, 1), F(2, 0, 2)}) {
        Rat base = maass_coeff(S, 10, jc);
        for (const IntMat2& A : words) CHECK(maass_coeff(transform(S, A), 10, jc) == base);
    }
}

TEST_CASE("the symbolic lift lists exactly the divisor-scaled discriminants") {
    MaassLinearForm m = maass_symbolic(F(2, 2, 2), 10);
    REQUIRE(m.support() == std::vector<Int>{Int(-12), Int(-3)});
    CHECK(m.terms().at(Int(-12)) == 1);
    CHECK(m.terms().at(Int(-3)) == 512);

    MaassLinearForm m4 = maass_symbolic(F(4, 0, 4), 10);
    REQUIRE(m4.support() == std::vector<Int>{Int(-64), Int(-16), Int(-4)});
    CHECK(m4.terms().at(Int(-16)) == 512);
    CHECK(m4.terms().at(Int(-4)) == Rat(pow_int(Int(4), 9)));

    JacobiCoeffs jc = pinned_jacobi();
    Rat paired(0);
    for (const auto& [D, coeff] : m.terms()) paired += coeff * jc.at(D);
    CHECK(paired == maass_coeff(F(2, 2, 2), 10, jc));
}

TEST_CASE("the boxed lift table matches an independent divisor-sum evaluation") {
    // Fill every admissible discriminant the box can reach.
    JacobiCoeffs jc;
    jc.k = 10;
    std::mt19937_64 rng(424242);
    for (long D = -144; D <= 0; ++D) {
        long res = ((D % 4) + 4) % 4;
        if (res != 0 && res != 1) continue;
        Rat v(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 4));
        v.canonicalize();
        jc.c[Int(D)] = v;
    }

    CoeffTable table = maass_table(jc, 10, Int(6), Int(6));
    CHECK(table.level() == 1);
    CHECK(table.weight() == 10);
    CHECK(!table.entries().empty());

    for (const auto& [S, value] : table.entries()) {
        CHECK(S.two_beta >= 0);
        CHECK(S.two_beta <= S.alpha);
        CHECK(S.alpha <= S.gamma);

        // Trial-divide the entries directly instead of reusing the library's
        // divisor enumeration.
        Int D = S.two_beta * S.two_beta - 4 * S.alpha * S.gamma;
        Rat manual(0);
        for (Int d = 1; d <= S.gamma; ++d) {
            if (!divides(d, S.alpha) || !divides(d, S.two_beta) || !divides(d, S.gamma)) continue;
            manual += Rat(pow_int(d, 9)) * jc.at(divide_exact(D, d * d));
        }
        CHECK(value == manual);
    }

    // Lookups reduce arbitrary representatives back into the box.
    HalfIntegralForm moved = transform(F(2, 1, 3), IntMat2{Int(1), Int(2), Int(1), Int(3)});
    CHECK(table.lookup(moved) == table.lookup(F(2, 1, 3)));
}

TEST_CASE("the vanishing check enforces its hypotheses") {
    CHECK_THROWS_AS(verify_maass_vanishing(F(162, 1, 7), TwistContext(Int(2), 20, Int(3))),
                    HypothesisViolated);
    CHECK_THROWS_AS(verify_maass_vanishing(F(81, 44, 6), TwistContext(Int(1), 19, Int(3))),
                    HypothesisViolated);
}

TEST_CASE("twisted lift coefficients vanish across all five cases") {
    const HalfIntegralForm reps[] = {F(81, 44, 6),  F(81, 3, 1),  F(243, 3, 2), F(81, 9, 16),
                                     F(81, 9, 61),  F(81, 0, 1),  F(243, 9, 1), F(243, 0, 2)};
    for (long k : {10L, 20L}) {
        TwistContext ctx(Int(1), k, Int(3));
        for (const HalfIntegralForm& S : reps) {
            VanishingReport rep = verify_maass_vanishing(S, ctx);
            CHECK(rep.vanishes);
            CHECK(rep.residual.zero());
        }
    }
}

TEST_CASE("numeric twists of a random lift evaluate to exactly zero") {
    TwistContext ctx(Int(1), 10, Int(3));
    for (unsigned long seed : {11UL, 29UL}) {
        std::mt19937_64 rng(seed);
        for (const HalfIntegralForm& S : {F(81, 44, 6), F(81, 3, 1), F(81, 9, 16)}) {
            SymbolicTwist sym = a_chi_symbolic(S, ctx);

            JacobiCoeffs jc;
            jc.k = 10;
            for (const auto& [key, coeff] : sym.form.terms())
                for (const Int& D : maass_symbolic(key, ctx.k).support())
                    if (!jc.c.count(D)) {
                        Rat v(static_cast<long>(rng() % 201) - 100, 1 + static_cast<long>(rng() % 3));
                        v.canonicalize();
                        jc.c[D] = v;
                    }

            CoeffTable table(Int(1), 10);
            for (const auto& [key, coeff] : sym.form.terms())
                table.insert(key, maass_coeff(key, 10, jc));

            TwistReport rep = a_chi(S, ctx, table);
            CHECK(rep.value == 0);
        }
    }
}

TEST_CASE("the curated sweep covers every advertised branch") {
    std::vector<SweepEntry> sweep = curated_sweep(Int(3), 10);
    CHECK(sweep.size() >= 26);

    std::set<std::string> forms;
    bool saw[5] = {false, false, false, false, false};
    bool saw_minus = false, saw_nonresidue = false, saw_deep = false;
    for (const SweepEntry& e : sweep) {
        CHECK(!e.profile.empty());
        CHECK(forms.insert(form_to_string(e.S)).second);
        for (int i = 0; i < 5; ++i) {
            const std::string tag = std::string("case=") + (case_name(static_cast<TwistCase>(i)) + 5);
            if (e.profile.rfind(tag + " ", 0) == 0 || e.profile == tag) saw[i] = true;
        }
        if (e.profile.find("chi(gamma alpha')=-1") != std::string::npos) saw_minus = true;
        if (e.profile.find("alpha'=nonresidue") != std::string::npos) saw_nonresidue = true;
        if (e.profile.find("vD=9") != std::string::npos) saw_deep = true;
    }
    for (bool s : saw) CHECK(s);
    CHECK(saw_minus);
    CHECK(saw_nonresidue);
    CHECK(saw_deep);

    // The second supported prime fills the same buckets.
    CHECK(curated_sweep(Int(5), 10).size() >= 26);
}

TEST_CASE("the random sweep is seeded, deduplicated, and admissible") {
    std::vector<SweepEntry> a = random_sweep(Int(3), 10, 97, 12);
    std::vector<SweepEntry> b = random_sweep(Int(3), 10, 97, 12);
    REQUIRE(a.size() == 12);
    REQUIRE(b.size() == 12);

    TwistContext ctx(Int(1), 10, Int(3));
    std::set<std::string> forms;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].S == b[i].S);
        CHECK(a[i].profile == b[i].profile);
        CHECK(forms.insert(form_to_string(a[i].S)).second);
        CHECK(a[i].profile.rfind("random case=", 0) == 0);
        classify(a[i].S, ctx);
    }
}
