#include <doctest.h>

#include "paratwist/quadsolve.hpp"
#include "paratwist/verify.hpp"

using namespace paratwist;

TEST_CASE("square roots by enumeration: presence, absence, least value") {
    REQUIRE(sqrt_mod(Int(4), Int(9)).has_value());
    CHECK(*sqrt_mod(Int(4), Int(9)) == 2);
    CHECK(!sqrt_mod(Int(2), Int(3)).has_value());
    REQUIRE(sqrt_mod(Int(7), Int(9)).has_value());
    CHECK(*sqrt_mod(Int(7), Int(9)) == 4);
    CHECK(*sqrt_mod(Int(0), Int(5)) == 0);
}

TEST_CASE("square-root pairing mod p^2") {
    CheckMode mode;
    for (long pl : {3L, 5L, 7L}) {
        CheckReport rep = check_sqrt_two_valued(Int(pl), mode);
        INFO(rep.counterexample);
        CHECK(rep.ok);
        CHECK(rep.cases == pl * pl - pl + 1);
    }
}

TEST_CASE("modular inverse: examples and failure") {
    CHECK(inv_mod(Int(2), Int(9)) == 5);
    CHECK(inv_mod(Int(1), Int(97)) == 1);
    CHECK(inv_mod(Int(44), Int(9)) == 8);
    CHECK_THROWS_AS(inv_mod(Int(3), Int(9)), NotInvertible);
    CHECK_THROWS_AS(inv_mod(Int(0), Int(7)), NotInvertible);
}

TEST_CASE("root sets mod p^2: the three structures") {
    RootSetModP2 pair = roots_mod_p2(QuadPoly{Int(1), Int(0), Int(-1)}, Int(3));
    CHECK(pair.kind == RootSetKind::Pair);
    CHECK(pair.roots == std::vector<Int>{Int(1), Int(8)});

    RootSetModP2 empty = roots_mod_p2(QuadPoly{Int(1), Int(0), Int(-3)}, Int(3));
    CHECK(empty.kind == RootSetKind::Empty);
    CHECK(empty.roots.empty());

    RootSetModP2 line = roots_mod_p2(QuadPoly{Int(1), Int(0), Int(0)}, Int(3));
    CHECK(line.kind == RootSetKind::Line);
    CHECK(line.roots == std::vector<Int>{Int(0), Int(3), Int(6)});

    CHECK_THROWS_AS(roots_mod_p2(QuadPoly{Int(3), Int(1), Int(1)}, Int(3)), LeadingCoeffDivisible);
}

TEST_CASE("root sets match enumeration exhaustively") {
    CheckMode mode;
    for (long pl : {3L, 5L}) {
        CheckReport rep = check_root_sets_mod_p2(Int(pl), mode);
        INFO(rep.counterexample);
        CHECK(rep.ok);
        CHECK(rep.cases == (pl * pl - pl) * pl * pl * pl * pl + 1);
    }
}

TEST_CASE("mod-p root-class predicate: examples and guards") {
    QuadPoly sq{Int(1), Int(0), Int(0)};
    CHECK(satisfies_R(sq, Int(0), 2, RPredicate::ModPClass, Int(5)));
    CHECK(!satisfies_R(sq, Int(1), 1, RPredicate::ModPClass, Int(5)));

    // A unit discriminant square: no residue passes the deeper class.
    QuadPoly split{Int(1), Int(0), Int(-1)};  // D = 4
    for (long r = 0; r < 5; ++r) CHECK(!satisfies_R(split, Int(r), 2, RPredicate::ModPClass, Int(5)));

    CHECK_THROWS_AS(satisfies_R(QuadPoly{Int(5), Int(1), Int(1)}, Int(0), 1, RPredicate::ModPClass, Int(5)),
                    HypothesisViolated);
    CHECK_THROWS_AS(satisfies_R(sq, Int(0), 3, RPredicate::ModPClass, Int(5)), HypothesisViolated);
    // The refinement predicate requires an actual root mod p^2.
    CHECK_THROWS_AS(satisfies_R(QuadPoly{Int(1), Int(0), Int(-2)}, Int(1), 1, RPredicate::ModP2Root, Int(5)),
                    HypothesisViolated);
}

TEST_CASE("mod-p root classes match literal congruences and closed descriptions") {
    CheckMode mode;
    for (long pl : {3L, 5L}) {
        CheckReport rep = check_root_classes_mod_p(Int(pl), mode);
        INFO(rep.counterexample);
        CHECK(rep.ok);
        CHECK(rep.cases == (pl * pl - pl) * pl * pl * pl * pl * 2 * pl);
    }
}

TEST_CASE("refinement predicate on roots matches closed descriptions across valuations") {
    CheckMode mode;
    for (long pl : {3L, 5L}) {
        CheckReport rep = check_root_refinement_mod_p2(Int(pl), mode);
        INFO(rep.counterexample);
        CHECK(rep.ok);
        CHECK(rep.cases > 0);
    }
}

TEST_CASE("completing the square holds identically") {
    for (long A = -6; A <= 6; ++A)
        for (long B = -6; B <= 6; ++B)
            for (long C = -6; C <= 6; ++C) {
                QuadPoly f{Int(A), Int(B), Int(C)};
                for (long r = -3; r <= 3; ++r)
                    CHECK(4 * f.A * f.eval(Int(r)) ==
                          (2 * f.A * r + f.B) * (2 * f.A * r + f.B) - f.disc());
            }
}
