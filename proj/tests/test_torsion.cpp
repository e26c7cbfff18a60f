#include <catch2/catch_amalgamated.hpp>

#include <spinq/spinq.hpp>

#include "helpers.hpp"

#include <vector>

using namespace spinq;

namespace {

// the reference family: all seven torsion tables over the order-7 lens space,
// generated from the base table at s=7 with tau(0) = 1/5
std::vector<TorsionTable> lens_family() {
    HomologyGroup g = testutil::group_of(IntMatrix{{7}});
    QuadraticFunction phi = phi_from_chern(g, {7});
    TorsionTable base = synthesize_torsion(phi, SpincClass{IntVector{7}}, Rational(1, 5));
    std::vector<TorsionTable> tables{base};
    for (std::size_t i = 1; i < 7; ++i)
        tables.push_back(translate_torsion(base, g.class_at(i)));
    return tables;
}

} // namespace

TEST_CASE("synthetic torsion satisfies the pairing axiom", "[torsion]") {
    std::mt19937_64 rng(0x70f2);
    for (int trial = 0; trial < 15; ++trial) {
        IntMatrix b = testutil::random_symmetric_nonsingular(rng, 3, -6, 6, 150);
        HomologyGroup g = testutil::group_of(b);
        SpincClass s = spinc_normalize(g, testutil::random_chern(rng, g));
        QuadraticFunction phi = phi_from_chern(g, s.rep);
        TorsionTable t = synthesize_torsion(phi, s, Rational(trial, 7));
        AxiomVerdict v = check_axiom(t);
        CHECK(v.ok);
        CHECK(extract_q(t) == phi);
    }
}

TEST_CASE("pinned lens torsion values", "[torsion]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{7}});
    QuadraticFunction phi = phi_from_chern(g, {7});
    TorsionTable t = synthesize_torsion(phi, SpincClass{IntVector{7}}, Rational(1, 5));
    const Rational expected[7] = {Rational(1, 5),    Rational(-8, 35),  Rational(-18, 35),
                                  Rational(-23, 35), Rational(-23, 35), Rational(-18, 35),
                                  Rational(-8, 35)};
    for (std::size_t i = 0; i < 7; ++i) CHECK(t.values[i] == expected[i]);

    SECTION("inversion formula recovers the refinement by hand") {
        for (std::size_t i = 0; i < 7; ++i) {
            Rational diff = t.values[0] - t.at(g.negate(g.class_at(i)));
            CHECK(QmodZ(diff) == phi.values[i]);
        }
    }
    SECTION("the base value only shifts the table, not the extraction") {
        TorsionTable t2 = synthesize_torsion(phi, SpincClass{IntVector{7}}, Rational(-3, 11));
        CHECK(extract_q(t2) == phi);
        for (std::size_t i = 0; i < 7; ++i)
            CHECK(t2.values[i] - t.values[i] == Rational(-3, 11) - Rational(1, 5));
    }
}

TEST_CASE("axiom violations are reported with witnesses", "[torsion]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{7}});
    QuadraticFunction phi = phi_from_chern(g, {7});
    TorsionTable t = synthesize_torsion(phi, SpincClass{IntVector{7}}, Rational(0));
    t.values[3] += Rational(1, 2);
    AxiomVerdict v = check_axiom(t);
    CHECK_FALSE(v.ok);
    CHECK(v.expected != v.actual);
    // the witness pair must actually exhibit the defect
    QmodZ delta = QmodZ(t.at(g.add(v.h1, v.h2)) - t.at(v.h1) - t.at(v.h2) + t.values[0]);
    CHECK(delta == v.actual);
    CHECK(-g.linking(v.h1, v.h2) == v.expected);
    CHECK_THROWS_AS(extract_q(t), AxiomViolation);
}

TEST_CASE("translation of torsion tables", "[torsion]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{7}});
    QuadraticFunction phi = phi_from_chern(g, {7});
    TorsionTable base = synthesize_torsion(phi, SpincClass{IntVector{7}}, Rational(1, 5));

    SECTION("translated tables still satisfy the axiom") {
        for (std::size_t i = 0; i < 7; ++i) {
            TorsionTable moved = translate_torsion(base, g.class_at(i));
            CHECK(check_axiom(moved).ok);
            CHECK(moved.sigma == act(g, g.class_at(i), base.sigma));
        }
    }
    SECTION("translation composes") {
        HomologyClass h1 = g.class_at(2), h2 = g.class_at(3);
        TorsionTable once = translate_torsion(translate_torsion(base, h1), h2);
        TorsionTable both = translate_torsion(base, g.add(h1, h2));
        CHECK(once.values == both.values);
        CHECK(once.sigma == both.sigma);
    }
    SECTION("translation by zero is the identity") {
        TorsionTable same = translate_torsion(base, g.zero());
        CHECK(same.values == base.values);
        CHECK(same.sigma == base.sigma);
    }
}

TEST_CASE("table size validation", "[torsion]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{7}});
    CHECK_THROWS_AS(make_torsion_table(g, SpincClass{IntVector{7}}, {Rational(0)}),
                    IncompleteTable);
    CHECK_THROWS_AS(c_invariant({}), IncompleteTable);
}

TEST_CASE("the invariant of an equivariant family", "[torsion]") {
    std::vector<TorsionTable> tables = lens_family();
    FamilyReport fr = c_invariant(tables);
    REQUIRE(fr.reports.size() == 7);
    CHECK(fr.ok);
    CHECK(fr.equivariance_checked);
    CHECK(fr.c_m == QmodZ(9, 20));
    for (const TorsionReport& r : fr.reports) {
        CHECK(r.axiom_ok);
        CHECK(r.matches_phi);
        CHECK(r.c_m == QmodZ(9, 20));
    }
    // the base structure carries the pinned phase and constant term
    CHECK(fr.reports[0].c_sigma == QmodZ(1, 5));
    CHECK(fr.reports[0].d_sigma == QmodZ(3, 4));

    SECTION("a single table suffices") {
        FamilyReport single = c_invariant({tables[0]});
        CHECK_FALSE(single.equivariance_checked);
        CHECK(single.ok);
        CHECK(single.c_m == QmodZ(9, 20));
    }
    SECTION("breaking equivariance is detected") {
        // a constant shift keeps each table valid on its own but detaches
        // this one from the rest of the family
        for (Rational& v : tables[2].values) v += Rational(1, 7);
        CHECK_THROWS_AS(c_invariant(tables), InconsistentFamily);
    }
    SECTION("a corrupt entry inside a family surfaces as an axiom violation") {
        tables[2].values[5] += Rational(1, 7);
        CHECK_THROWS_AS(c_invariant(tables), AxiomViolation);
    }
    SECTION("mixed presentations are rejected") {
        HomologyGroup g5 = testutil::group_of(IntMatrix{{5}});
        QuadraticFunction phi5 = phi_from_chern(g5, {5});
        tables.push_back(synthesize_torsion(phi5, SpincClass{IntVector{5}}, Rational(0)));
        CHECK_THROWS_AS(c_invariant(tables), InconsistentFamily);
    }
}

TEST_CASE("extraction matches the combinatorial refinement on random input", "[torsion]") {
    std::mt19937_64 rng(0x7a11);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix b = testutil::random_framed_diagonal(rng, 3);
        HomologyGroup g = testutil::group_of(b);
        SpincClass s = spinc_normalize(g, testutil::random_chern(rng, g));
        QuadraticFunction phi = phi_from_chern(g, s.rep);
        TorsionTable t = synthesize_torsion(phi, s, Rational(trial + 1, 13));
        FamilyReport fr = c_invariant({t});
        CHECK(fr.ok);
        CHECK(fr.reports[0].c_m == QmodZ(Rational(trial + 1, 13)) - gauss(phi).d);
    }
}

TEST_CASE("trivial group torsion", "[torsion]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{1}});
    QuadraticFunction phi = phi_from_chern(g, {1});
    TorsionTable t = synthesize_torsion(phi, SpincClass{IntVector{1}}, Rational(2, 3));
    CHECK(check_axiom(t).ok);
    FamilyReport fr = c_invariant({t});
    CHECK(fr.ok);
    CHECK(fr.c_m == QmodZ(2, 3));
}
