#include <catch2/catch_amalgamated.hpp>

#include <spinq/spinq.hpp>

#include "helpers.hpp"

#include <set>

using namespace spinq;

TEST_CASE("surgery presentation validation", "[homology]") {
    CHECK_THROWS_AS(SurgeryPresentation(IntMatrix{{0}}), NotRationalHomologySphere);
    CHECK_THROWS_AS(SurgeryPresentation(IntMatrix{{1, 1}, {1, 1}}), NotRationalHomologySphere);
    CHECK_THROWS_AS(SurgeryPresentation(IntMatrix{{1, 2}, {3, 1}}), Error); // not symmetric
    CHECK_THROWS_AS(SurgeryPresentation(IntMatrix(2, 3)), DimensionMismatch);
    CHECK(SurgeryPresentation(IntMatrix{{-3}}).det == -3);
}

TEST_CASE("group structure of pinned presentations", "[homology]") {
    SECTION("lens space, order 7") {
        HomologyGroup g = testutil::group_of(IntMatrix{{7}});
        CHECK(g.order() == 7);
        CHECK(g.invariant_factors() == IntVector{7});
        CHECK(g.rank() == 1);
        CHECK(g.class_count() == 7);
    }
    SECTION("trivial group") {
        HomologyGroup g = testutil::group_of(IntMatrix{{1}});
        CHECK(g.order() == 1);
        CHECK(g.rank() == 0);
        CHECK(g.class_count() == 1);
        CHECK(g.class_at(0) == g.zero());
    }
    SECTION("non-diagonal presentation of Z/7") {
        HomologyGroup g = testutil::group_of(IntMatrix{{4, 1}, {1, 2}});
        CHECK(g.invariant_factors() == IntVector{7});
        CHECK(g.order() == 7);
    }
    SECTION("diag(3,-5) is cyclic of order 15") {
        HomologyGroup g = testutil::group_of(IntMatrix{{3, 0}, {0, -5}});
        CHECK(g.invariant_factors() == IntVector{15});
        CHECK(g.order() == 15);
    }
    SECTION("diag(2,4) has two factors") {
        HomologyGroup g = testutil::group_of(IntMatrix{{2, 0}, {0, 4}});
        CHECK(g.invariant_factors() == (IntVector{2, 4}));
        CHECK(g.order() == 8);
    }
}

TEST_CASE("project and lift", "[homology]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{7}});
    CHECK(g.project({8}) == g.class_at(1));
    CHECK(g.project({7}) == g.zero());
    CHECK(g.project({-1}) == g.class_at(6));

    SECTION("lift is a section of project") {
        std::mt19937_64 rng(0x11f7);
        for (int trial = 0; trial < 20; ++trial) {
            IntMatrix b = testutil::random_symmetric_nonsingular(rng, 5, -9, 9, 2000);
            HomologyGroup h = testutil::group_of(b);
            for (std::size_t i = 0; i < h.class_count(); i += 1 + h.class_count() / 16) {
                HomologyClass c = h.class_at(i);
                CHECK(h.project(h.lift(c)) == c);
                CHECK(h.index_of(c) == i);
            }
            // meridian words shifted by im(B) project equally
            IntVector x = testutil::random_vector(rng, b.rows(), -10, 10);
            IntVector w = testutil::random_vector(rng, b.rows(), -3, 3);
            CHECK(h.project(x) == h.project(x + b * w));
        }
    }
}

TEST_CASE("group operations", "[homology]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{3, 0}, {0, -5}});
    HomologyClass a = g.class_at(4), b = g.class_at(13);
    CHECK(g.add(a, g.zero()) == a);
    CHECK(g.add(a, g.negate(a)) == g.zero());
    CHECK(g.add(a, b) == g.add(b, a));
    CHECK(g.scale(15, a) == g.zero());
    CHECK(g.order_of(g.generator(0)) == 15);
    CHECK(g.order_of(g.zero()) == 1);
    // the two meridians have orders 3 and 5
    CHECK(g.order_of(g.project({1, 0})) == 3);
    CHECK(g.order_of(g.project({0, 1})) == 5);
}

TEST_CASE("linking pairing, pinned values", "[homology]") {
    SECTION("lens space") {
        HomologyGroup g = testutil::group_of(IntMatrix{{7}});
        CHECK(g.linking(g.class_at(1), g.class_at(1)) == QmodZ(-1, 7));
        CHECK(g.linking(g.class_at(1), g.class_at(2)) == QmodZ(-2, 7));
        CHECK(g.linking(g.class_at(3), g.class_at(5)) == QmodZ(-15, 7));
    }
    SECTION("plumbing presentation of the same pairing") {
        HomologyGroup g = testutil::group_of(IntMatrix{{4, 1}, {1, 2}});
        HomologyClass m2 = g.project({0, 1});
        // -(B^{-1})_22 = -4/7
        CHECK(g.linking(m2, m2) == QmodZ(3, 7));
    }
    SECTION("trivial group") {
        HomologyGroup g = testutil::group_of(IntMatrix{{1}});
        CHECK(g.linking(g.zero(), g.zero()) == QmodZ());
    }
}

TEST_CASE("linking pairing properties", "[homology]") {
    std::mt19937_64 rng(0x1a3b5c);
    for (int trial = 0; trial < 12; ++trial) {
        IntMatrix b = testutil::random_symmetric_nonsingular(rng, 5, -9, 9, 200);
        HomologyGroup g = testutil::group_of(b);
        const std::size_t count = g.class_count();

        SECTION("symmetric, bilinear, independent of lifts (trial " + std::to_string(trial) +
                ")") {
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t j = i; j < count; ++j) {
                    HomologyClass x = g.class_at(i), y = g.class_at(j);
                    QmodZ v = g.linking(x, y);
                    CHECK(v == g.linking(y, x));
                    CHECK(g.linking(g.add(x, x), y) == v + v);
                }
            // lift independence
            IntVector x = testutil::random_vector(rng, b.rows(), -9, 9);
            IntVector y = testutil::random_vector(rng, b.rows(), -9, 9);
            IntVector w = testutil::random_vector(rng, b.rows(), -3, 3);
            CHECK(g.linking_on_lifts(x, y) == g.linking_on_lifts(x + b * w, y));
        }

        SECTION("nondegenerate (trial " + std::to_string(trial) + ")") {
            for (std::size_t i = 1; i < count; ++i) {
                bool pairs_nontrivially = false;
                for (std::size_t j = 0; j < count && !pairs_nontrivially; ++j)
                    pairs_nontrivially = !g.linking(g.class_at(i), g.class_at(j)).is_zero();
                CHECK(pairs_nontrivially);
            }
        }
    }
}

TEST_CASE("class enumeration is closed and complete", "[homology]") {
    HomologyGroup g = testutil::group_of(IntMatrix{{2, 0}, {0, 4}});
    std::vector<HomologyClass> all = g.all_classes();
    REQUIRE(all.size() == 8);
    std::set<HomologyClass> seen(all.begin(), all.end());
    CHECK(seen.size() == 8);
    for (const HomologyClass& x : all)
        for (const HomologyClass& y : all) CHECK(seen.count(g.add(x, y)) == 1);
}
