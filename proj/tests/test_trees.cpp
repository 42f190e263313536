#include <catch_amalgamated.hpp>

#include "finmet/generators.hpp"
#include "finmet/trees.hpp"
#include "test_helpers.hpp"

using namespace finmet;
using Catch::Approx;

TEST_CASE("gromov_tripod legs") {
    SECTION("degenerate tripod on a path") {
        const FiniteMetricSpace s = testutil::collinear({0, 1, 3});   // x=0, m=1, y=3
        const auto legs = gromov_tripod(s, 0, 2, 1);                  // (x, y, z=m)
        CHECK(legs[0] == Approx(1.0));
        CHECK(legs[1] == Approx(2.0));
        CHECK(legs[2] == Approx(0.0).margin(1e-12));
    }
    SECTION("equilateral unit triangle has half legs") {
        const auto legs = gromov_tripod(testutil::equilateral(3, 1.0), 0, 1, 2);
        for (double leg : legs) CHECK(leg == Approx(0.5));
    }
    SECTION("unit star tree leaves give unit legs") {
        const FiniteMetricSpace s = testutil::star_tree(3);
        const auto legs = gromov_tripod(s, 1, 2, 3);
        for (double leg : legs) CHECK(leg == Approx(1.0));
    }
    SECTION("legs sum back to the distances") {
        Rng rng(3);
        for (int t = 0; t < 20; ++t) {
            const FiniteMetricSpace s = random_generic_metric(5, rng);
            const auto legs = gromov_tripod(s, 0, 1, 2);
            CHECK(legs[0] + legs[1] == Approx(s.at(0, 1)));
            CHECK(legs[0] + legs[2] == Approx(s.at(0, 2)));
            CHECK(legs[1] + legs[2] == Approx(s.at(1, 2)));
        }
    }
    SECTION("triangle violations are rejected") {
        const FiniteMetricSpace bad(3, {0, 1, 3, 1, 0, 1, 3, 1, 0});
        REQUIRE_THROWS_AS(gromov_tripod(bad, 0, 1, 2), std::invalid_argument);
    }
    SECTION("indices must be distinct") {
        REQUIRE_THROWS_AS(gromov_tripod(testutil::equilateral(3, 1.0), 0, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("four_point_defect") {
    SECTION("fewer than four points give zero") {
        CHECK(four_point_defect(testutil::equilateral(3, 1.0)).value == 0.0);
        CHECK(four_point_defect(testutil::from_rows({{0.0}})).value == 0.0);
    }
    SECTION("tree metrics satisfy the four-point condition") {
        Rng rng(5);
        for (int t = 0; t < 40; ++t) {
            const FiniteMetricSpace s = random_tree_metric(4 + t % 9, rng);
            CHECK(four_point_defect(s).value <= 1e-9);
        }
    }
    SECTION("unit square corners violate it") {
        const double r2 = std::sqrt(2.0);
        const FiniteMetricSpace square = testutil::from_rows(
            {{0, 1, r2, 1}, {1, 0, 1, r2}, {r2, 1, 0, 1}, {1, r2, 1, 0}});
        const DefectWitness w = four_point_defect(square);
        // pair sums are 2, 2·sqrt2, 2: the two largest differ by 2(sqrt2 - 1)
        CHECK(w.value == Approx(2.0 * (r2 - 1.0)));
        CHECK(w.witness == std::array<int, 4>{0, 1, 2, 3});
    }
    SECTION("ultrametrics embed in trees: defect zero on hierarchies") {
        Rng rng(7);
        for (int t = 0; t < 25; ++t) {
            const FiniteMetricSpace s = random_hierarchy_ultrametric(4 + t % 8, rng);
            CHECK(four_point_defect(s).value <= 1e-9);
        }
    }
}

TEST_CASE("ultrametric_defect") {
    SECTION("tiny spaces are trivially ultrametric") {
        CHECK(ultrametric_defect(testutil::from_rows({{0.0}})).value == 0.0);
        CHECK(ultrametric_defect(testutil::from_rows({{0, 2}, {2, 0}})).value == 0.0);
    }
    SECTION("hierarchies are ultrametric") {
        Rng rng(9);
        for (int t = 0; t < 30; ++t) {
            const FiniteMetricSpace s = random_hierarchy_ultrametric(3 + t % 9, rng);
            CHECK(ultrametric_defect(s).value <= 1e-12);
        }
    }
    SECTION("three collinear points have defect 1 at (0,1,2)") {
        const DefectWitness w = ultrametric_defect(testutil::collinear({0, 1, 2}));
        CHECK(w.value == Approx(1.0));
        CHECK(w.witness[0] == 0);
        CHECK(w.witness[1] == 1);
        CHECK(w.witness[2] == 2);
    }
}

TEST_CASE("sphere") {
    const FiniteMetricSpace star = testutil::star_tree(4);
    SECTION("radius zero is the center") {
        const SubsetSelection s0 = sphere(star, 0, 0.0);
        REQUIRE(s0.indices == std::vector<int>{0});
    }
    SECTION("radius beyond the diameter is empty") {
        CHECK(sphere(star, 0, diameter(star) + 1.0).empty());
    }
    SECTION("unit radius from the hub is all leaves") {
        const SubsetSelection leaves = sphere(star, 0, 1.0);
        CHECK(leaves.indices == std::vector<int>{1, 2, 3, 4});
    }
}

TEST_CASE("spheres in tree metrics are ultrametric") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        const FiniteMetricSpace s = random_tree_metric(4 + t % 9, rng);
        for (int p = 0; p < s.n; ++p) {
            for (int x = 0; x < s.n; ++x) {
                const SubsetSelection sp = sphere(s, p, s.at(p, x), 1e-9);
                if (sp.size() < 3) continue;
                CHECK(ultrametric_defect(restrict_to(s, sp)).value <= 1e-9);
            }
        }
    }
}
