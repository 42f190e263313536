#include <catch_amalgamated.hpp>

#include "finmet/generators.hpp"
#include "finmet/hausdorff.hpp"
#include "finmet/planar.hpp"
#include "test_helpers.hpp"

using namespace finmet;
using Catch::Approx;

namespace {

SubsetSelection subset_from_mask(unsigned mask, int n) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
    return SubsetSelection(std::move(idx));
}

PlanarCloud random_cloud(Rng& rng, int n, double spread = 2.0) {
    std::uniform_real_distribution<double> u(0.0, spread);
    std::vector<Point2> pts;
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return PlanarCloud(std::move(pts));
}

} // namespace

TEST_CASE("set_distance_function") {
    Rng rng(2);
    const FiniteMetricSpace s = random_point_cloud_metric(7, rng);
    SECTION("whole space gives the zero function") {
        std::vector<int> all;
        for (int i = 0; i < s.n; ++i) all.push_back(i);
        const PointFunction f = set_distance_function(s, SubsetSelection(all));
        for (int x = 0; x < s.n; ++x) CHECK(f[x] == 0.0);
    }
    SECTION("a singleton gives its matrix row") {
        const PointFunction f = set_distance_function(s, SubsetSelection({3}));
        for (int x = 0; x < s.n; ++x) CHECK(f[x] == s.at(3, x));
    }
    SECTION("matches a per-point min scan") {
        const SubsetSelection A({1, 4, 6});
        const PointFunction f = set_distance_function(s, A);
        for (int x = 0; x < s.n; ++x) {
            double m = inf();
            for (int a : A.indices) m = std::min(m, s.at(x, a));
            CHECK(f[x] == m);
        }
    }
    SECTION("empty set is an error") {
        REQUIRE_THROWS_AS(set_distance_function(s, SubsetSelection()), std::invalid_argument);
    }
}

TEST_CASE("hausdorff_distance on finite ambient spaces") {
    SECTION("equal sets are at distance zero") {
        Rng rng(4);
        const FiniteMetricSpace s = random_point_cloud_metric(6, rng);
        const SubsetSelection A({0, 2, 5});
        CHECK(hausdorff_distance(s, A, A) == 0.0);
    }
    SECTION("collinear example") {
        const FiniteMetricSpace s = testutil::collinear({0, 1, 2, 3});
        CHECK(hausdorff_distance(s, SubsetSelection({0}), SubsetSelection({0, 3})) == Approx(3.0));
    }
    SECTION("equals the max of the two directed distances") {
        Rng rng(6);
        for (int t = 0; t < 40; ++t) {
            const FiniteMetricSpace s = random_generic_metric(2 + t % 7, rng);
            std::uniform_int_distribution<unsigned> mm(1, (1u << s.n) - 1);
            const SubsetSelection A = subset_from_mask(mm(rng), s.n);
            const SubsetSelection B = subset_from_mask(mm(rng), s.n);
            const double h = hausdorff_distance(s, A, B);
            CHECK(h == Approx(std::max(directed_hausdorff(s, A, B), directed_hausdorff(s, B, A)))
                           .margin(1e-12));
        }
    }
    SECTION("smallest mutual neighborhood radius, exhaustively") {
        Rng rng(8);
        const FiniteMetricSpace s = random_point_cloud_metric(5, rng);
        for (unsigned ma = 1; ma < (1u << s.n); ++ma)
            for (unsigned mb = 1; mb < (1u << s.n); ++mb) {
                const SubsetSelection A = subset_from_mask(ma, s.n);
                const SubsetSelection B = subset_from_mask(mb, s.n);
                const double h = hausdorff_distance(s, A, B);
                // every point of A within closed h of B and vice versa
                const PointFunction db = set_distance_function(s, B);
                const PointFunction da = set_distance_function(s, A);
                double needed = 0.0;
                for (int a : A.indices) needed = std::max(needed, db[a]);
                for (int b : B.indices) needed = std::max(needed, da[b]);
                CHECK(h == Approx(needed).margin(1e-12));
            }
    }
    SECTION("diam is 2-Lipschitz under the Hausdorff metric") {
        Rng rng(10);
        for (int t = 0; t < 200; ++t) {
            const FiniteMetricSpace s = random_generic_metric(2 + t % 6, rng);
            std::uniform_int_distribution<unsigned> mm(1, (1u << s.n) - 1);
            const SubsetSelection A = subset_from_mask(mm(rng), s.n);
            const SubsetSelection B = subset_from_mask(mm(rng), s.n);
            const double da = diameter(restrict_to(s, A)), db = diameter(restrict_to(s, B));
            CHECK(std::fabs(da - db) <= 2.0 * hausdorff_distance(s, A, B) + 1e-12);
        }
    }
    SECTION("1-Lipschitz functions separate at most by the Hausdorff distance") {
        Rng rng(12);
        for (int t = 0; t < 60; ++t) {
            const FiniteMetricSpace s = random_point_cloud_metric(6, rng);
            std::uniform_int_distribution<unsigned> mm(1, (1u << s.n) - 1);
            const SubsetSelection A = subset_from_mask(mm(rng), s.n);
            const SubsetSelection B = subset_from_mask(mm(rng), s.n);
            const double h = hausdorff_distance(s, A, B);
            // random 1-Lipschitz f: min over a few shifted distance functions
            std::uniform_int_distribution<int> pp(0, s.n - 1);
            std::uniform_real_distribution<double> cc(-1.0, 1.0);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<double> f(s.n, inf());
                for (int k = 0; k < 3; ++k) {
                    const int p = pp(rng);
                    const double c = cc(rng);
                    for (int x = 0; x < s.n; ++x) f[x] = std::min(f[x], s.at(p, x) + c);
                }
                double ma = -inf(), mb = -inf();
                for (int a : A.indices) ma = std::max(ma, f[a]);
                for (int b : B.indices) mb = std::max(mb, f[b]);
                CHECK(ma - mb <= h + 1e-12);
            }
            // equality is witnessed by f = dist_B
            const PointFunction db = set_distance_function(s, B);
            double ma = 0.0;
            for (int a : A.indices) ma = std::max(ma, db[a]);
            CHECK(ma <= h + 1e-12);
        }
    }
    SECTION("Hausdorff distance is a metric on the subset lattice") {
        Rng rng(14);
        const FiniteMetricSpace s = random_point_cloud_metric(5, rng);
        const unsigned count = (1u << s.n) - 1;
        std::vector<std::vector<double>> hd(count, std::vector<double>(count, 0.0));
        for (unsigned a = 1; a <= count; ++a)
            for (unsigned b = 1; b <= count; ++b)
                hd[a - 1][b - 1] =
                    hausdorff_distance(s, subset_from_mask(a, s.n), subset_from_mask(b, s.n));
        CHECK(validate(hd, 1e-9, true).ok);
    }
}

TEST_CASE("convex_hull") {
    SECTION("one point is its own hull") {
        const PlanarCloud c({{1.0, 2.0}});
        const auto hull = convex_hull(c);
        REQUIRE(hull.size() == 1);
        CHECK(hull[0].x == 1.0);
    }
    SECTION("three non-collinear points form a triangle") {
        const PlanarCloud c({{0, 0}, {1, 0}, {0, 1}});
        CHECK(convex_hull(c).size() == 3);
    }
    SECTION("duplicates are dropped on ingest") {
        const PlanarCloud c({{0, 0}, {0, 0}, {1, 0}});
        CHECK(c.size() == 2);
    }
    SECTION("hull contains every point of the cloud") {
        Rng rng(16);
        const PlanarCloud c = random_cloud(rng, 100);
        const auto hull = convex_hull(c);
        REQUIRE(hull.size() >= 3);
        for (const Point2& p : c.points) {
            // CCW orientation: p lies left of (or on) every edge
            for (size_t i = 0; i < hull.size(); ++i)
                CHECK(cross(hull[i], hull[(i + 1) % hull.size()], p) >= -1e-9);
        }
    }
    SECTION("collinear clouds collapse to their endpoints") {
        const PlanarCloud c({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
        CHECK(convex_hull(c).size() == 2);
    }
}

TEST_CASE("planar_hausdorff") {
    SECTION("identical clouds are at distance 0") {
        const PlanarCloud a({{0, 0}, {1, 2}});
        CHECK(planar_hausdorff(a, a, false) == 0.0);
        CHECK(planar_hausdorff(a, a, true) == 0.0);
    }
    SECTION("singleton clouds use the Euclidean distance") {
        const PlanarCloud a({{0, 0}});
        const PlanarCloud b({{3, 4}});
        CHECK(planar_hausdorff(a, b, false) == Approx(5.0));
        CHECK(planar_hausdorff(a, b, true) == Approx(5.0));
    }
    SECTION("hull mode never exceeds point mode") {
        Rng rng(18);
        for (int t = 0; t < 60; ++t) {
            const PlanarCloud a = random_cloud(rng, 3 + t % 20);
            const PlanarCloud b = random_cloud(rng, 3 + (t * 7) % 20);
            CHECK(planar_hausdorff(a, b, true) <= planar_hausdorff(a, b, false) + 1e-6);
        }
    }
    SECTION("hull mode agrees with dense boundary sampling") {
        Rng rng(20);
        for (int t = 0; t < 12; ++t) {
            const PlanarCloud a = random_cloud(rng, 4 + t % 10);
            const PlanarCloud b = random_cloud(rng, 4 + (t * 3) % 10);
            const double mine = planar_hausdorff(a, b, true);
            const auto ha = convex_hull(a);
            const auto hb = convex_hull(b);
            auto sample_directed = [](const std::vector<Point2>& from, const std::vector<Point2>& to) {
                double worst = 0.0;
                const size_t k = from.size();
                for (size_t i = 0; i < k; ++i) {
                    const Point2 p = from[i], q = from[(i + 1) % k];
                    for (int s = 0; s <= 400; ++s) {
                        const double u = s / 400.0;
                        const Point2 z{p.x + u * (q.x - p.x), p.y + u * (q.y - p.y)};
                        worst = std::max(worst, point_polygon_distance(z, to));
                    }
                }
                return worst;
            };
            const double sampled = std::max(sample_directed(ha, hb), sample_directed(hb, ha));
            CHECK(mine == Approx(sampled).margin(2e-2));
            CHECK(mine >= sampled - 1e-9);   // vertex max dominates boundary samples
        }
    }
    SECTION("point-in-polygon distance is zero inside") {
        const PlanarCloud sq({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
        const auto hull = convex_hull(sq);
        CHECK(point_polygon_distance({1, 1}, hull) == 0.0);
        CHECK(point_polygon_distance({3, 1}, hull) == Approx(1.0));
    }
}
