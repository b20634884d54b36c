#include <doctest.h>

#include <cmath>

#include "busecoarse/busemann.hpp"
#include "busecoarse/errors.hpp"
#include "busecoarse/sampling.hpp"
#include "oracles.hpp"

using namespace busecoarse;

TEST_CASE("convexity check endpoint case") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const auto r = busemann_check(l2, Point::lp({0, 1}), Point::lp({3, 2}), Point::lp({-1, 4}), Point::lp({2, 2}), 0.0);
    CHECK(r.lhs == r.rhs);
    CHECK(r.margin == 0.0);
    CHECK(r.satisfied);
    CHECK_THROWS_AS(busemann_check(l2, l2.basepoint(), l2.basepoint(), l2.basepoint(), l2.basepoint(), -0.1),
                    DomainError);
}

TEST_CASE("convexity sweeps on Busemann spaces") {
    for (const auto& space : {SpaceDescriptor::lp(3.0, 2), SpaceDescriptor::lp(1.5, 3), SpaceDescriptor::half_line(),
                              SpaceDescriptor::glued_xp(2.0)}) {
        CAPTURE(space.describe());
        const auto r = busemann_sweep(space, 10000, 7, 10.0, space.kind() == SpaceKind::GluedXp);
        CHECK(r.passed());
        CHECK(r.margin >= -1e-9);
    }
}

TEST_CASE("l_1 staircase counterexample") {
    const auto r = l1_staircase_counterexample(SpaceDescriptor::raw_lp(1.0, 2));
    CHECK(r.lhs == 1.0);
    CHECK(r.rhs == 0.0);
    CHECK(r.margin == -1.0);
    CHECK_FALSE(r.satisfied);
}

TEST_CASE("weighted point validation") {
    const Point a = Point::lp({0, 0});
    CHECK_THROWS_AS(WeightedPoints({}), DomainError);
    CHECK_THROWS_AS(WeightedPoints({{a, 0.5}, {a, 0.4}}), DomainError);
    CHECK_THROWS_AS(WeightedPoints({{a, 0.0}, {a, 1.0}}), DomainError);
    CHECK_NOTHROW(WeightedPoints({{a, 0.25}, {a, 0.75}}));
}

TEST_CASE("barycenter closed forms") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    CHECK(barycenter(l2, WeightedPoints({{Point::lp({0, 0}), 0.5}, {Point::lp({2, 0}), 0.5}})) == Point::lp({1, 0}));
    const Point v = Point::lp({1.5, -2});
    CHECK(barycenter(SpaceDescriptor::lp(3.0, 2), WeightedPoints({{v, 1.0}})) == v);

    // In one dimension every l_p metric is |x - y|.
    const auto l3 = SpaceDescriptor::lp(3.0, 1);
    const Point m = barycenter(l3, WeightedPoints({{Point::lp({0}), 0.75}, {Point::lp({1}), 0.25}}));
    const double ref = oracle::golden_min([](double x) { return 0.75 * x * x + 0.25 * (1 - x) * (1 - x); }, 0, 1);
    CHECK(m.coords[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(m.coords[0] - ref) < 1e-8);
}

TEST_CASE("barycenter agrees with the nested golden-section oracle") {
    Rng rng(5);
    for (double p : {1.5, 3.0}) {
        const auto space = SpaceDescriptor::lp(p, 2);
        for (int trial = 0; trial < 10; ++trial) {
            const int k = 2 + trial % 4;
            std::vector<std::vector<double>> pts;
            std::vector<double> w;
            std::vector<WeightedPoint> entries;
            double total = 0.0;
            for (int i = 0; i < k; ++i) w.push_back(uniform(rng, 0.1, 1.0)), total += w.back();
            for (int i = 0; i < k; ++i) {
                w[i] /= total;
                pts.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5)});
                entries.push_back({Point::lp(pts.back()), w[i]});
            }
            double sum = 0.0;
            for (int i = 0; i + 1 < k; ++i) sum += entries[i].weight;
            entries.back().weight = 1.0 - sum;
            w.back() = entries.back().weight;
            const Point m = barycenter(space, WeightedPoints(entries));
            const auto ref = oracle::lp_barycenter_2d(pts, w, p);
            CHECK(std::abs(m.coords[0] - ref[0]) < 1e-5);
            CHECK(std::abs(m.coords[1] - ref[1]) < 1e-5);
        }
    }
}

TEST_CASE("barycenter optimality against perturbations") {
    Rng rng(9);
    const auto space = SpaceDescriptor::lp(3.0, 3);
    std::vector<WeightedPoint> entries;
    for (int i = 0; i < 4; ++i) entries.push_back({sample_ball(space, space.basepoint(), 4.0, rng), 0.25});
    const WeightedPoints wp(entries);
    const auto res = solve_barycenter(space, wp);
    const double best = barycenter_objective(space, wp, res.point);
    for (int i = 0; i < 100; ++i) {
        const Point x = sample_ball(space, res.point, 0.5, rng);
        CHECK(best <= barycenter_objective(space, wp, x) + 1e-6);
    }
    // First-order condition by central differences.
    double g2 = 0.0;
    for (int c = 0; c < 3; ++c) {
        Point up = res.point, dn = res.point;
        up.coords[c] += 1e-6;
        dn.coords[c] -= 1e-6;
        const double g = (barycenter_objective(space, wp, up) - barycenter_objective(space, wp, dn)) / 2e-6;
        g2 += g * g;
    }
    CHECK(std::sqrt(g2) < 1e-4);
}

TEST_CASE("barycenter configuration errors") {
    const auto x2 = SpaceDescriptor::glued_xp(2.0);
    CHECK_THROWS_AS(barycenter(x2, WeightedPoints({{Point::in_block(1, {1}), 0.5}, {Point::in_block(2, {1, 0}), 0.5}})),
                    UnsupportedConfigurationError);
    CHECK_THROWS_AS(
        barycenter(SpaceDescriptor::raw_lp(1.0, 2), WeightedPoints({{Point::lp({0, 0}), 0.5}, {Point::lp({1, 1}), 0.5}})),
        UnsupportedConfigurationError);
    // The ray point n is the origin of block n.
    const Point m = barycenter(x2, WeightedPoints({{Point::on_ray(2), 0.5}, {Point::in_block(2, {2, 0}), 0.5}}));
    CHECK(same_point(x2, m, Point::in_block(2, {1, 0}), 1e-12));
    const Point r = barycenter(x2, WeightedPoints({{Point::on_ray(1), 0.5}, {Point::on_ray(4), 0.5}}));
    CHECK(same_point(x2, r, Point::on_ray(2.5), 1e-12));
}

TEST_CASE("convexity with a common basepoint") {
    Rng rng(3);
    for (const auto& space : {SpaceDescriptor::lp(1.5, 2), SpaceDescriptor::glued_xp(3.0)}) {
        const Point o = space.basepoint();
        for (int i = 0; i < 2000; ++i) {
            const Point a = sample_ball(space, o, 8.0, rng), b = sample_ball(space, o, 8.0, rng);
            const double t = uniform(rng, 0, 1);
            CHECK(distance(space, delta(space, o, a, t), delta(space, o, b, t)) <= t * distance(space, a, b) + 1e-9);
        }
    }
}

TEST_CASE("geodesic homotopy") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const PointMap shift = [](const Point& x) { return Point::lp({x.coords[0] + 1, x.coords[1]}); };
    CHECK(geodesic_homotopy(l2, shift, Point::lp({0, 0}), 0.5) == Point::lp({0.5, 0}));
    const PointMap id = [](const Point& x) { return x; };
    CHECK(geodesic_homotopy(l2, id, Point::lp({3, 1}), 0.3) == Point::lp({3, 1}));
    const PointMap twice = [](const Point& x) { return Point::lp({2 * x.coords[0], 2 * x.coords[1]}); };
    const Point h = geodesic_homotopy(l2, twice, Point::lp({1, 1}), 0.25);
    CHECK(h.coords[0] == doctest::Approx(1.25));
    CHECK(h.coords[1] == doctest::Approx(1.25));
    const Point x = Point::lp({-2, 7});
    CHECK(geodesic_homotopy(l2, twice, x, 0.0) == x);
    CHECK(geodesic_homotopy(l2, twice, x, 1.0) == twice(x));
}
