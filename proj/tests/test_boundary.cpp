#include <doctest.h>

#include <cmath>

#include "busecoarse/boundary.hpp"
#include "busecoarse/errors.hpp"
#include "busecoarse/sampling.hpp"

using namespace busecoarse;

namespace {

Point as_point(const CompactifiedPoint& z) { return std::get<Point>(z); }

}  // namespace

TEST_CASE("radial projection") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const Point o = l2.basepoint();
    const Point p = project(l2, o, 1.0, Point::lp({3, 4}));
    CHECK(p.coords[0] == doctest::Approx(0.6));
    CHECK(p.coords[1] == doctest::Approx(0.8));
    const Point inside = Point::lp({0.2, -0.3});
    CHECK(project(l2, o, 1.0, inside) == inside);
    CHECK_THROWS_AS(project(l2, o, 0.0, inside), DomainError);

    const auto x2 = SpaceDescriptor::glued_xp(2.0);
    const Point r = project(x2, x2.basepoint(), 3.0, BoundaryPoint::sphere(5, {1, 0, 0, 0, 0}));
    CHECK(same_point(x2, r, Point::on_ray(3), 1e-12));
}

TEST_CASE("bonding maps") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const Point o = l2.basepoint();
    CHECK(project_between(l2, o, 1.0, 2.0, Point::lp({2, 0})) == Point::lp({1, 0}));
    const Point a = Point::lp({0.5, 0.5});
    CHECK(project_between(l2, o, 1.0, 2.0, a) == a);
    CHECK_THROWS_AS(project_between(l2, o, 2.0, 2.0, a), DomainError);
    CHECK_THROWS_AS(project_between(l2, o, 1.0, 2.0, Point::lp({3, 0})), PreconditionError);
}

TEST_CASE("inverse system coherence") {
    Rng rng(17);
    for (const auto& space : {SpaceDescriptor::lp(3.0, 2), SpaceDescriptor::half_line(), SpaceDescriptor::glued_xp(2.0)}) {
        CAPTURE(space.describe());
        const Point o = space.basepoint();
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double s = uniform(rng, 0.1, 5), t = uniform(rng, 0.1, 5), u = uniform(rng, 0.1, 5);
            if (s > t) std::swap(s, t);
            if (t > u) std::swap(t, u);
            if (s > t) std::swap(s, t);
            if (!(s < t && t < u)) continue;
            const CompactifiedPoint z = (i % 3 == 0) ? CompactifiedPoint(random_boundary_point(space, rng))
                                                     : CompactifiedPoint(sample_ball(space, o, 12.0, rng));
            worst = std::max(worst, distance(space, project_between(space, o, s, t, project(space, o, t, z)),
                                             project(space, o, s, z)));
            const Point b = project(space, o, u, z);
            worst = std::max(worst, distance(space, project_between(space, o, s, t, project_between(space, o, t, u, b)),
                                             project_between(space, o, s, u, b)));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("projection onto the ball is surjective on samples") {
    Rng rng(4);
    const auto space = SpaceDescriptor::lp(2.0, 2);
    const Point o = space.basepoint();
    for (int i = 0; i < 20; ++i) {
        const Point w = sample_ball(space, o, 2.0, rng);
        // The point itself, and a far point on the same ray, both project onto w or its radial image.
        CHECK(distance(space, project(space, o, 2.0, w), w) < 1e-6);
    }
}

TEST_CASE("contraction") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const Point o = l2.basepoint();
    const Point a = Point::lp({3, -1});
    CHECK(as_point(contraction(l2, o, a, 1.0)) == o);
    CHECK(as_point(contraction(l2, o, a, 0.0)) == a);
    const Point c = as_point(contraction(l2, o, BoundaryPoint::sphere(2, {1, 0}), 0.5));
    CHECK(c.coords[0] == doctest::Approx(1.0));
    CHECK(c.coords[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(contraction_radius(0.5) == 1.0);
    const BoundaryPoint xi = BoundaryPoint::sphere(2, {0.6, 0.8});
    CHECK(std::get<BoundaryPoint>(contraction(l2, o, xi, 0.0)) == xi);
}

TEST_CASE("contraction bound") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const Point o = l2.basepoint();
    const auto r = busemann_contraction_bound(l2, o, Point::lp({4, 0}), Point::lp({0, 4}), 2.0);
    CHECK(r.lhs == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(r.rhs == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(r.passed());
    const auto same = busemann_contraction_bound(l2, o, Point::lp({4, 0}), Point::lp({4, 0}), 2.0);
    CHECK(same.lhs == 0.0);
    CHECK(same.passed());
    CHECK_THROWS_AS(busemann_contraction_bound(l2, o, Point::lp({1, 0}), Point::lp({4, 0}), 2.0), PreconditionError);

    Rng rng(8);
    const auto l3 = SpaceDescriptor::lp(3.0, 3);
    double worst = 1.0;
    for (int i = 0; i < 10000; ++i) {
        const Point a = sample_ball(l3, l3.basepoint(), 10.0, rng), b = sample_ball(l3, l3.basepoint(), 10.0, rng);
        const double r0 = std::min(distance(l3, l3.basepoint(), a), distance(l3, l3.basepoint(), b));
        if (r0 <= 0.0) continue;
        worst = std::min(worst, busemann_contraction_bound(l3, l3.basepoint(), a, b, 0.5 * r0).margin);
    }
    CHECK(worst >= -1e-9);
}

TEST_CASE("boundary points") {
    const auto l3 = SpaceDescriptor::lp(3.0, 2);
    const BoundaryPoint xi = normalize(l3, BoundaryPoint::sphere(2, {2, 2}));
    CHECK(normalize(l3, xi) == xi);
    CHECK_THROWS(validate(l3, BoundaryPoint::ray_end()));
    CHECK_THROWS(validate(SpaceDescriptor::half_line(), BoundaryPoint::sphere(1, {1})));

    const auto x2 = SpaceDescriptor::glued_xp(2.0);
    CHECK(in_ray_end_neighborhood(x2, BoundaryPoint::ray_end(), 5));
    CHECK(in_ray_end_neighborhood(x2, BoundaryPoint::sphere(7, std::vector<double>(7, 1.0 / std::sqrt(7.0))), 5));
    CHECK_FALSE(in_ray_end_neighborhood(x2, BoundaryPoint::sphere(3, {1, 0, 0}), 5));
}
