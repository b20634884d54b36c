#include <doctest.h>

#include <cmath>

#include "busecoarse/coarse_maps.hpp"
#include "busecoarse/errors.hpp"
#include "busecoarse/sampling.hpp"

using namespace busecoarse;

namespace {

std::vector<Point> random_points(const SpaceDescriptor& space, int count, double radius, Rng& rng) {
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) out.push_back(sample_ball(space, space.basepoint(), radius, rng));
    return out;
}

}  // namespace

TEST_CASE("coarseness profile") {
    Rng rng(1);
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    auto pts = random_points(l2, 200, 5.0, rng);
    auto id = SampledMap::from_points(l2, pts, l2, pts);
    const auto prof = coarseness_profile(id, {1.0});
    CHECK(prof.rows.at(0).S <= 1.0);
    CHECK(prof.proper);
    CHECK(id.control.has_value());

    const auto l1 = SpaceDescriptor::lp(2.0, 1);
    auto line = random_points(l1, 100, 10.0, rng);
    std::vector<Point> doubled;
    for (const auto& x : line) doubled.push_back(Point::lp({2 * x.coords[0]}));
    auto twice = SampledMap::from_points(l1, line, l1, doubled);
    for (const auto& row : coarseness_profile(twice, {0.5, 1, 2, 4}).rows) CHECK(row.S <= 2 * row.R + 1e-12);

    std::vector<Point> along, collapsed;
    for (int i = 0; i <= 50; ++i) {
        along.push_back(Point::lp({static_cast<double>(i), 0.0}));
        collapsed.push_back(Point::lp({0.0, 0.0}));
    }
    auto crush = SampledMap::from_points(l2, along, l2, collapsed);
    const auto bad = coarseness_profile(crush, {1, 2, 4});
    CHECK_FALSE(bad.proper);
    REQUIRE(bad.witness);
    CHECK(distance(l2, along[0], along[*bad.witness]) == doctest::Approx(50.0));

    auto empty = SampledMap::from_points(l2, {}, l2, {});
    CHECK_THROWS_AS(coarseness_profile(empty, {1.0}), PreconditionError);
    CHECK_THROWS(SampledMap::from_points(l2, along, l2, {}));
}

TEST_CASE("closeness") {
    Rng rng(2);
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    auto pts = random_points(l2, 50, 4.0, rng);
    std::vector<Point> shifted;
    for (const auto& x : pts) shifted.push_back(Point::lp({x.coords[0] + 1, x.coords[1]}));
    const auto f = SampledMap::from_points(l2, pts, l2, pts);
    CHECK(closeness(f, f).C == 0.0);
    CHECK(closeness(f, SampledMap::from_points(l2, pts, l2, shifted)).C == doctest::Approx(1.0));
    auto other = pts;
    other[0].coords[0] += 0.5;
    CHECK_THROWS_AS(closeness(f, SampledMap::from_points(l2, other, l2, pts)), PreconditionError);
}

TEST_CASE("continuous approximation") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const auto edge = SimplicialComplex::from_simplices(2, {{0, 1}});
    const std::vector<Point> f{Point::lp({0, 0}), Point::lp({2, 0})};
    const auto r = continuous_approximation(edge, l2, f,
                                            {BarycentricPoint{{0, 1}, {0.5, 0.5}}, BarycentricPoint::vertex(1)});
    REQUIRE(r.points.size() == 2);
    CHECK(*r.points[0].g == Point::lp({1, 0}));
    CHECK(*r.points[1].g == f[1]);
    CHECK(r.C == doctest::Approx(2.0));
    CHECK(r.within_bounds());
}

TEST_CASE("approximation bound on a 2-simplex in l_3") {
    const auto l3 = SpaceDescriptor::lp(3.0, 2);
    const auto tri = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
    // Image diameter exactly 1: the apex sits at l_3 distance 1 from both base points.
    const double h = std::cbrt(0.875);
    const std::vector<Point> f{Point::lp({0, 0}), Point::lp({1, 0}), Point::lp({0.5, h})};
    Rng rng(3);
    std::vector<BarycentricPoint> eval;
    for (int i = 0; i < 50; ++i) {
        double a = uniform(rng, 0.05, 1), b = uniform(rng, 0.05, 1), c = uniform(rng, 0.05, 1);
        const double s = a + b + c;
        a /= s;
        b /= s;
        eval.push_back({{0, 1, 2}, {a, b, 1.0 - a - b}});
    }
    const auto r = continuous_approximation(tri, l3, f, eval);
    CHECK(r.C == doctest::Approx(1.0));
    CHECK(r.max_to_nearest_vertex < 1.0);
    CHECK(r.max_to_f < 2.0);
    CHECK(r.failures == 0);
    CHECK(r.within_bounds());

    const auto spot = continuity_spot_check(tri, l3, f, BarycentricPoint::vertex(0),
                                            BarycentricPoint{{1, 2}, {0.5, 0.5}}, 100);
    CHECK(spot.max_jump < 0.05);
}

TEST_CASE("cross-block images are reported per point") {
    const auto x2 = SpaceDescriptor::glued_xp(2.0);
    const auto edge = SimplicialComplex::from_simplices(2, {{0, 1}});
    const std::vector<Point> f{Point::in_block(1, {1}), Point::in_block(2, {1, 0})};
    const auto r = continuous_approximation(edge, x2, f, {BarycentricPoint{{0, 1}, {0.5, 0.5}}, BarycentricPoint::vertex(0)});
    CHECK(r.failures == 1);
    CHECK(r.points[0].error.has_value());
    CHECK_FALSE(r.points[1].error.has_value());
}
