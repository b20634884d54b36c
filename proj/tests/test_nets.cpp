#include <doctest.h>

#include <cmath>

#include "busecoarse/errors.hpp"
#include "busecoarse/nets.hpp"
#include "busecoarse/sampling.hpp"
#include "oracles.hpp"

using namespace busecoarse;

namespace {

DiscreteSample integers(int lo, int hi) {
    std::vector<Point> pts;
    for (int i = lo; i <= hi; ++i) pts.push_back(Point::lp({static_cast<double>(i)}));
    return DiscreteSample(SpaceDescriptor::lp(2.0, 1), pts);
}

DiscreteSample ray_integers(int hi) {
    std::vector<Point> pts;
    for (int i = 0; i <= hi; ++i) pts.push_back(Point::on_ray(i));
    return DiscreteSample(SpaceDescriptor::half_line(), pts);
}

}  // namespace

TEST_CASE("greedy nets") {
    const auto w = ray_integers(10);
    CHECK(greedy_net(w, 0.5).net.size() == 11);
    const auto n = greedy_net(w, 1.5);
    REQUIRE(n.net.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(n.net.points()[i].ray == 2.0 * i);
    CHECK(n.C == 1.0);
    CHECK(n.verify(w));
    const DiscreteSample one(SpaceDescriptor::half_line(), {Point::on_ray(3)});
    CHECK(greedy_net(one, 1.0).C == 0.0);
    CHECK_THROWS(DiscreteSample(SpaceDescriptor::half_line(), {Point::on_ray(1), Point::on_ray(1)}));
}

TEST_CASE("greedy net certificates on random windows") {
    Rng rng(21);
    const auto space = SpaceDescriptor::lp(3.0, 2);
    std::vector<Point> pts;
    for (int i = 0; i < 400; ++i) pts.push_back(sample_ball(space, space.basepoint(), 5.0, rng));
    const DiscreteSample w(space, pts);
    for (double eps : {0.3, 1.0, 2.5}) {
        const auto n = greedy_net(w, eps);
        CHECK(n.verify(w));
        CHECK(n.C <= eps);
    }
}

TEST_CASE("bounded geometry profile") {
    CHECK(bounded_geometry_profile(integers(-10, 10), 2.5) == 5);
    CHECK(bounded_geometry_profile(integers(0, 0), 2.5) == 1);
    std::vector<Point> lattice;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            if (4.0 * (a * a + b * b) <= 36.0) lattice.push_back(Point::lp({2.0 * a, 2.0 * b}));
    CHECK(bounded_geometry_profile(DiscreteSample(SpaceDescriptor::lp(2.0, 2), lattice), 2.0) == 5);
}

TEST_CASE("packing numbers") {
    const auto h = SpaceDescriptor::half_line();
    CHECK(packing_number(h, Point::on_ray(5), 1.0, 0.5).count == 4);
    CHECK(packing_number(h, Point::on_ray(5), 0.2, 0.5).count == 1);
    const auto l2 = packing_number(SpaceDescriptor::lp(2.0, 2), Point::lp({0, 0}), 1.0, 1.0).count;
    CHECK(l2 >= 4);
    CHECK(l2 <= 6);

    // Interval grid against the 1-D greedy oracle.
    for (double R : {1.0, 2.0, 3.5})
        for (double eps : {0.5, 0.7, 1.0}) {
            const double res = eps / 10;
            const long steps = std::lround(2 * R / res), sep = std::lround(eps / res);
            CHECK(packing_number(h, Point::on_ray(10), R, eps).count == oracle::interval_greedy_count(steps, sep));
        }
}

TEST_CASE("covering numbers") {
    const auto h = SpaceDescriptor::half_line();
    const auto c = covering_number(h, Point::on_ray(5), 1.0, 1.0);
    CHECK(c.count >= 1);
    CHECK(c.count <= 3);
    CHECK(covering_number(SpaceDescriptor::lp(2.0, 2), Point::lp({0, 0}), 1.0, 1.5).count == 1);

    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const auto cert = covering_number(l2, Point::lp({0, 0}), 2.0, 1.0);
    CHECK(cert.count >= 4);
    CHECK(cert.count <= 9);
    CHECK(cert.centers.size() == cert.count);
    for (const auto& g : ball_grid(l2, Point::lp({0, 0}), 2.0, cert.resolution)) {
        double best = 1e9;
        for (const auto& x : cert.centers) best = std::min(best, distance(l2, g, x));
        CHECK(best <= 1.0 + 1e-12);
    }
}

TEST_CASE("packing and covering sandwich") {
    const std::vector<std::pair<SpaceDescriptor, Point>> cases{
        {SpaceDescriptor::half_line(), Point::on_ray(4)},
        {SpaceDescriptor::lp(2.0, 2), Point::lp({0, 0})},
        {SpaceDescriptor::lp(3.0, 2), Point::lp({1, -1})},
        {SpaceDescriptor::glued_xp(2.0), Point::on_ray(2)},
    };
    for (const auto& [space, x] : cases)
        for (double R : {1.0, 2.0})
            for (double eps : {0.5, 1.0}) {
                CAPTURE(space.describe());
                CAPTURE(R);
                CAPTURE(eps);
                const double res = eps / 10;
                const auto pack = packing_number(space, x, R, eps, res).count;
                const auto cover = covering_number(space, x, R, eps, res).count;
                const auto pack2 = packing_number(space, x, R, 2 * eps, res).count;
                CHECK(pack >= cover);
                CHECK(cover >= pack2);
            }
}

TEST_CASE("gamma_k") {
    const auto g = gamma_k(2.0, 2, 2, 2.0);
    CHECK(g.size() == 5);
    CHECK(gamma_k(2.0, 3, 4, 2.0).size() == 1);
    const auto rows = gamma_k_growth(2.0, 2, 2.0, 6);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].count == 2 * (i + 1) + 1);
    for (double p : {1.5, 2.0, 3.0})
        for (int n = 1; n <= 4; ++n) CHECK(gamma_k(p, 1, n, 2.5).size() == oracle::lattice_count(p, 1, n, 2.5));
    CHECK(growth_table_csv({{1, 3}, {2, 5}}) == "n,count\n1,3\n2,5\n");
    // Points of Gamma_k are (k - 0.01)-separated.
    const auto sep = greedy_separated_indices(SpaceDescriptor::glued_xp(2.0), gamma_k(2.0, 2, 3, 4.0).points(), 1.99);
    CHECK(sep.size() == gamma_k(2.0, 2, 3, 4.0).size());
}
