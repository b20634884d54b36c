#include <doctest.h>

#include <cmath>
#include <numbers>

#include "busecoarse/boundary.hpp"
#include "busecoarse/errors.hpp"
#include "busecoarse/higson.hpp"

using namespace busecoarse;

TEST_CASE("uniform modulus") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const Point o = l2.basepoint();
    const ScalarFn constant = [](const Point&) { return 1.0; };
    CHECK(uniform_modulus(l2, o, constant, 3.0, 0.1) == doctest::Approx(6.0));

    const ScalarFn first = [](const Point& x) { return x.coords[0]; };
    const double eps = 0.2;
    const double d1 = uniform_modulus(l2, o, first, 3.0, eps, {2000, 1});
    CHECK(d1 >= eps / 2);
    CHECK(d1 <= 2 * eps);

    // Lipschitz constant 6 on B(o, 3).
    const ScalarFn square = [&](const Point& x) {
        const double r = distance(l2, o, x);
        return r * r;
    };
    const double d2 = uniform_modulus(l2, o, square, 3.0, 0.1, {2000, 2});
    CHECK(d2 >= 0.1 / 6 / 2);
    CHECK(d2 <= 0.1 / 6 * 2);

    const ScalarFn bad = [](const Point&) { return std::nan(""); };
    CHECK_THROWS_AS(uniform_modulus(l2, o, bad, 1.0, 0.1), EvaluationError);
}

TEST_CASE("pullback") {
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const Point o = l2.basepoint();
    const ScalarFn first = [](const Point& x) { return x.coords[0]; };
    const ScalarFn F = pullback(l2, o, 1.0, first);
    CHECK(F(Point::lp({10, 0})) == doctest::Approx(1.0));
    CHECK(F(Point::lp({0.3, 0.4})) == 0.3);
    const ScalarFn c = pullback(l2, o, 1.0, [](const Point&) { return 7.0; });
    CHECK(c(Point::lp({-100, 3})) == 7.0);
}

TEST_CASE("built-in functions are certified") {
    for (const auto& space : {SpaceDescriptor::lp(2.0, 2), SpaceDescriptor::glued_xp(2.0)}) {
        const Point o = space.basepoint();
        for (const auto& name : builtin_function_names()) {
            CAPTURE(space.describe());
            CAPTURE(name);
            const auto r = higson_certify(space, o, 1.0, builtin_function(name, space, o), 0.1, 1.0);
            CHECK(r.verdict == Verdict::Pass);
            CHECK(r.max_violation < 0.1);
            CHECK(r.S == doctest::Approx(std::max(1.0, 1.0 / r.delta)));
            CHECK(r.shells.size() == 5);
        }
    }
    const auto l2 = SpaceDescriptor::lp(2.0, 2);
    const auto r = higson_certify(l2, l2.basepoint(), 1.0, [](const Point&) { return 3.0; }, 0.1, 1.0);
    CHECK(r.max_violation == 0.0);
}

TEST_CASE("sin on the half-line is not Higson") {
    const auto h = SpaceDescriptor::half_line();
    const ScalarFn G = [](const Point& x) { return std::sin(x.ray); };
    const auto r = higson_probe(h, h.basepoint(), 1.0, G, 0.5, 4.0);
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE(r.witness);
    for (const auto& shell : r.shells) CHECK(shell.witness.has_value());

    // The explicit pair sequence: |G(a) - G(b)| = 2 with d(a, b) = pi < 4 at any radius.
    for (int k = 1; k < 50; k += 7) {
        const double a = std::numbers::pi / 2 + 2 * std::numbers::pi * k;
        CHECK(std::abs(G(Point::on_ray(a)) - G(Point::on_ray(a + std::numbers::pi))) == doctest::Approx(2.0));
    }
}
