#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "busecoarse/check_report.hpp"
#include "busecoarse/metric_space.hpp"

namespace busecoarse {

using ScalarFn = std::function<double(const Point&)>;

struct ModulusOptions {
    std::size_t samples = 600;
    std::uint64_t seed = 0;
};

/**
 * Sampled uniform-continuity modulus of `f` on B(o, radius).
 *
 * Starting from the diameter bound 2 * radius, delta is halved until no sampled
 * pair with d(a, b) < delta has |f(a) - f(b)| >= epsilon. The result therefore
 * lies in (m/2, m], where m is the smallest sampled distance of a violating pair.
 * Throws EvaluationError if f is not finite on the sample.
 */
double uniform_modulus(const SpaceDescriptor& space, const Point& o, const ScalarFn& f, double radius,
                       double epsilon, const ModulusOptions& options = {});

/// F = f o pi_t, defined on the whole space.
ScalarFn pullback(const SpaceDescriptor& space, const Point& o, double t, ScalarFn f);

struct ShellResult {
    double radius = 0.0;
    std::size_t pairs = 0;
    double max_variation = 0.0;
    std::optional<std::pair<Point, Point>> witness;
};

struct HigsonCheckReport {
    double epsilon = 0.0;
    double R = 0.0;
    double t = 0.0;
    double delta = 0.0;
    double S = 0.0;
    bool pulled_back = true;
    std::size_t pairs_tested = 0;
    double max_violation = 0.0;  // largest |F(a) - F(b)| seen beyond S
    std::optional<std::pair<Point, Point>> witness;
    std::vector<ShellResult> shells;
    /// Pass: no violation on the sample (support, not proof). Fail: a witness
    /// pair was found. Inconclusive: some shell produced no admissible pair.
    Verdict verdict = Verdict::Inconclusive;
};

struct HigsonOptions {
    ModulusOptions modulus;
    int shells = 5;
    std::size_t directions_per_shell = 200;
    std::uint64_t seed = 0;
    int max_block = 8;  // block indices explored by random directions in X_p
};

/**
 * Checks the Higson condition for F = f o pi_t with the explicit constants:
 * delta is the sampled modulus of F on B(o, t + R), S = max(t, t R / delta),
 * and pairs with d(a, b) < R and min(d(o,a), d(o,b)) > S are drawn on radial
 * shells of radius S * 2^j, j = 1..shells.
 */
HigsonCheckReport higson_certify(const SpaceDescriptor& space, const Point& o, double t, const ScalarFn& f,
                                 double epsilon, double R, const HigsonOptions& options = {});

/// Same bookkeeping applied to F itself instead of a pullback; used as a negative control.
HigsonCheckReport higson_probe(const SpaceDescriptor& space, const Point& o, double t, const ScalarFn& F,
                               double epsilon, double R, const HigsonOptions& options = {});

/// Names accepted by `builtin_function`.
const std::vector<std::string>& builtin_function_names();

/**
 * Built-in test functions:
 *  constant    1
 *  coordinate  first coordinate (ray coordinate on the half-line, 0 on the X_p ray)
 *  radial      d(o, x)
 *  angular     rho / (1 + rho) * cos(3 theta), rho the l_p norm inside the block and
 *              theta the angle of its first two normalised coordinates; 0 on the ray
 *  sin-radial  sin(d(o, x))
 */
ScalarFn builtin_function(const std::string& name, const SpaceDescriptor& space, const Point& o);

}  // namespace busecoarse
