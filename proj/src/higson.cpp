#include "busecoarse/higson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "busecoarse/boundary.hpp"
#include "busecoarse/errors.hpp"
#include "busecoarse/sampling.hpp"

namespace busecoarse {

double uniform_modulus(const SpaceDescriptor& space, const Point& o, const ScalarFn& f, double radius,
                       double epsilon, const ModulusOptions& options) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
    if (!(radius > 0.0)) throw DomainError("modulus radius must be > 0");
    Rng rng(options.seed);
    std::vector<Point> pts{canonical(space, o)};
    for (std::size_t i = 1; i < options.samples; ++i) pts.push_back(sample_ball(space, o, radius, rng));

    std::vector<double> values(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        values[i] = f(pts[i]);
        if (!std::isfinite(values[i])) throw EvaluationError("test function is not finite on the sample");
    }

    double closest_violation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (std::abs(values[i] - values[j]) >= epsilon)
                closest_violation = std::min(closest_violation, distance(space, pts[i], pts[j]));

    if (closest_violation == 0.0) throw EvaluationError("test function takes two values at one point");
    double delta = 2.0 * radius;
    while (delta > closest_violation) delta *= 0.5;
    return delta;
}

ScalarFn pullback(const SpaceDescriptor& space, const Point& o, double t, ScalarFn f) {
    if (!(t > 0.0)) throw DomainError("pullback radius must be > 0");
    return [space, o, t, f = std::move(f)](const Point& a) { return f(project(space, o, t, a)); };
}

namespace {

HigsonCheckReport run_shells(const SpaceDescriptor& space, const Point& o, double t, const ScalarFn& F,
                             double epsilon, double R, const HigsonOptions& opt, bool pulled_back) {
    if (!(epsilon > 0.0) || !(R > 0.0) || !(t > 0.0)) throw DomainError("epsilon, R and t must be > 0");
    HigsonCheckReport rep;
    rep.epsilon = epsilon;
    rep.R = R;
    rep.t = t;
    rep.pulled_back = pulled_back;
    rep.delta = uniform_modulus(space, o, F, t + R, epsilon, opt.modulus);
    rep.S = std::max(t, t * R / rep.delta);

    Rng rng(opt.seed);
    bool every_shell_covered = true;
    for (int j = 1; j <= opt.shells; ++j) {
        ShellResult shell;
        shell.radius = rep.S * std::ldexp(1.0, j);
        for (std::size_t k = 0; k < opt.directions_per_shell; ++k) {
            const Point a = sample_sphere(space, o, shell.radius, rng, opt.max_block);
            const Point b = sample_ball(space, a, R, rng);
            if (!(distance(space, a, b) < R)) continue;
            if (!(std::min(distance(space, o, a), distance(space, o, b)) > rep.S)) continue;
            const double variation = std::abs(F(a) - F(b));
            ++shell.pairs;
            if (variation > shell.max_variation || (!shell.witness && variation >= epsilon)) {
                shell.max_variation = std::max(shell.max_variation, variation);
                if (variation >= epsilon) shell.witness = std::make_pair(a, b);
            }
        }
        rep.pairs_tested += shell.pairs;
        if (shell.pairs == 0) every_shell_covered = false;
        if (shell.max_variation >= rep.max_violation) {
            rep.max_violation = shell.max_variation;
            if (shell.witness) rep.witness = shell.witness;
        }
        rep.shells.push_back(std::move(shell));
    }
    if (rep.max_violation >= epsilon)
        rep.verdict = Verdict::Fail;
    else
        rep.verdict = every_shell_covered ? Verdict::Pass : Verdict::Inconclusive;
    return rep;
}

}  // namespace

HigsonCheckReport higson_certify(const SpaceDescriptor& space, const Point& o, double t, const ScalarFn& f,
                                 double epsilon, double R, const HigsonOptions& options) {
    return run_shells(space, o, t, pullback(space, o, t, f), epsilon, R, options, true);
}

HigsonCheckReport higson_probe(const SpaceDescriptor& space, const Point& o, double t, const ScalarFn& F,
                               double epsilon, double R, const HigsonOptions& options) {
    return run_shells(space, o, t, F, epsilon, R, options, false);
}

const std::vector<std::string>& builtin_function_names() {
    static const std::vector<std::string> names{"constant", "coordinate", "radial", "angular", "sin-radial"};
    return names;
}

ScalarFn builtin_function(const std::string& name, const SpaceDescriptor& space, const Point& o) {
    if (name == "constant") return [](const Point&) { return 1.0; };
    if (name == "coordinate") {
        const bool on_half_line = space.kind() == SpaceKind::HalfLine;
        return [on_half_line](const Point& a) {
            if (a.is_ray()) return on_half_line ? a.ray : 0.0;
            return a.coords.front();
        };
    }
    if (name == "radial") return [space, o](const Point& a) { return distance(space, o, a); };
    if (name == "sin-radial") return [space, o](const Point& a) { return std::sin(distance(space, o, a)); };
    if (name == "angular") {
        const double p = space.p();
        return [p](const Point& a) {
            if (a.is_ray()) return 0.0;
            const double rho = lp_norm(a.coords, p);
            if (rho == 0.0) return 0.0;
            const double u1 = a.coords[0] / rho;
            const double u2 = a.coords.size() > 1 ? a.coords[1] / rho : 0.0;
            return rho / (1.0 + rho) * std::cos(3.0 * std::atan2(u2, u1));
        };
    }
    throw UsageError("unknown built-in function '" + name + "'");
}

}  // namespace busecoarse
