#include "busecoarse/busemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "busecoarse/errors.hpp"
#include "busecoarse/sampling.hpp"

namespace busecoarse {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

WeightedPoints::WeightedPoints(std::vector<WeightedPoint> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("weighted point list is empty");
    double total = 0.0;
    for (const auto& e : entries_) {
        if (!(e.weight > 0.0 && e.weight <= 1.0)) {
            std::ostringstream os;
            os << "weights must lie in (0,1], got " << e.weight;
            throw DomainError(os.str());
        }
        total += e.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "weights must sum to 1, got " << total;
        throw DomainError(os.str());
    }
}

ConvexityReport busemann_check(const SpaceDescriptor& space, const Point& x0, const Point& x1,
                               const Point& y0, const Point& y1, double t, const GeodesicFn& x_geodesic,
                               const GeodesicFn& y_geodesic, double tol) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("convexity parameter t must lie in [0,1]");
    ConvexityReport r;
    r.x_t = x_geodesic(x0, x1, t);
    r.y_t = y_geodesic(y0, y1, t);
    r.lhs = distance(space, r.x_t, r.y_t);
    r.rhs = (1.0 - t) * distance(space, x0, y0) + t * distance(space, x1, y1);
    r.margin = r.rhs - r.lhs;
    r.satisfied = r.margin >= -tol;
    return r;
}

ConvexityReport busemann_check(const SpaceDescriptor& space, const Point& x0, const Point& x1,
                               const Point& y0, const Point& y1, double t, double tol) {
    const GeodesicFn g = [&space](const Point& a, const Point& b, double s) {
        return geodesic_point(space, a, b, s);
    };
    return busemann_check(space, x0, x1, y0, y1, t, g, g, tol);
}

namespace {

// Four points of one component of X_p: the ray, or block n in 1..4.
std::vector<Point> same_component_quadruple(const SpaceDescriptor& space, double radius, Rng& rng) {
    const int component = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<Point> pts;
    for (int i = 0; i < 4; ++i) {
        if (component == 0) {
            pts.push_back(Point::on_ray(uniform(rng, 0.0, radius)));
        } else {
            const auto block = SpaceDescriptor::lp(space.p(), component);
            Point q = sample_ball(block, block.basepoint(), radius, rng);
            pts.push_back(canonical(space, Point::in_block(component, std::move(q.coords))));
        }
    }
    return pts;
}

}  // namespace

CheckReport busemann_sweep(const SpaceDescriptor& space, std::size_t samples, std::uint64_t seed,
                           double radius, bool within_blocks, double tol) {
    Rng rng(seed);
    CheckReport report;
    report.check = "busemann-convexity";
    report.margin = std::numeric_limits<double>::infinity();
    const Point o = space.basepoint();
    for (std::size_t i = 0; i < samples; ++i) {
        std::vector<Point> q;
        if (within_blocks && space.kind() == SpaceKind::GluedXp) {
            q = same_component_quadruple(space, radius, rng);
        } else {
            for (int k = 0; k < 4; ++k) q.push_back(sample_ball(space, o, radius, rng));
        }
        const double t = uniform(rng, 0.0, 1.0);
        const ConvexityReport c = busemann_check(space, q[0], q[1], q[2], q[3], t, tol);
        if (c.margin < report.margin) {
            report.margin = c.margin;
            report.lhs = c.lhs;
            report.rhs = c.rhs;
            if (!c.satisfied) report.witness = q;
        }
        ++report.samples;
    }
    if (samples == 0) report.margin = 0.0;
    report.verdict = report.margin >= -tol ? Verdict::Pass : Verdict::Fail;
    return report;
}

ConvexityReport l1_staircase_counterexample(const SpaceDescriptor& raw_l1_2d, double tol) {
    if (raw_l1_2d.kind() != SpaceKind::Lp || raw_l1_2d.p() != 1.0 || raw_l1_2d.dim() != 2)
        throw UnsupportedConfigurationError("the staircase counterexample lives in raw l_1(2)");
    const Point origin = Point::lp({0.0, 0.0});
    const Point corner = Point::lp({1.0, 1.0});
    const GeodesicFn affine = [&](const Point& a, const Point& b, double s) {
        return geodesic_point(raw_l1_2d, a, b, s);
    };
    const GeodesicFn staircase = [&](const Point& a, const Point& b, double s) {
        return staircase_geodesic_point(raw_l1_2d, a, b, s);
    };
    return busemann_check(raw_l1_2d, origin, corner, origin, corner, 0.5, affine, staircase, tol);
}

double barycenter_objective(const SpaceDescriptor& space, const WeightedPoints& wp, const Point& x) {
    double f = 0.0;
    for (const auto& e : wp.entries()) {
        const double d = distance(space, x, e.point);
        f += e.weight * d * d;
    }
    return f;
}

namespace {

using Vec = std::vector<double>;

struct BlockProblem {
    std::vector<Vec> points;
    Vec weights;
    double p = 2.0;
};

double block_objective(const BlockProblem& pr, const Vec& x) {
    double f = 0.0;
    Vec z(x.size());
    for (std::size_t i = 0; i < pr.points.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) z[j] = x[j] - pr.points[i][j];
        const double d = lp_norm(z, pr.p);
        f += pr.weights[i] * d * d;
    }
    return f;
}

// grad ||z||_p^2 = 2 ||z|| (|z_j| / ||z||)^(p-1) sign(z_j)
Vec block_gradient(const BlockProblem& pr, const Vec& x) {
    Vec g(x.size(), 0.0);
    Vec z(x.size());
    for (std::size_t i = 0; i < pr.points.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) z[j] = x[j] - pr.points[i][j];
        const double n = lp_norm(z, pr.p);
        if (n == 0.0) continue;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double r = std::abs(z[j]) / n;
            const double gj = 2.0 * n * std::pow(r, pr.p - 1.0);
            g[j] += pr.weights[i] * (z[j] >= 0.0 ? gj : -gj);
        }
    }
    return g;
}

Vec weighted_mean(const BlockProblem& pr) {
    Vec m(pr.points.front().size(), 0.0);
    for (std::size_t i = 0; i < pr.points.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m[j] += pr.weights[i] * pr.points[i][j];
    return m;
}

double norm2(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Golden-section minimisation of a convex function of one variable on [lo, hi].
template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Cyclic coordinate search. The minimiser lies in the coordinate bounding box of
// the inputs: clamping each coordinate shrinks every |z_j| and hence every l_p distance.
void coordinate_polish(const BlockProblem& pr, Vec& x, double scale) {
    Vec lo = pr.points.front(), hi = pr.points.front();
    for (const auto& v : pr.points)
        for (std::size_t j = 0; j < x.size(); ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    for (int sweep = 0; sweep < 200; ++sweep) {
        double moved = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double before = x[j];
            auto along = [&](double s) {
                Vec y = x;
                y[j] = s;
                return block_objective(pr, y);
            };
            x[j] = golden_min(along, lo[j], hi[j], 1e-13 * scale);
            moved = std::max(moved, std::abs(x[j] - before));
        }
        if (moved < 1e-12 * scale) break;
    }
}

BarycenterResult solve_block(const BlockProblem& pr, const BarycenterOptions& opt) {
    BarycenterResult res;
    Vec x = weighted_mean(pr);
    double scale = 0.0;
    for (const auto& v : pr.points) {
        Vec d(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) d[j] = v[j] - x[j];
        scale = std::max(scale, norm2(d));
    }
    if (pr.p == 2.0 || scale == 0.0 || x.size() == 1) {
        // In one dimension every l_p metric is |.| and the mean is optimal.
        res.closed_form = true;
        res.point = Point::lp(x);
        res.objective = block_objective(pr, x);
        return res;
    }

    double f = block_objective(pr, x);
    Vec g = block_gradient(pr, x);
    double step = 0.5;
    bool stalled = false;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        const double gn = norm2(g);
        if (gn <= opt.gradient_tolerance * scale) break;
        double alpha = step;
        Vec trial(x.size());
        double ft = 0.0;
        bool accepted = false;
        for (int bt = 0; bt < 80; ++bt) {
            for (std::size_t j = 0; j < x.size(); ++j) trial[j] = x[j] - alpha * g[j];
            ft = block_objective(pr, trial);
            if (ft <= f - 1e-4 * alpha * gn * gn) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            stalled = gn > 1e-7 * scale;  // below this the objective is at roundoff level
            break;
        }
        Vec gt = block_gradient(pr, trial);
        double sy = 0.0, ss = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double s = trial[j] - x[j];
            sy += s * (gt[j] - g[j]);
            ss += s * s;
        }
        step = sy > 0.0 ? ss / sy : 2.0 * alpha;
        x = std::move(trial);
        g = std::move(gt);
        f = ft;
    }
    res.iterations = it;
    if (stalled || it == opt.max_iterations) {
        coordinate_polish(pr, x, scale);
        res.used_fallback = true;
    }
    res.point = Point::lp(x);
    res.objective = block_objective(pr, x);
    return res;
}

}  // namespace

BarycenterResult solve_barycenter(const SpaceDescriptor& space, const WeightedPoints& wp,
                                  const BarycenterOptions& options) {
    if (!space.is_busemann())
        throw UnsupportedConfigurationError("barycenters are only defined on Busemann catalogue spaces; " +
                                            space.describe() + " is raw");
    for (const auto& e : wp.entries()) validate(space, e.point);

    BlockProblem pr;
    pr.p = space.p();
    for (const auto& e : wp.entries()) pr.weights.push_back(e.weight);

    auto ray_mean = [&] {
        double m = 0.0;
        for (const auto& e : wp.entries()) m += e.weight * e.point.ray;
        BarycenterResult r;
        r.point = Point::on_ray(m);
        r.closed_form = true;
        r.objective = barycenter_objective(space, wp, r.point);
        return r;
    };

    switch (space.kind()) {
        case SpaceKind::HalfLine: return ray_mean();
        case SpaceKind::Lp:
            for (const auto& e : wp.entries()) pr.points.push_back(e.point.coords);
            return solve_block(pr, options);
        case SpaceKind::GluedXp: {
            int block = 0;
            for (const auto& e : wp.entries()) {
                const Point c = canonical(space, e.point);
                if (c.is_ray()) continue;
                if (block != 0 && c.block != block)
                    throw UnsupportedConfigurationError("barycenter inputs span blocks " + std::to_string(block) +
                                                        " and " + std::to_string(c.block));
                block = c.block;
            }
            if (block == 0) return ray_mean();
            for (const auto& e : wp.entries()) {
                const Point c = canonical(space, e.point);
                if (c.is_ray()) {
                    if (c.ray != static_cast<double>(block)) {
                        std::ostringstream os;
                        os << "barycenter inputs mix block " << block << " with ray point " << c.ray;
                        throw UnsupportedConfigurationError(os.str());
                    }
                    pr.points.emplace_back(static_cast<std::size_t>(block), 0.0);
                } else {
                    pr.points.push_back(c.coords);
                }
            }
            BarycenterResult r = solve_block(pr, options);
            r.point = canonical(space, Point::in_block(block, std::move(r.point.coords)));
            return r;
        }
    }
    throw UnsupportedConfigurationError("unknown space");
}

Point barycenter(const SpaceDescriptor& space, const WeightedPoints& wp, const BarycenterOptions& options) {
    return solve_barycenter(space, wp, options).point;
}

Point geodesic_homotopy(const SpaceDescriptor& space, const PointMap& phi, const Point& x, double t) {
    return geodesic_point(space, x, phi(x), t);
}

}  // namespace busecoarse
