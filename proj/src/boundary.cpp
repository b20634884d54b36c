#include "busecoarse/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "busecoarse/errors.hpp"

namespace busecoarse {

BoundaryPoint BoundaryPoint::ray_end() { return BoundaryPoint{}; }

BoundaryPoint BoundaryPoint::sphere(int n, std::vector<double> direction) {
    BoundaryPoint xi;
    xi.tag = BoundaryTag::SphereDir;
    xi.block = n;
    xi.direction = std::move(direction);
    return xi;
}

void validate(const SpaceDescriptor& space, const BoundaryPoint& xi) {
    if (xi.tag == BoundaryTag::RayEnd) {
        if (space.kind() == SpaceKind::Lp) throw InvalidPointError("l_p has no ray end");
        return;
    }
    if (space.kind() == SpaceKind::HalfLine) throw InvalidPointError("the half-line boundary is its ray end");
    const int expected = space.kind() == SpaceKind::Lp ? space.dim() : xi.block;
    if (xi.block < 1 || xi.block != expected || static_cast<int>(xi.direction.size()) != expected)
        throw InvalidPointError("sphere direction has the wrong dimension for " + space.describe());
    if (!std::all_of(xi.direction.begin(), xi.direction.end(), [](double x) { return std::isfinite(x); }))
        throw InvalidPointError("non-finite sphere direction");
    if (lp_norm(xi.direction, space.p()) == 0.0) throw InvalidPointError("zero sphere direction");
}

BoundaryPoint normalize(const SpaceDescriptor& space, BoundaryPoint xi) {
    validate(space, xi);
    if (xi.tag == BoundaryTag::RayEnd) return xi;
    const double n = lp_norm(xi.direction, space.p());
    if (std::abs(n - 1.0) <= 1e-12) return xi;
    for (double& x : xi.direction) x /= n;
    return xi;
}

Point ray_point(const SpaceDescriptor& space, const Point& o, const BoundaryPoint& raw_xi, double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("ray parameter must be finite and >= 0");
    validate(space, o);
    const BoundaryPoint xi = normalize(space, raw_xi);

    switch (space.kind()) {
        case SpaceKind::HalfLine: return Point::on_ray(o.ray + r);
        case SpaceKind::Lp: {
            std::vector<double> c = o.coords;
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += r * xi.direction[i];
            return Point::lp(std::move(c));
        }
        case SpaceKind::GluedXp: {
            const Point origin = canonical(space, o);
            if (xi.tag == BoundaryTag::SphereDir && !origin.is_ray() && origin.block == xi.block) {
                std::vector<double> c = origin.coords;
                for (std::size_t i = 0; i < c.size(); ++i) c[i] += r * xi.direction[i];
                return canonical(space, Point::in_block(xi.block, std::move(c)));
            }
            // Leave through the attaching point of o's block (if any), then follow
            // the ray, then enter block xi.block along its direction.
            const double gate = xi.tag == BoundaryTag::RayEnd
                                    ? (origin.is_ray() ? origin.ray : static_cast<double>(origin.block))
                                    : static_cast<double>(xi.block);
            const Point gate_point = Point::on_ray(gate);
            const double to_gate = distance(space, origin, gate_point);
            if (r <= to_gate) return geodesic_point(space, origin, gate_point, to_gate == 0.0 ? 0.0 : r / to_gate);
            const double beyond = r - to_gate;
            if (xi.tag == BoundaryTag::RayEnd) return Point::on_ray(gate + beyond);
            std::vector<double> c(xi.direction.size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = beyond * xi.direction[i];
            return canonical(space, Point::in_block(xi.block, std::move(c)));
        }
    }
    return o;
}

Point project(const SpaceDescriptor& space, const Point& o, double t, const CompactifiedPoint& z) {
    if (!(t > 0.0)) throw DomainError("projection radius must be > 0");
    if (const auto* xi = std::get_if<BoundaryPoint>(&z)) return ray_point(space, o, *xi, t);
    const Point& a = std::get<Point>(z);
    const double d = distance(space, o, a);
    if (d <= t) return canonical(space, a);
    return delta(space, o, a, t / d);
}

Point project_between(const SpaceDescriptor& space, const Point& o, double s, double t, const Point& a,
                      double tol) {
    if (!(s > 0.0)) throw DomainError("inner radius must be > 0");
    if (!(s < t)) throw DomainError("project_between needs s < t");
    const double d = distance(space, o, a);
    if (d > t + tol) {
        std::ostringstream os;
        os << "point at distance " << d << " lies outside B(o, " << t << ")";
        throw PreconditionError(os.str());
    }
    if (d <= s) return canonical(space, a);
    return delta(space, o, a, s / d);
}

double contraction_radius(double s) {
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("contraction clock needs s in (0,1]");
    return (1.0 - s) / s;
}

CompactifiedPoint contraction(const SpaceDescriptor& space, const Point& o, const CompactifiedPoint& z,
                              double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("contraction parameter must lie in [0,1]");
    if (s == 0.0) {
        if (const auto* xi = std::get_if<BoundaryPoint>(&z)) return normalize(space, *xi);
        return canonical(space, std::get<Point>(z));
    }
    if (s == 1.0) return canonical(space, o);
    return project(space, o, contraction_radius(s), z);
}

CheckReport busemann_contraction_bound(const SpaceDescriptor& space, const Point& o, const Point& a,
                                       const Point& b, double t, double tol) {
    if (!(t > 0.0)) throw DomainError("radius t must be > 0");
    const double r = std::min(distance(space, o, a), distance(space, o, b));
    if (r < t) {
        std::ostringstream os;
        os << "min(d(o,a), d(o,b)) = " << r << " is below t = " << t;
        throw PreconditionError(os.str());
    }
    const double lambda = t / r;
    CheckReport rep;
    rep.check = "busemann-contraction-bound";
    rep.lhs = distance(space, delta(space, o, a, lambda), delta(space, o, b, lambda));
    rep.rhs = lambda * distance(space, a, b);
    rep.margin = rep.rhs - rep.lhs;
    rep.samples = 1;
    rep.verdict = rep.margin >= -tol ? Verdict::Pass : Verdict::Fail;
    if (!rep.passed()) rep.witness = {a, b};
    return rep;
}

bool in_ray_end_neighborhood(const SpaceDescriptor& space, const CompactifiedPoint& z, int n) {
    if (space.kind() == SpaceKind::Lp) return false;
    if (const auto* xi = std::get_if<BoundaryPoint>(&z)) {
        return xi->tag == BoundaryTag::RayEnd || xi->block > n;
    }
    const Point a = canonical(space, std::get<Point>(z));
    return a.is_ray() ? a.ray > n : a.block > n;
}

}  // namespace busecoarse
