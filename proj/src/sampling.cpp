#include "busecoarse/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace busecoarse {

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> random_unit_vector(Rng& rng, int n, double p) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    double norm = 0.0;
    while (norm < 1e-12) {
        for (double& x : v) x = gauss(rng);
        norm = lp_norm(v, p);
    }
    for (double& x : v) x /= norm;
    return v;
}

namespace {

std::vector<double> ball_offset(Rng& rng, int n, double p, double radius) {
    std::vector<double> v = random_unit_vector(rng, n, p);
    const double r = radius * std::pow(uniform(rng, 0.0, 1.0), 1.0 / n);
    for (double& x : v) x *= r;
    return v;
}

Point glued_ball(const SpaceDescriptor& space, const Point& center, double radius, Rng& rng) {
    const double p = space.p();
    const double pos = center.is_ray() ? center.ray : static_cast<double>(center.block);
    const double off = center.is_ray() ? 0.0 : lp_norm(center.coords, p);
    const double slack = radius - off;

    // Component ids: -1 is the ray, 0 is the center's own block, m > 0 is block m.
    std::vector<int> components;
    if (slack >= 0.0) components.push_back(-1);
    if (!center.is_ray()) components.push_back(0);
    if (slack > 0.0) {
        const int lo = std::max(1, static_cast<int>(std::floor(pos - slack)));
        const int hi = static_cast<int>(std::ceil(pos + slack));
        for (int m = lo; m <= hi; ++m) {
            if (!center.is_ray() && m == center.block) continue;
            if (std::abs(pos - m) < slack) components.push_back(m);
        }
    }
    if (components.empty()) return center;

    const auto pick = std::uniform_int_distribution<std::size_t>(0, components.size() - 1)(rng);
    const int c = components[pick];
    if (c == -1) {
        return Point::on_ray(uniform(rng, std::max(0.0, pos - slack), pos + slack));
    }
    if (c == 0) {
        std::vector<double> v = ball_offset(rng, center.block, p, radius);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += center.coords[i];
        return canonical(space, Point::in_block(center.block, std::move(v)));
    }
    const double rest = slack - std::abs(pos - c);
    return canonical(space, Point::in_block(c, ball_offset(rng, c, p, rest)));
}

}  // namespace

Point sample_ball(const SpaceDescriptor& space, const Point& center, double radius, Rng& rng) {
    validate(space, center);
    switch (space.kind()) {
        case SpaceKind::Lp: {
            std::vector<double> v = ball_offset(rng, space.dim(), space.p(), radius);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += center.coords[i];
            return Point::lp(std::move(v));
        }
        case SpaceKind::HalfLine:
            return Point::on_ray(uniform(rng, std::max(0.0, center.ray - radius), center.ray + radius));
        case SpaceKind::GluedXp: return glued_ball(space, center, radius, rng);
    }
    return center;
}

BoundaryPoint random_boundary_point(const SpaceDescriptor& space, Rng& rng, int max_block) {
    switch (space.kind()) {
        case SpaceKind::Lp:
            return BoundaryPoint::sphere(space.dim(), random_unit_vector(rng, space.dim(), space.p()));
        case SpaceKind::HalfLine: return BoundaryPoint::ray_end();
        case SpaceKind::GluedXp: {
            const int k = std::uniform_int_distribution<int>(0, std::max(1, max_block))(rng);
            if (k == 0) return BoundaryPoint::ray_end();
            return BoundaryPoint::sphere(k, random_unit_vector(rng, k, space.p()));
        }
    }
    return BoundaryPoint::ray_end();
}

Point sample_sphere(const SpaceDescriptor& space, const Point& o, double radius, Rng& rng, int max_block) {
    return ray_point(space, o, random_boundary_point(space, rng, max_block), radius);
}

}  // namespace busecoarse
