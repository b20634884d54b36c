#pragma once

#include <variant>
#include <vector>

#include "busecoarse/check_report.hpp"
#include "busecoarse/metric_space.hpp"

namespace busecoarse {

enum class BoundaryTag { RayEnd, SphereDir };

/**
 * Ideal point of the visual boundary.
 *
 * `RayEnd` is the end of the half-line. For X_p it is also the point that
 * compactifies the union of block spheres. `SphereDir` is the end of the ray
 * leaving the origin of block `block` in `direction` (unit l_p vector).
 */
struct BoundaryPoint {
    BoundaryTag tag = BoundaryTag::RayEnd;
    int block = 0;
    std::vector<double> direction;

    static BoundaryPoint ray_end();
    /// Direction is stored as given; call `normalize` before use.
    static BoundaryPoint sphere(int n, std::vector<double> direction);

    friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

using CompactifiedPoint = std::variant<Point, BoundaryPoint>;

void validate(const SpaceDescriptor& space, const BoundaryPoint& xi);

/// Rescales the direction to unit l_p norm; a no-op when it already is (within 1e-12).
BoundaryPoint normalize(const SpaceDescriptor& space, BoundaryPoint xi);

/// Point at distance r >= 0 from `o` along the geodesic ray from `o` toward `xi`.
Point ray_point(const SpaceDescriptor& space, const Point& o, const BoundaryPoint& xi, double r);

/// Radial projection onto the closed ball B(o, t).
Point project(const SpaceDescriptor& space, const Point& o, double t, const CompactifiedPoint& z);

/// Bonding map B(o, t) -> B(o, s) of the inverse system, 0 < s < t.
Point project_between(const SpaceDescriptor& space, const Point& o, double s, double t, const Point& a,
                      double tol = kDefaultTolerance);

/// Radius clock of the contraction: T(s) = (1 - s) / s.
double contraction_radius(double s);

/**
 * Contraction of the compactification onto `o`: the identity at s = 0, the
 * constant `o` at s = 1, and projection onto B(o, T(s)) in between.
 */
CompactifiedPoint contraction(const SpaceDescriptor& space, const Point& o, const CompactifiedPoint& z,
                              double s);

/**
 * d(delta_{t/r}(a), delta_{t/r}(b)) <= (t/r) d(a, b) with r = min(d(o,a), d(o,b)).
 * Throws PreconditionError when r < t.
 */
CheckReport busemann_contraction_bound(const SpaceDescriptor& space, const Point& o, const Point& a,
                                       const Point& b, double t, double tol = kDefaultTolerance);

/**
 * Membership in the N-th basic neighbourhood of the ray end. For X_p these are
 * the ray beyond N together with all blocks (and block spheres) of index > N.
 * For the half-line only the ray condition applies. l_p has no ray end.
 */
bool in_ray_end_neighborhood(const SpaceDescriptor& space, const CompactifiedPoint& z, int n);

}  // namespace busecoarse
