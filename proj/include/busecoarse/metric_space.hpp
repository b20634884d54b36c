#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace busecoarse {

/// Default absolute tolerance for every inequality check in the toolkit.
inline constexpr double kDefaultTolerance = 1e-9;

enum class PointTag { Ray, Block };

/**
 * A point of a catalogue space.
 *
 * Half-line points are `Ray` points. l_p(n) points are `Block` points with
 * `block == n`. In X_p a point is either on the ray or inside block n, and the
 * all-zero block point is the same point as ray point n; `canonical()` rewrites
 * it to the ray form.
 */
struct Point {
    PointTag tag = PointTag::Ray;
    double ray = 0.0;
    int block = 0;
    std::vector<double> coords;

    static Point on_ray(double t);
    static Point in_block(int n, std::vector<double> coords);
    /// Point of l_p(coords.size()).
    static Point lp(std::vector<double> coords);

    bool is_ray() const noexcept { return tag == PointTag::Ray; }

    friend bool operator==(const Point&, const Point&) = default;
};

enum class SpaceKind { Lp, HalfLine, GluedXp };

/**
 * Catalogue of proper metric spaces.
 *
 *  - `Lp`       the finite-dimensional space l_p(dim).
 *  - `HalfLine` [0, inf) with |s - t|.
 *  - `GluedXp`  the half-line with a copy of l_p(n) attached at the ray point n,
 *               for every n >= 1, carrying the induced path metric.
 *
 * Only `lp()`, `half_line()` and `glued_xp()` produce Busemann spaces. `raw_lp()`
 * also admits p = 1 and p = inf so that negative controls can be expressed;
 * operations that rely on uniqueness of geodesics reject raw spaces.
 */
class SpaceDescriptor {
public:
    static SpaceDescriptor lp(double p, int dim);
    static SpaceDescriptor raw_lp(double p, int dim);
    static SpaceDescriptor half_line();
    static SpaceDescriptor glued_xp(double p);

    SpaceKind kind() const noexcept { return kind_; }
    double p() const noexcept { return p_; }
    int dim() const noexcept { return dim_; }
    bool is_raw() const noexcept { return raw_; }
    bool is_busemann() const noexcept { return !raw_; }

    /// Canonical basepoint: the origin of l_p, 0 on the half-line and ray point 0 of X_p.
    Point basepoint() const;

    std::string describe() const;

    friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;

private:
    SpaceDescriptor(SpaceKind kind, double p, int dim, bool raw)
        : kind_(kind), p_(p), dim_(dim), raw_(raw) {}

    SpaceKind kind_ = SpaceKind::HalfLine;
    double p_ = 2.0;
    int dim_ = 1;
    bool raw_ = false;
};

double lp_norm(std::span<const double> v, double p);

/// Throws InvalidPointError when `a` is not a point of `space`.
void validate(const SpaceDescriptor& space, const Point& a);

/// Validates and applies the gluing identification of X_p.
Point canonical(const SpaceDescriptor& space, Point a);

/// Equality of the underlying points (after canonicalisation), up to `tol` in distance.
bool same_point(const SpaceDescriptor& space, const Point& a, const Point& b, double tol = 0.0);

double distance(const SpaceDescriptor& space, const Point& a, const Point& b);

/**
 * Point x_t on the geodesic from `a` to `b` with d(a, x_t) = t d(a, b).
 * Returns `a` and `b` exactly at t = 0 and t = 1. For raw l_p spaces this is the
 * affine geodesic, which is one of possibly many.
 */
Point geodesic_point(const SpaceDescriptor& space, const Point& a, const Point& b, double t);

/// Scaling toward the basepoint: the point of the geodesic from `o` to `x` at fraction t.
Point delta(const SpaceDescriptor& space, const Point& o, const Point& x, double t);

/**
 * Coordinate-by-coordinate geodesic in raw l_1(n): coordinate 0 moves first,
 * then coordinate 1, and so on, parametrised by arc length. Every monotone
 * staircase is an l_1 geodesic, which is what breaks uniqueness in l_1.
 */
Point staircase_geodesic_point(const SpaceDescriptor& space, const Point& a, const Point& b,
                               double t);

}  // namespace busecoarse
