#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "busecoarse/check_report.hpp"
#include "busecoarse/metric_space.hpp"

namespace busecoarse {

struct WeightedPoint {
    Point point;
    double weight = 0.0;
};

/// Non-empty list of points with weights in (0,1] summing to 1 (within 1e-12).
class WeightedPoints {
public:
    explicit WeightedPoints(std::vector<WeightedPoint> entries);

    const std::vector<WeightedPoint>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::vector<WeightedPoint> entries_;
};

/// Both sides of d(x_t, y_t) <= (1 - t) d(x0, y0) + t d(x1, y1).
struct ConvexityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool satisfied = true;
    Point x_t;
    Point y_t;
};

/// A parametrised geodesic: (from, to, t) -> point at fraction t.
using GeodesicFn = std::function<Point(const Point&, const Point&, double)>;

ConvexityReport busemann_check(const SpaceDescriptor& space, const Point& x0, const Point& x1,
                               const Point& y0, const Point& y1, double t,
                               double tol = kDefaultTolerance);

/// Same check with explicit geodesic choices for each pair; used to exhibit
/// failures in spaces where geodesics are not unique.
ConvexityReport busemann_check(const SpaceDescriptor& space, const Point& x0, const Point& x1,
                               const Point& y0, const Point& y1, double t,
                               const GeodesicFn& x_geodesic, const GeodesicFn& y_geodesic,
                               double tol = kDefaultTolerance);

/**
 * Randomised convexity sweep: `samples` quadruples and parameters t drawn from
 * the ball of radius `radius` about the basepoint. For X_p with
 * `within_blocks` set, each quadruple lives in a single block (or on the ray).
 * The report carries the minimum margin and, on failure, the quadruple.
 */
CheckReport busemann_sweep(const SpaceDescriptor& space, std::size_t samples, std::uint64_t seed,
                           double radius = 10.0, bool within_blocks = false,
                           double tol = kDefaultTolerance);

/// The l_1 staircase counterexample: affine geodesic to (1,1) against the
/// geodesic through (1,0), compared at t = 1/2.
ConvexityReport l1_staircase_counterexample(const SpaceDescriptor& raw_l1_2d, double tol = kDefaultTolerance);

struct BarycenterOptions {
    double gradient_tolerance = 1e-12;  // relative to the spread of the input points
    int max_iterations = 50000;
};

struct BarycenterResult {
    Point point;
    double objective = 0.0;
    int iterations = 0;
    bool closed_form = false;
    bool used_fallback = false;
};

/// x -> sum_i w_i d(x, v_i)^2.
double barycenter_objective(const SpaceDescriptor& space, const WeightedPoints& wp, const Point& x);

/**
 * Minimiser of the weighted sum of squared distances.
 *
 * l_2 blocks and the half-line use the weighted mean. Other l_p blocks use
 * gradient descent with Barzilai-Borwein trial steps and Armijo backtracking,
 * started from the weighted mean, falling back to cyclic golden-section search
 * along coordinates when the line search stalls.
 *
 * In X_p all inputs must lie in one block (ray point n counts as the origin of
 * block n) or all on the ray; anything else throws
 * UnsupportedConfigurationError, as do raw spaces.
 */
BarycenterResult solve_barycenter(const SpaceDescriptor& space, const WeightedPoints& wp,
                                  const BarycenterOptions& options = {});

Point barycenter(const SpaceDescriptor& space, const WeightedPoints& wp,
                 const BarycenterOptions& options = {});

using PointMap = std::function<Point(const Point&)>;

/// h(x, t): the point at fraction t of the geodesic from x to phi(x).
Point geodesic_homotopy(const SpaceDescriptor& space, const PointMap& phi, const Point& x, double t);

}  // namespace busecoarse
