#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "busecoarse/complexes.hpp"
#include "busecoarse/metric_space.hpp"

namespace busecoarse {

/// A map known on a finite domain sample: values[i] = f(domain[i]).
struct SampledMap {
    SpaceDescriptor domain_space = SpaceDescriptor::half_line();
    std::vector<Point> domain;
    SpaceDescriptor target = SpaceDescriptor::half_line();
    std::vector<Point> values;
    /// Control function S(R) on the radii of the last profile, once estimated.
    std::optional<std::vector<std::pair<double, double>>> control;

    /// Validates both sequences and checks that they have equal length.
    static SampledMap from_points(SpaceDescriptor domain_space, std::vector<Point> domain, SpaceDescriptor target,
                                  std::vector<Point> values);

    std::size_t size() const noexcept { return values.size(); }
};

struct ProfileRow {
    double R = 0.0;
    double S = 0.0;                 // max d(f(y), f(y')) over sampled pairs with d(y, y') < R
    double preimage_bound = 0.0;    // max d(y0, y) over y with d(f(y0), f(y)) <= R
};

struct CoarsenessProfile {
    std::vector<ProfileRow> rows;
    bool proper = true;
    double window_radius = 0.0;     // max d(y0, y)
    double image_radius = 0.0;      // max d(f(y0), f(y))
    /// On an improper verdict: a sample point at the window edge whose image
    /// stays inside a strictly smaller ball around f(y0).
    std::optional<std::size_t> witness;
};

/**
 * Sampled bornology control and properness heuristic, anchored at sample
 * index 0. Radii must be positive and strictly increasing.
 */
CoarsenessProfile coarseness_profile(SampledMap& f, const std::vector<double>& radii,
                                     double tol = kDefaultTolerance);

struct ClosenessCertificate {
    double C = 0.0;
    std::size_t attained_at = 0;
};

/// Sampled sup of d(f(y), g(y)). Throws PreconditionError on a domain mismatch.
ClosenessCertificate closeness(const SampledMap& f, const SampledMap& g);

struct ApproximationPoint {
    BarycentricPoint y;
    std::optional<Point> g;            // barycenter of the weighted vertex images
    std::optional<std::string> error;  // set when the barycenter is unsupported
    std::size_t dominant_vertex = 0;   // max-weight vertex (ties: smaller index); f(y) = f(dominant)
    double to_f = 0.0;                 // d(g(y), f(y))
    double to_nearest_vertex = 0.0;    // min over carrier vertices of d(g(y), f(v))
};

struct ApproximationResult {
    /// Max image diameter over the carrier simplices met by the sample.
    double C = 0.0;
    std::vector<ApproximationPoint> points;
    double max_to_f = 0.0;
    double max_to_nearest_vertex = 0.0;
    std::size_t failures = 0;
    /// max_to_nearest_vertex < C + slack and max_to_f < 2C + slack, over the supported points.
    bool within_bounds(double slack = 1e-6) const;
};

/**
 * Continuous approximation of a vertex map f: Y^0 -> X by barycenters. g(y)
 * is the barycenter of {(f(v_i), t_i)}, so g agrees with f on vertices.
 * Cross-block configurations in X_p are reported per point, not thrown.
 */
ApproximationResult continuous_approximation(const SimplicialComplex& complex, const SpaceDescriptor& target,
                                             const std::vector<Point>& vertex_map,
                                             const std::vector<BarycentricPoint>& eval_points);

struct ContinuitySpotCheck {
    int steps = 0;
    double max_jump = 0.0;  // largest d(g(y_k), g(y_{k+1})) along the segment
};

/// g evaluated at steps + 1 points of the straight barycentric segment from a
/// to b. The union of the two carriers must be a simplex.
ContinuitySpotCheck continuity_spot_check(const SimplicialComplex& complex, const SpaceDescriptor& target,
                                          const std::vector<Point>& vertex_map, const BarycentricPoint& a,
                                          const BarycentricPoint& b, int steps);

}  // namespace busecoarse
