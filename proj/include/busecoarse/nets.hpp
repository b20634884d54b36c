#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "busecoarse/metric_space.hpp"

namespace busecoarse {

/// Finite set of pairwise distinct points of `ambient`.
class DiscreteSample {
public:
    DiscreteSample(SpaceDescriptor ambient, std::vector<Point> points);

    const SpaceDescriptor& ambient() const noexcept { return ambient_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    SpaceDescriptor ambient_;
    std::vector<Point> points_;
};

/// Indices of the greedy maximal subset with pairwise distances > epsilon, in input order.
std::vector<std::size_t> greedy_separated_indices(const SpaceDescriptor& space, std::span<const Point> points,
                                                  double epsilon);

struct NetCertificate {
    double epsilon = 0.0;  // separation: pairwise distances > epsilon
    double C = 0.0;        // density: every window point within C of the net
    DiscreteSample net;

    /// Recomputes separation and density against `window`.
    bool verify(const DiscreteSample& window) const;
};

NetCertificate greedy_net(const DiscreteSample& window, double epsilon);

/// max over gamma of #(closed B(gamma, R) n sample).
std::size_t bounded_geometry_profile(const DiscreteSample& gamma, double R);

/**
 * Sample of the closed ball B(x, R): a coordinate grid of spacing `resolution`
 * in every component the ball reaches, sorted lexicographically (component,
 * then coordinates).
 */
std::vector<Point> ball_grid(const SpaceDescriptor& space, const Point& x, double R, double resolution);

struct PackingEstimate {
    std::size_t count = 0;
    std::vector<Point> centers;
    double resolution = 0.0;
};

/**
 * Greedy maximal epsilon-separated subset of the grid sample of B(x, R) in
 * lexicographic order. A lower bound for the packing supremum. Resolution
 * defaults to epsilon / 10 when `resolution <= 0`.
 */
PackingEstimate packing_number(const SpaceDescriptor& space, const Point& x, double R, double epsilon,
                               double resolution = 0.0);

struct CoveringCertificate {
    std::size_t count = 0;
    std::vector<Point> centers;
    double resolution = 0.0;
    /// Radius that covers the continuous ball: epsilon plus the grid's covering gap.
    double continuous_radius = 0.0;
};

/**
 * Covering certificate for the grid sample of B(x, R): the smallest of the
 * greedy set cover by closed epsilon-balls (samples up to a few thousand
 * points), the greedy net grown outward from x and the lexicographic greedy
 * net. Every sample point is within epsilon of a center.
 */
CoveringCertificate covering_number(const SpaceDescriptor& space, const Point& x, double R, double epsilon,
                                    double resolution = 0.0);

/// Points of (k Z)^n n closed B(0, R) inside block n of X_p.
DiscreteSample gamma_k(double p, int k, int n, double R);

struct GrowthRow {
    int n = 0;
    std::size_t count = 0;
};

std::vector<GrowthRow> gamma_k_growth(double p, int k, double R, int max_n);
std::string growth_table_csv(const std::vector<GrowthRow>& rows);

}  // namespace busecoarse
