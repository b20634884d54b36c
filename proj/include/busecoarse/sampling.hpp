#pragma once

#include <cstdint>
#include <random>

#include "busecoarse/boundary.hpp"
#include "busecoarse/metric_space.hpp"

namespace busecoarse {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

/// Random unit vector of l_p(n) (normalised Gaussian direction).
std::vector<double> random_unit_vector(Rng& rng, int n, double p);

/**
 * Random point of the closed ball B(center, radius). Not uniform in measure,
 * but every region of the ball has positive probability. For X_p the component
 * (ray segment or block) is chosen uniformly among those the ball reaches.
 */
Point sample_ball(const SpaceDescriptor& space, const Point& center, double radius, Rng& rng);

/**
 * Random ideal point. For X_p the block index is uniform in 1..max_block, and
 * the ray end is drawn with probability 1/(max_block + 1).
 */
BoundaryPoint random_boundary_point(const SpaceDescriptor& space, Rng& rng, int max_block = 8);

/// Random point at distance exactly `radius` from `o`, found along a random geodesic ray.
Point sample_sphere(const SpaceDescriptor& space, const Point& o, double radius, Rng& rng,
                    int max_block = 8);

}  // namespace busecoarse
