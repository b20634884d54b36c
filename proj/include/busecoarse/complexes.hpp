#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "busecoarse/metric_space.hpp"

namespace busecoarse {

/// Sorted list of vertex indices.
using Simplex = std::vector<std::size_t>;

/// Finite simplicial complex stored as the set of all its simplices (closed under faces).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::size_t vertex_count, std::vector<std::string> labels = {});

    /// Complex generated by `generators` and all their faces, plus every vertex.
    static SimplicialComplex from_simplices(std::size_t vertex_count, const std::vector<Simplex>& generators,
                                            std::vector<std::string> labels = {});

    /// Inserts `s` (any order, no duplicates) together with all of its faces.
    void add_simplex(Simplex s);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::set<Simplex>& simplices() const noexcept { return simplices_; }
    bool contains(Simplex s) const;
    int max_dim() const noexcept { return max_dim_; }

    std::vector<Simplex> maximal_simplices() const;
    std::vector<std::vector<std::size_t>> adjacency() const;
    /// Edge-count distances from `from`; unreachable vertices get SIZE_MAX.
    std::vector<std::size_t> graph_distances(std::size_t from) const;
    bool is_connected() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::string> labels_;
    std::set<Simplex> simplices_;
    int max_dim_ = -1;
};

/// Point of |Y| given by a carrier simplex and positive weights summing to 1.
struct BarycentricPoint {
    Simplex simplex;
    std::vector<double> weights;

    static BarycentricPoint vertex(std::size_t v);

    friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;
};

/// Checks weights in (0,1], sum 1 within 1e-12, carrier present in `complex`.
void validate(const SimplicialComplex& complex, const BarycentricPoint& y);

/// Open ball {x : d(x, center) < radius}.
struct Ball {
    Point center;
    double radius = 0.0;
};

struct Cover {
    SpaceDescriptor space = SpaceDescriptor::half_line();
    std::vector<Ball> members;

    bool member_contains(std::size_t i, const Point& x) const;
};

/**
 * Nerve of a ball cover over a finite window.
 *
 * A set of members spans a simplex when some window point lies in all of them,
 * or when it is a pair of balls with d(c1, c2) < r1 + r2 (open balls in a
 * geodesic space). On one-dimensional spaces (the half-line, l_p(1)) the nerve
 * is exact: a family of intervals intersects as soon as it intersects pairwise.
 * Throws CoverageError if a window point is not covered.
 */
SimplicialComplex nerve(const Cover& cover, std::span<const Point> window);

/**
 * Spherical path distance between two points of |Y|, with each simplex embedded
 * in the unit sphere through u_i = sqrt(t_i). Inside a simplex the embedded
 * image is geodesically convex, so distances there are great-circle angles;
 * paths between simplices cross shared faces at points of the
 * `subdivision`-regular grid on those faces. Edges of the 1-skeleton get
 * length pi/2 exactly. Throws UnreachableError across components.
 */
double spherical_distance(const SimplicialComplex& complex, const BarycentricPoint& y1,
                          const BarycentricPoint& y2, int subdivision);

/// Tent-function partition of unity: weights proportional to max(0, r - d(x, c)).
BarycentricPoint nerve_map(const Cover& cover, const Point& x);

/// Smallest-index member containing x. Throws CoverageError if none does.
std::size_t nerve_vertex(const Cover& cover, const Point& x);

/// Vertex map between complexes, indexed by domain vertex.
using VertexMap = std::vector<std::size_t>;

/// First simplex whose image is not a simplex of `target`, if any.
std::optional<Simplex> non_simplicial_witness(const SimplicialComplex& domain, const SimplicialComplex& target,
                                              const VertexMap& f);

struct ContiguityResult {
    bool contiguous = true;
    std::optional<Simplex> witness;
};

/**
 * f and g are contiguous when f(s) u g(s) spans a simplex of `target` for every
 * simplex s of `domain`. Throws PreconditionError if either map is not simplicial.
 */
ContiguityResult is_contiguous(const SimplicialComplex& domain, const SimplicialComplex& target,
                               const VertexMap& f, const VertexMap& g);

struct ContainmentWitness {
    std::size_t member = 0;
    std::size_t container = 0;
    double slack = 0.0;  // R_{i+1} - R_i - d(c, c')
};

struct AntiCechLevel {
    double radius = 0.0;
    double net_separation = 0.0;
    Cover cover;
    SimplicialComplex nerve;
    /// Vertex map to the next level; empty on the last level.
    VertexMap coarsening;
    std::vector<ContainmentWitness> containment;
    bool coarsening_simplicial = true;
};

/**
 * Ladder of ball covers with radii R_i = base_radius * 3^i (i = 0..levels-1)
 * centred on greedy (2/3) R_i-separated nets of the window. Each ball of level
 * i sits inside a ball of level i + 1 (d(c, c') + R_i <= R_{i+1}); the
 * coarsening map sends it to the smallest-index such ball.
 */
std::vector<AntiCechLevel> anti_cech(const SpaceDescriptor& space, std::span<const Point> window,
                                     double base_radius, int levels);

/// Composite of the coarsening maps from level `from` to level `to` (from <= to).
VertexMap compose_coarsening(const std::vector<AntiCechLevel>& ladder, std::size_t from, std::size_t to);

struct ContiguityStep {
    std::size_t level = 0;
    bool round_trip_simplicial = false;
    bool contiguous = false;
    std::optional<Simplex> witness;
};

struct ContiguitySearch {
    std::size_t from_level = 0;
    std::optional<std::size_t> first_contiguous_level;
    std::vector<ContiguityStep> steps;
};

/**
 * Round trip through the space versus the coarsening ladder. The vertex map
 * U -> phi_{0..k}(nerve_vertex(cover_0, center(U))) and phi_{i..k} are compared
 * on nerve_i for k = i, i+1, ..., stopping at the first level where they are
 * contiguous.
 */
ContiguitySearch coarsening_contiguity(const std::vector<AntiCechLevel>& ladder, std::size_t level);

}  // namespace busecoarse
