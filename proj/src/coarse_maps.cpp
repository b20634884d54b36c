#include "busecoarse/coarse_maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "busecoarse/busemann.hpp"
#include "busecoarse/errors.hpp"

namespace busecoarse {

SampledMap SampledMap::from_points(SpaceDescriptor domain_space, std::vector<Point> domain, SpaceDescriptor target,
                                   std::vector<Point> values) {
    if (domain.size() != values.size()) throw PreconditionError("domain and value samples differ in length");
    for (const auto& y : domain) validate(domain_space, y);
    for (const auto& x : values) validate(target, x);
    SampledMap f;
    f.domain_space = std::move(domain_space);
    f.domain = std::move(domain);
    f.target = std::move(target);
    f.values = std::move(values);
    return f;
}

CoarsenessProfile coarseness_profile(SampledMap& f, const std::vector<double>& radii, double tol) {
    if (f.values.empty()) throw PreconditionError("empty sample");
    if (f.domain.size() != f.values.size()) throw PreconditionError("domain and value samples differ in length");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw DomainError("radii must be > 0");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw DomainError("radii must be strictly increasing");
    }
    const std::size_t n = f.size();
    std::vector<double> dom(n * n), img(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            dom[i * n + j] = dom[j * n + i] = distance(f.domain_space, f.domain[i], f.domain[j]);
            img[i * n + j] = img[j * n + i] = distance(f.target, f.values[i], f.values[j]);
        }

    CoarsenessProfile prof;
    for (std::size_t j = 0; j < n; ++j) {
        prof.window_radius = std::max(prof.window_radius, dom[j]);
        prof.image_radius = std::max(prof.image_radius, img[j]);
    }
    for (double R : radii) {
        ProfileRow row{R, 0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (dom[i * n + j] < R) row.S = std::max(row.S, img[i * n + j]);
        for (std::size_t j = 0; j < n; ++j)
            if (img[j] <= R) row.preimage_bound = std::max(row.preimage_bound, dom[j]);
        prof.rows.push_back(row);
    }

    // The preimage of a ball strictly smaller than the image reaches the edge
    // of the window: nothing in the sample keeps that preimage bounded.
    for (std::size_t j = 0; j < n; ++j) {
        if (dom[j] < prof.window_radius - tol) continue;
        const bool collapsed = prof.window_radius > tol && prof.image_radius <= tol;
        if (collapsed || img[j] < prof.image_radius - tol) {
            if (!prof.witness || dom[j] > dom[*prof.witness]) prof.witness = j;
            prof.proper = false;
        }
    }
    std::vector<std::pair<double, double>> control;
    for (const auto& row : prof.rows) control.emplace_back(row.R, row.S);
    f.control = std::move(control);
    return prof;
}

ClosenessCertificate closeness(const SampledMap& f, const SampledMap& g) {
    if (f.size() != g.size() || !(f.domain_space == g.domain_space) || f.domain != g.domain)
        throw PreconditionError("maps are sampled on different domains");
    if (!(f.target == g.target)) throw PreconditionError("maps have different targets");
    ClosenessCertificate cert;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = distance(f.target, f.values[i], g.values[i]);
        if (d > cert.C) {
            cert.C = d;
            cert.attained_at = i;
        }
    }
    return cert;
}

bool ApproximationResult::within_bounds(double slack) const {
    return max_to_nearest_vertex < C + slack && max_to_f < 2.0 * C + slack;
}

namespace {

void check_vertex_map(const SimplicialComplex& complex, const SpaceDescriptor& target,
                      const std::vector<Point>& vertex_map) {
    if (vertex_map.size() != complex.vertex_count()) throw PreconditionError("vertex map must be total on vertices");
    for (const auto& x : vertex_map) validate(target, x);
}

Point approximate(const SpaceDescriptor& target, const std::vector<Point>& vertex_map, const BarycentricPoint& y) {
    std::vector<WeightedPoint> entries;
    for (std::size_t i = 0; i < y.simplex.size(); ++i) entries.push_back({vertex_map[y.simplex[i]], y.weights[i]});
    return barycenter(target, WeightedPoints(std::move(entries)));
}

}  // namespace

ApproximationResult continuous_approximation(const SimplicialComplex& complex, const SpaceDescriptor& target,
                                             const std::vector<Point>& vertex_map,
                                             const std::vector<BarycentricPoint>& eval_points) {
    check_vertex_map(complex, target, vertex_map);
    ApproximationResult res;
    for (const auto& y : eval_points) {
        validate(complex, y);
        for (std::size_t i = 0; i < y.simplex.size(); ++i)
            for (std::size_t j = i + 1; j < y.simplex.size(); ++j)
                res.C = std::max(res.C, distance(target, vertex_map[y.simplex[i]], vertex_map[y.simplex[j]]));
    }
    for (const auto& y : eval_points) {
        ApproximationPoint ap;
        ap.y = y;
        std::size_t best = 0;
        for (std::size_t i = 1; i < y.weights.size(); ++i)
            if (y.weights[i] > y.weights[best]) best = i;
        ap.dominant_vertex = y.simplex[best];
        try {
            ap.g = approximate(target, vertex_map, y);
        } catch (const UnsupportedConfigurationError& e) {
            ap.error = e.what();
            ++res.failures;
            res.points.push_back(std::move(ap));
            continue;
        }
        ap.to_f = distance(target, *ap.g, vertex_map[ap.dominant_vertex]);
        ap.to_nearest_vertex = std::numeric_limits<double>::infinity();
        for (std::size_t v : y.simplex)
            ap.to_nearest_vertex = std::min(ap.to_nearest_vertex, distance(target, *ap.g, vertex_map[v]));
        res.max_to_f = std::max(res.max_to_f, ap.to_f);
        res.max_to_nearest_vertex = std::max(res.max_to_nearest_vertex, ap.to_nearest_vertex);
        res.points.push_back(std::move(ap));
    }
    return res;
}

ContinuitySpotCheck continuity_spot_check(const SimplicialComplex& complex, const SpaceDescriptor& target,
                                          const std::vector<Point>& vertex_map, const BarycentricPoint& a,
                                          const BarycentricPoint& b, int steps) {
    if (steps < 1) throw DomainError("steps must be >= 1");
    check_vertex_map(complex, target, vertex_map);
    validate(complex, a);
    validate(complex, b);
    Simplex carrier = a.simplex;
    carrier.insert(carrier.end(), b.simplex.begin(), b.simplex.end());
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (!complex.contains(carrier)) throw PreconditionError("segment endpoints do not share a simplex");

    auto weight_in = [](const BarycentricPoint& y, std::size_t v) {
        for (std::size_t i = 0; i < y.simplex.size(); ++i)
            if (y.simplex[i] == v) return y.weights[i];
        return 0.0;
    };
    ContinuitySpotCheck out;
    out.steps = steps;
    std::optional<Point> previous;
    for (int k = 0; k <= steps; ++k) {
        const double s = static_cast<double>(k) / steps;
        BarycentricPoint y;
        double total = 0.0;
        for (std::size_t v : carrier) {
            const double w = (1.0 - s) * weight_in(a, v) + s * weight_in(b, v);
            if (w > 0.0) {
                y.simplex.push_back(v);
                y.weights.push_back(w);
                total += w;
            }
        }
        for (double& w : y.weights) w /= total;
        Point g = approximate(target, vertex_map, y);
        if (previous) out.max_jump = std::max(out.max_jump, distance(target, *previous, g));
        previous = std::move(g);
    }
    return out;
}

}  // namespace busecoarse
