#include "busecoarse/nets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <cstdint>
#include <sstream>

#include "busecoarse/errors.hpp"

namespace busecoarse {

DiscreteSample::DiscreteSample(SpaceDescriptor ambient, std::vector<Point> points)
    : ambient_(std::move(ambient)), points_(std::move(points)) {
    for (const auto& a : points_) validate(ambient_, a);
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (same_point(ambient_, points_[i], points_[j]))
                throw PreconditionError("sample points must be pairwise distinct");
}

std::vector<std::size_t> greedy_separated_indices(const SpaceDescriptor& space, std::span<const Point> points,
                                                  double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const bool separated = std::all_of(kept.begin(), kept.end(), [&](std::size_t j) {
            return distance(space, points[i], points[j]) > epsilon;
        });
        if (separated) kept.push_back(i);
    }
    return kept;
}

namespace {

double density_on(const SpaceDescriptor& space, std::span<const Point> window, std::span<const Point> net) {
    double worst = 0.0;
    for (const auto& w : window) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : net) best = std::min(best, distance(space, w, c));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

bool NetCertificate::verify(const DiscreteSample& window) const {
    const auto& pts = net.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!(distance(net.ambient(), pts[i], pts[j]) > epsilon)) return false;
    if (window.size() > 0 && pts.empty()) return false;
    return density_on(window.ambient(), window.points(), pts) <= C + 1e-12 * std::max(1.0, C);
}

NetCertificate greedy_net(const DiscreteSample& window, double epsilon) {
    std::vector<Point> chosen;
    for (std::size_t i : greedy_separated_indices(window.ambient(), window.points(), epsilon))
        chosen.push_back(window.points()[i]);
    const double C = density_on(window.ambient(), window.points(), chosen);
    return NetCertificate{epsilon, C, DiscreteSample(window.ambient(), std::move(chosen))};
}

std::size_t bounded_geometry_profile(const DiscreteSample& gamma, double R) {
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    const double bound = R * (1.0 + 1e-12);
    std::size_t best = 0;
    for (const auto& g : gamma.points()) {
        std::size_t count = 0;
        for (const auto& h : gamma.points())
            if (distance(gamma.ambient(), g, h) <= bound) ++count;
        best = std::max(best, count);
    }
    return best;
}

namespace {

constexpr std::size_t kGridLimit = 4'000'000;

double power_term(double x, double p) { return std::isinf(p) ? std::abs(x) : std::pow(std::abs(x), p); }

/**
 * Lexicographic enumeration of center + spacing * z, z integer, with
 * ||spacing * z||_p <= radius. Prunes on the partial sum, so the work is
 * proportional to the output.
 */
void lattice_ball(const std::vector<double>& center, double spacing, double radius, double p,
                  const std::function<void(std::vector<double>)>& emit) {
    const std::size_t n = center.size();
    const double slack = 1.0 + 1e-12;
    const double budget = std::isinf(p) ? radius * slack : std::pow(radius, p) * slack;
    const long K = static_cast<long>(std::floor(radius / spacing * slack));
    std::vector<double> x(n);
    std::size_t emitted = 0;
    std::function<void(std::size_t, double)> rec = [&](std::size_t i, double used) {
        if (i == n) {
            if (++emitted > kGridLimit) throw PreconditionError("grid sample too large; raise the resolution");
            emit(x);
            return;
        }
        for (long z = -K; z <= K; ++z) {
            const double offset = spacing * static_cast<double>(z);
            const double term = power_term(offset, p);
            const double next = std::isinf(p) ? std::max(used, term) : used + term;
            if (next > budget) continue;
            x[i] = center[i] + offset;
            rec(i + 1, next);
        }
    };
    rec(0, 0.0);
}

struct Anchor {
    double pos;
    double off;
};

Anchor anchor_of(const SpaceDescriptor& space, const Point& x) {
    if (x.is_ray()) return {x.ray, 0.0};
    return {static_cast<double>(x.block), lp_norm(x.coords, space.p())};
}

double resolve(double resolution, double epsilon) { return resolution > 0.0 ? resolution : epsilon / 10.0; }

constexpr std::size_t kSetCoverLimit = 6000;
constexpr int kSetCoverPasses = 24;

/**
 * Classic greedy set cover of the sample by closed epsilon-balls centred at
 * sample points: repeatedly take the center covering most uncovered points
 * (ties to the smaller index). Skipped on large samples, where the quadratic
 * neighbour table would dominate.
 */
std::optional<std::vector<Point>> greedy_set_cover(const SpaceDescriptor& space, const std::vector<Point>& pts,
                                                   double epsilon) {
    const std::size_t n = pts.size();
    if (n == 0 || n > kSetCoverLimit) return std::nullopt;
    std::vector<std::vector<std::uint32_t>> near(n);
    for (std::size_t i = 0; i < n; ++i) {
        near[i].push_back(static_cast<std::uint32_t>(i));
        for (std::size_t j = i + 1; j < n; ++j)
            if (distance(space, pts[i], pts[j]) <= epsilon) {
                near[i].push_back(static_cast<std::uint32_t>(j));
                near[j].push_back(static_cast<std::uint32_t>(i));
            }
    }
    // Several deterministic passes; pass 0 breaks ties by index, later passes
    // break them at random. The smallest pruned cover wins.
    std::mt19937_64 rng(0x5eedULL);
    std::vector<std::size_t> best_cover;
    for (int pass = 0; pass < kSetCoverPasses; ++pass) {
        std::vector<std::size_t> gain(n);
        for (std::size_t i = 0; i < n; ++i) gain[i] = near[i].size();
        std::vector<char> covered(n, 0);
        std::size_t remaining = n;
        std::vector<std::size_t> chosen;
        std::vector<std::size_t> ties;
        while (remaining > 0) {
            const std::size_t top = *std::max_element(gain.begin(), gain.end());
            ties.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (gain[i] == top) ties.push_back(i);
            const std::size_t pick = pass == 0 ? ties.front() : ties[rng() % ties.size()];
            chosen.push_back(pick);
            for (std::uint32_t q : near[pick]) {
                if (covered[q]) continue;
                covered[q] = 1;
                --remaining;
                for (std::uint32_t c : near[q]) --gain[c];
            }
        }
        // Drop centers whose points are all covered by the others, latest first.
        std::vector<std::size_t> multiplicity(n, 0);
        for (std::size_t c : chosen)
            for (std::uint32_t q : near[c]) ++multiplicity[q];
        std::vector<std::size_t> kept;
        for (std::size_t k = chosen.size(); k-- > 0;) {
            const auto& ball = near[chosen[k]];
            if (std::all_of(ball.begin(), ball.end(), [&](std::uint32_t q) { return multiplicity[q] > 1; })) {
                for (std::uint32_t q : ball) --multiplicity[q];
            } else {
                kept.push_back(chosen[k]);
            }
        }
        if (best_cover.empty() || kept.size() < best_cover.size()) best_cover = std::move(kept);
    }
    std::sort(best_cover.begin(), best_cover.end());
    std::vector<Point> centers;
    for (std::size_t i : best_cover) centers.push_back(pts[i]);
    return centers;
}

}  // namespace

std::vector<Point> ball_grid(const SpaceDescriptor& space, const Point& x, double R, double resolution) {
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    if (!(resolution > 0.0)) throw DomainError("grid resolution must be > 0");
    const Point c = canonical(space, x);
    std::vector<Point> out;

    auto ray_segment = [&](double pos, double reach) {
        const long K = static_cast<long>(std::floor(reach / resolution * (1.0 + 1e-12)));
        for (long z = -K; z <= K; ++z) {
            const double s = pos + resolution * static_cast<double>(z);
            if (s >= 0.0) out.push_back(Point::on_ray(s));
        }
    };

    switch (space.kind()) {
        case SpaceKind::HalfLine:
            ray_segment(c.ray, R);
            break;
        case SpaceKind::Lp:
            lattice_ball(c.coords, resolution, R, space.p(),
                         [&](std::vector<double> v) { out.push_back(Point::lp(std::move(v))); });
            break;
        case SpaceKind::GluedXp: {
            const Anchor a = anchor_of(space, c);
            if (R >= a.off) ray_segment(a.pos, R - a.off);
            const int first = std::max(1, static_cast<int>(std::ceil(a.pos - (R - a.off))));
            const int last = static_cast<int>(std::floor(a.pos + (R - a.off)));
            for (int n = first; n <= last; ++n) {
                if (!c.is_ray() && n == c.block) continue;
                const double reach = R - a.off - std::abs(a.pos - n);
                if (reach <= 0.0) continue;
                lattice_ball(std::vector<double>(static_cast<std::size_t>(n), 0.0), resolution, reach, space.p(),
                             [&](std::vector<double> v) {
                                 if (lp_norm(v, space.p()) > 0.0) out.push_back(Point::in_block(n, std::move(v)));
                             });
            }
            if (!c.is_ray()) {
                lattice_ball(c.coords, resolution, R, space.p(), [&](std::vector<double> v) {
                    Point b = Point::in_block(c.block, std::move(v));
                    if (lp_norm(b.coords, space.p()) > 0.0) out.push_back(std::move(b));
                });
            }
            // Component order: the ray, then blocks by index; lexicographic inside.
            std::stable_sort(out.begin(), out.end(), [](const Point& u, const Point& v) {
                const int cu = u.is_ray() ? 0 : u.block;
                const int cv = v.is_ray() ? 0 : v.block;
                if (cu != cv) return cu < cv;
                if (u.is_ray()) return u.ray < v.ray;
                return u.coords < v.coords;
            });
            break;
        }
    }
    if (out.size() > kGridLimit) throw PreconditionError("grid sample too large; raise the resolution");
    return out;
}

PackingEstimate packing_number(const SpaceDescriptor& space, const Point& x, double R, double epsilon,
                               double resolution) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
    PackingEstimate est;
    est.resolution = resolve(resolution, epsilon);
    const auto grid = ball_grid(space, x, R, est.resolution);
    for (std::size_t i : greedy_separated_indices(space, grid, epsilon)) est.centers.push_back(grid[i]);
    est.count = est.centers.size();
    return est;
}

CoveringCertificate covering_number(const SpaceDescriptor& space, const Point& x, double R, double epsilon,
                                    double resolution) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
    CoveringCertificate cert;
    cert.resolution = resolve(resolution, epsilon);
    const auto grid = ball_grid(space, x, R, cert.resolution);
    const Point c = canonical(space, x);

    // Net grown outward from x.
    std::vector<Point> outward(grid);
    outward.insert(outward.begin(), c);
    std::stable_sort(outward.begin() + 1, outward.end(), [&](const Point& u, const Point& v) {
        return distance(space, c, u) < distance(space, c, v);
    });
    std::vector<Point> from_center;
    for (std::size_t i : greedy_separated_indices(space, outward, epsilon)) from_center.push_back(outward[i]);

    std::vector<Point> lexicographic;
    for (std::size_t i : greedy_separated_indices(space, grid, epsilon)) lexicographic.push_back(grid[i]);

    cert.centers = lexicographic.size() < from_center.size() ? std::move(lexicographic) : std::move(from_center);
    if (auto cover = greedy_set_cover(space, grid, epsilon); cover && cover->size() < cert.centers.size())
        cert.centers = std::move(*cover);
    cert.count = cert.centers.size();

    int top_dim = 1;
    if (space.kind() == SpaceKind::Lp) top_dim = space.dim();
    for (const auto& g : grid)
        if (!g.is_ray()) top_dim = std::max(top_dim, static_cast<int>(g.coords.size()));
    const double gap = std::isinf(space.p()) || space.kind() == SpaceKind::HalfLine
                           ? cert.resolution
                           : cert.resolution * std::pow(static_cast<double>(top_dim), 1.0 / space.p());
    cert.continuous_radius = epsilon + gap;
    return cert;
}

DiscreteSample gamma_k(double p, int k, int n, double R) {
    if (k < 1 || n < 1) throw DomainError("k and n must be >= 1");
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    const SpaceDescriptor xp = SpaceDescriptor::glued_xp(p);
    std::vector<Point> pts;
    lattice_ball(std::vector<double>(static_cast<std::size_t>(n), 0.0), static_cast<double>(k), R, p,
                 [&](std::vector<double> v) { pts.push_back(canonical(xp, Point::in_block(n, std::move(v)))); });
    return DiscreteSample(xp, std::move(pts));
}

std::vector<GrowthRow> gamma_k_growth(double p, int k, double R, int max_n) {
    if (max_n < 1) throw DomainError("max_n must be >= 1");
    std::vector<GrowthRow> rows;
    for (int n = 1; n <= max_n; ++n) rows.push_back({n, gamma_k(p, k, n, R).size()});
    return rows;
}

std::string growth_table_csv(const std::vector<GrowthRow>& rows) {
    std::ostringstream os;
    os << "n,count\n";
    for (const auto& r : rows) os << r.n << ',' << r.count << '\n';
    return os.str();
}

}  // namespace busecoarse
