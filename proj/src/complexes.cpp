#include "busecoarse/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <sstream>

#include "busecoarse/errors.hpp"
#include "busecoarse/nets.hpp"

namespace busecoarse {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (labels_.empty()) {
        for (std::size_t v = 0; v < vertex_count_; ++v) labels_.push_back(std::to_string(v));
    }
    if (labels_.size() != vertex_count_) throw PreconditionError("one label per vertex is required");
    for (std::size_t v = 0; v < vertex_count_; ++v) simplices_.insert(Simplex{v});
    if (vertex_count_ > 0) max_dim_ = 0;
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, const std::vector<Simplex>& generators,
                                                    std::vector<std::string> labels) {
    SimplicialComplex k(vertex_count, std::move(labels));
    for (const auto& s : generators) k.add_simplex(s);
    return k;
}

void SimplicialComplex::add_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw PreconditionError("repeated vertex in simplex");
    if (s.empty()) return;
    if (s.back() >= vertex_count_) throw PreconditionError("simplex vertex out of range");
    if (s.size() > 24) throw PreconditionError("simplex dimension too large to close under faces");
    if (simplices_.count(s)) return;
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        simplices_.insert(std::move(face));
    }
    max_dim_ = std::max(max_dim_, static_cast<int>(n) - 1);
}

bool SimplicialComplex::contains(Simplex s) const {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return simplices_.count(s) > 0;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::set<Simplex> covered;
    for (const auto& s : simplices_) {
        if (s.size() < 2) continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex facet;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip) facet.push_back(s[i]);
            covered.insert(std::move(facet));
        }
    }
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (!covered.count(s)) out.push_back(s);
    return out;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertex_count_);
    for (const auto& s : simplices_) {
        if (s.size() != 2) continue;
        adj[s[0]].push_back(s[1]);
        adj[s[1]].push_back(s[0]);
    }
    return adj;
}

std::vector<std::size_t> SimplicialComplex::graph_distances(std::size_t from) const {
    constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(vertex_count_, kUnreached);
    if (from >= vertex_count_) throw PreconditionError("vertex out of range");
    const auto adj = adjacency();
    std::queue<std::size_t> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v : adj[u]) {
            if (dist[v] != kUnreached) continue;
            dist[v] = dist[u] + 1;
            q.push(v);
        }
    }
    return dist;
}

bool SimplicialComplex::is_connected() const {
    if (vertex_count_ == 0) return true;
    const auto d = graph_distances(0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == std::numeric_limits<std::size_t>::max(); });
}

BarycentricPoint BarycentricPoint::vertex(std::size_t v) { return BarycentricPoint{{v}, {1.0}}; }

void validate(const SimplicialComplex& complex, const BarycentricPoint& y) {
    if (y.simplex.empty() || y.simplex.size() != y.weights.size())
        throw PreconditionError("barycentric point needs one weight per carrier vertex");
    if (!std::is_sorted(y.simplex.begin(), y.simplex.end()) ||
        std::adjacent_find(y.simplex.begin(), y.simplex.end()) != y.simplex.end())
        throw PreconditionError("barycentric carrier must be sorted without repeats");
    double total = 0.0;
    for (double w : y.weights) {
        if (!(w > 0.0 && w <= 1.0)) throw DomainError("barycentric weights must lie in (0,1]");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("barycentric weights must sum to 1");
    if (!complex.contains(y.simplex)) throw PreconditionError("carrier simplex is not in the complex");
}

bool Cover::member_contains(std::size_t i, const Point& x) const {
    return distance(space, members.at(i).center, x) < members[i].radius;
}

namespace {

bool is_one_dimensional(const SpaceDescriptor& space) {
    return space.kind() == SpaceKind::HalfLine || (space.kind() == SpaceKind::Lp && space.dim() == 1);
}

double line_coordinate(const Point& a) { return a.is_ray() ? a.ray : a.coords.front(); }

// Open intervals on a line: membership is constant between consecutive
// endpoints, so probing 0 and every gap midpoint finds every nonempty intersection.
std::vector<Point> interval_probes(const Cover& cover) {
    const bool half_line = cover.space.kind() == SpaceKind::HalfLine;
    std::vector<double> ends;
    for (const auto& b : cover.members) {
        const double c = line_coordinate(b.center);
        for (double e : {c - b.radius, c + b.radius})
            if (!half_line || e >= 0.0) ends.push_back(e);
    }
    if (half_line) ends.push_back(0.0);
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<double> probes;
    if (half_line) probes.push_back(0.0);
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) probes.push_back(0.5 * (ends[i] + ends[i + 1]));
    std::vector<Point> out;
    for (double x : probes) out.push_back(half_line ? Point::on_ray(x) : Point::lp({x}));
    return out;
}

void add_members_at(const Cover& cover, const Point& x, SimplicialComplex& k) {
    Simplex s;
    for (std::size_t i = 0; i < cover.members.size(); ++i)
        if (cover.member_contains(i, x)) s.push_back(i);
    if (!s.empty()) k.add_simplex(std::move(s));
}

}  // namespace

SimplicialComplex nerve(const Cover& cover, std::span<const Point> window) {
    for (const auto& b : cover.members) {
        validate(cover.space, b.center);
        if (!(b.radius > 0.0)) throw DomainError("cover radii must be > 0");
    }
    SimplicialComplex k(cover.members.size());
    for (const auto& x : window) {
        bool covered = false;
        for (std::size_t i = 0; i < cover.members.size() && !covered; ++i) covered = cover.member_contains(i, x);
        if (!covered) throw CoverageError("window point is not covered by any member");
        add_members_at(cover, x, k);
    }
    for (std::size_t i = 0; i < cover.members.size(); ++i)
        for (std::size_t j = i + 1; j < cover.members.size(); ++j)
            if (distance(cover.space, cover.members[i].center, cover.members[j].center) <
                cover.members[i].radius + cover.members[j].radius)
                k.add_simplex({i, j});
    if (is_one_dimensional(cover.space)) {
        for (const auto& x : interval_probes(cover)) add_members_at(cover, x, k);
    }
    return k;
}

namespace {

// Point of |Y| on the unit sphere: support vertices with sqrt-weights.
struct SphereNode {
    std::vector<std::size_t> support;
    std::vector<double> u;
};

SphereNode embed(const BarycentricPoint& y) {
    SphereNode n{y.simplex, {}};
    for (double w : y.weights) n.u.push_back(std::sqrt(w));
    return n;
}

// Great-circle angle, computed from the chord to stay accurate for close points.
double angle_between(const SphereNode& a, const SphereNode& b) {
    double chord2 = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.support.size() || j < b.support.size()) {
        if (j == b.support.size() || (i < a.support.size() && a.support[i] < b.support[j])) {
            chord2 += a.u[i] * a.u[i];
            ++i;
        } else if (i == a.support.size() || b.support[j] < a.support[i]) {
            chord2 += b.u[j] * b.u[j];
            ++j;
        } else {
            const double d = a.u[i] - b.u[j];
            chord2 += d * d;
            ++i;
            ++j;
        }
    }
    return 2.0 * std::asin(std::min(1.0, std::sqrt(chord2) / 2.0));
}

bool carried_by(const std::vector<std::size_t>& support, const Simplex& sigma) {
    return std::includes(sigma.begin(), sigma.end(), support.begin(), support.end());
}

// All compositions of m into `parts` non-negative integers.
void compositions(int m, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(m);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= m; ++a) {
        cur.push_back(a);
        compositions(m - a, parts, cur, out);
        cur.pop_back();
    }
}

}  // namespace

double spherical_distance(const SimplicialComplex& complex, const BarycentricPoint& y1, const BarycentricPoint& y2,
                          int subdivision) {
    if (subdivision < 1) throw DomainError("subdivision must be >= 1");
    validate(complex, y1);
    validate(complex, y2);
    if (y1 == y2) return 0.0;

    const std::vector<Simplex> maximal = complex.maximal_simplices();
    std::vector<SphereNode> nodes{embed(y1), embed(y2)};
    std::map<std::vector<std::pair<std::size_t, int>>, std::size_t> registry;
    std::vector<std::vector<std::size_t>> on_simplex(maximal.size());

    for (std::size_t s = 0; s < maximal.size(); ++s) {
        const Simplex& sigma = maximal[s];
        for (std::size_t q = 0; q < 2; ++q)
            if (carried_by(nodes[q].support, sigma)) on_simplex[s].push_back(q);
        std::vector<std::vector<int>> grid;
        std::vector<int> cur;
        compositions(subdivision, sigma.size(), cur, grid);
        for (const auto& c : grid) {
            // Interior grid points never lie on a face shared with another simplex.
            if (sigma.size() > 1 && std::find(c.begin(), c.end(), 0) == c.end()) continue;
            std::vector<std::pair<std::size_t, int>> key;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i] > 0) key.emplace_back(sigma[i], c[i]);
            auto [it, inserted] = registry.emplace(key, nodes.size());
            if (inserted) {
                SphereNode n;
                for (const auto& [v, a] : key) {
                    n.support.push_back(v);
                    n.u.push_back(std::sqrt(static_cast<double>(a) / subdivision));
                }
                nodes.push_back(std::move(n));
            }
            on_simplex[s].push_back(it->second);
        }
    }

    std::vector<std::vector<std::size_t>> simplices_of(nodes.size());
    for (std::size_t s = 0; s < maximal.size(); ++s)
        for (std::size_t n : on_simplex[s]) simplices_of[n].push_back(s);

    std::vector<double> dist(nodes.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[0] = 0.0;
    pq.emplace(0.0, 0);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        if (u == 1) return d;
        for (std::size_t s : simplices_of[u])
            for (std::size_t v : on_simplex[s]) {
                if (v == u) continue;
                const double nd = d + angle_between(nodes[u], nodes[v]);
                if (nd < dist[v]) {
                    dist[v] = nd;
                    pq.emplace(nd, v);
                }
            }
    }
    throw UnreachableError("the two points lie in different components of the complex");
}

BarycentricPoint nerve_map(const Cover& cover, const Point& x) {
    BarycentricPoint y;
    double total = 0.0;
    for (std::size_t i = 0; i < cover.members.size(); ++i) {
        const double w = cover.members[i].radius - distance(cover.space, cover.members[i].center, x);
        if (w > 0.0) {
            y.simplex.push_back(i);
            y.weights.push_back(w);
            total += w;
        }
    }
    if (y.simplex.empty()) throw CoverageError("point is not covered by any member");
    for (double& w : y.weights) w /= total;
    return y;
}

std::size_t nerve_vertex(const Cover& cover, const Point& x) {
    for (std::size_t i = 0; i < cover.members.size(); ++i)
        if (cover.member_contains(i, x)) return i;
    throw CoverageError("point is not covered by any member");
}

namespace {

Simplex image_of(const Simplex& s, const VertexMap& f) {
    Simplex img;
    for (std::size_t v : s) img.push_back(f[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

void check_vertex_map(const SimplicialComplex& domain, const SimplicialComplex& target, const VertexMap& f) {
    if (f.size() != domain.vertex_count()) throw PreconditionError("vertex map size does not match the domain");
    for (std::size_t v : f)
        if (v >= target.vertex_count()) throw PreconditionError("vertex map leaves the target complex");
}

}  // namespace

std::optional<Simplex> non_simplicial_witness(const SimplicialComplex& domain, const SimplicialComplex& target,
                                              const VertexMap& f) {
    check_vertex_map(domain, target, f);
    for (const auto& s : domain.maximal_simplices())
        if (!target.contains(image_of(s, f))) return s;
    return std::nullopt;
}

ContiguityResult is_contiguous(const SimplicialComplex& domain, const SimplicialComplex& target, const VertexMap& f,
                               const VertexMap& g) {
    if (non_simplicial_witness(domain, target, f)) throw PreconditionError("first map is not simplicial");
    if (non_simplicial_witness(domain, target, g)) throw PreconditionError("second map is not simplicial");
    for (const auto& s : domain.maximal_simplices()) {
        Simplex joint = image_of(s, f);
        const Simplex other = image_of(s, g);
        joint.insert(joint.end(), other.begin(), other.end());
        if (!target.contains(joint)) return {false, s};
    }
    return {true, std::nullopt};
}

std::vector<AntiCechLevel> anti_cech(const SpaceDescriptor& space, std::span<const Point> window, double base_radius,
                                     int levels) {
    if (!(base_radius > 0.0)) throw DomainError("base radius must be > 0");
    if (levels < 2) throw DomainError("an anti-Cech ladder needs at least 2 levels");
    if (window.empty()) throw PreconditionError("window sample is empty");

    std::vector<AntiCechLevel> ladder(static_cast<std::size_t>(levels));
    double radius = base_radius;
    for (auto& level : ladder) {
        level.radius = radius;
        level.net_separation = 2.0 * radius / 3.0;
        level.cover.space = space;
        for (std::size_t idx : greedy_separated_indices(space, window, level.net_separation))
            level.cover.members.push_back({canonical(space, window[idx]), radius});
        level.nerve = nerve(level.cover, window);
        radius *= 3.0;
    }

    for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
        AntiCechLevel& here = ladder[i];
        const AntiCechLevel& next = ladder[i + 1];
        const double room = next.radius - here.radius;
        for (std::size_t m = 0; m < here.cover.members.size(); ++m) {
            const Point& c = here.cover.members[m].center;
            bool found = false;
            for (std::size_t n = 0; n < next.cover.members.size() && !found; ++n) {
                const double d = distance(space, c, next.cover.members[n].center);
                if (d <= room * (1.0 + 1e-12)) {
                    here.coarsening.push_back(n);
                    here.containment.push_back({m, n, room - d});
                    found = true;
                }
            }
            if (!found) {
                std::ostringstream os;
                os << "member " << m << " of level " << i << " is contained in no member of level " << i + 1;
                throw InvariantViolation(os.str());
            }
        }
        here.coarsening_simplicial = !non_simplicial_witness(here.nerve, next.nerve, here.coarsening).has_value();
    }
    return ladder;
}

VertexMap compose_coarsening(const std::vector<AntiCechLevel>& ladder, std::size_t from, std::size_t to) {
    if (from > to || to >= ladder.size()) throw PreconditionError("invalid level range");
    VertexMap f(ladder[from].cover.members.size());
    for (std::size_t v = 0; v < f.size(); ++v) f[v] = v;
    for (std::size_t i = from; i < to; ++i)
        for (auto& v : f) v = ladder[i].coarsening[v];
    return f;
}

ContiguitySearch coarsening_contiguity(const std::vector<AntiCechLevel>& ladder, std::size_t level) {
    if (level >= ladder.size()) throw PreconditionError("level out of range");
    ContiguitySearch search;
    search.from_level = level;
    const AntiCechLevel& start = ladder[level];
    for (std::size_t k = level; k < ladder.size(); ++k) {
        ContiguityStep step;
        step.level = k;
        const VertexMap to_k = compose_coarsening(ladder, 0, k);
        VertexMap round_trip;
        for (const auto& member : start.cover.members)
            round_trip.push_back(to_k[nerve_vertex(ladder[0].cover, member.center)]);
        const VertexMap ladder_map = compose_coarsening(ladder, level, k);

        const auto bad_round_trip = non_simplicial_witness(start.nerve, ladder[k].nerve, round_trip);
        const auto bad_ladder = non_simplicial_witness(start.nerve, ladder[k].nerve, ladder_map);
        step.round_trip_simplicial = !bad_round_trip;
        if (bad_round_trip || bad_ladder) {
            step.witness = bad_round_trip ? bad_round_trip : bad_ladder;
        } else {
            const ContiguityResult r = is_contiguous(start.nerve, ladder[k].nerve, round_trip, ladder_map);
            step.contiguous = r.contiguous;
            step.witness = r.witness;
        }
        search.steps.push_back(step);
        if (step.contiguous) {
            search.first_contiguous_level = k;
            break;
        }
    }
    return search;
}

}  // namespace busecoarse
