#include "busecoarse/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "busecoarse/boundary.hpp"
#include "busecoarse/busemann.hpp"
#include "busecoarse/coarse_maps.hpp"
#include "busecoarse/complexes.hpp"
#include "busecoarse/errors.hpp"
#include "busecoarse/higson.hpp"
#include "busecoarse/k_invariants.hpp"
#include "busecoarse/nets.hpp"
#include "busecoarse/sampling.hpp"

namespace busecoarse::cli {

using io::Json;
using io::number;
using io::to_json;

namespace {

const std::map<std::string, std::vector<std::string>>& schema() {
    static const std::map<std::string, std::vector<std::string>> table{
        {"busemann-check", {"samples", "radius", "within_blocks", "include_staircase_geodesics", "quadruple"}},
        {"barycenter", {"points", "gradient_tolerance", "max_iterations"}},
        {"project", {"o", "t", "s", "z"}},
        {"contraction", {"o", "z", "s", "a", "b", "t"}},
        {"higson-certify",
         {"o", "t", "epsilon", "R", "functions", "probe", "shells", "directions", "modulus_samples", "max_block"}},
        {"coarse-profile", {"domain", "values", "map", "target", "radii"}},
        {"approx-map", {"complex", "vertex_map", "eval", "random_eval", "continuity_steps"}},
        {"nerve", {"cover", "window", "window_grid"}},
        {"anti-cech", {"window", "window_grid", "base_radius", "levels", "contiguity_level"}},
        {"spherical-dist", {"complex", "y1", "y2", "subdivision"}},
        {"contiguity", {"domain", "target", "f", "g"}},
        {"net", {"window", "window_grid", "epsilon"}},
        {"bg-profile", {"points", "R"}},
        {"packing", {"x", "R", "epsilon", "resolution"}},
        {"covering", {"x", "R", "epsilon", "resolution"}},
        {"gamma-k", {"p", "k", "n", "max_n", "R"}},
        {"kinv", {"q", "m", "truncate"}},
    };
    return table;
}

/// Typed read access to the parameter object.
class Params {
public:
    explicit Params(const Json& j) : j_(j) {}

    bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

    const Json& at(const char* key) const {
        if (!has(key)) throw UsageError(std::string("missing parameter '") + key + "'");
        return j_.at(key);
    }

    double real(const char* key) const {
        const Json& v = at(key);
        if (!v.is_number()) throw UsageError(std::string("parameter '") + key + "' must be a number");
        return v.get<double>();
    }
    double real(const char* key, double fallback) const { return has(key) ? real(key) : fallback; }

    long integer(const char* key) const {
        const Json& v = at(key);
        if (!v.is_number_integer()) throw UsageError(std::string("parameter '") + key + "' must be an integer");
        return v.get<long>();
    }
    long integer(const char* key, long fallback) const { return has(key) ? integer(key) : fallback; }

    std::size_t count(const char* key, std::size_t fallback) const {
        const long v = integer(key, static_cast<long>(fallback));
        if (v < 0) throw UsageError(std::string("parameter '") + key + "' must be >= 0");
        return static_cast<std::size_t>(v);
    }

    bool flag(const char* key, bool fallback) const {
        if (!has(key)) return fallback;
        const Json& v = at(key);
        if (!v.is_boolean()) throw UsageError(std::string("parameter '") + key + "' must be a boolean");
        return v.get<bool>();
    }

    std::string text(const char* key, const std::string& fallback) const {
        if (!has(key)) return fallback;
        const Json& v = at(key);
        if (!v.is_string()) throw UsageError(std::string("parameter '") + key + "' must be a string");
        return v.get<std::string>();
    }

private:
    const Json& j_;
};

struct Outcome {
    std::string verdict = "ok";  // ok | pass | fail | inconclusive
    Json result;
};

const SpaceDescriptor& need_space(const ExperimentConfig& c) {
    if (!c.space) throw UsageError("command '" + c.command + "' needs a space");
    return *c.space;
}

Point point_or_base(const SpaceDescriptor& space, const Params& p, const char* key) {
    return p.has(key) ? io::point_from_json(space, p.at(key)) : space.basepoint();
}

std::string verdict_of(Verdict v) { return to_string(v); }

std::vector<Point> window_from(const SpaceDescriptor& space, const Params& p) {
    if (p.has("window")) {
        const Json& w = p.at("window");
        return w.is_object() ? io::sample_from_json(space, w).points() : io::points_from_json(space, w);
    }
    if (p.has("window_grid")) {
        const Json& g = p.at("window_grid");
        const Params gp(g);
        const Point c = point_or_base(space, gp, "center");
        return ball_grid(space, c, gp.real("radius"), gp.real("spacing", 1.0));
    }
    throw UsageError("a 'window' or 'window_grid' parameter is required");
}

Json convexity_json(const ConvexityReport& r) {
    return {{"lhs", number(r.lhs)},     {"rhs", number(r.rhs)},   {"margin", number(r.margin)},
            {"satisfied", r.satisfied}, {"x_t", to_json(r.x_t)}, {"y_t", to_json(r.y_t)}};
}

// --- commands ---------------------------------------------------------------

Outcome busemann_check_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    Outcome out;
    if (p.flag("include_staircase_geodesics", false)) {
        const ConvexityReport r = l1_staircase_counterexample(space, c.tolerance);
        out.result = convexity_json(r);
        out.result["min_margin"] = number(r.margin);
        out.result["witness"] = {{"x0", to_json(Point::lp({0.0, 0.0}))},
                                 {"x1", to_json(Point::lp({1.0, 1.0}))},
                                 {"y0", to_json(Point::lp({0.0, 0.0}))},
                                 {"y1", to_json(Point::lp({1.0, 1.0}))},
                                 {"t", 0.5},
                                 {"x_geodesic", "affine"},
                                 {"y_geodesic", "staircase"}};
        out.verdict = r.satisfied ? "pass" : "fail";
        return out;
    }
    if (p.has("quadruple")) {
        const Params q(p.at("quadruple"));
        const ConvexityReport r =
            busemann_check(space, io::point_from_json(space, q.at("x0")), io::point_from_json(space, q.at("x1")),
                           io::point_from_json(space, q.at("y0")), io::point_from_json(space, q.at("y1")),
                           q.real("t"), c.tolerance);
        out.result = convexity_json(r);
        out.result["min_margin"] = number(r.margin);
        out.verdict = r.satisfied ? "pass" : "fail";
        return out;
    }
    const CheckReport r = busemann_sweep(space, p.count("samples", 1000), c.seed, p.real("radius", 10.0),
                                         p.flag("within_blocks", false), c.tolerance);
    out.result = to_json(r);
    out.result["min_margin"] = number(r.margin);
    out.verdict = verdict_of(r.verdict);
    return out;
}

Outcome barycenter_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    std::vector<WeightedPoint> entries;
    for (const auto& e : p.at("points")) {
        const Params ep(e);
        entries.push_back({io::point_from_json(space, ep.at("point")), ep.real("weight")});
    }
    BarycenterOptions opt;
    opt.gradient_tolerance = p.real("gradient_tolerance", opt.gradient_tolerance);
    opt.max_iterations = static_cast<int>(p.integer("max_iterations", opt.max_iterations));
    const BarycenterResult r = solve_barycenter(space, WeightedPoints(std::move(entries)), opt);
    return {"ok",
            {{"point", to_json(r.point)},
             {"objective", number(r.objective)},
             {"iterations", r.iterations},
             {"closed_form", r.closed_form},
             {"used_fallback", r.used_fallback}}};
}

Outcome project_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const Point o = point_or_base(space, p, "o");
    const double t = p.real("t");
    if (p.has("s")) {
        const Point a = io::point_from_json(space, p.at("z"));
        const Point img = project_between(space, o, p.real("s"), t, a, c.tolerance);
        return {"ok", {{"point", to_json(img)}, {"distance_to_o", number(distance(space, o, img))}}};
    }
    const CompactifiedPoint z = io::compactified_from_json(space, p.at("z"));
    const Point img = project(space, o, t, z);
    return {"ok", {{"point", to_json(img)}, {"distance_to_o", number(distance(space, o, img))}}};
}

Outcome contraction_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const Point o = point_or_base(space, p, "o");
    if (p.has("a") || p.has("b")) {
        const CheckReport r = busemann_contraction_bound(space, o, io::point_from_json(space, p.at("a")),
                                                         io::point_from_json(space, p.at("b")), p.real("t"),
                                                         c.tolerance);
        return {verdict_of(r.verdict), to_json(r)};
    }
    const double s = p.real("s");
    const CompactifiedPoint img = contraction(space, o, io::compactified_from_json(space, p.at("z")), s);
    return {"ok", {{"point", to_json(img)}, {"radius", number(contraction_radius(s))}}};
}

Json higson_json(const std::string& name, const HigsonCheckReport& r) {
    Json shells = Json::array();
    for (const auto& s : r.shells) {
        Json js{{"radius", number(s.radius)}, {"pairs", s.pairs}, {"max_variation", number(s.max_variation)}};
        if (s.witness) js["witness"] = {to_json(s.witness->first), to_json(s.witness->second)};
        shells.push_back(js);
    }
    Json j{{"function", name},
           {"epsilon", number(r.epsilon)},
           {"R", number(r.R)},
           {"t", number(r.t)},
           {"delta", number(r.delta)},
           {"S", number(r.S)},
           {"pulled_back", r.pulled_back},
           {"pairs_tested", r.pairs_tested},
           {"max_violation", number(r.max_violation)},
           {"shells", shells},
           {"verdict", to_string(r.verdict)}};
    if (r.witness) j["witness"] = {to_json(r.witness->first), to_json(r.witness->second)};
    return j;
}

Outcome higson_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const Point o = point_or_base(space, p, "o");
    std::vector<std::string> names;
    if (!p.has("functions")) {
        names = builtin_function_names();
    } else if (p.at("functions").is_string()) {
        names.push_back(p.at("functions").get<std::string>());
    } else {
        for (const auto& n : p.at("functions")) {
            if (!n.is_string()) throw UsageError("function names must be strings");
            names.push_back(n.get<std::string>());
        }
    }
    HigsonOptions opt;
    opt.seed = c.seed;
    opt.modulus.seed = c.seed;
    opt.modulus.samples = p.count("modulus_samples", opt.modulus.samples);
    opt.shells = static_cast<int>(p.integer("shells", opt.shells));
    opt.directions_per_shell = p.count("directions", opt.directions_per_shell);
    opt.max_block = static_cast<int>(p.integer("max_block", opt.max_block));
    const double t = p.real("t", 1.0), eps = p.real("epsilon", 0.1), R = p.real("R", 1.0);
    const bool probe = p.flag("probe", false);

    Outcome out;
    out.result = {{"functions", Json::array()}};
    bool any_fail = false, all_pass = true;
    for (const auto& name : names) {
        const ScalarFn f = builtin_function(name, space, o);
        const HigsonCheckReport r =
            probe ? higson_probe(space, o, t, f, eps, R, opt) : higson_certify(space, o, t, f, eps, R, opt);
        any_fail = any_fail || r.verdict == Verdict::Fail;
        all_pass = all_pass && r.verdict == Verdict::Pass;
        out.result["functions"].push_back(higson_json(name, r));
    }
    out.verdict = any_fail ? "fail" : (all_pass ? "pass" : "inconclusive");
    return out;
}

Point apply_builtin_map(const std::string& name, const SpaceDescriptor& target, const Point& y) {
    if (name == "identity") return y;
    if (name == "collapse") return target.basepoint();
    if (name.rfind("scale:", 0) == 0) {
        double k = 0.0;
        try {
            k = std::stod(name.substr(6));
        } catch (const std::logic_error&) {
            throw UsageError("bad scale factor in '" + name + "'");
        }
        if (target.kind() == SpaceKind::GluedXp) throw UsageError("scale maps are defined on l_p and the half-line");
        Point x = y;
        if (x.is_ray()) {
            x.ray *= k;
        } else {
            for (double& v : x.coords) v *= k;
        }
        return x;
    }
    throw UsageError("unknown map '" + name + "' (identity, collapse, scale:K)");
}

Outcome coarse_profile_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const SpaceDescriptor target = p.has("target") ? io::space_from_json(p.at("target")) : space;
    std::vector<Point> domain = io::points_from_json(space, p.at("domain"));
    std::vector<Point> values;
    if (p.has("values")) {
        values = io::points_from_json(target, p.at("values"));
    } else {
        const std::string name = p.text("map", "identity");
        for (const auto& y : domain) values.push_back(apply_builtin_map(name, target, y));
    }
    std::vector<double> radii{1.0, 2.0, 4.0, 8.0};
    if (p.has("radii")) {
        radii.clear();
        for (const auto& r : p.at("radii")) {
            if (!r.is_number()) throw UsageError("radii must be numbers");
            radii.push_back(r.get<double>());
        }
    }
    SampledMap f = SampledMap::from_points(space, std::move(domain), target, std::move(values));
    const CoarsenessProfile prof = coarseness_profile(f, radii, c.tolerance);
    Json rows = Json::array();
    for (const auto& r : prof.rows)
        rows.push_back({{"R", number(r.R)}, {"S", number(r.S)}, {"preimage_bound", number(r.preimage_bound)}});
    Outcome out;
    out.result = {{"profile", rows},
                  {"proper", prof.proper},
                  {"window_radius", number(prof.window_radius)},
                  {"image_radius", number(prof.image_radius)}};
    if (prof.witness)
        out.result["witness"] = {{"index", *prof.witness},
                                 {"domain_point", to_json(f.domain[*prof.witness])},
                                 {"image", to_json(f.values[*prof.witness])}};
    out.verdict = prof.proper ? "pass" : "fail";
    return out;
}

std::vector<BarycentricPoint> random_eval_points(const SimplicialComplex& k, std::size_t count, std::uint64_t seed) {
    const auto maximal = k.maximal_simplices();
    if (maximal.empty()) throw PreconditionError("complex has no simplices");
    Rng rng(seed);
    std::vector<BarycentricPoint> out;
    while (out.size() < count) {
        const Simplex& s = maximal[rng() % maximal.size()];
        BarycentricPoint y{s, {}};
        double total = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double w = -std::log(uniform(rng, 1e-12, 1.0));
            y.weights.push_back(w);
            total += w;
        }
        for (double& w : y.weights) w /= total;
        if (std::all_of(y.weights.begin(), y.weights.end(), [](double w) { return w > 0.0; })) out.push_back(y);
    }
    return out;
}

Outcome approx_map_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const SimplicialComplex k = io::complex_from_json(p.at("complex"));
    const std::vector<Point> fmap = io::points_from_json(space, p.at("vertex_map"));
    std::vector<BarycentricPoint> eval;
    if (p.has("eval")) {
        for (const auto& y : p.at("eval")) eval.push_back(io::barycentric_from_json(y));
    } else {
        eval = random_eval_points(k, p.count("random_eval", 50), c.seed);
    }
    const ApproximationResult r = continuous_approximation(k, space, fmap, eval);
    Json pts = Json::array();
    for (const auto& ap : r.points) {
        Json j{{"y", to_json(ap.y)}, {"dominant_vertex", ap.dominant_vertex}};
        if (ap.g) {
            j["g"] = to_json(*ap.g);
            j["to_f"] = number(ap.to_f);
            j["to_nearest_vertex"] = number(ap.to_nearest_vertex);
        } else {
            j["error"] = *ap.error;
        }
        pts.push_back(j);
    }
    Outcome out;
    out.result = {{"C", number(r.C)},
                  {"max_to_f", number(r.max_to_f)},
                  {"max_to_nearest_vertex", number(r.max_to_nearest_vertex)},
                  {"bound_f", number(2.0 * r.C)},
                  {"bound_nearest_vertex", number(r.C)},
                  {"unsupported_points", r.failures},
                  {"points", pts}};
    if (p.has("continuity_steps") && !eval.empty()) {
        // Spot check from the first evaluated point toward the first vertex of its carrier.
        const ContinuitySpotCheck cs =
            continuity_spot_check(k, space, fmap, eval[0], BarycentricPoint::vertex(eval[0].simplex.front()),
                                  static_cast<int>(p.integer("continuity_steps")));
        out.result["continuity"] = {{"steps", cs.steps}, {"max_jump", number(cs.max_jump)}};
    }
    if (!r.within_bounds(1e-6))
        out.verdict = "fail";
    else
        out.verdict = r.failures > 0 ? "inconclusive" : "pass";
    return out;
}

Outcome nerve_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const Cover cover = io::cover_from_json(space, p.at("cover"));
    std::vector<Point> window;
    if (p.has("window") || p.has("window_grid")) window = window_from(space, p);
    for (const auto& b : cover.members) window.push_back(b.center);
    const SimplicialComplex k = nerve(cover, window);
    return {"ok", {{"nerve", to_json(k)}, {"connected", k.is_connected()}}};
}

Outcome anti_cech_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const std::vector<Point> window = window_from(space, p);
    const auto ladder = anti_cech(space, window, p.real("base_radius", 1.0), static_cast<int>(p.integer("levels", 3)));
    Json levels = Json::array();
    bool simplicial = true;
    for (const auto& level : ladder) {
        Json centers = Json::array();
        for (const auto& b : level.cover.members) centers.push_back(to_json(b.center));
        double min_slack = std::numeric_limits<double>::infinity();
        for (const auto& w : level.containment) min_slack = std::min(min_slack, w.slack);
        Json j{{"radius", number(level.radius)},
               {"net_separation", number(level.net_separation)},
               {"centers", centers},
               {"nerve", to_json(level.nerve)},
               {"coarsening", level.coarsening},
               {"coarsening_simplicial", level.coarsening_simplicial}};
        if (!level.containment.empty()) j["min_containment_slack"] = number(min_slack);
        levels.push_back(j);
        simplicial = simplicial && level.coarsening_simplicial;
    }
    const std::size_t from = p.count("contiguity_level", ladder.size() > 1 ? 1 : 0);
    const ContiguitySearch search = coarsening_contiguity(ladder, from);
    Json steps = Json::array();
    for (const auto& s : search.steps) {
        Json js{{"level", s.level}, {"round_trip_simplicial", s.round_trip_simplicial}, {"contiguous", s.contiguous}};
        if (s.witness) js["witness"] = *s.witness;
        steps.push_back(js);
    }
    Outcome out;
    out.result = {{"levels", levels},
                  {"window_size", window.size()},
                  {"contiguity", {{"from_level", search.from_level}, {"steps", steps}}}};
    if (search.first_contiguous_level) out.result["contiguity"]["first_contiguous_level"] = *search.first_contiguous_level;
    out.verdict = simplicial && search.first_contiguous_level ? "pass" : "fail";
    return out;
}

Outcome spherical_cmd(const ExperimentConfig&, const Params& p) {
    const SimplicialComplex k = io::complex_from_json(p.at("complex"));
    const double d = spherical_distance(k, io::barycentric_from_json(p.at("y1")),
                                        io::barycentric_from_json(p.at("y2")),
                                        static_cast<int>(p.integer("subdivision", 32)));
    return {"ok", {{"distance", number(d)}, {"in_right_angles", number(d / (std::numbers::pi / 2.0))}}};
}

VertexMap vertex_map_from(const Json& j) {
    VertexMap f;
    if (!j.is_array()) throw UsageError("vertex maps are arrays of vertex indices");
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 0) throw UsageError("vertex maps are arrays of vertex indices");
        f.push_back(v.get<std::size_t>());
    }
    return f;
}

Outcome contiguity_cmd(const ExperimentConfig&, const Params& p) {
    const SimplicialComplex dom = io::complex_from_json(p.at("domain"));
    const SimplicialComplex tgt = io::complex_from_json(p.at("target"));
    const ContiguityResult r = is_contiguous(dom, tgt, vertex_map_from(p.at("f")), vertex_map_from(p.at("g")));
    Outcome out;
    out.result = {{"contiguous", r.contiguous}};
    if (r.witness) out.result["witness"] = *r.witness;
    out.verdict = r.contiguous ? "pass" : "fail";
    return out;
}

Outcome net_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const DiscreteSample window(space, window_from(space, p));
    const NetCertificate cert = greedy_net(window, p.real("epsilon"));
    const bool ok = cert.verify(window);
    return {ok ? "pass" : "fail",
            {{"epsilon", number(cert.epsilon)},
             {"C", number(cert.C)},
             {"size", cert.net.size()},
             {"net", to_json(cert.net.points())},
             {"verified", ok}}};
}

Outcome bg_profile_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const Json& pts = p.at("points");
    const DiscreteSample s = pts.is_object() ? io::sample_from_json(space, pts)
                                             : DiscreteSample(space, io::points_from_json(space, pts));
    return {"ok", {{"R", number(p.real("R"))}, {"profile", bounded_geometry_profile(s, p.real("R"))}}};
}

Outcome packing_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const PackingEstimate e =
        packing_number(space, point_or_base(space, p, "x"), p.real("R"), p.real("epsilon"), p.real("resolution", 0.0));
    return {"ok",
            {{"count", e.count},
             {"kind", "lower_bound"},
             {"resolution", number(e.resolution)},
             {"centers", to_json(e.centers)}}};
}

Outcome covering_cmd(const ExperimentConfig& c, const Params& p) {
    const SpaceDescriptor& space = need_space(c);
    const CoveringCertificate e = covering_number(space, point_or_base(space, p, "x"), p.real("R"),
                                                  p.real("epsilon"), p.real("resolution", 0.0));
    return {"ok",
            {{"count", e.count},
             {"kind", "certificate"},
             {"resolution", number(e.resolution)},
             {"continuous_radius", number(e.continuous_radius)},
             {"centers", to_json(e.centers)}}};
}

Outcome gamma_k_cmd(const ExperimentConfig&, const Params& p) {
    const double pp = p.real("p", 2.0);
    const int k = static_cast<int>(p.integer("k", 2));
    const double R = p.real("R", 2.0);
    if (p.has("max_n")) {
        const auto rows = gamma_k_growth(pp, k, R, static_cast<int>(p.integer("max_n")));
        Json counts = Json::array();
        bool strictly = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            counts.push_back(rows[i].count);
            if (i > 0 && rows[i].count <= rows[i - 1].count) strictly = false;
        }
        return {"ok", {{"counts", counts}, {"strictly_increasing", strictly}, {"csv", growth_table_csv(rows)}}};
    }
    const DiscreteSample s = gamma_k(pp, k, static_cast<int>(p.integer("n", 1)), R);
    return {"ok", {{"count", s.size()}, {"points", to_json(s.points())}}};
}

Outcome kinv_cmd(const ExperimentConfig&, const Params& p) {
    const int q = static_cast<int>(p.integer("q", 0));
    if (p.has("m")) return {"ok", to_json(sphere_k_homology(static_cast<int>(p.integer("m")), q))};
    if (p.has("truncate")) {
        const int n = static_cast<int>(p.integer("truncate"));
        Outcome out{"ok", to_json(xp_boundary_k_truncated(q, n))};
        out.result["contributors"] = xp_boundary_contributors(q, n);
        return out;
    }
    return {"ok", to_json(xp_boundary_k(q))};
}

using Handler = std::function<Outcome(const ExperimentConfig&, const Params&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"busemann-check", busemann_check_cmd}, {"barycenter", barycenter_cmd},
        {"project", project_cmd},               {"contraction", contraction_cmd},
        {"higson-certify", higson_cmd},         {"coarse-profile", coarse_profile_cmd},
        {"approx-map", approx_map_cmd},         {"nerve", nerve_cmd},
        {"anti-cech", anti_cech_cmd},           {"spherical-dist", spherical_cmd},
        {"contiguity", contiguity_cmd},         {"net", net_cmd},
        {"bg-profile", bg_profile_cmd},         {"packing", packing_cmd},
        {"covering", covering_cmd},             {"gamma-k", gamma_k_cmd},
        {"kinv", kinv_cmd},
    };
    return table;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Usage:
            return kUsage;
        case ErrorKind::InvariantViolation:
            return kCheckFailed;
        default:
            return kPrecondition;
    }
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : schema()) v.push_back(name);
        return v;
    }();
    return names;
}

const std::vector<std::string>& parameter_names(const std::string& command) {
    const auto it = schema().find(command);
    if (it == schema().end()) throw UsageError("unknown command '" + command + "'");
    return it->second;
}

double tolerance_from_env() {
    const char* raw = std::getenv("BUSECOARSE_TOLERANCE");
    if (!raw || !*raw) return kDefaultTolerance;
    try {
        std::size_t used = 0;
        const double tol = std::stod(raw, &used);
        if (used == std::string(raw).size() && tol > 0.0 && std::isfinite(tol)) return tol;
    } catch (const std::logic_error&) {
    }
    throw UsageError(std::string("BUSECOARSE_TOLERANCE must be a positive number, got '") + raw + "'");
}

ExperimentConfig parse_config(const Json& j, double default_tolerance) {
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    ExperimentConfig c;
    c.tolerance = default_tolerance;
    if (!j.contains("command") || !j.at("command").is_string()) throw UsageError("config needs a 'command' string");
    c.command = j.at("command").get<std::string>();
    const auto& allowed = parameter_names(c.command);
    if (j.contains("space") && !j.at("space").is_null()) c.space = io::space_from_json(j.at("space"));
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) throw UsageError("'seed' must be a non-negative integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("tolerance")) {
        if (!j.at("tolerance").is_number() || !(j.at("tolerance").get<double>() > 0.0))
            throw UsageError("'tolerance' must be a positive number");
        c.tolerance = j.at("tolerance").get<double>();
    }
    if (j.contains("parameters")) {
        if (!j.at("parameters").is_object()) throw UsageError("'parameters' must be an object");
        c.parameters = j.at("parameters");
    }
    for (const auto& [key, value] : j.items()) {
        if (key == "command" || key == "space" || key == "seed" || key == "tolerance" || key == "parameters") continue;
        c.parameters[key] = value;
    }
    for (const auto& [key, _] : c.parameters.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw UsageError("command '" + c.command + "' does not take parameter '" + key + "'");
    return c;
}

RunOutcome run(const ExperimentConfig& config) {
    const auto it = handlers().find(config.command);
    if (it == handlers().end()) throw UsageError("unknown command '" + config.command + "'");
    const auto start = std::chrono::steady_clock::now();
    const Outcome out = it->second(config, Params(config.parameters));
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    RunOutcome r;
    r.report = {{"version", kVersion},
                {"command", config.command},
                {"space", config.space ? to_json(*config.space) : Json(nullptr)},
                {"parameters", config.parameters},
                {"seed", config.seed},
                {"tolerance", config.tolerance},
                {"verdict", out.verdict},
                {"result", out.result},
                {"determinism", {{"seeded", true}, {"varies", {"timing"}}}},
                {"timing", {{"elapsed_ms", ms}}}};
    r.exit_code = (out.verdict == "fail" || out.verdict == "inconclusive") ? kCheckFailed : kSuccess;
    return r;
}

RunOutcome run_guarded(const Json& config, double default_tolerance) {
    auto failure = [&](int code, const std::string& kind, const std::string& message) {
        RunOutcome r;
        r.exit_code = code;
        r.report = {{"version", kVersion},
                    {"command", config.is_object() && config.contains("command") ? config.at("command") : Json()},
                    {"error", {{"kind", kind}, {"message", message}}},
                    {"exit_code", code}};
        return r;
    };
    try {
        return run(parse_config(config, default_tolerance));
    } catch (const Error& e) {
        return failure(exit_code_for(e), to_string(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return failure(kUsage, "usage", e.what());
    } catch (const std::exception& e) {
        return failure(kInternal, "internal", e.what());
    }
}

}  // namespace busecoarse::cli
