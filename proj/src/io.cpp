#include "busecoarse/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "busecoarse/errors.hpp"

namespace busecoarse::io {

namespace {

double parse_p(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double p = std::stod(s, &used);
        if (used != s.size()) throw UsageError("bad exponent '" + s + "'");
        return p;
    } catch (const std::logic_error&) {
        throw UsageError("bad exponent '" + s + "'");
    }
}

int parse_dim(const std::string& s) {
    try {
        std::size_t used = 0;
        const int n = std::stoi(s, &used);
        if (used != s.size()) throw UsageError("bad dimension '" + s + "'");
        return n;
    } catch (const std::logic_error&) {
        throw UsageError("bad dimension '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
    return j.at(key);
}

double as_double(const Json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_p(j.get<std::string>());
    throw UsageError(std::string("expected a number for '") + what + "'");
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw UsageError(std::string("expected an integer for '") + what + "'");
    return j.get<int>();
}

std::vector<double> as_doubles(const Json& j, const char* what) {
    if (!j.is_array()) throw UsageError(std::string("expected an array for '") + what + "'");
    std::vector<double> out;
    for (const auto& x : j) out.push_back(as_double(x, what));
    return out;
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw UsageError(std::string("expected a string for '") + what + "'");
    return j.get<std::string>();
}

}  // namespace

Json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

SpaceDescriptor parse_space(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.empty()) throw UsageError("empty space description");
    const std::string& kind = parts[0];
    if ((kind == "halfline" || kind == "half_line" || kind == "half-line") && parts.size() == 1)
        return SpaceDescriptor::half_line();
    if ((kind == "xp" || kind == "glued_xp") && parts.size() == 2) return SpaceDescriptor::glued_xp(parse_p(parts[1]));
    if (kind == "lp" && parts.size() == 3) return SpaceDescriptor::lp(parse_p(parts[1]), parse_dim(parts[2]));
    if (kind == "raw-lp" && parts.size() == 3) return SpaceDescriptor::raw_lp(parse_p(parts[1]), parse_dim(parts[2]));
    throw UsageError("unrecognised space '" + text + "' (expected lp:P:N, raw-lp:P:N, halfline or xp:P)");
}

SpaceDescriptor space_from_json(const Json& j) {
    if (j.is_string()) return parse_space(j.get<std::string>());
    const std::string kind = as_string(field(j, "kind"), "kind");
    if (kind == "half_line" || kind == "halfline") return SpaceDescriptor::half_line();
    if (kind == "glued_xp" || kind == "xp") return SpaceDescriptor::glued_xp(as_double(field(j, "p"), "p"));
    if (kind == "lp") {
        const double p = as_double(field(j, "p"), "p");
        const int dim = as_int(field(j, "dim"), "dim");
        const bool raw = j.value("raw", false);
        return raw ? SpaceDescriptor::raw_lp(p, dim) : SpaceDescriptor::lp(p, dim);
    }
    throw UsageError("unknown space kind '" + kind + "'");
}

Json to_json(const SpaceDescriptor& space) {
    switch (space.kind()) {
        case SpaceKind::HalfLine:
            return {{"kind", "halfline"}};
        case SpaceKind::GluedXp:
            return {{"kind", "glued_xp"}, {"p", number(space.p())}};
        case SpaceKind::Lp: {
            Json j{{"kind", "lp"}, {"p", number(space.p())}, {"dim", space.dim()}};
            if (space.is_raw()) j["raw"] = true;
            return j;
        }
    }
    return {};
}

Point point_from_json(const SpaceDescriptor& space, const Json& j) {
    Point a;
    if (j.is_number()) {
        a = Point::on_ray(j.get<double>());
    } else if (j.is_array()) {
        auto coords = as_doubles(j, "coords");
        const int n = static_cast<int>(coords.size());
        a = space.kind() == SpaceKind::GluedXp ? Point::in_block(n, std::move(coords)) : Point::lp(std::move(coords));
    } else {
        const std::string tag = as_string(field(j, "tag"), "tag");
        if (tag == "ray") {
            a = Point::on_ray(as_double(field(j, "t"), "t"));
        } else if (tag == "block") {
            auto coords = as_doubles(field(j, "coords"), "coords");
            const int n = j.contains("n") ? as_int(j.at("n"), "n") : static_cast<int>(coords.size());
            a = Point::in_block(n, std::move(coords));
        } else {
            throw UsageError("unknown point tag '" + tag + "'");
        }
    }
    validate(space, a);
    return a;
}

Json to_json(const Point& a) {
    if (a.is_ray()) return {{"tag", "ray"}, {"t", number(a.ray)}};
    Json coords = Json::array();
    for (double x : a.coords) coords.push_back(number(x));
    return {{"tag", "block"}, {"n", a.block}, {"coords", coords}};
}

std::vector<Point> points_from_json(const SpaceDescriptor& space, const Json& j) {
    if (!j.is_array()) throw UsageError("expected an array of points");
    std::vector<Point> out;
    for (const auto& x : j) out.push_back(point_from_json(space, x));
    return out;
}

Json to_json(const std::vector<Point>& pts) {
    Json arr = Json::array();
    for (const auto& a : pts) arr.push_back(to_json(a));
    return arr;
}

bool is_boundary_json(const Json& j) {
    if (!j.is_object() || !j.contains("tag") || !j.at("tag").is_string()) return false;
    const auto tag = j.at("tag").get<std::string>();
    return tag == "ray_end" || tag == "sphere";
}

BoundaryPoint boundary_from_json(const Json& j) {
    const std::string tag = as_string(field(j, "tag"), "tag");
    if (tag == "ray_end") return BoundaryPoint::ray_end();
    if (tag == "sphere") {
        auto dir = as_doubles(field(j, "dir"), "dir");
        const int n = j.contains("n") ? as_int(j.at("n"), "n") : static_cast<int>(dir.size());
        return BoundaryPoint::sphere(n, std::move(dir));
    }
    throw UsageError("unknown boundary tag '" + tag + "'");
}

Json to_json(const BoundaryPoint& xi) {
    if (xi.tag == BoundaryTag::RayEnd) return {{"tag", "ray_end"}};
    Json dir = Json::array();
    for (double x : xi.direction) dir.push_back(number(x));
    return {{"tag", "sphere"}, {"n", xi.block}, {"dir", dir}};
}

CompactifiedPoint compactified_from_json(const SpaceDescriptor& space, const Json& j) {
    if (is_boundary_json(j)) {
        BoundaryPoint xi = boundary_from_json(j);
        validate(space, xi);
        return xi;
    }
    return point_from_json(space, j);
}

Json to_json(const CompactifiedPoint& z) {
    return std::visit([](const auto& v) { return to_json(v); }, z);
}

SimplicialComplex complex_from_json(const Json& j) {
    const Json& verts = field(j, "vertices");
    std::vector<std::string> labels;
    std::size_t count = 0;
    if (verts.is_number_unsigned() || verts.is_number_integer()) {
        const long n = verts.get<long>();
        if (n < 0) throw UsageError("vertex count must be >= 0");
        count = static_cast<std::size_t>(n);
    } else if (verts.is_array()) {
        for (const auto& v : verts) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        count = labels.size();
    } else {
        throw UsageError("'vertices' must be a count or an array of labels");
    }
    std::vector<Simplex> gens;
    if (j.contains("simplices")) {
        for (const auto& s : j.at("simplices")) {
            Simplex simplex;
            for (const auto& v : s) {
                if (!v.is_number_integer() || v.get<long>() < 0) throw UsageError("simplex entries are vertex indices");
                simplex.push_back(v.get<std::size_t>());
            }
            gens.push_back(std::move(simplex));
        }
    }
    return SimplicialComplex::from_simplices(count, gens, labels);
}

Json to_json(const SimplicialComplex& k) {
    Json simplices = Json::array();
    for (const auto& s : k.maximal_simplices()) simplices.push_back(s);
    return {{"vertices", k.labels()}, {"simplices", simplices}, {"dimension", k.max_dim()},
            {"simplex_count", k.simplices().size()}};
}

BarycentricPoint barycentric_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.get<long>() < 0) throw UsageError("vertex index must be >= 0");
        return BarycentricPoint::vertex(j.get<std::size_t>());
    }
    BarycentricPoint y;
    for (const auto& v : field(j, "simplex")) {
        if (!v.is_number_integer() || v.get<long>() < 0) throw UsageError("simplex entries are vertex indices");
        y.simplex.push_back(v.get<std::size_t>());
    }
    y.weights = as_doubles(field(j, "weights"), "weights");
    // Accept any vertex order; keep weights attached to their vertices.
    std::vector<std::size_t> order(y.simplex.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y.simplex[a] < y.simplex[b]; });
    if (y.weights.size() == y.simplex.size()) {
        BarycentricPoint sorted;
        for (std::size_t i : order) {
            sorted.simplex.push_back(y.simplex[i]);
            sorted.weights.push_back(y.weights[i]);
        }
        return sorted;
    }
    return y;
}

Json to_json(const BarycentricPoint& y) { return {{"simplex", y.simplex}, {"weights", y.weights}}; }

Cover cover_from_json(const SpaceDescriptor& space, const Json& j) {
    Cover cover;
    cover.space = space;
    const Json& members = j.is_array() ? j : field(j, "members");
    for (const auto& m : members)
        cover.members.push_back({point_from_json(space, field(m, "center")), as_double(field(m, "radius"), "radius")});
    return cover;
}

Json to_json(const Cover& cover) {
    Json members = Json::array();
    for (const auto& b : cover.members) members.push_back({{"center", to_json(b.center)}, {"radius", b.radius}});
    return {{"space", to_json(cover.space)}, {"members", members}};
}

DiscreteSample sample_from_json(const SpaceDescriptor& fallback, const Json& j) {
    if (j.is_array()) return DiscreteSample(fallback, points_from_json(fallback, j));
    const SpaceDescriptor ambient = j.contains("ambient") ? space_from_json(j.at("ambient")) : fallback;
    return DiscreteSample(ambient, points_from_json(ambient, field(j, "points")));
}

Json to_json(const DiscreteSample& s) { return {{"ambient", to_json(s.ambient())}, {"points", to_json(s.points())}}; }

Json to_json(const AbelianGroupDescriptor& g) {
    Json j{{"kind", to_string(g.kind())}};
    if (g.kind() == AbelianGroupDescriptor::Kind::FiniteProduct) {
        Json factors = Json::array();
        for (const auto& f : g.factors()) factors.push_back(to_json(f));
        j["factors"] = factors;
    }
    return j;
}

AbelianGroupDescriptor group_from_json(const Json& j) {
    const std::string kind = as_string(field(j, "kind"), "kind");
    if (kind == "zero") return AbelianGroupDescriptor::zero();
    if (kind == "Z") return AbelianGroupDescriptor::integers();
    if (kind == "countable_product_of_Z") return AbelianGroupDescriptor::countable_product_of_z();
    if (kind == "finite_product") {
        std::vector<AbelianGroupDescriptor> factors;
        for (const auto& f : field(j, "factors")) factors.push_back(group_from_json(f));
        return AbelianGroupDescriptor::product(factors);
    }
    throw UsageError("unknown group kind '" + kind + "'");
}

Json to_json(const CheckReport& r) {
    return {{"check", r.check},         {"verdict", to_string(r.verdict)}, {"lhs", number(r.lhs)},
            {"rhs", number(r.rhs)},     {"margin", number(r.margin)},      {"samples", r.samples},
            {"witness", to_json(r.witness)}};
}

}  // namespace busecoarse::io
