#include "busecoarse/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "busecoarse/errors.hpp"

namespace busecoarse {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Usage: return "usage";
        case ErrorKind::InvalidPoint: return "invalid-point";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::UnsupportedConfiguration: return "unsupported-configuration";
        case ErrorKind::Coverage: return "coverage";
        case ErrorKind::Unreachable: return "unreachable";
        case ErrorKind::Evaluation: return "evaluation";
        case ErrorKind::InvariantViolation: return "invariant-violation";
    }
    return "unknown";
}

namespace {

void require_busemann_exponent(double p) {
    if (!(p > 1.0) || std::isinf(p)) {
        std::ostringstream os;
        os << "Busemann l_p spaces need 1 < p < inf, got p = " << p
           << " (use raw_lp for non-Busemann metrics)";
        throw DomainError(os.str());
    }
}

// Position of a point of X_p relative to the half-line: the ray coordinate of
// its attaching point and its distance from that attaching point.
struct Anchor {
    double pos;
    double off;
    int block;  // 0 for ray points
};

Anchor anchor_of(const SpaceDescriptor& space, const Point& a) {
    if (a.is_ray()) return {a.ray, 0.0, 0};
    return {static_cast<double>(a.block), lp_norm(a.coords, space.p()), a.block};
}

std::vector<double> scaled(const std::vector<double>& v, double s) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [s](double x) { return s * x; });
    return out;
}

void check_fraction(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        std::ostringstream os;
        os << "geodesic parameter must lie in [0,1], got " << t;
        throw DomainError(os.str());
    }
}

Point glued_geodesic(const SpaceDescriptor& space, const Point& a, const Point& b, double t) {
    if (!a.is_ray() && !b.is_ray() && a.block == b.block) {
        std::vector<double> c(a.coords.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + t * (b.coords[i] - a.coords[i]);
        return canonical(space, Point::in_block(a.block, std::move(c)));
    }
    const Anchor A = anchor_of(space, a);
    const Anchor B = anchor_of(space, b);
    const double along = std::abs(B.pos - A.pos);
    const double total = A.off + along + B.off;
    double tau = t * total;

    if (tau < A.off) {
        return canonical(space, Point::in_block(a.block, scaled(a.coords, 1.0 - tau / A.off)));
    }
    tau -= A.off;
    if (tau <= along || B.off == 0.0) {
        tau = std::min(tau, along);
        const double s = B.pos >= A.pos ? A.pos + tau : A.pos - tau;
        return Point::on_ray(std::max(0.0, s));
    }
    tau -= along;
    return canonical(space, Point::in_block(b.block, scaled(b.coords, std::min(1.0, tau / B.off))));
}

}  // namespace

SpaceDescriptor SpaceDescriptor::lp(double p, int dim) {
    require_busemann_exponent(p);
    if (dim < 1) throw DomainError("l_p dimension must be >= 1");
    return SpaceDescriptor(SpaceKind::Lp, p, dim, false);
}

SpaceDescriptor SpaceDescriptor::raw_lp(double p, int dim) {
    if (!(p >= 1.0)) throw DomainError("raw l_p needs p >= 1");
    if (dim < 1) throw DomainError("l_p dimension must be >= 1");
    return SpaceDescriptor(SpaceKind::Lp, p, dim, true);
}

SpaceDescriptor SpaceDescriptor::half_line() { return SpaceDescriptor(SpaceKind::HalfLine, 2.0, 1, false); }

SpaceDescriptor SpaceDescriptor::glued_xp(double p) {
    require_busemann_exponent(p);
    return SpaceDescriptor(SpaceKind::GluedXp, p, 1, false);
}

Point SpaceDescriptor::basepoint() const {
    if (kind_ == SpaceKind::Lp) return Point::lp(std::vector<double>(static_cast<std::size_t>(dim_), 0.0));
    return Point::on_ray(0.0);
}

std::string SpaceDescriptor::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case SpaceKind::Lp:
            if (raw_) os << "raw ";
            os << "l_" << p_ << "(" << dim_ << ")";
            break;
        case SpaceKind::HalfLine: os << "half-line"; break;
        case SpaceKind::GluedXp: os << "X_" << p_; break;
    }
    return os.str();
}

Point Point::on_ray(double t) {
    Point a;
    a.tag = PointTag::Ray;
    a.ray = t;
    return a;
}

Point Point::in_block(int n, std::vector<double> coords) {
    Point a;
    a.tag = PointTag::Block;
    a.block = n;
    a.coords = std::move(coords);
    return a;
}

Point Point::lp(std::vector<double> coords) {
    const int n = static_cast<int>(coords.size());
    return in_block(n, std::move(coords));
}

double lp_norm(std::span<const double> v, double p) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    if (m == 0.0 || std::isinf(p)) return m;
    if (p == 1.0) {
        double s = 0.0;
        for (double x : v) s += std::abs(x);
        return s;
    }
    double s = 0.0;
    if (p == 2.0) {
        for (double x : v) s += (x / m) * (x / m);
        return m * std::sqrt(s);
    }
    for (double x : v) s += std::pow(std::abs(x) / m, p);
    return m * std::pow(s, 1.0 / p);
}

void validate(const SpaceDescriptor& space, const Point& a) {
    auto finite_coords = [&] {
        return std::all_of(a.coords.begin(), a.coords.end(), [](double x) { return std::isfinite(x); });
    };
    switch (space.kind()) {
        case SpaceKind::Lp:
            if (a.is_ray() || a.block != space.dim() || static_cast<int>(a.coords.size()) != space.dim())
                throw InvalidPointError("point is not in " + space.describe() + " (dimension mismatch)");
            if (!finite_coords()) throw InvalidPointError("non-finite coordinate");
            return;
        case SpaceKind::HalfLine:
            if (!a.is_ray()) throw InvalidPointError("half-line points are ray points");
            if (!(a.ray >= 0.0) || !std::isfinite(a.ray))
                throw InvalidPointError("half-line coordinate must be finite and >= 0");
            return;
        case SpaceKind::GluedXp:
            if (a.is_ray()) {
                if (!(a.ray >= 0.0) || !std::isfinite(a.ray))
                    throw InvalidPointError("ray coordinate must be finite and >= 0");
                return;
            }
            if (a.block < 1) throw InvalidPointError("block index must be >= 1");
            if (static_cast<int>(a.coords.size()) != a.block)
                throw InvalidPointError("block " + std::to_string(a.block) + " needs " +
                                        std::to_string(a.block) + " coordinates");
            if (!finite_coords()) throw InvalidPointError("non-finite coordinate");
            return;
    }
}

Point canonical(const SpaceDescriptor& space, Point a) {
    validate(space, a);
    if (space.kind() == SpaceKind::GluedXp && !a.is_ray() &&
        std::all_of(a.coords.begin(), a.coords.end(), [](double x) { return x == 0.0; })) {
        return Point::on_ray(static_cast<double>(a.block));
    }
    return a;
}

bool same_point(const SpaceDescriptor& space, const Point& a, const Point& b, double tol) {
    if (tol <= 0.0) return canonical(space, a) == canonical(space, b);
    return distance(space, a, b) <= tol;
}

double distance(const SpaceDescriptor& space, const Point& a, const Point& b) {
    validate(space, a);
    validate(space, b);
    switch (space.kind()) {
        case SpaceKind::HalfLine: return std::abs(a.ray - b.ray);
        case SpaceKind::Lp: {
            std::vector<double> d(a.coords.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coords[i] - b.coords[i];
            return lp_norm(d, space.p());
        }
        case SpaceKind::GluedXp: {
            if (!a.is_ray() && !b.is_ray() && a.block == b.block) {
                std::vector<double> d(a.coords.size());
                for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coords[i] - b.coords[i];
                return lp_norm(d, space.p());
            }
            const Anchor A = anchor_of(space, a);
            const Anchor B = anchor_of(space, b);
            return (A.off + B.off) + std::abs(A.pos - B.pos);
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

Point geodesic_point(const SpaceDescriptor& space, const Point& a, const Point& b, double t) {
    check_fraction(t);
    validate(space, a);
    validate(space, b);
    if (t == 0.0) return canonical(space, a);
    if (t == 1.0) return canonical(space, b);
    switch (space.kind()) {
        case SpaceKind::HalfLine: return Point::on_ray(std::max(0.0, a.ray + t * (b.ray - a.ray)));
        case SpaceKind::Lp: {
            std::vector<double> c(a.coords.size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + t * (b.coords[i] - a.coords[i]);
            return Point::lp(std::move(c));
        }
        case SpaceKind::GluedXp: return glued_geodesic(space, a, b, t);
    }
    return a;
}

Point delta(const SpaceDescriptor& space, const Point& o, const Point& x, double t) {
    return geodesic_point(space, o, x, t);
}

Point staircase_geodesic_point(const SpaceDescriptor& space, const Point& a, const Point& b,
                               double t) {
    if (space.kind() != SpaceKind::Lp || space.p() != 1.0)
        throw UnsupportedConfigurationError("staircase geodesics are l_1 geodesics only");
    check_fraction(t);
    validate(space, a);
    validate(space, b);
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    double remaining = t * distance(space, a, b);
    std::vector<double> c = a.coords;
    for (std::size_t i = 0; i < c.size() && remaining > 0.0; ++i) {
        const double gap = b.coords[i] - a.coords[i];
        const double step = std::min(remaining, std::abs(gap));
        c[i] += gap >= 0.0 ? step : -step;
        remaining -= step;
    }
    return Point::lp(std::move(c));
}

}  // namespace busecoarse
