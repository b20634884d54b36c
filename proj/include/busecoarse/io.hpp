#pragma once

// JSON encodings of the toolkit's value types. Malformed input throws UsageError.

#include <string>
#include <vector>

#include <json.hpp>

#include "busecoarse/boundary.hpp"
#include "busecoarse/check_report.hpp"
#include "busecoarse/complexes.hpp"
#include "busecoarse/k_invariants.hpp"
#include "busecoarse/metric_space.hpp"
#include "busecoarse/nets.hpp"

namespace busecoarse::io {

using Json = nlohmann::json;

/// "lp:2:3", "raw-lp:1:2", "raw-lp:inf:2", "halfline", "xp:2".
SpaceDescriptor parse_space(const std::string& text);

/// {"kind":"lp","p":2.0,"dim":3} (with "raw":true for raw spaces, "p":"inf"
/// allowed there), {"kind":"halfline"}, {"kind":"glued_xp","p":2.0}; a string
/// in the short form above is accepted too.
SpaceDescriptor space_from_json(const Json& j);
Json to_json(const SpaceDescriptor& space);

/**
 * {"tag":"ray","t":5.0} or {"tag":"block","n":2,"coords":[...]}. Shorthands: a
 * bare number is a ray point, a bare array is a point of l_p(n) (or of block n
 * in X_p, n being the array length).
 */
Point point_from_json(const SpaceDescriptor& space, const Json& j);
Json to_json(const Point& a);
std::vector<Point> points_from_json(const SpaceDescriptor& space, const Json& j);
Json to_json(const std::vector<Point>& pts);

/// {"tag":"ray_end"} or {"tag":"sphere","n":2,"dir":[...]}.
BoundaryPoint boundary_from_json(const Json& j);
Json to_json(const BoundaryPoint& xi);
bool is_boundary_json(const Json& j);
CompactifiedPoint compactified_from_json(const SpaceDescriptor& space, const Json& j);
Json to_json(const CompactifiedPoint& z);

/// {"vertices":[labels...] or a count, "simplices":[[...], ...]}.
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const SimplicialComplex& k);

/// {"simplex":[...],"weights":[...]}; a bare integer is a vertex.
BarycentricPoint barycentric_from_json(const Json& j);
Json to_json(const BarycentricPoint& y);

/// {"members":[{"center":<point>,"radius":r}, ...]} over `space`.
Cover cover_from_json(const SpaceDescriptor& space, const Json& j);
Json to_json(const Cover& cover);

/// {"ambient":<space>,"points":[...]}; the ambient defaults to `fallback`.
DiscreteSample sample_from_json(const SpaceDescriptor& fallback, const Json& j);
Json to_json(const DiscreteSample& s);

/// {"kind":"countable_product_of_Z"}; finite products carry "factors".
Json to_json(const AbelianGroupDescriptor& g);
AbelianGroupDescriptor group_from_json(const Json& j);

Json to_json(const CheckReport& r);

/// Serialises non-finite doubles as the strings "inf", "-inf" and "nan".
Json number(double x);

}  // namespace busecoarse::io
