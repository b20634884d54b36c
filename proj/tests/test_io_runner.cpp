#include <doctest.h>

#include <limits>

#include "busecoarse/errors.hpp"
#include "busecoarse/io.hpp"
#include "busecoarse/runner.hpp"

using namespace busecoarse;
using io::Json;

TEST_CASE("space parsing round trips") {
    for (const char* text : {"lp:2:3", "raw-lp:1:2", "halfline", "xp:3"}) {
        const auto s = io::parse_space(text);
        CHECK(io::space_from_json(io::to_json(s)) == s);
    }
    CHECK(io::parse_space("raw-lp:inf:2").p() == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(io::parse_space("lp:1:2"), DomainError);
    CHECK_THROWS_AS(io::parse_space("sphere:2"), UsageError);
}

TEST_CASE("point and boundary encodings") {
    const auto x2 = io::parse_space("xp:2");
    const Point b = Point::in_block(2, {1, 0});
    CHECK(io::point_from_json(x2, io::to_json(b)) == b);
    CHECK(io::point_from_json(x2, Json(3.5)) == Point::on_ray(3.5));
    CHECK(io::point_from_json(x2, Json::parse("[1, 2]")) == Point::in_block(2, {1, 2}));
    CHECK_THROWS(io::point_from_json(io::parse_space("lp:2:2"), Json::parse("[1, 2, 3]")));
    const auto xi = BoundaryPoint::sphere(2, {0.6, 0.8});
    CHECK(io::boundary_from_json(io::to_json(xi)) == xi);
    CHECK(io::is_boundary_json(Json::parse(R"({"tag":"ray_end"})")));
    CHECK(io::number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("complex and group encodings") {
    const auto k = io::complex_from_json(Json::parse(R"({"vertices":["a","b","c"],"simplices":[[0,1],[1,2]]})"));
    CHECK(k.labels()[2] == "c");
    CHECK(io::complex_from_json(io::to_json(k)) == k);
    const auto y = io::barycentric_from_json(Json::parse(R"({"simplex":[1,0],"weights":[0.25,0.75]})"));
    CHECK(y.simplex == Simplex{0, 1});
    CHECK(y.weights[0] == 0.75);
    const auto g = AbelianGroupDescriptor::product({AbelianGroupDescriptor::integers(), AbelianGroupDescriptor::integers()});
    CHECK(io::group_from_json(io::to_json(g)) == g);
}

TEST_CASE("config parsing") {
    const auto c = cli::parse_config(Json::parse(R"({"command":"kinv","q":1,"seed":3})"), 1e-9);
    CHECK(c.command == "kinv");
    CHECK(c.parameters["q"] == 1);
    CHECK(c.seed == 3);
    CHECK_THROWS_AS(cli::parse_config(Json::parse(R"({"command":"kinv","bogus":1})"), 1e-9), UsageError);
    CHECK_THROWS_AS(cli::parse_config(Json::parse(R"({"command":"nope"})"), 1e-9), UsageError);
    CHECK_THROWS_AS(cli::parse_config(Json::parse(R"({"command":"kinv","tolerance":-1})"), 1e-9), UsageError);
}

TEST_CASE("runner examples") {
    auto ok = cli::run_guarded(Json::parse(R"({"space":"lp:2:2","command":"busemann-check","samples":1000,"seed":0})"), 1e-9);
    CHECK(ok.exit_code == cli::kSuccess);
    CHECK(ok.report["verdict"] == "pass");
    CHECK(ok.report["result"]["min_margin"].get<double>() >= -1e-9);

    auto bad = cli::run_guarded(
        Json::parse(R"({"space":"raw-lp:1:2","command":"busemann-check","include_staircase_geodesics":true})"), 1e-9);
    CHECK(bad.exit_code == cli::kCheckFailed);
    CHECK(bad.report["verdict"] == "fail");
    CHECK(bad.report["result"]["min_margin"].get<double>() == -1.0);
    CHECK(bad.report["result"].contains("witness"));

    auto k = cli::run_guarded(Json::parse(R"({"command":"kinv","q":0})"), 1e-9);
    CHECK(k.report["result"] == Json::parse(R"({"kind":"countable_product_of_Z"})"));

    auto again = cli::run_guarded(Json::parse(R"({"space":"lp:2:2","command":"busemann-check","samples":1000,"seed":0})"), 1e-9);
    CHECK(again.report["result"] == ok.report["result"]);
}

TEST_CASE("runner error mapping") {
    CHECK(cli::run_guarded(Json::parse(R"({"command":"kinv","q":5})"), 1e-9).exit_code == cli::kPrecondition);
    CHECK(cli::run_guarded(Json::parse(R"({"space":"lp:2:2"})"), 1e-9).exit_code == cli::kUsage);
    const auto r = cli::run_guarded(Json::parse(R"({"command":"spherical-dist","complex":{"vertices":2,"simplices":[]},"y1":0,"y2":1})"), 1e-9);
    CHECK(r.exit_code == cli::kPrecondition);
    CHECK(r.report["error"]["kind"].is_string());
}

TEST_CASE("every command is listed with its parameters") {
    for (const auto& name : cli::command_names()) CHECK_NOTHROW(cli::parameter_names(name));
    CHECK_THROWS_AS(cli::parameter_names("nope"), UsageError);
}

TEST_CASE("space descriptor JSON shape") {
    CHECK(io::to_json(SpaceDescriptor::half_line()) == Json::parse(R"({"kind":"halfline"})"));
    CHECK(io::to_json(SpaceDescriptor::lp(2.0, 3)) == Json::parse(R"({"kind":"lp","p":2.0,"dim":3})"));
    CHECK(io::to_json(Point::in_block(2, {1, 0})) == Json::parse(R"({"tag":"block","n":2,"coords":[1.0,0.0]})"));
    CHECK(io::to_json(BoundaryPoint::sphere(2, {0.6, 0.8})) == Json::parse(R"({"tag":"sphere","n":2,"dir":[0.6,0.8]})"));
}
