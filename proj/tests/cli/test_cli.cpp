#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace lejalab;
using namespace lejalab::cli;

namespace {

fs::path scratch(const std::string& name) {
  const char* env = std::getenv("LEJALAB_TEST_TMP");
  const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "lejalab_cli_tests";
  const fs::path dir = root / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  int code;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream err;
  const int code = run(args, err);
  return {code, err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("size lists") {
  CHECK(parse_sizes("8,16,4") == std::vector<std::size_t>{4, 8, 16});
  CHECK(parse_sizes("8..64") == std::vector<std::size_t>{8, 16, 32, 64});
  CHECK(parse_sizes("3..20,5") == std::vector<std::size_t>{3, 5, 6, 12});
  CHECK(parse_sizes("7,7") == std::vector<std::size_t>{7});
  CHECK_THROWS_AS(parse_sizes(""), InvalidInput);
  CHECK_THROWS_AS(parse_sizes("0,4"), InvalidInput);
  CHECK_THROWS_AS(parse_sizes("16..8"), InvalidInput);
  CHECK_THROWS_AS(parse_sizes("x"), InvalidInput);
  CHECK(parse_reals("0.4,1e-2") == std::vector<double>{0.4, 0.01});
  CHECK_THROWS_AS(parse_reals("0.4,abc"), InvalidInput);
}

TEST_CASE("set specs round trip through JSON") {
  const SetSpec specs[] = {SetSpec::segment(), SetSpec::circle(2.0, {1.0, -1.0}),
                           SetSpec::circular_arc(1.0, 3.0),
                           SetSpec::polyline_arc({{0, 0}, {1, 0}, {1, 1}}),
                           SetSpec::segment().with_affine({2.0, 0.5, {1.0, 0.0}})};
  for (const auto& spec : specs) {
    const auto back = set_from_json(set_to_json(spec));
    CHECK(set_to_json(back) == set_to_json(spec));
    CHECK(point_at(back, 0.3) == point_at(spec, 0.3));
  }
  CHECK_THROWS_AS(set_from_json(Json::parse(R"({"kind":"segment","colour":1})")), InvalidInput);
  CHECK_THROWS_AS(set_from_json(Json::parse(R"({"kind":"circle","radius":-1})")), InvalidInput);
  CHECK_THROWS_AS(load_set("{not json"), InvalidInput);
}

TEST_CASE("numbers are printed round-trippably") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("nodes output is deterministic and feeds the other commands") {
  const auto dir = scratch("nodes");
  const auto a = dir / "a.json", b = dir / "b.json";
  for (const auto& p : {a, b}) {
    REQUIRE(call({"nodes", "--set", R"({"kind":"segment"})", "--n", "32", "--out", p.string()}).code ==
            0);
  }
  CHECK(slurp(a) == slurp(b));

  const auto scheme = load_scheme(a);
  CHECK(scheme.kind() == SchemeKind::leja);
  CHECK(scheme.max_n() == 32);
  const auto fresh = Scheme::generate(SchemeKind::leja, SetSpec::segment(), {32});
  CHECK(scheme.row(32) == fresh.row(32));

  REQUIRE(call({"lebesgue", "--nodes", a.string(), "--ns", "8,32", "--out", (dir / "l.csv").string(),
                "--sproduct", (dir / "s.csv").string()})
              .code == 0);
  const auto csv = slurp(dir / "l.csv");
  CHECK(csv.rfind("n,lambda,lambda_root,argmax_re,argmax_im,mesh_size\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(slurp(dir / "s.csv").rfind("n,k,delta,card_A,log_S,s_root\n", 0) == 0);

  REQUIRE(call({"separation", "--nodes", a.string(), "--rule", "both", "--out",
                (dir / "sep.csv").string()})
              .code == 0);
  CHECK(slurp(dir / "sep.csv").find("rho_formula_segment") != std::string::npos);
  REQUIRE(call({"equilibrium", "--nodes", a.string(), "--ns", "16,32", "--out",
                (dir / "eq.csv").string()})
              .code == 0);
  CHECK(slurp(dir / "eq.csv").rfind("n,kolmogorov,spacing_stat,holder_stat\n", 0) == 0);
}

TEST_CASE("other node kinds") {
  const auto dir = scratch("kinds");
  const auto p = dir / "r.json";
  REQUIRE(call({"nodes", "--set", R"({"kind":"segment"})", "--kind", "random", "--n", "5", "--seed",
                "7", "--out", p.string()})
              .code == 0);
  const auto j = read_json_file(p);
  CHECK(j["seed"] == 7);
  CHECK(j["candidates"].is_null());
  CHECK(load_scheme(p).row(5) == random_nodes(SetSpec::segment(), 5, 7));
  CHECK(call({"nodes", "--set", R"({"kind":"circle","radius":1})", "--kind", "chebyshev", "--n",
              "5"})
            .code == 2);
}

TEST_CASE("errors map to exit codes with a JSON message") {
  const auto bad_kind = call({"nodes", "--set", R"({"kind":"disk"})", "--n", "4"});
  CHECK(bad_kind.code == 2);
  const auto j = Json::parse(bad_kind.err);
  CHECK(j["error"] == "invalid_input");
  CHECK(j["exit_code"] == 2);

  CHECK(call({"nodes", "--n", "4"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"lebesgue", "--nodes", "/nonexistent/nodes.json"}).code == 2);

  const auto tiny = call({"nodes", "--set",
                          R"({"kind":"segment","affine":{"scale":1e-17,"rot_rad":0,"shift":[1,0]}})",
                          "--n", "4"});
  CHECK(tiny.code == 3);
  CHECK(Json::parse(tiny.err)["error"] == "numerical_failure");

  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--version"}).code == 0);
}

TEST_CASE("tampered node files are rejected") {
  const auto dir = scratch("tamper");
  const auto p = dir / "n.json";
  REQUIRE(call({"nodes", "--set", R"({"kind":"segment"})", "--n", "4", "--out", p.string()}).code ==
          0);
  auto j = read_json_file(p);
  j["n"] = 5;
  write_text(dir / "bad_n.json", dump(j));
  CHECK(call({"lebesgue", "--nodes", (dir / "bad_n.json").string()}).code == 2);
  j["n"] = 4;
  j["points"][1] = Json::array({0.0, 0.5});
  write_text(dir / "off_set.json", dump(j));
  CHECK(call({"lebesgue", "--nodes", (dir / "off_set.json").string()}).code == 2);
}

TEST_CASE("report writes every artifact") {
  const auto dir = scratch("report");
  REQUIRE(call({"report", "--set", R"({"kind":"segment"})", "--kind", "leja,chebyshev", "--ns",
                "8..32", "--out", dir.string()})
              .code == 0);
  for (const char* name : {"report.json", "lambda_root.svg", "min_ratio.svg", "kolmogorov.svg",
                           "nodes_leja.json", "lebesgue_chebyshev.csv", "separation_leja.csv"}) {
    CHECK_MESSAGE(fs::exists(dir / name), name);
  }
  const auto report = read_json_file(dir / "report.json");
  CHECK(report["tool"] == "lejalab");
  REQUIRE(report["schemes"].size() == 2);
  const auto& rows = report["schemes"][0]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[2]["n"] == 32);
  CHECK(rows[2]["lambda_root"].get<double>() < 1.2);
  CHECK(rows[2]["s_products"].size() == default_delta_ladder().size());
  CHECK(slurp(dir / "lambda_root.svg").rfind("<svg", 0) == 0);

  // The embedded config replays to the same report.
  const auto replay_dir = scratch("replay");
  write_text(replay_dir / "config.json", dump(report["config"]));
  REQUIRE(call({"report", "--config", (replay_dir / "config.json").string(), "--out",
                replay_dir.string()})
              .code == 0);
  auto again = read_json_file(replay_dir / "report.json");
  CHECK(again["schemes"] == report["schemes"]);
}

TEST_CASE("config JSON round trip") {
  RunConfig config;
  config.set = SetSpec::circular_arc(1.0, 2.0);
  config.kinds = {SchemeKind::leja, SchemeKind::random};
  config.seed = 11;
  config.ns = {4, 8};
  const auto back = config_from_json(config_to_json(config));
  CHECK(config_to_json(back) == config_to_json(config));
  auto j = config_to_json(config);
  j["typo"] = 1;
  CHECK_THROWS_AS(config_from_json(j), InvalidInput);
}

}  // TEST_SUITE
