#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gw/catalog.hpp"
#include "gw/errors.hpp"
#include "gw/json_io.hpp"

using namespace gw;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GW_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("gw_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("descriptor JSON round trip") {
  for (const char* ref : {"su2_trivial", "stiefel_n:4", "quad_diag_su2", "product_s2_cubed"}) {
    CAPTURE(ref);
    const auto d = catalog_from_ref(ref);
    const auto j = descriptor_to_json(d);
    const auto back = descriptor_from_json(Json::parse(j.dump()));
    CHECK(back.user_supplied());
    CHECK(back.algebra().labels() == d.algebra().labels());
    CHECK(back.algebra().gram() == d.algebra().gram());
    for (Part p : {Part::k, Part::m1, Part::m2, Part::m3}) CHECK(back.indices(p) == d.indices(p));
    const auto rep = verify_space(back);
    CHECK(rep.ok());
    CHECK(rep.irreducibility_warning);
  }
}

TEST_CASE("descriptor JSON by reference and labels") {
  const auto j = Json::parse(R"({"name": "s4", "algebra": "so:4", "k": ["e34"], "m1": ["e12"],
                                 "m2": ["e13", "e14"], "m3": ["e23", "e24"]})");
  const auto d = descriptor_from_json(j);
  CHECK(verify_space(d).ok());
  CHECK(triple_symbols(d)(1, 2, 3) == Rational(1, 2));
  const auto sum = descriptor_from_json(Json::parse(R"({"algebra": ["su2", "su2"], "k": [0, 3],
                                                        "m1": [1], "m2": [2], "m3": [4, 5]})"));
  CHECK(sum.algebra().dim() == 6);
  CHECK(!verify_space(sum).ok());
}

TEST_CASE("malformed descriptors") {
  auto code = [](const char* text) {
    try {
      descriptor_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code(R"({"k": []})") == ErrorCode::InvalidDescriptor);
  CHECK(code(R"({"algebra": "so:x", "m1": [0], "m2": [1], "m3": [2]})") == ErrorCode::InvalidDescriptor);
  CHECK(code(R"({"algebra": "su2", "m1": ["nope"], "m2": [1], "m3": [2]})") == ErrorCode::InvalidDescriptor);
  CHECK(code(R"({"algebra": "su2", "m1": [0], "m2": [1]})") == ErrorCode::InvalidDescriptor);
  CHECK(code(R"({"algebra": {"dim": 2, "labels": ["a", "b"], "structure": [[0, 1, 0, "1"]]},
                 "m1": [0], "m2": [1], "m3": []})") == ErrorCode::InvalidDescriptor);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 3, "labels": ["a", "b", "c"],
      "structure": [[0, 1, 2, "1"], [1, 2, 0, "1"], [2, 0, 1, "1"]], "gram": [[1,0,0],[0,1,0],[0,0,1]]})")),
                  Error);
}

TEST_CASE("cli: documented examples") {
  const auto c = cli("--format json classify product_s2_cubed --random-metrics 5");
  CHECK(c.code == 0);
  const auto j = Json::parse(c.out);
  CHECK(j["schema"] == "gw/1");
  CHECK(j["verdict"] == "go_for_all_metrics");

  const auto e = cli("--format json enumerate su2 --metric 1,1,2");
  CHECK(e.code == 0);
  CHECK(Json::parse(e.out)["families"].size() == 2);

  const auto g = cli("--format json geodesic check stiefel_n:4 --metric 1,1,1 --vector e12=1");
  CHECK(g.code == 0);
  const auto gj = Json::parse(g.out);
  CHECK(gj["geodesic"] == true);
  for (const auto& r : gj["residuals"]) CHECK(r["value"] == "0");
}

TEST_CASE("cli: geodesic complete") {
  const auto r = cli("--format json geodesic complete stiefel_n:4 --metric 1,1,2 --mvector e13=1,e23=1");
  CHECK(r.code == 1);
  const auto j = Json::parse(r.out);
  CHECK(j["rank_A"] == 1);
  CHECK(j["rank_AB"] == 2);
  CHECK(j["completion_exists"] == false);
  const auto ok = cli("--format json geodesic complete stiefel_n:4 --metric 1,2,3 --mvector e12=1");
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["completion_exists"] == true);
  const auto fl = cli("--mode float --format json geodesic complete stiefel_n:4 --metric 1,2,3 --mvector e12=0.5");
  CHECK(fl.code == 0);
  CHECK(Json::parse(fl.out)["mode"] == "float");
}

TEST_CASE("cli: exit codes") {
  CHECK(cli("geodesic check stiefel_n:4 --metric 1,0,1 --vector e12=1").code == 2);
  CHECK(cli("geodesic check stiefel_n:4 --metric 1,1,1 --vector e99=1").code == 2);
  CHECK(cli("geodesic check stiefel_n:4 --metric 1,1,1 --vector e12=0").code == 2);
  CHECK(cli("geodesic complete stiefel_n:4 --metric 1,1,1 --mvector e34=1").code == 2);
  CHECK(cli("symbols no_such_space").code == 2);
  CHECK(cli("verify euler-arnold --space stiefel_n:4 --metric 1,2,3 --v0 e12=1").code == 2);
  CHECK(cli("nonsense").code == 2);
  CHECK(cli("").code == 2);
  const auto bad = temp_file("bad.json", R"({"algebra": "su2", "m1": [0], "m2": [1]})");
  CHECK(cli("space check " + bad).code == 3);
  const auto broken = temp_file("broken.json", "{not json");
  CHECK(cli("space check " + broken).code == 3);
  const auto viol = temp_file("viol.json", R"({"algebra": "so:4", "k": ["e12", "e13"], "m1": ["e34"],
                                              "m2": ["e14"], "m3": ["e23", "e24"]})");
  CHECK(cli("space check " + viol).code == 3);
  const auto good = temp_file("good.json", R"({"algebra": "so:4", "k": ["e34"], "m1": ["e12"],
                                              "m2": ["e13", "e14"], "m3": ["e23", "e24"]})");
  CHECK(cli("space check " + good).code == 0);
  CHECK(cli("--format json symbols " + good).code == 0);
}

TEST_CASE("cli: euler-arnold oracle") {
  const auto r = cli("--format json verify euler-arnold --metric 1,2,3 --v0 ih=1,X_a=1");
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["stationary"] == false);
  CHECK(j["geodesic"] == false);
  CHECK(j["drift"].get<double>() > 1e-3);
  const auto s = Json::parse(cli("--format json verify euler-arnold --metric 1,2,3 --v0 X_a=1").out);
  CHECK(s["stationary"] == true);
}

TEST_CASE("cli: determinism and seed precedence") {
  const std::string args = "--format json sample stiefel_n:4 --metric 1,2,3 --attempts 20";
  const auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["seed"] == 0x5EED);
  const auto env = cli(args, "GW_SEED=7");
  CHECK(Json::parse(env.out)["seed"] == 7);
  CHECK(env.out != a.out);
  const auto flag = cli("--seed 9 " + args, "GW_SEED=7");
  CHECK(Json::parse(flag.out)["seed"] == 9);
  const auto c1 = cli("--format json classify stiefel_n:4 --random-metrics 3");
  CHECK(c1.out == cli("--format json classify stiefel_n:4 --random-metrics 3").out);
}

TEST_CASE("cli: output file and formats") {
  const auto path = (std::filesystem::temp_directory_path() / "gw_test_out.json").string();
  std::filesystem::remove(path);
  CHECK(cli("--format json --output " + path + " symbols su2_trivial").code == 0);
  std::ifstream in(path);
  const auto j = Json::parse(in);
  CHECK(j["symbols"]["123"] == "1/2");
  const auto csv = cli("--format csv symbols su2_trivial");
  CHECK(csv.out.rfind("i,j,k,value\n", 0) == 0);
  CHECK(cli("space list").out.find("stiefel_n") != std::string::npos);
  CHECK(cli("space show stiefel_n 4").code == 0);
  const auto en = Json::parse(cli("--format json enumerate stiefel4 --metric 1,1,2").out);
  CHECK(en.contains("listed_shape_audit"));
}
