#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "synlab/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = synlab::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("synlab-cli-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

// {0,1} with id, s (swap), a, b (constants) and s o s wrongly recorded as s.
json broken_composition() {
  const std::vector<std::pair<std::string, std::vector<int>>> ms{
      {"id", {0, 1}}, {"s", {1, 0}}, {"a", {0, 0}}, {"b", {1, 1}}};
  json doc{{"objects", json::array({{{"id", "X"}, {"carrier", {"0", "1"}}}})}};
  for (const auto& [id, map] : ms) doc["morphisms"].push_back({{"id", id}, {"dom", "X"}, {"cod", "X"}, {"map", map}});
  for (const auto& [g, gm] : ms)
    for (const auto& [f, fm] : ms) {
      std::vector<int> h{gm[static_cast<std::size_t>(fm[0])], gm[static_cast<std::size_t>(fm[1])]};
      std::string hid;
      for (const auto& [id, map] : ms)
        if (map == h) hid = id;
      if (g == "s" && f == "s") hid = "s";
      doc["composition"].push_back({g, f, hid});
    }
  return doc;
}

}  // namespace

TEST_CASE("examples then pointed closure lift") {
  TempDir tmp;
  const auto doc = tmp.file("t0.json");
  REQUIRE(run({"examples", "t0", "--out", doc}).code == synlab::kExitPass);
  const auto r = run({"lift", "pointed", "--repr", "closure", "--in", doc, "--out", tmp.file("rep.json")});
  CHECK(r.code == synlab::kExitPass);
  CHECK(r.out.find("{0} -> {0,1,2}") != std::string::npos);
  const auto rep = json::parse(read(tmp.file("rep.json")));
  CHECK(rep.at("verdict") == "PASS");
  CHECK(rep.at("lifted").at("tables").at("top3_0-3-7") == json::array({0, 7, 7, 7, 4, 7, 7, 7}));
  CHECK(rep.at("formula").get<std::string>().find("eta^-1") != std::string::npos);
}

TEST_CASE("validate") {
  TempDir tmp;
  SUBCASE("bundles validate") {
    for (const char* name : {"t0", "sym", "alexandrov", "forgetful", "sierpinski", "ind3"}) {
      const auto doc = tmp.file(std::string(name) + ".json");
      REQUIRE(run({"examples", name, "--out", doc}).code == 0);
      CHECK(run({"validate", "--in", doc}).code == synlab::kExitPass);
    }
  }
  SUBCASE("non-associative composition exits 2 with the triple") {
    const auto doc = tmp.file("broken.json");
    write(doc, broken_composition().dump());
    const auto r = run({"validate", "--in", doc});
    CHECK(r.code == synlab::kExitInputError);
    const auto text = r.out + r.err;
    CHECK(text.find("associativity") != std::string::npos);
    CHECK(text.find("(s, s, ") != std::string::npos);
  }
  SUBCASE("axiom failure exits 1") {
    const auto doc = tmp.file("bad-closure.json");
    write(doc, R"({"objects": [{"id": "X", "carrier": ["a", "b"]}],
                  "morphisms": [{"id": "id", "dom": "X", "cod": "X", "map": [0, 1]}],
                  "closures": [{"id": "shrink", "category": "C", "tables": {"X": [0, 0, 2, 2]}}]})");
    const auto r = run({"validate", "--in", doc, "--out", tmp.file("v.json")});
    CHECK(r.code == synlab::kExitCheckFailed);
    CHECK(read(tmp.file("v.json")).find("C1 extensive") != std::string::npos);
  }
}

TEST_CASE("galois refuses a non-meet-preserving order") {
  TempDir tmp;
  const auto doc = tmp.file("empty-rel.json");
  write(doc, R"({"objects": [{"id": "X", "carrier": ["a"]}],
                "morphisms": [{"id": "id", "dom": "X", "cod": "X", "map": [0]}],
                "topogenous": [{"id": "t", "category": "C", "relations": {"X": []}}]})");
  CHECK(run({"galois", "--in", doc}).code == synlab::kExitCheckFailed);
  REQUIRE(run({"examples", "sierpinski", "--out", tmp.file("s.json")}).code == 0);
  CHECK(run({"galois", "--in", tmp.file("s.json")}).code == synlab::kExitPass);
}

TEST_CASE("oracle subcommands") {
  TempDir tmp;
  const auto alex = tmp.file("alex.json");
  REQUIRE(run({"examples", "alexandrov", "--out", alex}).code == 0);
  SUBCASE("certify adjoint lift as coarsest") {
    const auto r = run({"oracle", "certify", "adjoint", "--repr", "syntop", "--direction", "coarsest", "--in", alex,
                        "--out", tmp.file("cert.json")});
    CHECK(r.code == synlab::kExitPass);
    CHECK(json::parse(read(tmp.file("cert.json"))).at("verdict") == "PASS");
  }
  SUBCASE("wrong direction fails") {
    const auto r = run({"oracle", "certify", "adjoint", "--repr", "qubase", "--direction", "finest", "--in", alex});
    CHECK(r.code == synlab::kExitCheckFailed);
  }
  SUBCASE("enumerate and its cap") {
    const auto f = tmp.file("forget.json");
    REQUIRE(run({"examples", "forgetful", "--out", f}).code == 0);
    const auto r = run({"oracle", "enumerate", "--repr", "closure", "--in", f, "--category", "Set", "--out",
                        tmp.file("e.json")});
    CHECK(r.code == synlab::kExitPass);
    CHECK(run({"oracle", "enumerate", "--repr", "closure", "--in", alex, "--category", "Top"}).code ==
          synlab::kExitInputError);
  }
  SUBCASE("principality") {
    CHECK(run({"oracle", "principality", "--in", alex}).code == synlab::kExitPass);
  }
}

TEST_CASE("continuity subcommand") {
  TempDir tmp;
  const auto doc = tmp.file("t0.json");
  REQUIRE(run({"examples", "t0", "--out", doc}).code == 0);
  const auto r = run({"continuity", "--in", doc, "--from", "kuratowski", "--to", "kuratowski", "--repr", "closure"});
  CHECK(r.code == synlab::kExitPass);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == synlab::kExitInputError);
  CHECK(run({"frobnicate"}).code == synlab::kExitInputError);
  CHECK(run({"validate", "--bogus"}).code == synlab::kExitInputError);
  CHECK(run({"validate", "--in", "/nonexistent.json"}).code == synlab::kExitInputError);
  CHECK(run({"examples", "nope"}).code == synlab::kExitInputError);
  CHECK(run({"lift", "sideways", "--repr", "closure", "--in", "/nonexistent.json"}).code == synlab::kExitInputError);
  CHECK(run({"--help"}).code == synlab::kExitPass);
}

TEST_CASE("reports are byte-identical on repeat") {
  TempDir tmp;
  const auto doc = tmp.file("sym.json");
  REQUIRE(run({"examples", "sym", "--out", doc}).code == 0);
  for (int i = 0; i < 2; ++i)
    REQUIRE(run({"lift", "copointed", "--repr", "qubase", "--in", doc, "--seed", "0xC0FFEE", "--out",
                 tmp.file("r" + std::to_string(i) + ".json")})
                .code == 0);
  CHECK(read(tmp.file("r0.json")) == read(tmp.file("r1.json")));
}

TEST_CASE("installed binary exit codes") {
  TempDir tmp;
  const std::string bin = SYNLAB_CLI_PATH;
  const auto doc = tmp.file("broken.json");
  write(doc, broken_composition().dump());
  const auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status(bin + " examples t0 --out " + tmp.file("t0.json")) == 0);
  CHECK(status(bin + " lift pointed --repr closure --in " + tmp.file("t0.json")) == 0);
  CHECK(status(bin + " validate --in " + doc) == 2);
  CHECK(status(bin + " no-such-command") == 2);
}
