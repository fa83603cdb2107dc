#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using toricdp::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("toricdp_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

const char* kP2 = R"({"rays": [[-1,-1],[1,0],[0,1]]})";
const char* kF1 = R"({"rays": [[0,-1],[1,0],[0,1],[-1,1]]})";
const char* kF2 = R"({"rays": [[0,-1],[1,0],[0,1],[-1,2]]})";

}  // namespace

TEST_CASE("fan validate") {
  TempDir dir;
  auto ok = invoke({"fan", "validate", dir.write("p2.json", kP2)});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("picard_rank: 1") != std::string::npos);
  CHECK(ok.out.find("gamma: (-1,-1,-1)") != std::string::npos);
  CHECK(ok.out.find("[1 1 1]") != std::string::npos);

  auto bad = invoke({"fan", "validate",
                     dir.write("bad.json", R"({"rays": [[2,4],[1,0],[0,1]]})")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("ray 0 not primitive") != std::string::npos);

  auto trunc = invoke({"fan", "validate", dir.write("t.json", R"({"rays": [[1,)")});
  CHECK(trunc.code == 2);
  CHECK(invoke({"fan", "validate", dir.file("missing.json")}).code == 2);
}

TEST_CASE("fan info") {
  TempDir dir;
  auto r = invoke({"fan", "info", dir.write("f2.json", kF2)});
  CHECK(r.code == 0);
  CHECK(r.out.find("canonical_key: (-2,0,2,0)") != std::string::npos);
  CHECK(r.out.find("del_pezzo: no") != std::string::npos);
}

TEST_CASE("fan enumerate") {
  auto r = invoke({"fan", "enumerate", "--rays", "3", "--gamma-bound", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "(-1,-1,-1)\n");
  r = invoke({"fan", "enumerate", "--rays", "4", "--gamma-bound", "2"});
  CHECK(r.out == "(-2,0,2,0)\n(-1,0,1,0)\n(0,0,0,0)\n");
  r = invoke({"fan", "enumerate", "--rays", "4", "--gamma-bound", "0"});
  CHECK(r.out == "(0,0,0,0)\n");
  r = invoke({"fan", "enumerate", "--rays", "4", "--gamma-bound", "1",
              "--format", "json"});
  CHECK(r.out ==
        "{\"rays\":4,\"gamma_bound\":1,\"count\":2,\"keys\":[[-1,0,1,0],[0,0,0,0]]}\n");
  r = invoke({"fan", "enumerate", "--rays", "4", "--gamma-bound", "1",
              "--format", "csv"});
  CHECK(r.out == "rays,gamma_bound,key\n4,1,\"(-1,0,1,0)\"\n4,1,\"(0,0,0,0)\"\n");
  CHECK(invoke({"fan", "enumerate", "--rays", "2", "--gamma-bound", "1"}).code == 2);
}

TEST_CASE("pair classify") {
  TempDir dir;
  auto json_rows = [&](const std::string& path) {
    auto r = invoke({"pair", "classify", path, "--format", "json"});
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out)["records"];
  };
  auto count_ample = [](const nlohmann::json& rows) {
    std::size_t n = 0;
    for (const auto& row : rows) n += row["ample"].get<bool>();
    return n;
  };

  const auto f1 = json_rows(dir.write("f1.json", kF1));
  CHECK(f1.size() == 16);
  CHECK(count_ample(f1) == 5);

  const auto p2 = json_rows(dir.write("p2.json", kP2));
  CHECK(p2.size() == 8);
  CHECK(count_ample(p2) == 7);

  // Blowup of F_1 at three cones: 7 rays, only -K can be ample.
  const auto seven = json_rows(dir.write(
      "seven.json",
      R"({"rays": [[0,-1],[1,-1],[1,0],[1,1],[0,1],[-1,1],[-1,0]]})"));
  CHECK(seven.size() == 128);
  for (const auto& row : seven) {
    if (!row["delta"].empty()) CHECK_FALSE(row["ample"].get<bool>());
  }

  auto table = invoke({"pair", "classify", dir.file("p2.json")});
  CHECK(table.code == 0);
  CHECK(occurrences(table.out, "\n* ") == 7);
  CHECK(table.out.find("8 supports, 7 ample") != std::string::npos);

  auto csv = invoke({"pair", "classify", dir.file("p2.json"), "--format", "csv"});
  CHECK(csv.out.rfind("fan,delta,ample,kleiman,witness\n", 0) == 0);
  CHECK(csv.out.find("\"(-1,-1,-1)\",\"{0,1,2}\",false,\"(0,0,0)\",0\n") !=
        std::string::npos);
  CHECK(occurrences(csv.out, "\n") == 9);
}

TEST_CASE("verify") {
  auto t2 = invoke({"verify", "t2"});
  CHECK(t2.code == 0);
  CHECK(t2.out.find("result: PASS") != std::string::npos);

  auto t3 = invoke({"verify", "t3", "--r-max", "20"});
  CHECK(t3.code == 0);
  CHECK(t3.out.find("verdicts checked: 336") != std::string::npos);

  auto t1 = invoke({"verify", "t1", "--rays", "5,6,7", "--gamma-bound", "6"});
  CHECK(t1.code == 0);
  CHECK(t1.out.find("fans examined: 56") != std::string::npos);
  CHECK(t1.out.find("max |gamma_i| <= 6") != std::string::npos);

  auto vol = invoke({"verify", "volumes", "--samples", "100", "--format", "json"});
  CHECK(vol.code == 0);
  CHECK(nlohmann::json::parse(vol.out)["pass"].get<bool>());

  CHECK(invoke({"verify", "t9"}).code == 2);
  CHECK(invoke({"verify", "t1", "--rays", "4"}).code == 2);
}

TEST_CASE("draw") {
  TempDir dir;
  const std::string p2 = dir.write("p2.json", kP2);
  const std::string svg = dir.file("p2.svg");
  auto r = invoke({"draw", p2, "--coeffs", "1,1,1", "--out", svg});
  REQUIRE(r.code == 0);
  const std::string first = slurp(svg);
  CHECK(occurrences(first, "class=\"ray\"") == 3);
  CHECK(occurrences(first, "<polygon class=\"polytope\"") == 1);
  for (const char* label : {">m_0<", ">m_1<", ">m_2<", ">u_0<", ">u_2<"}) {
    CHECK(first.find(label) != std::string::npos);
  }
  REQUIRE(invoke({"draw", p2, "--coeffs", "1,1,1", "--out", svg}).code == 0);
  CHECK(slurp(svg) == first);
  CHECK(first == slurp(std::string(TORICDP_GOLDEN_DIR) + "/p2_anticanonical.svg"));

  const std::string f2svg = dir.file("f2.svg");
  REQUIRE(invoke({"draw", dir.write("f2.json", kF2), "--out", f2svg}).code == 0);
  const std::string f2 = slurp(f2svg);
  CHECK(occurrences(f2, "class=\"ray\"") == 4);
  CHECK(f2.find("<polygon") == std::string::npos);
  CHECK(f2.find(">u_3<") != std::string::npos);

  auto bad = invoke({"draw", p2, "--coeffs", "0,0,0", "--out", dir.file("x.svg")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("witness 0") != std::string::npos);
  CHECK_FALSE(fs::exists(dir.file("x.svg")));
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"fan"}).code == 2);
  CHECK(invoke({"pair", "classify"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
