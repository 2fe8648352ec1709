#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CURVLAB_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const std::string kData = CURVLAB_DATA_DIR;

}  // namespace

TEST_CASE("list and describe") {
  const Run l = run("list");
  CHECK(l.status == 0);
  for (const char* name : {"flat", "taub-nut", "taub-nut-r3", "kerr", "kerr-lorentzian", "kerr-conformal"})
    CHECK(l.out.find(name) != std::string::npos);
  const Run d = run("describe kerr --params alpha=0.3");
  CHECK(d.status == 0);
  CHECK(d.out.find("alpha=0.3") != std::string::npos);
}

TEST_CASE("verify exit codes follow the verdicts") {
  CHECK(run("verify taub-nut --checks hyper_kahler --samples 200 --seed 7").status == 0);
  const Run k = run("verify kerr --checks kahler --samples 200");
  CHECK(k.status == 1);
  CHECK(k.out.find("FAIL") != std::string::npos);
  CHECK(k.out.find("kahler_closed[J]") != std::string::npos);
  CHECK(run("verify kerr-conformal --checks kahler --samples 200").status == 0);
  CHECK(run("verify kerr-lorentzian --samples 50").status == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify nowhere").status == 2);
  CHECK(run("verify kerr --checks bogus").status == 2);
  CHECK(run("verify kerr --tol ricci_flat=-1").status == 2);
  CHECK(run("verify kerr --tol ricci_flat").status == 2);
  CHECK(run("verify kerr --params q=1").status == 2);
  CHECK(run("verify kerr --params alpha=3").status == 2);
  CHECK(run("verify kerr --format yaml").status == 2);
  CHECK(run("verify kerr --region r=0.1:1 --samples 5").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("JSON output is deterministic across worker counts") {
  const Run a = run("verify kerr --samples 150 --seed 3 --format json --workers 1");
  const Run b = run("verify kerr --samples 150 --seed 3 --format json --workers 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "curvlab-report/1");
  CHECK(j["seed"] == 3);
  CHECK(j["samples"] == 150);
}

TEST_CASE("tolerance and region flags reach the report") {
  const Run r = run("verify kerr --checks curvature --samples 50 --tol ricci_flat=1e-20 --format json");
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  bool seen = false;
  for (const auto& rec : j["records"])
    if (rec["check"] == "ricci_flat") {
      seen = true;
      CHECK(rec["verdict"] == "fail");
      CHECK(rec["tolerance"] == 1e-20);
    }
  CHECK(seen);
  const Run g = run("verify kerr --checks curvature --samples 30 --region r=5:6 --format json");
  CHECK(g.status == 0);
  for (const auto& rec : nlohmann::json::parse(g.out)["records"])
    if (rec["argmax_point"].is_array()) {
      CHECK(rec["argmax_point"][0].get<double>() >= 5.0);
      CHECK(rec["argmax_point"][0].get<double>() < 6.0);
    }
}

TEST_CASE("check-file") {
  CHECK(run("check-file " + kData + "/flat_r4.json --samples 100").status == 0);
  CHECK(run("check-file " + kData + "/kerr_euclidean.json --samples 100").status == 0);
  CHECK(run("check-file " + kData + "/kerr_euclidean.json --samples 100 --checks kahler").status == 1);
  CHECK(run("check-file " + kData + "/missing.json").status == 2);
  const std::string path = "curvlab_cli_bad_geometry.json";
  {
    std::ofstream f(path);
    f << "{\n  \"name\": \"bad\",\n  \"coordinates\": [\"x\", \"y\", \"z\", \"w\"],\n"
         "  \"metric\": [[\"si n(x)\", 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],\n"
         "  \"region\": {\"x\": [0, 1], \"y\": [0, 1], \"z\": [0, 1], \"w\": [0, 1]}\n}\n";
  }
  const Run bad = run("check-file " + path);
  CHECK(bad.status == 2);
  CHECK(bad.out.find("4:16") != std::string::npos);
  CHECK(bad.out.find("unknown identifier 'si'") != std::string::npos);
  std::remove(path.c_str());
}
