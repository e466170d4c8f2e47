#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kTmp = ALPHAKIT_TEST_TMP;

int run(const std::string& args) {
  fs::create_directories(kTmp);
  const std::string cmd = std::string("\"") + ALPHAKIT_CLI_PATH + "\" " + args + " 2>\"" +
                          (kTmp / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_input(const std::string& name, const std::string& text) {
  fs::create_directories(kTmp);
  const auto p = kTmp / name;
  std::ofstream(p) << text;
  return p;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

const char* kIdentitySpectrum = R"({"alpha":0,"coeffs":{"1":[1,0]}})";
const char* kExtremalStep =
    R"({"type":"step","arcs":[{"phi":0,"theta":0},{"phi":1.0471975511965976,"theta":2.0943951023931953},)"
    R"({"phi":3.141592653589793,"theta":4.1887902047863905},{"phi":5.235987755982989,"theta":0}]})";

}  // namespace

TEST_CASE("eval on the identity spectrum") {
  const auto in = write_input("id.json", kIdentitySpectrum);
  const auto out = kTmp / "id.csv";
  fs::remove(out);
  REQUIRE(run("eval --input " + q(in) + " --points 0.3,0 --out " + q(out)) == 0);
  const auto csv = slurp(out);
  CHECK(csv == "point_re,point_im,u_re,u_im,u_z_re,u_z_im,u_zbar_re,u_zbar_im,jacobian\n0.3,0,0.3,0,1,0,0,0,1\n");
  CHECK(run("eval --input " + q(in) + " --alpha 1 --points 0.3,0 --out " + q(out)) == 2);
}

TEST_CASE("eval on the extremal step vanishes at the origin") {
  const auto in = write_input("ext.json", kExtremalStep);
  const auto out = kTmp / "ext.csv";
  REQUIRE(run("eval --input " + q(in) + " --alpha 0 --points 0,0 0.5,0.2 --out " + q(out)) == 0);
  std::istringstream rows(slurp(out));
  std::string header, first;
  std::getline(rows, header);
  std::getline(rows, first);
  const double u_re = std::stod(first.substr(first.find(',', first.find(',') + 1) + 1));
  CHECK(std::abs(u_re) <= 1e-12);
  CHECK(run("eval --input " + q(in) + " --points 0,0 --out " + q(out)) == 2);  // boundary needs --alpha
  CHECK(run("eval --input " + q(in) + " --alpha 0 --points 0.96,0 --out " + q(out)) == 3);
}

TEST_CASE("input errors exit 2 and write nothing") {
  const auto bad = write_input("bad.json", "{\"alpha\":0,\"coeffs\":");
  const auto out = kTmp / "never.csv";
  fs::remove(out);
  CHECK(run("eval --input " + q(bad) + " --points 0.1,0 --out " + q(out)) == 2);
  CHECK_FALSE(fs::exists(out));
  const auto in = write_input("id.json", kIdentitySpectrum);
  CHECK(run("eval --input " + q(in) + " --points nonsense --out " + q(out)) == 2);
  CHECK(run("eval --input " + q(kTmp / "missing.json") + " --points 0,0 --out " + q(out)) == 2);
  CHECK(run("eval --input " + q(in) + " --points 0,0 --out " + q(kTmp / "no_dir" / "x.csv")) == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(run("frobnicate") == 2);
  const auto step = write_input("ext.json", kExtremalStep);
  CHECK(run("coeffs --input " + q(step) + " --alpha -1.5 --out " + q(out)) == 2);
  CHECK(run("render --input " + q(step) + " --alpha 0 --grid-n 8 --out " + q(kTmp / "r")) == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("coeffs dumps the spectrum of a boundary") {
  const auto in = write_input("ext.json", kExtremalStep);
  const auto out = kTmp / "coeffs.json";
  REQUIRE(run("coeffs --input " + q(in) + " --alpha 0.5 --k-trunc 8 --out " + q(out)) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["alpha"] == 0.5);
  CHECK(j["K"] == 8);
  CHECK(j["coeffs"].size() == 17);
  const double c1 = std::hypot(j["coeffs"]["1"][0].get<double>(), j["coeffs"]["1"][1].get<double>());
  CHECK(c1 == doctest::Approx(3.0 * std::sqrt(3.0) / (2.0 * 3.141592653589793)).epsilon(1e-13));
}

TEST_CASE("render writes byte-identical outputs on repeated runs") {
  const auto in = write_input("id_boundary.json", R"({"type":"trigpoly","coeffs":{"1":[1,0]}})");
  const auto a = kTmp / "render_a";
  const auto b = kTmp / "render_b";
  REQUIRE(run("render --input " + q(in) + " --alpha 0.5 --grid-n 32 --out " + q(a)) == 0);
  REQUIRE(run("render --input " + q(in) + " --alpha 0.5 --grid-n 32 --out " + q(b)) == 0);
  for (const char* suffix : {".csv", "_disk.ppm", "_scatter.ppm", ".json"}) {
    CAPTURE(suffix);
    const auto pa = fs::path(a.string() + suffix);
    const auto pb = fs::path(b.string() + suffix);
    REQUIRE(fs::exists(pa));
    CHECK(slurp(pa) == slurp(pb));
  }
  CHECK(slurp(a.string() + "_disk.ppm").rfind("P6\n32 32\n255\n", 0) == 0);
  const auto meta = nlohmann::json::parse(slurp(a.string() + ".json"));
  CHECK(meta["grid_n"] == 32);
  CHECK(meta["max_modulus"].get<double>() < 1.0);
}

TEST_CASE("verify report contract") {
  const auto out = kTmp / "verify.json";
  // The N cosine-series criterion cannot be met at 200 terms, so the default
  // run reports exactly that one hard failure.
  CHECK(run("verify --out " + q(out)) == 1);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["passed"] == false);
  std::vector<std::string> failed;
  bool saw_heinz = false;
  for (const auto& c : j["checks"]) {
    if (c["hard"] == true && c["passed"] == false) failed.push_back(c["name"]);
    if (c["name"] == "heinz_sharpness") {
      saw_heinz = true;
      CHECK(c["value"].get<double>() <= 1e-12);
    }
  }
  CHECK(saw_heinz);
  CHECK(failed == std::vector<std::string>{"n_fourier_expansion"});

  const auto loose = kTmp / "verify_loose.json";
  CHECK(run("verify --tol 1e-2 --out " + q(loose)) == 0);
  CHECK(nlohmann::json::parse(slurp(loose))["passed"] == true);
  CHECK(run("verify --alpha -1.5 --out " + q(loose)) == 2);
  const auto cfg = write_input("cfg.json", "[1,2]");
  CHECK(run("verify --config " + q(cfg) + " --out " + q(loose)) == 2);
}
