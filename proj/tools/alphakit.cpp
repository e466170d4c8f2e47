// alphakit: evaluate, render and verify alpha-harmonic mappings.
//
// Exit codes: 0 success, 1 a hard verification check failed, 2 malformed
// input or invalid parameters (nothing written), 3 domain or solver refusal.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphakit/alphamap.hpp"
#include "alphakit/boundary.hpp"
#include "alphakit/io.hpp"
#include "alphakit/render.hpp"
#include "alphakit/report.hpp"
#include "alphakit/specfun.hpp"
#include "alphakit/verify.hpp"

namespace {

using namespace alphakit;

constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

// Input problems detected before any computation.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct PendingFile {
  std::string path;
  std::string bytes;
};

// Outputs are collected first and written at the end so failed runs leave
// nothing behind. An empty path means stdout.
void write_all(const std::vector<PendingFile>& files) {
  for (const auto& f : files) {
    if (f.path.empty()) continue;
    const auto dir = std::filesystem::path(f.path).parent_path();
    if (!dir.empty() && !std::filesystem::is_directory(dir)) {
      throw InputError("cannot write '" + f.path + "': no such directory");
    }
  }
  for (const auto& f : files) {
    if (f.path.empty()) {
      std::cout << f.bytes;
      continue;
    }
    std::ofstream out(f.path, std::ios::binary | std::ios::trunc);
    out.write(f.bytes.data(), static_cast<std::streamsize>(f.bytes.size()));
  }
  std::cout.flush();
}

Complex parse_point(const std::string& token) {
  const auto comma = token.find(',');
  const std::string re = token.substr(0, comma);
  const std::string im = comma == std::string::npos ? "0" : token.substr(comma + 1);
  try {
    std::size_t used_re = 0, used_im = 0;
    const double x = std::stod(re, &used_re);
    const double y = std::stod(im, &used_im);
    if (used_re != re.size() || used_im != im.size()) throw std::invalid_argument(token);
    return {x, y};
  } catch (const std::exception&) {
    throw InputError("point '" + token + "' is not of the form re,im");
  }
}

AlphaParameter require_alpha(std::optional<double> alpha, const char* what) {
  if (!alpha) throw InputError(std::string(what) + " needs --alpha");
  return AlphaParameter(*alpha);
}

BoundaryFunction load_boundary(const std::string& path) {
  auto input = parse_map_input(read_file(path), 0.0);
  auto* b = std::get_if<BoundaryFunction>(&input);
  if (!b) throw InputError("'" + path + "' is not a boundary document");
  return std::move(*b);
}

EvalPolicy policy_from(std::optional<double> tol) {
  EvalPolicy p;
  if (tol) {
    if (!(*tol > 0.0 && *tol < 1.0)) throw InputError("--tol must be in (0, 1)");
    p.rel_tol = *tol;
  }
  return p;
}

SolverOptions solver_from(std::optional<double> r_max) {
  SolverOptions o;
  if (r_max) {
    if (!(*r_max > 0.0 && *r_max < 1.0)) throw InputError("--r-max must be in (0, 1)");
    o.r_max = *r_max;
  }
  return o;
}

struct Options {
  std::optional<double> alpha;
  std::string input;
  std::string out;
  std::string config;
  std::optional<int> grid_n;
  int k_trunc = 64;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> points;
  std::optional<double> r_max;
};

std::vector<PendingFile> cmd_eval(const Options& o) {
  const auto policy = policy_from(o.tol);
  const auto solver = solver_from(o.r_max);
  std::vector<Complex> points;
  for (const auto& t : o.points) points.push_back(parse_point(t));
  if (points.empty()) throw InputError("eval needs at least one --points entry");
  auto input = parse_map_input(read_file(o.input), o.alpha);

  std::string csv = "point_re,point_im,u_re,u_im,u_z_re,u_z_im,u_zbar_re,u_zbar_im,jacobian\n";
  if (auto* s = std::get_if<CoefficientSpectrum>(&input)) {
    if (o.alpha && *o.alpha != s->alpha().value()) throw InputError("--alpha conflicts with the spectrum's alpha");
  }
  std::optional<AlphaParameter> alpha;
  if (std::holds_alternative<BoundaryFunction>(input)) alpha = require_alpha(o.alpha, "boundary input");

  for (const auto& p : points) {
    const DiskPoint z(p);
    const MapEvaluation e = std::visit(
        [&](const auto& in) {
          if constexpr (std::is_same_v<std::decay_t<decltype(in)>, CoefficientSpectrum>) {
            return eval_series(in, z, policy);
          } else {
            return solve_dirichlet_eval(*alpha, in, z, policy, solver);
          }
        },
        input);
    for (double v : {p.real(), p.imag(), e.u.real(), e.u.imag(), e.u_z.real(), e.u_z.imag(),
                     e.u_zbar.real(), e.u_zbar.imag()}) {
      csv += format_double(v) + ',';
    }
    csv += format_double(e.jacobian) + '\n';
  }
  return {{o.out, std::move(csv)}};
}

std::vector<PendingFile> cmd_render(const Options& o) {
  const auto policy = policy_from(o.tol);
  SolverOptions solver = solver_from(o.r_max.value_or(0.99));
  const int grid_n = o.grid_n.value_or(256);
  if (grid_n < 16) throw InputError("render needs --grid-n >= 16");
  if (o.out.empty()) throw InputError("render needs --out PREFIX");
  const auto b = load_boundary(o.input);
  const auto alpha = require_alpha(o.alpha, "render");

  const auto r = render(alpha, b, grid_n, policy, solver);
  std::vector<Complex> image;
  for (const auto& s : r.samples) image.push_back(s.u);
  nlohmann::ordered_json summary;
  summary["alpha"] = alpha.value();
  summary["grid_n"] = grid_n;
  summary["r_max"] = solver.r_max;
  summary["samples"] = r.samples.size();
  summary["max_modulus"] = r.max_modulus;
  summary["hull"] = nlohmann::ordered_json::array();
  for (const auto& v : convex_hull(image)) summary["hull"].push_back({v.real(), v.imag()});
  return {{o.out + ".csv", grid_csv(r.samples)},
          {o.out + "_disk.ppm", r.disk.to_ppm()},
          {o.out + "_scatter.ppm", r.scatter.to_ppm()},
          {o.out + ".json", summary.dump(2) + '\n'}};
}

std::vector<PendingFile> cmd_coeffs(const Options& o) {
  const auto b = load_boundary(o.input);
  const auto alpha = require_alpha(o.alpha, "coeffs");
  if (o.k_trunc < 0) throw InputError("--k-trunc must be >= 0");
  return {{o.out, spectrum_to_json(spectrum_from_boundary(alpha, b, o.k_trunc)).dump(2) + '\n'}};
}

std::pair<std::vector<PendingFile>, bool> cmd_verify(const Options& o) {
  VerifyConfig cfg;
  if (!o.config.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(o.config));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed config: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    try {
      if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
      if (j.contains("rel_tol")) cfg.tol = j["rel_tol"].get<double>();
      if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
      if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("grid_n")) cfg.render_grid_n = j["grid_n"].get<int>();
      if (j.contains("r_max")) cfg.render_r_max = j["r_max"].get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad config field: ") + e.what());
    }
  }
  if (o.alpha) cfg.alpha = o.alpha;
  if (o.tol) cfg.tol = *o.tol;
  if (o.seed) cfg.seed = *o.seed;
  if (o.grid_n) cfg.render_grid_n = *o.grid_n;
  if (o.r_max) cfg.render_r_max = *o.r_max;
  if (cfg.alpha && !(std::isfinite(*cfg.alpha) && *cfg.alpha > -1.0)) {
    throw InputError("alpha must be finite and > -1");
  }
  if (!(cfg.tol >= 0.0 && cfg.tol < 1.0)) throw InputError("tolerance must be in [0, 1)");
  if (cfg.render_grid_n < 16) throw InputError("grid_n must be >= 16");
  static_cast<void>(solver_from(cfg.render_r_max));

  const auto report = run_verification(cfg);
  auto j = report.to_json();
  nlohmann::ordered_json config;
  config["alpha"] = cfg.alpha ? nlohmann::ordered_json(*cfg.alpha) : nlohmann::ordered_json(nullptr);
  config["tol"] = cfg.tol;
  config["seed"] = cfg.seed;
  config["grid_n"] = cfg.render_grid_n;
  config["r_max"] = cfg.render_r_max;
  j["config"] = std::move(config);
  return {{{o.out, j.dump(2) + '\n'}}, report.all_hard_passed()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate, render and verify alpha-harmonic mappings of the unit disk"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "Weight exponent, > -1");
    sub->add_option("--out", o.out, "Output path (stdout when omitted)");
    sub->add_option("--tol", o.tol, "Relative tolerance");
  };
  auto* eval = app.add_subcommand("eval", "Evaluate u, u_z, u_zbar and the Jacobian at points");
  add_common(eval);
  eval->add_option("--input", o.input, "Spectrum or boundary JSON")->required();
  eval->add_option("--points", o.points, "Points as re,im")->required();
  eval->add_option("--r-max", o.r_max, "Largest |z| for the boundary solver");

  auto* rend = app.add_subcommand("render", "Render a boundary's map as CSV and PPM images");
  add_common(rend);
  rend->add_option("--input", o.input, "Boundary JSON")->required();
  rend->add_option("--grid-n", o.grid_n, "Grid size (default 256)");
  rend->add_option("--r-max", o.r_max, "Grid radius (default 0.99)");

  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  add_common(ver);
  ver->add_option("--config", o.config, "JSON config: alpha, tol, seed, grid_n, r_max");
  ver->add_option("--seed", o.seed, "Random seed");
  ver->add_option("--grid-n", o.grid_n, "Render grid size for the hull check");
  ver->add_option("--r-max", o.r_max, "Render radius for the hull check");

  auto* coeffs = app.add_subcommand("coeffs", "Dump the coefficient spectrum of a boundary");
  add_common(coeffs);
  coeffs->add_option("--input", o.input, "Boundary JSON")->required();
  coeffs->add_option("--k-trunc", o.k_trunc, "Truncation K (default 64)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (o.alpha) {
      try {
        static_cast<void>(AlphaParameter(*o.alpha));
      } catch (const DomainError& e) {
        throw InputError(e.what());
      }
    }
    if (*ver) {
      auto [files, passed] = cmd_verify(o);
      write_all(files);
      return passed ? 0 : kExitCheckFailed;
    }
    std::vector<PendingFile> files;
    if (*eval) files = cmd_eval(o);
    else if (*rend) files = cmd_render(o);
    else files = cmd_coeffs(o);
    write_all(files);
    return 0;
  } catch (const InputError& e) {
    std::cerr << "alphakit: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "alphakit: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "alphakit: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "alphakit: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "alphakit: " << e.what() << '\n';
    return kExitInput;
  }
}
