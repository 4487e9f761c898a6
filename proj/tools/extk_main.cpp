#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "extk/grid_eval.hpp"
#include "extk/json_io.hpp"
#include "extk/moduli.hpp"
#include "extk/numcheck.hpp"
#include "extk/sampling.hpp"

namespace {

using extk::ojson;

struct CliConfig {
  extk::EvaluatorConfig eval{};
  extk::VerifyTolerances verify_tol{};
  int grid_n = 64;
  std::uint64_t seed = 1;
  std::string format = "json";
};

// shortest round-trip decimal rendering (used for CSV; JSON output goes
// through nlohmann, which already emits shortest representations)
std::string render(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit(const ojson& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

int usage_error(const std::string& msg) {
  ojson err{{"error", "usage"}, {"message", msg}};
  std::cerr << err.dump() << "\n";
  return 1;
}

double parse_finite(const std::string& text, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + ": not a number: " + text);
  }
  if (pos != text.size() || !std::isfinite(v))
    throw CLI::ValidationError(std::string(what) +
                               ": must be a finite decimal: " + text);
  return v;
}

std::complex<double> parse_z(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("z must be given as \"re,im\"");
  return {parse_finite(text.substr(0, comma), "z.re"),
          parse_finite(text.substr(comma + 1), "z.im")};
}

extk::GermSpec load_germ(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw CLI::ValidationError("cannot open germ file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return extk::germ_from_json_text(text);
}

CliConfig load_config() {
  CliConfig cfg;
  const char* path = std::getenv("EXTK_CONFIG");
  if (!path || !*path) return cfg;
  std::ifstream in(path);
  if (!in)
    throw CLI::ValidationError(std::string("EXTK_CONFIG unreadable: ") + path);
  ojson j = ojson::parse(in, nullptr, false);
  if (j.is_discarded())
    throw CLI::ValidationError("EXTK_CONFIG is not valid JSON");
  if (j.contains("quadrature_tol"))
    cfg.eval.quadrature.abs_tol = j["quadrature_tol"].get<double>();
  if (j.contains("root_max_iter"))
    cfg.eval.max_root_iter = j["root_max_iter"].get<int>();
  if (j.contains("verify")) {
    const auto& v = j["verify"];
    if (v.contains("curvature"))
      cfg.verify_tol.curvature = v["curvature"].get<double>();
    if (v.contains("holomorphy"))
      cfg.verify_tol.holomorphy = v["holomorphy"].get<double>();
    if (v.contains("model")) cfg.verify_tol.model = v["model"].get<double>();
  }
  if (j.contains("grid_n")) cfg.grid_n = j["grid_n"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();

  if (!(cfg.eval.quadrature.abs_tol > 0.0) ||
      !(cfg.verify_tol.curvature > 0.0) ||
      !(cfg.verify_tol.holomorphy > 0.0) || !(cfg.verify_tol.model > 0.0))
    throw CLI::ValidationError("EXTK_CONFIG tolerances must be positive");
  if (cfg.grid_n < 8)
    throw CLI::ValidationError("EXTK_CONFIG grid_n must be >= 8");
  if (cfg.format != "json" && cfg.format != "csv")
    throw CLI::ValidationError("EXTK_CONFIG format must be json or csv");
  return cfg;
}

// effective radius for germs whose metric extends over all of C
double finite_radius(double domain_radius) {
  return std::isfinite(domain_radius) ? domain_radius : 1.0;
}

ojson radius_json(double r) {
  if (std::isfinite(r)) return ojson(r);
  return ojson(nullptr);  // JSON cannot carry infinity
}

int cmd_classify(bool pretty, double C, double Cprime, double K0,
                 std::optional<double> lambda) {
  extk::GermSpec spec =
      lambda ? extk::make_exceptional(extk::make_cubic(C, Cprime), K0, *lambda)
             : extk::make_generic(extk::make_cubic(C, Cprime), K0);
  const extk::CubicParams cubic{C, Cprime};
  ojson out;
  out["spec"] = extk::to_json(spec);
  out["component"] = extk::component_name(extk::component_of(spec));
  if (const auto* e = std::get_if<extk::ExceptionalGerm>(&spec))
    out["sigma"] = e->sigma;
  out["discriminant"] = cubic.discriminant();
  out["root_structure"] = extk::to_json(extk::root_structure(cubic));
  out["hcmu"] = extk::to_json(extk::hcmu_class(spec));
  const extk::ModuliCoords coords =
      lambda ? extk::ModuliCoords{extk::exceptional_chart(spec)}
             : extk::ModuliCoords{extk::generic_chart(spec)};
  out["chart"] = extk::to_json(coords);
  emit(out, pretty);
  return 0;
}

int cmd_eval(const CliConfig& cfg, bool pretty, const std::string& germ_arg,
             const std::string& z_arg) {
  const extk::GermSpec spec = load_germ(germ_arg);
  const extk::GermEvaluator eval(spec, cfg.eval);
  const std::complex<double> z = parse_z(z_arg);
  const auto [k, density] = eval.curvature_density_at(z);
  if (cfg.format == "csv") {
    std::cout << "K,density,domain_radius\n"
              << render(k) << "," << render(density) << ","
              << (std::isfinite(eval.domain_radius())
                      ? render(eval.domain_radius())
                      : "inf")
              << "\n";
    return 0;
  }
  ojson out;
  out["K"] = k;
  out["density"] = density;
  out["domain_radius"] = radius_json(eval.domain_radius());
  emit(out, pretty);
  return 0;
}

int cmd_verify(const CliConfig& cfg, bool pretty, const std::string& germ_arg,
               int grid_n, double radius_frac, double h_frac,
               double perturbation) {
  if (!(radius_frac > 0.0 && radius_frac < 1.0))
    throw CLI::ValidationError("--radius-frac must lie in (0, 1)");
  if (!(h_frac > 0.0)) throw CLI::ValidationError("--h-frac must be positive");
  const extk::GermSpec spec = load_germ(germ_arg);
  const extk::GermEvaluator eval(spec, cfg.eval);
  const double radius = radius_frac * finite_radius(eval.domain_radius());
  extk::VerifyOptions opts;
  opts.n_points = grid_n;
  opts.h = h_frac * radius;
  opts.tol = cfg.verify_tol;
  opts.eval = cfg.eval;

  extk::VerificationReport report;
  if (perturbation != 0.0) {
    auto density = [&eval, perturbation](extk::complexd z) {
      return eval.density_at(z) * (1.0 + perturbation * z.real());
    };
    auto curvature = [&eval](extk::complexd z) { return eval.curvature_at(z); };
    report = extk::verify_fields(density, curvature,
                                 extk::model_gradient_field(spec), radius,
                                 opts);
  } else {
    report = extk::verify(spec, radius, opts);
  }
  emit(extk::to_json(report), pretty);
  return report.pass ? 0 : 2;
}

int cmd_sample(const CliConfig& cfg, const std::string& kind, int count,
               std::optional<std::uint64_t> seed_arg) {
  if (count < 1) throw CLI::ValidationError("--count must be >= 1");
  const std::uint64_t seed = seed_arg.value_or(cfg.seed);
  std::vector<extk::GermSpec> specs;
  if (kind == "generic")
    specs = extk::sample_generic_specs(count, seed);
  else if (kind == "exceptional")
    specs = extk::sample_exceptional_specs(count, seed);
  else
    throw CLI::ValidationError("--kind must be generic or exceptional");
  for (const auto& s : specs) std::cout << extk::to_json(s).dump() << "\n";
  return 0;
}

int cmd_grid(const CliConfig& cfg, const std::string& germ_arg, int n,
             double radius_frac, const std::string& out_path) {
  if (!(radius_frac > 0.0 && radius_frac < 1.0))
    throw CLI::ValidationError("--radius-frac must lie in (0, 1)");
  if (n < 1) throw CLI::ValidationError("--n must be >= 1");
  const extk::GermSpec spec = load_germ(germ_arg);
  const extk::GermEvaluator eval(spec, cfg.eval);
  const double radius = radius_frac * finite_radius(eval.domain_radius());
  const extk::GridResult grid = extk::evaluate_square_grid(eval, radius, n);

  std::ofstream out(out_path, std::ios::binary);  // binary keeps LF endings
  if (!out) return usage_error("cannot open output file: " + out_path);
  out << "re,im,K,density\n";
  const std::size_t total = static_cast<std::size_t>(n) * n;
  for (std::size_t idx = 0; idx < total; ++idx) {
    out << render(grid.re[idx]) << "," << render(grid.im[idx]) << ","
        << render(grid.K[idx]) << "," << render(grid.density[idx]) << "\n";
  }
  out.flush();
  if (!out) return usage_error("write failed: " + out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "construct, evaluate, classify and verify extremal metric germs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  auto* classify = app.add_subcommand(
      "classify",
      "validate (C, C', K0[, lambda]) and print its classification");
  std::string c_C, c_Cp, c_K0, c_lambda;
  classify->add_option("--C", c_C)->required();
  classify->add_option("--Cprime", c_Cp)->required();
  classify->add_option("--K0", c_K0)->required();
  classify->add_option("--lambda", c_lambda);

  auto* eval_cmd =
      app.add_subcommand("eval", "curvature and density at a point");
  std::string e_germ, e_z;
  eval_cmd->add_option("--germ", e_germ, "germ JSON (inline or file path)")
      ->required();
  eval_cmd->add_option("--z", e_z, "point as \"re,im\"")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "finite-difference verification report");
  std::string v_germ;
  int v_grid_n = -1;
  double v_radius_frac = 0.5;
  double v_h_frac = 1e-3;
  double v_perturb = 0.0;
  verify_cmd->add_option("--germ", v_germ)->required();
  verify_cmd->add_option("--grid-n", v_grid_n, "sample count (default config)");
  verify_cmd->add_option("--radius-frac", v_radius_frac,
                         "grid radius as a fraction of the guaranteed radius");
  verify_cmd->add_option("--h-frac", v_h_frac,
                         "step as a fraction of the grid radius");
#ifdef EXTK_TEST_HOOKS
  verify_cmd->add_option("--inject-perturbation", v_perturb,
                         "test hook: scale density by (1 + eps Re z)");
#endif

  auto* sample_cmd =
      app.add_subcommand("sample", "draw valid specs from the chart boxes");
  std::string s_kind;
  int s_count = 1;
  std::uint64_t s_seed = 0;
  sample_cmd->add_option("--kind", s_kind)->required();
  sample_cmd->add_option("--count", s_count);
  auto* seed_opt = sample_cmd->add_option("--seed", s_seed);

  auto* grid_cmd = app.add_subcommand("grid", "write a plot-ready CSV grid");
  std::string g_germ, g_out;
  int g_n = -1;
  double g_radius_frac = 0.9;
  grid_cmd->add_option("--germ", g_germ)->required();
  grid_cmd->add_option("--n", g_n, "points per axis (default config)");
  grid_cmd->add_option("--radius-frac", g_radius_frac);
  grid_cmd->add_option("--out", g_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << ojson{{"error", "usage"}, {"message", e.what()}}.dump()
              << "\n";
    return 1;
  }

  try {
    const CliConfig cfg = load_config();
    if (classify->parsed()) {
      std::optional<double> lambda;
      if (!c_lambda.empty()) lambda = parse_finite(c_lambda, "lambda");
      return cmd_classify(pretty, parse_finite(c_C, "C"),
                          parse_finite(c_Cp, "Cprime"),
                          parse_finite(c_K0, "K0"), lambda);
    }
    if (eval_cmd->parsed()) return cmd_eval(cfg, pretty, e_germ, e_z);
    if (verify_cmd->parsed())
      return cmd_verify(cfg, pretty, v_germ,
                        v_grid_n > 0 ? v_grid_n : cfg.grid_n, v_radius_frac,
                        v_h_frac, v_perturb);
    if (sample_cmd->parsed())
      return cmd_sample(cfg, s_kind, s_count,
                        seed_opt->count() > 0
                            ? std::optional<std::uint64_t>(s_seed)
                            : std::nullopt);
    if (grid_cmd->parsed())
      return cmd_grid(cfg, g_germ, g_n > 0 ? g_n : cfg.grid_n, g_radius_frac,
                      g_out);
    return usage_error("no subcommand given");
  } catch (const CLI::ValidationError& e) {
    return usage_error(e.what());
  } catch (const extk::DomainError& e) {
    ojson err{{"error", extk::to_string(e.code())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    // malformed input is a usage failure; everything else is a domain or
    // validation failure
    return e.code() == extk::error_code::invalid_argument ? 1 : 2;
  } catch (const std::exception& e) {
    return usage_error(std::string("unexpected error: ") + e.what());
  }
}
