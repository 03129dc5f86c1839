#include "hll/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hll/eigenspace.hpp"
#include "hll/params.hpp"
#include "hll/quadrature.hpp"
#include "hll/radial.hpp"
#include "hll/report.hpp"
#include "hll/transform.hpp"

namespace hll {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridSpec {
  int n_r = 0;
  int n_theta = 0;
  double r_max = 0.0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw UsageError("cannot parse " + what + " from '" + s + "'");
  return v;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "'");
  }
  if (used != s.size() || v < 0 || v > 1000000) throw UsageError("cannot parse " + what + " from '" + s + "'");
  return static_cast<int>(v);
}

GridSpec parse_grid(const std::string& s, bool allow_full_disk) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw UsageError("grid must be n_r:n_theta:r_max, got '" + s + "'");
  GridSpec g{to_int(parts[0], "n_r"), to_int(parts[1], "n_theta"), to_double(parts[2], "r_max")};
  const bool r_ok = g.r_max > 0.0 && (g.r_max < 1.0 || (allow_full_disk && g.r_max == 1.0));
  if (g.n_r < 4 || g.n_theta < 4 || !r_ok) {
    throw UsageError(std::string("grid needs n_r, n_theta >= 4 and 0 < r_max ") + (allow_full_disk ? "<= 1" : "< 1"));
  }
  return g;
}

std::pair<int, int> parse_k_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int k = to_int(s, "k");
    return {k, k};
  }
  const int lo = to_int(s.substr(0, dots), "k range start");
  const int hi = to_int(s.substr(dots + 2), "k range end");
  if (hi < lo) throw UsageError("empty k range '" + s + "'");
  return {lo, hi};
}

RadialFunction parse_input(const std::string& spec, const ModelParams& params) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("input must be psi:k, combo:c0,c1,... or powerexp:a,b");
  const std::string kind = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');
  if (kind == "psi") {
    if (args.size() != 1) throw UsageError("psi input takes one index");
    return psi_input(params, to_int(args[0], "psi index"));
  }
  if (kind == "combo") {
    std::vector<double> c;
    for (const auto& a : args) c.push_back(to_double(a, "combo coefficient"));
    return combo_input(params, c);
  }
  if (kind == "powerexp") {
    if (args.size() != 2) throw UsageError("powerexp input takes a,b");
    return powerexp_input(to_double(args[0], "power a"), to_double(args[1], "rate b"));
  }
  throw UsageError("unknown input kind '" + kind + "'");
}

// Writes to `path`, or to `out` when the path is empty.
template <class Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

struct Options {
  double nu = 3.5;
  int m = 0;
  bool m_given = false;
  std::string k = "0";
  std::string grid;
  int quad_order = 128;
  std::vector<std::string> tol;
  std::string out;
  std::string suite = "all";
  std::string input;
  double alpha = 0.0;
};

int cmd_basis(const Options& o, std::ostream& out) {
  const ModelParams p = make_params(o.nu, o.m);
  const GridSpec g = parse_grid(o.grid.empty() ? "200:256:0.999" : o.grid, false);
  const auto [lo, hi] = parse_k_range(o.k);
  const PolarGrid grid = PolarGrid::uniform(g.n_r, g.n_theta, g.r_max);
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);
  for (int k = lo; k <= hi; ++k) {
    const std::filesystem::path file = dir / ("basis_m" + std::to_string(o.m) + "_k" + std::to_string(k) + ".csv");
    emit(file.string(), out, [&](std::ostream& s) { write_csv(s, basis_field(p, k, grid)); });
    out << file.string() << '\n';
  }
  return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  const ModelParams p = make_params(o.nu, o.m);
  if (o.input.empty()) throw UsageError("transform needs --input");
  const RadialFunction input = parse_input(o.input, p);
  check_admissible(input.decay());
  check_decay(input);
  const GridSpec g = parse_grid(o.grid.empty() ? "200:256:0.999" : o.grid, false);
  const TransformRequest req{p, input, PolarGrid::uniform(g.n_r, g.n_theta, g.r_max), o.quad_order};
  const TransformResult res = bargmann_transform(req);
  emit(o.out, out, [&](std::ostream& s) { write_csv(s, res.field); });

  const DiskRule rule = disk_rule(p, 48, 96);
  const GridField image = transform_on_rule(p, input, rule, o.quad_order);
  const double in_norm = std::sqrt(l2_inner(input, input, o.quad_order));
  const double out_norm = std::sqrt(inner_product(rule, image.values, image.values).real());
  std::ostringstream line;
  line << std::scientific << std::setprecision(9) << "norms input=" << in_norm << " output=" << out_norm
       << " max_order_change=" << res.max_order_change << " unconverged=" << res.unconverged.size() << '\n';
  (o.out.empty() ? err : out) << line.str();
  return res.unconverged.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig config;
  config.nu = o.nu;
  if (o.m_given) config.m = o.m;
  if (!o.grid.empty()) {
    const GridSpec g = parse_grid(o.grid, true);
    config.disk_n_r = g.n_r;
    config.disk_n_theta = g.n_theta;
    config.disk_r_max = g.r_max;
  }
  config.quad_order = o.quad_order;
  for (const auto& t : o.tol) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + t + "'");
    const double value = to_double(t.substr(eq + 1), "tolerance");
    if (!(value > 0.0)) throw UsageError("tolerance for '" + t.substr(0, eq) + "' must be positive");
    config.tolerances[t.substr(0, eq)] = value;
  }
  const auto rows = run_suite(o.suite, config);
  emit(o.out, out, [&](std::ostream& s) { write_report(s, rows); });
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_rule(const Options& o, std::ostream& out) {
  if (!(o.alpha > -1.0)) throw UsageError("rule needs --alpha > -1");
  if (o.quad_order < 1) throw UsageError("rule needs --quad-order >= 1");
  const HalfLineRule rule = gauss_laguerre(o.alpha, o.quad_order);
  emit(o.out, out, [&](std::ostream& s) { write_rule_csv(s, rule); });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized second Bargmann transforms for hyperbolic Landau levels", "hll"};
  app.require_subcommand(1);
  Options o;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--nu", o.nu, "field strength, > 1/2")->capture_default_str();
    cmd->add_option("--m", o.m, "Landau level index")->capture_default_str();
  };
  auto* basis = app.add_subcommand("basis", "write orthonormal basis functions on a polar grid");
  add_model(basis);
  basis->add_option("--k", o.k, "index or range a..b")->capture_default_str();
  basis->add_option("--grid", o.grid, "n_r:n_theta:r_max (default 200:256:0.999)");
  basis->add_option("--out", o.out, "output directory (default .)");

  auto* transform = app.add_subcommand("transform", "transform a built-in input onto a polar grid");
  add_model(transform);
  transform->add_option("--input", o.input, "psi:k | combo:c0,c1,... | powerexp:a,b")->required();
  transform->add_option("--grid", o.grid, "n_r:n_theta:r_max (default 200:256:0.999)");
  transform->add_option("--quad-order", o.quad_order, "half-line rule order")->capture_default_str();
  transform->add_option("--out", o.out, "output CSV (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite and write a check report");
  add_model(verify);
  verify->add_option("--suite", o.suite, "specfun | eigenspace | coherent | transform | all")->capture_default_str();
  verify->add_option("--grid", o.grid, "disk rule n_r:n_theta:r_max, r_max = 1 for the full disk (default 32:64:1)");
  verify->add_option("--quad-order", o.quad_order, "half-line rule order")->capture_default_str();
  verify->add_option("--tol", o.tol, "tolerance override name=value (repeatable)");
  verify->add_option("--out", o.out, "report CSV (default stdout)");

  auto* rule = app.add_subcommand("rule", "export a generalized Gauss-Laguerre rule");
  rule->add_option("--alpha", o.alpha, "weight exponent")->required();
  rule->add_option("--quad-order", o.quad_order, "number of nodes")->capture_default_str();
  rule->add_option("--out", o.out, "output CSV (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (auto* cmd : {basis, transform, verify}) {
      if (cmd->parsed() && cmd->count("--m") > 0) o.m_given = true;
    }
    if (basis->parsed()) return cmd_basis(o, out);
    if (transform->parsed()) return cmd_transform(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_rule(o, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace hll
