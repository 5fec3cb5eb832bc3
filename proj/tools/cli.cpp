#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <boost/version.hpp>
#include <mpfr.h>
#include <nlohmann/json.hpp>

#include "lagasym/asymptotics.hpp"
#include "lagasym/conformal.hpp"
#include "lagasym/equilibrium.hpp"
#include "lagasym/error.hpp"
#include "lagasym/fredholm.hpp"
#include "lagasym/kernels.hpp"
#include "lagasym/mrs.hpp"
#include "lagasym/oracle.hpp"
#include "lagasym/parallel.hpp"
#include "lagasym/version.hpp"
#include "lagasym/weight.hpp"

namespace lagasym::cli {

using json = nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

[[noreturn]] void bad_flag(const std::string& msg) {
  throw Error(Errc::invalid_config, "cli.run", msg);
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    bad_flag("not a number: '" + s + "'");
  }
  if (used != s.size()) bad_flag("not a number: '" + s + "'");
  return v;
}

}  // namespace

std::complex<double> parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) bad_flag("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s), 0.0};
  s.pop_back();
  // split at the last sign that is not an exponent sign or the leading sign
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (cut == std::string::npos) return {0.0, imag_part(s)};
  return {parse_real(s.substr(0, cut)), imag_part(s.substr(cut))};
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) bad_flag("grid must look like a:b:step");
  const double a = parse_real(parts[0]), b = parse_real(parts[1]), step = parse_real(parts[2]);
  if (!(step > 0.0) || !(b >= a) || !std::isfinite(a) || !std::isfinite(b))
    bad_flag("grid needs a <= b and step > 0");
  const long count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
  if (count > 100000) bad_flag("grid has too many points");
  std::vector<double> g;
  for (long k = 0; k < count; ++k) g.push_back(a + k * step);
  return g;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cli.read", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::io, "cli.read", "cannot read '" + path + "'");
  return ss.str();
}

json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_config, "cli.read", "'" + path + "' is not valid JSON: " + e.what());
  }
}

WeightSpec load_spec(const std::string& path) { return WeightSpec::from_json(read_json(path)); }

std::string config_hash(const WeightSpec& spec) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(spec.to_json().dump())));
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, "cli.write", "cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw Error(Errc::io, "cli.write", "cannot write '" + path + "'");
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : cols_(header.size()) { row(header); }
  void row(const std::vector<std::string>& cells) {
    if (cells.size() != cols_) throw std::logic_error("csv column mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) s_ << (i ? "," : "") << cells[i];
    s_ << '\n';
  }
  std::string str() const { return s_.str(); }

 private:
  std::size_t cols_;
  std::ostringstream s_;
};

std::string fd(double x) { return format_double(x); }

// Collects outputs of one command and writes the manifest next to the first.
struct Session {
  std::string command;
  std::vector<std::string> argv;
  std::optional<WeightSpec> spec;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::ostream* out;

  // Writes to `path`, or to stdout when path is empty.
  void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
      *out << content;
      return;
    }
    write_file(path, content);
    outputs.push_back(path);
  }

  void finish() {
    if (outputs.empty()) return;
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json m{{"command", command},
           {"argv", argv},
           {"config_hash", spec ? json(config_hash(*spec)) : json(nullptr)},
           {"versions", {{"lagasym", version},
                         {"boost", BOOST_LIB_VERSION},
                         {"mpfr", MPFR_VERSION_STRING},
                         {"compiler", __VERSION__}}},
           {"wall_time_s", wall},
           {"outputs", outputs}};
    write_file(outputs.front() + ".manifest.json", m.dump(2) + "\n");
  }
};

std::vector<std::complex<double>> parse_points(const std::string& arg) {
  std::vector<std::complex<double>> pts;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::stringstream ss(read_file(arg));
    bool first = true;
    for (std::string line; std::getline(ss, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> cells;
      std::stringstream ls(line);
      for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
      const bool numeric = !cells.empty() && (std::isdigit(static_cast<unsigned char>(cells[0][0])) ||
                                              cells[0][0] == '-' || cells[0][0] == '+' ||
                                              cells[0][0] == '.');
      if (first && !numeric) {  // header
        first = false;
        continue;
      }
      first = false;
      if (cells.size() == 1) {
        pts.push_back(parse_complex(cells[0]));
      } else if (cells.size() == 2) {
        pts.emplace_back(parse_real(cells[0]), parse_real(cells[1]));
      } else {
        bad_flag("points file rows need 're,im' or a single complex value");
      }
    }
  } else {
    std::stringstream ss(arg);
    for (std::string c; std::getline(ss, c, ',');) pts.push_back(parse_complex(c));
  }
  if (pts.empty()) bad_flag("no points given");
  return pts;
}

std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> ns;
  std::stringstream ss(s);
  for (std::string c; std::getline(ss, c, ',');) {
    const double v = parse_real(c);
    if (v != std::floor(v) || v < 1 || v > 100000) bad_flag("bad entry in n-list: '" + c + "'");
    ns.push_back(static_cast<int>(v));
  }
  if (ns.empty()) bad_flag("empty n-list");
  return ns;
}

// ---- subcommands ----------------------------------------------------------

struct MrsArgs {
  std::string config, out;
  long n = 0;
};

void cmd_mrs(Session& ses, const MrsArgs& a) {
  const WeightSpec spec = load_spec(a.config);
  ses.spec = spec;
  const MrsResult r = mrs_beta(spec, a.n);
  json j{{"n", a.n}, {"beta_n", r.beta_n}, {"residual", r.residual}, {"iterations", r.iterations}};
  ses.emit(a.out, j.dump(2) + "\n");
}

struct EquilibriumArgs {
  std::string config, out, csv;
  long n = 0;
  int samples = 0;
};

void cmd_equilibrium(Session& ses, const EquilibriumArgs& a) {
  const WeightSpec spec = load_spec(a.config);
  ses.spec = spec;
  const EquilibriumData eq = build_equilibrium(spec, a.n);
  json j{{"n", a.n},
         {"beta_n", eq.beta_n},
         {"v", eq.v.coeffs()},
         {"h", eq.h.coeffs()},
         {"H", eq.H.coeffs()},
         {"ell_n", eq.ell_n},
         {"mass", equilibrium_mass(eq)}};
  if (a.samples > 0 && a.csv.empty() && a.out.empty()) {
    // no file for the samples: inline them
    json xs = json::array(), ds = json::array();
    for (int i = 1; i <= a.samples; ++i) {
      const double x = static_cast<double>(i) / a.samples;
      xs.push_back(x);
      ds.push_back(density(eq, x));
    }
    j["samples"] = {{"x", xs}, {"density", ds}};
  }
  ses.emit(a.out, j.dump(2) + "\n");
  if (a.samples > 0 && !a.csv.empty()) {
    Csv c({"x [beta_n units]", "density [per beta_n unit]"});
    for (int i = 1; i <= a.samples; ++i) {
      const double x = static_cast<double>(i) / a.samples;
      c.row({fd(x), fd(density(eq, x))});
    }
    ses.emit(a.csv, c.str());
  }
}

struct EvalArgs {
  std::string config, out, what, points = "0", region = "auto";
  long n = 0;
  double delta = default_delta;
};

void cmd_eval(Session& ses, const EvalArgs& a) {
  const WeightSpec spec = load_spec(a.config);
  ses.spec = spec;
  const EquilibriumData eq = build_equilibrium(spec, a.n);
  Csv c({"z_re [beta_n units]", "z_im [beta_n units]", "region", "value_re", "value_im",
         "neglected_scale", "log_prefactor_re", "log_prefactor_im", "reduced_re", "reduced_im"});
  auto put = [&](std::complex<double> z, const std::string& region, const AsymptoticValue& v) {
    c.row({fd(z.real()), fd(z.imag()), region, fd(v.value.real()), fd(v.value.imag()),
           fd(v.neglected_scale), fd(v.log_prefactor.real()), fd(v.log_prefactor.imag()),
           fd(v.reduced.real()), fd(v.reduced.imag())});
  };
  if (a.what == "an" || a.what == "bn") {
    const RecurrenceAsym r = recurrence_asym(eq, a.n);
    put(0.0, "-", a.what == "an" ? r.a_n : r.b_nm1);
  } else if (a.what == "gamman") {
    put(0.0, "-", gamma_asym(spec, eq, a.n));
  } else if (a.what == "pn") {
    const auto pts = parse_points(a.points);
    std::optional<Region> fixed;
    if (a.region != "auto") fixed = parse_region(a.region);
    std::vector<AsymptoticValue> vals(pts.size());
    std::vector<Region> regs(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      const RegionTag tag = fixed ? RegionTag{*fixed, a.delta} : classify_region(pts[i], a.delta);
      regs[i] = tag.region;
      vals[i] = pn_asym(spec, eq, a.n, pts[i], tag);
    });
    for (std::size_t i = 0; i < pts.size(); ++i) put(pts[i], region_name(regs[i]), vals[i]);
  } else {
    bad_flag("--what must be one of an, bn, gamman, pn");
  }
  ses.emit(a.out, c.str());
}

struct OracleBuildArgs {
  std::string config, out;
  int nmax = 0;
  int digits = 50;
};

void cmd_oracle_build(Session& ses, const OracleBuildArgs& a) {
  const WeightSpec spec = load_spec(a.config);
  ses.spec = spec;
  if (a.out.empty()) bad_flag("oracle build needs --out");
  const OracleTable t = build_table(spec, a.nmax, a.digits);
  ses.emit(a.out, table_to_json(t).dump(1) + "\n");
}

OracleTable load_table(const std::string& path) { return table_from_json(read_json(path)); }

struct OracleEvalArgs {
  std::string table, out, points;
  int n = 0;
};

void cmd_oracle_eval(Session& ses, const OracleEvalArgs& a) {
  const OracleTable t = load_table(a.table);
  ses.spec = t.spec;
  const auto pts = parse_points(a.points);
  Csv c({"x_re", "x_im", "p_n_re", "p_n_im"});
  for (const auto& z : pts) {
    const auto p = eval_pn(t, a.n, z);
    c.row({fd(z.real()), fd(z.imag()), fd(p.real()), fd(p.imag())});
  }
  ses.emit(a.out, c.str());
}

struct CompareArgs {
  std::string mode, config, table, out, raw, n_list = "10,20,40,80";
  double bulk_x = 0.5;
};

void cmd_compare(Session& ses, const CompareArgs& a) {
  const std::vector<int> ns = parse_n_list(a.n_list);
  std::optional<WeightSpec> spec;
  if (!a.config.empty()) spec = load_spec(a.config);
  OracleTable table;
  if (!a.table.empty()) {
    table = load_table(a.table);
    if (spec && !(*spec == table.spec))
      bad_flag("--config does not match the weight stored in --table");
  } else {
    if (!spec) bad_flag("compare needs --config or --table");
    table = build_table(*spec, *std::max_element(ns.begin(), ns.end()));
  }
  ses.spec = table.spec;

  Csv summary({"mode", "n", "sup_error", "fitted_order", "fit_residual"});
  Csv raw({"mode", "n", "u_re", "u_im", "v_re", "v_im", "finite_re", "finite_im", "limit_re",
           "limit_im", "error"});

  if (a.mode == "recurrence") {
    const WeightSpec& sp = table.spec;
    std::vector<double> res_a, res_b, res_g, nn;
    struct Row { int n; double a_as, a_or, b_as, b_or, beta, g_rel, log_g_as, log_g_or; };
    std::vector<Row> rows;
    for (int n : ns) {
      if (n < 1 || n > table.n_max) bad_flag("n-list exceeds the oracle table");
      const EquilibriumData eq = build_equilibrium(sp, n);
      const RecurrenceAsym r = recurrence_asym(eq, n);
      const AsymptoticValue g = gamma_asym(sp, eq, n);
      const double lg_or = static_cast<double>(boost::multiprecision::log(table.gamma[n]));
      const double lg_as = g.log_prefactor.real();
      rows.push_back({n, r.a_n.value.real(), static_cast<double>(table.a[n]),
                      r.b_nm1.value.real(), static_cast<double>(table.b[n - 1]), eq.beta_n,
                      std::abs(std::expm1(lg_as - lg_or)), lg_as, lg_or});
      nn.push_back(n);
      res_a.push_back(std::abs(rows.back().a_as - rows.back().a_or) / eq.beta_n);
      res_b.push_back(std::abs(rows.back().b_as - rows.back().b_or) / eq.beta_n);
      res_g.push_back(rows.back().g_rel);
    }
    auto order = [&](const std::vector<double>& r) {
      for (double v : r)
        if (!(v > 0.0)) return std::pair<double, double>{NAN, NAN};
      return fit_loglog(nn, r);
    };
    const auto oa = order(res_a), ob = order(res_b), og = order(res_g);
    Csv c({"quantity", "n", "asymptotic", "oracle", "residual", "fitted_order"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      c.row({"a_n", std::to_string(r.n), fd(r.a_as), fd(r.a_or), fd(res_a[i]), fd(oa.first)});
      c.row({"b_n-1", std::to_string(r.n), fd(r.b_as), fd(r.b_or), fd(res_b[i]), fd(ob.first)});
      c.row({"log_gamma_n", std::to_string(r.n), fd(r.log_g_as), fd(r.log_g_or), fd(res_g[i]),
             fd(og.first)});
    }
    ses.emit(a.out, c.str());
    return;
  }

  std::vector<KernelRegime> regimes;
  if (a.mode == "kernel-bulk") regimes = {KernelRegime::bulk};
  else if (a.mode == "kernel-soft") regimes = {KernelRegime::soft};
  else if (a.mode == "kernel-hard") regimes = {KernelRegime::hard};
  else if (a.mode == "w-hard") regimes = {KernelRegime::w_I, KernelRegime::w_II, KernelRegime::w_III};
  else bad_flag("--mode must be kernel-bulk, kernel-soft, kernel-hard, w-hard or recurrence");

  CompareOptions opt;
  opt.bulk_x = a.bulk_x;
  for (KernelRegime reg : regimes) {
    const KernelComparison k = compare_limit(table, reg, ns, opt);
    for (std::size_t i = 0; i < ns.size(); ++i)
      summary.row({regime_name(reg), std::to_string(ns[i]), fd(k.sup_error[i]),
                   fd(k.fitted_order), fd(k.fit_residual)});
    for (const auto& s : k.samples)
      raw.row({regime_name(reg), std::to_string(s.n), fd(s.u.real()), fd(s.u.imag()),
               fd(s.v.real()), fd(s.v.imag()), fd(s.finite.real()), fd(s.finite.imag()),
               fd(s.limit.real()), fd(s.limit.imag()), fd(s.error)});
  }
  ses.emit(a.out, summary.str());
  if (!a.raw.empty()) ses.emit(a.raw, raw.str());
}

struct FredholmArgs {
  std::optional<double> alpha, gamma;
  std::string grid, out;
  bool painleve = false, cdf = false;
  int quad_order = 0;
};

void cmd_fredholm(Session& ses, const FredholmArgs& a) {
  double alpha;
  if (a.alpha && a.gamma) bad_flag("give either --alpha or --gamma, not both");
  if (a.gamma) {
    if (*a.gamma != std::floor(*a.gamma)) bad_flag("--gamma must be an integer");
    alpha = 0.5 * (*a.gamma - 1.0);
  } else if (a.alpha) {
    alpha = *a.alpha;
  } else {
    bad_flag("fredholm needs --alpha or --gamma");
  }
  if (!(alpha > -1.0)) throw Error(Errc::alpha_out_of_range, "cli.fredholm", "alpha must exceed -1");
  const std::vector<double> s = parse_grid(a.grid);
  struct Out { DeterminantResult d; double f = 0, cdf = 0; };
  std::vector<Out> rows(s.size());
  parallel_for(s.size(), [&](std::size_t i) {
    rows[i].d = a.quad_order > 0 ? fredholm_det_bessel(alpha, s[i], a.quad_order)
                                 : fredholm_det_bessel_auto(alpha, s[i]);
    if (a.painleve) rows[i].f = painleve_F(alpha, s[i]);
    if (a.cdf) rows[i].cdf = smallest_eig_cdf(alpha, s[i]);
  });
  std::vector<std::string> head{"s", "det", "est_error", "quad_order"};
  if (a.painleve) { head.push_back("painleve_F"); head.push_back("discrepancy"); }
  if (a.cdf) head.push_back("smallest_eig_cdf");
  Csv c(head);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& r = rows[i];
    std::vector<std::string> cells{fd(s[i]), fd(r.d.det), fd(r.d.est_error),
                                   std::to_string(r.d.quad_order)};
    if (a.painleve) { cells.push_back(fd(r.f)); cells.push_back(fd(std::abs(r.d.det - r.f))); }
    if (a.cdf) cells.push_back(fd(r.cdf));
    c.row(cells);
  }
  ses.emit(a.out, c.str());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotics of orthogonal polynomials for Laguerre-type weights"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version);

  MrsArgs mrs;
  auto* c_mrs = app.add_subcommand("mrs", "MRS number beta_n");
  c_mrs->add_option("--config", mrs.config, "weight JSON {\"alpha\":..,\"q\":[..]}")->required();
  c_mrs->add_option("--n", mrs.n)->required()->check(CLI::PositiveNumber);
  c_mrs->add_option("--out", mrs.out, "JSON output file (default stdout)");

  EquilibriumArgs eqa;
  auto* c_eq = app.add_subcommand("equilibrium", "equilibrium measure data");
  c_eq->add_option("--config", eqa.config)->required();
  c_eq->add_option("--n", eqa.n)->required()->check(CLI::PositiveNumber);
  c_eq->add_option("--samples", eqa.samples, "density samples at x = i/k")->check(CLI::NonNegativeNumber);
  c_eq->add_option("--out", eqa.out, "JSON output file");
  c_eq->add_option("--csv", eqa.csv, "CSV file for the density samples");

  EvalArgs ev;
  auto* c_ev = app.add_subcommand("eval", "asymptotic formulas");
  c_ev->add_option("--what", ev.what)->required()->check(CLI::IsMember({"an", "bn", "gamman", "pn"}));
  c_ev->add_option("--config", ev.config)->required();
  c_ev->add_option("--n", ev.n)->required()->check(CLI::PositiveNumber);
  c_ev->add_option("--points", ev.points, "CSV file or inline list like 0.5,2+1i (z in beta_n units)");
  c_ev->add_option("--region", ev.region)->check(CLI::IsMember({"auto", "A", "B", "C", "D"}));
  c_ev->add_option("--delta", ev.delta);
  c_ev->add_option("--out", ev.out, "CSV output file");

  auto* c_or = app.add_subcommand("oracle", "extended-precision ground truth");
  c_or->require_subcommand(1);
  OracleBuildArgs ob;
  auto* c_ob = c_or->add_subcommand("build", "build a recurrence table");
  c_ob->add_option("--config", ob.config)->required();
  c_ob->add_option("--nmax", ob.nmax)->required()->check(CLI::Range(1, 100));
  c_ob->add_option("--digits", ob.digits)->check(CLI::IsMember({50, 100}));
  c_ob->add_option("--out", ob.out)->required();
  OracleEvalArgs oe;
  auto* c_oe = c_or->add_subcommand("eval", "evaluate p_n from a table");
  c_oe->add_option("--table", oe.table)->required();
  c_oe->add_option("--n", oe.n)->required()->check(CLI::NonNegativeNumber);
  c_oe->add_option("--points", oe.points)->required();
  c_oe->add_option("--out", oe.out);

  CompareArgs cmp;
  auto* c_cmp = app.add_subcommand("compare", "finite-n versus limiting comparisons");
  c_cmp->add_option("--mode", cmp.mode)
      ->required()
      ->check(CLI::IsMember({"kernel-bulk", "kernel-soft", "kernel-hard", "w-hard", "recurrence"}));
  c_cmp->add_option("--config", cmp.config);
  c_cmp->add_option("--table", cmp.table);
  c_cmp->add_option("--n-list", cmp.n_list);
  c_cmp->add_option("--x", cmp.bulk_x, "bulk reference point in (0,1)");
  c_cmp->add_option("--out", cmp.out, "summary CSV");
  c_cmp->add_option("--raw", cmp.raw, "CSV of every grid point");

  FredholmArgs fr;
  auto* c_fr = app.add_subcommand("fredholm", "hard-edge Bessel determinant");
  auto* o_alpha = c_fr->add_option("--alpha", fr.alpha);
  c_fr->add_option("--gamma", fr.gamma, "weight exponent gamma, alpha = (gamma-1)/2")->excludes(o_alpha);
  c_fr->add_option("--s-grid", fr.grid, "a:b:step")->required();
  c_fr->add_flag("--check-painleve", fr.painleve);
  c_fr->add_flag("--cdf", fr.cdf, "also report 1 - det(I - J_{alpha,s^2})");
  c_fr->add_option("--quad-order", fr.quad_order, "fixed order (default: doubling from 40)")
      ->check(CLI::Range(10, 200));
  c_fr->add_option("--out", fr.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }

  Session ses;
  ses.out = &out;
  for (int i = 1; i < argc; ++i) ses.argv.emplace_back(argv[i]);
  try {
    if (*c_mrs) { ses.command = "mrs"; cmd_mrs(ses, mrs); }
    else if (*c_eq) { ses.command = "equilibrium"; cmd_equilibrium(ses, eqa); }
    else if (*c_ev) { ses.command = "eval"; cmd_eval(ses, ev); }
    else if (*c_ob) { ses.command = "oracle build"; cmd_oracle_build(ses, ob); }
    else if (*c_oe) { ses.command = "oracle eval"; cmd_oracle_eval(ses, oe); }
    else if (*c_cmp) { ses.command = "compare"; cmd_compare(ses, cmp); }
    else if (*c_fr) { ses.command = "fredholm"; cmd_fredholm(ses, fr); }
    ses.finish();
  } catch (const Error& e) {
    err << "lagasym: error in " << e.what() << "\n";
    if (is_config_error(e.code())) return exit_config;
    if (e.code() == Errc::io) return exit_io;
    return exit_numerical;
  } catch (const std::exception& e) {
    err << "lagasym: error: " << e.what() << "\n";
    return exit_numerical;
  }
  return exit_ok;
}

}  // namespace lagasym::cli
