#include "sgas/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sgas/acceptance.hpp"
#include "sgas/averages.hpp"
#include "sgas/ensembles.hpp"
#include "sgas/errors.hpp"
#include "sgas/exact.hpp"
#include "sgas/fisherhartwig.hpp"
#include "sgas/orbitals.hpp"
#include "sgas/specfun.hpp"

namespace sgas {

namespace {

constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

Json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

struct Settings {
  std::string format = "csv";
  std::string out;
  int threads = 1;
  std::uint64_t seed = 42;

  int n = 14;
  int m = 2;
  int m_samples = 5000;
  int count = 10;
  int j_max = 8;
  int sweeps = 510;
  double q = 0.5;
  double t = 0.7;
  double x = 0.2;
  double y = 0.8;
  double a = 0.0;
  double b = 0.0;
  double lambda1 = 0.5;
  double lambda2 = 0.5;
  double length = 1.0;
  double phi = 0.0;
  std::string boundary = "dirichlet";
  std::string sampler = "recurrence";
  std::vector<int> sizes{8, 16, 32, 48};
  std::vector<double> h;
  std::vector<double> g;
  std::vector<double> xs;
  std::vector<int> only;
};

int default_threads() {
  if (const char* env = std::getenv("SELBERG_GAS_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Boundary parse_boundary(const std::string& s) {
  if (s == "dirichlet") return Boundary::Dirichlet;
  if (s == "neumann") return Boundary::Neumann;
  throw DomainError("boundary must be dirichlet or neumann");
}

struct Output {
  Json config;
  Table table;
  std::vector<std::string> notes;
};

void emit(const Output& o, const Settings& s, std::ostream& os) {
  if (s.format == "json") {
    Json doc;
    doc["config"] = o.config;
    Json results = Json::array();
    for (const auto& row : o.table.rows) {
      Json r;
      for (std::size_t c = 0; c < row.size(); ++c) r[o.table.columns[c]] = json_cell(row[c]);
      results.push_back(r);
    }
    doc["results"] = results;
    if (!o.notes.empty()) doc["notes"] = o.notes;
    doc["provenance"] = {{"seed", s.seed}, {"version", kVersion}};
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# sgas " << kVersion << " seed=" << s.seed << '\n';
  os << "# config " << o.config.dump() << '\n';
  for (const auto& note : o.notes) os << "# " << note << '\n';
  for (std::size_t c = 0; c < o.table.columns.size(); ++c) os << (c ? "," : "") << o.table.columns[c];
  os << '\n';
  for (const auto& row : o.table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
    os << '\n';
  }
}

Output cmd_table1(const Settings& s) {
  Output o;
  const std::vector<double> xs = s.xs.empty() ? table1_positions() : s.xs;
  o.config = {{"command", "table1"}, {"n", s.n}, {"m_samples", s.m_samples}, {"seed", s.seed}, {"x", xs}};
  o.table.columns = {"X", "mc", "std_error", "asymptote", "ratio", "exact_ratio"};
  for (const auto& r : density_matrix_table(s.n, s.m_samples, s.seed, s.threads, xs)) {
    o.table.rows.push_back({r.X, r.mc, r.std_error, r.asymptote, r.ratio, r.exact_ratio});
  }
  return o;
}

Output cmd_dm_mc(const Settings& s) {
  Output o;
  o.config = {{"command", "dm-mc"}, {"n", s.n},         {"x", s.x},       {"y", s.y},
              {"length", s.length}, {"boundary", s.boundary}, {"m_samples", s.m_samples}, {"seed", s.seed}};
  const DensityMatrixQuery q{s.n, s.length, s.x, s.y, parse_boundary(s.boundary)};
  const MCEstimate e = mc_density_matrix(q, s.m_samples, s.seed, s.threads);
  o.table.columns = {"value", "std_error", "m_samples", "master_seed", "resamples", "tuning_warnings"};
  o.table.rows.push_back({e.value, e.std_error, static_cast<long long>(e.m_samples),
                          std::to_string(e.master_seed), static_cast<long long>(e.resamples),
                          static_cast<long long>(e.tuning_warnings)});
  return o;
}

Output cmd_dm_asym(const Settings& s) {
  Output o;
  o.config = {{"command", "dm-asym"}, {"n", s.n}, {"x", s.x}, {"y", s.y}, {"length", s.length}};
  const DensityMatrixQuery q{s.n, s.length, s.x, s.y, Boundary::Dirichlet};
  o.table.columns = {"X", "Y", "rho", "asymptote"};
  o.table.rows.push_back({s.x, s.y, q.rho(), density_matrix_asymptote(q)});
  return o;
}

Output cmd_orbitals(const Settings& s) {
  Output o;
  o.config = {{"command", "orbitals"}, {"j_max", s.j_max}, {"n", s.n}, {"length", s.length}};
  o.table.columns = {"j", "occupation", "scaled_occupation", "normalization"};
  for (const auto& e : orbital_spectrum(s.j_max, s.n, s.length)) {
    o.table.rows.push_back({static_cast<long long>(e.j), e.occupation, e.scaled_occupation, e.normalization});
  }
  return o;
}

Output cmd_duality(const Settings& s) {
  Output o;
  o.config = {{"command", "duality-check"}, {"n", s.n}, {"m", s.m}, {"t", s.t},
              {"lambda1", s.lambda1}, {"lambda2", s.lambda2}};
  const DualityCase c{s.n, s.m, s.t, EnsembleParams{s.n, s.lambda1, s.lambda2, 1.0}};
  const double lhs = duality_lhs(c);
  const std::complex<double> rhs = duality_rhs_complex(c);
  o.table.columns = {"lhs", "rhs", "rhs_imag", "relative_gap", "log_A"};
  o.table.rows.push_back({lhs, rhs.real(), rhs.imag(), std::fabs(lhs - rhs.real()) / std::fabs(lhs),
                          duality_constant_A(c.params, s.m).log_abs});
  return o;
}

Output cmd_selberg(const Settings& s) {
  Output o;
  o.config = {{"command", "selberg"}, {"n", s.n}, {"lambda1", s.lambda1}, {"lambda2", s.lambda2}};
  const LogMagnitude v = selberg_closed(s.n, s.lambda1, s.lambda2);
  o.table.columns = {"n", "lambda1", "lambda2", "log_value", "value"};
  o.table.rows.push_back({static_cast<long long>(s.n), s.lambda1, s.lambda2, v.log_abs, v.value()});
  return o;
}

Output cmd_morris(const Settings& s) {
  Output o;
  o.config = {{"command", "morris"}, {"n", s.n}, {"a", s.a}, {"b", s.b}};
  const LogMagnitude v = morris_closed({s.n, s.a, s.b});
  o.table.columns = {"n", "a", "b", "log_value", "sign", "value"};
  o.table.rows.push_back({static_cast<long long>(s.n), s.a, s.b, v.log_abs, static_cast<long long>(v.sign), v.value()});
  return o;
}

void drift_rows(Output& o, const DriftReport& rep) {
  o.table.columns = {"n", "exact_log", "predicted_log", "delta"};
  for (const auto& r : rep.rows) o.table.rows.push_back({static_cast<long long>(r.n), r.exact_log, r.predicted_log, r.delta});
  o.notes.push_back(std::string("abs(delta) decreasing over last three sizes: ") + (rep.decreasing_last3 ? "yes" : "no"));
  o.notes.push_back("final abs(delta): " + format_double(rep.final_abs));
}

Output cmd_fh_jacobi(const Settings& s) {
  Output o;
  o.config = {{"command", "fh-jacobi"}, {"sizes", s.sizes}, {"q", s.q},
              {"y", s.y}, {"lambda1", s.lambda1}, {"lambda2", s.lambda2}, {"h", s.h}};
  const EnsembleParams p{1, s.lambda1, s.lambda2, 1.0};
  SymbolSpec sym{s.h, {}, {}};
  if (s.q > 0.0) sym.singularities.push_back({s.y, s.q});
  std::vector<std::pair<int, double>> exact;
  std::vector<double> pred;
  for (int n : s.sizes) {
    exact.emplace_back(n, jacobi_fh_exact_log(p, sym, n));
    pred.push_back(jacobi_fh_asymptote(p, sym, n));
  }
  drift_rows(o, fh_drift_report(exact, pred));
  return o;
}

Output cmd_fh_toeplitz(const Settings& s) {
  Output o;
  o.config = {{"command", "fh-toeplitz"}, {"sizes", s.sizes}, {"a", s.a}, {"phi", s.phi}, {"g", s.g}};
  SymbolSpec sym{{}, s.g, {}};
  if (s.a > 0.0) sym.singularities.push_back({s.phi, s.a});
  std::vector<std::pair<int, double>> exact;
  std::vector<double> pred;
  for (int n : s.sizes) {
    exact.emplace_back(n, toeplitz_determinant(sym, n).log_abs);
    pred.push_back(toeplitz_fh_asymptote(sym, n));
  }
  drift_rows(o, fh_drift_report(exact, pred));
  return o;
}

Output cmd_sample(const Settings& s) {
  Output o;
  o.config = {{"command", "sample-jue"}, {"n", s.n},       {"count", s.count},     {"seed", s.seed},
              {"sampler", s.sampler},    {"lambda1", s.lambda1}, {"lambda2", s.lambda2}, {"sweeps", s.sweeps}};
  if (s.sampler != "recurrence" && s.sampler != "metropolis") throw DomainError("sampler must be recurrence or metropolis");
  o.table.columns = {"sample", "index", "x"};
  for (int k = 0; k < s.count; ++k) {
    RandomSource rng(RngStream{s.seed, static_cast<std::uint64_t>(k)});
    const EigenvalueSample e = s.sampler == "recurrence"
                                   ? sample_jue_halfhalf(s.n, rng)
                                   : sample_jue_metropolis(EnsembleParams{s.n, s.lambda1, s.lambda2, 1.0}, s.sweeps, rng);
    for (std::size_t i = 0; i < e.points.size(); ++i) {
      o.table.rows.push_back({static_cast<long long>(k), static_cast<long long>(i), e.points[i]});
    }
  }
  return o;
}

Output cmd_validate(const Settings& s, bool& all_passed) {
  Output o;
  o.config = {{"command", "validate"}, {"seed", s.seed}, {"only", s.only}};
  AcceptanceOptions opt;
  opt.threads = s.threads;
  opt.seed = s.seed;
  opt.only = s.only;
  const auto results = run_acceptance(opt);
  o.table.columns = {"criterion", "name", "passed", "detail"};
  all_passed = true;
  for (const auto& r : results) {
    std::cerr << format_result(r) << '\n';
    all_passed = all_passed && r.passed;
    o.table.rows.push_back({static_cast<long long>(r.id), r.name, std::string(r.passed ? "true" : "false"), r.detail});
  }
  return o;
}

}  // namespace

int run_cli(int argc, char** argv) {
  Settings s;
  s.threads = default_threads();
  CLI::App app{"Selberg-integral and log-gas numerics for hard-core bosons in a box"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", s.out, "Write output to this file instead of stdout");
  app.add_option("--threads", s.threads, "Worker threads (default: SELBERG_GAS_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Master seed for Monte Carlo runs");

  auto* table1 = app.add_subcommand("table1", "Monte Carlo density matrix against the large-N formula");
  table1->add_option("--n", s.n, "N (the gas has N+1 particles)");
  table1->add_option("--m-samples", s.m_samples, "Monte Carlo samples");
  table1->add_option("--x", s.xs, "X positions (default 0.025, 0.075, ..., 0.475)");

  auto* dm_mc = app.add_subcommand("dm-mc", "Monte Carlo density matrix at (X, Y)");
  dm_mc->add_option("--n", s.n, "N");
  dm_mc->add_option("--x", s.x, "X in (0,1)");
  dm_mc->add_option("--y", s.y, "Y in (0,1)");
  dm_mc->add_option("--length", s.length, "Box length L");
  dm_mc->add_option("--boundary", s.boundary, "dirichlet or neumann")->check(CLI::IsMember({"dirichlet", "neumann"}));
  dm_mc->add_option("--m-samples", s.m_samples, "Monte Carlo samples");

  auto* dm_asym = app.add_subcommand("dm-asym", "Large-N density matrix formula");
  dm_asym->add_option("--n", s.n, "N");
  dm_asym->add_option("--x", s.x, "X in (0,1)");
  dm_asym->add_option("--y", s.y, "Y in (0,1)");
  dm_asym->add_option("--length", s.length, "Box length L");

  auto* orb = app.add_subcommand("orbitals", "Natural orbital occupations");
  orb->add_option("--j-max", s.j_max, "Largest orbital index");
  orb->add_option("--n", s.n, "N");
  orb->add_option("--length", s.length, "Box length L");

  auto* dual = app.add_subcommand("duality-check", "Both sides of the Jacobi/circular duality");
  dual->add_option("--n", s.n, "Jacobi dimension");
  dual->add_option("--m", s.m, "Power (even)");
  dual->add_option("--t", s.t, "Insertion point");
  dual->add_option("--lambda1", s.lambda1, "Exponent at 0");
  dual->add_option("--lambda2", s.lambda2, "Exponent at 1");

  auto* sel = app.add_subcommand("selberg", "Selberg integral S_n(lambda1, lambda2, 1)");
  sel->add_option("--n", s.n, "Dimension");
  sel->add_option("--lambda1", s.lambda1, "Exponent at 0");
  sel->add_option("--lambda2", s.lambda2, "Exponent at 1");

  auto* mor = app.add_subcommand("morris", "Morris integral M_n(a, b, 1)");
  mor->add_option("--n", s.n, "Dimension");
  mor->add_option("--a", s.a, "a");
  mor->add_option("--b", s.b, "b");

  auto* fhj = app.add_subcommand("fh-jacobi", "Hankel determinants against the Jacobi-weight Fisher-Hartwig form");
  fhj->add_option("--sizes", s.sizes, "Matrix sizes (at least four)");
  fhj->add_option("--q", s.q, "Charge at y (0 for none)");
  fhj->add_option("--y", s.y, "Singularity location in (0,1)");
  fhj->add_option("--lambda1", s.lambda1, "Exponent at 0");
  fhj->add_option("--lambda2", s.lambda2, "Exponent at 1");
  fhj->add_option("--h-coeffs", s.h, "Power coefficients of the smooth part h(x)");

  auto* fht = app.add_subcommand("fh-toeplitz", "Toeplitz determinants against the Fisher-Hartwig form");
  fht->add_option("--sizes", s.sizes, "Matrix sizes (at least four)");
  fht->add_option("--a", s.a, "Singularity strength (0 for none)");
  fht->add_option("--phi", s.phi, "Singularity angle in (-pi, pi]");
  fht->add_option("--g", s.g, "Fourier coefficients g_0, g_1, ... of the smooth part");

  auto* samp = app.add_subcommand("sample-jue", "Draw Jacobi ensemble configurations");
  samp->add_option("--n", s.n, "Points per configuration");
  samp->add_option("--count", s.count, "Number of configurations");
  samp->add_option("--sampler", s.sampler, "recurrence or metropolis")->check(CLI::IsMember({"recurrence", "metropolis"}));
  samp->add_option("--lambda1", s.lambda1, "Exponent at 0 (metropolis)");
  samp->add_option("--lambda2", s.lambda2, "Exponent at 1 (metropolis)");
  samp->add_option("--sweeps", s.sweeps, "Metropolis sweeps including burn-in");

  auto* val = app.add_subcommand("validate", "Run the acceptance criteria");
  val->add_option("--only", s.only, "Criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int status = 0;
  try {
    Output o;
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "table1") o = cmd_table1(s);
    else if (name == "dm-mc") o = cmd_dm_mc(s);
    else if (name == "dm-asym") o = cmd_dm_asym(s);
    else if (name == "orbitals") o = cmd_orbitals(s);
    else if (name == "duality-check") o = cmd_duality(s);
    else if (name == "selberg") o = cmd_selberg(s);
    else if (name == "morris") o = cmd_morris(s);
    else if (name == "fh-jacobi") o = cmd_fh_jacobi(s);
    else if (name == "fh-toeplitz") o = cmd_fh_toeplitz(s);
    else if (name == "sample-jue") o = cmd_sample(s);
    else {
      bool ok = true;
      o = cmd_validate(s, ok);
      status = ok ? 0 : 1;
    }
    if (s.out.empty()) {
      emit(o, s, std::cout);
    } else {
      std::ofstream f(s.out);
      if (!f) {
        std::cerr << "error: cannot open " << s.out << '\n';
        return 1;
      }
      emit(o, s, f);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const EvaluationError& e) {
    std::cerr << "numerical failure: " << e.what() << " (best estimate " << format_double(e.best_estimate())
              << ", gap " << format_double(e.gap()) << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  }
  return status;
}

}  // namespace sgas
