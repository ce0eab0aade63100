#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "qhurwitz/basis/determinant.hpp"
#include "qhurwitz/core/error.hpp"
#include "qhurwitz/hurwitz/weighted.hpp"
#include "qhurwitz/matrixmodel/matrix_integral.hpp"
#include "qhurwitz/mellin/contour.hpp"
#include "qhurwitz/tau/numeric_tau.hpp"
#include "qhurwitz/tau/series.hpp"
#include "qhurwitz/verify/suites.hpp"

namespace qhurwitz::cli {

namespace {

using nlohmann::ordered_json;
using numeric::Real;

struct Config {
  std::string q = "1/2";
  std::string beta = "-3/10";
  unsigned precision = 256;
  int nmax = -1;
  int order = -1;
  int dmax = 4;
  int d = -1;
  int k = 1;
  std::string mu;
  std::string profiles;
  std::string x;
  std::string format = "json";
  std::string out;
  std::string suite = "all";
  std::string contour;
  std::vector<std::string> flags;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, std::string> parse_flags(const std::vector<std::string>& flags) {
  std::map<std::string, std::string> m;
  for (const auto& f : flags) {
    auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--flag expects key=value, got '" + f + "'");
    m[f.substr(0, eq)] = f.substr(eq + 1);
  }
  return m;
}

std::string flag_or(const std::map<std::string, std::string>& f, const std::string& key, const std::string& def) {
  auto it = f.find(key);
  return it == f.end() ? def : it->second;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Real> parse_points(const std::string& text) {
  if (text.empty()) throw UsageError("--x is required");
  std::vector<Real> x;
  for (const auto& t : split(text, ',')) x.push_back(numeric::to_real(basis::parse_rational(t)));
  return x;
}

std::string num(const Real& v, int digits) { return numeric::to_string(v, digits); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(r[i]);
    os << "\n";
  }
  return os.str();
}

ordered_json schema() {
  ordered_json j;
  j["schema"] = 1;
  return j;
}

struct Output {
  std::string text;
  int code = 0;
};

hurwitz::PureMethod method_from(const std::map<std::string, std::string>& f) {
  std::string m = flag_or(f, "method", "character");
  if (m == "character") return hurwitz::PureMethod::character;
  if (m == "bruteforce") return hurwitz::PureMethod::bruteforce;
  throw UsageError("method must be character or bruteforce");
}

Output cmd_hurwitz(const std::string& sub, const Config& c) {
  const auto f = parse_flags(c.flags);
  const auto method = method_from(f);
  std::vector<std::vector<std::string>> rows;
  ordered_json j = schema();
  if (sub == "pure") {
    if (c.profiles.empty()) throw UsageError("hurwitz pure needs --profiles");
    auto pl = partitions::ProfileList::parse(c.profiles);
    exact::Rat v = method == hurwitz::PureMethod::character ? hurwitz::pure_hurwitz_frobenius(pl)
                                                            : hurwitz::pure_hurwitz_bruteforce(pl);
    j["profiles"] = pl.to_string();
    j["value"] = v.get_str();
    j["method"] = hurwitz::method_name(method);
    rows.push_back({pl.to_string(), v.get_str(), hurwitz::method_name(method)});
    if (c.format == "csv") return {csv({"profiles", "value", "method"}, rows)};
    return {j.dump(2) + "\n"};
  }
  if (sub != "quantum") throw UsageError("hurwitz subcommands: quantum, pure");
  std::vector<partitions::Partition> mus;
  std::vector<int> ds;
  if (!c.mu.empty()) {
    mus.push_back(partitions::Partition::parse(c.mu));
  } else {
    if (c.nmax < 1) throw UsageError("hurwitz quantum needs --mu or --nmax");
    mus = partitions::partitions_of(c.nmax);
  }
  if (c.d >= 0) ds.push_back(c.d);
  else
    for (int d = 0; d <= c.dmax; ++d) ds.push_back(d);
  ordered_json arr = ordered_json::array();
  for (const auto& mu : mus)
    for (int d : ds) {
      std::string v = hurwitz::quantum_weighted_hurwitz(mu, d, method).to_string();
      ordered_json e;
      e["mu"] = mu.to_string();
      e["d"] = d;
      e["value"] = v;
      e["method"] = hurwitz::method_name(method);
      arr.push_back(e);
      rows.push_back({mu.to_string(), std::to_string(d), v, hurwitz::method_name(method)});
    }
  if (c.format == "csv") return {csv({"mu", "d", "value", "method"}, rows)};
  if (arr.size() == 1) {
    for (auto& [k, v] : arr[0].items()) j[k] = v;
  } else {
    j["values"] = arr;
  }
  return {j.dump(2) + "\n"};
}

tau::Grading grading_from(const std::map<std::string, std::string>& f) {
  std::string g = flag_or(f, "beta-grading", "calibrated");
  if (g == "calibrated") return tau::Grading::calibrated;
  if (g == "literal") return tau::Grading::literal;
  throw UsageError("beta-grading must be calibrated or literal");
}

Output cmd_tau(const std::string& sub, const Config& c) {
  const auto f = parse_flags(c.flags);
  if (sub == "coeffs") {
    const int nmax = c.nmax < 0 ? 8 : c.nmax;
    const int order = c.order < 0 ? nmax + 4 : c.order;
    const auto grading = grading_from(f);
    std::string basis_name = flag_or(f, "basis", "powersum");
    tau::SymSeries s;
    if (basis_name == "powersum") s = tau::tau_powersum_series(nmax, order, grading);
    else if (basis_name == "schur") s = tau::tau_schur_series(nmax, order);
    else throw UsageError("basis must be powersum or schur");
    if (c.format == "csv") {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [mu, ser] : s.coeffs)
        for (int n = 0; n <= ser.order(); ++n) rows.push_back({mu.to_string(), std::to_string(n), ser[n].to_string()});
      return {csv({"mu", "beta_power", "value"}, rows)};
    }
    ordered_json j = schema();
    j["n_max"] = nmax;
    j["order"] = order;
    j["grading"] = tau::grading_name(grading);
    j["basis"] = basis_name;
    ordered_json arr = ordered_json::array();
    for (const auto& [mu, ser] : s.coeffs) {
      ordered_json e;
      e["mu"] = mu.to_string();
      e["beta_series"] = ser.to_strings();
      arr.push_back(e);
    }
    j["coeffs"] = arr;
    return {j.dump(2) + "\n"};
  }
  if (sub != "eval") throw UsageError("tau subcommands: coeffs, eval");
  const auto p = basis::NumericParams::parse(c.q, c.beta, c.precision);
  basis::RhoTable rho(p);
  const auto x = parse_points(c.x);
  const int nmax = c.nmax < 0 ? 20 : c.nmax;
  const Real tol = numeric::parse_real(flag_or(f, "tol", "1e-20"));
  const int digits = std::stoi(flag_or(f, "digits", "30"));
  auto v = tau::tau_eval_numeric(x, nmax, rho, tol);
  if (c.format == "csv") return {csv({"value", "shell_estimate", "n_max"}, {{num(v.value, digits), num(v.shell_estimate, 6), std::to_string(v.n_max)}})};
  ordered_json j = schema();
  j["x"] = split(c.x, ',');
  j["q"] = c.q;
  j["beta"] = c.beta;
  j["value"] = num(v.value, digits);
  j["shell_estimate"] = num(v.shell_estimate, 6);
  j["n_max"] = v.n_max;
  return {j.dump(2) + "\n"};
}

Output cmd_phi(const std::string& sub, const Config& c) {
  const auto f = parse_flags(c.flags);
  const auto p = basis::NumericParams::parse(c.q, c.beta, c.precision);
  basis::RhoTable rho(p);
  const int digits = std::stoi(flag_or(f, "digits", "30"));
  const int m = std::stoi(flag_or(f, "euler", "0"));
  if (c.x.empty()) throw UsageError("--x is required");
  const Real x = numeric::to_real(basis::parse_rational(c.x));
  ordered_json j = schema();
  j["k"] = c.k;
  j["x"] = c.x;
  if (m) j["euler_power"] = m;
  if (sub == "eval") {
    auto v = basis::phi_series_eval(c.k, x, rho, m);
    j["value"] = num(v.value, digits);
    j["terms_used"] = v.terms_used;
    j["tail_bound"] = num(v.tail_bound, 6);
    if (c.format == "csv") return {csv({"k", "x", "value", "terms_used", "tail_bound"}, {{std::to_string(c.k), c.x, num(v.value, digits), std::to_string(v.terms_used), num(v.tail_bound, 6)}})};
    return {j.dump(2) + "\n"};
  }
  if (sub != "mellin") throw UsageError("phi subcommands: eval, mellin");
  mellin::MBKernel kern(c.k, p);
  mellin::ContourSpec spec = mellin::ContourSpec::for_kernel(c.k);
  if (!c.contour.empty()) {
    auto parts = split(c.contour, ',');
    if (parts.size() != 4) throw UsageError("--contour expects delta,left,smax,nodes");
    spec.delta = numeric::to_real(basis::parse_rational(parts[0]));
    spec.left_turn = numeric::to_real(basis::parse_rational(parts[1]));
    spec.s_max = numeric::to_real(basis::parse_rational(parts[2]));
    spec.nodes_per_unit = std::stoi(parts[3]);
  }
  mellin::KernelGrid grid(kern, spec, mellin::multiplier_growth(boost::multiprecision::max(x, Real(1)), m));
  auto v = mellin::phi_mellin_eval(x, grid, m);
  auto s = basis::phi_series_eval(c.k, x, rho, m);
  j["value"] = num(v.value, digits);
  j["imag"] = num(v.imag, 6);
  ordered_json ct;
  ct["delta"] = num(grid.spec().delta, 10);
  ct["left_turn"] = num(grid.spec().left_turn, 10);
  ct["s_max"] = num(grid.spec().s_max, 10);
  ct["nodes_per_unit"] = grid.spec().nodes_per_unit;
  ct["nodes"] = grid.size();
  j["contour"] = ct;
  j["truncation_bound"] = num(v.truncation_bound, 6);
  j["series_value"] = num(s.value, digits);
  j["residual"] = num(boost::multiprecision::abs(v.value - s.value) / boost::multiprecision::abs(s.value), 6);
  j["convention"] = "phi_k(x) = -(1/2 pi i) int A_k(s) x^s cos(pi s) ds";
  if (c.format == "csv") return {csv({"k", "x", "value", "series_value", "residual"}, {{std::to_string(c.k), c.x, j["value"].get<std::string>(), j["series_value"].get<std::string>(), j["residual"].get<std::string>()}})};
  return {j.dump(2) + "\n"};
}

Output cmd_matrixmodel(const std::string& sub, const Config& c) {
  if (sub != "eval") throw UsageError("matrixmodel subcommands: eval");
  const auto f = parse_flags(c.flags);
  const int digits = std::stoi(flag_or(f, "digits", "30"));
  const auto p = basis::NumericParams::parse(c.q, c.beta, c.precision);
  basis::RhoTable rho(p);
  const auto x = parse_points(c.x);
  auto src = matrixmodel::ExternalSource::from_x(x);
  Real xmax = 1;
  for (const auto& v : x) xmax = boost::multiprecision::max(xmax, v);
  auto red = matrixmodel::ReducedIntegrand::make(src.n(), p, xmax);
  auto v = matrixmodel::tau_from_matrix_model(src, red, rho);
  auto t = tau::tau_eval_converged(x, rho);
  const Real resid = boost::multiprecision::abs(v.tau - t.value) / boost::multiprecision::abs(t.value);
  if (c.format == "csv")
    return {csv({"n", "Z", "prefactor", "normalization", "tau", "tau_numeric", "residual"},
                {{std::to_string(src.n()), num(v.z, digits), num(v.prefactor, digits), num(v.normalization, digits),
                  num(v.tau, digits), num(t.value, digits), num(resid, 6)}})};
  ordered_json j = schema();
  j["x"] = split(c.x, ',');
  j["n"] = src.n();
  j["Z"] = num(v.z, digits);
  j["prefactor"] = num(v.prefactor, digits);
  j["normalization"] = num(v.normalization, digits);
  j["tau"] = num(v.tau, digits);
  j["tau_numeric"] = num(t.value, digits);
  j["residual"] = num(resid, 6);
  ordered_json lit;
  lit["Z"] = num(v.z_literal, digits);
  lit["tau"] = num(v.tau_literal, digits);
  j["literal"] = lit;
  j["convention"] = matrixmodel::convention_name(matrixmodel::EntryConvention::calibrated);
  return {j.dump(2) + "\n"};
}

Output cmd_verify(const Config& c, std::ostream& err) {
  if (!verify::is_suite(c.suite)) throw UsageError("suite must be exact, series, mellin, matrix or all");
  const auto f = parse_flags(c.flags);
  verify::VerifyOptions o;
  o.grading = grading_from(f);
  o.precision_bits = c.precision;
  auto r = verify::run_suite(c.suite, o);
  for (const auto& ch : r.checks)
    if (!ch.passed()) err << ch.id << " failed: " << ch.witness << "\n";
  Output out;
  out.code = r.passed() ? 0 : 1;
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& ch : r.checks)
      for (const auto& s : ch.subs) {
        std::ostringstream a, b;
        a << s.residual;
        b << s.threshold;
        rows.push_back({ch.id, s.name, a.str(), b.str(), s.passed ? "pass" : "fail"});
      }
    out.text = csv({"id", "check", "residual", "threshold", "status"}, rows);
    return out;
  }
  ordered_json j = schema();
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  ordered_json cal;
  for (const auto& [k, v] : r.calibration) cal[k] = v;
  j["calibration"] = cal;
  ordered_json arr = ordered_json::array();
  for (const auto& ch : r.checks) {
    ordered_json e;
    e["id"] = ch.id;
    e["title"] = ch.title;
    e["passed"] = ch.passed();
    ordered_json subs = ordered_json::array();
    for (const auto& s : ch.subs) {
      ordered_json sj;
      sj["name"] = s.name;
      sj["residual"] = s.residual;
      sj["threshold"] = s.threshold;
      sj["passed"] = s.passed;
      subs.push_back(sj);
    }
    e["checks"] = subs;
    if (!ch.witness.empty()) e["witness"] = ch.witness;
    ordered_json notes;
    for (const auto& [k, v] : ch.notes) notes[k] = v;
    if (!ch.notes.empty()) e["notes"] = notes;
    arr.push_back(e);
  }
  j["checks"] = arr;
  out.text = j.dump(2) + "\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Quantum Hurwitz numbers, hypergeometric tau-functions and their integral representations", "qhurwitz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--q", c.q, "q in (0,1), exact rational or decimal");
  app.add_option("--beta", c.beta, "beta, exact rational or decimal");
  app.add_option("--precision", c.precision, "working precision in bits");
  app.add_option("--nmax", c.nmax, "largest partition weight");
  app.add_option("--order", c.order, "beta-series order D");
  app.add_option("--dmax", c.dmax, "largest colength sum d");
  app.add_option("--d", c.d, "single colength sum d");
  app.add_option("--k", c.k, "basis index k");
  app.add_option("--mu", c.mu, "partition, e.g. 2,1,1");
  app.add_option("--profiles", c.profiles, "profile list, e.g. 2,1;2,1");
  app.add_option("--x", c.x, "comma-separated points");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out, "write output to this file");
  app.add_option("--suite", c.suite, "exact, series, mellin, matrix or all");
  app.add_option("--contour", c.contour, "delta,left,smax,nodes");
  app.add_option("--flag", c.flags, "key=value");

  std::string command, subcommand;
  auto add_group = [&](const std::string& name, const std::string& desc, std::vector<std::string> subs) {
    auto* g = app.add_subcommand(name, desc);
    g->fallthrough();
    if (!subs.empty()) g->require_subcommand(1);
    g->callback([&, name] { command = name; });
    for (const auto& s : subs) {
      auto* sc = g->add_subcommand(s);
      sc->fallthrough();
      sc->callback([&, s] { subcommand = s; });
    }
  };
  add_group("hurwitz", "weighted and pure Hurwitz numbers", {"quantum", "pure"});
  add_group("tau", "tau-function series and values", {"coeffs", "eval"});
  add_group("phi", "adapted basis functions", {"eval", "mellin"});
  add_group("matrixmodel", "matrix-model representation of tau", {"eval"});
  add_group("verify", "run verification suites", {});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Output result;
  try {
    if (command == "hurwitz") result = cmd_hurwitz(subcommand, c);
    else if (command == "tau") result = cmd_tau(subcommand, c);
    else if (command == "phi") result = cmd_phi(subcommand, c);
    else if (command == "matrixmodel") result = cmd_matrixmodel(subcommand, c);
    else result = cmd_verify(c, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << error_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) {
      err << "cannot write " << c.out << "\n";
      return 2;
    }
    f << result.text;
  } else {
    out << result.text;
  }
  return result.code;
}

}  // namespace qhurwitz::cli
