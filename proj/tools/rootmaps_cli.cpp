// rootmaps: command-line front end for the map-counting library.
//
// Exit codes: 0 success, 1 usage or cache problem, 2 verification failure,
// 3 internal consistency error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rootmaps/asymptotics.hpp"
#include "rootmaps/bivariate.hpp"
#include "rootmaps/cache.hpp"
#include "rootmaps/errors.hpp"
#include "rootmaps/genus_series.hpp"
#include "rootmaps/oracle.hpp"
#include "rootmaps/recurrence.hpp"

using namespace rootmaps;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitConsistency = 3;

struct Options {
  std::string cache_dir;
  unsigned threads = 1;

  int genus = 0;
  int edges = 0;
  int vertices = 0;
  int faces = 0;
  int edges_max = 0;
  int order = 0;
  int genus_max = 0;
  int digits = 20;
  bool all_genera = false;
  std::string format = "csv";
};

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt), engine_(opt.threads) {}

  void load() {
    if (!opt_.cache_dir.empty()) read_cache_dir(opt_.cache_dir, state());
  }
  void save() {
    if (!opt_.cache_dir.empty()) write_cache_dir(opt_.cache_dir, state());
  }

  RecurrenceEngine& engine() { return engine_; }
  GenusSeries& series() { return series_; }
  AsymptoticConstants& constants() { return constants_; }

 private:
  CacheState state() { return {engine_, series_, constants_}; }

  const Options& opt_;
  RecurrenceEngine engine_;
  GenusSeries series_;
  AsymptoticConstants constants_;
};

std::string join(std::span<const Integer> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].get_str();
  return s.empty() ? "0" : s;
}

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

int run_q(Session& s, const Options& o) {
  require_nonnegative(o.edges, "--edges");
  if (!o.all_genera) {
    require_nonnegative(o.genus, "--genus");
    const Integer v = s.engine().q_count(o.genus, o.edges);
    if (o.format == "json")
      std::cout << json{{"g", o.genus}, {"n", o.edges}, {"count", v.get_str()}}.dump() << '\n';
    else
      std::cout << v.get_str() << '\n';
    return 0;
  }
  const auto rows = s.engine().table_range(o.edges / 2, o.edges);
  if (o.format == "json") {
    json out = json::array();
    for (const TableEntry& r : rows) out.push_back({{"g", r.genus}, {"n", r.edges}, {"count", r.count.get_str()}});
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "g,n,count\n";
    for (const TableEntry& r : rows) std::cout << r.genus << ',' << r.edges << ',' << r.count.get_str() << '\n';
  }
  return 0;
}

int run_poly(Session& s, const Options& o) {
  std::cout << join(s.engine().q_poly(o.genus, o.edges).coefficients()) << '\n';
  return 0;
}

int run_m(Session& s, const Options& o) {
  std::cout << s.engine().m_count(o.genus, o.vertices, o.faces).get_str() << '\n';
  return 0;
}

int run_hz(Session& s, const Options& o) {
  require_nonnegative(o.genus, "--genus");
  require_nonnegative(o.edges_max, "--edges-max");
  std::cout << "n,count\n";
  for (int n = 0; n <= o.edges_max; ++n) std::cout << n << ',' << s.engine().hz(o.genus, n).get_str() << '\n';
  return 0;
}

int run_genus_poly(Session& s, const Options& o) {
  require_nonnegative(o.edges, "--edges");
  const GenusPolynomial h = s.engine().genus_poly(o.edges);
  const int width = o.edges + 2;
  std::cout << "g";
  for (int f = 0; f < width; ++f) std::cout << ",x^" << f;
  std::cout << '\n';
  for (std::size_t g = 0; g < h.by_genus.size(); ++g) {
    std::cout << g;
    for (int f = 0; f < width; ++f) std::cout << ',' << h.by_genus[g].coeff(f).get_str();
    std::cout << '\n';
  }
  return 0;
}

int run_series(Session& s, const Options& o) {
  require_nonnegative(o.genus, "--genus");
  require_nonnegative(o.order, "--order");
  const TruncatedSeries q = genus_series_in_t(s.series().rg(o.genus), o.order);
  std::cout << "n,coefficient\n";
  for (int n = 0; n <= o.order; ++n) std::cout << n << ',' << to_string(q[n]) << '\n';
  return 0;
}

int run_rg(Session& s, const Options& o) {
  require_nonnegative(o.genus, "--genus");
  const GenusSeriesReport rep = rg_report(s.series().rg(o.genus));
  if (o.genus == 0) {
    std::cout << "polynomial";
    for (const Rational& c : rep.polynomial.coefficients()) std::cout << ',' << to_string(c);
    std::cout << '\n';
    return 0;
  }
  std::cout << "c0," << to_string(rep.c0) << '\n';
  for (std::size_t i = 0; i < rep.alpha.size(); ++i) std::cout << "alpha_" << i + 1 << ',' << to_string(rep.alpha[i]) << '\n';
  for (std::size_t i = 0; i < rep.beta.size(); ++i) std::cout << "beta_" << i + 1 << ',' << to_string(rep.beta[i]) << '\n';
  return 0;
}

int run_asymptotics(Session& s, const Options& o) {
  if (o.genus_max < 1) throw std::invalid_argument("--genus-max must be at least 1");
  if (o.digits < 1) throw std::invalid_argument("--digits must be positive");
  std::cout << "g,tau,t_exact,t_decimal\n";
  for (int g = 1; g <= o.genus_max; ++g) {
    const SqrtPiScalar t = s.constants().tg(g);
    std::cout << g << ',' << to_string(s.constants().tau(g)) << ',' << t.to_string() << ',' << t.decimal(o.digits)
              << '\n';
  }
  return 0;
}

int run_bivariate(Session& s, const Options& o) {
  const BivariateRationalRecord rec = fit_pg(s.engine(), o.genus);
  validate_pg(s.engine(), rec, 2);
  std::cout << "a,b,coefficient\n";
  for (int d = 0; d <= rec.pg.degree(); ++d)
    for (int a = d; a >= 0; --a) {
      const Rational& c = rec.pg.coeff(a, d - a);
      if (c != 0) std::cout << a << ',' << d - a << ',' << to_string(c) << '\n';
    }
  return 0;
}

int run_verify(Session& s, const Options& o) {
  const VerifyReport rep = verify_all(s.engine(), o.edges_max, o.threads);
  for (const CheckResult& c : rep.checks)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  return rep.all_passed() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of rooted maps on orientable surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "Directory holding cache.json (read at start, written at exit)");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* q = app.add_subcommand("q", "Q_g^n: rooted maps by genus and edges");
  q->add_option("--genus", o.genus, "Genus g");
  q->add_option("--edges", o.edges, "Edges n")->required();
  q->add_flag("--all-genera", o.all_genera, "Every (g, n) with n <= N and g <= n/2");
  q->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* poly = app.add_subcommand("poly", "Q_g^n(x) coefficients by number of faces, ascending");
  poly->add_option("--genus", o.genus)->required();
  poly->add_option("--edges", o.edges)->required();

  auto* m = app.add_subcommand("m", "M_g^{i,j}: maps by genus, vertices and faces");
  m->add_option("--genus", o.genus)->required();
  m->add_option("--vertices", o.vertices)->required();
  m->add_option("--faces", o.faces)->required();

  auto* hz = app.add_subcommand("hz", "One-face maps epsilon_g(0..N)");
  hz->add_option("--genus", o.genus)->required();
  hz->add_option("--edges-max", o.edges_max)->required();

  auto* gp = app.add_subcommand("genus-poly", "H_n(x, s) coefficient grid");
  gp->add_option("--edges", o.edges)->required();

  auto* series = app.add_subcommand("series", "Coefficients of Q_g(t)");
  series->add_option("--genus", o.genus)->required();
  series->add_option("--order", o.order)->required();

  auto* rg = app.add_subcommand("rg", "c_0, alpha_i, beta_i of R_g in the (2-T), (T+2) convention");
  rg->add_option("--genus", o.genus)->required();

  auto* asym = app.add_subcommand("asymptotics", "tau_g and t_g");
  asym->add_option("--genus-max", o.genus_max)->required();
  asym->add_option("--digits", o.digits, "Significant digits of the decimal rendering");

  auto* biv = app.add_subcommand("bivariate", "P_g(p, q) monomials");
  biv->add_option("--genus", o.genus)->required();

  auto* verify = app.add_subcommand("verify", "Brute-force oracle against every table");
  verify->add_option("--edges-max", o.edges_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Session session(o);
    session.load();
    int code = 0;
    if (*q) code = run_q(session, o);
    else if (*poly) code = run_poly(session, o);
    else if (*m) code = run_m(session, o);
    else if (*hz) code = run_hz(session, o);
    else if (*gp) code = run_genus_poly(session, o);
    else if (*series) code = run_series(session, o);
    else if (*rg) code = run_rg(session, o);
    else if (*asym) code = run_asymptotics(session, o);
    else if (*biv) code = run_bivariate(session, o);
    else if (*verify) code = run_verify(session, o);
    std::cout.flush();
    session.save();
    return code;
  } catch (const VerificationError& e) {
    std::cerr << "rootmaps " << command << ": verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const ConsistencyError& e) {
    std::cerr << "rootmaps " << command << ": internal consistency error: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const CacheError& e) {
    std::cerr << "rootmaps " << command << ": cache: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rootmaps " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "rootmaps " << command << ": " << e.what() << '\n';
    return kExitConsistency;
  }
}
