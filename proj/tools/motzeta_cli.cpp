// motzeta: fan inspection, motivic height series, Tamagawa constants and
// finite-field cross-checks from the command line.
//
// Exit codes: 0 all checks passed, 1 computational mismatch, 2 input error.

#include <motzeta/curves.hpp>
#include <motzeta/errors.hpp>
#include <motzeta/fan.hpp>
#include <motzeta/fforacle.hpp>
#include <motzeta/io.hpp>
#include <motzeta/moebius.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace motzeta;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string builtin;
  std::string fan_path;
  int dmax = 6;
  int trunc = 16;
  std::string oracle;
  double L = 4.0;
  bool check_hirzebruch = false;
  bool approx = false;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  auto* b = sub->add_option("--builtin", cfg.builtin, "p1, p2, p3, p1xp1, hirzebruch:m");
  auto* f = sub->add_option("--fan", cfg.fan_path, "fan JSON file");
  b->excludes(f);
  sub->add_option("--format", cfg.format, "text, json or csv")->capture_default_str();
  sub->add_option("--out", cfg.out, "write the report here instead of stdout");
}

Fan load(const RunConfig& cfg) {
  if (!cfg.builtin.empty()) return builtin_fan(cfg.builtin);
  if (!cfg.fan_path.empty()) return load_fan_file(cfg.fan_path);
  throw InputError("one of --builtin or --fan is required");
}

std::string fan_label(const RunConfig& cfg) {
  return cfg.builtin.empty() ? cfg.fan_path : cfg.builtin;
}

std::optional<int> hirzebruch_param(const RunConfig& cfg) {
  const std::string pre = "hirzebruch:";
  if (cfg.builtin.rfind(pre, 0) != 0) return std::nullopt;
  return std::stoi(cfg.builtin.substr(pre.size()));
}

std::vector<int> parse_primes(const std::string& s) {
  std::vector<int> qs;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int q = 0;
    try {
      std::size_t used = 0;
      q = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("--oracle: '" + tok + "' is not an integer");
    }
    if (!is_prime(q)) throw InputError("--oracle: " + tok + " is not prime");
    qs.push_back(q);
  }
  return qs;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string p_poly_str(const ObstructionSet& B) {
  const auto mu = mu0_table(B);
  std::string s;
  for (std::size_t n = 0; n < mu.size(); ++n) {
    if (mu[n] == 0) continue;
    std::string mono;
    for (int e : mask_indices(static_cast<Mask>(n), B.ground()))
      mono += (mono.empty() ? "" : "*") + ("T" + std::to_string(e));
    const long long c = mu[n];
    if (s.empty()) {
      s += c < 0 ? "-" : "";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const long long a = c < 0 ? -c : c;
    if (mono.empty()) s += std::to_string(a);
    else s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return s;
}

void emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw InputError("cannot write " + cfg.out);
  os << body;
}

int cmd_fan(const RunConfig& cfg) {
  const Fan f = load(cfg);
  const Format fmt = parse_format(cfg.format);
  const FanReport rep = fan_validate(f);
  const ObstructionSet B = b_sigma(f);
  const int rk = pic_rank(f);
  const AlphaStar a = alpha_star(f);
  const std::string alpha = a.exact ? to_string(a.value) : "~" + fmt_double(a.approximate);

  std::ostringstream os;
  if (fmt == Format::json) {
    json j;
    j["fan"] = json::parse(fan_to_json(f));
    j["smooth"] = rep.smooth;
    j["complete"] = rep.complete;
    j["issues"] = rep.issues;
    j["pic_rank"] = rk;
    json bm = json::array();
    for (Mask b : B.bmin()) bm.push_back(mask_str(b, B.ground()));
    j["b_min"] = bm;
    j["p_b"] = p_poly_str(B);
    j["alpha_star"] = alpha;
    j["alpha_star_exact"] = a.exact;
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    os << "field,value\n";
    os << "rank," << f.rank() << "\nrays," << f.num_rays() << "\nsmooth," << rep.smooth
       << "\ncomplete," << rep.complete << "\npic_rank," << rk << "\nalpha_star," << alpha << '\n';
  } else {
    os << "fan: " << fan_label(cfg) << "\nrank: " << f.rank() << "\nrays:";
    for (const auto& r : f.rays()) {
      os << " [";
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "]";
    }
    os << "\nmax_cones:";
    for (const auto& c : f.max_cones()) {
      os << " {";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << "}";
    }
    os << "\nsmooth: " << (rep.smooth ? "yes" : "no") << "  complete: "
       << (rep.complete ? "yes" : "no") << '\n';
    for (const auto& i : rep.issues) os << "issue: " << i << '\n';
    os << "pic_rank: " << rk << "\nB_min: {";
    for (std::size_t i = 0; i < B.bmin().size(); ++i)
      os << (i ? ", " : "") << mask_str(B.bmin()[i], B.ground());
    os << "}\nP_B: " << p_poly_str(B) << "\nalpha*: " << alpha << '\n';
  }
  emit(cfg, os.str());
  return rep.smooth && rep.complete ? 0 : kExitMismatch;
}

int cmd_heights(const RunConfig& cfg) {
  if (cfg.dmax < 0) throw InputError("--dmax must be >= 0");
  const Fan f = load(cfg);
  const Format fmt = parse_format(cfg.format);
  const auto qs = parse_primes(cfg.oracle);
  std::optional<int> m;
  int D = cfg.dmax;
  if (cfg.check_hirzebruch) {
    m = hirzebruch_param(cfg);
    if (!m) throw InputError("--check-hirzebruch needs --builtin hirzebruch:m");
    D = std::max(D, 2 * *m + 14);
  }
  const HeightSeries full = height_series(f, D);
  HeightSeries hs = full;
  hs.D = cfg.dmax;
  hs.classes.resize(static_cast<std::size_t>(cfg.dmax) + 1);
  hs.components.resize(static_cast<std::size_t>(cfg.dmax) + 1);

  std::ostringstream os;
  os << heights_report(hs, qs, fmt);
  bool ok = true;
  if (!qs.empty()) {
    for (int q : qs)
      for (int d = 0; d <= cfg.dmax; ++d) {
        const Rational motivic = hs.classes[static_cast<std::size_t>(d)].eval(Rational(q));
        const Rational count(count_u0d(f, q, d));
        const bool match = motivic == count;
        ok = ok && match;
        if (fmt == Format::text)
          os << "oracle q=" << q << " d=" << d << ": " << to_string(count) << ' '
             << (match ? "MATCH" : "MISMATCH") << '\n';
        else if (!match)
          std::cerr << "oracle mismatch q=" << q << " d=" << d << '\n';
      }
    if (fmt == Format::text) os << "oracle: " << (ok ? "all MATCH" : "MISMATCH") << '\n';
  }
  if (m) {
    const HirzebruchCheck c = hirzebruch_theorem_check(*m, full);
    const LaurentPoly expected = LaurentPoly::parse("L^2 - 2 + L^-2");
    const bool pass = c.is_polynomial && c.value_at_Linv == expected;
    ok = ok && pass;
    std::ostringstream line;
    line << "hirzebruch m=" << *m << " D=" << D << ": " << (pass ? "PASS" : "FAIL")
         << " polynomial=" << (c.is_polynomial ? "yes" : "no");
    if (!c.is_polynomial) line << " first_bad_degree=" << c.first_bad_degree;
    if (c.is_polynomial || c.rational_form)
      line << (c.is_polynomial ? " value=\"" : " rational_value=\"") << c.value_at_Linv.str()
           << "\"";
    if (fmt == Format::text) os << line.str() << '\n';
    else std::cerr << line.str() << '\n';
  }
  emit(cfg, os.str());
  return ok ? 0 : kExitMismatch;
}

int cmd_tamagawa(const RunConfig& cfg) {
  if (!(cfg.L > 1)) throw InputError("--L must be > 1");
  if (cfg.trunc < 1) throw InputError("--trunc must be >= 1");
  const Fan f = load(cfg);
  const Format fmt = parse_format(cfg.format);
  if (pic_rank(f) > 2 && !cfg.approx)
    throw InputError("Picard rank " + std::to_string(pic_rank(f)) +
                     " > 2: alpha* is approximate, pass --approx");
  const TamagawaReport r = tamagawa_constant(f, cfg.L, cfg.trunc, cfg.trunc, cfg.approx);
  bool ok = r.difference <= 1e-6;
  std::optional<double> expected;
  if (auto m = hirzebruch_param(cfg)) {
    const double L = cfg.L;
    expected = L * L * std::pow(1 - 1 / (L * L), 2) / (2.0 * (*m + 2));
    ok = ok && std::abs(r.exp_path - *expected) <= 1e-6 && std::abs(r.mu_path - *expected) <= 1e-6;
  }
  const std::string alpha = r.alpha.exact ? to_string(r.alpha.value) : fmt_double(r.alpha.approximate);
  std::ostringstream os;
  if (fmt == Format::json) {
    json j{{"fan", fan_label(cfg)}, {"L", cfg.L},          {"N", cfg.trunc},
           {"alpha_star", alpha},   {"exp_path", r.exp_path}, {"mu_path", r.mu_path},
           {"difference", r.difference}, {"last_term", r.last_term}, {"pass", ok}};
    j["expected"] = expected ? json(*expected) : json(nullptr);
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    os << "fan,L,N,alpha_star,exp_path,mu_path,difference,expected,pass\n"
       << fan_label(cfg) << ',' << fmt_double(cfg.L) << ',' << cfg.trunc << ',' << alpha << ','
       << fmt_double(r.exp_path) << ',' << fmt_double(r.mu_path) << ',' << fmt_double(r.difference)
       << ',' << (expected ? fmt_double(*expected) : "") << ',' << (ok ? "PASS" : "FAIL") << '\n';
  } else {
    os << "fan: " << fan_label(cfg) << "  L=" << fmt_double(cfg.L) << "  N=D=" << cfg.trunc << '\n'
       << "alpha*: " << alpha << (r.alpha.exact ? "" : " (approximate)") << '\n'
       << "exp path: " << fmt_double(r.exp_path) << '\n'
       << "mu path:  " << fmt_double(r.mu_path) << '\n'
       << "difference: " << fmt_double(r.difference) << "  last term: " << fmt_double(r.last_term)
       << '\n';
    if (expected) os << "expected: " << fmt_double(*expected) << '\n';
    os << (ok ? "PASS" : "FAIL") << '\n';
  }
  emit(cfg, os.str());
  return ok ? 0 : kExitMismatch;
}

int cmd_mobius(const RunConfig& cfg) {
  if (cfg.dmax < 0) throw InputError("--dmax must be >= 0");
  const Fan f = load(cfg);
  const Format fmt = parse_format(cfg.format);
  const MultiDegreeTable mu = mobius_table(b_sigma(f), cfg.dmax);
  std::string body;
  if (fmt == Format::csv) {
    body = mobius_table_csv(mu);
  } else if (fmt == Format::json) {
    body = mobius_table_json(mu) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& [e, c] : mu.values) os << "mu" << degree_vector_str(e) << " = " << c << '\n';
    body = os.str();
  }
  emit(cfg, body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motzeta: motivic height zeta functions of toric varieties over P^1"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* fan = app.add_subcommand("fan", "validate a fan and print its combinatorics");
  add_common(fan, cfg);

  auto* heights = app.add_subcommand("heights", "classes [U_{0,d}] for d <= dmax");
  add_common(heights, cfg);
  heights->add_option("--dmax", cfg.dmax, "largest degree")->capture_default_str();
  heights->add_option("--oracle", cfg.oracle, "comma-separated primes for finite-field checks");
  heights->add_flag("--check-hirzebruch", cfg.check_hirzebruch,
                    "multiply by the prefactor and check polynomiality and the value at 1/L");

  auto* tam = app.add_subcommand("tamagawa", "Tamagawa constant by two summations");
  add_common(tam, cfg);
  tam->add_option("--L", cfg.L, "numeric value of L")->capture_default_str();
  tam->add_option("--trunc", cfg.trunc, "truncation N = D")->capture_default_str();
  tam->add_flag("--approx", cfg.approx, "accept an approximate alpha* (Picard rank > 2)");

  auto* mob = app.add_subcommand("mobius", "dump the mobius table to total degree dmax");
  add_common(mob, cfg);
  mob->add_option("--dmax", cfg.dmax, "truncation")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*fan) return cmd_fan(cfg);
    if (*heights) return cmd_heights(cfg);
    if (*tam) return cmd_tamagawa(cfg);
    if (*mob) return cmd_mobius(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const StructuralError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitInput;
}
