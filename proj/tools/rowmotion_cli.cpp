// rowmotion: orbits, certificates, verification suites, q-rowmotion and
// lifted rowmotion from the command line.

#include "suites.hpp"

#include "rowmotion/decompose.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/io.hpp"
#include "rowmotion/lifted.hpp"
#include "rowmotion/qrow.hpp"
#include "rowmotion/statistics.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

using namespace rowmotion;

namespace {

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": bad seed '" + text + "'");
  }
}

// "default" or "random:<seed>".
FlavorAlphabet make_alphabet(int r, int s, const std::string& theta) {
  if (theta == "default") return FlavorAlphabet(r, s);
  if (theta.rfind("random:", 0) == 0) {
    std::mt19937_64 rng(parse_seed(theta.substr(7), "--theta"));
    return FlavorAlphabet::random(r, s, rng);
  }
  if (theta == "random") throw UsageError("--theta random needs a seed: random:<seed>");
  throw UsageError("--theta must be default or random:<seed>");
}

std::pair<int, int> parse_rs(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected q:<r>,<s>");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("expected q:<r>,<s>");
  }
}

void emit(const nlohmann::json& j, std::ostream& out = std::cout) { out << j.dump(2) << "\n"; }

nlohmann::json header(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// -- orbits ------------------------------------------------------------------

struct OrbitsArgs {
  std::string family, variant = "rowmotion", theta = "default", format = "json";
  std::size_t cap = kDefaultLabelingCap;
};

int cmd_orbits(const OrbitsArgs& a) {
  Poset P = parse_family(a.family);
  IdealSpace S(P);
  nlohmann::json j = header("orbits");
  j["family"] = a.family;
  j["variant"] = a.variant;
  std::vector<std::size_t> sizes;
  std::vector<std::string> reps;
  std::size_t states = 0;
  if (a.variant.rfind("q:", 0) == 0) {
    auto [r, s] = parse_rs(a.variant.substr(2));
    LabelingSpace L(S, make_alphabet(r, s, a.theta), a.cap);
    auto orbits = q_orbits(L);
    states = L.size();
    j["theta"] = L.alphabet().str();
    for (const auto& c : orbits.cycles) {
      sizes.push_back(c.size());
      QLabeling rep = L.labeling(c.front());
      std::string text;
      for (int p = 0; p < P.size(); ++p) text += (p ? " " : "") + L.alphabet().symbol_name(rep.symbols[p]);
      reps.push_back(text);
    }
  } else if (a.variant == "antichain") {
    std::vector<ElementSet> antichains;
    for (const auto& I : S.ideals()) antichains.push_back(maximal_elements(P, I));
    auto orbits = orbit_partition([&](const ElementSet& A) { return antichain_rowmotion(P, A); }, antichains);
    states = antichains.size();
    for (const auto& o : orbits) {
      sizes.push_back(o.period());
      reps.push_back(o.states.front().str());
    }
  } else {
    auto cycles = permutation_cycles(S.permutation(ideal_action(P, a.variant)));
    states = S.size();
    for (const auto& c : cycles) {
      sizes.push_back(c.size());
      reps.push_back(S[c.front()].str());
    }
  }
  std::size_t total = 0;
  for (auto z : sizes) total += z;
  if (a.format == "csv") {
    std::cout << "orbit,size,representative\n";
    for (std::size_t k = 0; k < sizes.size(); ++k) std::cout << k << "," << sizes[k] << "," << csv_field(reps[k]) << "\n";
    return kOk;
  }
  j["states"] = states;
  j["orbit_sizes"] = sizes;
  j["representatives"] = reps;
  j["sizes_sum_to_states"] = total == states;
  emit(j);
  return total == states ? kOk : kVerificationFailure;
}

// -- decompose -----------------------------------------------------------------

struct DecomposeArgs {
  std::string family, stat, format = "json";
  bool q = false;
};

int cmd_decompose(const DecomposeArgs& a) {
  Poset P = parse_family(a.family);
  IdealSpace S(P);
  Statistic f = parse_statistic(S, a.stat);
  nlohmann::json j = header("decompose");
  j["family"] = a.family;
  j["statistic"] = a.stat;
  j["field"] = a.q ? "Q(q)" : "Q";
  std::string summary;
  if (a.q) {
    auto d = q_decompose(S, f.values);
    j["in_span"] = d.has_value();
    if (d) {
      j["certificate"] = certificate_to_json(P, *d);
      summary = "c(q) = " + d->constant.str();
    }
  } else {
    auto d = decompose(S, f);
    j["in_span"] = d.has_value();
    if (d) {
      j["certificate"] = certificate_to_json(P, *d);
      summary = "c = " + to_string(d->constant);
    }
  }
  if (summary.empty()) summary = "NOT IN SPAN";
  j["summary"] = summary;
  if (a.format == "text") std::cout << summary << "\n";
  else if (a.format == "csv") {
    std::cout << "element,coefficient\n";
    if (j["in_span"].get<bool>()) {
      std::cout << "constant," << csv_field(j["certificate"]["constant"].dump()) << "\n";
      for (auto& [k, v] : j["certificate"]["coeffs"].items()) std::cout << csv_field(k) << "," << csv_field(v.dump()) << "\n";
    } else {
      std::cout << "NOT IN SPAN,\n";
    }
  } else {
    emit(j);
  }
  return kOk;
}

// -- verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string suite, format = "json";
  cli::SuiteBounds bounds;
};

int cmd_verify(const VerifyArgs& a) {
  auto report = cli::run_suite(a.suite, a.bounds);
  if (a.format == "csv") {
    std::cout << "check,passed,detail\n";
    for (const auto& c : report.checks)
      std::cout << csv_field(c.name) << "," << (c.passed ? "true" : "false") << ","
                << csv_field(c.passed || c.counterexample.is_null() ? c.detail : c.detail + " " + c.counterexample.dump())
                << "\n";
  } else {
    nlohmann::json j = report.to_json();
    j["command"] = "verify";
    j["bounds"] = {{"min", a.bounds.min}, {"max", a.bounds.max}, {"max_cells", a.bounds.max_cells}, {"seed", a.bounds.seed}};
    emit(j);
  }
  return report.passed() ? kOk : kVerificationFailure;
}

// -- qrow ------------------------------------------------------------------------

struct QrowArgs {
  std::string family, theta = "default", stat = "antichain_card", expect, format = "json";
  int r = 1, s = 1;
  std::size_t cap = kDefaultLabelingCap;
};

int cmd_qrow(const QrowArgs& a) {
  Poset P = parse_family(a.family);
  IdealSpace S(P);
  Statistic f = parse_statistic(S, a.stat);
  std::optional<RationalFunction> expected;
  if (!a.expect.empty()) expected = parse_q_expression(a.expect);
  LabelingSpace L(S, make_alphabet(a.r, a.s, a.theta), a.cap);
  auto orbits = q_orbits(L);
  auto rep = q_homomesy_check(L, orbits, f.values, expected);
  auto law = flavor_cycle_law(L, orbits);
  if (a.format == "csv") {
    std::cout << "orbit,size,average\n";
    for (std::size_t k = 0; k < orbits.cycles.size(); ++k)
      std::cout << k << "," << orbits.cycles[k].size() << "," << to_string(rep.orbit_averages[k]) << "\n";
  } else {
    nlohmann::json j = header("qrow");
    j["family"] = a.family;
    j["r"] = a.r;
    j["s"] = a.s;
    j["q"] = to_json(L.alphabet().q());
    j["theta"] = L.alphabet().str();
    j["statistic"] = a.stat;
    j["labelings"] = L.size();
    j["orbit_sizes"] = orbits.sizes();
    j["homomesic"] = rep.is_homomesic;
    j["average"] = to_json(rep.global_average);
    nlohmann::json avgs = nlohmann::json::array();
    for (const auto& v : rep.orbit_averages) avgs.push_back(to_json(v));
    j["orbit_averages"] = avgs;
    j["flavor_cycle_law"] = law.holds;
    if (expected) {
      j["expected"] = {{"expression", a.expect}, {"value", to_json((*expected)(L.alphabet().q()))}};
      j["matches_expected"] = *rep.matches_expected;
    }
    emit(j);
  }
  if (!law.holds) return kVerificationFailure;
  if (expected && !*rep.matches_expected) return kVerificationFailure;
  return kOk;
}

// -- lifted ----------------------------------------------------------------------

struct LiftedArgs {
  std::string family, level = "pl", alpha, omega, start, stat = "antichain_card", variant = "rowmotion",
                      format = "json";
  std::size_t cap = kDefaultLiftedOrbitCap;
};

Vector<Rational> read_start_values(const Poset& P, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open start file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("start file: " + std::string(e.what()));
  }
  const auto& vals = j.is_array() ? j : j.at("values");
  if (static_cast<int>(vals.size()) != P.size()) throw UsageError("start file has the wrong number of values");
  Vector<Rational> v(P.size());
  for (int p = 0; p < P.size(); ++p) v(p) = parse_rational(vals[p].get<std::string>());
  return v;
}

template <class Point>
nlohmann::json point_json(const Point& x) {
  nlohmann::json v = nlohmann::json::array();
  for (Eigen::Index k = 0; k < x.values.size(); ++k) v.push_back(to_json(Rational(x.values(k))));
  return {{"values", v}, {"alpha", to_json(x.alpha)}, {"omega", to_json(x.omega)}};
}

int cmd_lifted(const LiftedArgs& a) {
  if (a.level != "pl" && a.level != "birational") throw UsageError("--level must be pl or birational");
  if (a.start.empty()) throw UsageError("--start is required: random:<seed> or file:<path>");
  Poset P = parse_family(a.family);
  IdealSpace S(P);
  const bool pl = a.level == "pl";
  Rational alpha = a.alpha.empty() ? Rational(pl ? 0 : 1) : parse_rational(a.alpha);
  Rational omega = a.omega.empty() ? Rational(1) : parse_rational(a.omega);

  Vector<Rational> values;
  if (a.start.rfind("random:", 0) == 0) {
    std::mt19937_64 rng(parse_seed(a.start.substr(7), "--start"));
    values = pl ? random_pl_point(P, rng).values : random_b_point(P, rng).values;
  } else if (a.start.rfind("file:", 0) == 0) {
    values = read_start_values(P, a.start.substr(5));
  } else {
    throw UsageError("--start must be random:<seed> or file:<path>");
  }

  Statistic f = parse_statistic(S, a.stat);
  if (!f.form) throw UsageError("statistic '" + a.stat + "' has no toggleability form to lift");
  auto d = decompose(S, f);
  LiftedStatistic lifted = lift_statistic(P, *f.form);

  nlohmann::json j = header("lifted");
  j["family"] = a.family;
  j["level"] = a.level;
  j["variant"] = a.variant;
  j["statistic"] = a.stat;
  j["in_span"] = d.has_value();
  if (d) j["constant"] = to_json(d->constant);

  LiftedOrbitReport rep;
  if (pl) {
    PLPoint x{values, alpha, omega};
    check_point(P, x);
    j["start"] = point_json(x);
    if (d) rep = orbit_homomesy_pl(P, lifted, d->constant, pl_action(P, a.variant), x, a.cap);
    else rep.finite = finite_orbit(pl_action(P, a.variant), x, a.cap).has_value();
  } else {
    BPoint x{values, alpha, omega};
    check_point(P, x);
    j["start"] = point_json(x);
    if (d) rep = orbit_homomesy_b(P, lifted, d->constant, b_action(P, a.variant), x, a.cap);
    else rep.finite = finite_orbit(b_action(P, a.variant), x, a.cap).has_value();
  }
  if (!rep.finite) throw ResourceError("orbit did not close within " + std::to_string(a.cap) + " steps");
  if (d) {
    j["period"] = rep.period;
    j["law_holds"] = rep.law_holds;
  }
  if (a.format == "csv") {
    std::cout << "level,period,law_holds\n" << a.level << "," << (d ? std::to_string(rep.period) : "") << ","
              << (d ? (rep.law_holds ? "true" : "false") : "") << "\n";
  } else {
    emit(j);
  }
  return !d || rep.law_holds ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rowmotion dynamics, toggleability certificates and homomesy checks"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv"};

  OrbitsArgs orbits;
  auto* o = app.add_subcommand("orbits", "orbit sizes of an action on J(P), antichains or labelings");
  o->add_option("family", orbits.family, "e.g. rect:2,3, sstair:4, rootA:3, E6, file:poset.json")->required();
  o->add_option("--variant", orbits.variant, "rowmotion | gyration | sigma:<perm> | antichain | q:<r>,<s>");
  o->add_option("--theta", orbits.theta, "flavor cycle for q variants: default | random:<seed>");
  o->add_option("--cap", orbits.cap, "largest labeling space");
  o->add_option("--format", orbits.format)->check(CLI::IsMember(formats));

  DecomposeArgs dec;
  auto* d = app.add_subcommand("decompose", "certificate f = c + sum c_p T_p, or NOT IN SPAN");
  d->add_option("family", dec.family)->required();
  d->add_option("statistic", dec.stat, "e.g. antichain_card, \"2*file:0 - file:1 - file:-1\"")->required();
  d->add_flag("--q", dec.q, "solve over Q(q) with T^q_p");
  d->add_option("--format", dec.format)->check(CLI::IsMember({"json", "csv", "text"}));

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", ver.suite)->required()->check(CLI::IsMember(cli::suite_names()));
  v->add_option("--min", ver.bounds.min, "smallest family parameter (table2)");
  v->add_option("--max", ver.bounds.max, "largest family parameter");
  v->add_option("--max-cells", ver.bounds.max_cells, "largest poset for rooks and halfrook");
  v->add_option("--seed", ver.bounds.seed, "seed for sampled rank permutations, flavor cycles and points");
  v->add_option("--jobs", ver.bounds.jobs, "worker threads");
  v->add_option("--format", ver.format)->check(CLI::IsMember(formats));

  QrowArgs qa;
  auto* q = app.add_subcommand("qrow", "q-rowmotion orbits and homomesy at q = r/s");
  q->add_option("--family", qa.family)->required();
  q->add_option("--r", qa.r, "flavors of 1")->required();
  q->add_option("--s", qa.s, "flavors of 0")->required();
  q->add_option("--theta", qa.theta, "default | random:<seed>");
  q->add_option("--stat", qa.stat);
  q->add_option("--expect", qa.expect, "expected value c(q), e.g. \"[2]*[3]/[5]\"");
  q->add_option("--cap", qa.cap, "largest labeling space");
  q->add_option("--format", qa.format)->check(CLI::IsMember(formats));

  LiftedArgs la;
  auto* l = app.add_subcommand("lifted", "piecewise-linear or birational orbit of a point and its lifted statistic");
  l->add_option("--family", la.family)->required();
  l->add_option("--level", la.level, "pl | birational");
  l->add_option("--alpha", la.alpha, "bottom boundary value p/q");
  l->add_option("--omega", la.omega, "top boundary value p/q");
  l->add_option("--start", la.start, "random:<seed> | file:<path>")->required();
  l->add_option("--stat", la.stat);
  l->add_option("--variant", la.variant, "rowmotion | gyration | sigma:<perm>");
  l->add_option("--cap", la.cap, "largest orbit");
  l->add_option("--format", la.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*o) return cmd_orbits(orbits);
    if (*d) return cmd_decompose(dec);
    if (*v) return cmd_verify(ver);
    if (*q) return cmd_qrow(qa);
    if (*l) return cmd_lifted(la);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
