#include "suites.hpp"

#include "rowmotion/decompose.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/io.hpp"
#include "rowmotion/lifted.hpp"
#include "rowmotion/qrow.hpp"
#include "rowmotion/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace rowmotion::cli {

namespace {

using Item = std::function<CheckResult()>;

CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), true, std::move(detail), nullptr}; }

CheckResult fail(std::string name, std::string detail, nlohmann::json counterexample = nullptr) {
  return {std::move(name), false, std::move(detail), std::move(counterexample)};
}

// Runs the items on up to `jobs` threads; results keep the item order. The
// first exception in item order is rethrown.
std::vector<CheckResult> run_items(const std::vector<Item>& items, int jobs) {
  std::vector<CheckResult> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < items.size();) {
      try {
        out[k] = items[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string poset_name(const Poset& P) { return P.name().value_or("poset"); }

std::vector<Poset> corpus(int max) {
  std::vector<Poset> out;
  for (int a = 1; a <= max; ++a)
    for (int b = a; b <= max; ++b) out.push_back(rectangle(a, b));
  for (int n = 1; n <= max; ++n) out.push_back(shifted_staircase(n));
  for (int n = 1; n <= max; ++n) out.push_back(root_poset_A(n));
  for (int n = 1; n < max; ++n) out.push_back(root_poset_B(n));
  for (int n = 2; n <= max; ++n) out.push_back(double_tailed_diamond(n));
  if (max >= 3) {
    out.push_back(trapezoid(2, 3));
    out.push_back(chain_of_vs(2));
  }
  return out;
}

std::vector<std::vector<std::size_t>> orbits_of(const IdealSpace& S, const std::string& variant) {
  return permutation_cycles(S.permutation(ideal_action(S.poset(), variant)));
}

bool zero_on_every_orbit(const Vector<Rational>& f, const std::vector<std::vector<std::size_t>>& orbits) {
  for (const auto& o : orbits) {
    Rational sum = 0;
    for (auto k : o) sum += f(k);
    if (sum != 0) return false;
  }
  return true;
}

std::string sigma_variant(const std::vector<int>& sigma) {
  std::string v = "sigma:";
  for (std::size_t k = 0; k < sigma.size(); ++k) v += (k ? "," : "") + std::to_string(sigma[k]);
  return v;
}

// rowmotion, then every rank permutation when there are at most four ranks,
// else `samples` random ones.
std::vector<std::string> action_variants(const Poset& P, std::mt19937_64& rng, int samples = 5) {
  std::vector<std::string> out{"rowmotion"};
  if (!P.is_ranked() || P.size() == 0) return out;
  std::vector<int> sigma(max_rank(P) + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (sigma.size() <= 4) {
    do out.push_back(sigma_variant(sigma));
    while (std::next_permutation(sigma.begin(), sigma.end()));
  } else {
    for (int k = 0; k < samples; ++k) {
      std::shuffle(sigma.begin(), sigma.end(), rng);
      out.push_back(sigma_variant(sigma));
    }
  }
  return out;
}

std::vector<ElementSet> antichains(const IdealSpace& S) {
  std::vector<ElementSet> out;
  for (const auto& I : S.ideals()) out.push_back(maximal_elements(S.poset(), I));
  return out;
}

// -- striker ---------------------------------------------------------------

std::vector<Item> striker_items(const SuiteBounds& b) {
  std::vector<Item> items;
  auto posets = corpus(b.max);
  for (std::size_t k = 0; k < posets.size(); ++k) {
    items.push_back([P = posets[k], seed = b.seed + k] {
      const std::string name = "striker " + poset_name(P);
      IdealSpace S(P);
      std::mt19937_64 rng(seed);
      for (const auto& variant : action_variants(P, rng)) {
        auto orbits = orbits_of(S, variant);
        for (int p = 0; p < P.size(); ++p)
          if (!zero_on_every_orbit(t_signed(S, p).values, orbits))
            return fail(name, "T_p orbit sum is nonzero", {{"action", variant}, {"element", P.label(p)}});
      }
      std::size_t checked = 0;
      if (S.size() <= 100) {
        auto orbits = orbits_of(S, "rowmotion");
        for (const auto& A : antichains(S)) {
          if (!zero_on_every_orbit(antichain_toggleability(S, A, ToggleKind::signed_).values, orbits))
            return fail(name, "T_A orbit sum is nonzero", {{"antichain", A.str()}});
          ++checked;
        }
      }
      return pass(name, std::to_string(checked) + " antichain statistics");
    });
  }
  return items;
}

// -- rooks and half-rooks ----------------------------------------------------

bool all_equal(const Statistic& f, const Rational& c) {
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] != c) return false;
  return true;
}

CheckResult check_rooks(const Poset& P, const std::vector<std::pair<std::string, std::function<Statistic(const IdealSpace&, bool)>>>& rooks) {
  const std::string name = "rooks " + poset_name(P);
  IdealSpace S(P);
  for (const auto& [label, rook] : rooks) {
    if (!all_equal(rook(S, false), 1)) return fail(name, "rook is not identically 1", {{"rook", label}});
    auto d = decompose(S, rook(S, true));
    if (!d || d->constant != 1) return fail(name, "reduced rook is not equivalent to 1", {{"rook", label}});
  }
  return pass(name, std::to_string(rooks.size()) + " rooks");
}

std::vector<Item> rook_items(const SuiteBounds& b) {
  using Rook = std::pair<std::string, std::function<Statistic(const IdealSpace&, bool)>>;
  std::vector<Item> items;
  auto cell_label = [](const std::string& kind, int i, int j) {
    return kind + ":" + std::to_string(i) + "," + std::to_string(j);
  };
  for (int a = 1; a <= b.max_cells; ++a)
    for (int c = a; a * c <= b.max_cells; ++c)
      items.push_back([=] {
        std::vector<Rook> rooks;
        for (int i = 1; i <= a; ++i)
          for (int j = 1; j <= c; ++j)
            rooks.emplace_back(cell_label("rook", i, j),
                               [i, j](const IdealSpace& S, bool red) { return rook_rect(S, i, j, red); });
        return check_rooks(rectangle(a, c), rooks);
      });
  for (int n = 1; n * (n + 1) / 2 <= b.max_cells; ++n) {
    items.push_back([=] {
      std::vector<Rook> rooks;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          rooks.emplace_back(cell_label("rook", i, j),
                             [i, j](const IdealSpace& S, bool red) { return rook_sstair(S, i, j, red); });
      return check_rooks(shifted_staircase(n), rooks);
    });
    items.push_back([=] {
      std::vector<Rook> rooks;
      for (int i = 1; i <= n; ++i)
        rooks.emplace_back("rookA:" + std::to_string(i), [i](const IdealSpace& S, bool red) { return rook_A(S, i, red); });
      return check_rooks(root_poset_A(n), rooks);
    });
  }
  for (int n = 1; n * n <= b.max_cells; ++n)
    items.push_back([=] {
      std::vector<Rook> rooks;
      for (int i = 1; i <= n; ++i) {
        rooks.emplace_back("rookB:" + std::to_string(i), [i](const IdealSpace& S, bool red) { return rook_B(S, i, red); });
        rooks.emplace_back("vrookB:" + std::to_string(i),
                           [i](const IdealSpace& S, bool red) { return var_rook_B(S, i, red); });
      }
      return check_rooks(root_poset_B(n), rooks);
    });
  return items;
}

// 1_p = sum_{filter of p} T-_q - sum_{strict filter} T+_q, cellwise.
CheckResult check_half_rooks(const Poset& P) {
  const std::string name = "halfrook " + poset_name(P);
  IdealSpace S(P);
  for (int p = 0; p < P.size(); ++p) {
    const Coord c = P.coord(p);
    for (const auto& I : S.ideals()) {
      int value = 0;
      for (int r = 0; r < P.size(); ++r) {
        const Coord d = P.coord(r);
        if (d.i >= c.i && d.j >= c.j && toggles_out(P, r, I)) ++value;
        if (d.i > c.i && d.j > c.j && toggles_in(P, r, I)) --value;
      }
      if (value != (I.contains(p) ? 1 : 0))
        return fail(name, "half-rook identity fails", {{"element", P.label(p)}, {"ideal", I.str()}});
    }
  }
  return pass(name);
}

std::vector<Item> half_rook_items(const SuiteBounds& b) {
  std::vector<Item> items;
  for (int a = 1; a <= b.max_cells; ++a)
    for (int c = a; a * c <= b.max_cells; ++c) items.push_back([=] { return check_half_rooks(rectangle(a, c)); });
  for (int n = 1; n * (n + 1) / 2 <= b.max_cells; ++n) items.push_back([=] { return check_half_rooks(root_poset_A(n)); });
  return items;
}

// -- lifting -----------------------------------------------------------------

CheckResult check_lifting(const Poset& P, std::uint64_t seed) {
  const std::string name = "lifting " + poset_name(P);
  IdealSpace S(P);
  std::mt19937_64 rng(seed);

  for (const auto& I : S.ideals()) {
    auto J = vertex_ideal(P, pl_rowmotion(P, vertex_point(P, I)));
    if (!J || !(*J == rowmotion::rowmotion(P, I)))
      return fail(name, "vertex specialization differs from rowmotion", {{"ideal", I.str()}});
  }

  std::vector<std::string> variants{"rowmotion"};
  if (P.is_ranked()) variants.push_back("gyration");
  for (const auto& variant : variants) {
    auto pl = pl_action(P, variant);
    auto bi = b_action(P, variant);
    for (int trial = 0; trial < 2; ++trial) {
      auto x = random_pl_point(P, rng, random_rational(rng, 5), 0);
      x.omega = x.alpha + random_positive_rational(rng, 5);
      auto orbit = finite_orbit(pl, x);
      if (!orbit) return fail(name, "PL orbit did not close", {{"action", variant}});
      for (int p = 0; p < P.size(); ++p) {
        Rational sum = 0;
        for (const auto& y : *orbit) sum += pl_toggleability(ToggleKind::signed_, P, p, y);
        if (sum != 0) return fail(name, "T^PL orbit sum is nonzero", {{"action", variant}, {"element", P.label(p)}});
      }
      auto z = random_b_point(P, rng, random_positive_rational(rng, 5), random_positive_rational(rng, 5));
      auto borbit = finite_orbit(bi, z);
      if (!borbit) return fail(name, "birational orbit did not close", {{"action", variant}});
      for (int p = 0; p < P.size(); ++p) {
        Rational prod = 1;
        for (const auto& y : *borbit) prod *= b_toggleability(ToggleKind::signed_, P, p, y);
        if (prod != 1) return fail(name, "T^B orbit product is not 1", {{"action", variant}, {"element", P.label(p)}});
      }
    }
  }

  if (!has_at_most_two_covers(P)) return pass(name, "lift of certificates skipped: an element has three covers");
  int lifted = 0;
  for (const char* expr : {"antichain_card", "ideal_card"}) {
    auto f = parse_statistic(S, expr);
    auto d = decompose(S, f);
    if (!d) continue;
    auto g = lift_certificate(P, *f.form, *d);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_pl_point(P, rng, 0, random_positive_rational(rng, 5));
      if (evaluate_pl(P, g, x) != d->constant * (x.omega - x.alpha))
        return fail(name, "lifted certificate is not constant (PL)", {{"statistic", expr}});
      auto y = random_b_point(P, rng, random_positive_rational(rng, 5), random_positive_rational(rng, 5));
      if (!evaluate_b(P, g, y).equals_power(y.omega / y.alpha, d->constant))
        return fail(name, "lifted certificate is not constant (birational)", {{"statistic", expr}});
    }
    ++lifted;
  }
  return pass(name, std::to_string(lifted) + " certificates lifted");
}

std::vector<Item> lifting_items(const SuiteBounds& b) {
  std::vector<Item> items;
  std::vector<Poset> posets;
  for (int a = 1; a <= std::min(b.max, 3); ++a)
    for (int c = a; c <= std::min(b.max, 3); ++c) posets.push_back(rectangle(a, c));
  for (int n = 2; n <= std::min(b.max, 3); ++n) {
    posets.push_back(shifted_staircase(n));
    posets.push_back(root_poset_A(n));
    posets.push_back(double_tailed_diamond(n));
  }
  if (b.max >= 2) posets.push_back(root_poset_B(2));
  for (std::size_t k = 0; k < posets.size(); ++k)
    items.push_back([P = posets[k], seed = b.seed + k] { return check_lifting(P, seed); });
  return items;
}

// -- q-Striker -----------------------------------------------------------------

CheckResult check_q_striker(const Poset& P, std::uint64_t seed) {
  const std::string name = "qstriker " + poset_name(P);
  IdealSpace S(P);
  std::mt19937_64 rng(seed);
  int runs = 0;
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 3}}) {
    for (int t = 0; t < 3; ++t) {
      FlavorAlphabet A = t == 0 ? FlavorAlphabet(r, s) : FlavorAlphabet::random(r, s, rng);
      LabelingSpace L(S, A, 500'000);
      auto orbits = q_orbits(L);
      for (int p = 0; p < P.size(); ++p) {
        auto tq = t_q(S, p);
        Vector<Rational> v(static_cast<Eigen::Index>(S.size()));
        for (std::size_t k = 0; k < S.size(); ++k) v(static_cast<Eigen::Index>(k)) = tq[k](A.q());
        auto rep = q_homomesy_check(L, orbits, v);
        if (!rep.is_homomesic || rep.global_average != 0)
          return fail(name, "T^q_p is not 0-mesic", {{"r", r}, {"s", s}, {"theta", A.str()}, {"element", P.label(p)}});
      }
      if (!flavor_cycle_law(L, orbits).holds)
        return fail(name, "flavor-cycle counting law fails", {{"r", r}, {"s", s}, {"theta", A.str()}});
      ++runs;
    }
  }
  return pass(name, std::to_string(runs) + " (r,s,theta) runs");
}

std::vector<Item> q_striker_items(const SuiteBounds& b) {
  std::vector<Item> items;
  std::vector<Poset> posets;
  for (int a = 1; a <= std::min(b.max, 2); ++a)
    for (int c = a; c <= std::min(b.max, 3); ++c) posets.push_back(rectangle(a, c));
  for (int n = 2; n <= std::min(b.max, 3); ++n) {
    posets.push_back(root_poset_A(n));
    posets.push_back(shifted_staircase(n));
  }
  for (std::size_t k = 0; k < posets.size(); ++k)
    items.push_back([P = posets[k], seed = b.seed + k] { return check_q_striker(P, seed); });
  return items;
}

// -- spans ---------------------------------------------------------------------

std::vector<Item> span_items(const SuiteBounds& b) {
  std::vector<Item> items;
  for (const auto& P : corpus(b.max)) {
    items.push_back([P] {
      const std::string name = "spans " + poset_name(P);
      IdealSpace S(P);
      for (const Rational& q : {Rational(0), Rational(1, 2), Rational(1), Rational(2)})
        if (!verify_independence(S, q)) return fail(name, "toggleability statistics are dependent", {{"q", to_string(q)}});
      if (S.size() > 200) return pass(name, "antichain span skipped: more than 200 antichains");
      const int expected = static_cast<int>(S.size() - orbits_of(S, "rowmotion").size());
      const int got = antichain_span_dim(S);
      if (got != expected)
        return fail(name, "antichain span dimension differs from |A(P)| - #orbits", {{"dim", got}, {"expected", expected}});
      return pass(name, "dim span T_A = " + std::to_string(got));
    });
  }
  return items;
}

// -- table2 --------------------------------------------------------------------

std::vector<Item> table2_items(const SuiteBounds& b) {
  struct Row {
    std::string family;
    std::function<Poset(int, int)> make;
    std::function<SpaceDims(int, int)> expected;
    bool two_params;
  };
  const std::vector<Row> rows{
      {"rect", [](int a, int c) { return rectangle(a, c); },
       [](int a, int c) { return SpaceDims{a + c - 1, a + c - 1, a + c - 1, 2}; }, true},
      {"sstair", [](int n, int) { return shifted_staircase(n); },
       [](int n, int) { return SpaceDims{2 * n - 1, 2 * n - 1, n + 1, 2}; }, false},
      {"rootA", [](int n, int) { return root_poset_A(n); }, [](int n, int) { return SpaceDims{n, n, 1, 0}; }, false},
      {"rootB", [](int n, int) { return root_poset_B(n); },
       [](int n, int) { return SpaceDims{2 * n - 1, 2 * n - 1, 2, 1}; }, false},
  };
  auto dims_json = [](const SpaceDims& d) {
    return nlohmann::json{{"dim_A", d.dim_A}, {"dim_I", d.dim_I}, {"dim_A_q", d.dim_A_q}, {"dim_I_q", d.dim_I_q}};
  };
  std::vector<Item> items;
  for (const auto& row : rows) {
    for (int x = b.min; x <= b.max; ++x) {
      for (int y = row.two_params ? x : 0; y <= (row.two_params ? b.max : 0); ++y) {
        items.push_back([=] {
          Poset P = row.make(x, y);
          const std::string name = "table2 " + poset_name(P);
          IdealSpace S(P);
          SpaceDims got = toggleability_space_dims(S), want = row.expected(x, y);
          nlohmann::json data{{"computed", dims_json(got)}, {"table", dims_json(want)}};
          if (got.dim_A != want.dim_A || got.dim_I != want.dim_I || got.dim_A_q != want.dim_A_q ||
              got.dim_I_q != want.dim_I_q)
            return fail(name, "dimensions differ from the table row", data);
          return pass(name, data["computed"].dump());
        });
      }
    }
  }
  return items;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.counterexample.is_null()) e["counterexample"] = c.counterexample;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"striker", "rooks", "halfrook", "lifting", "qstriker", "spans", "table2"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds) {
  if (bounds.max < 0 || bounds.max_cells < 0 || bounds.min < 1 || bounds.jobs < 1)
    throw std::invalid_argument("bounds must be nonnegative, --min at least 1 and --jobs positive");
  static const std::map<std::string, std::function<std::vector<Item>(const SuiteBounds&)>> builders{
      {"striker", striker_items}, {"rooks", rook_items},       {"halfrook", half_rook_items}, {"lifting", lifting_items},
      {"qstriker", q_striker_items}, {"spans", span_items}, {"table2", table2_items}};
  auto it = builders.find(name);
  if (it == builders.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return {name, run_items(it->second(bounds), bounds.jobs)};
}

}  // namespace rowmotion::cli
