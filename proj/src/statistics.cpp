#include "rowmotion/statistics.hpp"

#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace rowmotion {

namespace {

const FamilyTag& require_family(const Poset& P, const std::string& kind) {
  if (!P.family() || P.family()->kind != kind)
    throw std::invalid_argument("statistic requires a poset of family '" + kind + "'");
  return *P.family();
}

void require_coords(const Poset& P, const char* what) {
  if (!P.has_coords()) throw std::invalid_argument(std::string(what) + " requires grid coordinates");
}

// Adds c to the coefficient vector at cell (i,j) when it lies in P.
void add_at(const Poset& P, Vector<Rational>& v, int i, int j, const Rational& c) {
  if (auto p = P.at(i, j)) v(*p) += c;
}

Statistic make(const IdealSpace& S, std::string label) {
  Statistic f;
  f.values = Vector<Rational>::Zero(static_cast<Eigen::Index>(S.size()));
  f.label = std::move(label);
  return f;
}

std::string cell_label(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

ToggleForm ToggleForm::zero(int n) {
  return {Vector<Rational>::Zero(n), Vector<Rational>::Zero(n), Vector<Rational>::Zero(n)};
}

ToggleForm& ToggleForm::operator+=(const ToggleForm& o) {
  in += o.in;
  out += o.out;
  ind += o.ind;
  return *this;
}

ToggleForm& ToggleForm::operator-=(const ToggleForm& o) {
  in -= o.in;
  out -= o.out;
  ind -= o.ind;
  return *this;
}

ToggleForm& ToggleForm::operator*=(const Rational& c) {
  in *= c;
  out *= c;
  ind *= c;
  return *this;
}

Statistic operator+(const Statistic& a, const Statistic& b) {
  if (a.size() != b.size()) throw std::invalid_argument("statistics over different ideal spaces");
  Statistic r{a.values + b.values, a.label + " + " + b.label, std::nullopt};
  if (a.form && b.form) r.form = *a.form + *b.form;
  return r;
}

Statistic operator-(const Statistic& a, const Statistic& b) {
  if (a.size() != b.size()) throw std::invalid_argument("statistics over different ideal spaces");
  Statistic r{a.values - b.values, a.label + " - " + b.label, std::nullopt};
  if (a.form && b.form) r.form = *a.form - *b.form;
  return r;
}

Statistic operator*(const Rational& c, const Statistic& a) {
  Statistic r{a.values * c, to_string(c) + "*" + a.label, std::nullopt};
  if (a.form) r.form = c * *a.form;
  return r;
}

Rational evaluate(const Poset& P, const ToggleForm& form, const ElementSet& ideal) {
  Rational v = 0;
  for (int p = 0; p < P.size(); ++p) {
    if (form.in(p) != 0 && toggles_in(P, p, ideal)) v += form.in(p);
    if (form.out(p) != 0 && toggles_out(P, p, ideal)) v += form.out(p);
    if (form.ind(p) != 0 && ideal.contains(p)) v += form.ind(p);
  }
  return v;
}

Statistic from_form(const IdealSpace& S, const ToggleForm& form, std::string label) {
  const Poset& P = S.poset();
  if (form.in.size() != P.size() || form.out.size() != P.size() || form.ind.size() != P.size())
    throw std::invalid_argument("form size does not match the poset");
  std::vector<int> in_nz, out_nz, ind_nz;
  for (int p = 0; p < P.size(); ++p) {
    if (form.in(p) != 0) in_nz.push_back(p);
    if (form.out(p) != 0) out_nz.push_back(p);
    if (form.ind(p) != 0) ind_nz.push_back(p);
  }
  Statistic f = make(S, std::move(label));
  for (std::size_t k = 0; k < S.size(); ++k) {
    const ElementSet& I = S[k];
    Rational v = 0;
    for (int p : in_nz)
      if (toggles_in(P, p, I)) v += form.in(p);
    for (int p : out_nz)
      if (toggles_out(P, p, I)) v += form.out(p);
    for (int p : ind_nz)
      if (I.contains(p)) v += form.ind(p);
    f.values(static_cast<Eigen::Index>(k)) = v;
  }
  f.form = form;
  return f;
}

Statistic constant_statistic(const IdealSpace& S, const Rational& c) {
  Statistic f = make(S, to_string(c));
  f.values.setConstant(c);
  return f;
}

Statistic indicator_ideal(const IdealSpace& S, int p) {
  check_element(S.poset(), p);
  ToggleForm form = ToggleForm::zero(S.poset().size());
  form.ind(p) = 1;
  return from_form(S, form, "ind:" + S.poset().label(p));
}

Statistic t_in(const IdealSpace& S, int p) {
  check_element(S.poset(), p);
  ToggleForm form = ToggleForm::zero(S.poset().size());
  form.in(p) = 1;
  return from_form(S, form, "tin:" + S.poset().label(p));
}

Statistic t_out(const IdealSpace& S, int p) {
  check_element(S.poset(), p);
  ToggleForm form = ToggleForm::zero(S.poset().size());
  form.out(p) = 1;
  return from_form(S, form, "tout:" + S.poset().label(p));
}

Statistic t_signed(const IdealSpace& S, int p) {
  check_element(S.poset(), p);
  ToggleForm form = ToggleForm::zero(S.poset().size());
  form.in(p) = 1;
  form.out(p) = -1;
  return from_form(S, form, "t:" + S.poset().label(p));
}

QStatistic t_q(const IdealSpace& S, int p) {
  const Poset& P = S.poset();
  check_element(P, p);
  QStatistic f;
  f.values.resize(static_cast<Eigen::Index>(S.size()));
  f.label = "tq:" + P.label(p);
  const RationalFunction minus_q(Polynomial(std::vector<Rational>{0, -1}));
  for (std::size_t k = 0; k < S.size(); ++k) {
    RationalFunction v;
    if (toggles_in(P, p, S[k])) v = RationalFunction(1);
    else if (toggles_out(P, p, S[k])) v = minus_q;
    f.values(static_cast<Eigen::Index>(k)) = v;
  }
  return f;
}

QStatistic to_q(const Statistic& f) {
  QStatistic g;
  g.values.resize(f.values.size());
  for (Eigen::Index k = 0; k < f.values.size(); ++k) g.values(k) = RationalFunction(f.values(k));
  g.label = f.label;
  g.form = f.form;
  return g;
}

std::optional<int> cell(const Poset& P, int i, int j) {
  if (!P.has_coords()) return std::nullopt;
  return P.at(i, j);
}

ToggleForm rook_rect_form(const Poset& P, int i, int j, bool reduced) {
  const auto& tag = require_family(P, "rect");
  int a = tag.params.at(0), b = tag.params.at(1);
  if (i < 1 || i > a || j < 1 || j > b) throw std::invalid_argument("rook cell outside the rectangle");
  ToggleForm f = ToggleForm::zero(P.size());
  if (reduced) {
    for (int jj = 1; jj <= b; ++jj) add_at(P, f.out, i, jj, 1);
    for (int ii = 1; ii <= a; ++ii) add_at(P, f.out, ii, j, 1);
    return f;
  }
  for (int ii = 1; ii <= a; ++ii)
    for (int jj = 1; jj <= b; ++jj) {
      if (ii <= i && jj <= j) add_at(P, f.in, ii, jj, 1);
      if (ii < i && jj < j) add_at(P, f.out, ii, jj, -1);
      if (ii >= i && jj >= j) add_at(P, f.out, ii, jj, 1);
      if (ii > i && jj > j) add_at(P, f.in, ii, jj, -1);
    }
  return f;
}

ToggleForm rook_sstair_form(const Poset& P, int i, int j, bool reduced) {
  const auto& tag = require_family(P, "sstair");
  int n = tag.params.at(0);
  if (i < 1 || j > n || i > j) throw std::invalid_argument("rook cell outside the staircase");
  ToggleForm f = ToggleForm::zero(P.size());
  if (reduced) {
    for (int jj = 1; jj <= n; ++jj) add_at(P, f.out, i, jj, 1);
    for (int ii = 1; ii <= n; ++ii) add_at(P, f.out, ii, j, 1);
    for (int ii = 1; ii < i; ++ii) add_at(P, f.out, ii, ii, 1);
    for (int jj = j + 1; jj <= n; ++jj) add_at(P, f.out, jj, jj, 1);
    return f;
  }
  for (int ii = 1; ii <= n; ++ii)
    for (int jj = ii; jj <= n; ++jj) {
      if (ii <= i && jj <= j) add_at(P, f.in, ii, jj, 1);
      if (ii < i && jj < j && ii < jj) add_at(P, f.out, ii, jj, -1);
      if (ii >= i && jj >= j) add_at(P, f.out, ii, jj, 1);
      if (ii > i && jj > j && ii < jj) add_at(P, f.in, ii, jj, -1);
    }
  return f;
}

ToggleForm rook_A_form(const Poset& P, int i, bool reduced) {
  const auto& tag = require_family(P, "rootA");
  int n = tag.params.at(0);
  if (i < 1 || i > n) throw std::invalid_argument("rook index out of range");
  int c = n + 1 - i;
  ToggleForm f = ToggleForm::zero(P.size());
  if (reduced) {
    for (int jj = c; jj <= n; ++jj) add_at(P, f.out, i, jj, 1);
    for (int ii = i; ii <= n; ++ii) add_at(P, f.out, ii, c, 1);
    return f;
  }
  add_at(P, f.in, i, c, 1);
  for (int ii = i; ii <= n; ++ii)
    for (int jj = c; jj <= n; ++jj) {
      add_at(P, f.out, ii, jj, 1);
      if (ii > i && jj > c) add_at(P, f.in, ii, jj, -1);
    }
  return f;
}

ToggleForm rook_B_form(const Poset& P, int i, bool reduced) {
  const auto& tag = require_family(P, "rootB");
  int n = tag.params.at(0);
  if (i < 1 || i > n) throw std::invalid_argument("rook index out of range");
  int m = 2 * n - 1, c = 2 * n - i;
  ToggleForm f = ToggleForm::zero(P.size());
  if (reduced) {
    for (int jj = c; jj <= m; ++jj) add_at(P, f.out, i, jj, 1);
    for (int ii = i; ii <= m; ++ii) add_at(P, f.out, ii, c, 1);
    for (int jj = c + 1; jj <= m; ++jj) add_at(P, f.out, jj, jj, 1);
    return f;
  }
  add_at(P, f.in, i, c, 1);
  for (int ii = i; ii <= m; ++ii)
    for (int jj = c; jj <= m; ++jj) {
      add_at(P, f.out, ii, jj, 1);
      if (ii > i && jj > c && ii < jj) add_at(P, f.in, ii, jj, -1);
    }
  return f;
}

ToggleForm var_rook_B_form(const Poset& P, int i, bool reduced) {
  const auto& tag = require_family(P, "rootB");
  int n = tag.params.at(0);
  if (i < 1 || i > n) throw std::invalid_argument("rook index out of range");
  Poset A = root_poset_A(2 * n - 1);
  ToggleForm a = rook_A_form(A, i, reduced);
  ToggleForm f = ToggleForm::zero(P.size());
  for (int p = 0; p < A.size(); ++p) {
    Coord x = A.coord(p);
    auto q = P.at(std::min(x.i, x.j), std::max(x.i, x.j));
    if (!q) throw std::logic_error("type A cell has no type B image");
    f.in(*q) += a.in(p);
    f.out(*q) += a.out(p);
    f.ind(*q) += a.ind(p);
  }
  return f;
}

Statistic rook_rect(const IdealSpace& S, int i, int j, bool reduced) {
  return from_form(S, rook_rect_form(S.poset(), i, j, reduced), (reduced ? "rrook:" : "rook:") + cell_label(i, j));
}

Statistic rook_sstair(const IdealSpace& S, int i, int j, bool reduced) {
  return from_form(S, rook_sstair_form(S.poset(), i, j, reduced), (reduced ? "rrook:" : "rook:") + cell_label(i, j));
}

Statistic rook_A(const IdealSpace& S, int i, bool reduced) {
  return from_form(S, rook_A_form(S.poset(), i, reduced), (reduced ? "rrookA:" : "rookA:") + std::to_string(i));
}

Statistic rook_B(const IdealSpace& S, int i, bool reduced) {
  return from_form(S, rook_B_form(S.poset(), i, reduced), (reduced ? "rrookB:" : "rookB:") + std::to_string(i));
}

Statistic var_rook_B(const IdealSpace& S, int i, bool reduced) {
  return from_form(S, var_rook_B_form(S.poset(), i, reduced), (reduced ? "rvrookB:" : "vrookB:") + std::to_string(i));
}

Statistic antichain_toggleability(const IdealSpace& S, const ElementSet& antichain, ToggleKind kind) {
  const Poset& P = S.poset();
  if (!antichain.subset_of(P.all()) || !is_antichain(P, antichain)) throw std::invalid_argument("not an antichain");
  const char* tag = kind == ToggleKind::in ? "tin" : kind == ToggleKind::out ? "tout" : "t";
  Statistic f = make(S, std::string(tag) + ":" + antichain.str());
  for (std::size_t k = 0; k < S.size(); ++k) {
    const ElementSet& I = S[k];
    int v = 0;
    if (kind != ToggleKind::out && antichain.subset_of(minimal_complement(P, I))) v += 1;
    if (kind != ToggleKind::in && antichain.subset_of(maximal_elements(P, I))) v -= (kind == ToggleKind::out ? -1 : 1);
    f.values(static_cast<Eigen::Index>(k)) = v;
  }
  return f;
}

Statistic named_statistic(const IdealSpace& S, NamedKind kind) {
  const Poset& P = S.poset();
  const int n = P.size();
  ToggleForm f = ToggleForm::zero(n);
  std::string label;
  const int k = kind.arg;
  switch (kind.type) {
    case NamedKind::ideal_card:
      f.ind.setConstant(1);
      label = "ideal_card";
      break;
    case NamedKind::antichain_card:
      f.out.setConstant(1);
      label = "antichain_card";
      break;
    case NamedKind::file:
      require_coords(P, "file");
      for (int p = 0; p < n; ++p)
        if (P.coord(p).j - P.coord(p).i == k) f.ind(p) = 1;
      label = "file:" + std::to_string(k);
      break;
    case NamedKind::pos_fiber:
      require_coords(P, "pfiber");
      for (int p = 0; p < n; ++p)
        if (P.coord(p).i == k) f.out(p) = 1;
      label = "pfiber:" + std::to_string(k);
      break;
    case NamedKind::neg_fiber:
      require_coords(P, "nfiber");
      for (int p = 0; p < n; ++p)
        if (P.coord(p).j == k) f.out(p) = 1;
      label = "nfiber:" + std::to_string(k);
      break;
    case NamedKind::hook_fiber:
      require_coords(P, "lfiber");
      for (int p = 0; p < n; ++p) {
        Coord c = P.coord(p);
        if ((c.j == k && c.i <= k) || (c.i == k && c.j > k)) f.out(p) = 1;
      }
      label = "lfiber:" + std::to_string(k);
      break;
    case NamedKind::rank_alternating:
      if (!P.is_ranked()) throw std::invalid_argument("rankalt requires a ranked poset");
      for (int p = 0; p < n; ++p) f.ind(p) = P.rank(p) % 2 == 0 ? 1 : -1;
      label = "rankalt";
      break;
    case NamedKind::diag_antichain:
      require_coords(P, "diag");
      for (int p = 0; p < n; ++p)
        if (P.coord(p).i == P.coord(p).j) f.out(p) = 1;
      label = "diag";
      break;
    case NamedKind::color_class:
      if (!P.colors()) throw std::invalid_argument("color requires per-element color data");
      for (int p = 0; p < n; ++p)
        if ((*P.colors())[p] == k) f.ind(p) = 1;
      label = "color:" + std::to_string(k);
      break;
  }
  return from_form(S, f, label);
}

namespace {

std::vector<int> parse_ints(const std::string& args, const std::string& atom) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    std::size_t comma = args.find(',', pos);
    std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad argument list in '" + atom + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int element_arg(const Poset& P, const std::vector<int>& a, const std::string& atom) {
  if (a.size() == 1) {
    check_element(P, a[0]);
    return a[0];
  }
  if (a.size() == 2) {
    if (auto p = cell(P, a[0], a[1])) return *p;
    throw std::invalid_argument("cell outside the poset in '" + atom + "'");
  }
  throw std::invalid_argument("expected an element or a cell in '" + atom + "'");
}

Statistic parse_atom(const IdealSpace& S, const std::string& atom) {
  const Poset& P = S.poset();
  std::string name = atom, args;
  if (auto colon = atom.find(':'); colon != std::string::npos) {
    name = atom.substr(0, colon);
    args = atom.substr(colon + 1);
  }
  auto ints = [&](std::size_t want) {
    auto a = parse_ints(args, atom);
    if (a.size() != want) throw std::invalid_argument("wrong number of arguments in '" + atom + "'");
    return a;
  };
  auto no_args = [&] {
    if (!args.empty() || atom.find(':') != std::string::npos)
      throw std::invalid_argument("'" + name + "' takes no arguments");
  };
  if (name == "ideal_card") return no_args(), named_statistic(S, {NamedKind::ideal_card});
  if (name == "antichain_card") return no_args(), named_statistic(S, {NamedKind::antichain_card});
  if (name == "rankalt") return no_args(), named_statistic(S, {NamedKind::rank_alternating});
  if (name == "diag") return no_args(), named_statistic(S, {NamedKind::diag_antichain});
  if (name == "one") return no_args(), constant_statistic(S, 1);
  if (name == "file") return named_statistic(S, {NamedKind::file, ints(1)[0]});
  if (name == "pfiber") return named_statistic(S, {NamedKind::pos_fiber, ints(1)[0]});
  if (name == "nfiber") return named_statistic(S, {NamedKind::neg_fiber, ints(1)[0]});
  if (name == "lfiber") return named_statistic(S, {NamedKind::hook_fiber, ints(1)[0]});
  if (name == "color") return named_statistic(S, {NamedKind::color_class, ints(1)[0]});
  if (name == "ind") return indicator_ideal(S, element_arg(P, parse_ints(args, atom), atom));
  if (name == "tin") return t_in(S, element_arg(P, parse_ints(args, atom), atom));
  if (name == "tout") return t_out(S, element_arg(P, parse_ints(args, atom), atom));
  if (name == "t") return t_signed(S, element_arg(P, parse_ints(args, atom), atom));
  if (name == "rook" || name == "rrook") {
    auto a = ints(2);
    bool reduced = name == "rrook";
    if (P.family() && P.family()->kind == "sstair") return rook_sstair(S, a[0], a[1], reduced);
    return rook_rect(S, a[0], a[1], reduced);
  }
  if (name == "rookA" || name == "rrookA") return rook_A(S, ints(1)[0], name == "rrookA");
  if (name == "rookB" || name == "rrookB") return rook_B(S, ints(1)[0], name == "rrookB");
  if (name == "vrookB" || name == "rvrookB") return var_rook_B(S, ints(1)[0], name == "rvrookB");
  throw std::invalid_argument("unknown statistic '" + atom + "'");
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  try {
    parse_rational(s);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

Statistic parse_statistic(const IdealSpace& S, const std::string& expr) {
  // Split into signed terms; a sign directly after ':' or ',' belongs to an argument.
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  bool pending_sign = false;
  std::string cur;
  char prev = 0;
  auto fail = [&] { throw std::invalid_argument("malformed statistic '" + expr + "'"); };
  for (char ch : expr) {
    if ((ch == '+' || ch == '-') && prev != ':' && prev != ',') {
      if (!trim(cur).empty()) {
        terms.emplace_back(sign, trim(cur));
        cur.clear();
      } else if (pending_sign || (terms.empty() && ch == '+')) {
        fail();
      }
      sign = ch == '-' ? -1 : 1;
      pending_sign = true;
      prev = ch;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      prev = ch;
      pending_sign = false;
    }
    cur += ch;
  }
  if (trim(cur).empty()) fail();
  terms.emplace_back(sign, trim(cur));

  std::optional<Statistic> total;
  for (auto& [s, term] : terms) {
    Rational coef = s;
    std::string atom = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      std::string c = trim(term.substr(0, star));
      atom = trim(term.substr(star + 1));
      if (!is_number(c)) throw std::invalid_argument("bad coefficient '" + c + "'");
      coef *= parse_rational(c);
    }
    Statistic piece = is_number(atom) ? constant_statistic(S, parse_rational(atom)) : parse_atom(S, atom);
    Statistic scaled = coef == 1 ? piece : coef * piece;
    total = total ? *total + scaled : scaled;
  }
  total->label = trim(expr);
  return *total;
}

HomomesyReport homomesy_check(const Vector<Rational>& values, const std::vector<std::vector<std::size_t>>& orbits) {
  HomomesyReport r;
  Rational sum = 0;
  std::size_t count = 0;
  for (const auto& orbit : orbits) {
    Rational s = 0;
    for (std::size_t k : orbit) s += values(static_cast<Eigen::Index>(k));
    sum += s;
    count += orbit.size();
    r.orbit_averages.push_back(orbit.empty() ? Rational(0) : s / Rational(static_cast<long>(orbit.size())));
  }
  r.global_average = count ? sum / Rational(static_cast<long>(count)) : Rational(0);
  r.is_homomesic = true;
  for (const auto& a : r.orbit_averages)
    if (a != r.global_average) r.is_homomesic = false;
  return r;
}

HomomesyReport homomesy_check(const Statistic& f, const std::vector<std::size_t>& action) {
  if (action.size() != f.size()) throw std::invalid_argument("action and statistic sizes differ");
  return homomesy_check(f.values, permutation_cycles(action));
}

}  // namespace rowmotion
