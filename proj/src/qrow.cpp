#include "rowmotion/qrow.hpp"

#include "rowmotion/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rowmotion {

bool is_single_cycle(const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  std::vector<bool> seen(m, false);
  for (int v : perm) {
    if (v < 0 || v >= m || seen[v]) return false;
    seen[v] = true;
  }
  if (m == 0) return false;
  int k = 0, len = 0;
  do {
    k = perm[k];
    ++len;
  } while (k != 0);
  return len == m;
}

namespace {

void check_sizes(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("r and s must be positive");
  if (r + s > 255) throw std::invalid_argument("at most 255 flavors are supported");
}

std::vector<int> default_theta(int m) {
  std::vector<int> t(m);
  for (int k = 0; k < m; ++k) t[k] = (k + 1) % m;
  return t;
}

}  // namespace

FlavorAlphabet::FlavorAlphabet(int r, int s) : r_(r), s_(s) {
  check_sizes(r, s);
  theta_ = default_theta(r + s);
}

FlavorAlphabet::FlavorAlphabet(int r, int s, std::vector<int> theta) : r_(r), s_(s), theta_(std::move(theta)) {
  check_sizes(r, s);
  if (static_cast<int>(theta_.size()) != r + s || !is_single_cycle(theta_))
    throw std::invalid_argument("theta must be a single cycle on " + std::to_string(r + s) + " flavors");
}

FlavorAlphabet FlavorAlphabet::random(int r, int s, std::mt19937_64& rng) {
  check_sizes(r, s);
  std::vector<int> order(r + s);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> theta(r + s);
  for (int k = 0; k < r + s; ++k) theta[order[k]] = order[(k + 1) % (r + s)];
  return FlavorAlphabet(r, s, std::move(theta));
}

void FlavorAlphabet::set_local_theta(int p, std::vector<int> theta) {
  if (p < 0) throw std::invalid_argument("negative element index");
  if (static_cast<int>(theta.size()) != size() || !is_single_cycle(theta))
    throw std::invalid_argument("local theta must be a single cycle on " + std::to_string(size()) + " flavors");
  if (static_cast<int>(local_.size()) <= p) local_.resize(p + 1);
  local_[p] = std::move(theta);
}

int FlavorAlphabet::next(int p, int symbol) const {
  if (p < static_cast<int>(local_.size()) && !local_[p].empty()) return local_[p][symbol];
  return theta_[symbol];
}

std::string FlavorAlphabet::symbol_name(int symbol) const {
  if (symbol < 0 || symbol >= size()) throw std::out_of_range("flavor symbol out of range");
  return is_zero(symbol) ? "0_" + std::to_string(symbol + 1) : "1_" + std::to_string(symbol - s_ + 1);
}

std::string FlavorAlphabet::str() const {
  std::string out;
  for (int k = 0; k < size(); ++k) {
    if (k) out += ", ";
    out += symbol_name(k) + "->" + symbol_name(theta_[k]);
  }
  return out;
}

void check_labeling(const Poset& P, const FlavorAlphabet& A, const QLabeling& L) {
  if (static_cast<int>(L.symbols.size()) != P.size()) throw std::invalid_argument("labeling size does not match the poset");
  for (int p = 0; p < P.size(); ++p) {
    if (L.symbols[p] >= A.size()) throw std::invalid_argument("flavor symbol out of range");
    if (A.is_zero(L.symbols[p]) != L.zeros.contains(p))
      throw std::invalid_argument("labeling zeros disagree with its symbols");
  }
  if (!is_order_ideal(P, L.zeros)) throw std::invalid_argument("the zeros of a labeling must form an order ideal");
}

bool is_active(const Poset& P, int p, const QLabeling& L) {
  if (L.zeros.contains(p)) return !P.upper_cover_set(p).intersects(L.zeros);
  return P.lower_cover_set(p).subset_of(L.zeros);
}

namespace {

void toggle_in_place(const Poset& P, const FlavorAlphabet& A, int p, QLabeling& L) {
  if (!is_active(P, p, L)) return;
  int next = A.next(p, L.symbols[p]);
  L.symbols[p] = static_cast<std::uint8_t>(next);
  if (A.is_zero(next)) L.zeros.insert(p);
  else L.zeros.erase(p);
}

void rowmotion_in_place(const Poset& P, const FlavorAlphabet& A, const std::vector<int>& extension, QLabeling& L) {
  for (auto it = extension.rbegin(); it != extension.rend(); ++it) toggle_in_place(P, A, *it, L);
}

}  // namespace

QLabeling q_toggle(const Poset& P, const FlavorAlphabet& A, int p, const QLabeling& L) {
  check_element(P, p);
  QLabeling out = L;
  toggle_in_place(P, A, p, out);
  return out;
}

QLabeling q_rowmotion_by_toggles(const Poset& P, const FlavorAlphabet& A, const std::vector<int>& extension,
                                 const QLabeling& L) {
  if (!is_linear_extension(P, extension)) throw std::invalid_argument("not a linear extension");
  QLabeling out = L;
  rowmotion_in_place(P, A, extension, out);
  return out;
}

QLabeling q_rowmotion(const Poset& P, const FlavorAlphabet& A, const QLabeling& L) {
  QLabeling out = L;
  rowmotion_in_place(P, A, linear_extension(P), out);
  return out;
}

Integer count_labelings(const IdealSpace& S, int r, int s) {
  const int n = S.poset().size();
  Integer total = 0;
  for (const auto& I : S.ideals()) {
    Integer term = 1;
    for (int k = 0; k < n; ++k) term *= I.contains(k) ? s : r;
    total += term;
  }
  return total;
}

LabelingSpace::LabelingSpace(const IdealSpace& S, FlavorAlphabet A, std::size_t cap) : S_(S), A_(std::move(A)) {
  Integer count = count_labelings(S, A_.r(), A_.s());
  if (count > Integer(cap))
    throw ResourceError("J_{" + std::to_string(A_.r()) + "," + std::to_string(A_.s()) + "} has " + count.str() +
                        " labelings, over the cap of " + std::to_string(cap));
  const int n = S.poset().size();
  offset_.reserve(S.size() + 1);
  std::size_t acc = 0;
  for (const auto& I : S.ideals()) {
    offset_.push_back(acc);
    std::size_t term = 1;
    for (int k = 0; k < n; ++k) term *= static_cast<std::size_t>(I.contains(k) ? A_.s() : A_.r());
    acc += term;
  }
  offset_.push_back(acc);
  total_ = acc;
}

std::size_t LabelingSpace::ideal_index(std::size_t index) const {
  if (index >= total_) throw std::out_of_range("labeling index out of range");
  return static_cast<std::size_t>(std::upper_bound(offset_.begin(), offset_.end(), index) - offset_.begin()) - 1;
}

QLabeling LabelingSpace::labeling(std::size_t index) const {
  const std::size_t k = ideal_index(index);
  const int n = poset().size();
  QLabeling L{S_[k], std::vector<std::uint8_t>(n)};
  std::size_t rest = index - offset_[k];
  for (int p = 0; p < n; ++p) {
    if (L.zeros.contains(p)) {
      L.symbols[p] = static_cast<std::uint8_t>(rest % A_.s());
      rest /= A_.s();
    } else {
      L.symbols[p] = static_cast<std::uint8_t>(A_.s() + rest % A_.r());
      rest /= A_.r();
    }
  }
  return L;
}

std::size_t LabelingSpace::index_of(const QLabeling& L) const {
  const std::size_t k = S_.index_of(L.zeros);
  const int n = poset().size();
  std::size_t index = 0, place = 1;
  for (int p = 0; p < n; ++p) {
    if (L.zeros.contains(p)) {
      index += place * L.symbols[p];
      place *= A_.s();
    } else {
      index += place * (L.symbols[p] - A_.s());
      place *= A_.r();
    }
  }
  return offset_[k] + index;
}

std::vector<std::size_t> LabelingSpace::rowmotion_permutation() const {
  return rowmotion_permutation(linear_extension(poset()));
}

std::vector<std::size_t> LabelingSpace::rowmotion_permutation(const std::vector<int>& extension) const {
  if (!is_linear_extension(poset(), extension)) throw std::invalid_argument("not a linear extension");
  std::vector<std::size_t> image(total_);
  for (std::size_t k = 0; k < total_; ++k) {
    QLabeling L = labeling(k);
    rowmotion_in_place(poset(), A_, extension, L);
    image[k] = index_of(L);
  }
  return image;
}

std::vector<QLabeling> enumerate_labelings(const LabelingSpace& space) {
  std::vector<QLabeling> out;
  out.reserve(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) out.push_back(space.labeling(k));
  return out;
}

std::vector<std::size_t> QOrbits::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles) out.push_back(c.size());
  return out;
}

QOrbits q_orbits(const LabelingSpace& space) {
  auto image = space.rowmotion_permutation();
  std::vector<bool> hit(image.size(), false);
  for (auto v : image) {
    if (hit[v]) throw std::logic_error("q-rowmotion is not injective");
    hit[v] = true;
  }
  return {permutation_cycles(image)};
}

QHomomesyReport q_homomesy_check(const LabelingSpace& space, const QOrbits& orbits, const Vector<Rational>& f,
                                 const std::optional<RationalFunction>& expected) {
  if (static_cast<std::size_t>(f.size()) != space.ideals().size())
    throw std::invalid_argument("statistic size does not match J(P)");
  QHomomesyReport r;
  Rational total = 0;
  for (const auto& cycle : orbits.cycles) {
    Rational sum = 0;
    for (auto k : cycle) sum += f(space.ideal_index(k));
    total += sum;
    r.orbit_averages.push_back(sum / Rational(static_cast<long>(cycle.size())));
  }
  r.global_average = space.size() ? total / Rational(static_cast<long>(space.size())) : Rational(0);
  r.is_homomesic = std::all_of(r.orbit_averages.begin(), r.orbit_averages.end(),
                               [&](const Rational& a) { return a == r.orbit_averages.front(); });
  if (expected) {
    Rational c = (*expected)(space.alphabet().q());
    r.matches_expected = r.is_homomesic && c == r.global_average;
  }
  return r;
}

FlavorCycleReport flavor_cycle_law(const LabelingSpace& space, const QOrbits& orbits) {
  const FlavorAlphabet& A = space.alphabet();
  const int n = space.poset().size();
  FlavorCycleReport report;
  for (std::size_t o = 0; o < orbits.cycles.size(); ++o) {
    const auto& cycle = orbits.cycles[o];
    std::vector<long> changes(n, 0), from_one(n, 0), onto_zero(n, 0);
    QLabeling cur = space.labeling(cycle.front());
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      QLabeling nxt = space.labeling(cycle[(t + 1) % cycle.size()]);
      for (int p = 0; p < n; ++p) {
        if (cur.symbols[p] == nxt.symbols[p]) continue;
        ++changes[p];
        if (!A.is_zero(cur.symbols[p])) ++from_one[p];
        if (A.is_zero(nxt.symbols[p])) ++onto_zero[p];
      }
      cur = std::move(nxt);
    }
    for (int p = 0; p < n; ++p) {
      const long m = A.size();
      const long a = changes[p] / m;
      if (changes[p] % m != 0 || from_one[p] != a * A.r() || onto_zero[p] != a * A.s()) {
        report.holds = false;
        report.counterexample = std::make_pair(o, p);
        return report;
      }
    }
  }
  return report;
}

}  // namespace rowmotion
