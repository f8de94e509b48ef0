#include "rowmotion/poset.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace rowmotion {

ElementSet ElementSet::full(int n) {
  ElementSet s;
  for (int p = 0; p < n; ++p) s.insert(p);
  return s;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for_each([&](int p) { out.push_back(p); });
  return out;
}

std::string ElementSet::str() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for_each([&](int p) {
    out << (first ? "" : ",") << p;
    first = false;
  });
  out << "}";
  return out.str();
}

namespace {

long long coord_key(int i, int j) { return (static_cast<long long>(i) << 32) ^ static_cast<unsigned>(j); }

}  // namespace

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations, std::optional<std::vector<Coord>> coords,
             std::optional<std::string> name)
    : n_(n), coords_(std::move(coords)), name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("negative element count");
  if (n > ElementSet::kMaxElements)
    throw std::invalid_argument("posets are limited to " + std::to_string(ElementSet::kMaxElements) + " elements");
  std::vector<std::vector<int>> in(n);
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [lo, hi] : relations) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) throw std::invalid_argument("relation index out of range");
    if (lo == hi) throw std::invalid_argument("cover cycle detected: element related to itself");
    out[lo].push_back(hi);
    in[hi].push_back(lo);
    ++indeg[hi];
  }
  // Kahn order to detect cycles and accumulate strict down-sets.
  std::vector<int> order;
  std::queue<int> ready;
  for (int p = 0; p < n; ++p)
    if (indeg[p] == 0) ready.push(p);
  while (!ready.empty()) {
    int p = ready.front();
    ready.pop();
    order.push_back(p);
    for (int q : out[p])
      if (--indeg[q] == 0) ready.push(q);
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("cover cycle detected: malformed poset");

  std::vector<ElementSet> strict_below(n);
  for (int p : order)
    for (int lo : in[p]) {
      strict_below[p] |= strict_below[lo];
      strict_below[p].insert(lo);
    }
  up_.assign(n, {});
  down_.assign(n, {});
  up_set_.assign(n, {});
  down_set_.assign(n, {});
  below_.assign(n, {});
  above_.assign(n, {});
  for (int p = 0; p < n; ++p) {
    below_[p] = strict_below[p];
    below_[p].insert(p);
    strict_below[p].for_each([&](int x) {
      bool is_cover = true;
      strict_below[p].for_each([&](int z) {
        if (z != x && strict_below[z].contains(x)) is_cover = false;
      });
      if (is_cover) {
        covers_.emplace_back(x, p);
        down_[p].push_back(x);
        up_[x].push_back(p);
        down_set_[p].insert(x);
        up_set_[x].insert(p);
      }
    });
  }
  for (int p = 0; p < n; ++p) below_[p].for_each([&](int x) { above_[x].insert(p); });
  std::sort(covers_.begin(), covers_.end());
  for (auto& v : up_) std::sort(v.begin(), v.end());

  if (coords_) {
    if (static_cast<int>(coords_->size()) != n) throw std::invalid_argument("coords length differs from n");
    for (int p = 0; p < n; ++p) {
      auto [it, fresh] = coord_index_.emplace(coord_key((*coords_)[p].i, (*coords_)[p].j), p);
      if (!fresh) throw std::invalid_argument("duplicate grid coordinate");
    }
  }

  // Rank function, componentwise, if the cover graph admits one.
  std::vector<int> rk(n, 0);
  std::vector<bool> seen(n, false);
  bool ranked = true;
  for (int s = 0; s < n && ranked; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    rk[s] = 0;
    for (size_t k = 0; k < comp.size() && ranked; ++k) {
      int p = comp[k];
      auto visit = [&](int q, int want) {
        if (!seen[q]) {
          seen[q] = true;
          rk[q] = want;
          comp.push_back(q);
        } else if (rk[q] != want) {
          ranked = false;
        }
      };
      for (int q : up_[p]) visit(q, rk[p] + 1);
      for (int q : down_[p]) visit(q, rk[p] - 1);
    }
    if (!ranked) break;
    int lo = rk[comp[0]];
    for (int p : comp) lo = std::min(lo, rk[p]);
    for (int p : comp) rk[p] -= lo;
  }
  if (ranked) rank_ = std::move(rk);
}

const std::vector<Coord>& Poset::coords() const {
  if (!coords_) throw std::invalid_argument("poset has no grid coordinates");
  return *coords_;
}

std::optional<int> Poset::at(int i, int j) const {
  auto it = coord_index_.find(coord_key(i, j));
  if (it == coord_index_.end()) return std::nullopt;
  return it->second;
}

int Poset::rank(int p) const {
  if (!rank_) throw std::invalid_argument("poset is not ranked");
  return (*rank_).at(p);
}

void Poset::set_colors(std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != n_) throw std::invalid_argument("color vector length differs from n");
  colors_ = std::move(colors);
}

std::string Poset::label(int p) const {
  if (coords_) return "(" + std::to_string((*coords_)[p].i) + "," + std::to_string((*coords_)[p].j) + ")";
  return std::to_string(p);
}

void check_element(const Poset& P, int p) {
  if (p < 0 || p >= P.size()) throw std::out_of_range("element index " + std::to_string(p) + " out of range");
}

bool leq(const Poset& P, int x, int y) {
  check_element(P, x);
  check_element(P, y);
  return P.principal_ideal(y).contains(x);
}

std::vector<int> linear_extension(const Poset& P) {
  const int n = P.size();
  std::vector<int> indeg(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int p = 0; p < n; ++p) {
    indeg[p] = static_cast<int>(P.lower_covers(p).size());
    if (indeg[p] == 0) ready.push(p);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    int p = ready.top();
    ready.pop();
    order.push_back(p);
    for (int q : P.upper_covers(p))
      if (--indeg[q] == 0) ready.push(q);
  }
  return order;
}

bool is_linear_extension(const Poset& P, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != P.size()) return false;
  std::vector<int> pos(P.size(), -1);
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    int p = order[k];
    if (p < 0 || p >= P.size() || pos[p] >= 0) return false;
    pos[p] = k;
  }
  for (auto [lo, hi] : P.covers())
    if (pos[lo] > pos[hi]) return false;
  return true;
}

bool is_order_ideal(const Poset& P, const ElementSet& s) {
  if (!s.subset_of(P.all())) return false;
  bool ok = true;
  s.for_each([&](int p) {
    if (!P.lower_cover_set(p).subset_of(s)) ok = false;
  });
  return ok;
}

bool is_antichain(const Poset& P, const ElementSet& s) {
  if (!s.subset_of(P.all())) return false;
  bool ok = true;
  s.for_each([&](int p) {
    ElementSet others = s;
    others.erase(p);
    if (P.principal_ideal(p).intersects(others)) ok = false;
  });
  return ok;
}

ElementSet minimal_elements(const Poset& P, const ElementSet& s) {
  ElementSet out;
  s.for_each([&](int p) {
    ElementSet strict = P.principal_ideal(p);
    strict.erase(p);
    if (!strict.intersects(s)) out.insert(p);
  });
  return out;
}

ElementSet maximal_elements(const Poset& P, const ElementSet& s) {
  ElementSet out;
  s.for_each([&](int p) {
    ElementSet strict = P.principal_filter(p);
    strict.erase(p);
    if (!strict.intersects(s)) out.insert(p);
  });
  return out;
}

ElementSet minimal_complement(const Poset& P, const ElementSet& ideal) {
  ElementSet out;
  for (int p = 0; p < P.size(); ++p)
    if (!ideal.contains(p) && P.lower_cover_set(p).subset_of(ideal)) out.insert(p);
  return out;
}

ElementSet down_closure(const Poset& P, const ElementSet& s) {
  ElementSet out;
  s.for_each([&](int p) { out |= P.principal_ideal(p); });
  return out;
}

ElementSet ideal_generated_by(const Poset& P, const ElementSet& antichain) {
  if (!is_antichain(P, antichain)) throw std::invalid_argument("ideal_generated_by: input is not an antichain");
  return down_closure(P, antichain);
}

std::vector<ElementSet> enumerate_ideals(const Poset& P, std::size_t cap) {
  std::vector<ElementSet> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<ElementSet> frontier;
  frontier.emplace_back();
  seen.insert(ElementSet());
  while (!frontier.empty()) {
    ElementSet I = frontier.front();
    frontier.pop_front();
    out.push_back(I);
    if (out.size() > cap) throw ResourceError("ideal enumeration exceeded cap of " + std::to_string(cap));
    minimal_complement(P, I).for_each([&](int p) {
      ElementSet J = I;
      J.insert(p);
      if (seen.insert(J).second) frontier.push_back(J);
    });
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}

Poset dual(const Poset& P) {
  std::vector<std::pair<int, int>> rev;
  for (auto [lo, hi] : P.covers()) rev.emplace_back(hi, lo);
  std::optional<std::vector<Coord>> coords;
  if (P.has_coords() && P.size() > 0) {
    const auto& c = P.coords();
    int imin = c[0].i, imax = c[0].i, jmin = c[0].j, jmax = c[0].j;
    for (const auto& x : c) {
      imin = std::min(imin, x.i);
      imax = std::max(imax, x.i);
      jmin = std::min(jmin, x.j);
      jmax = std::max(jmax, x.j);
    }
    coords.emplace();
    for (const auto& x : c) coords->push_back({imin + imax - x.i, jmin + jmax - x.j});
  }
  std::optional<std::string> name;
  if (P.name()) name = "dual(" + *P.name() + ")";
  return Poset(P.size(), rev, coords, name);
}

namespace {

// Shortest and longest chain lengths (in covers) from a minimal element.
std::pair<std::vector<int>, std::vector<int>> chain_depths(const Poset& P) {
  const int n = P.size();
  std::vector<int> lo(n, 0), hi(n, 0);
  for (int p : linear_extension(P)) {
    if (P.lower_covers(p).empty()) continue;
    lo[p] = 1 << 30;
    hi[p] = 0;
    for (int q : P.lower_covers(p)) {
      lo[p] = std::min(lo[p], lo[q] + 1);
      hi[p] = std::max(hi[p], hi[q] + 1);
    }
  }
  return {lo, hi};
}

}  // namespace

bool is_graded(const Poset& P) { return rank_of(P).has_value(); }

std::optional<int> rank_of(const Poset& P) {
  if (P.size() == 0) return -1;
  auto [lo, hi] = chain_depths(P);
  int shortest = 1 << 30, longest = -1;
  for (int p = 0; p < P.size(); ++p) {
    if (!P.upper_covers(p).empty()) continue;
    shortest = std::min(shortest, lo[p]);
    longest = std::max(longest, hi[p]);
  }
  if (shortest != longest) return std::nullopt;
  return longest;
}

namespace {

struct Signature {
  int below, above, down, up;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Poset& P) {
  std::vector<Signature> s(P.size());
  for (int p = 0; p < P.size(); ++p)
    s[p] = {P.principal_ideal(p).size(), P.principal_filter(p).size(), static_cast<int>(P.lower_covers(p).size()),
            static_cast<int>(P.upper_covers(p).size())};
  return s;
}

bool extend(const Poset& P, const Poset& Q, const std::vector<int>& order, const std::vector<Signature>& sp,
            const std::vector<Signature>& sq, std::vector<int>& image, std::vector<bool>& used, size_t k) {
  if (k == order.size()) return true;
  int p = order[k];
  for (int c = 0; c < Q.size(); ++c) {
    if (used[c] || sq[c] != sp[p]) continue;
    bool ok = true;
    for (size_t m = 0; m < k && ok; ++m) {
      int x = order[m];
      int fx = image[x];
      if (P.principal_ideal(p).contains(x) != Q.principal_ideal(c).contains(fx)) ok = false;
      if (P.principal_ideal(x).contains(p) != Q.principal_ideal(fx).contains(c)) ok = false;
    }
    if (!ok) continue;
    image[p] = c;
    used[c] = true;
    if (extend(P, Q, order, sp, sq, image, used, k + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Poset& P, const Poset& Q) {
  if (P.size() != Q.size() || P.covers().size() != Q.covers().size()) return false;
  auto sp = signatures(P);
  auto sq = signatures(Q);
  auto a = sp, b = sq;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  std::vector<int> image(P.size(), -1);
  std::vector<bool> used(Q.size(), false);
  return extend(P, Q, linear_extension(P), sp, sq, image, used, 0);
}

IdealSpace::IdealSpace(Poset P, std::size_t cap) : P_(std::move(P)), ideals_(enumerate_ideals(P_, cap)) {
  index_.reserve(ideals_.size());
  for (std::size_t k = 0; k < ideals_.size(); ++k) index_.emplace(ideals_[k], k);
}

std::size_t IdealSpace::index_of(const ElementSet& ideal) const {
  auto it = index_.find(ideal);
  if (it == index_.end()) throw std::out_of_range("not an order ideal of this poset: " + ideal.str());
  return it->second;
}

std::vector<std::size_t> IdealSpace::permutation(const std::function<ElementSet(const ElementSet&)>& map) const {
  std::vector<std::size_t> perm(size());
  std::vector<bool> hit(size(), false);
  for (std::size_t k = 0; k < size(); ++k) {
    auto it = index_.find(map(ideals_[k]));
    if (it == index_.end()) throw std::logic_error("map is not closed on J(P)");
    if (hit[it->second]) throw std::logic_error("map is not a bijection on J(P)");
    hit[it->second] = true;
    perm[k] = it->second;
  }
  return perm;
}

}  // namespace rowmotion
