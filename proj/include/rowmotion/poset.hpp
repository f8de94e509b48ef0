#pragma once

// Finite posets on dense element indices, order ideals, antichains and
// exhaustive enumeration of J(P).

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rowmotion {

// Thrown when an enumeration or orbit exceeds its configured cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed-capacity bitset of element indices.
class ElementSet {
 public:
  static constexpr int kWords = 2;
  static constexpr int kMaxElements = 64 * kWords;

  ElementSet() = default;
  static ElementSet full(int n);
  static ElementSet single(int p) {
    ElementSet s;
    s.insert(p);
    return s;
  }

  bool contains(int p) const { return (w_[p >> 6] >> (p & 63)) & 1u; }
  void insert(int p) { w_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  void erase(int p) { w_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }
  void flip(int p) { w_[p >> 6] ^= std::uint64_t{1} << (p & 63); }

  int size() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool subset_of(const ElementSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < kWords; ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(64 * k + b);
        w &= w - 1;
      }
    }
  }
  std::vector<int> elements() const;

  // The canonical enumeration order: cardinality, then value as an integer.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    for (int k = kWords - 1; k >= 0; --k)
      if (a.w_[k] != b.w_[k]) return a.w_[k] < b.w_[k];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : w_) h = (h ^ w) * 0xff51afd7ed558ccdull + (h >> 29);
    return static_cast<std::size_t>(h);
  }

  std::string str() const;

 private:
  std::array<std::uint64_t, kWords> w_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// Grid coordinate in matrix convention: row i, column j.
struct Coord {
  int i = 0;
  int j = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

// Family a poset was built from, e.g. {"rect", {2, 3}}.
struct FamilyTag {
  std::string kind;
  std::vector<int> params;
};

class Poset {
 public:
  Poset() = default;
  // `relations` may contain any pairs (lower, upper) generating the order;
  // they are reduced to the cover relation. Throws std::invalid_argument on
  // out-of-range indices, cycles, or more than ElementSet::kMaxElements elements.
  Poset(int n, const std::vector<std::pair<int, int>>& relations,
        std::optional<std::vector<Coord>> coords = std::nullopt, std::optional<std::string> name = std::nullopt);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int p) const { return up_[p]; }
  const std::vector<int>& lower_covers(int p) const { return down_[p]; }
  const ElementSet& upper_cover_set(int p) const { return up_set_[p]; }
  const ElementSet& lower_cover_set(int p) const { return down_set_[p]; }
  // Principal ideal and filter, both containing p.
  const ElementSet& principal_ideal(int p) const { return below_[p]; }
  const ElementSet& principal_filter(int p) const { return above_[p]; }
  ElementSet all() const { return ElementSet::full(n_); }

  bool has_coords() const { return coords_.has_value(); }
  const std::vector<Coord>& coords() const;
  Coord coord(int p) const { return coords().at(p); }
  // Element at a grid coordinate, if any.
  std::optional<int> at(int i, int j) const;

  bool is_ranked() const { return rank_.has_value(); }
  // Rank of an element (each connected component starts at rank 0).
  int rank(int p) const;
  const std::optional<std::vector<int>>& ranks() const { return rank_; }

  const std::optional<std::string>& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::optional<FamilyTag>& family() const { return family_; }
  void set_family(FamilyTag tag) { family_ = std::move(tag); }
  // Per-element color class labels (files and similar refinements).
  const std::optional<std::vector<int>>& colors() const { return colors_; }
  void set_colors(std::vector<int> colors);

  // Human-readable element label: "(i,j)" with coordinates, else the index.
  std::string label(int p) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<ElementSet> up_set_, down_set_, below_, above_;
  std::optional<std::vector<Coord>> coords_;
  std::unordered_map<long long, int> coord_index_;
  std::optional<std::vector<int>> rank_;
  std::optional<std::string> name_;
  std::optional<FamilyTag> family_;
  std::optional<std::vector<int>> colors_;
};

void check_element(const Poset& P, int p);

bool leq(const Poset& P, int x, int y);

// Lexicographically least topological order by element index.
std::vector<int> linear_extension(const Poset& P);
bool is_linear_extension(const Poset& P, const std::vector<int>& order);

bool is_order_ideal(const Poset& P, const ElementSet& s);
bool is_antichain(const Poset& P, const ElementSet& s);

ElementSet minimal_elements(const Poset& P, const ElementSet& s);
ElementSet maximal_elements(const Poset& P, const ElementSet& s);
// min(P \ I).
ElementSet minimal_complement(const Poset& P, const ElementSet& ideal);
// Down-closure of an antichain; throws std::invalid_argument otherwise.
ElementSet ideal_generated_by(const Poset& P, const ElementSet& antichain);
// Down-closure of an arbitrary subset.
ElementSet down_closure(const Poset& P, const ElementSet& s);

inline constexpr std::size_t kDefaultIdealCap = 2'000'000;

// All order ideals in canonical order; throws ResourceError past `cap`.
std::vector<ElementSet> enumerate_ideals(const Poset& P, std::size_t cap = kDefaultIdealCap);

Poset dual(const Poset& P);
bool is_graded(const Poset& P);
// Common length of all maximal chains, when graded; -1 for the empty poset.
std::optional<int> rank_of(const Poset& P);

bool are_isomorphic(const Poset& P, const Poset& Q);

// J(P) with its canonical indexing.
class IdealSpace {
 public:
  explicit IdealSpace(Poset P, std::size_t cap = kDefaultIdealCap);

  const Poset& poset() const { return P_; }
  std::size_t size() const { return ideals_.size(); }
  const std::vector<ElementSet>& ideals() const { return ideals_; }
  const ElementSet& operator[](std::size_t k) const { return ideals_[k]; }
  // Throws std::out_of_range for sets that are not ideals.
  std::size_t index_of(const ElementSet& ideal) const;

  // Permutation of ideal indices induced by a map on ideals; throws
  // std::logic_error if the map leaves J(P) or is not a bijection.
  std::vector<std::size_t> permutation(const std::function<ElementSet(const ElementSet&)>& map) const;

 private:
  Poset P_;
  std::vector<ElementSet> ideals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

}  // namespace rowmotion

template <>
struct std::hash<rowmotion::ElementSet> {
  std::size_t operator()(const rowmotion::ElementSet& s) const { return s.hash(); }
};
