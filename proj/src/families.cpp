#include "rowmotion/families.hpp"

#include "rowmotion/io.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace rowmotion {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Poset tagged(Poset P, std::string kind, std::vector<int> params) {
  std::string name = kind;
  for (size_t k = 0; k < params.size(); ++k) name += (k == 0 ? ":" : ",") + std::to_string(params[k]);
  P.set_name(name);
  P.set_family({std::move(kind), std::move(params)});
  return P;
}

// Cover data for the E6 and E7 minuscule posets: the positive roots whose
// coefficient on the minuscule simple root is 1, listed by height. Each pair is
// (lower, upper).
const std::vector<std::pair<int, int>> kE6Covers = {
    {0, 1},  {1, 2},  {2, 3},  {2, 4},   {3, 5},   {3, 6},   {4, 6},   {5, 7},   {6, 7},   {6, 8},
    {7, 9},  {8, 9},  {8, 10}, {9, 11},  {9, 12},  {10, 12}, {11, 13}, {12, 13}, {13, 14}, {14, 15}};

const std::vector<std::pair<int, int>> kE7Covers = {
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {3, 5},   {4, 6},   {4, 7},   {5, 6},   {6, 8},
    {6, 9},   {7, 9},   {8, 10},  {8, 11},  {9, 11},  {10, 12}, {10, 13}, {11, 13}, {11, 14},
    {12, 15}, {13, 15}, {13, 16}, {14, 16}, {15, 17}, {16, 17}, {16, 18}, {17, 19}, {18, 19},
    {18, 20}, {19, 21}, {19, 22}, {20, 22}, {21, 23}, {22, 23}, {23, 24}, {24, 25}, {25, 26}};

}  // namespace

Poset grid_poset(std::vector<Coord> cells, std::string name) {
  std::sort(cells.begin(), cells.end(), [](const Coord& a, const Coord& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::map<std::pair<int, int>, int> index;
  for (int p = 0; p < static_cast<int>(cells.size()); ++p) index[{cells[p].i, cells[p].j}] = p;
  std::vector<std::pair<int, int>> covers;
  for (int p = 0; p < static_cast<int>(cells.size()); ++p) {
    auto down = index.find({cells[p].i + 1, cells[p].j});
    if (down != index.end()) covers.emplace_back(p, down->second);
    auto right = index.find({cells[p].i, cells[p].j + 1});
    if (right != index.end()) covers.emplace_back(p, right->second);
  }
  int n = static_cast<int>(cells.size());
  return Poset(n, covers, std::move(cells), std::move(name));
}

Poset chain(int n) {
  require(n >= 0, "chain length must be nonnegative");
  std::vector<std::pair<int, int>> covers;
  for (int p = 0; p + 1 < n; ++p) covers.emplace_back(p, p + 1);
  return tagged(Poset(n, covers), "chain", {n});
}

Poset antichain_poset(int n) {
  require(n >= 0, "antichain size must be nonnegative");
  return tagged(Poset(n, {}), "antichain", {n});
}

Poset rectangle(int a, int b) {
  require(a >= 1 && b >= 1, "rectangle dimensions must be positive");
  std::vector<Coord> cells;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) cells.push_back({i, j});
  Poset P = tagged(grid_poset(cells, ""), "rect", {a, b});
  std::vector<int> colors;
  for (const auto& c : P.coords()) colors.push_back(c.j - c.i);
  P.set_colors(colors);
  return P;
}

Poset shifted_staircase(int n) {
  require(n >= 1, "staircase size must be positive");
  std::vector<Coord> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) cells.push_back({i, j});
  Poset P = tagged(grid_poset(cells, ""), "sstair", {n});
  // Off-diagonal file k gets color k+1; the diagonal splits by parity of i.
  std::vector<int> colors;
  for (const auto& c : P.coords()) colors.push_back(c.i == c.j ? (c.i % 2 == 1 ? 0 : 1) : c.j - c.i + 1);
  P.set_colors(colors);
  return P;
}

Poset root_poset_A(int n) {
  require(n >= 1, "root poset rank must be positive");
  std::vector<Coord> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j >= n + 1) cells.push_back({i, j});
  return tagged(grid_poset(cells, ""), "rootA", {n});
}

Poset root_poset_B(int n) {
  require(n >= 1, "root poset rank must be positive");
  std::vector<Coord> cells;
  for (int i = 1; i <= 2 * n - 1; ++i)
    for (int j = i; j <= 2 * n - 1; ++j)
      if (i + j >= 2 * n) cells.push_back({i, j});
  return tagged(grid_poset(cells, ""), "rootB", {n});
}

Poset double_tailed_diamond(int n) {
  require(n >= 2, "double-tailed diamond needs n >= 2");
  const int y1 = n - 1, y2 = n;
  std::vector<std::pair<int, int>> covers;
  for (int k = 0; k + 1 < n - 1; ++k) covers.emplace_back(k, k + 1);
  covers.emplace_back(n - 2, y1);
  covers.emplace_back(n - 2, y2);
  covers.emplace_back(y1, n + 1);
  covers.emplace_back(y2, n + 1);
  for (int k = n + 1; k + 1 <= 2 * n - 1; ++k) covers.emplace_back(k, k + 1);
  std::vector<Coord> coords;
  for (int i = 1; i <= n - 1; ++i) coords.push_back({i, 1});
  coords.push_back({n, 1});
  coords.push_back({n - 1, 2});
  for (int k = n - 1; k >= 1; --k) coords.push_back({2 * n - 1 - k, 2});
  return tagged(Poset(2 * n, covers, coords), "dtd", {n});
}

Poset minuscule_E6() { return tagged(Poset(16, kE6Covers), "E6", {}); }

Poset minuscule_E7() { return tagged(Poset(27, kE7Covers), "E7", {}); }

Poset trapezoid(int a, int b) {
  require(a >= 1 && b >= 1 && a <= b, "trapezoid needs 1 <= a <= b");
  std::vector<Coord> cells;
  for (int i = 1; i <= a + b - 1; ++i)
    for (int j = b; j <= a + b - 1; ++j)
      if (i + j >= a + b && i <= j) cells.push_back({i, j});
  return tagged(grid_poset(cells, ""), "trap", {a, b});
}

Poset chain_of_vs(int n) {
  require(n >= 1, "chain of V's needs n >= 1");
  // Element 3(k-1)+v for v in {bottom, left, right}, level k.
  std::vector<std::pair<int, int>> covers;
  for (int k = 0; k < n; ++k) {
    covers.emplace_back(3 * k, 3 * k + 1);
    covers.emplace_back(3 * k, 3 * k + 2);
    if (k + 1 < n)
      for (int v = 0; v < 3; ++v) covers.emplace_back(3 * k + v, 3 * (k + 1) + v);
  }
  return tagged(Poset(3 * n, covers), "vchain", {n});
}

CartanMatrix cartan_matrix(char type, int n) {
  require(n >= 1, "Cartan rank must be positive");
  CartanMatrix C(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j) {
    C[i][j] = -1;
    C[j][i] = -1;
  };
  for (int i = 0; i < n; ++i) C[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      require(n >= 2, "types B and C need rank >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      // Last node short in type B, long in type C.
      if (type == 'B') C[n - 1][n - 2] = -2;
      else C[n - 2][n - 1] = -2;
      break;
    case 'D':
      require(n >= 4, "type D needs rank >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      require(n >= 6 && n <= 8, "type E needs rank 6, 7 or 8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    default:
      throw std::invalid_argument(std::string("unknown Cartan type ") + type);
  }
  return C;
}

namespace {

std::vector<std::vector<int>> positive_roots(const CartanMatrix& C) {
  const int r = static_cast<int>(C.size());
  require(r >= 1, "empty Cartan matrix");
  for (const auto& row : C) require(static_cast<int>(row.size()) == r, "Cartan matrix must be square");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) require(C[i][j] == 2, "Cartan diagonal must be 2");
      else {
        require(C[i][j] <= 0, "Cartan off-diagonal entries must be nonpositive");
        require((C[i][j] == 0) == (C[j][i] == 0), "Cartan zero pattern must be symmetric");
      }
    }
  constexpr size_t kRootCap = 10000;
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen[e] = static_cast<int>(roots.size());
    roots.push_back(e);
  }
  for (size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      std::vector<int> beta = roots[k];
      int p = 0;
      while (true) {
        std::vector<int> down = beta;
        down[i] -= p + 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < r; ++j) pairing += C[i][j] * beta[j];
      if (p - pairing <= 0) continue;
      beta[i] += 1;
      if (seen.count(beta)) continue;
      seen[beta] = static_cast<int>(roots.size());
      roots.push_back(beta);
      if (roots.size() > kRootCap) throw std::invalid_argument("Cartan matrix is not of finite type");
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha != hb ? ha < hb : a < b;
  });
  return roots;
}

Poset roots_to_poset(const std::vector<std::vector<int>>& roots, std::string name) {
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) index[roots[k]] = k;
  std::vector<std::pair<int, int>> covers;
  for (int k = 0; k < static_cast<int>(roots.size()); ++k)
    for (size_t i = 0; i < roots[k].size(); ++i) {
      auto up = roots[k];
      up[i] += 1;
      auto it = index.find(up);
      if (it != index.end()) covers.emplace_back(k, it->second);
    }
  return Poset(static_cast<int>(roots.size()), covers, std::nullopt, std::move(name));
}

}  // namespace

Poset root_poset_from_cartan(const CartanMatrix& C, std::string name) {
  return roots_to_poset(positive_roots(C), std::move(name));
}

Poset root_layer_from_cartan(const CartanMatrix& C, int node, std::string name) {
  require(node >= 0 && node < static_cast<int>(C.size()), "node out of range");
  std::vector<std::vector<int>> layer;
  for (auto& root : positive_roots(C))
    if (root[node] == 1) layer.push_back(root);
  return roots_to_poset(layer, std::move(name));
}

std::vector<Poset> all_minuscule(int up_to_size) {
  std::vector<Poset> out;
  for (int a = 1; a <= up_to_size; ++a)
    for (int b = a; a * b <= up_to_size; ++b) out.push_back(rectangle(a, b));
  for (int n = 3; n * (n + 1) / 2 <= up_to_size; ++n) out.push_back(shifted_staircase(n));
  for (int n = 4; 2 * n <= up_to_size; ++n) out.push_back(double_tailed_diamond(n));
  if (up_to_size >= 16) out.push_back(minuscule_E6());
  if (up_to_size >= 27) out.push_back(minuscule_E7());
  return out;
}

ElementSet Folding::unfold(const ElementSet& ideal) const {
  ElementSet out;
  ideal.for_each([&](int p) {
    Coord c = quotient.coord(p);
    auto a = doubled.at(c.i, c.j);
    auto b = doubled.at(c.j, c.i);
    if (!a || !b) throw std::logic_error("folding cell has no image in the doubled poset");
    out.insert(*a);
    out.insert(*b);
  });
  return out;
}

Folding staircase_folding(int n) { return {shifted_staircase(n), rectangle(n, n)}; }

Folding rootB_folding(int n) { return {root_poset_B(n), root_poset_A(2 * n - 1)}; }

bool has_at_most_two_covers(const Poset& P) {
  for (int p = 0; p < P.size(); ++p)
    if (P.upper_covers(p).size() > 2 || P.lower_covers(p).size() > 2) return false;
  return true;
}

namespace {

std::vector<int> parse_ints(const std::string& args, const std::string& spec) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= args.size()) {
    size_t comma = args.find(',', pos);
    std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in family spec '" + spec + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Poset parse_family(const std::string& spec) {
  if (spec == "E6") return minuscule_E6();
  if (spec == "E7") return minuscule_E7();
  auto colon = spec.find(':');
  require(colon != std::string::npos, "unknown family '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  if (kind == "file") return read_poset_json_file(args);
  std::vector<int> v = parse_ints(args, spec);
  auto arity = [&](size_t k) { require(v.size() == k, "wrong number of parameters in '" + spec + "'"); };
  if (kind == "rect") return arity(2), rectangle(v[0], v[1]);
  if (kind == "sstair") return arity(1), shifted_staircase(v[0]);
  if (kind == "rootA") return arity(1), root_poset_A(v[0]);
  if (kind == "rootB") return arity(1), root_poset_B(v[0]);
  if (kind == "dtd") return arity(1), double_tailed_diamond(v[0]);
  if (kind == "trap") return arity(2), trapezoid(v[0], v[1]);
  if (kind == "vchain") return arity(1), chain_of_vs(v[0]);
  if (kind == "chain") return arity(1), chain(v[0]);
  if (kind == "antichain") return arity(1), antichain_poset(v[0]);
  if (kind == "rootD") {
    arity(1);
    return tagged(root_poset_from_cartan(cartan_matrix('D', v[0])), "rootD", {v[0]});
  }
  throw std::invalid_argument("unknown family '" + spec + "'");
}

}  // namespace rowmotion
