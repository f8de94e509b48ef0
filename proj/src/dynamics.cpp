#include "rowmotion/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rowmotion {

ElementSet toggle(const Poset& P, int p, const ElementSet& ideal) {
  check_element(P, p);
  ElementSet out = ideal;
  if (ideal.contains(p)) {
    if (!P.upper_cover_set(p).intersects(ideal)) out.erase(p);
  } else if (P.lower_cover_set(p).subset_of(ideal)) {
    out.insert(p);
  }
  return out;
}

ElementSet rowmotion(const Poset& P, const ElementSet& ideal) {
  return down_closure(P, minimal_complement(P, ideal));
}

ElementSet rowmotion_by_toggles(const Poset& P, const std::vector<int>& extension, const ElementSet& ideal) {
  if (!is_linear_extension(P, extension)) throw std::invalid_argument("not a linear extension");
  ElementSet I = ideal;
  for (auto it = extension.rbegin(); it != extension.rend(); ++it) I = toggle(P, *it, I);
  return I;
}

int max_rank(const Poset& P) {
  if (!P.is_ranked()) throw std::invalid_argument("poset is not ranked");
  int top = -1;
  for (int p = 0; p < P.size(); ++p) top = std::max(top, P.rank(p));
  return top;
}

ElementSet rank_toggle(const Poset& P, int rank, const ElementSet& ideal) {
  if (!P.is_ranked()) throw std::invalid_argument("poset is not ranked");
  ElementSet I = ideal;
  for (int p = 0; p < P.size(); ++p)
    if (P.rank(p) == rank) I = toggle(P, p, I);
  return I;
}

void check_rank_permutation(const Poset& P, const std::vector<int>& sigma) {
  int top = max_rank(P);
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == top + 1;
  for (int k = 0; ok && k <= top; ++k) ok = sorted[k] == k;
  if (!ok) throw std::invalid_argument("sigma is not a permutation of the ranks 0.." + std::to_string(top));
}

ElementSet rowmotion_sigma(const Poset& P, const std::vector<int>& sigma, const ElementSet& ideal) {
  check_rank_permutation(P, sigma);
  ElementSet I = ideal;
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) I = rank_toggle(P, *it, I);
  return I;
}

std::vector<int> gyration_sequence(const Poset& P) {
  int top = max_rank(P);
  std::vector<int> sigma;
  for (int r = 1; r <= top; r += 2) sigma.push_back(r);
  for (int r = 0; r <= top; r += 2) sigma.push_back(r);
  return sigma;
}

ElementSet gyration(const Poset& P, const ElementSet& ideal) { return rowmotion_sigma(P, gyration_sequence(P), ideal); }

ElementSet antichain_rowmotion(const Poset& P, const ElementSet& antichain) {
  return minimal_complement(P, ideal_generated_by(P, antichain));
}

std::function<ElementSet(const ElementSet&)> ideal_action(const Poset& P, const std::string& variant) {
  if (variant == "rowmotion") return [&P](const ElementSet& I) { return rowmotion(P, I); };
  if (variant == "gyration") {
    auto sigma = gyration_sequence(P);
    return [&P, sigma](const ElementSet& I) { return rowmotion_sigma(P, sigma, I); };
  }
  if (variant.rfind("sigma:", 0) == 0) {
    std::vector<int> sigma;
    std::stringstream in(variant.substr(6));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        sigma.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad rank permutation '" + variant + "'");
      }
    }
    check_rank_permutation(P, sigma);
    return [&P, sigma](const ElementSet& I) { return rowmotion_sigma(P, sigma, I); };
  }
  throw std::invalid_argument("unknown action '" + variant + "'");
}

std::vector<std::vector<std::size_t>> permutation_cycles(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> cycle;
    std::size_t k = s;
    while (!seen[k]) {
      seen[k] = true;
      cycle.push_back(k);
      k = perm.at(k);
    }
    if (k != s) throw std::logic_error("not a permutation");
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace rowmotion
