#include "rowmotion/io.hpp"

#include <fstream>
#include <stdexcept>

namespace rowmotion {

using nlohmann::json;

json poset_to_json(const Poset& P) {
  json j;
  j["n"] = P.size();
  json covers = json::array();
  for (auto [lo, hi] : P.covers()) covers.push_back({lo, hi});
  j["covers"] = covers;
  if (P.has_coords()) {
    json coords = json::array();
    for (const auto& c : P.coords()) coords.push_back({c.i, c.j});
    j["coords"] = coords;
  } else {
    j["coords"] = nullptr;
  }
  j["name"] = P.name() ? json(*P.name()) : json(nullptr);
  return j;
}

Poset poset_from_json(const json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw std::invalid_argument("cover must be a pair");
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    std::optional<std::vector<Coord>> coords;
    if (j.contains("coords") && !j["coords"].is_null()) {
      coords.emplace();
      for (const auto& c : j["coords"]) {
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument("coordinate must be a pair");
        coords->push_back({c[0].get<int>(), c[1].get<int>()});
      }
    }
    std::optional<std::string> name;
    if (j.contains("name") && !j["name"].is_null()) name = j["name"].get<std::string>();
    return Poset(n, covers, coords, name);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed poset JSON: ") + e.what());
  }
}

Poset read_poset_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open poset file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed poset JSON in '" + path + "': " + e.what());
  }
  return poset_from_json(j);
}

json to_json(const Rational& x) { return to_string(x); }

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

json to_json(const RationalFunction& f) {
  if (f.num().degree() <= 0 && f.is_polynomial()) return to_string(f.num().coeff(0));
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

namespace {

template <class Scalar>
json certificate_json(const Poset& P, const Decomposition<Scalar>& d) {
  json coeffs = json::object();
  for (int p = 0; p < P.size(); ++p) coeffs[P.label(p)] = to_json(d.coeffs(p));
  return json{{"constant", to_json(d.constant)}, {"coeffs", coeffs}, {"verified", d.verified}};
}

}  // namespace

json certificate_to_json(const Poset& P, const Decomposition<Rational>& d) { return certificate_json(P, d); }
json certificate_to_json(const Poset& P, const Decomposition<RationalFunction>& d) { return certificate_json(P, d); }

}  // namespace rowmotion
