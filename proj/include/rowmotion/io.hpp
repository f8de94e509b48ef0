#pragma once

// JSON interchange for posets, exact scalars and certificates.

#include "rowmotion/decompose.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace rowmotion {

inline constexpr const char* kSchemaVersion = "rowmotion/1";

// {"n": int, "covers": [[lo,hi],...], "coords": [[i,j],...] | null, "name": string | null}
nlohmann::json poset_to_json(const Poset& P);
Poset poset_from_json(const nlohmann::json& j);
Poset read_poset_json_file(const std::string& path);

nlohmann::json to_json(const Rational& x);
// Coefficient array of "num/den" strings, lowest degree first.
nlohmann::json to_json(const Polynomial& p);
// "p/q" for constants, otherwise {"num": [...], "den": [...]}.
nlohmann::json to_json(const RationalFunction& f);

// {"constant": ..., "coeffs": {label: ...}, "verified": bool}, coefficients
// keyed by element label.
nlohmann::json certificate_to_json(const Poset& P, const Decomposition<Rational>& d);
nlohmann::json certificate_to_json(const Poset& P, const Decomposition<RationalFunction>& d);

}  // namespace rowmotion
