#pragma once

// Exact membership of a statistic in span{1} + span{T_p} over Q, and in
// span{1} + span{T^q_p} over Q(q), with verified certificates; independence
// checks and dimensions of toggleability spaces.

#include "rowmotion/polynomial.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/rational.hpp"
#include "rowmotion/statistics.hpp"

#include <optional>
#include <vector>

namespace rowmotion {

// f = constant + sum_p coeffs[p] * T_p (or T^q_p).
template <class Scalar>
struct Decomposition {
  Scalar constant;
  Vector<Scalar> coeffs;
  bool verified = false;
};

// The |J| x (n+1) matrix with columns 1, T_1, ..., T_n.
Matrix<Integer> toggle_matrix(const IdealSpace& S);

// The certificate for f, verified by reconstruction on every ideal, or
// std::nullopt when f is not in the span.
std::optional<Decomposition<Rational>> decompose(const IdealSpace& S, const Vector<Rational>& f);
inline std::optional<Decomposition<Rational>> decompose(const IdealSpace& S, const Statistic& f) {
  return decompose(S, f.values);
}

// Solver over Q(q) for one ideal space. Construction inverts the square
// system on n+1 ideals whose rows are independent; every answer is then
// checked against all ideals.
class QToggleSystem {
 public:
  explicit QToggleSystem(const IdealSpace& S);

  const IdealSpace& space() const { return S_; }
  // Indices of the ideals used for the square system.
  const std::vector<std::size_t>& basis_rows() const { return rows_; }

  std::optional<Decomposition<RationalFunction>> decompose(const Vector<RationalFunction>& f) const;
  std::optional<Decomposition<RationalFunction>> decompose(const Vector<Rational>& f) const;

  // dim of {b in Q^n : sum_p b_p g_p is in the span over Q(q)} for the given
  // columns g_p (one per element).
  int constant_subspace_dim(const Matrix<Rational>& columns) const;

 private:
  const IdealSpace& S_;
  int n_;
  std::vector<std::size_t> rows_;
  Matrix<RationalFunction> inverse_;
};

std::optional<Decomposition<RationalFunction>> q_decompose(const IdealSpace& S, const Vector<Rational>& f);

// Throws std::logic_error if a coefficient has a pole at some q >= 0.
void check_no_nonnegative_poles(const Decomposition<RationalFunction>& d);

// Specialization at a value of q; throws std::domain_error at a pole.
Decomposition<Rational> specialize(const Decomposition<RationalFunction>& d, const Rational& q);

// Whether 1, T^q_1, ..., T^q_n are independent at q = q_value. Throws
// std::invalid_argument for negative q_value.
bool verify_independence(const IdealSpace& S, const Rational& q_value);

struct SpaceDims {
  int dim_A = 0;
  int dim_I = 0;
  int dim_A_q = 0;
  int dim_I_q = 0;
};

// Dimensions of {f = const mod span T} within span{T-_p} and span{1_p}, and
// the same over Q(q) with real coefficient vectors.
SpaceDims toggleability_space_dims(const IdealSpace& S);

inline constexpr std::size_t kDefaultAntichainCap = 2000;

// dim span{T_A : A antichain}; throws ResourceError past `cap` antichains.
int antichain_span_dim(const IdealSpace& S, std::size_t cap = kDefaultAntichainCap);

}  // namespace rowmotion
