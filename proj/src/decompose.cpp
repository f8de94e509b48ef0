#include "rowmotion/decompose.hpp"

#include "rowmotion/dynamics.hpp"
#include "rowmotion/linalg.hpp"

#include <stdexcept>

namespace rowmotion {

namespace {

using Eigen::Index;

RationalFunction minus_q() { return RationalFunction(Polynomial::monomial(-1, 1)); }

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  return (a * b).exact_div(gcd(a, b)).monic();
}

// Value of 1 + sum_p x_p T^q_p (with the constant weighted by x_0) at ideal I.
RationalFunction q_row_value(const Poset& P, const ElementSet& I, const Vector<RationalFunction>& x) {
  RationalFunction v = x(0);
  const RationalFunction mq = minus_q();
  minimal_complement(P, I).for_each([&](int p) { v += x(p + 1); });
  maximal_elements(P, I).for_each([&](int p) { v += mq * x(p + 1); });
  return v;
}

Index rank_of_rows(std::vector<Vector<Integer>>& rows, Index cols) {
  if (rows.empty()) return 0;
  Matrix<Integer> m(static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r].transpose();
  return rank(std::move(m));
}

}  // namespace

Matrix<Integer> toggle_matrix(const IdealSpace& S) {
  const Poset& P = S.poset();
  Matrix<Integer> M = Matrix<Integer>::Zero(static_cast<Index>(S.size()), P.size() + 1);
  for (std::size_t k = 0; k < S.size(); ++k) {
    const Index r = static_cast<Index>(k);
    M(r, 0) = 1;
    minimal_complement(P, S[k]).for_each([&](int p) { M(r, p + 1) = 1; });
    maximal_elements(P, S[k]).for_each([&](int p) { M(r, p + 1) = -1; });
  }
  return M;
}

std::optional<Decomposition<Rational>> decompose(const IdealSpace& S, const Vector<Rational>& f) {
  if (static_cast<std::size_t>(f.size()) != S.size()) throw std::invalid_argument("statistic size does not match J(P)");
  const Index n = S.poset().size();
  const Matrix<Integer> M = toggle_matrix(S);
  auto [rhs, den] = clear_denominators(f);

  Matrix<Integer> A(M.rows(), n + 2);
  A.leftCols(n + 1) = M;
  A.col(n + 1) = rhs;
  const auto pivots = bareiss_echelon(A, n + 1);
  const Index rk = static_cast<Index>(pivots.size());
  for (Index i = rk; i < A.rows(); ++i)
    if (A(i, n + 1) != 0) return std::nullopt;

  Vector<Rational> x = Vector<Rational>::Zero(n + 1);
  for (Index t = rk - 1; t >= 0; --t) {
    const Index c = pivots[static_cast<std::size_t>(t)];
    Rational s(A(t, n + 1));
    for (Index j = c + 1; j <= n; ++j)
      if (A(t, j) != 0 && x(j) != 0) s -= Rational(A(t, j)) * x(j);
    x(c) = s / Rational(A(t, c));
  }
  x /= Rational(den);

  Decomposition<Rational> d{x(0), x.tail(n), false};
  for (Index r = 0; r < M.rows(); ++r) {
    Rational v = 0;
    for (Index j = 0; j <= n; ++j)
      if (M(r, j) != 0) v += Rational(M(r, j)) * x(j);
    if (v != f(r)) throw std::logic_error("decomposition failed to reconstruct the statistic");
  }
  d.verified = true;
  return d;
}

QToggleSystem::QToggleSystem(const IdealSpace& S) : S_(S), n_(S.poset().size()) {
  const Poset& P = S.poset();
  const Index m = n_ + 1;
  // Independent rows of the q = 1 system give a square system that is
  // invertible over Q(q): its determinant is nonzero at q = 1.
  Matrix<Integer> Mt = toggle_matrix(S).transpose();
  auto cols = bareiss_echelon(Mt);
  if (static_cast<Index>(cols.size()) != m) throw std::logic_error("toggleability statistics are not independent");
  for (Index c : cols) rows_.push_back(static_cast<std::size_t>(c));

  Matrix<RationalFunction> aug(m, 2 * m);
  for (Index r = 0; r < m; ++r) {
    for (Index c = 0; c < 2 * m; ++c) aug(r, c) = RationalFunction(0);
    const ElementSet& I = S[rows_[static_cast<std::size_t>(r)]];
    aug(r, 0) = RationalFunction(1);
    minimal_complement(P, I).for_each([&](int p) { aug(r, p + 1) = RationalFunction(1); });
    maximal_elements(P, I).for_each([&](int p) { aug(r, p + 1) = minus_q(); });
    aug(r, m + r) = RationalFunction(1);
  }
  auto piv = reduce_rows(aug, m);
  if (static_cast<Index>(piv.size()) != m) throw std::logic_error("square toggleability system is singular over Q(q)");
  inverse_ = aug.rightCols(m);
}

std::optional<Decomposition<RationalFunction>> QToggleSystem::decompose(const Vector<RationalFunction>& f) const {
  if (static_cast<std::size_t>(f.size()) != S_.size()) throw std::invalid_argument("statistic size does not match J(P)");
  const Index m = n_ + 1;
  Vector<RationalFunction> rhs(m);
  for (Index r = 0; r < m; ++r) rhs(r) = f(static_cast<Index>(rows_[static_cast<std::size_t>(r)]));
  Vector<RationalFunction> x(m);
  for (Index r = 0; r < m; ++r) {
    RationalFunction v;
    for (Index c = 0; c < m; ++c)
      if (!inverse_(r, c).is_zero() && !rhs(c).is_zero()) v += inverse_(r, c) * rhs(c);
    x(r) = v;
  }
  const Poset& P = S_.poset();
  for (std::size_t k = 0; k < S_.size(); ++k)
    if (!(q_row_value(P, S_[k], x) == f(static_cast<Index>(k)))) return std::nullopt;
  Decomposition<RationalFunction> d{x(0), x.tail(n_), true};
  check_no_nonnegative_poles(d);
  return d;
}

std::optional<Decomposition<RationalFunction>> QToggleSystem::decompose(const Vector<Rational>& f) const {
  Vector<RationalFunction> g(f.size());
  for (Index k = 0; k < f.size(); ++k) g(k) = RationalFunction(f(k));
  return decompose(g);
}

int QToggleSystem::constant_subspace_dim(const Matrix<Rational>& columns) const {
  if (static_cast<std::size_t>(columns.rows()) != S_.size()) throw std::invalid_argument("column length does not match J(P)");
  const Index m = n_ + 1;
  const Index w = columns.cols();
  // Coefficients over Q(q) expressing each column on the square system.
  Matrix<RationalFunction> W(m, w);
  for (Index r = 0; r < m; ++r)
    for (Index b = 0; b < w; ++b) {
      RationalFunction v;
      for (Index c = 0; c < m; ++c) {
        const Rational& g = columns(static_cast<Index>(rows_[static_cast<std::size_t>(c)]), b);
        if (g != 0 && !inverse_(r, c).is_zero()) v += inverse_(r, c) * RationalFunction(g);
      }
      W(r, b) = v;
    }

  // Each other ideal gives the equations sum_b residual_b(q) * coef_b = 0,
  // one per power of q after clearing denominators.
  const Poset& P = S_.poset();
  std::vector<bool> in_basis(S_.size(), false);
  for (auto r : rows_) in_basis[r] = true;
  std::vector<Vector<Integer>> eqs;
  for (std::size_t k = 0; k < S_.size(); ++k) {
    if (in_basis[k]) continue;
    std::vector<RationalFunction> res(static_cast<std::size_t>(w));
    Polynomial den(1);
    for (Index b = 0; b < w; ++b) {
      res[static_cast<std::size_t>(b)] = RationalFunction(columns(static_cast<Index>(k), b)) - q_row_value(P, S_[k], W.col(b));
      den = poly_lcm(den, res[static_cast<std::size_t>(b)].den());
    }
    std::vector<Polynomial> nums;
    int deg = -1;
    for (const auto& r : res) {
      nums.push_back(r.num() * den.exact_div(r.den()));
      deg = std::max(deg, nums.back().degree());
    }
    for (int e = 0; e <= deg; ++e) {
      Vector<Rational> row(w);
      bool nonzero = false;
      for (Index b = 0; b < w; ++b) {
        row(b) = nums[static_cast<std::size_t>(b)].coeff(e);
        nonzero = nonzero || row(b) != 0;
      }
      if (nonzero) eqs.push_back(clear_denominators(row).first);
    }
  }
  return static_cast<int>(w - rank_of_rows(eqs, w));
}

std::optional<Decomposition<RationalFunction>> q_decompose(const IdealSpace& S, const Vector<Rational>& f) {
  return QToggleSystem(S).decompose(f);
}

void check_no_nonnegative_poles(const Decomposition<RationalFunction>& d) {
  auto check = [](const RationalFunction& x) {
    const Polynomial& den = x.den();
    if (den.degree() == 0) return;
    bool ok = den(0) != 0 && count_positive_roots(den) == 0;
    for (const Rational& t : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) ok = ok && den(t) > 0;
    if (!ok) throw std::logic_error("certificate coefficient " + x.str() + " has a pole at some q >= 0");
  };
  check(d.constant);
  for (Index k = 0; k < d.coeffs.size(); ++k) check(d.coeffs(k));
}

Decomposition<Rational> specialize(const Decomposition<RationalFunction>& d, const Rational& q) {
  Decomposition<Rational> r{d.constant(q), Vector<Rational>(d.coeffs.size()), d.verified};
  for (Index k = 0; k < d.coeffs.size(); ++k) r.coeffs(k) = d.coeffs(k)(q);
  return r;
}

bool verify_independence(const IdealSpace& S, const Rational& q_value) {
  if (q_value < 0) throw std::invalid_argument("independence holds only for q >= 0");
  const Poset& P = S.poset();
  const Integer a = numerator_of(q_value), b = denominator_of(q_value);
  Matrix<Integer> m = Matrix<Integer>::Zero(P.size() + 1, static_cast<Index>(S.size()));
  for (std::size_t k = 0; k < S.size(); ++k) {
    const Index c = static_cast<Index>(k);
    m(0, c) = b;
    minimal_complement(P, S[k]).for_each([&](int p) { m(p + 1, c) = b; });
    maximal_elements(P, S[k]).for_each([&](int p) { m(p + 1, c) = -a; });
  }
  return rank(std::move(m)) == P.size() + 1;
}

SpaceDims toggleability_space_dims(const IdealSpace& S) {
  const Poset& P = S.poset();
  const Index n = P.size();
  const Index J = static_cast<Index>(S.size());
  const Matrix<Integer> M = toggle_matrix(S);
  Matrix<Integer> tout = Matrix<Integer>::Zero(J, n), ind = Matrix<Integer>::Zero(J, n);
  for (std::size_t k = 0; k < S.size(); ++k) {
    const Index r = static_cast<Index>(k);
    maximal_elements(P, S[k]).for_each([&](int p) { tout(r, p) = 1; });
    S[k].for_each([&](int p) { ind(r, p) = 1; });
  }
  // The T-_p and the 1_p are each independent, so the intersections have
  // dimension n + (n+1) - rank of the joined columns.
  auto joined_rank = [&](const Matrix<Integer>& G) {
    Matrix<Integer> A(J, 2 * n + 1);
    A.leftCols(n) = G;
    A.rightCols(n + 1) = M;
    return rank(std::move(A));
  };
  SpaceDims d;
  d.dim_A = static_cast<int>(2 * n + 1 - joined_rank(tout));
  d.dim_I = static_cast<int>(2 * n + 1 - joined_rank(ind));
  QToggleSystem Q(S);
  d.dim_A_q = Q.constant_subspace_dim(tout.cast<Rational>());
  d.dim_I_q = Q.constant_subspace_dim(ind.cast<Rational>());
  return d;
}

int antichain_span_dim(const IdealSpace& S, std::size_t cap) {
  if (S.size() > cap) throw ResourceError("antichain count " + std::to_string(S.size()) + " exceeds cap");
  const Poset& P = S.poset();
  const Index J = static_cast<Index>(S.size());
  std::vector<ElementSet> mins(S.size()), maxs(S.size());
  for (std::size_t k = 0; k < S.size(); ++k) {
    mins[k] = minimal_complement(P, S[k]);
    maxs[k] = maximal_elements(P, S[k]);
  }
  Matrix<Integer> m = Matrix<Integer>::Zero(J, J);
  for (std::size_t a = 0; a < S.size(); ++a) {
    const ElementSet& A = maxs[a];
    for (std::size_t k = 0; k < S.size(); ++k) {
      int v = (A.subset_of(mins[k]) ? 1 : 0) - (A.subset_of(maxs[k]) ? 1 : 0);
      m(static_cast<Index>(a), static_cast<Index>(k)) = v;
    }
  }
  return static_cast<int>(rank(std::move(m)));
}

}  // namespace rowmotion
