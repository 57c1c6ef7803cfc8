#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "svir/rational.hpp"

namespace svir {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// round(x) when |x - round(x)| <= tol, empty otherwise.
std::optional<long long> nearest_integer(double x, double tol);

/// Largest entry modulus, the norm used for every matrix tolerance here.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return static_cast<double>(m.cwiseAbs().maxCoeff());
}

/// Exact equality that also tolerates differing shapes (returns false).
template <typename A, typename B>
bool same_matrix(const Eigen::DenseBase<A>& a, const Eigen::DenseBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.derived() == b.derived());
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// True iff ||M M^dagger - I|| <= tol entrywise.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  using Plain = typename Derived::PlainObject;
  const Plain prod = m * m.adjoint();
  return max_abs(prod - Plain::Identity(m.rows(), m.cols())) <= tol;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.transpose()) <= tol;
}

/// True iff every entry is within tol of 0 or 1 and each row and column has
/// exactly one entry near 1.
template <typename Derived>
bool is_permutation(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Eigen::Index n = m.rows();
  std::vector<int> col_hits(static_cast<std::size_t>(n), 0);
  for (Eigen::Index a = 0; a < n; ++a) {
    int row_hits = 0;
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto v = m(a, b);
      if (std::abs(v - decltype(v)(1)) <= tol) {
        ++row_hits;
        ++col_hits[static_cast<std::size_t>(b)];
      } else if (std::abs(v) > tol) {
        return false;
      }
    }
    if (row_hits != 1) return false;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

/// Verlinde sum N_{ab}^c = sum_x S_ax S_bx conj(S_cx) / S_0x.
template <typename Derived>
auto verlinde_sum(const Eigen::MatrixBase<Derived>& s, Eigen::Index a, Eigen::Index b,
                  Eigen::Index c) {
  using Scalar = typename Derived::Scalar;
  Scalar acc(0);
  for (Eigen::Index x = 0; x < s.cols(); ++x)
    acc += s(a, x) * s(b, x) * Eigen::numext::conj(s(c, x)) / s(0, x);
  return acc;
}

/// Reduced row-echelon description of the real commutant of (S, T).
///
/// `entries` lists the matrix positions allowed by the T-block mask, in
/// row-major order. Each row of `rref` is a solution vector over those
/// positions; the row's pivot column is `pivots[row]`, where it holds 1 and
/// every other row holds 0. A commutant element is therefore fixed by its
/// values at the pivot positions.
struct CommutantParametrization {
  Eigen::Index size = 0;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> entries;
  RealMatrix rref;
  std::vector<Eigen::Index> pivots;

  Eigen::Index dimension() const { return rref.rows(); }
  RealMatrix to_matrix(const RealVector& entry_values) const;
};

/// Solves XS = SX, XT = TX over real X. The kernel of the masked linear map is
/// read off an SVD with cutoff tol * (largest singular value).
CommutantParametrization commutant_parametrization(const ComplexMatrix& s, const ComplexMatrix& t,
                                                   double tol);

/// Frobenius-orthonormal basis of the real commutant, obtained by
/// Gram-Schmidt over the RREF rows (so the ordering is canonical).
std::vector<RealMatrix> commutant_basis(const ComplexMatrix& s, const ComplexMatrix& t, double tol);

}  // namespace svir
