#include "svir/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace svir {

std::optional<long long> nearest_integer(double x, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const double r = std::round(x);
  if (std::abs(x - r) <= tol) return static_cast<long long>(r);
  return std::nullopt;
}

RealMatrix CommutantParametrization::to_matrix(const RealVector& entry_values) const {
  if (entry_values.size() != static_cast<Eigen::Index>(entries.size()))
    throw std::invalid_argument("commutant: entry vector has wrong length");
  RealMatrix x = RealMatrix::Zero(size, size);
  for (std::size_t e = 0; e < entries.size(); ++e)
    x(entries[e].first, entries[e].second) = entry_values(static_cast<Eigen::Index>(e));
  return x;
}

namespace {

void check_inputs(const ComplexMatrix& s, const ComplexMatrix& t, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("commutant: tol must be positive");
  if (s.rows() != s.cols() || t.rows() != t.cols())
    throw std::invalid_argument("commutant: S and T must be square");
  if (s.rows() != t.rows()) throw std::invalid_argument("commutant: S and T differ in size");
  if (!all_finite(s) || !all_finite(t))
    throw std::invalid_argument("commutant: non-finite matrix entry");
  const Eigen::Index n = t.rows();
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      if (a != b && std::abs(t(a, b)) > tol)
        throw std::invalid_argument("commutant: T is not diagonal");
  if (!is_unitary(t, tol)) throw std::invalid_argument("commutant: T is not unitary");
}

// Reduces the rows of `k` in place; returns the pivot column of each row.
std::vector<Eigen::Index> reduce_rows(RealMatrix& k) {
  constexpr double kPivotTol = 1e-7;
  constexpr double kZeroTol = 1e-12;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < k.cols() && row < k.rows(); ++col) {
    Eigen::Index best = row;
    k.col(col).segment(row, k.rows() - row).cwiseAbs().maxCoeff(&best);
    best += row;
    if (std::abs(k(best, col)) < kPivotTol) continue;
    k.row(row).swap(k.row(best));
    k.row(row) /= k(row, col);
    for (Eigen::Index r = 0; r < k.rows(); ++r)
      if (r != row) k.row(r) -= k(r, col) * k.row(row);
    pivots.push_back(col);
    ++row;
  }
  k = k.topRows(row).eval();
  k = k.unaryExpr([](double v) { return std::abs(v) < kZeroTol ? 0.0 : v; });
  return pivots;
}

}  // namespace

CommutantParametrization commutant_parametrization(const ComplexMatrix& s, const ComplexMatrix& t,
                                                   double tol) {
  check_inputs(s, t, tol);
  const Eigen::Index n = s.rows();

  CommutantParametrization out;
  out.size = n;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      if (std::abs(t(a, a) - t(b, b)) <= tol) out.entries.emplace_back(a, b);

  const auto unknowns = static_cast<Eigen::Index>(out.entries.size());
  // Column e holds vec(E_ab S - S E_ab), real and imaginary parts stacked.
  RealMatrix system = RealMatrix::Zero(2 * n * n, unknowns);
  for (Eigen::Index e = 0; e < unknowns; ++e) {
    const auto [a, b] = out.entries[static_cast<std::size_t>(e)];
    ComplexMatrix residual = ComplexMatrix::Zero(n, n);
    residual.row(a) += s.row(b);
    residual.col(b) -= s.col(a);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        system(i * n + j, e) = residual(i, j).real();
        system(n * n + i * n + j, e) = residual(i, j).imag();
      }
  }

  Eigen::BDCSVD<RealMatrix> svd(system, Eigen::ComputeFullV);
  const RealVector& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? tol * sigma(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff && sigma(rank) > 0.0) ++rank;

  RealMatrix kernel = svd.matrixV().rightCols(unknowns - rank).transpose();
  out.pivots = reduce_rows(kernel);
  out.rref = std::move(kernel);
  return out;
}

std::vector<RealMatrix> commutant_basis(const ComplexMatrix& s, const ComplexMatrix& t, double tol) {
  const CommutantParametrization p = commutant_parametrization(s, t, tol);
  std::vector<RealVector> ortho;
  for (Eigen::Index r = 0; r < p.rref.rows(); ++r) {
    RealVector v = p.rref.row(r).transpose();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : ortho) v -= q.dot(v) * q;
    ortho.push_back(v.normalized());
  }
  std::vector<RealMatrix> basis;
  basis.reserve(ortho.size());
  for (const auto& v : ortho) basis.push_back(p.to_matrix(v));
  return basis;
}

}  // namespace svir
