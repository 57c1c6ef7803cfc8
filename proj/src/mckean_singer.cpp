#include "svir/mckean_singer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace svir {

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double heat_trace(const ComplexMatrix& positive, double t) {
  if (positive.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(positive, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    sum += std::exp(-t * std::max(0.0, es.eigenvalues()(i)));
  return sum;
}

}  // namespace

GradedOperator::GradedOperator(const ComplexMatrix& q_plus)
    : dim_plus_(static_cast<int>(q_plus.cols())), dim_minus_(static_cast<int>(q_plus.rows())) {
  if (dim() < 1) throw std::invalid_argument("GradedOperator: empty space");
  if (!all_finite(q_plus)) throw std::invalid_argument("GradedOperator: non-finite entry");
  q_ = ComplexMatrix::Zero(dim(), dim());
  q_.bottomLeftCorner(dim_minus_, dim_plus_) = q_plus;
  q_.topRightCorner(dim_plus_, dim_minus_) = q_plus.adjoint();
}

RealVector GradedOperator::grading() const {
  RealVector g(dim());
  g.head(dim_plus_).setOnes();
  g.tail(dim_minus_).setConstant(-1.0);
  return g;
}

GradedOperator make_graded_operator(int dim_plus, int dim_minus, std::uint64_t seed,
                                    int planted_zero_columns) {
  if (dim_plus < 0 || dim_minus < 0 || dim_plus + dim_minus < 1)
    throw std::invalid_argument("make_graded_operator: need nonnegative dims with p + q >= 1");
  if (planted_zero_columns < 0 || planted_zero_columns > dim_plus)
    throw std::invalid_argument("make_graded_operator: planted_zero_columns out of range");
  std::mt19937_64 rng(seed);
  ComplexMatrix q_plus = ComplexMatrix::Zero(dim_minus, dim_plus);
  for (int c = planted_zero_columns; c < dim_plus; ++c)
    for (int r = 0; r < dim_minus; ++r) {
      const double radius = std::sqrt(unit_draw(rng));
      const double angle = 2.0 * std::numbers::pi * unit_draw(rng);
      q_plus(r, c) = std::polar(radius, angle);
    }
  return GradedOperator(q_plus);
}

double supertrace(const GradedOperator& g, const ComplexMatrix& m) {
  if (m.rows() != g.dim() || m.cols() != g.dim())
    throw std::invalid_argument("supertrace: operator size does not match the graded space");
  return (g.grading().cast<std::complex<double>>().asDiagonal() * m).trace().real();
}

double supertrace_heat(const GradedOperator& g, double t) {
  if (!(t > 0)) throw std::invalid_argument("supertrace_heat: t must be positive");
  const ComplexMatrix qp = g.q_plus();
  const ComplexMatrix even_block = qp.adjoint() * qp;  // on H_+
  const ComplexMatrix odd_block = qp * qp.adjoint();   // on H_-
  return heat_trace(even_block, t) - heat_trace(odd_block, t);
}

std::pair<int, int> kernel_dims(const GradedOperator& g, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("kernel_dims: tol must be positive");
  const ComplexMatrix qp = g.q_plus();
  int rank = 0;
  if (qp.size() > 0) {
    Eigen::JacobiSVD<ComplexMatrix> svd(qp);
    const RealVector& sv = svd.singularValues();
    const double scale = sv.size() > 0 && sv(0) > 0.0 ? sv(0) : 1.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > tol * scale) ++rank;
  }
  return {g.dim_plus() - rank, g.dim_minus() - rank};
}

int fredholm_index_direct(const GradedOperator& g, double tol) {
  const auto [ker_plus, ker_minus] = kernel_dims(g, tol);
  return ker_plus - ker_minus;
}

McKeanSingerReport verify_mckean_singer(const GradedOperator& g, const std::vector<double>& ts,
                                        double tol) {
  if (ts.empty()) throw std::invalid_argument("verify_mckean_singer: no times given");
  McKeanSingerReport r;
  r.dim_plus = g.dim_plus();
  r.dim_minus = g.dim_minus();
  r.ts = ts;
  r.tol = tol;
  r.index = fredholm_index_direct(g);
  for (double t : ts) {
    const double str = supertrace_heat(g, t);
    r.supertraces.push_back(str);
    r.max_deviation = std::max(r.max_deviation, std::abs(str - r.index));
  }
  const auto [lo, hi] = std::minmax_element(r.supertraces.begin(), r.supertraces.end());
  r.max_spread = *hi - *lo;
  r.pass = r.max_deviation <= tol && r.max_spread <= tol;
  return r;
}

}  // namespace svir
