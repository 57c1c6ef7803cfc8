#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <Eigen/Eigenvalues>

#include "svir/mckean_singer.hpp"

using namespace svir;

namespace {

// Oracle: diagonalize the full Q and sum Gamma-weighted heat factors in the
// eigenbasis of Q^2 = Q Q.
double supertrace_full(const GradedOperator& g, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g.q());
  const RealVector lam = es.eigenvalues();
  const ComplexMatrix& v = es.eigenvectors();
  const RealVector gamma = g.grading();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    double weight = 0.0;
    for (Eigen::Index r = 0; r < v.rows(); ++r) weight += gamma(r) * std::norm(v(r, i));
    acc += weight * std::exp(-t * lam(i) * lam(i));
  }
  return acc;
}

}  // namespace

TEST_CASE("operator layout") {
  ComplexMatrix qp(2, 3);
  qp << 1, 2, 3, 4, 5, 6;
  const GradedOperator g(qp);
  CHECK(g.dim_plus() == 3);
  CHECK(g.dim_minus() == 2);
  CHECK(g.dim() == 5);
  CHECK(same_matrix(g.q_plus(), qp));
  CHECK(max_abs(g.q() - g.q().adjoint()) == 0.0);
  CHECK(g.q().topLeftCorner(3, 3).isZero());
  CHECK(g.q().bottomRightCorner(2, 2).isZero());
  CHECK(supertrace(g, ComplexMatrix::Identity(5, 5)) == doctest::Approx(1.0));
  CHECK(supertrace(g, g.q()) == doctest::Approx(0.0));
}

TEST_CASE("zero operators") {
  const GradedOperator g(ComplexMatrix::Zero(1, 2));
  CHECK(fredholm_index_direct(g) == 1);
  CHECK(kernel_dims(g) == std::pair<int, int>{2, 1});
  CHECK(supertrace_heat(g, 1.0) == doctest::Approx(1.0));
  const GradedOperator only_plus = make_graded_operator(4, 0, 3);
  CHECK(only_plus.dim_minus() == 0);
  CHECK(fredholm_index_direct(only_plus) == 4);
  CHECK(supertrace_heat(only_plus, 0.5) == doctest::Approx(4.0));
}

TEST_CASE("generator is reproducible and lies in the unit disc") {
  const GradedOperator a = make_graded_operator(6, 4, 99);
  const GradedOperator b = make_graded_operator(6, 4, 99);
  const GradedOperator c = make_graded_operator(6, 4, 100);
  CHECK(same_matrix(a.q(), b.q()));
  CHECK_FALSE(same_matrix(a.q(), c.q()));
  CHECK(a.q_plus().cwiseAbs().maxCoeff() <= 1.0);
  const GradedOperator planted = make_graded_operator(6, 4, 99, 3);
  CHECK(planted.q_plus().leftCols(3).isZero());
  CHECK(kernel_dims(planted) == std::pair<int, int>{3, 1});
}

TEST_CASE("supertrace of the grading is p - q") {
  for (auto [p, q] : {std::pair{3, 5}, std::pair{7, 2}, std::pair{4, 4}}) {
    const GradedOperator g = make_graded_operator(p, q, 5);
    CHECK(supertrace(g, ComplexMatrix::Identity(p + q, p + q)) == doctest::Approx(p - q));
  }
}

TEST_CASE("heat supertrace equals the index on 200 random instances") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(0, 40);
  for (int i = 0; i < 200; ++i) {
    int p = dim(rng);
    const int q = dim(rng);
    if (p + q == 0) p = 1;
    const int zeros = (i % 3 == 0 && p > 0) ? static_cast<int>(rng() % static_cast<std::uint64_t>(p + 1)) : 0;
    const GradedOperator g = make_graded_operator(p, q, static_cast<std::uint64_t>(i) + 1, zeros);
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(zeros);
    const int index = fredholm_index_direct(g);
    REQUIRE(index == p - q);
    for (double t : {0.5, 1.0, 2.0}) {
      const double st = supertrace_heat(g, t);
      CHECK(std::abs(st - index) <= 1e-8);
      CHECK(std::abs(supertrace_full(g, t) - st) <= 1e-8);
    }
  }
}

TEST_CASE("large t isolates the kernel") {
  const GradedOperator g = make_graded_operator(9, 4, 11, 2);
  CHECK(std::abs(supertrace_heat(g, 50.0) - 5.0) <= 1e-8);
  CHECK(std::abs(supertrace_full(g, 50.0) - 5.0) <= 1e-8);
}

TEST_CASE("report") {
  const GradedOperator g = make_graded_operator(5, 3, 7);
  const McKeanSingerReport r = verify_mckean_singer(g, {0.5, 1.0, 2.0}, 1e-8);
  CHECK(r.pass);
  CHECK(r.index == 2);
  CHECK(r.supertraces.size() == 3);
  CHECK(r.max_deviation <= 1e-8);
  CHECK(r.max_spread <= 1e-8);
  CHECK_THROWS_AS(verify_mckean_singer(g, {}, 1e-8), std::invalid_argument);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(GradedOperator(ComplexMatrix(0, 0)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Zero(1, 1);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(GradedOperator{bad}, std::invalid_argument);
  CHECK_THROWS_AS(make_graded_operator(-1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_graded_operator(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_graded_operator(2, 2, 0, 3), std::invalid_argument);
  const GradedOperator g = make_graded_operator(2, 2, 0);
  CHECK_THROWS_AS(supertrace_heat(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(supertrace(g, ComplexMatrix::Identity(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(kernel_dims(g, 0.0), std::invalid_argument);
}
