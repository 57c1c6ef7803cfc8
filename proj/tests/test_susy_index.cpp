#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include <Eigen/Eigenvalues>

#include "svir/susy_index.hpp"

using namespace svir;

namespace {

// Largest eigenvalue of the fusion matrix N_s, built from Verlinde sums.
double perron_frobenius_dimension(const CosetModularData& d, const SectorLabel& s) {
  const Eigen::Index a = d.index_of(s);
  RealMatrix n(d.size(), d.size());
  for (Eigen::Index b = 0; b < d.size(); ++b)
    for (Eigen::Index c = 0; c < d.size(); ++c) n(b, c) = std::round(verlinde_sum(d.s, a, b, c).real());
  return n.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("quantum dimensions agree with the fusion matrix eigenvalue") {
  const CosetModularData d3 = build_coset_data(3);
  const SectorLabel s{1, 1, 0, Branch::none};
  CHECK(kw_dimension(d3, s) == doctest::Approx(2 * std::cos(std::numbers::pi / 5)).epsilon(1e-12));
  CHECK(perron_frobenius_dimension(d3, s) == doctest::Approx(kw_dimension(d3, s)).epsilon(1e-10));
  for (int m : {4, 5, 6}) {
    const CosetModularData d = build_coset_data(m);
    for (const SectorLabel& x : d.sectors)
      CHECK(perron_frobenius_dimension(d, x) == doctest::Approx(kw_dimension(d, x)).epsilon(1e-9));
  }
}

TEST_CASE("global index") {
  const CosetModularData d = build_coset_data(4);
  CHECK(mu_index(d) == doctest::Approx(48.0));
  CHECK(mu_index(d) == doctest::Approx(1.0 / std::norm(d.s(0, 0))));
}

TEST_CASE("K entries are bounded by one") {
  for (int m = 3; m <= 12; ++m) {
    const CosetModularData d = build_coset_data(m);
    for (const SectorLabel& a : d.sectors)
      for (const SectorLabel& b : d.sectors) CHECK(std::abs(k_matrix_entry(d, a, b)) <= 1.0 + 1e-12);
    CHECK(std::abs(k_matrix_entry(d, d.sectors[0], d.sectors[0]) - 1.0) < 1e-12);
  }
}

TEST_CASE("kernel dimensions on Ramond sectors") {
  CHECK(ramond_kernel_dim(4, fixed_point(4, Branch::plus)) == 1);
  CHECK(ramond_kernel_dim(4, fixed_point(4, Branch::minus)) == 0);
  CHECK(ramond_kernel_dim(3, SectorLabel{0, 1, 1, Branch::none}) == 0);
  CHECK_THROWS_AS(ramond_kernel_dim(4, SectorLabel{0, 0, 0, Branch::none}), std::invalid_argument);
  for (int m = 4; m <= 20; m += 2)
    for (const SectorLabel& s : enumerate_sectors(m))
      if (s.l == 1 && s.branch == Branch::none) CHECK(ramond_kernel_dim(m, s) == 0);
}

TEST_CASE("index is +1 and -1 on the two branches") {
  for (int m = 4; m <= 28; m += 2) {
    CAPTURE(m);
    const IndexReport plus = fredholm_index(m, fixed_point(m, Branch::plus));
    const IndexReport minus = fredholm_index(m, fixed_point(m, Branch::minus));
    CHECK(plus.rounded_index == 1);
    CHECK(minus.rounded_index == -1);
    CHECK(plus.index_via_s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(plus.index_via_k == doctest::Approx(plus.index_via_s).epsilon(1e-10));
    CHECK(minus.index_via_k == doctest::Approx(minus.index_via_s).epsilon(1e-10));
    CHECK(plus.mu_a == doctest::Approx(plus.mu_b / 4));
    CHECK(std::abs(ramond_dim_sum(m, fixed_point(m, Branch::plus))) < 1e-10);
    CHECK(std::abs(ramond_dim_sum(m, fixed_point(m, Branch::minus))) < 1e-10);
  }
}

TEST_CASE("index report for m=4") {
  const IndexReport r = fredholm_index(4, fixed_point(4, Branch::plus));
  CHECK(r.mu_b == doctest::Approx(48.0));
  CHECK(r.mu_a == doctest::Approx(12.0));
  CHECK(r.d_rho == doctest::Approx(2.0));
  int total = 0;
  for (const auto& [s, n] : r.kernel_dims) {
    CHECK(s.l == 1);
    total += n;
  }
  CHECK(total == 1);
}

TEST_CASE("index errors") {
  CHECK_THROWS_WITH_AS(fredholm_index(3, SectorLabel{}), "no supersymmetric sector for odd m=3", std::invalid_argument);
  CHECK_THROWS_AS(fredholm_index(4, SectorLabel{0, 0, 0, Branch::none}), std::invalid_argument);
  CHECK_THROWS_AS(ramond_dim_sum(5, SectorLabel{}), std::invalid_argument);
}
