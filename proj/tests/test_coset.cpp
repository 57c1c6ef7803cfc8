#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "svir/coset.hpp"
#include "svir/su2_level.hpp"

using namespace svir;

namespace {
SectorLabel ns(int j, int k) { return {j, k, 0, Branch::none}; }
SectorLabel r(int j, int k) { return {j, k, 1, Branch::none}; }
}  // namespace

TEST_CASE("central charges") {
  CHECK(central_charge(3) == Rational(7, 10));
  CHECK(central_charge(4) == Rational(1));
  CHECK(central_charge(2) == Rational(0));
  CHECK_THROWS_AS(central_charge(1), std::invalid_argument);
}

TEST_CASE("tricritical Ising sectors at m=3") {
  const auto s = enumerate_sectors(3);
  REQUIRE(s.size() == 6);
  CHECK(s == std::vector<SectorLabel>{ns(0, 0), ns(0, 2), ns(1, 1), ns(1, 3), r(0, 1), r(0, 3)});
  CHECK(lowest_weight(3, ns(0, 0)) == Rational(0));
  CHECK(lowest_weight(3, ns(1, 1)) == Rational(1, 10));
  CHECK(lowest_weight(3, ns(0, 2)) == Rational(3, 5));
  CHECK(lowest_weight(3, ns(1, 3)) == Rational(3, 2));
  CHECK(lowest_weight(3, r(0, 1)) == Rational(3, 80));
  CHECK(lowest_weight(3, r(0, 3)) == Rational(7, 16));
  CHECK(describe(3, r(0, 1)) == "(0,1,1)~(1,2,1)");
  CHECK(describe(3, ns(1, 1)) == "(1,1,0)");
}

TEST_CASE("sector counts and the split fixed point") {
  CHECK(enumerate_sectors(4).size() == 13);
  CHECK(enumerate_sectors(6).size() == 28);
  const auto s4 = enumerate_sectors(4);
  CHECK(s4[s4.size() - 2] == SectorLabel{1, 2, 1, Branch::plus});
  CHECK(s4.back() == SectorLabel{1, 2, 1, Branch::minus});
  CHECK(to_string(s4.back()) == "(1,2,1)-");
  CHECK(has_fixed_point(4));
  CHECK_FALSE(has_fixed_point(5));
  CHECK_THROWS_AS(fixed_point(5, Branch::plus), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_sectors(2), std::invalid_argument);
  for (int m = 3; m <= 12; ++m) {
    const auto s = enumerate_sectors(m);
    CHECK(std::is_sorted(s.begin(), s.end(), sector_less));
  }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(3, 1, 2, 1) == r(0, 1));
  CHECK(canonicalize(3, 0, 1, 1) == r(0, 1));
  CHECK_THROWS_AS(canonicalize(3, 0, 1, 2), std::invalid_argument);
  CHECK(canonicalize(3, 1, 3, 2) == ns(0, 0));
  CHECK_THROWS_AS(canonicalize(4, 1, 2, 1), FixedPointBranchError);
  CHECK_THROWS_AS(canonicalize(3, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(3, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(validate_sector(3, r(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(validate_sector(4, SectorLabel{1, 2, 1, Branch::none}), std::invalid_argument);
}

TEST_CASE("spin one and spin minus one") {
  CHECK(spin_exponent(3, ns(0, 0)) == Rational(0));
  CHECK(spin_exponent(4, ns(0, 4)) == Rational(0));
  CHECK(std::abs(conformal_spin(10, ns(8, 0)) - 1.0) < 1e-12);
  for (int m = 3; m <= 16; ++m) CHECK(spin_exponent(m, ns(m - 2, m)) == Rational(1, 2));
}

TEST_CASE("the plus branch sits at c/24, the minus branch has no stored weight") {
  for (int m = 4; m <= 30; m += 2) {
    CHECK(lowest_weight(m, fixed_point(m, Branch::plus)) == central_charge(m) / Rational(24));
    CHECK_FALSE(lowest_weight(m, fixed_point(m, Branch::minus)).has_value());
  }
}

TEST_CASE("coset modular invariants for m up to 12") {
  for (int m = 3; m <= 12; ++m) {
    CAPTURE(m);
    const CosetModularData d = build_coset_data(m);
    const ComplexMatrix t = d.t.asDiagonal();
    CHECK(is_unitary(d.s, 1e-10));
    CHECK(is_symmetric(d.s, 1e-12));
    CHECK(is_permutation(d.s * d.s, 1e-10));
    const ComplexMatrix st = d.s * t;
    CHECK(max_abs(st * st * st - d.s * d.s) < 1e-10);
    CHECK(d.s(0, 0).real() > 0);
    for (Eigen::Index a = 0; a < d.size(); ++a) CHECK(d.dims(a) >= 1.0 - 1e-12);
    // Fusion rules including the split fixed point rows.
    for (Eigen::Index a = 0; a < d.size(); ++a)
      for (Eigen::Index b = 0; b < d.size(); ++b)
        for (Eigen::Index c = 0; c < d.size(); ++c) {
          const auto v = verlinde_sum(d.s, a, b, c);
          const auto n = nearest_integer(v.real(), 1e-8);
          REQUIRE(n.has_value());
          REQUIRE(*n >= 0);
          REQUIRE(std::abs(v.imag()) < 1e-8);
        }
  }
}

TEST_CASE("fixed point S entries") {
  for (int m = 4; m <= 16; m += 2) {
    const CosetModularData d = build_coset_data(m);
    const auto p = d.index_of(fixed_point(m, Branch::plus));
    const auto q = d.index_of(fixed_point(m, Branch::minus));
    CHECK(std::abs(d.s(p, p) - 0.5) < 1e-12);
    CHECK(std::abs(d.s(p, q) + 0.5) < 1e-12);
    CHECK(std::abs(d.s(p, 0) - d.s(q, 0)) < 1e-14);
  }
}

TEST_CASE("sector data consistency up to m=30") {
  for (int m = 3; m <= 30; ++m) {
    CAPTURE(m);
    for (const SectorLabel& s : enumerate_sectors(m)) {
      CAPTURE(to_string(s));
      // NS sectors are sigma-Bose, Ramond sectors sigma-Fermi.
      CHECK((sigma_parity_of(m, s) == SigmaParity::fermi) == (s.l == 1));
      // sigma acts as an involution.
      CHECK(sigma_act(m, sigma_act(m, s)) == s);
      if (s.l == 1 && s.branch == Branch::none) CHECK(sigma_act(m, s) == s);
      const auto h = lowest_weight(m, s);
      if (!h) continue;
      const Rational congruent = su2_weight(m - 2, s.j) - su2_weight(m, s.k) + su2_weight(2, s.l);
      CHECK((*h - congruent).frac() == Rational(0));
      CHECK(*h >= Rational(0));
      if (s.l == 1) CHECK(*h >= central_charge(m) / Rational(24));
    }
  }
}

TEST_CASE("sigma exchanges the branches") {
  CHECK(sigma_act(4, fixed_point(4, Branch::plus)) == fixed_point(4, Branch::minus));
  CHECK(sigma_act(3, ns(0, 0)) == ns(1, 3));
}

TEST_CASE("D matrix") {
  const CosetModularData d = build_coset_data(6);
  const RealVector dv = d_matrix(d, fixed_point(6, Branch::plus));
  CHECK(dv.size() == d.size());
  // NS columns cancel between rho and sigma rho.
  for (Eigen::Index a = 0; a < d.size(); ++a)
    if (!d.is_ramond[static_cast<std::size_t>(a)]) CHECK(std::abs(dv(a)) < 1e-12);
}

TEST_CASE("index_of and equality") {
  const CosetModularData d = build_coset_data(4);
  CHECK(d.index_of(ns(0, 0)) == 0);
  CHECK_THROWS_AS(d.index_of(ns(5, 5)), std::out_of_range);
  CHECK(d == build_coset_data(4));
  CHECK_FALSE(d == build_coset_data(5));
}
