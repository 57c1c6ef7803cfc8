#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "svir/invariants.hpp"

using namespace svir;

namespace {

SectorLabel ns(int j, int k) { return {j, k, 0, Branch::none}; }

bool is_identity(const InvariantMatrix& z) {
  return same_matrix(z.z, IntMatrix::Identity(z.z.rows(), z.z.cols()));
}

std::vector<Eigen::VectorXi> vacuum_rows(const std::vector<InvariantMatrix>& v) {
  std::vector<Eigen::VectorXi> rows;
  for (const auto& z : v) rows.push_back(z.z.row(0).transpose());
  return rows;
}

bool contains_row(const std::vector<Eigen::VectorXi>& rows, const Eigen::VectorXi& row) {
  return std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return same_matrix(r, row); });
}

}  // namespace

TEST_CASE("epsilon") {
  CHECK(epsilon(8, 1) == 1);
  CHECK(epsilon(8, 3) == 1);
  CHECK(epsilon(8, 4) == 0);
  CHECK(epsilon(8, 5) == -1);
  CHECK(epsilon(8, 8) == 0);
  CHECK(epsilon(8, -1) == -1);
  CHECK(epsilon(8, 9) == 1);
  CHECK_THROWS_AS(epsilon(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(0, 1), std::invalid_argument);
}

TEST_CASE("parity rule") {
  CHECK(parity_ok(30, 0, 0, 0));
  CHECK(parity_first_failure(30, 3, 12, 1) == 13);
  CHECK(parity_first_failure(30, 13, 18, 1) == 7);
  // Every entry of a table row passes.
  for (int m : {10, 12, 28, 30})
    for (const AdeRow& row : ade_rows(m))
      for (const SectorLabel& s : row.theta) CHECK(parity_ok(m, s.j, s.k, s.l));
  CHECK_THROWS_AS(parity_ok(2, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("spin one sectors at m=10") {
  const auto s = spin_one_sectors(10);
  for (const SectorLabel& x : {ns(0, 0), ns(0, 6), ns(8, 0), ns(8, 6)})
    CHECK(std::count(s.begin(), s.end(), x) == 1);
  // Spin -1: a simple current, not a candidate.
  CHECK(std::count(s.begin(), s.end(), ns(0, 10)) == 0);
}

TEST_CASE("table rows") {
  CHECK(ade_rows(3).size() == 1);
  CHECK(ade_rows(3)[0].label == "(A_2, A_4)");
  CHECK(ade_rows(4)[1].label == "(A_3, D_4)");
  CHECK(ade_rows(6)[1].label == "(D_4, A_7)");
  CHECK(ade_rows(10).size() == 4);
  CHECK(ade_rows(28).size() == 3);
  CHECK(ade_rows(30)[2].label == "(E_8, A_31)");
  CHECK_THROWS_AS(ade_rows(2), std::invalid_argument);
  CHECK_THROWS_AS(theta_vector(4, {ns(9, 9)}), std::invalid_argument);
  const Eigen::VectorXi v = theta_vector(4, {ns(0, 0), ns(0, 4), ns(0, 4)});
  CHECK(v(0) == 1);
  CHECK(v.sum() == 3);
}

TEST_CASE("odd m: only the identity") {
  for (int m : {3, 5, 7, 9}) {
    CAPTURE(m);
    const auto found = enumerate_invariants(m, SearchMode::full);
    REQUIRE(found.size() == 1);
    CHECK(is_identity(found[0]));
    CHECK(found[0].ade_label == ade_rows(m)[0].label);
  }
}

TEST_CASE("even m: expected D-type and exceptional vacuum rows") {
  const auto at4 = enumerate_invariants(4, SearchMode::full);
  CHECK(at4.size() == 7);
  CHECK(contains_row(vacuum_rows(at4), theta_vector(4, {ns(0, 0), ns(0, 4)})));
  const auto at6 = enumerate_invariants(6, SearchMode::full);
  CHECK(contains_row(vacuum_rows(at6), theta_vector(6, {ns(0, 0), ns(4, 0)})));
  const auto at8 = enumerate_invariants(8, SearchMode::full);
  CHECK(contains_row(vacuum_rows(at8), theta_vector(8, {ns(0, 0), ns(0, 8)})));
  const auto at10 = enumerate_invariants(10, SearchMode::full);
  CHECK(at10.size() == 10);
  const auto rows10 = vacuum_rows(at10);
  CHECK(contains_row(rows10, theta_vector(10, {ns(0, 0), ns(8, 0)})));
  CHECK(contains_row(rows10, theta_vector(10, {ns(0, 0), ns(0, 6)})));
  CHECK(contains_row(rows10, theta_vector(10, {ns(0, 0), ns(0, 6), ns(8, 0), ns(8, 6)})));
  // Every vacuum row found is a table row, so every invariant is labeled.
  for (const auto& z : at10) CHECK(z.ade_label.has_value());
}

TEST_CASE("every found invariant commutes and is normalized") {
  for (int m = 3; m <= 10; ++m) {
    CAPTURE(m);
    const CosetModularData d = build_coset_data(m);
    for (const InvariantMatrix& z : enumerate_invariants(m, SearchMode::full)) {
      const CommutationCheck c = check_commutation(d.s, d.t, z.z, 1e-9);
      CHECK(c.s_residual < 1e-8);
      CHECK(c.t_compatible);
      CHECK(z.z(0, 0) == 1);
      CHECK(z.z.minCoeff() >= 0);
      CHECK_FALSE(z.first_row_only);
    }
  }
}

TEST_CASE("search order does not change the result") {
  for (int m : {4, 6, 8}) {
    const auto base = enumerate_invariants(m, SearchMode::full);
    for (std::uint64_t seed : {1u, 17u, 12345u}) {
      SearchOptions o;
      o.order_seed = seed;
      CHECK(enumerate_invariants(m, SearchMode::full, o) == base);
    }
  }
}

TEST_CASE("full mode guard for large m") {
  CHECK_THROWS_AS(enumerate_invariants(13, SearchMode::full), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_invariants(2, SearchMode::firstrow), std::invalid_argument);
}

TEST_CASE("first-row search reproduces the table") {
  for (int m : {10, 12, 28, 30}) {
    CAPTURE(m);
    const auto found = enumerate_invariants(m, SearchMode::firstrow);
    const auto rows = ade_rows(m);
    REQUIRE(found.size() == rows.size());
    for (const AdeRow& row : rows) {
      CHECK(contains_row(vacuum_rows(found), theta_vector(m, row.theta)));
    }
    for (const auto& z : found) {
      CHECK(z.first_row_only);
      CHECK(z.ade_label.has_value());
      CHECK(z.z.bottomRows(z.z.rows() - 1).isZero());
    }
  }
}

TEST_CASE("match_ade") {
  InvariantMatrix z{12, IntMatrix::Zero(enumerate_sectors(12).size(), enumerate_sectors(12).size()), std::nullopt, true};
  z.z.row(0) = theta_vector(12, {ns(0, 0), ns(6, 0)}).transpose();
  CHECK(match_ade(12, z) == "(E_6, A_13)");
  z.z(0, 1) += 1;
  CHECK_FALSE(match_ade(12, z).has_value());
}

TEST_CASE("extended data and lifts") {
  for (int m : {3, 4, 6}) {
    CAPTURE(m);
    const ExtendedData ext = build_extended_data(m);
    CHECK(ext.size() == 3 * (m - 1) * (m + 1));
    CHECK(is_unitary(ext.s, 1e-10));
    CHECK(ext.triples[static_cast<std::size_t>(ext.index_of(1, 2, 1))] == Triple{1, 2, 1});
    for (const InvariantMatrix& z : enumerate_invariants(m, SearchMode::full)) {
      const IntMatrix lifted = lift_invariant(m, z);
      const CommutationCheck c = check_commutation(ext.s, ext.t, lifted, 1e-9);
      CHECK(c.s_residual < 1e-9);
      CHECK(c.t_compatible);
    }
    CHECK_THROWS_AS(ext.index_of(m, 0, 0), std::out_of_range);
  }
  // The identity lifts to the coset projection: odd-parity triples vanish.
  const ExtendedData ext = build_extended_data(3);
  const IntMatrix lifted = lift_invariant(3, enumerate_invariants(3, SearchMode::full)[0]);
  CHECK(lifted(ext.index_of(0, 1, 0), ext.index_of(0, 1, 0)) == 0);
  CHECK(lifted(ext.index_of(0, 0, 0), ext.index_of(1, 3, 2)) == 1);
}

TEST_CASE("check_commutation flags violations") {
  const CosetModularData d = build_coset_data(3);
  IntMatrix z = IntMatrix::Identity(d.size(), d.size());
  z(0, 1) = 1;
  const CommutationCheck c = check_commutation(d.s, d.t, z, 1e-9);
  CHECK(c.s_residual > 1e-3);
  CHECK_FALSE(c.t_compatible);
}
