#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "svir/coset.hpp"
#include "svir/linalg.hpp"

namespace svir {

using IntMatrix = Eigen::MatrixXi;

/// Gannon's sign function eps_{2n}(j); n2 = 2n must be even and >= 2.
int epsilon(int n2, long long j);

/// Smallest n in [1, 8m(m+2)] coprime to 8m(m+2) at which the parity rule
/// fails for (j,k,l), or empty if it holds over the whole period.
std::optional<long long> parity_first_failure(int m, int j, int k, int l);
bool parity_ok(int m, int j, int k, int l);

/// Canonical sectors whose conformal spin is 1 (within 1e-9).
std::vector<SectorLabel> spin_one_sectors(int m);

struct Triple {
  int j = 0;
  int k = 0;
  int l = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Modular data on all triples (j,k,l), without identification or splitting.
struct ExtendedData {
  int m = 0;
  std::vector<Triple> triples;
  ComplexMatrix s;
  ComplexVector t;

  Eigen::Index size() const { return static_cast<Eigen::Index>(triples.size()); }
  Eigen::Index index_of(int j, int k, int l) const;
};

ExtendedData build_extended_data(int m);

struct InvariantMatrix {
  int m = 0;
  IntMatrix z;
  std::optional<std::string> ade_label;
  /// Set by first-row enumeration: only row 0 (the vacuum coupling) is known.
  bool first_row_only = false;

  friend bool operator==(const InvariantMatrix& a, const InvariantMatrix& b) {
    return a.m == b.m && same_matrix(a.z, b.z) && a.ade_label == b.ade_label &&
           a.first_row_only == b.first_row_only;
  }
};

/// Z -> Z~ on the extended triple index set.
IntMatrix lift_invariant(int m, const InvariantMatrix& z);

enum class SearchMode { full, firstrow };

struct SearchOptions {
  double tol = 1e-9;
  /// Full mode refuses m > 12 unless this is set.
  bool allow_large = false;
  /// Nonzero seeds permute the DFS variable order (results must not change).
  std::uint64_t order_seed = 0;
};

std::vector<InvariantMatrix> enumerate_invariants(int m, SearchMode mode,
                                                  const SearchOptions& options = {});

/// One row of the table of candidate dual canonical endomorphisms,
/// instantiated at a given m.
struct AdeRow {
  int row = 0;
  std::vector<SectorLabel> theta;  // with multiplicity
  std::string label;
};

/// All table rows that apply at m.
std::vector<AdeRow> ade_rows(int m);

/// Vacuum row of Z as a vector indexed by enumerate_sectors(m).
Eigen::VectorXi theta_vector(int m, const std::vector<SectorLabel>& theta);

std::optional<std::string> match_ade(int m, const InvariantMatrix& z);

/// max |ZS - SZ| and whether Z only couples sectors with equal T.
struct CommutationCheck {
  double s_residual = 0.0;
  bool t_compatible = false;
};
CommutationCheck check_commutation(const ComplexMatrix& s, const ComplexVector& t, const IntMatrix& z,
                                   double t_tol);

}  // namespace svir
