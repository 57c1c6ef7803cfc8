#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "svir/linalg.hpp"
#include "svir/rational.hpp"

namespace svir {

// Sectors of the coset SU(2)_m in SU(2)_{m-2} x SU(2)_2, i.e. the Bose part of
// the super-Virasoro net with c = 3/2 (1 - 8/(m(m+2))).

enum class Branch { none, plus, minus };
enum class SigmaParity { bose, fermi };

std::string to_string(Branch b);
std::string to_string(SigmaParity p);

struct SectorLabel {
  int j = 0;
  int k = 0;
  int l = 0;
  Branch branch = Branch::none;

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

/// Canonical ordering: l, then j, then k, then plus before minus.
bool sector_less(const SectorLabel& a, const SectorLabel& b);

/// "(j,k,l)" with a "+" or "-" suffix on the split fixed point.
std::string to_string(const SectorLabel& s);
/// Like to_string, but Ramond classes also show the identified partner,
/// e.g. "(0,1,1)~(1,2,1)".
std::string describe(int m, const SectorLabel& s);

class FixedPointBranchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational central_charge(int m);

bool has_fixed_point(int m);
bool is_fixed_point(int m, const SectorLabel& s);
SectorLabel fixed_point(int m, Branch branch);

/// Throws std::invalid_argument unless s is one of enumerate_sectors(m).
void validate_sector(int m, const SectorLabel& s);

std::vector<SectorLabel> enumerate_sectors(int m);

/// Maps any triple with j - k + l even to its canonical label. The
/// unbranched fixed point is rejected with FixedPointBranchError.
SectorLabel canonicalize(int m, int j, int k, int l);

/// x in [0, 1) with conformal spin exp(2 pi i x).
Rational spin_exponent(int m, const SectorLabel& s);
std::complex<double> conformal_spin(int m, const SectorLabel& s);

/// ([(m+2)p - mq]^2 - 4) / (8m(m+2)), the NS lowest weight h_{p,q}.
Rational kac_weight(int m, int p, int q);

/// Exact lowest conformal weight of the sector; empty for the minus branch of
/// the fixed point, whose weight lies strictly above c/24 but is not fixed by
/// the branching data.
std::optional<Rational> lowest_weight(int m, const SectorLabel& s);

/// Fusion with the simple current sigma = (m-2, m, 0).
SectorLabel sigma_act(int m, const SectorLabel& s);

/// Monodromy with sigma, m(s, sigma) = -omega_{sigma s} / omega_s.
SigmaParity sigma_parity_of(int m, const SectorLabel& s);

struct CosetModularData {
  int m = 0;
  std::vector<SectorLabel> sectors;
  ComplexMatrix s;
  ComplexVector t;
  std::vector<std::optional<Rational>> h;
  RealVector dims;
  std::vector<bool> is_ramond;
  std::vector<SigmaParity> sigma_parity;

  Eigen::Index size() const { return static_cast<Eigen::Index>(sectors.size()); }
  /// Position of a sector in `sectors`; throws std::out_of_range if absent.
  Eigen::Index index_of(const SectorLabel& label) const;

  friend bool operator==(const CosetModularData& a, const CosetModularData& b);
};

CosetModularData build_coset_data(int m);

/// D_{rho,nu} = S_{rho,nu} - S_{sigma rho,nu}.
RealVector d_matrix(const CosetModularData& data, const SectorLabel& rho);

}  // namespace svir
