#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "svir/coset.hpp"

namespace svir {

/// Global index sum_nu d_nu^2 of the Bose net.
double mu_index(const CosetModularData& data);

/// d(s) = S_{s,0} / S_{0,0}.
double kw_dimension(const CosetModularData& data, const SectorLabel& s);

/// K(rho, nu) = sqrt(mu) S_{rho,nu} / (d_rho d_nu).
std::complex<double> k_matrix_entry(const CosetModularData& data, const SectorLabel& rho,
                                    const SectorLabel& nu);

/// dim ker(L_0 - c/24) on a Ramond sector: 1 on the plus branch of the fixed
/// point, 0 elsewhere.
int ramond_kernel_dim(int m, const SectorLabel& nu);

struct IndexReport {
  int m = 0;
  SectorLabel rho;
  double mu_b = 0.0;
  double mu_a = 0.0;
  double d_rho = 0.0;
  std::vector<std::pair<SectorLabel, int>> kernel_dims;
  double index_via_s = 0.0;
  double index_via_k = 0.0;
  long long rounded_index = 0;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

/// Index of the supercharge in the supersymmetric Ramond representation whose
/// Bose restriction contains rho (one of the two fixed-point branches):
///   2 sum_{nu Ramond} S_{rho,nu} n(nu)
///   = d_rho / sqrt(mu_a) sum_{nu Ramond} K(rho,nu) d_nu n(nu),  mu_a = mu_b / 4.
IndexReport fredholm_index(const CosetModularData& data, const SectorLabel& rho);
IndexReport fredholm_index(int m, const SectorLabel& rho);

/// sum_{nu Ramond} S_{rho,nu} d_nu, which vanishes for the supersymmetric sector.
double ramond_dim_sum(const CosetModularData& data, const SectorLabel& rho);
double ramond_dim_sum(int m, const SectorLabel& rho);

}  // namespace svir
