#include "svir/susy_index.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace svir {

namespace {

constexpr double kIndexTol = 1e-6;

void require_supersymmetric(const CosetModularData& data, const SectorLabel& rho) {
  if (!has_fixed_point(data.m))
    throw std::invalid_argument("no supersymmetric sector for odd m=" + std::to_string(data.m));
  if (!is_fixed_point(data.m, rho) || rho.branch == Branch::none)
    throw std::invalid_argument("supersymmetric index needs a fixed-point branch, got " + to_string(rho));
}

}  // namespace

double mu_index(const CosetModularData& data) { return data.dims.squaredNorm(); }

double kw_dimension(const CosetModularData& data, const SectorLabel& s) {
  const Eigen::Index a = data.index_of(s);
  return (data.s(a, 0) / data.s(0, 0)).real();
}

std::complex<double> k_matrix_entry(const CosetModularData& data, const SectorLabel& rho,
                                    const SectorLabel& nu) {
  const Eigen::Index a = data.index_of(rho);
  const Eigen::Index b = data.index_of(nu);
  return std::sqrt(mu_index(data)) * data.s(a, b) / (data.dims(a) * data.dims(b));
}

int ramond_kernel_dim(int m, const SectorLabel& nu) {
  validate_sector(m, nu);
  if (nu.l != 1) throw std::invalid_argument("ramond_kernel_dim: " + to_string(nu) + " is not Ramond");
  if (nu.branch == Branch::plus) return 1;
  if (nu.branch == Branch::minus) return 0;
  const auto h = lowest_weight(m, nu);
  return (h && *h * Rational(24) == central_charge(m)) ? 1 : 0;
}

IndexReport fredholm_index(const CosetModularData& data, const SectorLabel& rho) {
  require_supersymmetric(data, rho);
  IndexReport r;
  r.m = data.m;
  r.rho = rho;
  r.mu_b = mu_index(data);
  r.mu_a = r.mu_b / 4.0;
  r.d_rho = kw_dimension(data, rho);

  const Eigen::Index a = data.index_of(rho);
  std::complex<double> via_k = 0.0;
  double via_s = 0.0;
  for (Eigen::Index b = 0; b < data.size(); ++b) {
    if (!data.is_ramond[static_cast<std::size_t>(b)]) continue;
    const SectorLabel& nu = data.sectors[static_cast<std::size_t>(b)];
    const int n = ramond_kernel_dim(data.m, nu);
    r.kernel_dims.emplace_back(nu, n);
    via_s += 2.0 * data.s(a, b).real() * n;
    via_k += k_matrix_entry(data, rho, nu) * data.dims(b) * static_cast<double>(n);
  }
  r.index_via_s = via_s;
  r.index_via_k = (r.d_rho / std::sqrt(r.mu_a) * via_k).real();

  const auto rounded = nearest_integer(r.index_via_s, kIndexTol);
  if (!rounded || std::abs(r.index_via_k - static_cast<double>(*rounded)) > kIndexTol)
    throw std::runtime_error("fredholm_index: index " + std::to_string(r.index_via_s) +
                             " is not an integer");
  r.rounded_index = *rounded;
  return r;
}

IndexReport fredholm_index(int m, const SectorLabel& rho) {
  if (m >= 3 && !has_fixed_point(m))
    throw std::invalid_argument("no supersymmetric sector for odd m=" + std::to_string(m));
  return fredholm_index(build_coset_data(m), rho);
}

double ramond_dim_sum(const CosetModularData& data, const SectorLabel& rho) {
  require_supersymmetric(data, rho);
  const Eigen::Index a = data.index_of(rho);
  double sum = 0.0;
  for (Eigen::Index b = 0; b < data.size(); ++b)
    if (data.is_ramond[static_cast<std::size_t>(b)]) sum += data.s(a, b).real() * data.dims(b);
  return sum;
}

double ramond_dim_sum(int m, const SectorLabel& rho) {
  if (m >= 3 && !has_fixed_point(m))
    throw std::invalid_argument("no supersymmetric sector for odd m=" + std::to_string(m));
  return ramond_dim_sum(build_coset_data(m), rho);
}

}  // namespace svir
