#include "svir/coset.hpp"

#include <algorithm>
#include <numbers>
#include <tuple>

#include "svir/su2_level.hpp"

namespace svir {

namespace {

void require_m(int m, int min_m) {
  if (m < min_m)
    throw std::invalid_argument("coset: m must be at least " + std::to_string(min_m) + ", got " +
                                std::to_string(m));
}

bool in_range(int m, int j, int k) { return j >= 0 && j <= m - 2 && k >= 0 && k <= m; }

int branch_rank(Branch b) {
  switch (b) {
    case Branch::none: return 0;
    case Branch::plus: return 1;
    case Branch::minus: return 2;
  }
  return 0;
}

// Weight-spin identity: the NS- half of a module with h_{p,q} > 0 starts at
// h + 1/2; for the vacuum module G_{-1/2} kills the vacuum, so it starts at 3/2.
Rational odd_half_weight(const Rational& h) {
  if (h == Rational(0)) return Rational(3, 2);
  return h + Rational(1, 2);
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::none: return "none";
    case Branch::plus: return "plus";
    case Branch::minus: return "minus";
  }
  return "none";
}

std::string to_string(SigmaParity p) { return p == SigmaParity::bose ? "bose" : "fermi"; }

bool sector_less(const SectorLabel& a, const SectorLabel& b) {
  return std::make_tuple(a.l, a.j, a.k, branch_rank(a.branch)) <
         std::make_tuple(b.l, b.j, b.k, branch_rank(b.branch));
}

std::string to_string(const SectorLabel& s) {
  std::string out = "(" + std::to_string(s.j) + "," + std::to_string(s.k) + "," +
                    std::to_string(s.l) + ")";
  if (s.branch == Branch::plus) out += "+";
  if (s.branch == Branch::minus) out += "-";
  return out;
}

std::string describe(int m, const SectorLabel& s) {
  if (s.l != 1 || s.branch != Branch::none) return to_string(s);
  const SectorLabel partner{m - 2 - s.j, m - s.k, 1, Branch::none};
  return to_string(s) + "~" + to_string(partner);
}

Rational central_charge(int m) {
  require_m(m, 2);
  return Rational(3, 2) * (Rational(1) - Rational(8, static_cast<long long>(m) * (m + 2)));
}

bool has_fixed_point(int m) { return m % 2 == 0; }

bool is_fixed_point(int m, const SectorLabel& s) {
  return has_fixed_point(m) && s.j == m / 2 - 1 && s.k == m / 2 && s.l == 1;
}

SectorLabel fixed_point(int m, Branch branch) {
  require_m(m, 3);
  if (!has_fixed_point(m)) throw std::invalid_argument("coset: odd m has no fixed point");
  if (branch == Branch::none) throw FixedPointBranchError("fixed point requires branch");
  return SectorLabel{m / 2 - 1, m / 2, 1, branch};
}

std::vector<SectorLabel> enumerate_sectors(int m) {
  require_m(m, 3);
  std::vector<SectorLabel> out;
  for (int j = 0; j <= m - 2; ++j)
    for (int k = 0; k <= m; ++k)
      if ((j - k) % 2 == 0) out.push_back({j, k, 0, Branch::none});
  for (int j = 0; j <= m - 2; ++j)
    for (int k = 0; k <= m; ++k) {
      if ((j - k + 1) % 2 != 0) continue;
      const SectorLabel s{j, k, 1, Branch::none};
      if (is_fixed_point(m, s)) {
        out.push_back({j, k, 1, Branch::plus});
        out.push_back({j, k, 1, Branch::minus});
      } else if (std::make_pair(j, k) < std::make_pair(m - 2 - j, m - k)) {
        out.push_back(s);
      }
    }
  std::sort(out.begin(), out.end(), sector_less);
  return out;
}

void validate_sector(int m, const SectorLabel& s) {
  require_m(m, 3);
  if (!in_range(m, s.j, s.k) || s.l < 0 || s.l > 1)
    throw std::invalid_argument("coset: sector " + to_string(s) + " out of range for m=" +
                                std::to_string(m));
  if ((s.j - s.k + s.l) % 2 != 0)
    throw std::invalid_argument("coset: sector " + to_string(s) + " violates j-k+l even");
  if (is_fixed_point(m, s) != (s.branch != Branch::none))
    throw std::invalid_argument("coset: branch tag of " + to_string(s) + " is inconsistent");
  if (s.l == 1 && s.branch == Branch::none &&
      std::make_pair(s.j, s.k) > std::make_pair(m - 2 - s.j, m - s.k))
    throw std::invalid_argument("coset: " + to_string(s) + " is not the canonical representative");
}

SectorLabel canonicalize(int m, int j, int k, int l) {
  require_m(m, 3);
  if (!in_range(m, j, k) || l < 0 || l > 2)
    throw std::invalid_argument("canonicalize: indices out of range");
  if ((j - k + l) % 2 != 0)
    throw std::invalid_argument("canonicalize: j-k+l must be even");
  if (l == 2) return {m - 2 - j, m - k, 0, Branch::none};
  if (l == 0) return {j, k, 0, Branch::none};
  if (is_fixed_point(m, {j, k, 1, Branch::none}))
    throw FixedPointBranchError("fixed point requires branch");
  if (std::make_pair(j, k) > std::make_pair(m - 2 - j, m - k)) return {m - 2 - j, m - k, 1, Branch::none};
  return {j, k, 1, Branch::none};
}

Rational spin_exponent(int m, const SectorLabel& s) {
  // (1/4) (j(j+2)/m - k(k+2)/(m+2) + l(l+2)/4)
  const Rational x = Rational(static_cast<long long>(s.j) * (s.j + 2), m) -
                     Rational(static_cast<long long>(s.k) * (s.k + 2), m + 2) +
                     Rational(static_cast<long long>(s.l) * (s.l + 2), 4);
  return (x * Rational(1, 4)).frac();
}

std::complex<double> conformal_spin(int m, const SectorLabel& s) {
  validate_sector(m, s);
  return std::polar(1.0, 2.0 * std::numbers::pi * spin_exponent(m, s).to_double());
}

Rational kac_weight(int m, int p, int q) {
  const long long a = static_cast<long long>(m + 2) * p - static_cast<long long>(m) * q;
  return Rational(a * a - 4, 8LL * m * (m + 2));
}

std::optional<Rational> lowest_weight(int m, const SectorLabel& s) {
  validate_sector(m, s);
  const Rational h = kac_weight(m, s.j + 1, s.k + 1);
  const Rational spin = spin_exponent(m, s);
  if (s.l == 0) {
    if (h.frac() == spin) return h;
    const Rational odd = odd_half_weight(h);
    if (odd.frac() != spin)
      throw std::logic_error("lowest_weight: no NS weight matches the spin of " + to_string(s));
    return odd;
  }
  const Rational ramond = h + Rational(1, 16);
  if (s.branch == Branch::minus) return std::nullopt;
  return ramond;
}

SectorLabel sigma_act(int m, const SectorLabel& s) {
  validate_sector(m, s);
  if (s.branch == Branch::plus) return {s.j, s.k, s.l, Branch::minus};
  if (s.branch == Branch::minus) return {s.j, s.k, s.l, Branch::plus};
  return canonicalize(m, m - 2 - s.j, m - s.k, s.l);
}

SigmaParity sigma_parity_of(int m, const SectorLabel& s) {
  // -omega'/omega = exp(2 pi i (x' - x + 1/2)).
  const Rational diff = (spin_exponent(m, sigma_act(m, s)) - spin_exponent(m, s)).frac();
  if (diff == Rational(1, 2)) return SigmaParity::bose;
  if (diff == Rational(0)) return SigmaParity::fermi;
  throw std::runtime_error("sigma_parity_of: monodromy of " + to_string(s) + " is not +-1");
}

Eigen::Index CosetModularData::index_of(const SectorLabel& label) const {
  const auto it = std::find(sectors.begin(), sectors.end(), label);
  if (it == sectors.end())
    throw std::out_of_range("coset: sector " + to_string(label) + " not present for m=" +
                            std::to_string(m));
  return static_cast<Eigen::Index>(it - sectors.begin());
}

CosetModularData build_coset_data(int m) {
  require_m(m, 3);
  CosetModularData d;
  d.m = m;
  d.sectors = enumerate_sectors(m);

  const ComplexMatrix s_lo = su2_s_matrix<double>(m - 2).cast<std::complex<double>>();
  const ComplexMatrix s_hi = su2_s_matrix<double>(m).cast<std::complex<double>>();
  const ComplexMatrix s_two = su2_s_matrix<double>(2).cast<std::complex<double>>();
  const ComplexVector t_lo = su2_t_diagonal<double>(m - 2);
  const ComplexVector t_hi = su2_t_diagonal<double>(m);
  const ComplexVector t_two = su2_t_diagonal<double>(2);

  auto triple_s = [&](const SectorLabel& a, const SectorLabel& b) {
    return s_lo(a.j, b.j) * std::conj(s_hi(a.k, b.k)) * s_two(a.l, b.l);
  };

  const Eigen::Index n = d.size();
  d.s.resize(n, n);
  d.t.resize(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const SectorLabel& x = d.sectors[static_cast<std::size_t>(a)];
    d.t(a) = t_lo(x.j) * std::conj(t_hi(x.k)) * t_two(x.l);
    for (Eigen::Index b = 0; b < n; ++b) {
      const SectorLabel& y = d.sectors[static_cast<std::size_t>(b)];
      const bool x_fixed = x.branch != Branch::none;
      const bool y_fixed = y.branch != Branch::none;
      if (x_fixed && y_fixed) {
        const double delta = x.branch == y.branch ? 1.0 : 0.0;
        d.s(a, b) = delta + (triple_s(x, y) - 1.0) / 2.0;
      } else if (x_fixed || y_fixed) {
        d.s(a, b) = triple_s(x, y);
      } else {
        d.s(a, b) = 2.0 * triple_s(x, y);
      }
    }
  }

  d.dims.resize(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const SectorLabel& x = d.sectors[static_cast<std::size_t>(a)];
    d.dims(a) = (d.s(a, 0) / d.s(0, 0)).real();
    d.h.push_back(lowest_weight(m, x));
    d.is_ramond.push_back(x.l == 1);
    d.sigma_parity.push_back(sigma_parity_of(m, x));
  }
  return d;
}

RealVector d_matrix(const CosetModularData& data, const SectorLabel& rho) {
  const Eigen::Index r = data.index_of(rho);
  const Eigen::Index r_sigma = data.index_of(sigma_act(data.m, rho));
  return (data.s.row(r) - data.s.row(r_sigma)).real().transpose();
}

bool operator==(const CosetModularData& a, const CosetModularData& b) {
  return a.m == b.m && a.sectors == b.sectors && same_matrix(a.s, b.s) && same_matrix(a.t, b.t) &&
         a.h == b.h && same_matrix(a.dims, b.dims) && a.is_ramond == b.is_ramond &&
         a.sigma_parity == b.sigma_parity;
}

}  // namespace svir
