#include "svir/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "svir/su2_level.hpp"

namespace svir {

namespace {

constexpr double kSpinTol = 1e-9;
constexpr double kIntegralityTol = 1e-6;
constexpr double kCommutationTol = 1e-8;
constexpr int kFullModeMaxM = 12;

bool even_parity(int j, int k, int l) { return (j - k + l) % 2 == 0; }

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

void sort_invariants(std::vector<InvariantMatrix>& v) {
  // Row-major comparison so the vacuum row dominates the order.
  std::sort(v.begin(), v.end(), [](const InvariantMatrix& a, const InvariantMatrix& b) {
    const IntMatrix at = a.z.transpose();
    const IntMatrix bt = b.z.transpose();
    return lex_less(at, bt);
  });
}

std::string sub(char family, int rank) { return std::string(1, family) + "_" + std::to_string(rank); }

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; }

// Depth-first search for integer points of the commutant inside the entry box.
class CommutantSearch {
 public:
  CommutantSearch(const CommutantParametrization& p, std::vector<double> lo, std::vector<double> hi,
                  std::vector<Eigen::Index> order)
      : p_(p), lo_(std::move(lo)), hi_(std::move(hi)), order_(std::move(order)) {
    const Eigen::Index r = p_.dimension();
    const Eigen::Index u = static_cast<Eigen::Index>(p_.entries.size());
    rest_min_ = RealMatrix::Zero(r + 1, u);
    rest_max_ = RealMatrix::Zero(r + 1, u);
    for (Eigen::Index d = r - 1; d >= 0; --d) {
      const Eigen::Index row = order_[static_cast<std::size_t>(d)];
      const auto [vlo, vhi] = var_range(row);
      for (Eigen::Index e = 0; e < u; ++e) {
        const double a = p_.rref(row, e) * vlo;
        const double b = p_.rref(row, e) * vhi;
        rest_min_(d, e) = rest_min_(d + 1, e) + std::min(a, b);
        rest_max_(d, e) = rest_max_(d + 1, e) + std::max(a, b);
      }
    }
  }

  std::vector<RealVector> run() {
    solutions_.clear();
    RealVector cur = RealVector::Zero(static_cast<Eigen::Index>(p_.entries.size()));
    if (feasible(cur, 0)) descend(0, cur);
    return solutions_;
  }

 private:
  std::pair<long, long> var_range(Eigen::Index row) const {
    const auto e = static_cast<std::size_t>(p_.pivots[static_cast<std::size_t>(row)]);
    return {static_cast<long>(std::ceil(lo_[e] - kIntegralityTol)),
            static_cast<long>(std::floor(hi_[e] + kIntegralityTol))};
  }

  bool feasible(const RealVector& cur, Eigen::Index depth) const {
    for (Eigen::Index e = 0; e < cur.size(); ++e) {
      if (cur(e) + rest_min_(depth, e) > hi_[static_cast<std::size_t>(e)] + kIntegralityTol) return false;
      if (cur(e) + rest_max_(depth, e) < lo_[static_cast<std::size_t>(e)] - kIntegralityTol) return false;
    }
    return true;
  }

  void descend(Eigen::Index depth, const RealVector& cur) {
    if (depth == p_.dimension()) {
      for (Eigen::Index e = 0; e < cur.size(); ++e)
        if (!nearest_integer(cur(e), kIntegralityTol)) return;
      solutions_.push_back(cur);
      return;
    }
    const Eigen::Index row = order_[static_cast<std::size_t>(depth)];
    const auto [vlo, vhi] = var_range(row);
    for (long v = vlo; v <= vhi; ++v) {
      RealVector next = cur + static_cast<double>(v) * p_.rref.row(row).transpose();
      if (feasible(next, depth + 1)) descend(depth + 1, next);
    }
  }

  const CommutantParametrization& p_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<Eigen::Index> order_;
  RealMatrix rest_min_;
  RealMatrix rest_max_;
  std::vector<RealVector> solutions_;
};

std::vector<InvariantMatrix> enumerate_full(int m, const SearchOptions& options) {
  if (m > kFullModeMaxM && !options.allow_large)
    throw std::invalid_argument("enumerate_invariants: full mode limited to m <= " +
                                std::to_string(kFullModeMaxM) + " (pass allow_large to override)");
  const CosetModularData data = build_coset_data(m);
  const ComplexMatrix t = data.t.asDiagonal();
  const CommutantParametrization p = commutant_parametrization(data.s, t, options.tol);

  std::vector<double> lo;
  std::vector<double> hi;
  for (const auto& [a, b] : p.entries) {
    if (a == 0 && b == 0) {
      lo.push_back(1.0);
      hi.push_back(1.0);
    } else {
      lo.push_back(0.0);
      hi.push_back(std::ceil(data.dims(a) * data.dims(b) + 0.5));
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(p.dimension()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  if (options.order_seed != 0) {
    std::mt19937_64 rng(options.order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  CommutantSearch search(p, lo, hi, order);
  std::vector<InvariantMatrix> out;
  bool saturated = false;
  for (const RealVector& v : search.run()) {
    IntMatrix z = IntMatrix::Zero(data.size(), data.size());
    for (std::size_t e = 0; e < p.entries.size(); ++e) {
      const int value = static_cast<int>(*nearest_integer(v(static_cast<Eigen::Index>(e)), kIntegralityTol));
      z(p.entries[e].first, p.entries[e].second) = value;
      if (value > 0 && value >= hi[e] && !(p.entries[e].first == 0 && p.entries[e].second == 0))
        saturated = true;
    }
    const CommutationCheck check = check_commutation(data.s, data.t, z, options.tol);
    if (check.s_residual > kCommutationTol || !check.t_compatible) continue;
    InvariantMatrix inv{m, std::move(z), std::nullopt, false};
    inv.ade_label = match_ade(m, inv);
    out.push_back(std::move(inv));
  }
  if (saturated)
    std::clog << "warning: m=" << m
              << ": an invariant entry reached the Frobenius-Perron search bound; the enumeration may be"
                 " truncated\n";
  sort_invariants(out);
  return out;
}

std::vector<InvariantMatrix> enumerate_first_rows(int m, const SearchOptions& options) {
  const CosetModularData data = build_coset_data(m);
  std::vector<Eigen::Index> admissible;
  for (const SectorLabel& s : spin_one_sectors(m)) {
    if (s == SectorLabel{}) continue;
    if (parity_ok(m, s.j, s.k, s.l)) admissible.push_back(data.index_of(s));
  }
  double d_max = 1.0;
  for (Eigen::Index a : admissible) d_max = std::max(d_max, data.dims(a));
  const double budget = 4.0 * d_max + kIntegralityTol;

  std::vector<InvariantMatrix> out;
  Eigen::VectorXi row = Eigen::VectorXi::Zero(data.size());
  row(0) = 1;
  // Positivity of (c S)_lambda follows from ZS = SZ with Z >= 0 and S_{0,nu} > 0.
  auto accept = [&]() {
    RealVector cs = RealVector::Zero(data.size());
    for (Eigen::Index a = 0; a < data.size(); ++a)
      if (row(a) != 0) cs += static_cast<double>(row(a)) * data.s.row(a).real().transpose();
    if (cs.minCoeff() < -kCommutationTol) return;
    InvariantMatrix inv{m, IntMatrix::Zero(data.size(), data.size()), std::nullopt, true};
    inv.z.row(0) = row.transpose();
    inv.ade_label = match_ade(m, inv);
    out.push_back(std::move(inv));
  };
  auto descend = [&](auto&& self, std::size_t pos, double used) -> void {
    if (pos == admissible.size()) {
      accept();
      return;
    }
    const Eigen::Index a = admissible[pos];
    const int cap = static_cast<int>(std::ceil(data.dims(a) + 0.5));
    for (int c = 0; c <= cap && used + c * data.dims(a) <= budget; ++c) {
      row(a) = c;
      self(self, pos + 1, used + c * data.dims(a));
    }
    row(a) = 0;
  };
  descend(descend, 0, 1.0);
  (void)options;
  sort_invariants(out);
  return out;
}

}  // namespace

int epsilon(int n2, long long j) {
  if (n2 < 2 || n2 % 2 != 0) throw std::invalid_argument("epsilon: modulus must be even and >= 2");
  const long long n = n2 / 2;
  const long long r = ((j % n2) + n2) % n2;
  if (r == 0 || r == n) return 0;
  return r < n ? 1 : -1;
}

std::optional<long long> parity_first_failure(int m, int j, int k, int l) {
  if (m < 3) throw std::invalid_argument("parity rule: m must be at least 3");
  const long long period = 8LL * m * (m + 2);
  for (long long n = 1; n <= period; ++n) {
    if (std::gcd(n, period) != 1) continue;
    const int lhs = epsilon(2 * m, n) * epsilon(2 * m + 4, n) * epsilon(8, n);
    const int rhs = epsilon(2 * m, n * (j + 1)) * epsilon(2 * m + 4, n * (k + 1)) * epsilon(8, n * (l + 1));
    if (lhs != rhs) return n;
  }
  return std::nullopt;
}

bool parity_ok(int m, int j, int k, int l) { return !parity_first_failure(m, j, k, l).has_value(); }

std::vector<SectorLabel> spin_one_sectors(int m) {
  std::vector<SectorLabel> out;
  for (const SectorLabel& s : enumerate_sectors(m))
    if (std::abs(conformal_spin(m, s) - 1.0) <= kSpinTol) out.push_back(s);
  return out;
}

Eigen::Index ExtendedData::index_of(int j, int k, int l) const {
  if (j < 0 || j > m - 2 || k < 0 || k > m || l < 0 || l > 2)
    throw std::out_of_range("extended data: triple out of range");
  return (static_cast<Eigen::Index>(j) * (m + 1) + k) * 3 + l;
}

ExtendedData build_extended_data(int m) {
  if (m < 3) throw std::invalid_argument("extended data: m must be at least 3");
  ExtendedData d;
  d.m = m;
  for (int j = 0; j <= m - 2; ++j)
    for (int k = 0; k <= m; ++k)
      for (int l = 0; l <= 2; ++l) d.triples.push_back({j, k, l});

  const RealMatrix s_lo = su2_s_matrix<double>(m - 2);
  const RealMatrix s_hi = su2_s_matrix<double>(m);
  const RealMatrix s_two = su2_s_matrix<double>(2);
  const ComplexVector t_lo = su2_t_diagonal<double>(m - 2);
  const ComplexVector t_hi = su2_t_diagonal<double>(m);
  const ComplexVector t_two = su2_t_diagonal<double>(2);

  const Eigen::Index n = d.size();
  d.s.resize(n, n);
  d.t.resize(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const Triple& x = d.triples[static_cast<std::size_t>(a)];
    d.t(a) = t_lo(x.j) * std::conj(t_hi(x.k)) * t_two(x.l);
    for (Eigen::Index b = 0; b < n; ++b) {
      const Triple& y = d.triples[static_cast<std::size_t>(b)];
      d.s(a, b) = s_lo(x.j, y.j) * s_hi(x.k, y.k) * s_two(x.l, y.l);
    }
  }
  return d;
}

IntMatrix lift_invariant(int m, const InvariantMatrix& z) {
  const std::vector<SectorLabel> sectors = enumerate_sectors(m);
  const auto n = static_cast<Eigen::Index>(sectors.size());
  if (z.m != m || z.z.rows() != n || z.z.cols() != n)
    throw std::invalid_argument("lift_invariant: invariant does not match the sector set of m=" +
                                std::to_string(m));

  auto index_of = [&](const SectorLabel& s) {
    return static_cast<Eigen::Index>(std::find(sectors.begin(), sectors.end(), s) - sectors.begin());
  };

  // For every triple: the coset indices it stands for (two for the fixed point,
  // none for odd parity).
  const ExtendedData ext = build_extended_data(m);
  std::vector<std::vector<Eigen::Index>> classes(static_cast<std::size_t>(ext.size()));
  for (Eigen::Index a = 0; a < ext.size(); ++a) {
    const Triple& x = ext.triples[static_cast<std::size_t>(a)];
    if (!even_parity(x.j, x.k, x.l)) continue;
    if (is_fixed_point(m, {x.j, x.k, x.l, Branch::none})) {
      classes[static_cast<std::size_t>(a)] = {index_of(fixed_point(m, Branch::plus)),
                                              index_of(fixed_point(m, Branch::minus))};
    } else {
      classes[static_cast<std::size_t>(a)] = {index_of(canonicalize(m, x.j, x.k, x.l))};
    }
  }

  IntMatrix lifted = IntMatrix::Zero(ext.size(), ext.size());
  for (Eigen::Index a = 0; a < ext.size(); ++a)
    for (Eigen::Index b = 0; b < ext.size(); ++b) {
      int sum = 0;
      for (Eigen::Index x : classes[static_cast<std::size_t>(a)])
        for (Eigen::Index y : classes[static_cast<std::size_t>(b)]) sum += z.z(x, y);
      lifted(a, b) = sum;
    }
  return lifted;
}

std::vector<InvariantMatrix> enumerate_invariants(int m, SearchMode mode, const SearchOptions& options) {
  if (m < 3) throw std::invalid_argument("enumerate_invariants: m must be at least 3");
  return mode == SearchMode::full ? enumerate_full(m, options) : enumerate_first_rows(m, options);
}

std::vector<AdeRow> ade_rows(int m) {
  if (m < 3) throw std::invalid_argument("ade_rows: m must be at least 3");
  const SectorLabel vac{0, 0, 0, Branch::none};
  auto ns = [](int j, int k) { return SectorLabel{j, k, 0, Branch::none}; };
  std::vector<AdeRow> rows;
  rows.push_back({1, {vac}, pair_label(sub('A', m - 1), sub('A', m + 1))});
  if (m % 4 == 0) {
    const int mp = m / 4;
    rows.push_back({2, {vac, ns(0, m)}, pair_label(sub('A', 4 * mp - 1), sub('D', 2 * mp + 2))});
  }
  if (m % 4 == 2) {
    const int mp = (m - 2) / 4;
    rows.push_back({3, {vac, ns(m - 2, 0)}, pair_label(sub('D', 2 * mp + 2), sub('A', 4 * mp + 3))});
  }
  if (m == 10) rows.push_back({4, {vac, ns(0, 6)}, "(A_9, E_6)"});
  if (m == 12) rows.push_back({5, {vac, ns(6, 0)}, "(E_6, A_13)"});
  if (m == 28) rows.push_back({6, {vac, ns(0, 10), ns(0, 18), ns(0, 28)}, "(A_27, E_8)"});
  if (m == 30) rows.push_back({7, {vac, ns(10, 0), ns(18, 0), ns(28, 0)}, "(E_8, A_31)"});
  if (m == 10) rows.push_back({8, {vac, ns(0, 6), ns(8, 0), ns(8, 6)}, "(D_6, E_6)"});
  if (m == 12) rows.push_back({9, {vac, ns(6, 0), ns(0, 12), ns(6, 12)}, "(E_6, D_8)"});
  return rows;
}

Eigen::VectorXi theta_vector(int m, const std::vector<SectorLabel>& theta) {
  const std::vector<SectorLabel> sectors = enumerate_sectors(m);
  Eigen::VectorXi v = Eigen::VectorXi::Zero(static_cast<Eigen::Index>(sectors.size()));
  for (const SectorLabel& s : theta) {
    const auto it = std::find(sectors.begin(), sectors.end(), s);
    if (it == sectors.end()) throw std::invalid_argument("theta_vector: unknown sector " + to_string(s));
    ++v(it - sectors.begin());
  }
  return v;
}

std::optional<std::string> match_ade(int m, const InvariantMatrix& z) {
  const Eigen::VectorXi vacuum_row = z.z.row(0).transpose();
  for (const AdeRow& row : ade_rows(m))
    if (same_matrix(theta_vector(m, row.theta), vacuum_row)) return row.label;
  return std::nullopt;
}

CommutationCheck check_commutation(const ComplexMatrix& s, const ComplexVector& t, const IntMatrix& z,
                                   double t_tol) {
  CommutationCheck out;
  const ComplexMatrix zc = z.cast<double>().cast<std::complex<double>>();
  out.s_residual = max_abs(zc * s - s * zc);
  out.t_compatible = true;
  for (Eigen::Index a = 0; a < z.rows(); ++a)
    for (Eigen::Index b = 0; b < z.cols(); ++b)
      if (z(a, b) != 0 && std::abs(t(a) - t(b)) > t_tol) out.t_compatible = false;
  return out;
}

}  // namespace svir
