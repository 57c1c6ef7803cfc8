#include "svir/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "svir/coset.hpp"
#include "svir/invariants.hpp"
#include "svir/linalg.hpp"
#include "svir/mckean_singer.hpp"
#include "svir/su2_level.hpp"
#include "svir/susy_index.hpp"

namespace svir {

namespace {

// Accumulates failures; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_.push_back(what);
  }

  CriterionResult finish(const std::string& summary) const {
    CriterionResult r;
    r.passed = failures_ == 0;
    std::ostringstream os;
    if (r.passed) {
      os << summary << " (" << checks_ << " checks)";
    } else {
      os << failures_ << "/" << checks_ << " checks failed";
      for (const auto& msg : messages_) os << "; " << msg;
    }
    r.detail = os.str();
    return r;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

std::vector<int> select(const VerifyOptions& o, int lo, int hi, bool even_only) {
  std::vector<int> out;
  if (o.ms.empty()) {
    for (int m = lo; m <= hi; ++m)
      if (!even_only || m % 2 == 0) out.push_back(m);
  } else {
    for (int m : o.ms)
      if (m >= lo && m <= hi && (!even_only || m % 2 == 0)) out.push_back(m);
  }
  return out;
}

std::string range_text(const std::vector<int>& ms) {
  if (ms.empty()) return "no selected m in range";
  std::ostringstream os;
  os << "m in {";
  for (std::size_t i = 0; i < ms.size(); ++i) os << (i ? "," : "") << ms[i];
  os << "}";
  return os.str();
}

CriterionResult central_charge_m3(const VerifyOptions&) {
  Checker c;
  c.expect(central_charge(3) == Rational(7, 10), "c(3) = " + central_charge(3).str());
  return c.finish("c(3) = " + central_charge(3).str());
}

CriterionResult sector_counts(const VerifyOptions&) {
  Checker c;
  const std::vector<SectorLabel> expected3 = {{0, 0, 0, Branch::none}, {0, 2, 0, Branch::none},
                                              {1, 1, 0, Branch::none}, {1, 3, 0, Branch::none},
                                              {0, 1, 1, Branch::none}, {0, 3, 1, Branch::none}};
  const auto s3 = enumerate_sectors(3);
  c.expect(s3 == expected3, "m=3 sector list differs");
  const auto s4 = enumerate_sectors(4);
  c.expect(s4.size() == 13, "m=4 has " + std::to_string(s4.size()) + " sectors");
  for (Branch b : {Branch::plus, Branch::minus})
    c.expect(std::count(s4.begin(), s4.end(), SectorLabel{1, 2, 1, b}) == 1,
             "m=4 lacks (1,2,1)" + to_string(b));
  return c.finish("6 sectors at m=3, 13 at m=4 with (1,2,1)+ and (1,2,1)-");
}

CriterionResult sigma_current(const VerifyOptions& o) {
  Checker c;
  const auto ms = select(o, 3, 16, false);
  for (int m : ms) {
    const CosetModularData data = build_coset_data(m);
    const SectorLabel sigma{m - 2, m, 0, Branch::none};
    const Eigen::Index a = data.index_of(sigma);
    const double d = std::real(data.s(a, 0) / data.s(0, 0));
    c.expect(std::abs(d - 1.0) <= 1e-9, "m=" + std::to_string(m) + " d(sigma)=" + num(d));
    // Spin from the three SU(2) weights, not from the coset tables.
    const Rational x = su2_weight(m - 2, m - 2) - su2_weight(m, m) + su2_weight(2, 0);
    const std::complex<double> from_weights = std::polar(1.0, 2 * std::numbers::pi * x.frac().to_double());
    const std::complex<double> spin = conformal_spin(m, sigma);
    c.expect(std::abs(spin + 1.0) <= 1e-12 && std::abs(from_weights + 1.0) <= 1e-12,
             "m=" + std::to_string(m) + " spin(sigma) != -1");
  }
  return c.finish("sigma has d = 1 and spin -1, " + range_text(ms));
}

CriterionResult coset_modularity(const VerifyOptions& o) {
  Checker c;
  const auto ms = select(o, 3, 12, false);
  double worst_fusion = 0.0;
  for (int m : ms) {
    const CosetModularData data = build_coset_data(m);
    const std::string tag = "m=" + std::to_string(m);
    const ComplexMatrix& s = data.s;
    const ComplexMatrix t = data.t.asDiagonal();
    c.expect(is_unitary(s, o.tol), tag + " S not unitary");
    c.expect(is_symmetric(s, o.tol), tag + " S not symmetric");
    const ComplexMatrix s2 = s * s;
    c.expect(is_permutation(s2, o.tol), tag + " S^2 not a permutation");
    const ComplexMatrix st = s * t;
    c.expect(max_abs(st * st * st - s2) <= o.tol, tag + " (ST)^3 != S^2");
    const Eigen::Index n = data.size();
    bool integral = true;
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = a; b < n; ++b)
        for (Eigen::Index x = 0; x < n; ++x) {
          const std::complex<double> v = verlinde_sum(s, a, b, x);
          const double r = std::round(v.real());
          const double err = std::max(std::abs(v.real() - r), std::abs(v.imag()));
          worst_fusion = std::max(worst_fusion, err);
          if (err > 1e-6 || r < 0) integral = false;
        }
    c.expect(integral, tag + " Verlinde sum off the nonnegative integers");
  }
  return c.finish("unitary, symmetric, (ST)^3 = S^2, fusion error " + num(worst_fusion) + ", " +
                  range_text(ms));
}

CriterionResult weight_congruence(const VerifyOptions& o) {
  Checker c;
  const auto ms = select(o, 3, 16, false);
  for (int m : ms) {
    for (const SectorLabel& s : enumerate_sectors(m)) {
      const auto h = lowest_weight(m, s);
      if (!h) continue;
      const Rational expected = su2_weight(m - 2, s.j) - su2_weight(m, s.k) + su2_weight(2, s.l);
      c.expect((*h - expected).frac() == Rational(0),
               "m=" + std::to_string(m) + " " + to_string(s) + " h=" + h->str());
      const std::complex<double> from_h = std::polar(1.0, 2 * std::numbers::pi * h->frac().to_double());
      c.expect(std::abs(conformal_spin(m, s) - from_h) <= 1e-9,
               "m=" + std::to_string(m) + " " + to_string(s) + " spin != exp(2 pi i h)");
    }
  }
  return c.finish("exact congruence mod 1, " + range_text(ms));
}

CriterionResult fixed_point_weight(const VerifyOptions& o) {
  Checker c;
  const auto ms = select(o, 4, 28, true);
  for (int m : ms) {
    const auto h = lowest_weight(m, fixed_point(m, Branch::plus));
    const Rational target = central_charge(m) / Rational(24);
    c.expect(h && *h == target, "m=" + std::to_string(m) + " h(phi+) != c/24");
  }
  return c.finish("h(phi+) = c/24, " + range_text(ms));
}

CriterionResult fixed_point_s(const VerifyOptions& o) {
  Checker c;
  const auto ms = select(o, 4, 28, true);
  for (int m : ms) {
    const CosetModularData data = build_coset_data(m);
    const Eigen::Index a = data.index_of(fixed_point(m, Branch::plus));
    c.expect(std::abs(data.s(a, a) - 0.5) <= 1e-12, "m=" + std::to_string(m) + " S(phi+,phi+)=" +
                                                        num(std::real(data.s(a, a))));
  }
  return c.finish("S(phi+,phi+) = 1/2, " + range_text(ms));
}

CriterionResult index_values(const VerifyOptions& o) {
  Checker c;
  const auto ms = select(o, 4, 28, true);
  for (int m : ms) {
    const CosetModularData data = build_coset_data(m);
    const std::string tag = "m=" + std::to_string(m);
    const IndexReport plus = fredholm_index(data, fixed_point(m, Branch::plus));
    const IndexReport minus = fredholm_index(data, fixed_point(m, Branch::minus));
    c.expect(plus.rounded_index == 1, tag + " index(phi+)=" + std::to_string(plus.rounded_index));
    c.expect(minus.rounded_index == -1, tag + " index(phi-)=" + std::to_string(minus.rounded_index));
    int kernel_total = 0;
    for (const auto& [s, d] : plus.kernel_dims) kernel_total += d;
    c.expect(kernel_total == 1, tag + " kernel count " + std::to_string(kernel_total));
    for (const IndexReport* r : {&plus, &minus}) {
      c.expect(std::abs(r->index_via_s - static_cast<double>(r->rounded_index)) <= o.tol,
               tag + " S-route index " + num(r->index_via_s));
      c.expect(std::abs(r->index_via_k - r->index_via_s) <= o.tol, tag + " K-route disagrees");
    }
  }
  return c.finish("index +1 on phi+, -1 on phi-, " + range_text(ms));
}

CriterionResult dimension_sum(const VerifyOptions& o) {
  Checker c;
  const auto ms = select(o, 4, 28, true);
  double worst = 0.0;
  for (int m : ms) {
    const CosetModularData data = build_coset_data(m);
    for (Branch b : {Branch::plus, Branch::minus}) {
      const double v = ramond_dim_sum(data, fixed_point(m, b));
      worst = std::max(worst, std::abs(v));
      c.expect(std::abs(v) <= o.tol, "m=" + std::to_string(m) + " sum=" + num(v));
    }
  }
  return c.finish("max |sum| " + num(worst) + ", " + range_text(ms));
}

CriterionResult parity_exclusions(const VerifyOptions&) {
  Checker c;
  const auto a = parity_first_failure(30, 3, 12, 1);
  const auto b = parity_first_failure(30, 13, 18, 1);
  c.expect(!parity_ok(30, 3, 12, 1) && a == 13, "(3,12,1) first failure " + (a ? std::to_string(*a) : "none"));
  c.expect(!parity_ok(30, 13, 18, 1) && b == 7, "(13,18,1) first failure " + (b ? std::to_string(*b) : "none"));
  return c.finish("m=30: (3,12,1) fails at n=13, (13,18,1) at n=7");
}

bool has_label(const std::vector<InvariantMatrix>& v, const std::string& label) {
  return std::any_of(v.begin(), v.end(), [&](const InvariantMatrix& z) { return z.ade_label == label; });
}

bool has_identity(const std::vector<InvariantMatrix>& v) {
  return std::any_of(v.begin(), v.end(), [](const InvariantMatrix& z) {
    return same_matrix(z.z, IntMatrix::Identity(z.z.rows(), z.z.cols()));
  });
}

CriterionResult full_enumeration(const VerifyOptions& o) {
  Checker c;
  std::ostringstream counts;
  for (int m : {3, 4, 5, 6}) {
    const std::string tag = "m=" + std::to_string(m);
    const auto found = enumerate_invariants(m, SearchMode::full);
    counts << (m == 3 ? "" : ", ") << tag << ": " << found.size();
    const CosetModularData data = build_coset_data(m);
    for (const InvariantMatrix& z : found) {
      const CommutationCheck check = check_commutation(data.s, data.t, z.z, o.tol);
      c.expect(check.s_residual <= o.tol && check.t_compatible, tag + " invariant fails commutation");
      c.expect(z.z(0, 0) == 1 && z.z.minCoeff() >= 0, tag + " invariant not normalized");
    }
    if (m % 2 == 1) c.expect(found.size() == 1 && has_identity(found), tag + " not identity only");
    if (m == 4) {
      c.expect(has_identity(found), tag + " lacks identity");
      c.expect(has_label(found, "(A_3, D_4)"), tag + " lacks (A_3, D_4)");
    }
    if (m == 6) c.expect(has_label(found, "(D_4, A_7)"), tag + " lacks (D_4, A_7)");
  }
  return c.finish(counts.str());
}

CriterionResult lifted_invariants(const VerifyOptions&) {
  Checker c;
  double worst = 0.0;
  int total = 0;
  for (int m : {3, 4, 6}) {
    const ExtendedData ext = build_extended_data(m);
    for (const InvariantMatrix& z : enumerate_invariants(m, SearchMode::full)) {
      const CommutationCheck check = check_commutation(ext.s, ext.t, lift_invariant(m, z), 1e-7);
      worst = std::max(worst, check.s_residual);
      ++total;
      c.expect(check.s_residual <= 1e-7 && check.t_compatible,
               "m=" + std::to_string(m) + " lift residual " + num(check.s_residual));
    }
  }
  return c.finish(std::to_string(total) + " lifts, max residual " + num(worst));
}

CriterionResult table_rows(const VerifyOptions& o) {
  Checker c;
  std::set<int> covered;
  for (int m : {4, 6, 10, 12, 28, 30}) {
    const std::string tag = "m=" + std::to_string(m);
    const CosetModularData data = build_coset_data(m);
    const auto first_rows = enumerate_invariants(m, SearchMode::firstrow);
    for (const AdeRow& row : ade_rows(m)) {
      covered.insert(row.row);
      const std::string rtag = tag + " row " + std::to_string(row.row);
      InvariantMatrix z{m, IntMatrix::Zero(data.size(), data.size()), std::nullopt, true};
      z.z.row(0) = theta_vector(m, row.theta).transpose();
      c.expect(match_ade(m, z) == row.label, rtag + " not labeled " + row.label);
      const bool listed = std::any_of(first_rows.begin(), first_rows.end(), [&](const InvariantMatrix& f) {
        return same_matrix(f.z.row(0), z.z.row(0)) && f.ade_label == row.label;
      });
      c.expect(listed, rtag + " missing from first-row search");
      const RealVector cs = (z.z.row(0).cast<double>() * data.s.real()).transpose();
      c.expect(cs.minCoeff() >= -o.tol, rtag + " violates row positivity");
      if (m == 10) {
        for (const SectorLabel& s : row.theta) {
          c.expect(std::abs(conformal_spin(m, s) - 1.0) <= 1e-9, rtag + " " + to_string(s) + " spin != 1");
          c.expect(parity_ok(m, s.j, s.k, s.l), rtag + " " + to_string(s) + " fails parity");
        }
      }
    }
  }
  c.expect(covered == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}, "not all nine rows instantiated");
  return c.finish("rows 1-9 labeled and found by first-row search");
}

CriterionResult heat_supertrace(const VerifyOptions& o) {
  Checker c;
  std::mt19937_64 dims_rng(20240917);
  std::uniform_int_distribution<int> dim(0, 40);
  const std::vector<double> ts = {0.5, 1.0, 2.0};
  double worst = 0.0;
  int planted = 0;
  for (int i = 0; i < 200; ++i) {
    int p = dim(dims_rng);
    const int q = dim(dims_rng);
    if (p + q == 0) p = 1;
    int zeros = 0;
    if (i % 4 == 0 && p > 0) {
      zeros = 1 + static_cast<int>(dims_rng() % static_cast<std::uint64_t>(p));
      ++planted;
    }
    const GradedOperator g = make_graded_operator(p, q, 1000 + static_cast<std::uint64_t>(i), zeros);
    // Generic columns are independent, so the rank is min(p - zeros, q).
    const int rank = std::min(p - zeros, q);
    const std::pair<int, int> expected{p - rank, q - rank};
    const std::string tag = "instance " + std::to_string(i) + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
    c.expect(kernel_dims(g) == expected, tag + " kernel dimensions");
    c.expect(fredholm_index_direct(g) == p - q, tag + " index");
    for (double t : ts) {
      const double dev = std::abs(supertrace_heat(g, t) - static_cast<double>(p - q));
      worst = std::max(worst, dev);
      c.expect(dev <= o.tol, tag + " t=" + num(t) + " deviation " + num(dev));
    }
  }
  return c.finish("200 instances (" + std::to_string(planted) + " planted), max deviation " + num(worst));
}

}  // namespace

VerifyOptions verify_options_from_env() {
  VerifyOptions o;
  if (const char* env = std::getenv("SVIR_TOL"); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || !(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("SVIR_TOL must be a positive number, got '") + env + "'");
    o.tol = v;
  }
  return o;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {"A1", "central charge at m=3", central_charge_m3},
      {"A2", "sector enumeration at m=3,4", sector_counts},
      {"A3", "sigma is a simple current of spin -1", sigma_current},
      {"A4", "coset modular data", coset_modularity},
      {"A5", "exact weight congruence", weight_congruence},
      {"A6", "fixed point weight is c/24", fixed_point_weight},
      {"A7", "fixed point S entry", fixed_point_s},
      {"A8", "Fredholm index of the fixed point", index_values},
      {"A9", "Ramond dimension sum vanishes", dimension_sum},
      {"A10", "parity rule exclusions at m=30", parity_exclusions},
      {"A11", "full invariant enumeration", full_enumeration},
      {"A12", "lifted invariants commute", lifted_invariants},
      {"A13", "ADE table rows", table_rows},
      {"A14", "heat supertrace equals index", heat_supertrace},
  };
  return criteria;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (const Criterion& crit : acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = crit.run(options);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = crit.id;
    r.title = crit.title;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(4) << r.id << " " << r.title << ": " << r.detail;
  return os.str();
}

}  // namespace svir
