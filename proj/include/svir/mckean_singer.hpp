#pragma once

#include <cstdint>
#include <vector>

#include "svir/linalg.hpp"

namespace svir {

/// Odd selfadjoint operator on H_+ (+) H_-:
///
///       [ 0    Q_+^* ]
///   Q = [            ]     Q_+ : H_+ -> H_-  (dim_minus x dim_plus)
///       [ Q_+   0    ]
///
/// with grading Gamma = diag(+1 (dim_plus times), -1 (dim_minus times)).
class GradedOperator {
 public:
  explicit GradedOperator(const ComplexMatrix& q_plus);

  int dim_plus() const { return dim_plus_; }
  int dim_minus() const { return dim_minus_; }
  int dim() const { return dim_plus_ + dim_minus_; }
  const ComplexMatrix& q() const { return q_; }
  ComplexMatrix q_plus() const { return q_.bottomLeftCorner(dim_minus_, dim_plus_); }
  RealVector grading() const;

 private:
  int dim_plus_ = 0;
  int dim_minus_ = 0;
  ComplexMatrix q_;
};

/// Reproducible random instance. Entries of Q_+ are r e^{i theta} with
/// r = sqrt(u1), theta = 2 pi u2, where u1, u2 are the top 53 bits of
/// successive std::mt19937_64(seed) draws scaled to [0, 1); the sampling is
/// uniform on the unit disc. The first `planted_zero_columns` columns of Q_+
/// are zero, which plants kernel vectors in H_+.
GradedOperator make_graded_operator(int dim_plus, int dim_minus, std::uint64_t seed,
                                    int planted_zero_columns = 0);

/// Str(M) = Tr(Gamma M), real part.
double supertrace(const GradedOperator& g, const ComplexMatrix& m);

/// Str(exp(-t Q^2)) from the spectra of Q_+^* Q_+ and Q_+ Q_+^*.
double supertrace_heat(const GradedOperator& g, double t);

/// dim ker Q_+ - dim ker Q_+^*, singular values below tol * sigma_max (or
/// below tol when Q = 0) count as zero.
int fredholm_index_direct(const GradedOperator& g, double tol = 1e-10);

/// dim ker Q_+ and dim ker Q_+^* separately, same threshold.
std::pair<int, int> kernel_dims(const GradedOperator& g, double tol = 1e-10);

struct McKeanSingerReport {
  int dim_plus = 0;
  int dim_minus = 0;
  std::vector<double> ts;
  std::vector<double> supertraces;
  int index = 0;
  double max_deviation = 0.0;
  double max_spread = 0.0;
  double tol = 0.0;
  bool pass = false;

  friend bool operator==(const McKeanSingerReport&, const McKeanSingerReport&) = default;
};

McKeanSingerReport verify_mckean_singer(const GradedOperator& g, const std::vector<double>& ts,
                                        double tol);

}  // namespace svir
