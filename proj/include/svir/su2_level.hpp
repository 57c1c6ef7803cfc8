#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "svir/linalg.hpp"
#include "svir/rational.hpp"

namespace svir {

/// S matrix of SU(2)_k in the Dynkin labelling j = 2 * spin, j = 0..k.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> su2_s_matrix(int level) {
  if (level < 0) throw std::invalid_argument("su2: level must be nonnegative");
  const int n = level + 1;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar norm = std::sqrt(Scalar(2) / Scalar(level + 2));
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s(a, b) = norm * std::sin(pi * Scalar((a + 1) * (b + 1)) / Scalar(level + 2));
  return s;
}

/// Diagonal of T: exp(i pi/2 ((j+1)^2/(k+2) - 1/2)) = exp(2 pi i (h_j - c/24)).
template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> su2_t_diagonal(int level) {
  if (level < 0) throw std::invalid_argument("su2: level must be nonnegative");
  const int n = level + 1;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> t(n);
  for (int j = 0; j < n; ++j) {
    // Reduce the exponent modulo 4 in exact integers before converting.
    const long num = static_cast<long>(2 * (j + 1) * (j + 1) - (level + 2));
    const long den = static_cast<long>(2 * (level + 2));
    const long reduced = ((num % (4 * den)) + 4 * den) % (4 * den);
    t(j) = std::polar(Scalar(1), pi / Scalar(2) * Scalar(reduced) / Scalar(den));
  }
  return t;
}

/// h_j = j(j+2) / (4(k+2)).
Rational su2_weight(int level, int j);

/// Modular data of SU(2)_k.
struct LevelData {
  int level = 0;
  ComplexMatrix s;
  ComplexVector t;
  std::vector<Rational> weights;
  RealVector dims;

  int size() const { return level + 1; }
  friend bool operator==(const LevelData& a, const LevelData& b);
};

LevelData build_level_data(int level);

/// Verlinde fusion multiplicity N_{ab}^c. Throws std::runtime_error if the
/// Verlinde sum is not within 1e-6 of a nonnegative integer.
int fusion_coefficient(const LevelData& data, int a, int b, int c);

}  // namespace svir
