#include "svir/su2_level.hpp"

#include <string>

namespace svir {

namespace {
constexpr double kFusionTol = 1e-6;
}

Rational su2_weight(int level, int j) {
  if (j < 0 || j > level) throw std::out_of_range("su2: label out of range");
  return Rational(static_cast<long long>(j) * (j + 2), 4LL * (level + 2));
}

LevelData build_level_data(int level) {
  LevelData d;
  d.level = level;
  d.s = su2_s_matrix<double>(level).cast<std::complex<double>>();
  d.t = su2_t_diagonal<double>(level);
  d.dims.resize(level + 1);
  for (int j = 0; j <= level; ++j) {
    d.weights.push_back(su2_weight(level, j));
    d.dims(j) = d.s(j, 0).real() / d.s(0, 0).real();
  }
  return d;
}

int fusion_coefficient(const LevelData& data, int a, int b, int c) {
  const int n = data.size();
  if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
    throw std::out_of_range("fusion_coefficient: label out of range");
  const std::complex<double> v = verlinde_sum(data.s, a, b, c);
  const auto rounded = nearest_integer(v.real(), kFusionTol);
  if (!rounded || std::abs(v.imag()) > kFusionTol || *rounded < 0)
    throw std::runtime_error("fusion_coefficient: Verlinde sum " + std::to_string(v.real()) +
                             " is not a nonnegative integer");
  return static_cast<int>(*rounded);
}

bool operator==(const LevelData& a, const LevelData& b) {
  return a.level == b.level && same_matrix(a.s, b.s) && same_matrix(a.t, b.t) && a.weights == b.weights &&
         same_matrix(a.dims, b.dims);
}

}  // namespace svir
