#include "spectile/cube.hpp"

#include <cmath>
#include <numbers>

namespace spectile {

bool in_zero_set(const RatVec& z) {
  if (z.is_zero()) return false;
  for (int j = 0; j < z.dim(); ++j) {
    if (is_integer(z[j]) && z[j] != 0) return true;
  }
  return false;
}

std::complex<double> eval_cube_transform(const RatVec& z) {
  std::complex<double> product(1.0, 0.0);
  for (int j = 0; j < z.dim(); ++j) {
    const Rational& q = z[j];
    if (q == 0) continue;
    if (is_integer(q)) return {0.0, 0.0};  // e^{i 2 pi n} - 1 vanishes identically
    const double half = std::numbers::pi * to_double(q);
    // (e^{i 2 pi q} - 1) / (i 2 pi q) = e^{i pi q} * sin(pi q) / (pi q)
    product *= std::polar(std::sin(half) / half, half);
  }
  return product;
}

CubeEvaluation evaluate_cube_point(const RatVec& z) {
  return CubeEvaluation{z, eval_cube_transform(z), in_zero_set(z)};
}

DifferenceCheck diffs_in_zeroset(std::span<const RatVec> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      RatVec delta = points[i] - points[j];
      if (delta.is_zero()) continue;  // duplicates difference is 0, allowed
      if (!in_zero_set(delta)) {
        return DifferenceCheck{false, DifferenceWitness{points[i], points[j], std::move(delta)}};
      }
    }
  }
  return DifferenceCheck{};
}

}  // namespace spectile
