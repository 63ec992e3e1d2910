#pragma once

#include "spectile/linalg.hpp"

#include <complex>
#include <optional>
#include <span>

namespace spectile {

// Its value at z is the integral of e^{i 2 pi z.x} over the unit cube; the
// membership predicate is decided exactly on the rational coordinates, the
// complex value exists for cross-checks and display only.
struct CubeEvaluation {
  RatVec z;
  std::complex<double> value;
  bool in_zero_set = false;
};

// A pair of points whose difference violates the zero-set condition.
struct DifferenceWitness {
  RatVec a;
  RatVec b;
  RatVec delta;  // a - b
};

// True iff z != 0 and some coordinate of z is a nonzero integer.
bool in_zero_set(const RatVec& z);

// Product over coordinates of (e^{i 2 pi z_j} - 1) / (i 2 pi z_j), with the
// factor taken as 1 when z_j = 0 and as exactly 0 when z_j is a nonzero
// integer. |result| <= 1.
std::complex<double> eval_cube_transform(const RatVec& z);

CubeEvaluation evaluate_cube_point(const RatVec& z);

struct DifferenceCheck {
  bool ok = true;
  std::optional<DifferenceWitness> witness;
};

// Checks that every difference of distinct points lies in the zero set.
DifferenceCheck diffs_in_zeroset(std::span<const RatVec> points);

}  // namespace spectile
