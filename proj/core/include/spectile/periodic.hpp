#pragma once

#include "spectile/cube.hpp"
#include "spectile/linalg.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace spectile {

inline constexpr std::uint64_t kDefaultWorkCap = 100'000'000;
inline constexpr std::uint64_t kDefaultPointBudget = 1'000'000;

struct PackingOptions {
  std::uint64_t work_cap = kDefaultWorkCap;
};

/// A discrete periodic point set: offsets + R Z^d, stored canonically.
/// Construction reduces every offset into the fundamental domain of the
/// lattice (R^{-1} l in [0,1)^d), removes duplicates and sorts, so equal
/// inputs over the same lattice compare equal. Offsets are pairwise distinct
/// modulo the lattice afterwards. Instances are immutable.
class PeriodicSet {
 public:
  static PeriodicSet create(RatMat lattice, std::vector<RatVec> offsets);

  int dim() const { return lattice_.dim(); }
  const RatMat& lattice() const { return lattice_; }
  const RatMat& lattice_inverse() const { return inverse_; }
  const std::vector<RatVec>& offsets() const { return offsets_; }
  const Rational& lattice_det() const { return det_; }

  /// Reduces an arbitrary point modulo the lattice into the fundamental domain.
  RatVec reduce(const RatVec& point) const;
  bool contains(const RatVec& point) const;

  PeriodicSet translated(const RatVec& t) const;
  /// Coordinate permutation: new coordinate i is old coordinate perm[i].
  PeriodicSet permuted(std::span<const int> perm) const;

  bool operator==(const PeriodicSet&) const = default;

 private:
  PeriodicSet(RatMat lattice, RatMat inverse, Rational det, std::vector<RatVec> offsets);

  RatMat lattice_;
  RatMat inverse_;
  Rational det_;
  std::vector<RatVec> offsets_;
};

/// True iff the two descriptions denote the same point set (they may use
/// different lattices for it).
bool same_point_set(const PeriodicSet& a, const PeriodicSet& b);

enum class PairStatus {
  SpectralAndTiling,
  PackingOnlyIncomplete,
  NotPacking,
};

const char* to_string(PairStatus status);

/// A concrete violation: the point lattice_vector = R k + delta is neither 0
/// nor has a nonzero integer coordinate.
struct PackingWitness {
  RatVec delta;              // difference of two offsets (possibly 0)
  std::vector<Int> k;        // lattice coordinates
  RatVec vector;             // R k + delta
};

struct PackingResult {
  bool packs = false;
  std::optional<PackingWitness> witness;
};

/// Decides whether every lattice translate of every offset difference stays
/// inside the zero set (packing condition). The infinite quantifier over
/// lattice points is reduced to residue classes modulo the denominator lcm
/// plus exact integer affine systems, so the answer is exact and violations
/// come with witnesses.
PackingResult packing_check(const PeriodicSet& ps, const PackingOptions& opts = {});

struct PairVerdict {
  PairStatus status = PairStatus::NotPacking;
  Rational density;  // |offsets| / |det R|, exact
  std::optional<PackingWitness> witness;
  // Set when |det R| is not an integer; the density can then never be 1.
  bool non_integer_density = false;
};

/// Full classification: packing + exact density. SpectralAndTiling certifies
/// both the orthogonal-basis property and the tiling property of the set.
PairVerdict classify_pair(const PeriodicSet& ps, const PackingOptions& opts = {});

/// All points offset + R k with k in [-box_radius, box_radius]^d, sorted.
std::vector<RatVec> enumerate_window(const PeriodicSet& ps, int box_radius,
                                     std::uint64_t point_budget = kDefaultPointBudget);

}  // namespace spectile
