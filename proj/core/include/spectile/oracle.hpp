#pragma once

#include "spectile/periodic.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace spectile {

// Exact multiplicity count of grid cells over the finite quotient group
// Z^d / (qR) Z^d, where q clears every denominator. Element indices are
// row-major mixed-radix coordinates in the Smith basis, so histograms are
// comparable across runs.
struct QuotientGrid {
  std::uint64_t q = 1;
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> smith_diagonal;
  std::map<std::uint64_t, std::uint32_t> multiplicity;  // nonzero counts only
};

struct TilingCheckResult {
  bool tiles = false;
  QuotientGrid grid;
};

/// Independent tiling verifier: splits every translated cube into q^d cells
/// of side 1/q and counts how often each quotient-group element is covered.
/// The set tiles exactly when every element is covered once. Pure integer
/// computation. q is the denominator lcm times q_multiplier; refining the
/// grid beyond the minimal choice never changes the verdict.
TilingCheckResult rasterized_tiling_check(const PeriodicSet& ps,
                                          std::uint64_t cell_budget = kDefaultWorkCap,
                                          std::uint64_t q_multiplier = 1);

/// Deterministic SVG picture of the translated unit squares for a
/// two-dimensional set; byte-identical output for identical input.
std::string emit_tiling_svg(const PeriodicSet& ps, int window);

std::string multiplicity_histogram_json(const QuotientGrid& grid);

}  // namespace spectile
