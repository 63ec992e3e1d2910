#include "spectile/oracle.hpp"

#include "spectile/errors.hpp"
#include "spectile/lowdim.hpp"
#include "spectile/suite.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace spectile;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

PeriodicSet brick_example() {
  return PeriodicSet::create(RatMat::diagonal({q(2), q(1)}),
                             {RatVec({q(0), q(0)}), RatVec({q(1), q(1, 2)})});
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("rasterized check examples") {
  SUBCASE("unit cubes on the integer lattice") {
    TilingCheckResult result =
        rasterized_tiling_check(PeriodicSet::create(RatMat::identity(2), {RatVec::zero(2)}));
    CHECK(result.tiles);
    CHECK(result.grid.q == 1);
    for (const auto& [element, count] : result.grid.multiplicity) CHECK(count == 1);
  }

  SUBCASE("shifted columns tile with eight cells over eight elements") {
    TilingCheckResult result = rasterized_tiling_check(brick_example());
    CHECK(result.tiles);
    CHECK(result.grid.q == 2);
    CHECK(result.grid.group_order == 8);
    CHECK(result.grid.multiplicity.size() == 8);
  }

  SUBCASE("half filled lattice leaves elements uncovered") {
    PeriodicSet thin = PeriodicSet::create(RatMat::diagonal({q(2), q(2)}),
                                           {RatVec({q(0), q(0)}), RatVec({q(1), q(0)})});
    TilingCheckResult result = rasterized_tiling_check(thin);
    CHECK_FALSE(result.tiles);
    CHECK(result.grid.group_order == 4);
    CHECK(result.grid.multiplicity.size() == 2);  // two of four covered
  }
}

TEST_CASE("cell sum matches offsets times grid volume") {
  for (int trial = 0; trial < 30; ++trial) {
    std::mt19937_64 rng(4000 + static_cast<std::uint64_t>(trial));
    PeriodicSet ps = random_periodic_set(rng);
    TilingCheckResult result = rasterized_tiling_check(ps);
    std::uint64_t cells = 0;
    for (const auto& [element, count] : result.grid.multiplicity) cells += count;
    std::uint64_t expected = ps.offsets().size();
    for (int i = 0; i < ps.dim(); ++i) expected *= result.grid.q;
    CHECK(cells == expected);
  }
}

TEST_CASE("volume law on positive results") {
  for (int trial = 0; trial < 60; ++trial) {
    std::mt19937_64 rng(5000 + static_cast<std::uint64_t>(trial));
    PeriodicSet ps = random_periodic_set(rng);
    TilingCheckResult result = rasterized_tiling_check(ps);
    if (result.tiles) {
      CHECK(Rational(static_cast<long>(ps.offsets().size())) == abs(ps.lattice_det()));
    }
  }
}

TEST_CASE("oracle agrees with the packing classification") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng(6000 + static_cast<std::uint64_t>(trial));
    PeriodicSet ps = random_periodic_set(rng);
    bool spectral = classify_pair(ps).status == PairStatus::SpectralAndTiling;
    CHECK(spectral == rasterized_tiling_check(ps).tiles);
  }
}

TEST_CASE("refining the grid never changes the verdict") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng(7000 + static_cast<std::uint64_t>(trial));
    PeriodicSet ps = random_periodic_set(rng);
    TilingCheckResult minimal = rasterized_tiling_check(ps);
    TilingCheckResult doubled = rasterized_tiling_check(ps, kDefaultWorkCap, 2);
    CHECK(minimal.tiles == doubled.tiles);
    CHECK(doubled.grid.q == 2 * minimal.grid.q);
  }
}

TEST_CASE("budget gate raises") {
  PeriodicSet wide = PeriodicSet::create(RatMat::diagonal({q(1000), q(1000)}), {RatVec::zero(2)});
  CHECK_THROWS_AS(rasterized_tiling_check(wide, 100'000), BudgetExceededError);
}

TEST_CASE("histogram export lists nonzero counts") {
  TilingCheckResult result = rasterized_tiling_check(brick_example());
  std::string json = multiplicity_histogram_json(result.grid);
  CHECK(json == "{\"0\":1,\"1\":1,\"2\":1,\"3\":1,\"4\":1,\"5\":1,\"6\":1,\"7\":1}");
}

TEST_CASE("svg rendering") {
  SUBCASE("integer lattice window two gives twenty five squares") {
    PeriodicSet z2 = PeriodicSet::create(RatMat::identity(2), {RatVec::zero(2)});
    std::string svg = emit_tiling_svg(z2, 2);
    CHECK(count_occurrences(svg, "<rect") == 25);
    CHECK(svg.find("viewBox=\"-2 -2 5 5\"") != std::string::npos);
  }

  SUBCASE("brick pattern window one gives eighteen squares in two colors") {
    std::string svg = emit_tiling_svg(brick_example(), 1);
    CHECK(count_occurrences(svg, "<rect") == 18);
    std::set<std::string> fills;
    for (std::size_t pos = svg.find("fill=\""); pos != std::string::npos;
         pos = svg.find("fill=\"", pos + 1)) {
      fills.insert(svg.substr(pos + 6, 7));
    }
    CHECK(fills.size() == 2);
  }

  SUBCASE("column shifted form renders like the half-brick picture") {
    Dim2Form form;
    form.alpha = 0;
    form.beta = {q(0), q(1, 2)};
    std::string svg = emit_tiling_svg(build_2d(form), 1);
    CHECK(count_occurrences(svg, "<rect") == 18);
  }

  SUBCASE("output is byte identical across calls") {
    CHECK(emit_tiling_svg(brick_example(), 2) == emit_tiling_svg(brick_example(), 2));
  }

  SUBCASE("only two dimensions are drawable") {
    CHECK_THROWS_AS(emit_tiling_svg(PeriodicSet::create(RatMat::identity(1), {RatVec::zero(1)}), 1),
                    UnsupportedDimensionError);
  }
}
