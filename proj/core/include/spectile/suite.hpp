#pragma once

#include "spectile/lca.hpp"
#include "spectile/lowdim.hpp"
#include "spectile/periodic.hpp"

#include <random>
#include <string>
#include <vector>

namespace spectile {

// The acceptance battery: eight seeded property suites with exact
// small-instance oracles. One entry point so CI and the command line run the
// same checks; trials use independent generator streams (seed + index).

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t work_cap = kDefaultWorkCap;
};

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

// Deterministic instance generators, reused by the unit tests.

// Mixed population: verified tilings (possibly translated), sub-density
// packings, rigid-coordinate mutations and unstructured sets. Dimensions 1-3,
// denominators at most 4, at most 8 offsets.
PeriodicSet random_periodic_set(std::mt19937_64& rng);

Dim1Form random_dim1_form(std::mt19937_64& rng);
Dim2Form random_dim2_form(std::mt19937_64& rng);
Dim3Form random_dim3_form(std::mt19937_64& rng);

struct MeasurePair {
  Measure mu;
  Measure nu;
};

// Exact spectral pair from a random subgroup/transversal construction with
// random translations and a random common scale.
MeasurePair random_spectral_measure_pair(std::mt19937_64& rng, std::int64_t max_order);

// Mixed population for the symmetry suites: constructed spectral pairs,
// perturbed near-misses and unstructured measures.
MeasurePair random_measure_pair(std::mt19937_64& rng, std::int64_t max_order);

}  // namespace spectile
