#pragma once

#include "spectile/lca.hpp"
#include "spectile/lowdim.hpp"
#include "spectile/periodic.hpp"

#include <optional>
#include <string>

namespace spectile {

// JSON schemas used on disk. Rationals travel as "p/q" (or "p") strings and
// round-trip bit-exactly. Parsers throw ParseError on malformed input.

PeriodicSet parse_periodic_set(const std::string& text);
std::string periodic_set_to_json(const PeriodicSet& ps, int indent = 2);

// Tagged construction request: {"kind": "dim1"|"dim2"|"dim3"|"tower"|"cross", ...}.
struct ConstructRequest {
  enum class Kind { Dim1, Dim2, Dim3, Tower, Cross };
  Kind kind = Kind::Dim1;
  std::optional<Dim1Form> dim1;
  std::optional<Dim2Form> dim2;
  std::optional<Dim3Form> dim3;
  std::optional<TowerSpec> tower;
  std::optional<CrossProductSpec> cross;
};

ConstructRequest parse_construct_request(const std::string& text);
PeriodicSet build_construct(const ConstructRequest& request);

std::string recognition_to_json(const Recognition& rec, int indent = 2);

// Measure pair file: {"group": [n1,...], "mu": {"(a,b,...)": "p/q", ...},
// "nu": {...}, "relation": "spectral"|"tiling"|"both" (optional)}.
struct MeasurePairInput {
  Measure mu;
  Measure nu;
  std::string relation = "spectral";
};

MeasurePairInput parse_measure_pair(const std::string& text);
std::string measure_to_json(const Measure& m, int indent = 2);

// Uncertainty run file: the measure pair plus either explicit "f"/"A"/"B"
// or a "trials" count for the randomized battery.
struct UncertaintyInput {
  Measure mu;
  Measure nu;
  std::optional<std::vector<Cplx>> f;
  std::optional<std::vector<std::int64_t>> A;
  std::optional<std::vector<std::int64_t>> B;
  std::uint64_t trials = 0;
};

UncertaintyInput parse_uncertainty_input(const std::string& text);

}  // namespace spectile
