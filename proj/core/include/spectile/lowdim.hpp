#pragma once

#include "spectile/periodic.hpp"

#include <map>
#include <optional>
#include <vector>

namespace spectile {

// Catalog forms for cube spectra / tilings in dimensions 1-3, plus the
// general constructions (coordinate tower, cross product). Table values
// always lie in [0, 1); tables are explicitly periodic so that the resulting
// sets stay lattice-periodic and classification terminates.

struct Dim1Form {
  Rational alpha;  // in [0, 1)

  bool operator==(const Dim1Form&) const = default;
};

enum class Dim2Orientation { ColumnShifted, RowShifted };

const char* to_string(Dim2Orientation o);

struct Dim2Form {
  Dim2Orientation orientation = Dim2Orientation::ColumnShifted;
  Rational alpha;               // in [0, 1)
  std::vector<Rational> beta;   // one period of the shift table, values in [0, 1)

  int period() const { return static_cast<int>(beta.size()); }
  bool operator==(const Dim2Form&) const = default;
};

enum class ResidueClass { A, B };

// First-coordinate residues are partitioned into two classes. An A-residue a
// contributes points (a, alpha0(a)+k, alpha1(a,k)+l); a B-residue b
// contributes (b, beta1(b,n)+m, beta0(b)+n). The two-index tables are
// periodic in their integer argument.
struct Dim3Form {
  int period = 1;
  std::vector<ResidueClass> partition;            // size == period
  std::map<int, Rational> alpha0;                 // keyed by A-residues
  std::map<int, std::vector<Rational>> alpha1;    // keyed by A-residues, size == alpha1_period
  int alpha1_period = 1;
  std::map<int, Rational> beta0;                  // keyed by B-residues
  std::map<int, std::vector<Rational>> beta1;     // keyed by B-residues, size == beta1_period
  int beta1_period = 1;

  bool operator==(const Dim3Form&) const = default;
};

// f: Z^k -> [0,1) with an explicit period per index; values row-major.
struct PeriodicTable {
  std::vector<int> periods;
  std::vector<Rational> values;

  const Rational& at(std::span<const Int> index) const;
  bool operator==(const PeriodicTable&) const = default;
};

struct TowerSpec {
  Rational alpha;                    // in [0, 1)
  std::vector<PeriodicTable> betas;  // betas[i] takes i+1 indices; dimension = betas.size() + 1
};

struct CrossProductSpec {
  PeriodicSet left;
  PeriodicSet right;
  std::vector<RatVec> beta;  // aligned with left.offsets(); values in the right dimension
};

PeriodicSet build_1d(const Dim1Form& form);
PeriodicSet build_2d(const Dim2Form& form);
PeriodicSet build_3d(const Dim3Form& form);
PeriodicSet build_tower(const TowerSpec& spec, std::uint64_t offset_budget = 4096);
PeriodicSet cross_product(const CrossProductSpec& spec);

// Result of matching a verified set against the catalogs. The input equals
// the rebuilt form permuted back and translated: matching happens after
// subtracting the lexicographically smallest offset and, for d=3, after the
// reported coordinate permutation (lexicographically least one that fits;
// every other fitting permutation is listed as an alternative).
struct Recognition {
  enum class Kind { Dim1, Dim2, Dim3, NotCatalogForm };
  Kind kind = Kind::NotCatalogForm;
  std::optional<Dim1Form> dim1;
  std::optional<Dim2Form> dim2;
  std::optional<Dim3Form> dim3;
  RatVec translation = RatVec::zero(1);
  std::vector<int> permutation;
  std::vector<std::vector<int>> alternative_permutations;
};

Recognition recognize(const PeriodicSet& ps, const PackingOptions& opts = {});

// Reconstructs the original set from a recognition result.
PeriodicSet rebuild(const Recognition& rec);

}  // namespace spectile
