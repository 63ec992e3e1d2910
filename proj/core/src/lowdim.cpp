#include "spectile/lowdim.hpp"

#include "spectile/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace spectile {

namespace {

void require_unit_range(const Rational& q, const char* what) {
  if (q < 0 || q >= 1) throw InvalidFormError(std::string(what) + " must lie in [0, 1)");
}

// ax + by = g, g = gcd(a, b) >= 0.
struct Egcd {
  Int g, x, y;
};

Egcd egcd(const Int& a, const Int& b) {
  if (b == 0) {
    if (a < 0) return {-a, Int(-1), Int(0)};
    return {a, Int(1), Int(0)};
  }
  Egcd sub = egcd(b, a % b);
  return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

// One integer solution of row . k = target, or nullopt.
std::optional<std::vector<Int>> solve_row(const std::vector<Int>& row, const Int& target) {
  std::vector<Int> comb(row.size());
  Int g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (g == 0) {
      g = abs(row[i]);
      comb.assign(row.size(), Int(0));
      comb[i] = row[i] > 0 ? 1 : -1;
      continue;
    }
    Egcd e = egcd(g, row[i]);
    for (auto& c : comb) c *= e.x;
    comb[i] += e.y;
    g = e.g;
  }
  if (g == 0) {
    if (target != 0) return std::nullopt;
    return std::vector<Int>(row.size());
  }
  if (target % g != 0) return std::nullopt;
  Int scale = target / g;
  for (auto& c : comb) c *= scale;
  return comb;
}

// Smallest p dividing length with data[(i+p) % length] == data[i] for all i.
template <typename T>
int minimal_cyclic_period(const std::vector<T>& data) {
  const int n = static_cast<int>(data.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; i + p < n && ok; ++i) {
      if (!(data[static_cast<std::size_t>(i)] == data[static_cast<std::size_t>(i + p)])) ok = false;
    }
    if (ok) return p;
  }
  return n;
}

}  // namespace

const char* to_string(Dim2Orientation o) {
  return o == Dim2Orientation::ColumnShifted ? "ColumnShifted" : "RowShifted";
}

const Rational& PeriodicTable::at(std::span<const Int> index) const {
  if (index.size() != periods.size()) throw DimensionMismatchError("table index arity differs");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    Int p(periods[i]);
    Int c = index[i] % p;
    if (c < 0) c += p;
    flat = flat * static_cast<std::size_t>(periods[i]) + c.convert_to<std::size_t>();
  }
  return values[flat];
}

PeriodicSet build_1d(const Dim1Form& form) {
  require_unit_range(form.alpha, "alpha");
  return PeriodicSet::create(RatMat::identity(1), {RatVec({form.alpha})});
}

PeriodicSet build_2d(const Dim2Form& form) {
  require_unit_range(form.alpha, "alpha");
  if (form.beta.empty()) throw InvalidFormError("shift table must have at least one entry");
  for (const auto& b : form.beta) require_unit_range(b, "beta value");
  const int p = form.period();
  std::vector<RatVec> offsets;
  offsets.reserve(static_cast<std::size_t>(p));
  for (int m = 0; m < p; ++m) {
    Rational first = form.alpha + m;
    const Rational& second = form.beta[static_cast<std::size_t>(m)];
    if (form.orientation == Dim2Orientation::ColumnShifted) {
      offsets.push_back(RatVec({first, second}));
    } else {
      offsets.push_back(RatVec({second, first}));
    }
  }
  RatMat lattice = form.orientation == Dim2Orientation::ColumnShifted
                       ? RatMat::diagonal({Rational(p), Rational(1)})
                       : RatMat::diagonal({Rational(1), Rational(p)});
  return PeriodicSet::create(std::move(lattice), std::move(offsets));
}

PeriodicSet build_3d(const Dim3Form& form) {
  if (form.period < 1) throw InvalidFormError("period must be positive");
  if (static_cast<int>(form.partition.size()) != form.period) {
    throw InvalidFormError("partition size must equal the period");
  }
  if (form.alpha1_period < 1 || form.beta1_period < 1) {
    throw InvalidFormError("table periods must be positive");
  }
  const int qa = form.alpha1_period;
  const int qb = form.beta1_period;

  std::vector<RatVec> offsets;
  for (int r = 0; r < form.period; ++r) {
    if (form.partition[static_cast<std::size_t>(r)] == ResidueClass::A) {
      auto a0 = form.alpha0.find(r);
      auto a1 = form.alpha1.find(r);
      if (a0 == form.alpha0.end() || a1 == form.alpha1.end()) {
        throw InvalidFormError("missing table entries for an A residue");
      }
      if (static_cast<int>(a1->second.size()) != qa) throw InvalidFormError("ragged alpha1 table");
      require_unit_range(a0->second, "alpha0 value");
      for (int k = 0; k < qa; ++k) {
        const Rational& a1v = a1->second[static_cast<std::size_t>(k)];
        require_unit_range(a1v, "alpha1 value");
        for (int l = 0; l < qb; ++l) {
          offsets.push_back(RatVec({Rational(r), a0->second + k, a1v + l}));
        }
      }
    } else {
      auto b0 = form.beta0.find(r);
      auto b1 = form.beta1.find(r);
      if (b0 == form.beta0.end() || b1 == form.beta1.end()) {
        throw InvalidFormError("missing table entries for a B residue");
      }
      if (static_cast<int>(b1->second.size()) != qb) throw InvalidFormError("ragged beta1 table");
      require_unit_range(b0->second, "beta0 value");
      for (int n = 0; n < qb; ++n) {
        const Rational& b1v = b1->second[static_cast<std::size_t>(n)];
        require_unit_range(b1v, "beta1 value");
        for (int m = 0; m < qa; ++m) {
          offsets.push_back(RatVec({Rational(r), b1v + m, b0->second + n}));
        }
      }
    }
  }
  RatMat lattice = RatMat::diagonal({Rational(form.period), Rational(qa), Rational(qb)});
  return PeriodicSet::create(std::move(lattice), std::move(offsets));
}

PeriodicSet build_tower(const TowerSpec& spec, std::uint64_t offset_budget) {
  require_unit_range(spec.alpha, "alpha");
  const int d = static_cast<int>(spec.betas.size()) + 1;
  if (d < 1 || d > kMaxDim) throw DimensionMismatchError("tower dimension out of range");
  for (int t = 0; t < d - 1; ++t) {
    const auto& table = spec.betas[static_cast<std::size_t>(t)];
    if (static_cast<int>(table.periods.size()) != t + 1) {
      throw InvalidFormError("table arity must match its position");
    }
    std::size_t expect = 1;
    for (int p : table.periods) {
      if (p < 1) throw InvalidFormError("table periods must be positive");
      expect *= static_cast<std::size_t>(p);
    }
    if (table.values.size() != expect) throw InvalidFormError("table value count differs from periods");
    for (const auto& v : table.values) require_unit_range(v, "beta value");
  }

  // Coordinate j advances by the lcm of every period that watches index j.
  std::vector<Int> strides(static_cast<std::size_t>(d), Int(1));
  for (int j = 0; j + 1 < d; ++j) {
    Int p = 1;
    for (int t = j; t < d - 1; ++t) {
      p = lcm_int(p, Int(spec.betas[static_cast<std::size_t>(t)].periods[static_cast<std::size_t>(j)]));
    }
    strides[static_cast<std::size_t>(j)] = p;
  }

  Int count = 1;
  for (int j = 0; j + 1 < d; ++j) count *= strides[static_cast<std::size_t>(j)];
  if (count > Int(offset_budget)) throw BudgetExceededError("tower period product exceeds the offset budget");

  std::vector<RatVec> offsets;
  std::vector<Int> k(static_cast<std::size_t>(d > 1 ? d - 1 : 1));
  for (;;) {
    std::vector<Rational> coords(static_cast<std::size_t>(d));
    coords[0] = spec.alpha + Rational(k[0]);
    if (d == 1) coords[0] = spec.alpha;
    for (int j = 1; j < d; ++j) {
      std::span<const Int> prefix(k.data(), static_cast<std::size_t>(j));
      Rational v = spec.betas[static_cast<std::size_t>(j - 1)].at(prefix);
      if (j + 1 < d) v += Rational(k[static_cast<std::size_t>(j)]);
      coords[static_cast<std::size_t>(j)] = std::move(v);
    }
    offsets.push_back(RatVec(std::move(coords)));

    if (d == 1) break;
    int pos = 0;
    while (pos < d - 1) {
      k[static_cast<std::size_t>(pos)] += 1;
      if (k[static_cast<std::size_t>(pos)] < strides[static_cast<std::size_t>(pos)]) break;
      k[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == d - 1) break;
  }

  std::vector<Rational> diag(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) diag[static_cast<std::size_t>(j)] = Rational(strides[static_cast<std::size_t>(j)]);
  return PeriodicSet::create(RatMat::diagonal(std::move(diag)), std::move(offsets));
}

PeriodicSet cross_product(const CrossProductSpec& spec) {
  const int d1 = spec.left.dim();
  const int d2 = spec.right.dim();
  if (d1 + d2 > kMaxDim) throw DimensionMismatchError("cross product dimension out of range");
  if (spec.beta.size() != spec.left.offsets().size()) {
    throw DimensionMismatchError("beta must assign a vector to every left offset");
  }
  for (const auto& b : spec.beta) {
    if (b.dim() != d2) throw DimensionMismatchError("beta value dimension differs from right factor");
  }
  if (classify_pair(spec.left).status != PairStatus::SpectralAndTiling ||
      classify_pair(spec.right).status != PairStatus::SpectralAndTiling) {
    throw NotSpectralError("cross product factors must classify as spectral tilings");
  }

  const int d = d1 + d2;
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(d),
                                          std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d1; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = spec.left.lattice().at(i, j);
  }
  for (int i = 0; i < d2; ++i) {
    for (int j = 0; j < d2; ++j) {
      rows[static_cast<std::size_t>(d1 + i)][static_cast<std::size_t>(d1 + j)] = spec.right.lattice().at(i, j);
    }
  }

  std::vector<RatVec> offsets;
  offsets.reserve(spec.left.offsets().size() * spec.right.offsets().size());
  for (std::size_t i = 0; i < spec.left.offsets().size(); ++i) {
    const RatVec& l1 = spec.left.offsets()[i];
    for (const RatVec& l2 : spec.right.offsets()) {
      std::vector<Rational> coords(static_cast<std::size_t>(d));
      for (int j = 0; j < d1; ++j) coords[static_cast<std::size_t>(j)] = l1[j];
      for (int j = 0; j < d2; ++j) coords[static_cast<std::size_t>(d1 + j)] = spec.beta[i][j] + l2[j];
      offsets.push_back(RatVec(std::move(coords)));
    }
  }
  return PeriodicSet::create(RatMat(std::move(rows)), std::move(offsets));
}

namespace {

constexpr std::uint64_t kRecognizerPeriodCap = 65536;

struct Dim2Raw {
  Dim2Orientation orientation = Dim2Orientation::ColumnShifted;
  Rational alpha;
  std::vector<Rational> beta;
};

// Lattice period along the first coordinate axis; an integer whenever the
// first row of the generator is integral.
std::optional<Int> axis_period(const PeriodicSet& ps) {
  RatVec w = ps.lattice_inverse().column(0);
  Int p = 1;
  for (int i = 0; i < w.dim(); ++i) p = lcm_int(p, denominator_of(w[i]));
  if (p > Int(kRecognizerPeriodCap)) throw BudgetExceededError("axis period too large to tabulate");
  return p;
}

// Exact parameters of a column-shifted description of ps, if one exists:
// first coordinates all congruent to alpha, shift table read off the columns.
// No translation is applied, so the parameters are absolute.
std::optional<Dim2Raw> recognize_column_form(const PeriodicSet& ps) {
  if (!ps.lattice().row_is_integral(0)) return std::nullopt;
  const Rational alpha = frac_part(ps.offsets().front()[0]);
  for (const auto& off : ps.offsets()) {
    if (frac_part(off[0]) != alpha) return std::nullopt;
  }
  Int period = *axis_period(ps);

  std::vector<Int> row(2);
  row[0] = numerator_of(ps.lattice().at(0, 0));
  row[1] = numerator_of(ps.lattice().at(0, 1));

  std::vector<Rational> beta;
  for (Int m = 0; m < period; ++m) {
    std::optional<Rational> value;
    for (const auto& off : ps.offsets()) {
      Int n = floor_rat(off[0]);  // off[0] = alpha + n
      auto k = solve_row(row, m - n);
      if (!k) continue;
      Rational y = off[1] + ps.lattice().at(1, 0) * Rational((*k)[0]) + ps.lattice().at(1, 1) * Rational((*k)[1]);
      Rational f = frac_part(y);
      if (!value) {
        value = f;
      } else if (*value != f) {
        return std::nullopt;  // column holds two incompatible cosets
      }
    }
    if (!value) return std::nullopt;  // empty column: not a tiling in this orientation
    beta.push_back(*value);
  }
  int p = minimal_cyclic_period(beta);
  beta.resize(static_cast<std::size_t>(p));
  return Dim2Raw{Dim2Orientation::ColumnShifted, alpha, std::move(beta)};
}

std::optional<Dim2Raw> recognize_2d_raw(const PeriodicSet& ps) {
  if (auto col = recognize_column_form(ps)) return col;
  static const int swap_perm[2] = {1, 0};
  if (auto row = recognize_column_form(ps.permuted(swap_perm))) {
    row->orientation = Dim2Orientation::RowShifted;
    return row;
  }
  return std::nullopt;
}

// Data recovered per first-coordinate residue of a three-dimensional set.
struct SectionData {
  ResidueClass cls = ResidueClass::A;
  Rational base;
  std::vector<Rational> table;

  bool operator==(const SectionData&) const = default;
};

std::optional<Dim3Form> recognize_3d_oriented(const PeriodicSet& ps, const PackingOptions& opts) {
  if (!ps.lattice().row_is_integral(0)) return std::nullopt;
  for (const auto& off : ps.offsets()) {
    if (!is_integer(off[0])) return std::nullopt;
  }
  Int period = *axis_period(ps);

  std::vector<Int> row(3);
  for (int j = 0; j < 3; ++j) row[static_cast<std::size_t>(j)] = numerator_of(ps.lattice().at(0, j));

  // Sublattice fixing the first coordinate, projected to the section plane.
  Int g = gcd_int(gcd_int(abs(row[0]), abs(row[1])), abs(row[2]));
  IntMat primitive(1, 3);
  for (int j = 0; j < 3; ++j) primitive.at(0, j) = g == 0 ? row[static_cast<std::size_t>(j)] : row[static_cast<std::size_t>(j)] / g;
  SmithForm snf = smith_normal_form(primitive);
  std::vector<std::vector<Rational>> sec_rows(2, std::vector<Rational>(2));
  for (int col = 0; col < 2; ++col) {
    // Lattice vector R * (kernel basis column); first coordinate is 0.
    for (int i = 0; i < 2; ++i) {
      Rational acc = 0;
      for (int j = 0; j < 3; ++j) acc += ps.lattice().at(i + 1, j) * Rational(snf.V.at(j, col + 1));
      sec_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = std::move(acc);
    }
  }
  RatMat section_lattice(std::move(sec_rows));

  std::vector<SectionData> sections;
  for (Int r = 0; r < period; ++r) {
    std::vector<RatVec> sec_offsets;
    for (const auto& off : ps.offsets()) {
      Int n = numerator_of(off[0]);
      auto k = solve_row(row, r - n);
      if (!k) continue;
      std::vector<Rational> pt(2);
      for (int i = 0; i < 2; ++i) {
        Rational acc = off[i + 1];
        for (int j = 0; j < 3; ++j) acc += ps.lattice().at(i + 1, j) * Rational((*k)[static_cast<std::size_t>(j)]);
        pt[static_cast<std::size_t>(i)] = std::move(acc);
      }
      sec_offsets.push_back(RatVec(std::move(pt)));
    }
    if (sec_offsets.empty()) return std::nullopt;
    PeriodicSet section = PeriodicSet::create(section_lattice, std::move(sec_offsets));
    if (classify_pair(section, opts).status != PairStatus::SpectralAndTiling) return std::nullopt;
    auto raw = recognize_2d_raw(section);
    if (!raw) return std::nullopt;
    SectionData data;
    data.cls = raw->orientation == Dim2Orientation::ColumnShifted ? ResidueClass::A : ResidueClass::B;
    data.base = raw->alpha;
    data.table = std::move(raw->beta);
    sections.push_back(std::move(data));
  }

  int p = minimal_cyclic_period(sections);
  sections.resize(static_cast<std::size_t>(p));

  Dim3Form form;
  form.period = p;
  form.alpha1_period = 1;
  form.beta1_period = 1;
  for (const auto& s : sections) {
    if (s.cls == ResidueClass::A) {
      form.alpha1_period = static_cast<int>(lcm_int(Int(form.alpha1_period), Int(s.table.size())).convert_to<int>());
    } else {
      form.beta1_period = static_cast<int>(lcm_int(Int(form.beta1_period), Int(s.table.size())).convert_to<int>());
    }
  }
  for (int r = 0; r < p; ++r) {
    const auto& s = sections[static_cast<std::size_t>(r)];
    form.partition.push_back(s.cls);
    const int target = s.cls == ResidueClass::A ? form.alpha1_period : form.beta1_period;
    std::vector<Rational> padded(static_cast<std::size_t>(target));
    for (int i = 0; i < target; ++i) padded[static_cast<std::size_t>(i)] = s.table[static_cast<std::size_t>(i) % s.table.size()];
    if (s.cls == ResidueClass::A) {
      form.alpha0.emplace(r, s.base);
      form.alpha1.emplace(r, std::move(padded));
    } else {
      form.beta0.emplace(r, s.base);
      form.beta1.emplace(r, std::move(padded));
    }
  }
  return form;
}

const std::vector<std::vector<int>>& all_permutations_3() {
  static const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  };
  return perms;
}

}  // namespace

Recognition recognize(const PeriodicSet& ps, const PackingOptions& opts) {
  const int d = ps.dim();
  if (d > 3) throw UnsupportedDimensionError("catalogs exist for dimensions 1-3 only");
  if (classify_pair(ps, opts).status != PairStatus::SpectralAndTiling) {
    throw NotSpectralError("recognition requires a verified spectral tiling");
  }

  Recognition rec;
  rec.translation = ps.offsets().front();  // lexicographically smallest offset
  PeriodicSet base = ps.translated(-rec.translation);
  rec.permutation.resize(static_cast<std::size_t>(d));
  std::iota(rec.permutation.begin(), rec.permutation.end(), 0);

  if (d == 1) {
    // A verified one-dimensional spectral tiling is a translate of the
    // integers; after the normalization that translate is the integers.
    PeriodicSet integers = PeriodicSet::create(RatMat::identity(1), {RatVec::zero(1)});
    if (same_point_set(base, integers)) {
      rec.kind = Recognition::Kind::Dim1;
      rec.dim1 = Dim1Form{Rational(0)};
    }
    return rec;
  }

  if (d == 2) {
    if (auto raw = recognize_2d_raw(base)) {
      rec.kind = Recognition::Kind::Dim2;
      rec.dim2 = Dim2Form{raw->orientation, raw->alpha, std::move(raw->beta)};
    }
    return rec;
  }

  for (const auto& perm : all_permutations_3()) {
    PeriodicSet oriented = base.permuted(perm);
    auto form = recognize_3d_oriented(oriented, opts);
    if (!form) continue;
    if (!same_point_set(build_3d(*form), oriented)) continue;  // reconstruction must match
    if (rec.kind == Recognition::Kind::NotCatalogForm) {
      rec.kind = Recognition::Kind::Dim3;
      rec.dim3 = std::move(*form);
      rec.permutation = perm;
    } else {
      rec.alternative_permutations.push_back(perm);
    }
  }
  return rec;
}

PeriodicSet rebuild(const Recognition& rec) {
  PeriodicSet built = [&]() {
    switch (rec.kind) {
      case Recognition::Kind::Dim1: return build_1d(*rec.dim1);
      case Recognition::Kind::Dim2: return build_2d(*rec.dim2);
      case Recognition::Kind::Dim3: return build_3d(*rec.dim3);
      default: throw InvalidFormError("nothing to rebuild");
    }
  }();
  std::vector<int> inverse(rec.permutation.size());
  for (std::size_t i = 0; i < rec.permutation.size(); ++i) {
    inverse[static_cast<std::size_t>(rec.permutation[i])] = static_cast<int>(i);
  }
  return built.permuted(inverse).translated(rec.translation);
}

}  // namespace spectile
