#include "spectile/periodic.hpp"

#include "spectile/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace spectile {

namespace {

Int denominator_lcm_of_matrix(const RatMat& m) {
  Int n = 1;
  for (const auto& row : m.rows()) {
    for (const auto& q : row) n = lcm_int(n, denominator_of(q));
  }
  return n;
}

Int denominator_lcm_of_vector(const RatVec& v) {
  Int n = 1;
  for (const auto& q : v.entries()) n = lcm_int(n, denominator_of(q));
  return n;
}

struct WorkCounter {
  std::uint64_t remaining;
  void charge(std::uint64_t amount) {
    if (amount > remaining) throw BudgetExceededError("packing check exceeded the work cap");
    remaining -= amount;
  }
};

}  // namespace

PeriodicSet::PeriodicSet(RatMat lattice, RatMat inverse, Rational det, std::vector<RatVec> offsets)
    : lattice_(std::move(lattice)),
      inverse_(std::move(inverse)),
      det_(std::move(det)),
      offsets_(std::move(offsets)) {}

PeriodicSet PeriodicSet::create(RatMat lattice, std::vector<RatVec> offsets) {
  if (offsets.empty()) throw InvalidFormError("periodic set needs at least one offset");
  Rational det = lattice.det();
  if (det == 0) throw SingularLatticeError("lattice generator is singular");
  RatMat inverse = lattice.inverse();
  for (const auto& off : offsets) {
    if (off.dim() != lattice.dim()) throw DimensionMismatchError("offset dimension differs from lattice");
  }
  PeriodicSet tmp(std::move(lattice), std::move(inverse), std::move(det), {});
  std::vector<RatVec> reduced;
  reduced.reserve(offsets.size());
  for (const auto& off : offsets) reduced.push_back(tmp.reduce(off));
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  tmp.offsets_ = std::move(reduced);
  return tmp;
}

RatVec PeriodicSet::reduce(const RatVec& point) const {
  RatVec y = inverse_.apply(point);
  std::vector<Rational> fr(static_cast<std::size_t>(y.dim()));
  for (int i = 0; i < y.dim(); ++i) fr[static_cast<std::size_t>(i)] = frac_part(y[i]);
  return lattice_.apply(RatVec(std::move(fr)));
}

bool PeriodicSet::contains(const RatVec& point) const {
  if (point.dim() != dim()) return false;
  RatVec r = reduce(point);
  return std::binary_search(offsets_.begin(), offsets_.end(), r);
}

PeriodicSet PeriodicSet::translated(const RatVec& t) const {
  if (t.dim() != dim()) throw DimensionMismatchError("translation dimension differs");
  std::vector<RatVec> moved;
  moved.reserve(offsets_.size());
  for (const auto& off : offsets_) moved.push_back(off + t);
  return create(lattice_, std::move(moved));
}

PeriodicSet PeriodicSet::permuted(std::span<const int> perm) const {
  const int d = dim();
  if (static_cast<int>(perm.size()) != d) throw DimensionMismatchError("permutation size differs");
  std::vector<bool> hit(static_cast<std::size_t>(d), false);
  for (int p : perm) {
    if (p < 0 || p >= d || hit[static_cast<std::size_t>(p)]) throw InvalidFormError("not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) rows.push_back(lattice_.rows()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
  std::vector<RatVec> offs;
  offs.reserve(offsets_.size());
  for (const auto& off : offsets_) {
    std::vector<Rational> e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = off[perm[static_cast<std::size_t>(i)]];
    offs.push_back(RatVec(std::move(e)));
  }
  return create(RatMat(std::move(rows)), std::move(offs));
}

bool same_point_set(const PeriodicSet& a, const PeriodicSet& b) {
  if (a.dim() != b.dim()) return false;
  Rational da = Rational(static_cast<long>(a.offsets().size())) / abs(a.lattice_det());
  Rational db = Rational(static_cast<long>(b.offsets().size())) / abs(b.lattice_det());
  if (da != db) return false;
  // a's offsets must be points of b, and b must be invariant under a's lattice.
  for (const auto& off : a.offsets()) {
    if (!b.contains(off)) return false;
  }
  for (int j = 0; j < a.dim(); ++j) {
    RatVec col = a.lattice().column(j);
    for (const auto& off : b.offsets()) {
      if (!b.contains(off + col)) return false;
    }
  }
  return true;
}

const char* to_string(PairStatus status) {
  switch (status) {
    case PairStatus::SpectralAndTiling: return "SpectralAndTiling";
    case PairStatus::PackingOnlyIncomplete: return "PackingOnlyIncomplete";
    case PairStatus::NotPacking: return "NotPacking";
  }
  return "?";
}

namespace {

// Per-difference analysis. Returns a witness when some lattice translate of
// delta escapes the zero set.
class DeltaChecker {
 public:
  DeltaChecker(const PeriodicSet& ps, WorkCounter& work)
      : ps_(ps), work_(work), r_integral_(ps.lattice().is_integral()) {}

  std::optional<PackingWitness> check(const RatVec& delta) {
    work_.charge(1);
    if (r_integral_) return check_integral_lattice(delta);
    return check_general(delta);
  }

 private:
  std::optional<PackingWitness> make_witness(const RatVec& delta, std::vector<Int> k) const {
    RatVec v = delta;
    for (int j = 0; j < ps_.dim(); ++j) {
      Rational acc = 0;
      for (int h = 0; h < ps_.dim(); ++h) acc += ps_.lattice().at(j, h) * Rational(k[static_cast<std::size_t>(h)]);
      v[j] += acc;
    }
    return PackingWitness{delta, std::move(k), std::move(v)};
  }

  // Integral lattice: the integrality pattern of R k + delta does not depend
  // on k at all, so a single unconstrained system decides the difference.
  std::optional<PackingWitness> check_integral_lattice(const RatVec& delta) {
    const int d = ps_.dim();
    if (delta.is_integral()) {
      // R k + delta is a nonzero integer vector for every k (it vanishes only
      // when delta lies in the lattice, which canonical offsets exclude), and
      // any nonzero integer vector has a nonzero integer coordinate.
      return std::nullopt;
    }
    std::vector<int> pattern;
    for (int j = 0; j < d; ++j) {
      if (is_integer(delta[j])) pattern.push_back(j);
    }
    if (pattern.empty()) {
      return make_witness(delta, std::vector<Int>(static_cast<std::size_t>(d)));
    }
    work_.charge(10);
    IntMat A(static_cast<int>(pattern.size()), d);
    std::vector<Int> b(pattern.size());
    for (std::size_t r = 0; r < pattern.size(); ++r) {
      const int j = pattern[r];
      for (int h = 0; h < d; ++h) A.at(static_cast<int>(r), h) = numerator_of(ps_.lattice().at(j, h));
      b[r] = -numerator_of(delta[pattern[r]]);
    }
    std::vector<Int> zero(static_cast<std::size_t>(d));
    IntAffineSolution sol = solve_integer_affine(A, b, Int(1), zero);
    if (sol.empty) return std::nullopt;
    // Some coordinate stays non-integer, so the solution vector cannot be 0.
    return make_witness(delta, std::move(sol.point));
  }

  std::optional<PackingWitness> check_general(const RatVec& delta) {
    const int d = ps_.dim();
    Int n = lcm_int(denominator_lcm_of_matrix(ps_.lattice()), denominator_lcm_of_vector(delta));
    // Scaled data: W = (nR) c + n delta is integral; coordinate j of
    // R c + delta is an integer exactly when n divides W_j.
    IntMat nR(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        nR.at(i, j) = numerator_of(Rational(n) * ps_.lattice().at(i, j));
      }
    }
    std::vector<Int> ndelta(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) ndelta[static_cast<std::size_t>(j)] = numerator_of(Rational(n) * delta[j]);

    std::vector<Int> c(static_cast<std::size_t>(d));
    std::vector<Int> w = ndelta;  // W at c = 0
    for (;;) {
      work_.charge(2);
      std::vector<int> pattern;
      for (int j = 0; j < d; ++j) {
        if (w[static_cast<std::size_t>(j)] % n == 0) pattern.push_back(j);
      }
      if (pattern.empty()) {
        return make_witness(delta, c);
      }
      if (auto witness = solve_class(delta, nR, ndelta, n, c, pattern)) return witness;

      // Mixed-radix odometer over residue classes [0, n)^d.
      int pos = 0;
      while (pos < d) {
        c[static_cast<std::size_t>(pos)] += 1;
        for (int j = 0; j < d; ++j) w[static_cast<std::size_t>(j)] += nR.at(j, pos);
        if (c[static_cast<std::size_t>(pos)] < n) break;
        for (int j = 0; j < d; ++j) w[static_cast<std::size_t>(j)] -= n * nR.at(j, pos);
        c[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
    return std::nullopt;
  }

  std::optional<PackingWitness> solve_class(const RatVec& delta, const IntMat& nR,
                                            const std::vector<Int>& ndelta, const Int& n,
                                            const std::vector<Int>& c, const std::vector<int>& pattern) {
    work_.charge(10);
    const int d = ps_.dim();
    IntMat A(static_cast<int>(pattern.size()), d);
    std::vector<Int> b(pattern.size());
    for (std::size_t r = 0; r < pattern.size(); ++r) {
      const int j = pattern[r];
      for (int h = 0; h < d; ++h) A.at(static_cast<int>(r), h) = nR.at(j, h);
      b[r] = -ndelta[static_cast<std::size_t>(j)];
    }
    IntAffineSolution sol = solve_integer_affine(A, b, n, c);
    if (sol.empty) return std::nullopt;
    auto witness = make_witness(delta, sol.point);
    if (!witness->vector.is_zero()) return witness;
    // The zero vector itself is allowed; look for a second solution.
    if (sol.basis.empty()) return std::nullopt;
    std::vector<Int> k = sol.point;
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += sol.basis.front()[i];
    return make_witness(delta, std::move(k));
  }

  const PeriodicSet& ps_;
  WorkCounter& work_;
  bool r_integral_;
};

}  // namespace

PackingResult packing_check(const PeriodicSet& ps, const PackingOptions& opts) {
  const auto& offsets = ps.offsets();
  const bool r_integral = ps.lattice().is_integral();

  if (r_integral) {
    bool all_integral = std::all_of(offsets.begin(), offsets.end(),
                                    [](const RatVec& o) { return o.is_integral(); });
    if (all_integral) return PackingResult{true, std::nullopt};
  } else {
    // Cost gate for the residue-class enumeration: n^d * |offsets|^2.
    Int n = denominator_lcm_of_matrix(ps.lattice());
    for (const auto& off : offsets) n = lcm_int(n, denominator_lcm_of_vector(off));
    Int estimate = 1;
    for (int i = 0; i < ps.dim(); ++i) estimate *= n;
    estimate *= Int(offsets.size()) * Int(offsets.size());
    if (estimate > Int(opts.work_cap)) {
      throw BudgetExceededError("residue class enumeration would exceed the work cap");
    }
  }

  WorkCounter work{opts.work_cap};
  DeltaChecker checker(ps, work);

  if (auto witness = checker.check(RatVec::zero(ps.dim()))) {
    return PackingResult{false, std::move(witness)};
  }
  // One representative per difference pair: a violation for delta at k is a
  // violation for -delta at -k, so signs need not be checked twice.
  std::set<RatVec> seen;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    for (std::size_t j = i + 1; j < offsets.size(); ++j) {
      work.charge(1);
      RatVec delta = offsets[j] - offsets[i];
      if (!seen.insert(delta).second) continue;
      if (auto witness = checker.check(delta)) {
        return PackingResult{false, std::move(witness)};
      }
    }
  }
  return PackingResult{true, std::nullopt};
}

PairVerdict classify_pair(const PeriodicSet& ps, const PackingOptions& opts) {
  PackingResult packing = packing_check(ps, opts);
  Rational abs_det = abs(ps.lattice_det());
  PairVerdict verdict;
  verdict.density = Rational(static_cast<long>(ps.offsets().size())) / abs_det;
  verdict.non_integer_density = !is_integer(abs_det);
  if (!packing.packs) {
    verdict.status = PairStatus::NotPacking;
    verdict.witness = std::move(packing.witness);
  } else if (verdict.density == 1) {
    verdict.status = PairStatus::SpectralAndTiling;
  } else {
    verdict.status = PairStatus::PackingOnlyIncomplete;
  }
  return verdict;
}

std::vector<RatVec> enumerate_window(const PeriodicSet& ps, int box_radius,
                                     std::uint64_t point_budget) {
  if (box_radius < 0) throw InvalidFormError("window radius must be nonnegative");
  const int d = ps.dim();
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(box_radius) + 1;
  std::uint64_t lattice_points = 1;
  for (int i = 0; i < d; ++i) {
    if (lattice_points > point_budget / side + 1) throw BudgetExceededError("window too large");
    lattice_points *= side;
  }
  if (lattice_points * ps.offsets().size() > point_budget) {
    throw BudgetExceededError("window too large");
  }

  std::vector<RatVec> out;
  out.reserve(lattice_points * ps.offsets().size());
  std::vector<Int> k(static_cast<std::size_t>(d), Int(-box_radius));
  for (;;) {
    std::vector<Rational> lk(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      Rational acc = 0;
      for (int j = 0; j < d; ++j) acc += ps.lattice().at(i, j) * Rational(k[static_cast<std::size_t>(j)]);
      lk[static_cast<std::size_t>(i)] = std::move(acc);
    }
    RatVec shift(std::move(lk));
    for (const auto& off : ps.offsets()) out.push_back(off + shift);

    int pos = 0;
    while (pos < d) {
      k[static_cast<std::size_t>(pos)] += 1;
      if (k[static_cast<std::size_t>(pos)] <= box_radius) break;
      k[static_cast<std::size_t>(pos)] = -box_radius;
      ++pos;
    }
    if (pos == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spectile
