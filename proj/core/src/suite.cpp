#include "spectile/suite.hpp"

#include "spectile/cube.hpp"
#include "spectile/errors.hpp"
#include "spectile/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace spectile {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Value in [0, 1) with denominator from the pool.
Rational rand_unit(std::mt19937_64& rng, const std::vector<int>& denominators) {
  int den = denominators[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(denominators.size()) - 1))];
  int num = rand_int(rng, 0, den - 1);
  return Rational(num, den);
}

const std::vector<int> kDenomPool124 = {1, 2, 4};
const std::vector<int> kDenomPool1234 = {1, 2, 3, 4};

}  // namespace

Dim1Form random_dim1_form(std::mt19937_64& rng) { return Dim1Form{rand_unit(rng, kDenomPool124)}; }

Dim2Form random_dim2_form(std::mt19937_64& rng) {
  Dim2Form form;
  form.orientation = rand_int(rng, 0, 1) == 0 ? Dim2Orientation::ColumnShifted : Dim2Orientation::RowShifted;
  form.alpha = rand_unit(rng, kDenomPool124);
  const int period = rand_int(rng, 1, 4);
  for (int i = 0; i < period; ++i) form.beta.push_back(rand_unit(rng, kDenomPool124));
  return form;
}

Dim3Form random_dim3_form(std::mt19937_64& rng) {
  Dim3Form form;
  form.period = rand_int(rng, 1, 3);
  form.alpha1_period = rand_int(rng, 1, 2);
  form.beta1_period = rand_int(rng, 1, 2);
  for (int r = 0; r < form.period; ++r) {
    bool a_class = rand_int(rng, 0, 1) == 0;
    form.partition.push_back(a_class ? ResidueClass::A : ResidueClass::B);
    if (a_class) {
      form.alpha0.emplace(r, rand_unit(rng, kDenomPool124));
      std::vector<Rational> table;
      for (int k = 0; k < form.alpha1_period; ++k) table.push_back(rand_unit(rng, kDenomPool124));
      form.alpha1.emplace(r, std::move(table));
    } else {
      form.beta0.emplace(r, rand_unit(rng, kDenomPool124));
      std::vector<Rational> table;
      for (int n = 0; n < form.beta1_period; ++n) table.push_back(rand_unit(rng, kDenomPool124));
      form.beta1.emplace(r, std::move(table));
    }
  }
  return form;
}

namespace {

PeriodicSet random_catalog_build(std::mt19937_64& rng, int dim) {
  switch (dim) {
    case 1: return build_1d(random_dim1_form(rng));
    case 2: return build_2d(random_dim2_form(rng));
    default: return build_3d(random_dim3_form(rng));
  }
}

RatVec random_translation(std::mt19937_64& rng, int dim) {
  std::vector<Rational> t(static_cast<std::size_t>(dim));
  for (auto& q : t) q = rand_unit(rng, kDenomPool124) + rand_int(rng, -1, 1);
  return RatVec(std::move(t));
}

// A built tiling with one offset shifted along its structurally pinned
// coordinate. Free-table coordinates would just describe another tiling, so
// mutations stick to configurations where a violation is forced:
// two-dimensional forms with period >= 2 (shift the alpha coordinate), and
// three-dimensional forms with unit inner periods (shift the residue
// coordinate).
PeriodicSet rigid_mutation(std::mt19937_64& rng, const Rational& shift) {
  int pinned;
  PeriodicSet base = [&]() {
    if (rand_int(rng, 0, 1) == 0) {
      Dim2Form form = random_dim2_form(rng);
      if (form.period() < 2) form.beta.push_back(rand_unit(rng, kDenomPool124));
      pinned = form.orientation == Dim2Orientation::ColumnShifted ? 0 : 1;
      return build_2d(form);
    }
    Dim3Form form = random_dim3_form(rng);
    form.period = std::max(form.period, 2);
    while (static_cast<int>(form.partition.size()) < form.period) {
      form.partition.push_back(ResidueClass::A);
    }
    form.alpha1_period = 1;
    form.beta1_period = 1;
    for (int r = 0; r < form.period; ++r) {
      if (form.partition[static_cast<std::size_t>(r)] == ResidueClass::A) {
        form.alpha0.try_emplace(r, rand_unit(rng, kDenomPool124));
        form.alpha1[r] = {rand_unit(rng, kDenomPool124)};
      } else {
        form.beta0.try_emplace(r, rand_unit(rng, kDenomPool124));
        form.beta1[r] = {rand_unit(rng, kDenomPool124)};
      }
    }
    pinned = 0;
    return build_3d(form);
  }();

  std::vector<RatVec> offsets = base.offsets();
  auto& victim = offsets[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(offsets.size()) - 1))];
  victim[pinned] += shift;
  return PeriodicSet::create(base.lattice(), std::move(offsets));
}

PeriodicSet random_unstructured_set(std::mt19937_64& rng) {
  const int d = rand_int(rng, 1, 3);
  const auto& dens = d == 3 ? kDenomPool124 : kDenomPool1234;
  for (;;) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(d),
                                            std::vector<Rational>(static_cast<std::size_t>(d)));
    for (auto& row : rows) {
      for (auto& e : row) {
        int den = dens[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(dens.size()) - 1))];
        e = Rational(rand_int(rng, -2 * den, 2 * den), den);
      }
    }
    RatMat lattice(std::move(rows));
    if (lattice.det() == 0) continue;
    const int count = rand_int(rng, 1, 4);
    std::vector<RatVec> offsets;
    for (int i = 0; i < count; ++i) {
      std::vector<Rational> e(static_cast<std::size_t>(d));
      for (auto& q : e) q = rand_unit(rng, dens) + rand_int(rng, 0, 2);
      offsets.push_back(RatVec(std::move(e)));
    }
    return PeriodicSet::create(std::move(lattice), std::move(offsets));
  }
}

}  // namespace

PeriodicSet random_periodic_set(std::mt19937_64& rng) {
  switch (rand_int(rng, 0, 5)) {
    case 0:
    case 1: {
      PeriodicSet built = random_catalog_build(rng, rand_int(rng, 1, 3));
      if (rand_int(rng, 0, 1) == 0) built = built.translated(random_translation(rng, built.dim()));
      return built;
    }
    case 2: {
      PeriodicSet built = random_catalog_build(rng, rand_int(rng, 2, 3));
      if (built.offsets().size() < 2) return built;
      std::vector<RatVec> kept = built.offsets();
      const int drop = rand_int(rng, 1, static_cast<int>(kept.size()) - 1);
      for (int i = 0; i < drop; ++i) {
        kept.erase(kept.begin() + rand_int(rng, 0, static_cast<int>(kept.size()) - 1));
      }
      return PeriodicSet::create(built.lattice(), std::move(kept));
    }
    case 3:
      return rigid_mutation(rng, Rational(1, 4));
    default:
      return random_unstructured_set(rng);
  }
}

namespace {

std::vector<std::int64_t> subgroup_closure(const FiniteGroup& g, const std::vector<std::int64_t>& gens) {
  std::set<std::int64_t> members = {0};
  for (;;) {
    std::set<std::int64_t> next = members;
    for (std::int64_t m : members) {
      for (std::int64_t gen : gens) next.insert(g.add(m, gen));
    }
    if (next.size() == members.size()) break;
    members.swap(next);
  }
  return {members.begin(), members.end()};
}

// Exact test: the pairing of x with every member of H is trivial.
bool annihilates(const FiniteGroup& g, std::int64_t x, const std::vector<std::int64_t>& h) {
  const std::int64_t n = g.exponent();
  std::vector<int> cx = g.decode(x);
  for (std::int64_t member : h) {
    std::vector<int> cm = g.decode(member);
    std::int64_t phase = 0;
    for (std::size_t j = 0; j < cx.size(); ++j) {
      phase += static_cast<std::int64_t>(cx[j]) * cm[j] * (n / g.cyclic_orders()[j]);
    }
    if (phase % n != 0) return false;
  }
  return true;
}

FiniteGroup random_group(std::mt19937_64& rng, std::int64_t max_order) {
  static const int pool[] = {2, 2, 3, 4, 4, 5, 6, 8, 9, 16};
  std::vector<int> orders;
  std::int64_t order = 1;
  std::int64_t exponent = 1;
  const int factors = rand_int(rng, 1, 3);
  for (int i = 0; i < factors; ++i) {
    int f = pool[rand_int(rng, 0, static_cast<int>(std::size(pool)) - 1)];
    std::int64_t next_exp = std::lcm(exponent, static_cast<std::int64_t>(f));
    if (order * f > max_order || next_exp > kMaxGroupExponent) continue;
    orders.push_back(f);
    order *= f;
    exponent = next_exp;
  }
  if (orders.empty()) orders.push_back(static_cast<int>(std::min<std::int64_t>(max_order, 4)));
  return FiniteGroup(std::move(orders));
}

}  // namespace

MeasurePair random_spectral_measure_pair(std::mt19937_64& rng, std::int64_t max_order) {
  FiniteGroup g = random_group(rng, max_order);

  std::vector<std::int64_t> gens;
  const int gen_count = rand_int(rng, 1, 2);
  for (int i = 0; i < gen_count; ++i) {
    gens.push_back(std::uniform_int_distribution<std::int64_t>(0, g.order() - 1)(rng));
  }
  std::vector<std::int64_t> subgroup = subgroup_closure(g, gens);

  std::vector<std::int64_t> annihilator;
  for (std::int64_t x = 0; x < g.order(); ++x) {
    if (annihilates(g, x, subgroup)) annihilator.push_back(x);
  }

  // Random transversal of the annihilator: shuffled greedy over cosets.
  std::vector<std::int64_t> elements(static_cast<std::size_t>(g.order()));
  std::iota(elements.begin(), elements.end(), 0);
  std::shuffle(elements.begin(), elements.end(), rng);
  std::set<std::int64_t> seen_cosets;
  std::vector<std::int64_t> transversal;
  for (std::int64_t x : elements) {
    std::int64_t coset_id = g.order();
    for (std::int64_t p : annihilator) coset_id = std::min(coset_id, g.add(x, p));
    if (seen_cosets.insert(coset_id).second) transversal.push_back(x);
  }

  static const Rational scales[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3), Rational(1, 3)};
  const Rational scale = scales[rand_int(rng, 0, 4)];
  const std::int64_t t = std::uniform_int_distribution<std::int64_t>(0, g.order() - 1)(rng);
  const std::int64_t s = std::uniform_int_distribution<std::int64_t>(0, g.order() - 1)(rng);

  std::vector<std::int64_t> mu_support;
  for (std::int64_t x : transversal) mu_support.push_back(g.add(x, t));
  std::vector<std::int64_t> nu_support;
  for (std::int64_t x : subgroup) nu_support.push_back(g.add(x, s));

  Measure mu = Measure::counting_on(g, mu_support, scale);
  Measure nu = Measure::counting_on(g, nu_support,
                                    Rational(1) / (scale * Rational(static_cast<long>(transversal.size()))));
  return MeasurePair{std::move(mu), std::move(nu)};
}

MeasurePair random_measure_pair(std::mt19937_64& rng, std::int64_t max_order) {
  switch (rand_int(rng, 0, 3)) {
    case 0:
    case 1:
      return random_spectral_measure_pair(rng, max_order);
    case 2: {
      MeasurePair pair = random_spectral_measure_pair(rng, max_order);
      std::vector<Rational> w = pair.nu.weights();
      const auto& supp = pair.nu.support();
      w[static_cast<std::size_t>(supp[static_cast<std::size_t>(
          rand_int(rng, 0, static_cast<int>(supp.size()) - 1))])] *= 2;
      return MeasurePair{pair.mu, Measure(pair.nu.group(), std::move(w))};
    }
    default: {
      FiniteGroup g = random_group(rng, max_order);
      auto random_measure = [&]() {
        std::vector<Rational> w(static_cast<std::size_t>(g.order()));
        for (auto& q : w) {
          if (rand_int(rng, 0, 2) == 0) q = Rational(rand_int(rng, 1, 4), rand_int(rng, 1, 3));
        }
        if (std::all_of(w.begin(), w.end(), [](const Rational& q) { return q == 0; })) w[0] = 1;
        return Measure(g, std::move(w));
      };
      return MeasurePair{random_measure(), random_measure()};
    }
  }
}

namespace {

std::string count_detail(int good, int total) {
  std::ostringstream out;
  out << good << "/" << total;
  return out.str();
}

bool witness_is_valid(const PeriodicSet& ps, const PackingWitness& witness) {
  // Replay: the vector must really escape the zero set, match R k + delta,
  // and delta must be an offset difference (or zero).
  if (in_zero_set(witness.vector) || witness.vector.is_zero()) return false;
  RatVec expect = witness.delta;
  for (int i = 0; i < ps.dim(); ++i) {
    Rational acc = expect[i];
    for (int j = 0; j < ps.dim(); ++j) {
      acc += ps.lattice().at(i, j) * Rational(witness.k[static_cast<std::size_t>(j)]);
    }
    if (acc != witness.vector[i]) return false;
  }
  if (witness.delta.is_zero()) return true;
  for (const auto& a : ps.offsets()) {
    for (const auto& b : ps.offsets()) {
      if (a - b == witness.delta) return true;
    }
  }
  return false;
}

CriterionResult criterion_periodic_oracle_agreement(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"1-periodic-oracle-agreement", false, "", 0.0};
  int agree = 0;
  const int total = 200;
  PackingOptions packing{opts.work_cap};
  for (int i = 0; i < total; ++i) {
    std::mt19937_64 rng(opts.seed + 1000 + static_cast<std::uint64_t>(i));
    PeriodicSet ps = random_periodic_set(rng);
    bool spectral = classify_pair(ps, packing).status == PairStatus::SpectralAndTiling;
    bool tiles = rasterized_tiling_check(ps, opts.work_cap).tiles;
    if (spectral == tiles) ++agree;
  }
  result.seconds = seconds_since(start);
  result.passed = agree == total && result.seconds < 60.0;
  result.detail = count_detail(agree, total) + " agreements";
  return result;
}

CriterionResult criterion_catalog_roundtrip(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"2-catalog-roundtrip", false, "", 0.0};
  PackingOptions packing{opts.work_cap};
  int built_ok = 0;
  const int per_dim = 100;
  for (int dim = 1; dim <= 3; ++dim) {
    for (int i = 0; i < per_dim; ++i) {
      std::mt19937_64 rng(opts.seed + 2000 + static_cast<std::uint64_t>(dim) * 500 + static_cast<std::uint64_t>(i));
      PeriodicSet built = random_catalog_build(rng, dim);
      if (classify_pair(built, packing).status != PairStatus::SpectralAndTiling) continue;
      if (!rasterized_tiling_check(built, opts.work_cap).tiles) continue;
      Recognition rec = recognize(built, packing);
      if (rec.kind == Recognition::Kind::NotCatalogForm) continue;
      if (!same_point_set(rebuild(rec), built)) continue;
      ++built_ok;
    }
  }
  int mutated_ok = 0;
  const int mutations = 100;
  for (int i = 0; i < mutations; ++i) {
    std::mt19937_64 rng(opts.seed + 2900 + static_cast<std::uint64_t>(i));
    PeriodicSet mutant = rigid_mutation(rng, Rational(1, 7));
    PairVerdict verdict = classify_pair(mutant, packing);
    if (verdict.status != PairStatus::NotPacking || !verdict.witness) continue;
    if (!witness_is_valid(mutant, *verdict.witness)) continue;
    ++mutated_ok;
  }
  result.seconds = seconds_since(start);
  result.passed = built_ok == 3 * per_dim && mutated_ok == mutations;
  result.detail = count_detail(built_ok, 3 * per_dim) + " round trips, " +
                  count_detail(mutated_ok, mutations) + " forced violations";
  return result;
}

CriterionResult criterion_zeroset_consistency(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"3-zeroset-consistency", false, "", 0.0};
  int good = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    std::mt19937_64 rng(opts.seed + 3000 + static_cast<std::uint64_t>(i));
    const int d = rand_int(rng, 1, 3);
    std::vector<Rational> entries(static_cast<std::size_t>(d));
    for (auto& q : entries) q = Rational(rand_int(rng, -18, 18), rand_int(rng, 1, 6));
    RatVec z(std::move(entries));
    double modulus = std::abs(eval_cube_transform(z));
    bool member = in_zero_set(z);
    bool consistent = member == (modulus < 1e-9);
    // Guard band: members evaluate to an exact zero, everything else stays
    // well above the threshold at these denominators.
    bool guarded = member ? modulus == 0.0 : modulus > 1e-6;
    if (consistent && guarded) ++good;
  }
  double half_modulus = std::abs(eval_cube_transform(RatVec({Rational(1, 2)})));
  bool half_ok = std::abs(half_modulus - 2.0 / std::numbers::pi) < 1e-12;
  result.seconds = seconds_since(start);
  result.passed = good == total && half_ok;
  result.detail = count_detail(good, total) + std::string(half_ok ? ", half-point exact" : ", half-point off");
  return result;
}

CriterionResult criterion_dim10_performance(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"4-dim10-performance", false, "", 0.0};
  const int d = 10;
  std::vector<Rational> diag(static_cast<std::size_t>(d), Rational(2));
  std::vector<RatVec> offsets;
  offsets.reserve(1u << d);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<Rational> e(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? 1 : 0;
    offsets.push_back(RatVec(std::move(e)));
  }
  PeriodicSet ps = PeriodicSet::create(RatMat::diagonal(std::move(diag)), std::move(offsets));
  PairVerdict verdict = classify_pair(ps, PackingOptions{opts.work_cap});
  result.seconds = seconds_since(start);
  result.passed = verdict.status == PairStatus::SpectralAndTiling && verdict.density == 1 &&
                  ps.offsets().size() == 1024 && result.seconds < 10.0;
  std::ostringstream detail;
  detail << to_string(verdict.status) << " with " << ps.offsets().size() << " offsets in "
         << result.seconds << "s";
  result.detail = detail.str();
  return result;
}

CriterionResult criterion_measure_symmetry(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"5-measure-symmetry", false, "", 0.0};
  int good = 0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    std::mt19937_64 rng(opts.seed + 5000 + static_cast<std::uint64_t>(i));
    MeasurePair pair = random_measure_pair(rng, 32);
    Measure mu_r = reflect_measure(pair.mu);
    Measure nu_r = reflect_measure(pair.nu);
    bool v = is_spectral_pair_measures(pair.mu, pair.nu);
    bool consistent = is_spectral_pair_measures(nu_r, pair.mu) == v &&
                      is_spectral_pair_measures(mu_r, nu_r) == v &&
                      is_spectral_pair_measures(pair.nu, mu_r) == v &&
                      is_spectral_pair_measures(pair.nu, pair.mu) == v;
    if (consistent) ++good;
  }
  result.seconds = seconds_since(start);
  result.passed = good == total;
  result.detail = count_detail(good, total) + " symmetric verdicts";
  return result;
}

CriterionResult criterion_atom_law(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"6-atom-law", false, "", 0.0};
  int detected = 0;
  int exact = 0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    std::mt19937_64 rng(opts.seed + 6000 + static_cast<std::uint64_t>(i));
    MeasurePair pair = random_measure_pair(rng, 32);
    if (!is_spectral_pair_measures(pair.mu, pair.nu)) continue;
    ++detected;
    Rational expected = Rational(1) / pair.mu.total_mass();
    bool all_equal = true;
    for (std::int64_t xi : pair.nu.support()) {
      if (pair.nu.weight(xi) != expected) all_equal = false;
    }
    if (all_equal) ++exact;
  }
  result.seconds = seconds_since(start);
  result.passed = detected == exact && detected >= 40;
  result.detail = count_detail(exact, detected) + " detected pairs with exact atoms";
  return result;
}

CriterionResult criterion_uncertainty(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"7-uncertainty", false, "", 0.0};
  const int pool_size = 16;
  std::vector<MeasurePair> pool;
  for (int i = 0; i < pool_size; ++i) {
    std::mt19937_64 rng(opts.seed + 7000 + static_cast<std::uint64_t>(i));
    pool.push_back(random_spectral_measure_pair(rng, 64));
  }
  int held = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(opts.seed + 8000 + static_cast<std::uint64_t>(i));
    const MeasurePair& pair = pool[static_cast<std::size_t>(i % pool_size)];
    const auto& g = pair.mu.group();
    std::vector<Cplx> f(static_cast<std::size_t>(g.order()));
    bool nonzero = false;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::int64_t x : pair.mu.support()) {
      f[static_cast<std::size_t>(x)] = Cplx(unit(rng), unit(rng));
      if (std::abs(f[static_cast<std::size_t>(x)]) > 0) nonzero = true;
    }
    if (!nonzero) f[static_cast<std::size_t>(pair.mu.support().front())] = 1.0;
    std::vector<std::int64_t> a_set, b_set;
    for (std::int64_t x = 0; x < g.order(); ++x) {
      if (rand_int(rng, 0, 1) == 0) a_set.push_back(x);
      if (rand_int(rng, 0, 1) == 0) b_set.push_back(x);
    }
    UncertaintyReport report = uncertainty_report(pair.mu, pair.nu, f, a_set, b_set);
    if (report.holds) ++held;
  }

  // Equality case on the two-element group: full concentration both sides.
  FiniteGroup z2({2});
  std::vector<std::int64_t> all = {0, 1};
  Measure mu = Measure::counting_on(z2, all);
  Measure nu = Measure::counting_on(z2, all, Rational(1, 2));
  std::vector<Cplx> delta0 = {Cplx(1.0, 0.0), Cplx(0.0, 0.0)};
  std::vector<std::int64_t> a_only = {0};
  UncertaintyReport eq = uncertainty_report(mu, nu, delta0, a_only, all);
  bool equality_exact = eq.epsilon == 0.0 && eq.delta == 0.0 && eq.lhs == 1.0 && eq.rhs == 1.0 && eq.holds;

  result.seconds = seconds_since(start);
  result.passed = held == trials && equality_exact;
  result.detail = count_detail(held, trials) + std::string(equality_exact ? ", equality case exact" : ", equality case off");
  return result;
}

CriterionResult criterion_tiling_bridge(const SuiteOptions& opts) {
  auto start = Clock::now();
  CriterionResult result{"8-tiling-bridge", false, "", 0.0};
  long checked = 0;
  long mismatches = 0;
  long tilings = 0;
  long swap_consistent = 0;

  auto check_pair = [&](const FiniteGroup& g, unsigned omega_mask, unsigned l_mask) {
    const int n = static_cast<int>(g.order());
    std::vector<std::int64_t> omega, l_set;
    for (int x = 0; x < n; ++x) {
      if ((omega_mask >> x) & 1u) omega.push_back(x);
      if ((l_mask >> x) & 1u) l_set.push_back(x);
    }
    Measure mu = Measure::counting_on(g, omega);
    Measure nu = Measure::counting_on(g, l_set);
    bool tiling = is_tiling_pair_measures(mu, nu);
    // Independent oracle: direct cover multiset count.
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (std::int64_t w : omega) {
      for (std::int64_t v : l_set) ++hits[static_cast<std::size_t>(g.add(w, v))];
    }
    bool covered_once = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    ++checked;
    if (tiling != covered_once) {
      ++mismatches;
      return;
    }
    if (tiling && omega.size() * l_set.size() == static_cast<std::size_t>(n)) {
      ++tilings;
      Measure candidate = Measure::counting_on(g, l_set, Rational(1, static_cast<long>(omega.size())));
      if (is_spectral_pair_measures(mu, candidate) == is_spectral_pair_measures(candidate, mu)) {
        ++swap_consistent;
      }
    }
  };

  for (int n = 1; n <= 8; ++n) {
    FiniteGroup g({n});
    const unsigned full = 1u << n;
    for (unsigned omega_mask = 1; omega_mask < full; ++omega_mask) {
      for (unsigned l_mask = 1; l_mask < full; ++l_mask) check_pair(g, omega_mask, l_mask);
    }
  }
  for (int n = 9; n <= 12; ++n) {
    FiniteGroup g({n});
    for (int i = 0; i < 300; ++i) {
      std::mt19937_64 rng(opts.seed + 9000 + static_cast<std::uint64_t>(n) * 400 + static_cast<std::uint64_t>(i));
      const unsigned full = 1u << n;
      unsigned omega_mask = static_cast<unsigned>(rng() % (full - 1)) + 1;
      unsigned l_mask = static_cast<unsigned>(rng() % (full - 1)) + 1;
      check_pair(g, omega_mask, l_mask);
    }
  }

  result.seconds = seconds_since(start);
  result.passed = mismatches == 0 && tilings == swap_consistent && tilings > 0;
  std::ostringstream detail;
  detail << checked << " pairs, " << mismatches << " oracle mismatches, " << tilings
         << " tilings all swap-consistent";
  result.detail = detail.str();
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_periodic_oracle_agreement(opts));
  results.push_back(criterion_catalog_roundtrip(opts));
  results.push_back(criterion_zeroset_consistency(opts));
  results.push_back(criterion_dim10_performance(opts));
  results.push_back(criterion_measure_symmetry(opts));
  results.push_back(criterion_atom_law(opts));
  results.push_back(criterion_uncertainty(opts));
  results.push_back(criterion_tiling_bridge(opts));
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

}  // namespace spectile
