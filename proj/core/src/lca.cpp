#include "spectile/lca.hpp"

#include "spectile/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace spectile {

FiniteGroup::FiniteGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw InvalidFormError("group needs at least one cyclic factor");
  for (int n : orders_) {
    if (n < 1) throw InvalidFormError("cyclic orders must be positive");
    order_ *= n;
    exponent_ = std::lcm(exponent_, static_cast<std::int64_t>(n));
    if (exponent_ > kMaxGroupExponent) {
      throw InvalidFormError("group exponent exceeds the supported cap");
    }
  }
}

std::vector<int> FiniteGroup::decode(std::int64_t element) const {
  std::vector<int> coords(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    coords[i] = static_cast<int>(element % orders_[i]);
    element /= orders_[i];
  }
  return coords;
}

std::int64_t FiniteGroup::encode(std::span<const int> coords) const {
  if (coords.size() != orders_.size()) throw GroupMismatchError("coordinate arity differs from rank");
  std::int64_t element = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int c = coords[i] % orders_[i];
    if (c < 0) c += orders_[i];
    element = element * orders_[i] + c;
  }
  return element;
}

std::int64_t FiniteGroup::add(std::int64_t a, std::int64_t b) const {
  std::vector<int> ca = decode(a);
  std::vector<int> cb = decode(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % orders_[i];
  return encode(ca);
}

std::int64_t FiniteGroup::negate(std::int64_t a) const {
  std::vector<int> c = decode(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (orders_[i] - c[i]) % orders_[i];
  return encode(c);
}

namespace {

// All pairings of a group, tabulated as exact multiples of 1/exponent turns.
// Small (order <= a few thousand entries) and cheap to rebuild per call.
struct CharTable {
  std::int64_t order = 0;
  std::vector<int> phase;    // phase[x * order + xi] in [0, exponent)
  std::vector<Cplx> roots;   // roots[k] = exp(2 pi i k / exponent)

  Cplx at(std::int64_t x, std::int64_t xi) const {
    return roots[static_cast<std::size_t>(phase[static_cast<std::size_t>(x * order + xi)])];
  }
};

CharTable build_char_table(const FiniteGroup& g) {
  CharTable table;
  table.order = g.order();
  const int n = static_cast<int>(g.exponent());
  table.roots.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    table.roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
  }
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(g.order()));
  for (std::int64_t x = 0; x < g.order(); ++x) coords[static_cast<std::size_t>(x)] = g.decode(x);
  std::vector<int> scale(g.cyclic_orders().size());
  for (std::size_t j = 0; j < scale.size(); ++j) scale[j] = n / g.cyclic_orders()[j];
  table.phase.resize(static_cast<std::size_t>(g.order() * g.order()));
  for (std::int64_t x = 0; x < g.order(); ++x) {
    for (std::int64_t xi = 0; xi < g.order(); ++xi) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < scale.size(); ++j) {
        acc += static_cast<std::int64_t>(coords[static_cast<std::size_t>(x)][j]) *
               coords[static_cast<std::size_t>(xi)][j] * scale[j];
      }
      table.phase[static_cast<std::size_t>(x * g.order() + xi)] = static_cast<int>(acc % n);
    }
  }
  return table;
}

}  // namespace

Cplx pairing(const FiniteGroup& g, std::int64_t x, std::int64_t xi) {
  std::vector<int> cx = g.decode(x);
  std::vector<int> cxi = g.decode(xi);
  // Exact phase as a rational number of turns, then one complex exponential.
  Rational turns = 0;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    turns += Rational(static_cast<long>(cx[i]) * cxi[i], g.cyclic_orders()[i]);
  }
  turns = frac_part(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * to_double(turns));
}

Measure::Measure(FiniteGroup group, std::vector<Rational> weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
  if (static_cast<std::int64_t>(weights_.size()) != group_.order()) {
    throw GroupMismatchError("weight table size differs from group order");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) throw InvalidFormError("measure weights must be nonnegative");
    if (weights_[i] > 0) support_.push_back(static_cast<std::int64_t>(i));
  }
}

Measure Measure::counting_on(const FiniteGroup& group, std::span<const std::int64_t> support,
                             const Rational& weight) {
  std::vector<Rational> w(static_cast<std::size_t>(group.order()));
  for (std::int64_t x : support) {
    if (x < 0 || x >= group.order()) throw GroupMismatchError("support element outside the group");
    w[static_cast<std::size_t>(x)] = weight;
  }
  return Measure(group, std::move(w));
}

Rational Measure::total_mass() const {
  Rational total = 0;
  for (std::int64_t x : support_) total += weights_[static_cast<std::size_t>(x)];
  return total;
}

Rational Measure::mass_of(std::span<const std::int64_t> subset) const {
  Rational total = 0;
  for (std::int64_t x : subset) {
    if (x < 0 || x >= group_.order()) throw GroupMismatchError("subset element outside the group");
    total += weights_[static_cast<std::size_t>(x)];
  }
  return total;
}

Measure reflect_measure(const Measure& mu) {
  const auto& g = mu.group();
  std::vector<Rational> w(static_cast<std::size_t>(g.order()));
  for (std::int64_t x = 0; x < g.order(); ++x) {
    w[static_cast<std::size_t>(g.negate(x))] = mu.weight(x);
  }
  return Measure(g, std::move(w));
}

std::vector<Cplx> fourier_transform(const Measure& mu, std::span<const Cplx> f) {
  const auto& g = mu.group();
  if (static_cast<std::int64_t>(f.size()) != g.order()) {
    throw GroupMismatchError("function table size differs from group order");
  }
  CharTable chars = build_char_table(g);
  std::vector<Cplx> out(static_cast<std::size_t>(g.order()));
  for (std::int64_t xi = 0; xi < g.order(); ++xi) {
    Cplx acc = 0;
    for (std::int64_t x : mu.support()) {
      acc += f[static_cast<std::size_t>(x)] * std::conj(chars.at(x, xi)) * to_double(mu.weight(x));
    }
    out[static_cast<std::size_t>(xi)] = acc;
  }
  return out;
}

std::vector<Cplx> inverse_fourier(const Measure& nu, std::span<const Cplx> g_fn) {
  const auto& g = nu.group();
  if (static_cast<std::int64_t>(g_fn.size()) != g.order()) {
    throw GroupMismatchError("function table size differs from group order");
  }
  CharTable chars = build_char_table(g);
  std::vector<Cplx> out(static_cast<std::size_t>(g.order()));
  for (std::int64_t x = 0; x < g.order(); ++x) {
    Cplx acc = 0;
    for (std::int64_t xi : nu.support()) {
      acc += g_fn[static_cast<std::size_t>(xi)] * chars.at(x, xi) * to_double(nu.weight(xi));
    }
    out[static_cast<std::size_t>(x)] = acc;
  }
  return out;
}

bool is_spectral_pair_measures(const Measure& mu, const Measure& nu, double tol) {
  if (mu.group() != nu.group()) throw GroupMismatchError("measures live on different groups");
  if (mu.support().size() != nu.support().size()) return false;
  if (mu.support().empty()) return false;
  const auto& g = mu.group();
  CharTable chars = build_char_table(g);
  // Entry (x, x') of B* D_nu B must match the diagonal of mu.
  for (std::int64_t x : mu.support()) {
    for (std::int64_t y : mu.support()) {
      Cplx acc = 0;
      for (std::int64_t xi : nu.support()) {
        acc += chars.at(x, xi) * std::conj(chars.at(y, xi)) * to_double(nu.weight(xi));
      }
      acc *= to_double(mu.weight(x)) * to_double(mu.weight(y));
      Cplx expected = (x == y) ? Cplx(to_double(mu.weight(x)), 0.0) : Cplx(0.0, 0.0);
      if (std::abs(acc - expected) > tol) return false;
    }
  }
  return true;
}

bool is_tiling_pair_measures(const Measure& mu, const Measure& nu) {
  if (mu.group() != nu.group()) throw GroupMismatchError("measures live on different groups");
  const auto& g = mu.group();
  // (mu * nu)(x) == 1 for every x, exactly.
  for (std::int64_t x = 0; x < g.order(); ++x) {
    Rational acc = 0;
    for (std::int64_t y : mu.support()) {
      std::int64_t rem = g.add(x, g.negate(y));
      acc += mu.weight(y) * nu.weight(rem);
    }
    if (acc != 1) return false;
  }
  return true;
}

std::vector<Cplx> TranslationUnitary::multipliers(const FiniteGroup& g) const {
  std::vector<Cplx> out(static_cast<std::size_t>(g.order()));
  for (std::int64_t xi = 0; xi < g.order(); ++xi) {
    out[static_cast<std::size_t>(xi)] = pairing(g, t, xi);
  }
  return out;
}

std::vector<Cplx> translate_function(const Measure& mu, const Measure& nu, std::int64_t t,
                                     std::span<const Cplx> f) {
  std::vector<Cplx> hat = fourier_transform(mu, f);
  std::vector<Cplx> multipliers = TranslationUnitary{t}.multipliers(mu.group());
  for (std::size_t i = 0; i < hat.size(); ++i) hat[i] *= multipliers[i];
  return inverse_fourier(nu, hat);
}

namespace {

double norm_under(const Measure& m, std::span<const Cplx> f) {
  double acc = 0;
  for (std::int64_t x : m.support()) {
    acc += std::norm(f[static_cast<std::size_t>(x)]) * to_double(m.weight(x));
  }
  return std::sqrt(acc);
}

double norm_outside(const Measure& m, std::span<const Cplx> f, std::span<const std::int64_t> keep) {
  std::vector<char> inside(static_cast<std::size_t>(m.group().order()), 0);
  for (std::int64_t x : keep) inside[static_cast<std::size_t>(x)] = 1;
  double acc = 0;
  for (std::int64_t x : m.support()) {
    if (inside[static_cast<std::size_t>(x)]) continue;
    acc += std::norm(f[static_cast<std::size_t>(x)]) * to_double(m.weight(x));
  }
  return std::sqrt(acc);
}

}  // namespace

UncertaintyReport uncertainty_report(const Measure& mu, const Measure& nu,
                                     std::span<const Cplx> f, std::span<const std::int64_t> A,
                                     std::span<const std::int64_t> B) {
  if (!is_spectral_pair_measures(mu, nu)) {
    throw NotSpectralError("uncertainty bound requires a spectral pair");
  }
  const double f_norm = norm_under(mu, f);
  if (f_norm == 0.0) throw ZeroFunctionError("the function vanishes in L^2(mu)");

  UncertaintyReport report;
  report.A.assign(A.begin(), A.end());
  report.B.assign(B.begin(), B.end());
  // Tightest admissible concentration defects: the attained ratios.
  report.epsilon = norm_outside(mu, f, A) / f_norm;
  std::vector<Cplx> hat = fourier_transform(mu, f);
  const double hat_norm = norm_under(nu, hat);
  report.delta = hat_norm == 0.0 ? 0.0 : norm_outside(nu, hat, B) / hat_norm;
  const double base = std::max(0.0, 1.0 - report.epsilon - report.delta);
  report.lhs = base * base;
  report.rhs = to_double(mu.mass_of(A)) * to_double(nu.mass_of(B));
  report.holds = report.lhs <= report.rhs + kUncertaintySlack;
  return report;
}

}  // namespace spectile
