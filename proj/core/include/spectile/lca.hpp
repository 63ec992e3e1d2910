#pragma once

#include "spectile/numeric.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace spectile {

using Cplx = std::complex<double>;

// Product of cyclic groups Z_{n_1} x ... x Z_{n_k}, identified with its dual
// through the standard bicharacter. Elements are flat mixed-radix indices.
// The exponent (lcm of the orders) is capped so that floating-point
// character sums stay well separated from zero.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::int64_t order() const { return order_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  std::int64_t exponent() const { return exponent_; }

  std::vector<int> decode(std::int64_t element) const;
  std::int64_t encode(std::span<const int> coords) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t negate(std::int64_t a) const;  // the inversion map, an involution

  bool operator==(const FiniteGroup&) const = default;

 private:
  std::vector<int> orders_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

inline constexpr std::int64_t kMaxGroupExponent = 64;

// <x, xi> = exp(2 pi i sum_j x_j xi_j / n_j), modulus 1.
Cplx pairing(const FiniteGroup& g, std::int64_t x, std::int64_t xi);

// Nonnegative rational weights on a finite group.
class Measure {
 public:
  Measure(FiniteGroup group, std::vector<Rational> weights);
  static Measure counting_on(const FiniteGroup& group, std::span<const std::int64_t> support,
                             const Rational& weight = Rational(1));

  const FiniteGroup& group() const { return group_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::int64_t x) const { return weights_[static_cast<std::size_t>(x)]; }
  const std::vector<std::int64_t>& support() const { return support_; }
  Rational total_mass() const;
  Rational mass_of(std::span<const std::int64_t> subset) const;

  bool operator==(const Measure&) const = default;

 private:
  FiniteGroup group_;
  std::vector<Rational> weights_;
  std::vector<std::int64_t> support_;
};

// Weights composed with negation; an involution.
Measure reflect_measure(const Measure& mu);

// (Ff)(xi) = sum over supp mu of f(x) conj(<x, xi>) mu({x}); f indexed by
// group element, result indexed over the dual.
std::vector<Cplx> fourier_transform(const Measure& mu, std::span<const Cplx> f);

// Inversion sum: x -> sum_xi g(xi) <x, xi> nu({xi}).
std::vector<Cplx> inverse_fourier(const Measure& nu, std::span<const Cplx> g);

inline constexpr double kSpectralTolerance = 1e-9;

// True iff the mu-weighted transform is an isometry of L^2(mu) onto L^2(nu):
// checked as B* D_nu B = D_mu on the support of mu plus equal support sizes.
// Equal cardinality is the finite-rank stand-in for the image being dense;
// the alternative reading (full column rank onto L^2(nu)) coincides with it
// once the isometry identity holds.
bool is_spectral_pair_measures(const Measure& mu, const Measure& nu,
                               double tol = kSpectralTolerance);

// True iff mu * nu is counting measure (the Haar normalization here).
bool is_tiling_pair_measures(const Measure& mu, const Measure& nu);

// Unitary translation action on the transform side: diagonal multiplication
// by the character of t.
struct TranslationUnitary {
  std::int64_t t = 0;

  std::vector<Cplx> multipliers(const FiniteGroup& g) const;
};

// U(t) f computed through the transform pair; equals x -> f(x + t) when the
// support of mu is translation closed.
std::vector<Cplx> translate_function(const Measure& mu, const Measure& nu, std::int64_t t,
                                     std::span<const Cplx> f);

struct UncertaintyReport {
  double epsilon = 0.0;  // attained concentration defect on A
  double delta = 0.0;    // attained band defect on B
  std::vector<std::int64_t> A;
  std::vector<std::int64_t> B;
  double lhs = 0.0;  // max(0, 1 - epsilon - delta)^2
  double rhs = 0.0;  // mu(A) nu(B)
  bool holds = false;
};

inline constexpr double kUncertaintySlack = 1e-12;

UncertaintyReport uncertainty_report(const Measure& mu, const Measure& nu,
                                     std::span<const Cplx> f, std::span<const std::int64_t> A,
                                     std::span<const std::int64_t> B);

}  // namespace spectile
