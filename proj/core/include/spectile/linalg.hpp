#pragma once

#include "spectile/numeric.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace spectile {

inline constexpr int kMaxDim = 16;

// Exact rational vector, 1 <= dim <= kMaxDim. Immutable in spirit: every
// operation returns a fresh value, so instances are safe to share across
// threads.
class RatVec {
 public:
  explicit RatVec(std::vector<Rational> entries);
  static RatVec zero(int dim);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_integral() const;

  friend RatVec operator+(const RatVec& a, const RatVec& b);
  friend RatVec operator-(const RatVec& a, const RatVec& b);
  friend RatVec operator-(const RatVec& a);

  bool operator==(const RatVec&) const = default;
  // Lexicographic; used for canonical sorting of offset lists.
  std::strong_ordering operator<=>(const RatVec& other) const;

 private:
  std::vector<Rational> entries_;
};

// Square rational matrix of the same bounded dimension.
class RatMat {
 public:
  explicit RatMat(std::vector<std::vector<Rational>> rows);
  static RatMat identity(int dim);
  static RatMat diagonal(std::vector<Rational> diag);

  int dim() const { return static_cast<int>(rows_.size()); }
  const Rational& at(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  RatVec column(int j) const;
  RatVec apply(const RatVec& v) const;
  RatMat multiply(const RatMat& other) const;

  Rational det() const;
  // Throws SingularLatticeError when det() == 0.
  RatMat inverse() const;

  bool is_integral() const;
  bool row_is_integral(int i) const;

  bool operator==(const RatMat&) const = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// Dense arbitrary-precision integer matrix, possibly rectangular. Only the
// little that the lattice solvers need.
class IntMat {
 public:
  IntMat(int rows, int cols);
  explicit IntMat(std::vector<std::vector<Int>> rows);
  static IntMat identity(int dim);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const Int& at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  Int& at(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  std::vector<Int> apply(std::span<const Int> v) const;
  IntMat multiply(const IntMat& other) const;
  Int det() const;  // square only

  bool operator==(const IntMat&) const = default;

 private:
  std::vector<std::vector<Int>> rows_;
  int cols_ = 0;
};

// U * M * V = S with S diagonal, s_1 | s_2 | ..., s_i >= 0, and U, V
// unimodular.
struct SmithForm {
  IntMat U;
  IntMat S;
  IntMat V;
};

SmithForm smith_normal_form(const IntMat& M);

// Solution set of { k in Z^d : A k = b, k = residue (mod modulus) },
// described exactly: empty, or point + integer combinations of basis.
struct IntAffineSolution {
  bool empty = true;
  std::vector<Int> point;               // one solution
  std::vector<std::vector<Int>> basis;  // sublattice directions (may be empty)

  bool contains(std::span<const Int> k) const;  // brute-force membership helper
};

IntAffineSolution solve_integer_affine(const IntMat& A, std::span<const Int> b,
                                       const Int& modulus, std::span<const Int> residue);

}  // namespace spectile
