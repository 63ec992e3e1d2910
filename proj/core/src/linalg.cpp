#include "spectile/linalg.hpp"

#include "spectile/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace spectile {

namespace {

void check_dim(int d) {
  if (d < 1 || d > kMaxDim) {
    throw DimensionMismatchError("dimension " + std::to_string(d) + " outside [1, " +
                                 std::to_string(kMaxDim) + "]");
  }
}

// Exact elimination determinant; used for both rational and integer matrices.
Rational elimination_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  return det;
}

}  // namespace

RatVec::RatVec(std::vector<Rational> entries) : entries_(std::move(entries)) {
  check_dim(static_cast<int>(entries_.size()));
}

RatVec RatVec::zero(int dim) {
  check_dim(dim);
  return RatVec(std::vector<Rational>(static_cast<std::size_t>(dim)));
}

bool RatVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool RatVec::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return is_integer(q); });
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("vector dimensions differ");
  std::vector<Rational> out(a.entries_);
  for (int i = 0; i < b.dim(); ++i) out[static_cast<std::size_t>(i)] += b[i];
  return RatVec(std::move(out));
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("vector dimensions differ");
  std::vector<Rational> out(a.entries_);
  for (int i = 0; i < b.dim(); ++i) out[static_cast<std::size_t>(i)] -= b[i];
  return RatVec(std::move(out));
}

RatVec operator-(const RatVec& a) {
  std::vector<Rational> out(a.entries_);
  for (auto& q : out) q = -q;
  return RatVec(std::move(out));
}

std::strong_ordering RatVec::operator<=>(const RatVec& other) const {
  const int n = std::min(dim(), other.dim());
  for (int i = 0; i < n; ++i) {
    const auto& x = (*this)[i];
    const auto& y = other[i];
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return dim() <=> other.dim();
}

RatMat::RatMat(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  check_dim(static_cast<int>(rows_.size()));
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) throw DimensionMismatchError("matrix is not square");
  }
}

RatMat RatMat::identity(int dim) {
  check_dim(dim);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dim),
                                          std::vector<Rational>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return RatMat(std::move(rows));
}

RatMat RatMat::diagonal(std::vector<Rational> diag) {
  const int n = static_cast<int>(diag.size());
  check_dim(n);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = std::move(diag[static_cast<std::size_t>(i)]);
  return RatMat(std::move(rows));
}

RatVec RatMat::column(int j) const {
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row[static_cast<std::size_t>(j)]);
  return RatVec(std::move(out));
}

RatVec RatMat::apply(const RatVec& v) const {
  if (v.dim() != dim()) throw DimensionMismatchError("matrix/vector dimensions differ");
  std::vector<Rational> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) acc += rows_[i][j] * v[static_cast<int>(j)];
    out[i] = std::move(acc);
  }
  return RatVec(std::move(out));
}

RatMat RatMat::multiply(const RatMat& other) const {
  if (other.dim() != dim()) throw DimensionMismatchError("matrix dimensions differ");
  const std::size_t n = rows_.size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += rows_[i][k] * other.rows_[k][j];
      out[i][j] = std::move(acc);
    }
  }
  return RatMat(std::move(out));
}

Rational RatMat::det() const { return elimination_det(rows_); }

RatMat RatMat::inverse() const {
  const std::size_t n = rows_.size();
  auto a = rows_;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularLatticeError("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational factor = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[col][j];
        inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return RatMat(std::move(inv));
}

bool RatMat::is_integral() const {
  for (int i = 0; i < dim(); ++i) {
    if (!row_is_integral(i)) return false;
  }
  return true;
}

bool RatMat::row_is_integral(int i) const {
  const auto& row = rows_[static_cast<std::size_t>(i)];
  return std::all_of(row.begin(), row.end(), [](const Rational& q) { return is_integer(q); });
}

IntMat::IntMat(int rows, int cols) : cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix shape");
  rows_.assign(static_cast<std::size_t>(rows), std::vector<Int>(static_cast<std::size_t>(cols)));
}

IntMat::IntMat(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : static_cast<int>(rows_.front().size());
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatchError("ragged integer matrix");
  }
}

IntMat IntMat::identity(int dim) {
  IntMat m(dim, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Int> IntMat::apply(std::span<const Int> v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatchError("matrix/vector dimensions differ");
  std::vector<Int> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols_); ++j) acc += rows_[i][j] * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

IntMat IntMat::multiply(const IntMat& other) const {
  if (cols_ != other.rows()) throw DimensionMismatchError("matrix dimensions differ");
  IntMat out(rows(), other.cols());
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < other.cols(); ++j) {
      Int acc = 0;
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * other.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

Int IntMat::det() const {
  if (rows() != cols_) throw DimensionMismatchError("determinant of non-square matrix");
  if (rows() == 0) return Int(1);
  std::vector<std::vector<Rational>> a(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    a[i].assign(rows_[i].begin(), rows_[i].end());
  }
  Rational d = elimination_det(std::move(a));
  return numerator_of(d);  // integer matrices have integer determinants
}

namespace {

struct SmithWorkspace {
  IntMat S;
  IntMat U;
  IntMat V;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < S.cols(); ++j) std::swap(S.at(a, j), S.at(b, j));
    for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < S.rows(); ++i) std::swap(S.at(i, a), S.at(i, b));
    for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  // row[a] += c * row[b]
  void add_row(int a, int b, const Int& c) {
    for (int j = 0; j < S.cols(); ++j) S.at(a, j) += c * S.at(b, j);
    for (int j = 0; j < U.cols(); ++j) U.at(a, j) += c * U.at(b, j);
  }
  // col[a] += c * col[b]
  void add_col(int a, int b, const Int& c) {
    for (int i = 0; i < S.rows(); ++i) S.at(i, a) += c * S.at(i, b);
    for (int i = 0; i < V.rows(); ++i) V.at(i, a) += c * V.at(i, b);
  }
  void negate_row(int a) {
    for (int j = 0; j < S.cols(); ++j) S.at(a, j) = -S.at(a, j);
    for (int j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& M) {
  const int m = M.rows();
  const int n = M.cols();
  SmithWorkspace w{M, IntMat::identity(m), IntMat::identity(n)};

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i) {
        for (int j = t; j < n; ++j) {
          const Int& v = w.S.at(i, j);
          if (v == 0) continue;
          if (pi < 0 || abs(v) < abs(w.S.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        pi = -1;
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool reduced = true;
      for (int i = t + 1; i < m; ++i) {
        if (w.S.at(i, t) == 0) continue;
        Int q = w.S.at(i, t) / w.S.at(t, t);
        if (q != 0) w.add_row(i, t, -q);
        if (w.S.at(i, t) != 0) reduced = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (w.S.at(t, j) == 0) continue;
        Int q = w.S.at(t, j) / w.S.at(t, t);
        if (q != 0) w.add_col(j, t, -q);
        if (w.S.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;  // remainders became new, smaller pivot candidates

      // Fold in any later entry the pivot does not divide yet.
      bool divides_all = true;
      for (int i = t + 1; i < m && divides_all; ++i) {
        for (int j = t + 1; j < n && divides_all; ++j) {
          if (w.S.at(i, j) % w.S.at(t, t) != 0) {
            w.add_row(t, i, Int(1));
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }
    if (w.S.at(t, t) == 0) break;
    if (w.S.at(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.U), std::move(w.S), std::move(w.V)};
}

bool IntAffineSolution::contains(std::span<const Int> k) const {
  if (empty) return false;
  if (k.size() != point.size()) throw DimensionMismatchError("solution/point dimensions differ");
  std::vector<Int> w(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) w[i] = k[i] - point[i];
  if (basis.empty()) {
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
  }
  const int d = static_cast<int>(point.size());
  const int f = static_cast<int>(basis.size());
  IntMat B(d, f);
  for (int j = 0; j < f; ++j) {
    for (int i = 0; i < d; ++i) B.at(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  SmithForm snf = smith_normal_form(B);
  std::vector<Int> c = snf.U.apply(w);
  const int r = std::min(d, f);
  for (int i = 0; i < d; ++i) {
    if (i < r && snf.S.at(i, i) != 0) {
      if (c[static_cast<std::size_t>(i)] % snf.S.at(i, i) != 0) return false;
    } else {
      if (c[static_cast<std::size_t>(i)] != 0) return false;
    }
  }
  return true;
}

IntAffineSolution solve_integer_affine(const IntMat& A, std::span<const Int> b,
                                       const Int& modulus, std::span<const Int> residue) {
  const int m = A.rows();
  const int d = A.cols();
  if (static_cast<int>(b.size()) != m) throw DimensionMismatchError("rhs size differs from row count");
  if (static_cast<int>(residue.size()) != d) throw DimensionMismatchError("residue size differs from column count");
  if (modulus < 1) throw Error("modulus must be positive");
  for (const Int& r : residue) {
    if (r < 0 || r >= modulus) throw Error("residue entry outside [0, modulus)");
  }

  // Substitute k = residue + modulus * t and solve the plain integer system.
  IntMat scaled(m, d);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) scaled.at(i, j) = A.at(i, j) * modulus;
  }
  std::vector<Int> rhs = A.apply(residue);
  for (int i = 0; i < m; ++i) rhs[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] - rhs[static_cast<std::size_t>(i)];

  SmithForm snf = smith_normal_form(scaled);
  std::vector<Int> c = snf.U.apply(rhs);

  const int diag = std::min(m, d);
  int rank = 0;
  while (rank < diag && snf.S.at(rank, rank) != 0) ++rank;

  std::vector<Int> y(static_cast<std::size_t>(d));
  for (int i = 0; i < m; ++i) {
    if (i < rank) {
      const Int& s = snf.S.at(i, i);
      if (c[static_cast<std::size_t>(i)] % s != 0) return IntAffineSolution{};
      y[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] / s;
    } else if (c[static_cast<std::size_t>(i)] != 0) {
      return IntAffineSolution{};
    }
  }

  std::vector<Int> t0 = snf.V.apply(y);
  IntAffineSolution sol;
  sol.empty = false;
  sol.point.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) sol.point[static_cast<std::size_t>(i)] = residue[static_cast<std::size_t>(i)] + modulus * t0[static_cast<std::size_t>(i)];
  for (int j = rank; j < d; ++j) {
    std::vector<Int> dir(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) dir[static_cast<std::size_t>(i)] = modulus * snf.V.at(i, j);
    sol.basis.push_back(std::move(dir));
  }
  return sol;
}

}  // namespace spectile
