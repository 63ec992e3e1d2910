#include "spectile/oracle.hpp"

#include "spectile/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <vector>

namespace spectile {

namespace {

Int global_denominator_lcm(const PeriodicSet& ps) {
  Int n = 1;
  for (const auto& row : ps.lattice().rows()) {
    for (const auto& q : row) n = lcm_int(n, denominator_of(q));
  }
  for (const auto& off : ps.offsets()) {
    for (const auto& q : off.entries()) n = lcm_int(n, denominator_of(q));
  }
  return n;
}

}  // namespace

TilingCheckResult rasterized_tiling_check(const PeriodicSet& ps, std::uint64_t cell_budget,
                                          std::uint64_t q_multiplier) {
  if (q_multiplier < 1) throw InvalidFormError("grid multiplier must be positive");
  const int d = ps.dim();
  const Int q = global_denominator_lcm(ps) * Int(q_multiplier);

  // qR is integral; the quotient group Z^d / (qR) Z^d is finite with
  // |det(qR)| elements.
  IntMat qr(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) qr.at(i, j) = numerator_of(Rational(q) * ps.lattice().at(i, j));
  }
  Int order = abs(qr.det());
  if (order == 0) throw SingularLatticeError("lattice generator is singular");

  Int q_pow = 1;
  for (int i = 0; i < d; ++i) q_pow *= q;
  if (q_pow * order > Int(cell_budget)) {
    throw BudgetExceededError("quotient grid exceeds the cell budget");
  }

  SmithForm snf = smith_normal_form(qr);
  std::vector<std::uint64_t> diag(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) diag[static_cast<std::size_t>(i)] = snf.S.at(i, i).convert_to<std::uint64_t>();
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(d), 1);
  for (int i = d - 2; i >= 0; --i) {
    stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i + 1)] * diag[static_cast<std::size_t>(i + 1)];
  }
  const std::uint64_t order64 = order.convert_to<std::uint64_t>();

  auto index_of = [&](const std::vector<Int>& u) {
    std::uint64_t idx = 0;
    for (int i = 0; i < d; ++i) {
      const std::uint64_t s = diag[static_cast<std::size_t>(i)];
      Int c = u[static_cast<std::size_t>(i)] % Int(s);
      if (c < 0) c += Int(s);
      idx += c.convert_to<std::uint64_t>() * stride[static_cast<std::size_t>(i)];
    }
    return idx;
  };

  std::vector<std::uint32_t> counts(order64, 0);
  const Int q_int = q;
  for (const auto& off : ps.offsets()) {
    // Base cell of the cube at this offset, in units of 1/q.
    std::vector<Int> base(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) base[static_cast<std::size_t>(j)] = numerator_of(Rational(q_int) * off[j]);
    std::vector<Int> u = snf.U.apply(base);

    std::vector<Int> cell(static_cast<std::size_t>(d));
    for (;;) {
      ++counts[index_of(u)];
      int pos = 0;
      while (pos < d) {
        cell[static_cast<std::size_t>(pos)] += 1;
        for (int i = 0; i < d; ++i) u[static_cast<std::size_t>(i)] += snf.U.at(i, pos);
        if (cell[static_cast<std::size_t>(pos)] < q_int) break;
        for (int i = 0; i < d; ++i) u[static_cast<std::size_t>(i)] -= q_int * snf.U.at(i, pos);
        cell[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
  }

  TilingCheckResult result;
  result.grid.q = q.convert_to<std::uint64_t>();
  result.grid.group_order = order64;
  result.grid.smith_diagonal = diag;
  bool tiles = true;
  std::uint64_t covered = 0;
  for (std::uint64_t i = 0; i < order64; ++i) {
    if (counts[i] == 0) {
      tiles = false;
      continue;
    }
    ++covered;
    if (counts[i] != 1) tiles = false;
    result.grid.multiplicity.emplace(i, counts[i]);
  }
  result.tiles = tiles && covered == order64;
  return result;
}

namespace {

// Fixed 12-color palette, cycled by offset index.
constexpr std::array<const char*, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#8cd17d",
};

std::string format_coord(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", to_double(q));
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::string emit_tiling_svg(const PeriodicSet& ps, int window) {
  if (ps.dim() != 2) throw UnsupportedDimensionError("tiling pictures are two-dimensional");
  if (window < 0) throw InvalidFormError("window must be nonnegative");

  // Window box in lattice coordinates; view box covers all drawn squares.
  Rational min_x, max_x, min_y, max_y;
  bool first = true;
  struct Square {
    RatVec corner;
    std::size_t color;
    Square(RatVec c, std::size_t col) : corner(std::move(c)), color(col) {}
  };
  std::vector<Square> squares;

  for (Int k1 = -window; k1 <= window; ++k1) {
    for (Int k2 = -window; k2 <= window; ++k2) {
      std::vector<Rational> shift(2);
      shift[0] = ps.lattice().at(0, 0) * Rational(k1) + ps.lattice().at(0, 1) * Rational(k2);
      shift[1] = ps.lattice().at(1, 0) * Rational(k1) + ps.lattice().at(1, 1) * Rational(k2);
      RatVec s(std::move(shift));
      for (std::size_t idx = 0; idx < ps.offsets().size(); ++idx) {
        RatVec corner = ps.offsets()[idx] + s;
        if (first || corner[0] < min_x) min_x = corner[0];
        if (first || corner[0] > max_x) max_x = corner[0];
        if (first || corner[1] < min_y) min_y = corner[1];
        if (first || corner[1] > max_y) max_y = corner[1];
        first = false;
        squares.emplace_back(std::move(corner), idx % kPalette.size());
      }
    }
  }
  std::sort(squares.begin(), squares.end(), [](const Square& a, const Square& b) {
    if (a.corner != b.corner) return a.corner < b.corner;
    return a.color < b.color;
  });

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  svg += format_coord(min_x) + " " + format_coord(min_y) + " ";
  svg += format_coord(max_x - min_x + 1) + " " + format_coord(max_y - min_y + 1) + "\">\n";
  for (const auto& sq : squares) {
    svg += "  <rect x=\"" + format_coord(sq.corner[0]) + "\" y=\"" + format_coord(sq.corner[1]);
    svg += "\" width=\"1\" height=\"1\" fill=\"";
    svg += kPalette[sq.color];
    svg += "\" stroke=\"#000000\" stroke-width=\"0.02\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string multiplicity_histogram_json(const QuotientGrid& grid) {
  std::string out = "{";
  bool first = true;
  for (const auto& [element, count] : grid.multiplicity) {
    if (!first) out += ",";
    first = false;
    out += "\"" + std::to_string(element) + "\":" + std::to_string(count);
  }
  out += "}";
  return out;
}

}  // namespace spectile
