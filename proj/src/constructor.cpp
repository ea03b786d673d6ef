#include "equicolor/constructor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace equicolor {

namespace {

std::vector<Int> even_sizes(Int total, Int count) {
  std::vector<Int> sizes(static_cast<std::size_t>(count), total / count);
  for (Int i = 0; i < total % count; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

// Cuts the cells of row `row`, columns [first_col, first_col + sizes-sum), into
// consecutive classes with the given sizes.
void cut_row(Coloring& out, Int row, Int first_col, const std::vector<Int>& sizes) {
  Int col = first_col;
  for (Int size : sizes) {
    std::vector<Vertex> cls;
    cls.reserve(static_cast<std::size_t>(size));
    for (Int x = 0; x < size; ++x) cls.push_back({row, col++});
    out.classes.push_back(std::move(cls));
  }
}

void cut_column(Coloring& out, Int col, const std::vector<Int>& sizes) {
  Int row = 1;
  for (Int size : sizes) {
    std::vector<Vertex> cls;
    cls.reserve(static_cast<std::size_t>(size));
    for (Int x = 0; x < size; ++x) cls.push_back({row++, col});
    out.classes.push_back(std::move(cls));
  }
}

void require_grid(const Params& p) {
  if (p.m < 2) throw DomainError("m must be >= 2 (got " + std::to_string(p.m) + ")");
  if (p.n < p.m) {
    throw DomainError("n must be >= m (got m=" + std::to_string(p.m) +
                      ", n=" + std::to_string(p.n) + ")");
  }
}

std::string refusal_message(const Params& p, Int k, DecisionReason reason) {
  std::string msg = "K_" + std::to_string(p.m) + " x K_" + std::to_string(p.n) + " has no " +
                    std::to_string(p.r) + "-equitable " + std::to_string(k) + "-coloring: ";
  switch (reason) {
    case DecisionReason::BelowChromatic:
      return msg + "k < m = " + std::to_string(p.m) + " (chromatic number)";
    case DecisionReason::MultipartiteConditionFailed:
      return msg + "k < Gamma = " + std::to_string(gamma(p).value) +
             " and ceil(n/floor(k/m)) - floor(n/ceil(k/m)) > r";
    default:
      return msg + std::string(to_string(reason));
  }
}

// Gamma <= k <= n: k - m*blocks full columns on the left, then every row's
// remaining n' cells cut into `blocks` classes of sizes in [m, m + r].
Coloring color_columns_then_rows(const Params& p, Int k) {
  const Int period = p.m + p.r;
  const Int s = floor_div(p.n, period);
  const Int t = floor_mod(p.n, period);
  const Int blocks = t <= p.m ? s : s + 1;
  const Int full = k - p.m * blocks;
  if (full < 0 || full > p.n) throw std::logic_error("column count out of range for k >= Gamma");
  const Int rest = p.n - full;

  Coloring out{p.m, p.n, {}};
  out.classes.reserve(static_cast<std::size_t>(k));
  for (Int col = 1; col <= full; ++col) cut_column(out, col, {p.m});
  if (blocks == 0) {
    if (rest != 0) throw std::logic_error("cells left over with no row classes");
    return out;
  }
  const SizeWindowPlan plan = split_sizes(rest, blocks, p.m, p.r);
  for (Int row = 1; row <= p.m; ++row) cut_row(out, row, full + 1, plan.sizes);
  return out;
}

struct CountRange {
  Int lo = 0;
  Int hi = -1;
};

// Number of pieces a line of `length` cells can be cut into with sizes in [lo, lo + r], lo >= 1.
CountRange piece_counts(Int length, Int lo, Int r) {
  if (length == 0) return {0, 0};
  return {ceil_div(length, lo + r), floor_div(length, lo)};
}

// Adds `extra` pieces on top of each line's minimum, lowest index first.
std::vector<Int> distribute(const std::vector<CountRange>& ranges, Int& extra) {
  std::vector<Int> counts;
  counts.reserve(ranges.size());
  for (const CountRange& range : ranges) {
    const Int add = std::min(extra, range.hi - range.lo);
    counts.push_back(range.lo + add);
    extra -= add;
  }
  return counts;
}

// Columns 1..shared each hand `share` cells to column classes; the other cells of
// every row go to row classes. Cell t of the shared block (t < shared*share)
// sits in column t / share + 1, row t % m + 1, so each shared column gets
// `share` distinct rows and row i receives ceil((shared*share - i + 1) / m) of them.
Coloring build_mixed(const Params& p, Int lo, Int shared, Int share,
                     const std::vector<Int>& column_pieces, const std::vector<Int>& row_pieces) {
  std::vector<std::vector<bool>> in_column(static_cast<std::size_t>(p.m),
                                           std::vector<bool>(static_cast<std::size_t>(p.n), false));
  Coloring out{p.m, p.n, {}};
  for (Int col = 1; col <= shared; ++col) {
    std::vector<Vertex> cells;
    for (Int t = (col - 1) * share; t < col * share; ++t) cells.push_back({t % p.m + 1, col});
    std::sort(cells.begin(), cells.end());
    Int next = 0;
    for (Int size : split_sizes(share, column_pieces[static_cast<std::size_t>(col - 1)], lo, p.r).sizes) {
      out.classes.emplace_back(cells.begin() + next, cells.begin() + next + size);
      next += size;
    }
    for (const Vertex& v : cells) {
      in_column[static_cast<std::size_t>(v.row - 1)][static_cast<std::size_t>(v.col - 1)] = true;
    }
  }
  for (Int row = 1; row <= p.m; ++row) {
    std::vector<Vertex> cells;
    for (Int col = 1; col <= p.n; ++col) {
      if (!in_column[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]) {
        cells.push_back({row, col});
      }
    }
    const Int pieces = row_pieces[static_cast<std::size_t>(row - 1)];
    if (pieces == 0) continue;
    Int next = 0;
    for (Int size : split_sizes(static_cast<Int>(cells.size()), pieces, lo, p.r).sizes) {
      out.classes.emplace_back(cells.begin() + next, cells.begin() + next + size);
      next += size;
    }
  }
  return out;
}

}  // namespace

SizeWindowPlan split_sizes(Int total, Int count, Int lo, Int r) {
  if (count < 1) throw DomainError("split_sizes requires count >= 1");
  if (lo < 0 || r < 0 || total < 0) throw DomainError("split_sizes requires total, lo, r >= 0");
  if (lo * count > total) {
    throw InfeasibleWindow(InfeasibleWindow::Bound::Lower,
                           std::to_string(total) + " < " + std::to_string(lo) + "*" +
                               std::to_string(count));
  }
  if ((lo + r) * count < total) {
    throw InfeasibleWindow(InfeasibleWindow::Bound::Upper,
                           std::to_string(total) + " > (" + std::to_string(lo) + "+" +
                               std::to_string(r) + ")*" + std::to_string(count));
  }
  return {count, lo, r, even_sizes(total, count)};
}

Coloring color_multipartite(const Params& p, Int k) {
  if (p.m < 2) throw DomainError("m must be >= 2 (got " + std::to_string(p.m) + ")");
  const Decision d = decide_multipartite(p, k);
  if (!d.colorable) {
    throw NotColorable(d.reason, "K_" + std::to_string(p.m) + "(" + std::to_string(p.n) +
                                     ") has no " + std::to_string(p.r) + "-equitable " +
                                     std::to_string(k) + "-coloring: " +
                                     std::string(to_string(d.reason)));
  }
  Coloring out{p.m, p.n, {}};
  out.classes.reserve(static_cast<std::size_t>(k));
  const std::vector<Int> colors_per_row = even_sizes(k, p.m);
  for (Int row = 1; row <= p.m; ++row) {
    cut_row(out, row, 1, even_sizes(p.n, colors_per_row[static_cast<std::size_t>(row - 1)]));
  }
  return out;
}

std::optional<Coloring> color_mixed_lines(const Params& p, Int k) {
  const Int total = p.m * p.n;
  if (k < 1 || k > total) return std::nullopt;
  const Int lo_min = std::max<Int>(1, ceil_div(total, k) - p.r);
  for (Int lo = floor_div(total, k); lo >= lo_min; --lo) {
    for (Int shared = 0; shared <= p.n; ++shared) {
      for (Int share = shared == 0 ? 0 : 1; share <= (shared == 0 ? 0 : p.m); ++share) {
        const CountRange per_column = piece_counts(share, lo, p.r);
        if (per_column.lo > per_column.hi) continue;

        // Row i loses ceil((shared*share - i + 1) / m) cells to the shared columns.
        const Int taken = shared * share;
        std::vector<CountRange> row_ranges;
        bool rows_fit = true;
        for (Int row = 1; row <= p.m && rows_fit; ++row) {
          const Int loss = taken >= row ? ceil_div(taken - row + 1, p.m) : 0;
          row_ranges.push_back(piece_counts(p.n - loss, lo, p.r));
          rows_fit = row_ranges.back().lo <= row_ranges.back().hi;
        }
        if (!rows_fit) continue;

        const std::vector<CountRange> column_ranges(static_cast<std::size_t>(shared), per_column);
        Int fewest = 0;
        Int most = 0;
        fewest += shared * per_column.lo;
        most += shared * per_column.hi;
        for (const CountRange& range : row_ranges) {
          fewest += range.lo;
          most += range.hi;
        }
        if (k < fewest || k > most) continue;

        Int extra = k - fewest;
        const auto column_pieces = distribute(column_ranges, extra);
        const auto row_pieces = distribute(row_ranges, extra);
        return build_mixed(p, lo, shared, share, column_pieces, row_pieces);
      }
    }
  }
  return std::nullopt;
}

Coloring color_kronecker(const Params& p, Int k) {
  require_grid(p);
  const Decision d = decide_kronecker(p, k);
  if (!d.colorable) throw NotColorable(d.reason, refusal_message(p, k, d.reason));

  const Int g = gamma(p).value;
  if (g > p.n) throw std::logic_error("Gamma exceeds n; the range n < k < Gamma should be empty");

  // On a square grid with k = n, rows and columns are interchangeable; rows win.
  if (k < g || (p.m == p.n && k == p.n)) return color_multipartite(p, k);
  if (k <= p.n) return color_columns_then_rows(p, k);

  const Int total = p.m * p.n;
  if (k > total) {
    Coloring out{p.m, p.n, {}};
    out.classes.reserve(static_cast<std::size_t>(k));
    for (Int i = 1; i <= p.m; ++i) {
      for (Int j = 1; j <= p.n; ++j) out.classes.push_back({{i, j}});
    }
    out.classes.resize(static_cast<std::size_t>(k));
    return out;
  }

  if (auto layout = color_mixed_lines(p, k)) return *std::move(layout);
  throw std::logic_error("no mixed row/column layout for k = " + std::to_string(k) + " on K_" +
                         std::to_string(p.m) + " x K_" + std::to_string(p.n));
}

Coloring color_edgeless(Int m, Int n, Int k) {
  if (m < 1 || n < 1) throw DomainError("grid dimensions must be >= 1");
  if (m != 1 && n != 1) throw DomainError("color_edgeless requires m = 1 or n = 1");
  if (k < 1) throw DomainError("k must be >= 1 (got " + std::to_string(k) + ")");
  Coloring out{m, n, {}};
  out.classes.reserve(static_cast<std::size_t>(k));
  if (m == 1) {
    cut_row(out, 1, 1, even_sizes(n, k));
  } else {
    cut_column(out, 1, even_sizes(m, k));
  }
  return out;
}

}  // namespace equicolor
