#include "equicolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace equicolor {

namespace {

constexpr Int kMaxGraphVertices = 64;

std::uint64_t low_bits(Int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

Int div_up(Int a, Int b) { return (a + b - 1) / b; }

// Depth-first assignment of vertices 0..N-1 to classes. A vertex may open a new
// class only after all lower classes are non-empty. compat[c] holds the vertices
// not adjacent to any current member of class c.
class PartitionSearch {
 public:
  PartitionSearch(const SmallGraph& g, Int k, Int r, Int node_limit)
      : graph_(g),
        n_(g.size()),
        k_(k),
        r_(r),
        node_limit_(node_limit),
        size_(static_cast<std::size_t>(k), 0),
        compat_(static_cast<std::size_t>(k), ~std::uint64_t{0}),
        size_cap_(n_ / k + r),
        balanced_max_(div_up(n_, k)) {}

  bool run() { return place(0); }

 private:
  bool place(Int v) {
    if (++nodes_ > node_limit_) {
      throw BudgetExceeded("oracle node limit " + std::to_string(node_limit_) + " exceeded");
    }
    if (!still_feasible(v)) return false;
    if (v == n_) return true;

    const std::uint64_t bit = std::uint64_t{1} << v;
    const Int limit = std::min(opened_ + 1, k_);
    for (Int c = 0; c < limit; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      if (!(compat_[ci] & bit) || size_[ci] >= size_cap_) continue;

      const std::uint64_t saved_compat = compat_[ci];
      const Int saved_max = max_size_;
      const Int saved_opened = opened_;
      compat_[ci] &= ~graph_.adjacency[static_cast<std::size_t>(v)];
      ++size_[ci];
      max_size_ = std::max(max_size_, size_[ci]);
      if (c == opened_) ++opened_;

      if (place(v + 1)) return true;

      compat_[ci] = saved_compat;
      --size_[ci];
      max_size_ = saved_max;
      opened_ = saved_opened;
    }
    return false;
  }

  // Every final class size must reach max(current max, ceil(N/k)) - r.
  bool still_feasible(Int v) const {
    const Int remaining = n_ - v;
    const Int floor_size = std::max(max_size_, balanced_max_) - r_;
    // Then every size so far is <= r, so any completion is balanced.
    if (floor_size <= 0) return true;

    const std::uint64_t future = low_bits(n_) & ~low_bits(v);
    Int deficit = 0;
    for (Int c = 0; c < k_; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      const Int need = floor_size - size_[ci];
      if (need <= 0) continue;
      deficit += need;
      if (deficit > remaining) return false;
      const Int reachable = std::popcount(compat_[ci] & future);
      if (reachable < need) return false;
    }
    return true;
  }

  const SmallGraph& graph_;
  Int n_;
  Int k_;
  Int r_;
  Int node_limit_;
  std::vector<Int> size_;
  std::vector<std::uint64_t> compat_;
  Int size_cap_;
  Int balanced_max_;
  Int max_size_ = 0;
  Int opened_ = 0;
  Int nodes_ = 0;
};

// Per-part class counts c_1..c_m summing to k, each able to hold n vertices in
// classes with sizes in [base, base + r].
class CompositionSearch {
 public:
  CompositionSearch(Int parts, Int n, Int r, Int node_limit)
      : parts_(parts), n_(n), r_(r), node_limit_(node_limit) {}

  bool exists(Int k, Int base) { return assign(0, k, base); }

 private:
  bool part_fits(Int count, Int base) const { return count * base <= n_ && n_ <= count * (base + r_); }

  bool assign(Int part, Int colors_left, Int base) {
    if (++nodes_ > node_limit_) {
      throw BudgetExceeded("oracle node limit " + std::to_string(node_limit_) + " exceeded");
    }
    if (part == parts_) return colors_left == 0;
    const Int parts_after = parts_ - part - 1;
    for (Int count = 1; count <= colors_left - parts_after; ++count) {
      if (part_fits(count, base) && assign(part + 1, colors_left - count, base)) return true;
    }
    return false;
  }

  Int parts_;
  Int n_;
  Int r_;
  Int node_limit_;
  Int nodes_ = 0;
};

void check_k(Int k, const OracleBudget& budget) {
  if (k < 1) throw DomainError("k must be >= 1 (got " + std::to_string(k) + ")");
  if (k > budget.max_k) {
    throw BudgetExceeded("k = " + std::to_string(k) + " exceeds oracle cap " +
                         std::to_string(budget.max_k));
  }
}

}  // namespace

SmallGraph kronecker_graph(Int m, Int n, const std::vector<Int>& order) {
  const Int total = m * n;
  if (total > kMaxGraphVertices) throw BudgetExceeded("graph too large for bitmask search");
  std::vector<Int> label(static_cast<std::size_t>(total));
  if (order.empty()) {
    std::iota(label.begin(), label.end(), Int{0});
  } else {
    std::vector<Int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Int> cells(static_cast<std::size_t>(total));
    std::iota(cells.begin(), cells.end(), Int{0});
    if (sorted != cells) throw DomainError("order must list every cell once");
    label = order;
  }
  // label[v] = row-major cell index of graph vertex v.
  SmallGraph g{std::vector<std::uint64_t>(static_cast<std::size_t>(total), 0)};
  for (Int a = 0; a < total; ++a) {
    for (Int b = 0; b < total; ++b) {
      const Int ca = label[static_cast<std::size_t>(a)];
      const Int cb = label[static_cast<std::size_t>(b)];
      if (ca / n != cb / n && ca % n != cb % n) {
        g.adjacency[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      }
    }
  }
  return g;
}

SmallGraph multipartite_graph(Int m, Int n) {
  const Int total = m * n;
  if (total > kMaxGraphVertices) throw BudgetExceeded("graph too large for bitmask search");
  SmallGraph g{std::vector<std::uint64_t>(static_cast<std::size_t>(total), 0)};
  for (Int a = 0; a < total; ++a) {
    for (Int b = 0; b < total; ++b) {
      if (a / n != b / n) g.adjacency[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    }
  }
  return g;
}

bool oracle_graph_colorable(const SmallGraph& graph, Int k, Int r, const OracleBudget& budget) {
  check_k(k, budget);
  if (graph.size() > budget.max_vertices || graph.size() > kMaxGraphVertices) {
    throw BudgetExceeded("graph has " + std::to_string(graph.size()) + " vertices, cap is " +
                         std::to_string(std::min<Int>(budget.max_vertices, kMaxGraphVertices)));
  }
  if (r < 0) throw DomainError("r must be >= 0");
  PartitionSearch search(graph, k, r, budget.node_limit);
  return search.run();
}

bool oracle_kronecker_colorable(const Params& p, Int k, const OracleBudget& budget) {
  check_k(k, budget);
  if (p.vertices() > budget.max_vertices) {
    throw BudgetExceeded("m*n = " + std::to_string(p.vertices()) + " exceeds oracle cap " +
                         std::to_string(budget.max_vertices));
  }
  return oracle_graph_colorable(kronecker_graph(p.m, p.n), k, p.r, budget);
}

bool oracle_multipartite_colorable(const Params& p, Int k, const OracleBudget& budget) {
  check_k(k, budget);
  CompositionSearch search(p.m, p.n, p.r, budget.node_limit);
  for (Int base = 0; base <= p.n; ++base) {
    if (search.exists(k, base)) return true;
  }
  return false;
}

Int oracle_threshold(const Params& p, Family family, const OracleBudget& budget) {
  const Int top = p.vertices() + 1;
  for (Int k = top; k >= 1; --k) {
    const bool ok = family == Family::Kronecker ? oracle_kronecker_colorable(p, k, budget)
                                                : oracle_multipartite_colorable(p, k, budget);
    if (!ok) return k + 1;
  }
  return 1;
}

}  // namespace equicolor
