#ifndef COSPEC_CP_CLASSIFY_HPP
#define COSPEC_CP_CLASSIFY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "cospec/errors.hpp"
#include "cospec/graph.hpp"
#include "cospec/numeric_spectrum.hpp"

namespace cospec {

/// Hard cap for the exhaustive long-odd-cycle search.
inline constexpr std::size_t kCycleSearchMaxOrder = 12;
/// Hard cap on edges for the line-graph perfection check.
inline constexpr std::size_t kPerfectionMaxEdges = 10;

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

namespace detail {

/// 2-coloring of the subgraph induced by `allowed`, as the mask of color-1
/// vertices; nullopt on an odd cycle.
inline std::optional<std::uint64_t> two_color(const Graph& g, std::uint64_t allowed) {
  std::uint64_t colored = 0;
  std::uint64_t ones = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!((allowed >> s) & 1U) || ((colored >> s) & 1U)) continue;
    std::deque<Vertex> queue{s};
    colored |= Graph::bit(s);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      const bool u_one = (ones >> u) & 1U;
      for (auto bits = g.neighbors(u) & allowed; bits; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(bits));
        if ((colored >> v) & 1U) {
          if ((((ones >> v) & 1U) != 0) == u_one) return std::nullopt;
          continue;
        }
        colored |= Graph::bit(v);
        if (!u_one) ones |= Graph::bit(v);
        queue.push_back(v);
      }
    }
  }
  return ones;
}

inline std::uint64_t all_vertices(const Graph& g) {
  return g.order() == 64 ? ~std::uint64_t{0} : Graph::bit(g.order()) - 1;
}

/// Simple-path DFS for a cycle of odd length >= 5 through `start`, using
/// only vertices of `allowed` above `start`.
class OddCycleDfs {
 public:
  OddCycleDfs(const Graph& g, std::uint64_t allowed) : g_(g), allowed_(allowed) {}

  std::optional<std::vector<Vertex>> search() {
    for (auto bits = allowed_; bits; bits &= bits - 1) {
      const auto s = static_cast<Vertex>(std::countr_zero(bits));
      start_ = s;
      path_ = {s};
      // vertices below the start were already tried as starts
      const auto above = allowed_ & ~((Graph::bit(s) << 1) - 1);
      if (extend(s, Graph::bit(s), above)) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex u, std::uint64_t on_path, std::uint64_t usable) {
    const auto length = path_.size();
    if (length >= 5 && length % 2 == 1 && g_.adjacent(u, start_)) return true;
    for (auto bits = g_.neighbors(u) & usable & ~on_path; bits; bits &= bits - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(bits));
      path_.push_back(v);
      if (extend(v, on_path | Graph::bit(v), usable)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t allowed_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

/// Removes vertices of degree < 2 (within the kept set) until none remain.
inline std::uint64_t two_core(const Graph& g) {
  auto alive = all_vertices(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto bits = alive; bits; bits &= bits - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(bits));
      if (std::popcount(g.neighbors(v) & alive) < 2) {
        alive &= ~Graph::bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

/// Vertex sets of the biconnected components (blocks) of the subgraph
/// induced by `allowed`, by Hopcroft-Tarjan lowpoints.
inline std::vector<std::uint64_t> blocks(const Graph& g, std::uint64_t allowed) {
  const auto n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<std::uint64_t> out;
  int clock = 0;

  auto visit = [&](auto&& self, Vertex u, int parent) -> void {
    disc[u] = low[u] = clock++;
    for (auto bits = g.neighbors(u) & allowed; bits; bits &= bits - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(bits));
      if (disc[v] == -1) {
        edge_stack.emplace_back(u, v);
        self(self, v, static_cast<int>(u));
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::uint64_t block = 0;
          while (true) {
            const auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            block |= Graph::bit(a) | Graph::bit(b);
            if (a == u && b == v) break;
          }
          out.push_back(block);
        }
      } else if (static_cast<int>(v) != parent && disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (auto bits = allowed; bits; bits &= bits - 1) {
    const auto s = static_cast<Vertex>(std::countr_zero(bits));
    if (disc[s] == -1) visit(visit, s, -1);
  }
  return out;
}

}  // namespace detail

inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  const auto ones = detail::two_color(g, detail::all_vertices(g));
  if (!ones) return std::nullopt;
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) ((*ones >> v) & 1U ? parts.right : parts.left).push_back(v);
  return parts;
}

/// True iff `cycle` lists distinct vertices of g of odd count >= 5 with
/// consecutive (and last-to-first) vertices adjacent.
inline bool is_long_odd_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 5 || cycle.size() % 2 == 0) return false;
  std::uint64_t seen = 0;
  for (auto v : cycle) {
    if (v >= g.order() || ((seen >> v) & 1U)) return false;
    seen |= Graph::bit(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

enum class CycleSearch {
  Exhaustive,  // DFS over each non-bipartite component of the 2-core
  Blocks,      // DFS over each non-bipartite biconnected block
};

/// A cycle (as a subgraph, not necessarily induced) of odd length >= 5, if any.
inline std::optional<std::vector<Vertex>> find_long_odd_cycle(const Graph& g,
                                                               CycleSearch method = CycleSearch::Exhaustive) {
  if (g.order() > kCycleSearchMaxOrder)
    throw CapExceeded("long odd cycle search is capped at order " + std::to_string(kCycleSearchMaxOrder));
  const auto core = detail::two_core(g);
  std::vector<std::uint64_t> pieces;
  if (method == CycleSearch::Exhaustive) {
    const auto core_graph_components = components(g);
    for (auto comp : core_graph_components)
      if (comp & core) pieces.push_back(comp & core);
  } else {
    pieces = detail::blocks(g, core);
  }
  for (auto piece : pieces) {
    if (std::popcount(piece) < 5) continue;
    if (detail::two_color(g, piece)) continue;
    if (auto cycle = detail::OddCycleDfs(g, piece).search()) return cycle;
  }
  return std::nullopt;
}

enum class CpReason { SmallOrder, Bipartite, NoLongOddCycle, LongOddCycleFound };

inline std::string reason_name(CpReason r) {
  switch (r) {
    case CpReason::SmallOrder: return "SmallOrder";
    case CpReason::Bipartite: return "Bipartite";
    case CpReason::NoLongOddCycle: return "NoLongOddCycle";
    case CpReason::LongOddCycleFound: return "LongOddCycleFound";
  }
  return "Unknown";
}

struct CpVerdict {
  bool is_cp = true;
  std::optional<std::vector<Vertex>> witness;  // present iff !is_cp
  CpReason reason = CpReason::NoLongOddCycle;
};

/// A graph is completely positive iff it has no long odd cycle.
inline CpVerdict is_cp_graph(const Graph& g, CycleSearch method = CycleSearch::Exhaustive) {
  if (g.order() > kCycleSearchMaxOrder)
    throw CapExceeded("CP classification is capped at order " + std::to_string(kCycleSearchMaxOrder));
  if (g.order() < 5) return {true, std::nullopt, CpReason::SmallOrder};
  if (is_bipartite(g)) return {true, std::nullopt, CpReason::Bipartite};
  if (auto cycle = find_long_odd_cycle(g, method)) return {false, std::move(cycle), CpReason::LongOddCycleFound};
  return {true, std::nullopt, CpReason::NoLongOddCycle};
}

/// Entrywise nonnegative and positive semidefinite (smallest eigenvalue >= -1e-9).
inline bool is_doubly_nonnegative(const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw ParameterError("matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw ParameterError("matrix is not symmetric");
  }
  for (const auto& row : m)
    for (double x : row)
      if (x < 0.0) return false;
  const auto values = symmetric_eigenvalues(m);
  return values.empty() || values.back() >= -1e-9;
}

namespace detail {

/// Some odd vertex subset of size >= 5 induces a cycle.
inline bool has_odd_hole(const Graph& g) {
  const auto n = g.order();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    const int size = std::popcount(subset);
    if (size < 5 || size % 2 == 0) continue;
    bool two_regular = true;
    for (auto bits = subset; bits && two_regular; bits &= bits - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(bits));
      two_regular = std::popcount(g.neighbors(v) & subset) == 2;
    }
    if (!two_regular) continue;
    // connected 2-regular means a single cycle
    std::uint64_t reach = subset & (~subset + 1);
    std::uint64_t frontier = reach;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto bits = frontier; bits; bits &= bits - 1)
        next |= g.neighbors(static_cast<Vertex>(std::countr_zero(bits))) & subset;
      frontier = next & ~reach;
      reach |= next;
    }
    if (reach == subset) return true;
  }
  return false;
}

}  // namespace detail

/// Brute-force perfection test of the line graph: true iff L(g) has neither
/// an odd hole nor an odd antihole. Should agree with is_cp_graph.
inline bool line_graph_perfection_cross_check(const Graph& g) {
  if (g.edge_count() > kPerfectionMaxEdges)
    throw CapExceeded("line graph check is capped at " + std::to_string(kPerfectionMaxEdges) + " edges");
  if (g.edge_count() == 0) return true;
  const auto line = line_graph(g);
  return !detail::has_odd_hole(line) && !detail::has_odd_hole(complement(line));
}

}  // namespace cospec

#endif  // COSPEC_CP_CLASSIFY_HPP
