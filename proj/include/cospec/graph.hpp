#ifndef COSPEC_GRAPH_HPP
#define COSPEC_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cospec/errors.hpp"

namespace cospec {

using Vertex = std::size_t;

/// Simple undirected graph on vertices 0..order-1, stored as one neighbor
/// bitmask per vertex. Orders up to 64 are representable.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  explicit Graph(std::size_t order) : rows_(order, 0) {
    if (order == 0) throw ParameterError("graph order must be at least 1");
    if (order > kMaxOrder)
      throw CapExceeded("graph order " + std::to_string(order) + " exceeds 64");
  }

  [[nodiscard]] std::size_t order() const noexcept { return rows_.size(); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return (rows_[u] >> v) & 1U;
  }

  /// Neighbor set of v as a bitmask (bit w set iff v ~ w).
  [[nodiscard]] std::uint64_t neighbors(Vertex v) const {
    check(v);
    return rows_[v];
  }

  [[nodiscard]] std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(std::popcount(neighbors(v)));
  }

  [[nodiscard]] std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (auto row : rows_) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
  }

  void add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
  void remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

  void set_edge(Vertex u, Vertex v, bool present) {
    check(u);
    check(v);
    if (u == v) throw ParameterError("self-loops are not allowed");
    if (present) {
      rows_[u] |= bit(v);
      rows_[v] |= bit(u);
    } else {
      rows_[u] &= ~bit(v);
      rows_[v] &= ~bit(u);
    }
  }

  /// Edges as (u, v) with u < v, ordered by u then v.
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = u + 1; v < order(); ++v)
        if ((rows_[u] >> v) & 1U) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static constexpr std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << v; }

 private:
  void check(Vertex v) const {
    if (v >= rows_.size())
      throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(rows_.size()));
  }

  std::vector<std::uint64_t> rows_;
};

// ---------------------------------------------------------------------------
// Named families

enum class FamilyKind { Complete, Empty, Path, Cycle, Star, CompleteBipartite, Pyramid };

struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;

  static FamilySpec complete(int n) { return {FamilyKind::Complete, {n}}; }
  static FamilySpec empty(int n) { return {FamilyKind::Empty, {n}}; }
  static FamilySpec path(int n) { return {FamilyKind::Path, {n}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, {n}}; }
  /// K_{1,n}: one center and n leaves, n + 1 vertices.
  static FamilySpec star(int n) { return {FamilyKind::Star, {n}}; }
  static FamilySpec complete_bipartite(int m, int n) {
    return {FamilyKind::CompleteBipartite, {m, n}};
  }
  /// K_k joined with the empty graph on n - k vertices.
  static FamilySpec pyramid(int n, int k) { return {FamilyKind::Pyramid, {n, k}}; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Empty: return "empty";
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Star: return "star";
    case FamilyKind::CompleteBipartite: return "complete_bipartite";
    case FamilyKind::Pyramid: return "pyramid";
  }
  return "unknown";
}

/// Throws ParameterError unless the spec names a valid family member.
inline void validate(const FamilySpec& spec) {
  const auto arity = spec.kind == FamilyKind::CompleteBipartite || spec.kind == FamilyKind::Pyramid
                         ? 2U
                         : 1U;
  if (spec.params.size() != arity)
    throw ParameterError(family_name(spec.kind) + " takes " + std::to_string(arity) +
                         " parameter(s)");
  const int a = spec.params[0];
  switch (spec.kind) {
    case FamilyKind::Complete:
    case FamilyKind::Empty:
    case FamilyKind::Path:
      if (a < 1) throw ParameterError(family_name(spec.kind) + " requires n >= 1");
      break;
    case FamilyKind::Cycle:
      if (a < 3) throw ParameterError("cycle requires n >= 3");
      break;
    case FamilyKind::Star:
      if (a < 1) throw ParameterError("star requires n >= 1");
      break;
    case FamilyKind::CompleteBipartite:
      if (a < 1 || spec.params[1] < 1)
        throw ParameterError("complete bipartite requires m, n >= 1");
      break;
    case FamilyKind::Pyramid:
      if (spec.params[1] < 1 || spec.params[1] >= a)
        throw ParameterError("pyramid requires 1 <= k < n");
      break;
  }
}

/// Number of vertices of the family member.
inline std::size_t family_order(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FamilyKind::Star: return static_cast<std::size_t>(spec.params[0]) + 1;
    case FamilyKind::CompleteBipartite:
      return static_cast<std::size_t>(spec.params[0] + spec.params[1]);
    default: return static_cast<std::size_t>(spec.params[0]);
  }
}

inline Graph make_family(const FamilySpec& spec) {
  Graph g(family_order(spec));
  const auto n = g.order();
  switch (spec.kind) {
    case FamilyKind::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      break;
    case FamilyKind::Empty: break;
    case FamilyKind::Path:
      for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
      break;
    case FamilyKind::Cycle:
      for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      break;
    case FamilyKind::Star:
      for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
      break;
    case FamilyKind::CompleteBipartite: {
      const auto m = static_cast<std::size_t>(spec.params[0]);
      for (Vertex u = 0; u < m; ++u)
        for (Vertex v = m; v < n; ++v) g.add_edge(u, v);
      break;
    }
    case FamilyKind::Pyramid: {
      // base clique on 0..k-1, apexes k..n-1 joined to every base vertex
      const auto k = static_cast<std::size_t>(spec.params[1]);
      for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      break;
    }
  }
  return g;
}

/// C_n plus the chord between its first and third vertices.
inline Graph cycle_with_chord(std::size_t n) {
  if (n < 4) throw ParameterError("chorded cycle requires n >= 4");
  Graph g = make_family(FamilySpec::cycle(static_cast<int>(n)));
  g.add_edge(0, 2);
  return g;
}

// ---------------------------------------------------------------------------
// Operators

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// Block-diagonal union; the vertices of g2 are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order();
  if (n1 + g2.order() > Graph::kMaxOrder) throw CapExceeded("disjoint union exceeds order 64");
  Graph out(n1 + g2.order());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
  return out;
}

inline Graph join(const Graph& g1, const Graph& g2) {
  Graph out = disjoint_union(g1, g2);
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) out.add_edge(u, g1.order() + v);
  return out;
}

/// One vertex per edge of g (in g.edges() order); two vertices are adjacent
/// iff the edges are distinct and share an endpoint. An edgeless g has no
/// line graph.
inline Graph line_graph(const Graph& g) {
  const auto e = g.edges();
  if (e.empty()) throw ParameterError("line graph of an edgeless graph is empty");
  if (e.size() > Graph::kMaxOrder) throw CapExceeded("line graph would exceed order 64");
  Graph out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const auto [a, b] = e[i];
      const auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
    }
  return out;
}

/// Subgraph induced by `vertices`, relabeled 0..|vertices|-1 in the given order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw ParameterError("induced subgraph needs at least one vertex");
  for (auto v : vertices)
    if (v >= g.order()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) throw ParameterError("duplicate vertex in subset");
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw ParameterError("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw ParameterError("not a permutation");
    seen[p] = true;
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

/// Off-diagonal support of a symmetric matrix.
inline Graph graph_of_matrix(const std::vector<std::vector<double>>& m) {
  const auto n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ParameterError("matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) throw ParameterError("matrix is not symmetric");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != 0.0) g.add_edge(i, j);
  return g;
}

inline std::vector<std::vector<double>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<double>> a(g.order(), std::vector<double>(g.order(), 0.0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;
  return a;
}

// ---------------------------------------------------------------------------
// Simple structural queries

/// Connected components as vertex bitmasks, ordered by smallest vertex.
inline std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t seen = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if ((seen >> s) & 1U) continue;
    std::uint64_t comp = Graph::bit(s);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto f = frontier; f; f &= f - 1)
        next |= g.neighbors(static_cast<Vertex>(std::countr_zero(f)));
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// True iff g has no cycle: every component with c vertices has c - 1 edges.
inline bool is_forest(const Graph& g) { return g.edge_count() + components(g).size() == g.order(); }

inline std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    const auto later = g.neighbors(u) & g.neighbors(v) & ~((Graph::bit(v) << 1) - 1);
    count += static_cast<std::size_t>(std::popcount(later));
  }
  return count;
}

}  // namespace cospec

#endif  // COSPEC_GRAPH_HPP
