#ifndef COSPEC_CANONICAL_HPP
#define COSPEC_CANONICAL_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "cospec/errors.hpp"
#include "cospec/graph.hpp"

namespace cospec {

/// Hard cap for canonical labeling and exhaustive enumeration.
inline constexpr std::size_t kCanonicalMaxOrder = 10;

// Upper-triangle bitstrings list the pairs column by column:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
// (the graph6 order). The first pair is the most significant bit, so integer
// comparison of two bitstrings of the same order is lexicographic comparison.

constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

constexpr std::size_t pair_index(Vertex i, Vertex j) noexcept { return j * (j - 1) / 2 + i; }

inline std::uint64_t upper_triangle_bits(const Graph& g) {
  const auto n = g.order();
  if (pair_count(n) > 64) throw CapExceeded("bitstring form needs order <= 11");
  const auto m = pair_count(n);
  std::uint64_t bits = 0;
  for (auto [u, v] : g.edges()) bits |= std::uint64_t{1} << (m - 1 - pair_index(u, v));
  return bits;
}

inline Graph graph_from_bits(std::size_t n, std::uint64_t bits) {
  if (pair_count(n) > 64) throw CapExceeded("bitstring form needs order <= 11");
  const auto m = pair_count(n);
  if (m < 64 && (bits >> m) != 0) throw ParameterError("bitstring longer than the pair count");
  Graph g(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((bits >> (m - 1 - pair_index(i, j))) & 1U) g.add_edge(i, j);
  return g;
}

/// Lexicographically minimal upper-triangle bitstring over all labelings of
/// the graph whose degrees are non-decreasing in vertex index.
struct CanonicalForm {
  std::size_t order = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

class LabelingSearch {
 public:
  LabelingSearch(std::size_t n, std::uint64_t bits) : n_(n), m_(pair_count(n)) {
    std::size_t p = 0;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i, ++p)
        if ((bits >> (m_ - 1 - p)) & 1U) {
          rows_[i] |= static_cast<std::uint16_t>(1U << j);
          rows_[j] |= static_cast<std::uint16_t>(1U << i);
        }
    for (Vertex v = 0; v < n; ++v) degree_[v] = std::popcount(rows_[v]);
  }

  /// True iff the degrees are non-decreasing in the current labeling.
  [[nodiscard]] bool degrees_sorted() const noexcept {
    for (Vertex v = 1; v < n_; ++v)
      if (degree_[v] < degree_[v - 1]) return false;
    return true;
  }

  /// Minimal bitstring over degree-sorted labelings.
  std::uint64_t minimum() {
    prepare();
    best_ = ~std::uint64_t{0};
    abort_below_ = false;
    descend(0, 0);
    return best_;
  }

  /// True iff no degree-sorted labeling beats `bits`; requires degrees_sorted().
  bool nothing_below(std::uint64_t bits) {
    prepare();
    best_ = bits;
    abort_below_ = true;
    found_below_ = false;
    descend(0, 0);
    return !found_below_;
  }

 private:
  void prepare() {
    target_ = degree_;
    std::sort(target_.begin(), target_.begin() + static_cast<std::ptrdiff_t>(n_));
    // Twins (equal neighborhoods apart from each other) are swapped by an
    // automorphism, so only the lowest unused member of a class is tried.
    for (Vertex v = 0; v < n_; ++v) {
      twin_class_[v] = v;
      for (Vertex u = 0; u < v; ++u) {
        const auto nu = rows_[u] & ~(1U << v);
        const auto nv = rows_[v] & ~(1U << u);
        if (nu == nv) {
          twin_class_[v] = twin_class_[u];
          break;
        }
      }
    }
    used_ = 0;
  }

  void descend(std::size_t t, std::uint64_t current) {
    if (found_below_) return;
    if (t == n_) {
      if (current < best_) best_ = current;
      return;
    }
    const auto shift = m_ - t * (t + 1) / 2;
    std::uint32_t tried = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1U) continue;
      if (degree_[v] != target_[t]) continue;
      if ((tried >> twin_class_[v]) & 1U) continue;
      tried |= 1U << twin_class_[v];

      std::uint64_t column = 0;
      for (std::size_t i = 0; i < t; ++i) column = (column << 1) | ((rows_[position_[i]] >> v) & 1U);
      const auto next = current | (column << shift);
      const auto mine = shift >= 64 ? 0 : next >> shift;
      const auto theirs = shift >= 64 ? 0 : best_ >> shift;
      if (mine > theirs) continue;
      if (abort_below_ && mine < theirs) {
        found_below_ = true;
        return;
      }
      position_[t] = v;
      used_ |= 1U << v;
      descend(t + 1, next);
      used_ &= ~(1U << v);
      if (found_below_) return;
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::array<std::uint16_t, 16> rows_{};
  std::array<int, 16> degree_{};
  std::array<int, 16> target_{};
  std::array<Vertex, 16> twin_class_{};
  std::array<Vertex, 16> position_{};
  std::uint32_t used_ = 0;
  std::uint64_t best_ = 0;
  bool abort_below_ = false;
  bool found_below_ = false;
};

inline void check_canonical_cap(std::size_t n) {
  if (n > kCanonicalMaxOrder)
    throw CapExceeded("order " + std::to_string(n) + " exceeds the canonical-form cap of " +
                      std::to_string(kCanonicalMaxOrder));
}

}  // namespace detail

/// True iff `bits` (an order-n upper-triangle bitstring) is its own canonical form.
inline bool is_self_canonical(std::size_t n, std::uint64_t bits) {
  detail::check_canonical_cap(n);
  detail::LabelingSearch search(n, bits);
  if (!search.degrees_sorted()) return false;
  return search.nothing_below(bits);
}

inline CanonicalForm canonical_form(const Graph& g) {
  detail::check_canonical_cap(g.order());
  detail::LabelingSearch search(g.order(), upper_triangle_bits(g));
  return {g.order(), search.minimum()};
}

inline Graph canonical_graph(const Graph& g) {
  const auto form = canonical_form(g);
  return graph_from_bits(form.order, form.bits);
}

inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
  detail::check_canonical_cap(g1.order());
  detail::check_canonical_cap(g2.order());
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace cospec

#endif  // COSPEC_CANONICAL_HPP
