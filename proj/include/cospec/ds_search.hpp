#ifndef COSPEC_DS_SEARCH_HPP
#define COSPEC_DS_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/cp_classify.hpp"
#include "cospec/errors.hpp"
#include "cospec/exact_spectrum.hpp"
#include "cospec/graph.hpp"

namespace cospec {

inline constexpr std::size_t kEnumerationDefaultCap = 7;
inline constexpr std::size_t kEnumerationHardCap = 8;

struct SearchOptions {
  unsigned workers = 1;
  /// Permit order 8 (268M bitstrings unfiltered); a warning is written to
  /// stderr for an unfiltered order-8 run.
  bool allow_order_8 = false;
  /// Restrict to graphs with exactly this many edges.
  std::optional<std::size_t> edge_count;
};

namespace detail {

inline void check_enumeration_order(std::size_t n, const SearchOptions& options) {
  if (n < 1) throw ParameterError("enumeration order must be at least 1");
  if (n > kEnumerationHardCap || (n > kEnumerationDefaultCap && !options.allow_order_8))
    throw CapExceeded("exhaustive search is capped at order " + std::to_string(kEnumerationDefaultCap) +
                      (n == kEnumerationHardCap ? " (order 8 needs an explicit opt-in)" : ""));
  if (n == kEnumerationHardCap && !options.edge_count)
    std::cerr << "warning: enumerating order 8 visits 2^28 bitstrings; expect minutes per worker\n";
}

/// Calls visit(bits) for every `width`-bit value with exactly `ones` set
/// bits (all values when ones is nullopt), ascending.
template <typename Visit>
void for_each_word(std::size_t width, std::optional<std::size_t> ones, Visit&& visit) {
  const std::uint64_t limit = std::uint64_t{1} << width;
  if (!ones) {
    for (std::uint64_t w = 0; w < limit; ++w) visit(w);
    return;
  }
  if (*ones > width) return;
  if (*ones == 0) {
    visit(0);
    return;
  }
  // Gosper's hack: next larger word with the same popcount
  for (std::uint64_t w = (std::uint64_t{1} << *ones) - 1; w < limit;) {
    visit(w);
    const std::uint64_t low = w & (~w + 1);
    const std::uint64_t ripple = w + low;
    w = (((ripple ^ w) >> 2) / low) | ripple;
  }
}

}  // namespace detail

/// Upper-triangle bitstrings of one representative per isomorphism class of
/// order-n graphs, ascending. A bitstring is kept iff it equals its own
/// canonical form. Work is split by the top (up to) 8 bits into independent
/// shards; results are concatenated in shard order, so the output does not
/// depend on the worker count.
inline std::vector<std::uint64_t> enumerate_canonical_bits(std::size_t n, const SearchOptions& options = {}) {
  detail::check_enumeration_order(n, options);
  const auto m = pair_count(n);
  const auto shard_bits = std::min<std::size_t>(8, m);
  const auto low_bits = m - shard_bits;
  const std::size_t shard_count = std::size_t{1} << shard_bits;
  std::vector<std::vector<std::uint64_t>> shards(shard_count);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s = next++; s < shard_count; s = next++) {
      const std::uint64_t high = static_cast<std::uint64_t>(s) << low_bits;
      std::optional<std::size_t> low_ones;
      if (options.edge_count) {
        const auto high_ones = static_cast<std::size_t>(std::popcount(s));
        if (high_ones > *options.edge_count) continue;
        low_ones = *options.edge_count - high_ones;
      }
      detail::for_each_word(low_bits, low_ones, [&](std::uint64_t low) {
        if (is_self_canonical(n, high | low)) shards[s].push_back(high | low);
      });
    }
  };
  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<std::uint64_t> out;
  for (auto& shard : shards) out.insert(out.end(), shard.begin(), shard.end());
  return out;
}

/// One graph per isomorphism class of order n (1 <= n <= 7; 8 by opt-in),
/// optionally only those with options.edge_count edges.
inline std::vector<Graph> enumerate_graphs(std::size_t n, const SearchOptions& options = {}) {
  std::vector<Graph> out;
  for (auto bits : enumerate_canonical_bits(n, options)) out.push_back(graph_from_bits(n, bits));
  return out;
}

struct CospectralClass {
  IntPolynomial charpoly;
  std::vector<Graph> members;
};

struct EnumerationReport {
  std::size_t order = 0;
  std::size_t graph_count = 0;
  std::size_t class_count = 0;
  std::vector<CospectralClass> nontrivial_classes;  // classes of size >= 2, by charpoly
};

/// Partitions the order-n graphs by exact characteristic polynomial.
inline EnumerationReport cospectral_classes(std::size_t n, const SearchOptions& options = {}) {
  const auto graphs = enumerate_graphs(n, options);
  std::map<IntPolynomial, std::vector<Graph>> by_poly;
  for (const auto& g : graphs) by_poly[charpoly(g)].push_back(g);

  EnumerationReport report;
  report.order = n;
  report.graph_count = graphs.size();
  report.class_count = by_poly.size();
  for (auto& [poly, members] : by_poly)
    if (members.size() >= 2) report.nontrivial_classes.push_back({poly, std::move(members)});
  return report;
}

struct DsVerdict {
  bool is_ds = true;
  std::vector<Graph> mates;  // cospectral, non-isomorphic; empty iff is_ds
  std::size_t searched_order = 0;
};

/// DS test against a precomputed census of g's order.
inline DsVerdict is_ds(const Graph& g, const EnumerationReport& census) {
  if (census.order != g.order()) throw ParameterError("census order does not match the graph");
  DsVerdict verdict;
  verdict.searched_order = g.order();
  const auto poly = charpoly(g);
  const auto form = canonical_form(g);
  for (const auto& cls : census.nontrivial_classes) {
    if (cls.charpoly != poly) continue;
    for (const auto& h : cls.members)
      if (canonical_form(h) != form) verdict.mates.push_back(h);
  }
  verdict.is_ds = verdict.mates.empty();
  return verdict;
}

/// Cospectral graphs have equal order and equal edge counts, so only the
/// order-n graphs with |E(g)| edges are searched.
inline DsVerdict is_ds(const Graph& g, SearchOptions options = {}) {
  options.edge_count = g.edge_count();
  DsVerdict verdict;
  verdict.searched_order = g.order();
  const auto poly = charpoly(g);
  const auto form = canonical_form(g);
  for (const auto& h : enumerate_graphs(g.order(), options))
    if (charpoly(h) == poly && canonical_form(h) != form) verdict.mates.push_back(h);
  verdict.is_ds = verdict.mates.empty();
  return verdict;
}

inline unsigned smallest_prime_factor(unsigned n) {
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

/// K_{p,q} plus l isolated vertices, with n = p q, p the smallest prime
/// factor and l = n + 1 - p - q: cospectral with the star K_{1,n} but
/// disconnected. Exists exactly for composite n.
inline Graph star_cospectral_mate(int n) {
  if (n < 4 || smallest_prime_factor(static_cast<unsigned>(n)) == static_cast<unsigned>(n))
    throw ParameterError("no cospectral mate by the K_{p,q} construction for n = " + std::to_string(n) +
                         " (n must be composite)");
  const int p = static_cast<int>(smallest_prime_factor(static_cast<unsigned>(n)));
  const int q = n / p;
  const int isolated = n + 1 - p - q;
  return disjoint_union(make_family(FamilySpec::complete_bipartite(p, q)),
                        make_family(FamilySpec::empty(isolated)));
}

struct NuResult {
  std::optional<std::size_t> nu;    // nullopt: no such order up to the cap
  std::optional<Graph> witness;     // neither CP nor DS
  std::optional<Graph> mate;        // cospectral with the witness, non-isomorphic
  std::vector<CospectralClass> flagged_classes;  // classes at order nu with a non-CP member
  std::size_t searched_cap = 0;
};

/// Smallest order n <= cap having a graph that is neither CP nor DS.
inline NuResult smallest_non_cp_non_ds_order(std::size_t cap, const SearchOptions& options = {}) {
  if (cap > kEnumerationDefaultCap)
    throw CapExceeded("nu search is capped at order " + std::to_string(kEnumerationDefaultCap));
  NuResult result;
  result.searched_cap = cap;
  for (std::size_t n = 1; n <= cap; ++n) {
    const auto census = cospectral_classes(n, options);
    for (const auto& cls : census.nontrivial_classes) {
      const auto bad = std::find_if(cls.members.begin(), cls.members.end(),
                                    [](const Graph& g) { return !is_cp_graph(g).is_cp; });
      if (bad == cls.members.end()) continue;
      result.flagged_classes.push_back(cls);
      if (!result.witness) {
        result.witness = *bad;
        result.mate = bad == cls.members.begin() ? cls.members[1] : cls.members.front();
      }
    }
    if (result.witness) {
      result.nu = n;
      return result;
    }
  }
  return result;
}

}  // namespace cospec

#endif  // COSPEC_DS_SEARCH_HPP
