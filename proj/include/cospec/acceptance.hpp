#ifndef COSPEC_ACCEPTANCE_HPP
#define COSPEC_ACCEPTANCE_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/cp_classify.hpp"
#include "cospec/ds_search.hpp"
#include "cospec/exact_spectrum.hpp"
#include "cospec/graph.hpp"
#include "cospec/numeric_spectrum.hpp"
#include "cospec/rational_matrix.hpp"

// Reproduction checks for every headline result, shared by the acceptance
// test binary and the `verify` subcommand. Each check is self-contained,
// seeded, and returns a pass flag with a one-line detail.

namespace cospec::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  unsigned workers = 1;
};

/// Number of unlabeled graphs of order n by Burnside's lemma: the average
/// over all vertex permutations of 2^(cycles on unordered pairs).
/// Independent of the canonical-form enumeration it cross-checks.
inline std::uint64_t burnside_graph_count(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  std::uint64_t perms = 0;
  do {
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    unsigned cycles = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (seen[i][j]) continue;
        ++cycles;
        auto a = i;
        auto b = j;
        while (!seen[a][b]) {
          seen[a][b] = seen[b][a] = true;
          a = perm[a];
          b = perm[b];
          if (a > b) std::swap(a, b);
        }
      }
    total += std::uint64_t{1} << cycles;
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / perms;
}

/// The 6-vertex graphs from the pyramid DS argument, as printed.
inline Graph lemma_graph_h3() {
  return graph_of_matrix({{0, 1, 1, 0, 1, 1},
                          {1, 0, 1, 1, 0, 1},
                          {1, 1, 0, 1, 1, 0},
                          {0, 1, 1, 0, 1, 1},
                          {1, 0, 1, 1, 0, 1},
                          {1, 1, 0, 1, 1, 0}});
}

inline Graph lemma_graph_h4() {
  return graph_of_matrix({{0, 1, 1, 0, 1, 1},
                          {1, 0, 0, 1, 0, 1},
                          {1, 0, 0, 1, 1, 0},
                          {0, 1, 1, 0, 1, 1},
                          {1, 0, 1, 1, 0, 1},
                          {1, 1, 0, 1, 1, 0}});
}

inline Graph random_graph(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

namespace detail {

inline Graph pyramid(int n, int k) { return make_family(FamilySpec::pyramid(n, k)); }

inline IntPolynomial star_polynomial(int n) {
  // x^{n+1} - n x^{n-1}
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 2, 0);
  c[0] = 1;
  c[2] = -n;
  return IntPolynomial(std::move(c));
}

}  // namespace detail

// 1. Factored pyramid polynomial equals the division-free charpoly.
inline CriterionResult pyramid_spectrum_identity() {
  CriterionResult r{1, "pyramid charpoly identity, 1 <= k < n <= 30", false, {}};
  std::size_t checked = 0;
  r.passed = true;
  for (int n = 2; n <= 30; ++n)
    for (int k = 1; k < n; ++k) {
      ++checked;
      if (expand(charpoly_pyramid_factored(n, k)) != charpoly(detail::pyramid(n, k))) {
        r.passed = false;
        r.detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
        return r;
      }
    }
  r.detail = std::to_string(checked) + " (n,k) pairs equal exactly";
  return r;
}

// 2. Numeric spectrum of T_n against {(1 +- sqrt(8n-15))/2, -1, 0^{n-3}}.
inline CriterionResult book_graph_spectrum() {
  CriterionResult r{2, "T_n spectrum within 1e-8, n = 3..30", false, {}};
  double worst = 0.0;
  for (int n = 3; n <= 30; ++n) {
    const double root = std::sqrt(8.0 * n - 15.0);
    std::vector<double> expected{(1 + root) / 2, (1 - root) / 2, -1.0};
    expected.insert(expected.end(), static_cast<std::size_t>(n - 3), 0.0);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const auto actual = eigenvalues(detail::pyramid(n, 2)).values;
    for (std::size_t i = 0; i < actual.size(); ++i) worst = std::max(worst, std::abs(actual[i] - expected[i]));
  }
  const auto t3 = eigenvalues(detail::pyramid(3, 2)).values;
  const bool t3_ok = std::abs(t3[0] - 2) <= 1e-8 && std::abs(t3[1] + 1) <= 1e-8 && std::abs(t3[2] + 1) <= 1e-8;
  r.passed = worst <= 1e-8 && t3_ok;
  std::ostringstream os;
  os << "max deviation " << worst << "; T_3 = {2, -1, -1}: " << (t3_ok ? "yes" : "no");
  r.detail = os.str();
  return r;
}

// 3. Star mates for composite n <= 30; no mate for prime n <= 7.
inline CriterionResult star_mates(const Options& options) {
  CriterionResult r{3, "star cospectral mates (composite n <= 30) and prime stars DS (n <= 7)", false, {}};
  r.passed = true;
  std::size_t composites = 0;
  for (int n = 4; n <= 30; ++n) {
    if (smallest_prime_factor(static_cast<unsigned>(n)) == static_cast<unsigned>(n)) continue;
    ++composites;
    const auto mate = star_cospectral_mate(n);
    const auto star = make_family(FamilySpec::star(n));
    const auto poly = charpoly(mate);
    bool ok = poly == detail::star_polynomial(n) && poly == charpoly(star) && is_connected(star) &&
              !is_connected(mate);
    if (ok && mate.order() <= kCanonicalMaxOrder) ok = !is_isomorphic(mate, star);
    if (!ok) {
      r.passed = false;
      r.detail = "star mate fails at n=" + std::to_string(n);
      return r;
    }
  }
  SearchOptions search{options.workers, true, std::nullopt};
  for (int p : {2, 3, 5, 7}) {
    const auto verdict = is_ds(make_family(FamilySpec::star(p)), search);
    if (!verdict.is_ds) {
      r.passed = false;
      r.detail = "S_" + std::to_string(p) + " has a cospectral mate";
      return r;
    }
  }
  r.detail = std::to_string(composites) + " composite n exact; S_2, S_3, S_5, S_7 have no mate";
  return r;
}

// 4. Order-5 census, and nothing below order 5.
inline CriterionResult order_five_census(const Options& options) {
  CriterionResult r{4, "order-5 census: single class {S_4, C_4 + K_1}; none below", false, {}};
  SearchOptions search{options.workers, false, std::nullopt};
  for (std::size_t n = 1; n <= 4; ++n)
    if (!cospectral_classes(n, search).nontrivial_classes.empty()) {
      r.detail = "nontrivial class at order " + std::to_string(n);
      return r;
    }
  const auto census = cospectral_classes(5, search);
  if (census.nontrivial_classes.size() != 1) {
    r.detail = std::to_string(census.nontrivial_classes.size()) + " nontrivial classes at order 5";
    return r;
  }
  std::vector<CanonicalForm> got;
  for (const auto& g : census.nontrivial_classes.front().members) got.push_back(canonical_form(g));
  std::vector<CanonicalForm> want{
      canonical_form(make_family(FamilySpec::star(4))),
      canonical_form(disjoint_union(make_family(FamilySpec::cycle(4)), make_family(FamilySpec::complete(1))))};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  r.passed = got == want;
  r.detail = r.passed ? "one class of 2 graphs, orders 1-4 clean" : "class members differ from {S_4, C_4 + K_1}";
  return r;
}

// 5. nu = 7: none up to 6, found at 7 with a verified witness pair.
inline CriterionResult smallest_non_cp_non_ds(const Options& options) {
  CriterionResult r{5, "nu = 7 (nothing up to order 6)", false, {}};
  SearchOptions search{options.workers, false, std::nullopt};
  const auto six = smallest_non_cp_non_ds_order(6, search);
  const auto seven = smallest_non_cp_non_ds_order(7, search);
  if (six.nu) {
    r.detail = "cap 6 returned " + std::to_string(*six.nu);
    return r;
  }
  if (!seven.nu || *seven.nu != 7 || !seven.witness || !seven.mate) {
    r.detail = "cap 7 did not return 7";
    return r;
  }
  const auto verdict = is_cp_graph(*seven.witness);
  const bool witness_ok = !verdict.is_cp && is_long_odd_cycle(*seven.witness, *verdict.witness) &&
                          are_cospectral(*seven.witness, *seven.mate) &&
                          !is_isomorphic(*seven.witness, *seven.mate);
  r.passed = witness_ok;
  r.detail = "nu = 7, " + std::to_string(seven.flagged_classes.size()) +
             " order-7 classes with a non-CP member; witness verified: " + (witness_ok ? "yes" : "no");
  return r;
}

// 6. Pyramids are DS by exhaustive search.
inline CriterionResult pyramids_are_ds(const Options& options) {
  CriterionResult r{6, "T_{n,k} DS for 2 <= k < n <= 7", false, {}};
  SearchOptions search{options.workers, false, std::nullopt};
  std::size_t count = 0;
  for (int n = 3; n <= 7; ++n)
    for (int k = 2; k < n; ++k) {
      ++count;
      if (!is_ds(detail::pyramid(n, k), search).is_ds) {
        r.detail = "T_{" + std::to_string(n) + "," + std::to_string(k) + "} has a mate";
        return r;
      }
    }
  r.passed = true;
  r.detail = std::to_string(count) + " pyramids, no cospectral mates";
  return r;
}

// 7. H_3 and H_4 regressions.
inline CriterionResult lemma_matrices() {
  CriterionResult r{7, "H_3 and H_4 spectra", false, {}};
  const auto h3 = eigenvalues(lemma_graph_h3()).values;
  const std::vector<double> h3_expected{4, 0, 0, 0, -2, -2};
  double h3_dev = 0.0;
  for (std::size_t i = 0; i < 6; ++i) h3_dev = std::max(h3_dev, std::abs(h3[i] - h3_expected[i]));

  const auto h4_graph = lemma_graph_h4();
  const auto h4 = eigenvalues(h4_graph).values;
  const double trace = std::accumulate(h4.begin(), h4.end(), 0.0);
  const auto below_numeric = std::count_if(h4.begin(), h4.end(), [](double x) { return x < -1.0; });
  const auto below_exact = count_less(h4_graph, -1.0);
  const bool h4_ok = std::abs(trace) <= 1e-8 && below_numeric == 2 && below_exact == 2 &&
                     std::abs(h4.front() - 3.714) <= 5e-3;
  r.passed = h3_dev <= 1e-8 && h4_ok;
  std::ostringstream os;
  os << "H_3 max deviation " << h3_dev << "; H_4 trace " << trace << ", below -1: " << below_exact
     << ", largest " << h4.front();
  r.detail = os.str();
  return r;
}

// 8. CP classification suite.
inline CriterionResult cp_classification(const Options& options) {
  CriterionResult r{8, "CP classification and line-graph perfection agreement", false, {}};
  SearchOptions search{options.workers, false, std::nullopt};
  auto fail = [&r](const std::string& why) {
    r.detail = why;
    return r;
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n, search))
      if (!is_cp_graph(g).is_cp) return fail("order-" + std::to_string(n) + " graph not CP");

  std::size_t cross_checked = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_graphs(n, search)) {
      const auto verdict = is_cp_graph(g);
      if (is_bipartite(g) && !verdict.is_cp) return fail("bipartite graph not CP");
      if (verdict.witness && !is_long_odd_cycle(g, *verdict.witness)) return fail("invalid witness");
      if (g.edge_count() <= kPerfectionMaxEdges) {
        ++cross_checked;
        if (line_graph_perfection_cross_check(g) != verdict.is_cp) return fail("line-graph check disagrees");
      }
    }

  for (const auto& g : {make_family(FamilySpec::cycle(5)), cycle_with_chord(5), cycle_with_chord(6)}) {
    const auto verdict = is_cp_graph(g);
    if (verdict.is_cp || !verdict.witness || !is_long_odd_cycle(g, *verdict.witness))
      return fail("C_5 / B_5 / B_6 not flagged with a valid witness");
  }

  // T_{4,3} = K_4 has only 4 vertices and is CP like every graph of order
  // <= 4; the long odd cycle exists from n = 5 on.
  for (int n = 3; n <= 10; ++n) {
    if (!is_cp_graph(detail::pyramid(n, 2)).is_cp) return fail("T_" + std::to_string(n) + " not CP");
    for (int k = 3; k < n; ++k) {
      const bool expect_cp = n < 5;
      if (is_cp_graph(detail::pyramid(n, k)).is_cp != expect_cp)
        return fail("T_{" + std::to_string(n) + "," + std::to_string(k) + "} misclassified");
    }
  }
  r.passed = true;
  r.detail = std::to_string(cross_checked) + " graphs cross-checked; T_{4,3} = K_4 CP, T_{n,k>=3} (5 <= n <= 10) not CP";
  return r;
}

// 9. Edges and triangles from the charpoly, all labeled graphs of order <= 6.
inline CriterionResult spectral_accounting() {
  CriterionResult r{9, "edges and triangles from charpoly, all labeled graphs of order <= 6", false, {}};
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pair_count(n)); ++bits) {
      const auto g = graph_from_bits(n, bits);
      const auto counts = edges_and_triangles(charpoly(g));
      ++checked;
      if (counts.edges != g.edge_count() || counts.triangles != triangle_count(g)) {
        r.detail = "mismatch on a graph of order " + std::to_string(n);
        return r;
      }
    }
  r.passed = true;
  r.detail = std::to_string(checked) + " labeled graphs";
  return r;
}

// 10. Property suites.
inline CriterionResult property_suites(const Options& options) {
  CriterionResult r{10, "Schur identities, interlacing, union multiplicativity, cospectral invariants", false, {}};
  std::mt19937_64 rng(20240607);
  auto fail = [&r](const std::string& why) {
    r.detail = why;
    return r;
  };

  std::uniform_int_distribution<int> numerator(-5, 5);
  std::uniform_int_distribution<int> denominator(1, 4);
  std::uniform_int_distribution<std::size_t> size_dist(2, 6);
  std::size_t deficient = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = size_dist(rng);
    const auto split = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    RationalMatrix m(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(numerator(rng), denominator(rng));
    } while (m.block(n - split, n - split, split, split).determinant() == 0);
    if (trial % 3 == 0) {
      // copy a combination of trailing rows into row 0 to force rank deficiency
      for (std::size_t j = 0; j < n; ++j) m(0, j) = 2 * m(n - 1, j);
    }
    if (m.rank() < n) ++deficient;
    const auto check = verify_schur_identities(m, split);
    if (!check.determinant_identity || !check.rank_identity) return fail("Schur identity failed");
  }

  std::size_t interlaced = 0;
  while (interlaced < 200) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const auto g = random_graph(n, rng);
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) subset.push_back(v);
    if (subset.empty() || subset.size() == n) continue;
    ++interlaced;
    if (!verify_interlacing(g, subset, 1e-8)) return fail("interlacing violated");
  }

  for (int trial = 0; trial < 100; ++trial) {
    const auto g1 = random_graph(std::uniform_int_distribution<std::size_t>(1, 6)(rng), rng);
    const auto g2 = random_graph(std::uniform_int_distribution<std::size_t>(1, 6)(rng), rng);
    if (charpoly(disjoint_union(g1, g2)) != charpoly(g1) * charpoly(g2)) return fail("union not multiplicative");
  }

  SearchOptions search{options.workers, false, std::nullopt};
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& cls : cospectral_classes(n, search).nontrivial_classes) {
      ++classes;
      const auto& first = cls.members.front();
      for (const auto& g : cls.members) {
        if (g.edge_count() != first.edge_count() || triangle_count(g) != triangle_count(first) ||
            is_bipartite(g).has_value() != is_bipartite(first).has_value())
          return fail("cospectral class members differ in edges/triangles/bipartiteness");
        if (&g != &first && canonical_form(g) == canonical_form(first)) return fail("isomorphic class members");
      }
    }
  r.passed = true;
  r.detail = "500 Schur (" + std::to_string(deficient) + " rank-deficient), 200 interlacing, 100 unions, " +
             std::to_string(classes) + " cospectral classes";
  return r;
}

// 11. Enumeration counts against Burnside.
inline CriterionResult enumeration_counts(const Options& options) {
  CriterionResult r{11, "enumeration counts 1, 2, 4, 11, 34, 156, 1044", false, {}};
  SearchOptions search{options.workers, false, std::nullopt};
  const std::vector<std::uint64_t> published{1, 2, 4, 11, 34, 156, 1044};
  std::string counts;
  r.passed = true;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto enumerated = enumerate_canonical_bits(n, search).size();
    const auto orbits = burnside_graph_count(n);
    counts += (n > 1 ? ", " : "") + std::to_string(enumerated);
    if (enumerated != orbits || orbits != published[n - 1]) r.passed = false;
  }
  r.detail = counts + (r.passed ? " (Burnside agrees)" : " (Burnside disagrees)");
  return r;
}

inline std::vector<std::pair<int, std::function<CriterionResult(const Options&)>>> criteria() {
  return {
      {1, [](const Options&) { return pyramid_spectrum_identity(); }},
      {2, [](const Options&) { return book_graph_spectrum(); }},
      {3, star_mates},
      {4, order_five_census},
      {5, smallest_non_cp_non_ds},
      {6, pyramids_are_ds},
      {7, [](const Options&) { return lemma_matrices(); }},
      {8, cp_classification},
      {9, [](const Options&) { return spectral_accounting(); }},
      {10, property_suites},
      {11, enumeration_counts},
  };
}

/// Runs one criterion, timing it and turning exceptions into failures.
inline CriterionResult run_criterion(const std::function<CriterionResult(const Options&)>& check, int id,
                                     const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = check(options);
  } catch (const std::exception& e) {
    result = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0.0};
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline std::vector<CriterionResult> run_all(const Options& options = {}) {
  std::vector<CriterionResult> results;
  for (const auto& [id, check] : criteria()) results.push_back(run_criterion(check, id, options));
  return results;
}

}  // namespace cospec::acceptance

#endif  // COSPEC_ACCEPTANCE_HPP
