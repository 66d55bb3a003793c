#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cospec/cp_classify.hpp"
#include "cospec/ds_search.hpp"
#include "cospec/exact_spectrum.hpp"
#include "cospec/graph6.hpp"
#include "cospec/rational_matrix.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

Graph K(int n) { return make_family(FamilySpec::complete(n)); }
Graph E(int n) { return make_family(FamilySpec::empty(n)); }
Graph P(int n) { return make_family(FamilySpec::path(n)); }
Graph C(int n) { return make_family(FamilySpec::cycle(n)); }
Graph S(int n) { return make_family(FamilySpec::star(n)); }
Graph T(int n, int k) { return make_family(FamilySpec::pyramid(n, k)); }

/// Laplace expansion along the first row.
Rational laplace_determinant(const RationalMatrix& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, c) * laplace_determinant(minor);
    total += c % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

/// Rank as the size of the largest nonsingular square submatrix.
std::size_t minor_rank(const RationalMatrix& m) {
  const auto n = m.rows();
  for (std::size_t size = n; size > 0; --size) {
    for (std::uint32_t rows = 0; rows < (1U << n); ++rows) {
      if (static_cast<std::size_t>(std::popcount(rows)) != size) continue;
      for (std::uint32_t cols = 0; cols < (1U << n); ++cols) {
        if (static_cast<std::size_t>(std::popcount(cols)) != size) continue;
        RationalMatrix sub(size, size);
        for (std::size_t i = 0, si = 0; i < n; ++i) {
          if (!((rows >> i) & 1U)) continue;
          for (std::size_t j = 0, sj = 0; j < n; ++j)
            if ((cols >> j) & 1U) sub(si, sj++) = m(i, j);
          ++si;
        }
        if (laplace_determinant(sub) != 0) return size;
      }
    }
  }
  return 0;
}

RationalMatrix random_rational(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(E(5)), IntPolynomial::monomial(5));
  EXPECT_EQ(charpoly(K(3)), (IntPolynomial{1, 0, -3, -2}));
  // x^3 (x+1) (x^2 - x - 8)
  const IntPolynomial t6 = IntPolynomial::monomial(3) * IntPolynomial{1, 1} * IntPolynomial{1, -1, -8};
  EXPECT_EQ(charpoly(T(6, 2)), t6);
  EXPECT_EQ(charpoly(P(3)), (IntPolynomial{1, 0, -2, 0}));
  EXPECT_EQ(charpoly(K(1)), (IntPolynomial{1, 0}));
}

TEST(Charpoly, MatchesBareissDeterminant) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 120; ++i) {
    const auto g = oracle::random_graph(1 + i % 12, rng);
    EXPECT_TRUE(oracle::is_characteristic_polynomial(g, charpoly(g))) << graph6_encode(g);
  }
  for (int n = 2; n <= 12; ++n) {
    EXPECT_TRUE(oracle::is_characteristic_polynomial(T(n, n / 2), charpoly(T(n, n / 2))));
    EXPECT_TRUE(oracle::is_characteristic_polynomial(C(n + 1), charpoly(C(n + 1))));
  }
}

TEST(Charpoly, IntegerMatrixOverloadAgrees) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + i % 6;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto p = charpoly(m);
    ASSERT_EQ(p.degree(), n);
    for (long long x = -3; x <= 3; ++x) {
      auto shifted = m;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) shifted[r][c] = (r == c ? BigInt(x) : BigInt(0)) - m[r][c];
      EXPECT_EQ(p.evaluate(BigInt(x)), oracle::bareiss_determinant(shifted));
    }
  }
}

TEST(Charpoly, LargeOrderCoefficientsExceedMachineWords) {
  const auto p = charpoly(K(64));
  EXPECT_EQ(p, (IntPolynomial{1, 1}.pow(63) * IntPolynomial{1, -63}));
  BigInt largest = 0;
  for (const auto& c : p.coefficients()) largest = std::max(largest, BigInt(boost::multiprecision::abs(c)));
  EXPECT_GT(largest, BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(Charpoly, TraceCoefficientVanishes) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(2 + i % 15, rng);
    const auto p = charpoly(g);
    EXPECT_EQ(p.coefficient(p.degree()), 1);
    EXPECT_EQ(p.coefficient(p.degree() - 1), 0);
    EXPECT_EQ(p.degree(), g.order());
  }
}

TEST(Charpoly, MultiplicativeOverDisjointUnion) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_graph(1 + i % 7, rng);
    const auto b = oracle::random_graph(1 + (i * 3) % 8, rng);
    EXPECT_EQ(charpoly(disjoint_union(a, b)), charpoly(a) * charpoly(b));
  }
}

TEST(Schur, ScalarCase) {
  const RationalMatrix m{{3, 2}, {5, 4}};
  const auto s = schur_complement(m, 1);
  ASSERT_EQ(s.rows(), 1U);
  EXPECT_EQ(s(0, 0), Rational(3) - Rational(2 * 5, 4));
}

TEST(Schur, BlockDiagonalReturnsLeadingBlock) {
  const RationalMatrix m{{1, 2, 0, 0}, {3, 4, 0, 0}, {0, 0, 5, 6}, {0, 0, 7, 9}};
  const auto s = schur_complement(m, 2);
  EXPECT_EQ(s, m.block(0, 0, 2, 2));
}

TEST(Schur, PyramidCharacteristicMatrixAtTwo) {
  const auto m = characteristic_matrix(T(6, 3), 2);
  const auto s = schur_complement(m, 3);
  RationalMatrix expected(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) expected(i, j) = (i == j ? Rational(3) : Rational(0)) - Rational(5, 2);
  EXPECT_EQ(s, expected);
  // the same form "(x+1) I - ((r+x)/x) J" at other rational points
  for (int x = 1; x <= 5; ++x) {
    const auto sx = schur_complement(characteristic_matrix(T(7, 3), x), 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_EQ(sx(i, j), (i == j ? Rational(x + 1) : Rational(0)) - Rational(4 + x, x));
  }
}

TEST(Schur, SingularTrailingBlockThrows) {
  const RationalMatrix m{{1, 2, 3}, {4, 1, 2}, {7, 2, 4}};
  EXPECT_THROW(schur_complement(m, 2), SingularMatrix);
  EXPECT_THROW(schur_complement(m, 0), ParameterError);
  EXPECT_THROW(schur_complement(m, 3), ParameterError);
  EXPECT_THROW(schur_complement(RationalMatrix(2, 3), 1), ParameterError);
}

TEST(Schur, IdentityExamples) {
  for (std::size_t split = 1; split < 5; ++split) {
    const auto r = verify_schur_identities(RationalMatrix::identity(5), split);
    EXPECT_TRUE(r.determinant_identity);
    EXPECT_TRUE(r.rank_identity);
  }
  const RationalMatrix m{{0, 1}, {1, 1}};
  EXPECT_EQ(m.determinant(), -1);
  EXPECT_EQ(schur_complement(m, 1)(0, 0), -1);
  EXPECT_TRUE(verify_schur_identities(m, 1).determinant_identity);
}

TEST(Schur, RandomMatricesAgainstLaplaceOracle) {
  std::mt19937_64 rng(25);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + i % 5;
    auto m = random_rational(n, rng);
    if (i % 4 == 0) {
      // make the leading rows dependent on the rest
      for (std::size_t j = 0; j < n; ++j) m(0, j) = m(n - 1, j) * Rational(2, 3);
    }
    const std::size_t split = 1 + i % (n - 1);
    const auto d = m.block(n - split, n - split, split, split);
    if (laplace_determinant(d) == 0) continue;
    const auto r = verify_schur_identities(m, split);
    EXPECT_TRUE(r.determinant_identity);
    EXPECT_TRUE(r.rank_identity);
    EXPECT_EQ(m.determinant(), laplace_determinant(m));
    const auto s = schur_complement(m, split);
    EXPECT_EQ(laplace_determinant(m), laplace_determinant(d) * laplace_determinant(s));
    if (n <= 5) {
      EXPECT_EQ(minor_rank(m), d.rank() + minor_rank(s));
    }
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST(Schur, InverseRoundTrip) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 40; ++i) {
    const auto m = random_rational(1 + i % 6, rng);
    if (laplace_determinant(m) == 0) {
      EXPECT_THROW((void)m.inverse(), SingularMatrix);
      continue;
    }
    EXPECT_EQ(m * m.inverse(), RationalMatrix::identity(m.rows()));
  }
}

TEST(QuadraticSurd, NormalForm) {
  const auto a = QuadraticSurd::make(0, 1, 8);  // 2 sqrt 2
  EXPECT_EQ(a, QuadraticSurd::make(0, 2, 2));
  EXPECT_EQ(a.radicand(), 2);
  EXPECT_EQ(QuadraticSurd::make(1, 1, 9), QuadraticSurd(4));
  EXPECT_TRUE(QuadraticSurd::make(3, 5, 0).is_rational());
  EXPECT_EQ(QuadraticSurd::make(Rational(1, 2), Rational(1, 2), 33).to_string(), "(1+sqrt(33))/2");
  EXPECT_EQ(QuadraticSurd::make(1, -1, 10).to_string(), "1-sqrt(10)");
  EXPECT_EQ(QuadraticSurd(Rational(-3, 4)).to_string(), "-3/4");
  EXPECT_NEAR(QuadraticSurd::make(Rational(1, 2), Rational(-1, 2), 33).value(), (1 - std::sqrt(33.0)) / 2, 1e-12);
  EXPECT_THROW(QuadraticSurd::make(0, 1, -2), ParameterError);
}

TEST(ClosedForm, PyramidExamples) {
  const auto t63 = closed_form_spectrum(FamilySpec::pyramid(6, 3));
  ASSERT_TRUE(t63);
  ClosedFormSpectrum expected;
  expected.add(QuadraticSurd::make(1, -1, 10));
  expected.add(QuadraticSurd(-1), 2);
  expected.add(QuadraticSurd(0), 2);
  expected.add(QuadraticSurd::make(1, 1, 10));
  EXPECT_EQ(*t63, expected);

  const auto t62 = closed_form_spectrum(FamilySpec::pyramid(6, 2));
  ASSERT_TRUE(t62);
  ClosedFormSpectrum tn;
  tn.add(QuadraticSurd::make(Rational(1, 2), Rational(-1, 2), 33));
  tn.add(QuadraticSurd(-1));
  tn.add(QuadraticSurd(0), 3);
  tn.add(QuadraticSurd::make(Rational(1, 2), Rational(1, 2), 33));
  EXPECT_EQ(*t62, tn);

  for (int n = 3; n <= 20; ++n)
    EXPECT_EQ(*closed_form_spectrum(FamilySpec::pyramid(n, 1)), *closed_form_spectrum(FamilySpec::star(n - 1)));
}

TEST(ClosedForm, ExpansionMatchesCharpoly) {
  for (int n = 1; n <= 30; ++n) {
    std::vector<FamilySpec> specs{FamilySpec::complete(n), FamilySpec::empty(n), FamilySpec::star(n),
                                  FamilySpec::path(n)};
    if (n >= 3) specs.push_back(FamilySpec::cycle(n));
    for (int k = 1; k < n; ++k) specs.push_back(FamilySpec::pyramid(n, k));
    for (int m = 1; m <= n && m + n <= 30; ++m) specs.push_back(FamilySpec::complete_bipartite(m, n));
    for (const auto& spec : specs) {
      const auto cf = closed_form_spectrum(spec);
      if (!cf) continue;
      const auto g = make_family(spec);
      EXPECT_EQ(cf->order(), g.order());
      EXPECT_EQ(cf->expand(), charpoly(g)) << family_name(spec.kind) << " " << n;
    }
  }
}

TEST(ClosedForm, PathsAndCyclesRefuseIrrationalCosines) {
  EXPECT_FALSE(closed_form_spectrum(FamilySpec::path(6)));
  EXPECT_FALSE(closed_form_spectrum(FamilySpec::cycle(7)));
  EXPECT_FALSE(closed_form_spectrum(FamilySpec::cycle(9)));
  for (int n : {4, 6}) EXPECT_TRUE(closed_form_spectrum(FamilySpec::cycle(n))) << n;
  for (int n : {1, 2, 3}) EXPECT_TRUE(closed_form_spectrum(FamilySpec::path(n))) << n;
  // C_4 = {-2, 0, 0, 2}
  ClosedFormSpectrum c4;
  c4.add(QuadraticSurd(-2));
  c4.add(QuadraticSurd(0), 2);
  c4.add(QuadraticSurd(2));
  EXPECT_EQ(*closed_form_spectrum(FamilySpec::cycle(4)), c4);
}

TEST(ClosedForm, UnpairedSurdCannotExpand) {
  ClosedFormSpectrum s;
  s.add(QuadraticSurd::make(0, 1, 2));
  EXPECT_THROW((void)s.expand(), ParameterError);
}

TEST(PyramidFactored, Examples) {
  const auto t63 = charpoly_pyramid_factored(6, 3);
  EXPECT_EQ(expand(t63), (IntPolynomial::monomial(2) * IntPolynomial{1, 1}.pow(2) * IntPolynomial{1, -2, -9}));
  ASSERT_EQ(t63.size(), 3U);
  EXPECT_EQ(t63[2].polynomial, (IntPolynomial{1, -2, -9}));
  for (int n = 2; n <= 12; ++n) {
    const auto star = charpoly_pyramid_factored(n, 1);
    EXPECT_EQ(expand(star), (IntPolynomial::monomial(n - 2) * IntPolynomial{1, 0, -(n - 1)}));
  }
  EXPECT_EQ(expand(charpoly_pyramid_factored(6, 2)), charpoly(T(6, 2)));
  EXPECT_THROW(charpoly_pyramid_factored(4, 4), ParameterError);
}

TEST(PyramidFactored, AgreesWithCharpolyUpToThirty) {
  for (int n = 2; n <= 30; ++n)
    for (int k = 1; k < n; ++k) EXPECT_EQ(expand(charpoly_pyramid_factored(n, k)), charpoly(T(n, k))) << n << "," << k;
}

TEST(Cospectral, Examples) {
  EXPECT_TRUE(are_cospectral(S(4), disjoint_union(C(4), K(1))));
  EXPECT_FALSE(are_cospectral(K(3), P(3)));
  EXPECT_FALSE(are_cospectral(K(3), K(4)));
  std::mt19937_64 rng(27);
  const auto g = oracle::random_graph(9, rng);
  EXPECT_TRUE(are_cospectral(g, g));
  EXPECT_TRUE(are_cospectral(g, permute(g, oracle::random_permutation(9, rng))));
}

TEST(EdgesAndTriangles, Examples) {
  auto check = [](const Graph& g, int edges, int triangles) {
    const auto c = edges_and_triangles(charpoly(g));
    EXPECT_EQ(c.edges, edges);
    EXPECT_EQ(c.triangles, triangles);
  };
  check(K(3), 3, 1);
  check(S(4), 4, 0);
  check(T(6, 3), 12, 10);
  check(K(1), 0, 0);
}

TEST(EdgesAndTriangles, MatchDirectCounts) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(1 + i % 14, rng);
    const auto c = edges_and_triangles(charpoly(g));
    EXPECT_EQ(c.edges, g.edge_count());
    EXPECT_EQ(c.triangles, triangle_count(g));
  }
}

TEST(EdgesAndTriangles, RejectsNonGraphPolynomials) {
  EXPECT_THROW(edges_and_triangles(IntPolynomial{2, 0, -1}), NotGraphPolynomial);
  EXPECT_THROW(edges_and_triangles(IntPolynomial{1, 1, -1}), NotGraphPolynomial);
  EXPECT_THROW(edges_and_triangles(IntPolynomial{1, 0, 1}), NotGraphPolynomial);
  EXPECT_THROW(edges_and_triangles(IntPolynomial{1, 0, -3, -1}), NotGraphPolynomial);
  EXPECT_THROW(edges_and_triangles(IntPolynomial{1, 0, -3, 2}), NotGraphPolynomial);
}

TEST(Cospectral, ClassMembersShareInvariants) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto report = cospectral_classes(n);
    for (const auto& cls : report.nontrivial_classes) {
      const auto& first = cls.members.front();
      for (const auto& g : cls.members) {
        EXPECT_EQ(g.edge_count(), first.edge_count());
        EXPECT_EQ(triangle_count(g), triangle_count(first));
        EXPECT_EQ(is_bipartite(g).has_value(), is_bipartite(first).has_value());
        EXPECT_TRUE(are_cospectral(g, first));
      }
    }
  }
}
