#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pistar/exact.hpp"

using namespace pistar;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> rs;
  for (auto r : rows) {
    RatVector v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(v);
  }
  return RatMatrix::from_rows(rs);
}

// Textbook elimination over mpq, independent of the fraction-free code.
std::size_t naive_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> val(-spread, spread);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution sparse(0.4);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!sparse(rng)) {
        m(r, c) = Rational(val(rng), den(rng));
        m(r, c).canonicalize();
      }
  return m;
}

}  // namespace

TEST(Rank, EmptyMatrix) { EXPECT_EQ(rank(RatMatrix(0, 0)), 0u); }
TEST(Rank, Identity) { EXPECT_EQ(rank(RatMatrix::identity(3)), 3u); }
TEST(Rank, ProportionalRows) { EXPECT_EQ(rank(mat({{1, 2}, {2, 4}})), 1u); }

TEST(Rref, Scaling) {
  auto [m, piv] = rref(mat({{2, 4}}));
  EXPECT_EQ(m, mat({{1, 2}}));
  EXPECT_EQ(piv, std::vector<std::size_t>{0});
}

TEST(Rref, IdentityIsFixed) {
  auto [m, piv] = rref(RatMatrix::identity(4));
  EXPECT_EQ(m, RatMatrix::identity(4));
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Rref, ZeroMatrix) {
  auto [m, piv] = rref(RatMatrix(2, 3));
  EXPECT_EQ(m, RatMatrix(2, 3));
  EXPECT_TRUE(piv.empty());
}

TEST(Kernel, IdentityHasTrivialKernel) { EXPECT_EQ(kernel_basis(RatMatrix::identity(3)).rows(), 0u); }
TEST(Kernel, ZeroMatrixKernelIsEverything) { EXPECT_EQ(kernel_basis(RatMatrix(2, 3)).rows(), 3u); }

TEST(Kernel, SingleRow) {
  auto k = kernel_basis(mat({{1, 1}}));
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k(0, 0), -k(0, 1));
  EXPECT_NE(k(0, 0), 0);
}

TEST(SubspaceContains, Examples) {
  const auto span = mat({{1, 0}});
  EXPECT_TRUE(subspace_contains(span, RatVector{2, 0}));
  EXPECT_FALSE(subspace_contains(span, RatVector{0, 1}));
  EXPECT_TRUE(subspace_contains(RatMatrix(0, 2), RatVector{0, 0}));
  EXPECT_THROW(subspace_contains(span, RatVector{1, 0, 0}), Error);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_EQ(to_string(parse_rational("-2/4")), "-1/2");
}

TEST(PrimitiveInteger, ClearsDenominatorsAndContent) {
  RatVector v{Rational(-1, 2), Rational(3, 4), 0};
  auto p = primitive_integer(v);
  EXPECT_EQ(p, (IntVector{-2, 3, 0}));
  make_primitive(p);
  EXPECT_EQ(p, (IntVector{2, -3, 0}));
}

TEST(CoordinatesIn, RecoversCombination) {
  const auto basis = mat({{1, 0, 1}, {0, 1, 1}});
  auto c = coordinates_in(basis, RatVector{2, 3, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (RatVector{2, 3}));
  EXPECT_FALSE(coordinates_in(basis, RatVector{0, 0, 1}));
}

TEST(ExactProperties, RankMatchesNaiveOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 7, 1 + (trial / 7) % 8, 5);
    EXPECT_EQ(rank(m), naive_rank(m));
  }
}

TEST(ExactProperties, LargeEntriesStayExact) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix(rng, 6, 6, 1000000);
    for (std::size_t c = 0; c < 6; ++c) m(5, c) = m(0, c) * Rational(123456789, 7) - m(1, c) * Rational(987654321);
    EXPECT_EQ(rank(m), naive_rank(m));
    EXPECT_LE(rank(m), 5u);
  }
}

TEST(ExactProperties, RankOfTranspose) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 6, 1 + trial % 5, 3);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(ExactProperties, RankNullity) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 5, 1 + trial % 7, 3);
    const auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.rows(), m.cols());
    for (std::size_t r = 0; r < k.rows(); ++r) EXPECT_TRUE(is_zero(m.apply(k.row_vector(r))));
  }
}

TEST(ExactProperties, RrefIdempotent) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 6, 1 + trial % 6, 4);
    const auto once = rref(m);
    const auto twice = rref(once.matrix);
    EXPECT_EQ(once.matrix, twice.matrix);
    EXPECT_EQ(once.pivots, twice.pivots);
    EXPECT_EQ(once.pivots.size(), rank(m));
  }
}

TEST(ExactProperties, RowOrderDoesNotMatter) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 5, 6, 4);
    auto rows = m.row_vectors();
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto shuffled = RatMatrix::from_rows(rows);
    EXPECT_EQ(row_basis(m), row_basis(shuffled));
    RowSpace a(6), b(6);
    for (const auto& r : m.row_vectors()) a.insert(r);
    for (const auto& r : rows) b.insert(r);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_EQ(a.matrix(), row_basis(m));
  }
}
