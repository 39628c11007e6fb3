#include <gtest/gtest.h>

#include "pistar/catalog.hpp"
#include "pistar/evaluation.hpp"
#include "pistar/parser.hpp"
#include "random_poly.hpp"

using namespace pistar;
using pistar::test_support::random_polynomial;

namespace {

constexpr VarType k0p{0, false}, k0m{0, true}, k1p{1, false}, k1m{1, true};

Polynomial x(int i, VarType t) { return Polynomial::variable(i, t); }

Polynomial word(std::initializer_list<std::pair<int, VarType>> vs, Rational c = 1) {
  Polynomial p = Polynomial::constant(c);
  for (auto [i, t] : vs) p = p * x(i, t);
  return p;
}

// Random assignment of component vectors (small integer combinations of the basis).
std::map<int, RatVector> random_assignment(std::mt19937& rng, const StarAlgebra& a, const Polynomial& p) {
  const auto comps = components(a);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::map<int, RatVector> out;
  for (int v : p.variables()) {
    const auto& b = comps.basis[static_cast<std::size_t>(p.type_of(v).index())];
    RatVector val(a.dim());
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const int c = coef(rng);
      for (std::size_t k = 0; k < a.dim(); ++k) val[k] += c * b(r, k);
    }
    out[v] = val;
  }
  return out;
}

}  // namespace

TEST(StarFree, Examples) {
  EXPECT_EQ(star_free(word({{1, k0m}, {2, k0m}})), word({{2, k0m}, {1, k0m}}));
  EXPECT_EQ(star_free(word({{1, k1p}, {2, k1p}})), word({{2, k1p}, {1, k1p}}, -1));
  EXPECT_EQ(star_free(x(1, k0m)), x(1, k0m) * Rational(-1));
  EXPECT_EQ(star_free(word({{1, k1m}, {2, k1m}})), word({{2, k1m}, {1, k1m}}, -1));
  EXPECT_EQ(star_free(Polynomial::constant(3)), Polynomial::constant(3));
}

TEST(StarFree, InvolutiveAndLinear) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_polynomial(rng), q = random_polynomial(rng);
    EXPECT_EQ(star_free(star_free(p)), p);
    if ([&] {
          for (const auto& [v, t] : p.types())
            if (q.types().count(v) && !(q.types().at(v) == t)) return false;
          return true;
        }())
      EXPECT_EQ(star_free(p + q * Rational(2)), star_free(p) + star_free(q) * Rational(2));
  }
}

TEST(StarFree, ReversesProducts) {
  // (ab)* = (-1)^{|a||b|} b* a* on homogeneous monomials.
  std::mt19937 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_polynomial(rng, 2, true), b0 = random_polynomial(rng, 2, true);
    std::map<int, int> shift;
    for (int v : b0.variables()) shift[v] = v + 20;
    const auto b = rename_variables(b0, shift);
    int pa = 0, pb = 0;
    for (int v : a.variables()) pa += a.type_of(v).parity;
    for (int v : b.variables()) pb += b.type_of(v).parity;
    const Rational sign = (pa * pb) % 2 ? -1 : 1;
    EXPECT_EQ(star_free(a * b), star_free(b) * star_free(a) * sign);
  }
}

TEST(Signatures, CountAndOrder) {
  EXPECT_EQ(signatures_of_degree(0).size(), 1u);
  EXPECT_EQ(signatures_of_degree(2).size(), 10u);
  EXPECT_EQ(signatures_of_degree(5).size(), 56u);
  EXPECT_EQ(signatures_of_degree(3).front().str(), "(3,0,0,0)");
  EXPECT_EQ(signatures_of_degree(3).back().str(), "(0,0,0,3)");
  // multinomials over all signatures of degree n sum to 4^n
  for (int n = 0; n <= 5; ++n) {
    Integer total = 0;
    for (const auto& s : signatures_of_degree(n)) total += multinomial(s);
    Integer four = 1;
    for (int k = 0; k < n; ++k) four *= 4;
    EXPECT_EQ(total, four);
  }
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(1, 2), 0);
}

TEST(MultilinearBasis, Examples) {
  const auto b1 = multilinear_basis({{1, 0, 0, 0}});
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1[0], x(1, k0p));
  const auto b2 = multilinear_basis({{1, 1, 0, 0}});
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_EQ(b2[0], word({{1, k0p}, {2, k0m}}));
  EXPECT_EQ(b2[1], word({{2, k0m}, {1, k0p}}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : signatures_of_degree(n)) {
      const auto b = multilinear_basis(s);
      EXPECT_EQ(b.size(), factorial(n).get_ui());
      for (std::size_t i = 0; i < b.size(); ++i) {
        const auto c = monomial_coordinates(b[i], s);
        for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? 1 : 0);
      }
    }
}

TEST(Coordinates, RoundTrip) {
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto p = canonicalize_variables(random_polynomial(rng, 4, true));
    const auto sig = signature_of(p);
    EXPECT_EQ(polynomial_from_coordinates(monomial_coordinates(p, sig), sig), p);
  }
}

TEST(Evaluate, SkewElementOfC2Star) {
  const auto a = catalog("C2_star");
  EXPECT_EQ(evaluate(a, x(1, k0m), {{1, basis_vector(2, 1)}}), basis_vector(2, 1));
}

TEST(Evaluate, CommutatorOnN3Gri) {
  const auto a = catalog("N3_gri");  // I, E, e12-e56, e13, e46
  const auto v = evaluate(a, commutator(x(1, k0p), x(2, k1m)), {{1, basis_vector(5, 1)}, {2, basis_vector(5, 2)}});
  EXPECT_FALSE(is_zero(v));
}

TEST(Evaluate, ZeroPolynomialAndErrors) {
  const auto a = catalog("C2_star");
  EXPECT_EQ(evaluate(a, Polynomial(), {}), RatVector(2));
  EXPECT_THROW(evaluate(a, x(1, k0m), {}), Error);
  EXPECT_THROW(evaluate(a, x(1, k0m), {{1, basis_vector(2, 0)}}), Error);  // unit is symmetric
  EXPECT_THROW(evaluate(a, x(1, k0m), {{1, RatVector(3)}}), Error);
}

TEST(IsIdentity, Examples) {
  EXPECT_TRUE(is_identity(catalog("N3_gri"), x(1, k0m)));
  const auto w = catalog("W_eta2_gr");
  const auto chk = Evaluator(w).check_identity(word({{1, k1p}, {2, k1m}}));
  EXPECT_FALSE(chk.identity);
  ASSERT_TRUE(chk.witness);
  EXPECT_FALSE(is_zero(chk.witness->value));
  EXPECT_EQ(evaluate(w, word({{1, k1p}, {2, k1m}}), chk.witness->assignment), chk.witness->value);
  for (const auto& key : catalog_keys()) EXPECT_TRUE(is_identity(catalog(key), Polynomial())) << key;
  EXPECT_THROW(is_identity(w, x(1, k1p) * x(1, k1p)), Error);
}

TEST(IsIdentity, WitnessUsesOriginalIndices) {
  const auto w = catalog("W_eta2_gr");
  const auto chk = Evaluator(w).check_identity(word({{7, k1p}, {3, k1m}}));
  ASSERT_TRUE(chk.witness);
  EXPECT_EQ(chk.witness->assignment.size(), 2u);
  EXPECT_TRUE(chk.witness->assignment.count(7));
  EXPECT_TRUE(chk.witness->assignment.count(3));
}

TEST(EvaluateProperties, MultilinearInEachSlot) {
  std::mt19937 rng(9);
  for (const char* key : {"W_eta2_gr", "N3_gri", "G2_gamma_gri", "C3_i1_gr"}) {
    const auto a = catalog(key);
    for (int i = 0; i < 30; ++i) {
      const auto p = random_polynomial(rng, 3, true);
      if (p.is_zero()) continue;
      auto u = random_assignment(rng, a, p), v = random_assignment(rng, a, p);
      const int slot = p.variables().front();
      auto mixed = u;
      for (std::size_t k = 0; k < a.dim(); ++k) mixed[slot][k] = u[slot][k] + 3 * v[slot][k];
      auto only_v = u;
      only_v[slot] = v[slot];
      const auto lhs = evaluate(a, p, mixed), e1 = evaluate(a, p, u), e2 = evaluate(a, p, only_v);
      for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_EQ(lhs[k], e1[k] + 3 * e2[k]) << key;
    }
  }
}

TEST(EvaluateProperties, CompatibleWithStar) {
  std::mt19937 rng(10);
  for (const auto& key : catalog_keys()) {
    const auto a = catalog(key);
    for (int i = 0; i < 10; ++i) {
      const auto p = random_polynomial(rng, 3, false);
      const auto lambda = random_assignment(rng, a, p);
      EXPECT_EQ(evaluate(a, star_free(p), lambda), star(a, evaluate(a, p, lambda))) << key << " " << print(p);
    }
  }
}

TEST(EvaluateProperties, RenamingInvariance) {
  std::mt19937 rng(12);
  for (const char* key : {"W_eta2_gr", "U3_gri", "G2_tau_gr", "C3_i3_gr"}) {
    const Evaluator ev(catalog(key));
    for (int i = 0; i < 40; ++i) {
      auto p = random_polynomial(rng, 3, true);
      // Scramble the indices.
      std::map<int, int> ren;
      int next = 30;
      for (int v : p.variables()) ren[v] = next--;
      const auto q = rename_variables(p, ren);
      EXPECT_EQ(ev.check_identity(p).identity, ev.check_identity(q).identity) << key << " " << print(p);
    }
  }
}
