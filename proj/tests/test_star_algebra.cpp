#include <gtest/gtest.h>

#include "pistar/algebra_json.hpp"
#include "pistar/cocharacter.hpp"

using namespace pistar;

namespace {

std::array<std::size_t, 4> dims_of(const std::string& key) { return components(catalog(key)).dims(); }

RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// True when the structure constants of a and b agree after sending basis i of a to perm[i] of b.
bool same_structure(const StarAlgebra& a, const StarAlgebra& b, const std::vector<std::size_t>& perm) {
  const std::size_t d = a.dim();
  if (b.dim() != d) return false;
  auto moved = [&](const SparseVector& v) {
    RatVector out(d);
    for (const auto& [k, x] : v) out[perm[k]] += x;
    return out;
  };
  for (std::size_t i = 0; i < d; ++i) {
    if (a.parity(i) != b.parity(perm[i])) return false;
    for (std::size_t j = 0; j < d; ++j)
      if (moved(a.product(i, j)) != to_dense(b.product(perm[i], perm[j]), d)) return false;
    for (std::size_t r = 0; r < d; ++r)
      if (a.involution()(r, i) != b.involution()(perm[r], perm[i])) return false;
  }
  return true;
}

std::vector<Signature> signatures_up_to(int n) {
  std::vector<Signature> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& s : signatures_of_degree(k)) out.push_back(s);
  return out;
}

RowSpace space_of(const RatMatrix& m) {
  RowSpace s(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  return s;
}

// Coordinates of f with the 0+ variable `v` replaced by 1, in the basis of the smaller signature.
RatVector drop_variable(std::span<const Rational> coords, const Signature& sig, int v) {
  Signature smaller = sig;
  --smaller.counts[0];
  const Polynomial f = polynomial_from_coordinates(coords, sig);
  Polynomial g;
  for (const auto& [w, c] : f.terms()) {
    Word u;
    for (int x : w)
      if (x != v) u.push_back(x > v ? x - 1 : x);
    g.add_term(u, c);
  }
  const auto types = smaller.variable_types();
  for (std::size_t i = 0; i < types.size(); ++i) g.declare(static_cast<int>(i + 1), types[i]);
  return monomial_coordinates(g, smaller);
}

// Rows spanning Id(A) intersected with the proper polynomials of the signature.
std::vector<RatVector> proper_identities(const Evaluator& ev, const Signature& sig) {
  const RatMatrix ids = ev.identity_space(sig);
  if (ids.rows() == 0) return {};
  const int n0 = sig.counts[0];
  if (n0 == 0) return ids.row_vectors();
  // Columns: images of each identity under every "x_v = 1" map.
  std::vector<RatVector> images(ids.rows());
  for (std::size_t r = 0; r < ids.rows(); ++r)
    for (int v = 1; v <= n0; ++v) {
      auto img = drop_variable(ids.row(r), sig, v);
      images[r].insert(images[r].end(), img.begin(), img.end());
    }
  const RatMatrix k = kernel_basis(RatMatrix::from_rows(images).transpose());
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    RatVector f(ids.cols());
    for (std::size_t i = 0; i < ids.rows(); ++i)
      for (std::size_t c = 0; c < ids.cols(); ++c) f[c] += k(r, i) * ids(i, c);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST(Validate, CatalogC2StarIsValid) { EXPECT_TRUE(validate(catalog("C2_star")).empty()); }
TEST(Validate, TrivialFieldIsValid) { EXPECT_TRUE(validate(catalog("F")).empty()); }

TEST(Validate, DetectsDeliberateAxiomBreaker) {
  const auto broken = load_algebra_file(PISTAR_SAMPLES_DIR "/algebras/broken_c2.json");
  const auto v = validate(broken);
  ASSERT_FALSE(v.empty());
  bool sign_rule = false;
  for (const auto& x : v) sign_rule |= x.axiom == "sign-rule";
  EXPECT_TRUE(sign_rule);
  EXPECT_THROW(components(broken), Error);
}

TEST(Validate, DetectsNonAssociativeProduct) {
  // e1 e1 = e2, e2 e1 = e1, everything else zero: (e1 e1) e1 = e1 but e1 (e1 e1) = 0.
  std::vector<std::vector<SparseVector>> mult(2, std::vector<SparseVector>(2));
  mult[0][0] = {{1, Rational(1)}};
  mult[1][0] = {{0, Rational(1)}};
  StarAlgebra a("bad", {"e1", "e2"}, {0, 0}, mult, RatMatrix::identity(2), std::nullopt);
  const auto v = validate(a);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().axiom, "associativity");
}

TEST(Components, Examples) {
  EXPECT_EQ(dims_of("W_eta2_gr"), (std::array<std::size_t, 4>{2, 0, 1, 1}));
  EXPECT_EQ(dims_of("C2_star"), (std::array<std::size_t, 4>{1, 1, 0, 0}));
  EXPECT_EQ(dims_of("F"), (std::array<std::size_t, 4>{1, 0, 0, 0}));
}

TEST(Multiply, SquareOfStrictlyUpperElementInC3) {
  const auto c3 = catalog("C3_i2");  // basis 1, e12+e23, e13
  EXPECT_EQ(multiply(c3, basis_vector(3, 1), basis_vector(3, 1)), basis_vector(3, 2));
  const RatVector v = vec({2, -1, 5});
  EXPECT_EQ(multiply(c3, *c3.unit(), v), v);
  EXPECT_EQ(multiply(c3, RatVector(3), v), RatVector(3));
  EXPECT_THROW(multiply(c3, vec({1, 0}), v), Error);
}

TEST(Star, Examples) {
  const auto c2 = catalog("C2_star");
  EXPECT_EQ(star(c2, basis_vector(2, 1)), vec({0, -1}));
  EXPECT_EQ(star(c2, *c2.unit()), *c2.unit());
  const auto g = catalog("G2_gamma_gr");
  EXPECT_EQ(g.basis()[1], "e1");
  EXPECT_EQ(star(g, basis_vector(4, 1)), vec({0, -1, 0, 0}));
}

TEST(DirectSum, DimensionAndUnit) {
  const auto a = catalog("G2_gamma_gri"), b = catalog("W_eta1_gri");
  const auto s = direct_sum(a, b);
  EXPECT_EQ(s.dim(), a.dim() + b.dim());
  EXPECT_TRUE(validate(s).empty());
  ASSERT_TRUE(s.unitary());
  const auto nonunital = direct_sum(a, restrict_to(catalog("C3_i2"), RatMatrix::from_rows({vec({0, 0, 1})}), "J"));
  EXPECT_FALSE(nonunital.unitary());
}

TEST(DirectSum, IdentitiesAreTheIntersection) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"G2_gamma_gri", "W_eta1_gri"}, {"G2_gamma_gr", "W_eta2_gr"}, {"G2_tau_gri", "W_eta3_gri"},
      {"N3_gri", "C3_i2"},           {"C2_star", "C2_gr"},         {"U3_star", "G2_tau"}};
  for (const auto& [ka, kb] : pairs) {
    const Evaluator ea(catalog(ka)), eb(catalog(kb)), es(direct_sum(catalog(ka), catalog(kb)));
    for (const auto& sig : signatures_up_to(3)) {
      const auto ia = ea.identity_space(sig), ib = eb.identity_space(sig), is = es.identity_space(sig);
      const auto sa = space_of(ia), sb = space_of(ib);
      for (std::size_t r = 0; r < is.rows(); ++r) {
        EXPECT_TRUE(sa.contains(is.row(r))) << ka << "+" << kb << " " << sig.str();
        EXPECT_TRUE(sb.contains(is.row(r))) << ka << "+" << kb << " " << sig.str();
      }
      auto sum = sa;
      for (std::size_t r = 0; r < ib.rows(); ++r) sum.insert(ib.row(r));
      EXPECT_EQ(is.rows(), ia.rows() + ib.rows() - sum.dim()) << ka << "+" << kb << " " << sig.str();
    }
  }
}

TEST(Unitarize, NilpotentSkewLineBecomesC2Star) {
  std::vector<std::vector<SparseVector>> mult(1, std::vector<SparseVector>(1));
  RatMatrix inv(1, 1);
  inv(0, 0) = -1;
  const StarAlgebra line("a", {"a"}, {0}, mult, inv, std::nullopt);
  ASSERT_TRUE(validate(line).empty());
  const auto u = unitarize(line);
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_TRUE(same_structure(u, catalog("C2_star"), {1, 0}));
}

TEST(Unitarize, UnitIsEvenSymmetricAndAxiomsHold) {
  for (const auto& key : catalog_keys()) {
    const auto u = unitarize(catalog(key));
    EXPECT_TRUE(validate(u).empty()) << key;
    ASSERT_TRUE(u.unitary());
    EXPECT_EQ(star(u, *u.unit()), *u.unit());
    EXPECT_EQ(u.parity(u.dim() - 1), 0);
  }
}

TEST(Unitarize, ProperIdentitiesSurvive) {
  for (const auto& key : catalog_keys()) {
    const auto a = catalog(key);
    if (!a.unitary()) continue;
    const Evaluator ea(a), eu(unitarize(a));
    for (const auto& sig : signatures_up_to(3)) {
      const auto proper = proper_identities(ea, sig);
      if (proper.empty()) continue;
      const auto iu = space_of(eu.identity_space(sig));
      for (const auto& f : proper) EXPECT_TRUE(iu.contains(f)) << key << " " << sig.str();
    }
  }
}

TEST(Unitarize, ProperIdentitySpansMatchTheSpanningSets) {
  // Degree <= 2: the proper identities found by substitution lie in the span of the
  // tabulated proper polynomials, and that span has the complementary dimension.
  const auto a = catalog("W_eta2_gr");
  const Evaluator ev(a);
  for (const auto& sig : signatures_up_to(2)) {
    const auto proper_span = space_of(RatMatrix::from_rows(coordinates(proper_spanning_set(sig), sig),
                                                           detail::factorial_size(sig.degree())));
    for (const auto& f : proper_identities(ev, sig)) EXPECT_TRUE(proper_span.contains(f)) << sig.str();
  }
}

TEST(IdealClosure, Examples) {
  const auto c3 = catalog("C3_i2");
  EXPECT_EQ(ideal_closure(c3, {*c3.unit()}).rows(), 3u);
  EXPECT_EQ(ideal_closure(c3, {}).rows(), 0u);
  const RatVector a = basis_vector(3, 1);
  const RatVector a3 = multiply(c3, multiply(c3, a, a), a);
  EXPECT_EQ(ideal_closure(c3, {a3}).rows(), 0u);
  EXPECT_EQ(ideal_closure(c3, {a}).rows(), 2u);
}

TEST(SubalgebraClosure, Examples) {
  const auto c3 = catalog("C3_i2");
  const auto one = subalgebra_closure(c3, {}, true);
  EXPECT_EQ(one.rows(), 1u);
  EXPECT_TRUE(subspace_contains(one, *c3.unit()));
  const auto gen = subalgebra_closure(c3, {basis_vector(3, 1)}, true);
  EXPECT_EQ(gen.rows(), 3u);
  EXPECT_EQ(subalgebra_closure(c3, gen.row_vectors(), true), gen);
  EXPECT_THROW(subalgebra_closure(restrict_to(c3, RatMatrix::from_rows({vec({0, 0, 1})}), "J"), {}, true), Error);
}

TEST(Quotient, Trivial) {
  const auto w = catalog("W_eta2_gr");
  const auto same = quotient(w, RatMatrix(0, w.dim()));
  EXPECT_TRUE(same_structure(w, same, {0, 1, 2, 3}));
  const auto none = quotient(w, RatMatrix::identity(w.dim()));
  EXPECT_EQ(none.dim(), 0u);
}

TEST(Quotient, RejectsNonIdeals) {
  const auto c3 = catalog("C3_i2");
  EXPECT_THROW(quotient(c3, RatMatrix::from_rows({basis_vector(3, 1)})), Error);  // not closed
  const auto w = catalog("W_eta2_gr");
  EXPECT_THROW(quotient(w, RatMatrix::from_rows({vec({0, 1, 1, 0})})), Error);  // mixed parity
}

TEST(Quotient, RadicalSquareConstructionGivesG2Gamma) {
  // 1, a, b with a skew even, b symmetric odd, ab = -ba; divide out a^2 and b^2.
  const auto big = direct_sum(catalog("G2_gamma_gri"), catalog("C3_i2"));
  ASSERT_TRUE(validate(big).empty());
  RatVector a(big.dim()), b(big.dim());
  a[1] = 1;  // e1
  a[5] = 1;  // e12+e23
  b[2] = 1;  // e2
  const auto ab = multiply(big, a, b), ba = multiply(big, b, a);
  for (std::size_t i = 0; i < ab.size(); ++i) EXPECT_EQ(ab[i], -ba[i]);
  const auto r = restrict_to(big, subalgebra_closure(big, {a, b}, true), "R");
  EXPECT_EQ(r.dim(), 5u);
  ASSERT_TRUE(validate(r).empty());
  const auto r_sub = subalgebra_closure(big, {a, b}, true);
  auto in_r = [&](const RatVector& v) { return *coordinates_in(row_basis(r_sub), v); };
  const auto ideal = ideal_closure(r, {in_r(multiply(big, a, a)), in_r(multiply(big, b, b))});
  const auto q = quotient(r, ideal, "R/I");
  EXPECT_EQ(q.dim(), 4u);
  ASSERT_TRUE(validate(q).empty());
  const auto target = catalog("G2_gamma_gri");
  EXPECT_EQ(components(q).dims(), components(target).dims());
  EXPECT_EQ(codim_sequence(q, 5), codim_sequence(target, 5));
  EXPECT_EQ(cocharacter_table(q).nonzero(), cocharacter_table(target).nonzero());
}

TEST(MakeNU, Dimensions) {
  const std::vector<int> gri = {0, 1, 1, 0, 0, 1};
  for (auto kind : {NUKind::N, NUKind::U}) {
    for (const auto& par : {std::vector<int>{}, gri}) {
      const auto a = make_NU(3, kind, par);
      EXPECT_EQ(a.dim(), 5u);
      EXPECT_TRUE(validate(a).empty());
      // closed under product and the reflection: restricting to the full span is a no-op
      EXPECT_NO_THROW(restrict_to(a, RatMatrix::identity(5), "copy"));
    }
  }
  EXPECT_EQ(make_NU(3, NUKind::N).basis().size(), 5u);
  EXPECT_TRUE(validate(make_NU(2, NUKind::U)).empty());
}

TEST(MakeNU, Errors) {
  EXPECT_THROW(make_NU(1, NUKind::N), Error);
  EXPECT_THROW(make_NU(3, NUKind::N, {0, 1, 0, 0, 0, 0}), Error);
  EXPECT_THROW(make_NU(3, NUKind::N, {0, 1, 1}), Error);
}

TEST(Catalog, G2Tau) {
  const auto g = catalog("G2_tau");
  EXPECT_EQ(g.dim(), 4u);
  EXPECT_EQ(g.basis(), (std::vector<std::string>{"1", "e1", "e2", "e1e2"}));
  EXPECT_EQ(g.grading(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(star(g, basis_vector(4, 1)), vec({0, -1, 0, 0}));
  EXPECT_EQ(star(g, basis_vector(4, 2)), vec({0, 0, -1, 0}));
}

TEST(Catalog, WEta1Grading) {
  const auto w = catalog("W_eta1_gri");
  EXPECT_EQ(w.grading(), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(w.basis(), (std::vector<std::string>{"1", "e12+e34", "e13+e24", "e14"}));
}

TEST(Catalog, TrivialField) {
  const auto f = catalog("F");
  EXPECT_EQ(f.dim(), 1u);
  EXPECT_EQ(f.grading(), std::vector<int>{0});
  EXPECT_TRUE(f.unitary());
}

TEST(Catalog, UnknownKey) {
  EXPECT_THROW(catalog("C4"), Error);
  EXPECT_THROW(catalog_sum("C2_star+nope"), Error);
}

TEST(Catalog, EveryEntryIsValid) {
  const auto keys = catalog_keys();
  EXPECT_EQ(keys.size(), 20u);
  for (const auto& key : keys) {
    const auto a = catalog(key);
    EXPECT_TRUE(validate(a).empty()) << key;
    const auto d = components(a).dims();
    EXPECT_EQ(d[0] + d[1] + d[2] + d[3], a.dim()) << key;
    EXPECT_TRUE(a.unitary()) << key;
  }
}

TEST(AlgebraJson, RoundTripForEveryCatalogEntry) {
  for (const auto& key : catalog_keys()) {
    const auto a = catalog(key);
    const auto b = from_json(to_json(a));
    std::vector<std::size_t> id(a.dim());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    EXPECT_TRUE(same_structure(a, b, id)) << key;
    EXPECT_EQ(a.unit(), b.unit()) << key;
  }
}

TEST(AlgebraJson, SampleFileMatchesCatalog) {
  const auto a = load_algebra_file(PISTAR_SAMPLES_DIR "/algebras/c2_star.json");
  EXPECT_TRUE(same_structure(a, catalog("C2_star"), {0, 1}));
}

TEST(AlgebraJson, RejectsMalformedInput) {
  EXPECT_THROW(from_json(Json::parse(R"({"name":"x"})")), Error);
  EXPECT_THROW(from_json(Json::parse(
                   R"({"name":"x","dim":1,"basis":["1"],"grading":[0],"mult":[[0,3,[]]],"involution":[[0,[[0,"1"]]]]})")),
               Error);
  EXPECT_THROW(from_json(Json::parse(
                   R"({"name":"x","dim":1,"basis":["1"],"grading":[0],"mult":[],"involution":[]})")),
               Error);
  EXPECT_THROW(load_algebra_file("/nonexistent.json"), Error);
}
