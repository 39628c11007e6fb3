#pragma once

// Named algebras: C2/C3 families, the Grassmann algebra G2 with three gradings
// and three superinvolutions, the W family, and the N_m / U_m subalgebras of
// UT_{2m} with the reflection superinvolution. Structure constants are always
// generated from matrices or from exterior-algebra relations.

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pistar/star_algebra.hpp"

namespace pistar {

/// Square matrix of size n stored row-major as a flat rational vector.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }
  /// Elementary matrix e_{ij}; indices are 1-based.
  static SquareMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    SquareMatrix m(n);
    m.at(i, j) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return entries_.at((i - 1) * n_ + (j - 1)); }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_.at((i - 1) * n_ + (j - 1)); }
  const RatVector& flat() const { return entries_; }

  SquareMatrix operator+(const SquareMatrix& o) const {
    SquareMatrix m(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + o.entries_[k];
    return m;
  }
  SquareMatrix operator-(const SquareMatrix& o) const {
    SquareMatrix m(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - o.entries_[k];
    return m;
  }
  SquareMatrix operator*(const SquareMatrix& o) const {
    SquareMatrix m(n_);
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t k = 1; k <= n_; ++k) {
        if (at(i, k) == 0) continue;
        for (std::size_t j = 1; j <= n_; ++j)
          if (o.at(k, j) != 0) m.at(i, j) += at(i, k) * o.at(k, j);
      }
    return m;
  }

  /// Reflection across the secondary diagonal: e_{ij} -> e_{n-j+1, n-i+1}.
  SquareMatrix reflected() const {
    SquareMatrix m(n_);
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = 1; j <= n_; ++j) m.at(n_ - j + 1, n_ - i + 1) = at(i, j);
    return m;
  }

 private:
  std::size_t n_;
  RatVector entries_;
};

inline SquareMatrix e(std::size_t n, std::size_t i, std::size_t j) { return SquareMatrix::unit(n, i, j); }

/// Parity of a matrix under the elementary grading induced by `g`; -1 when not homogeneous.
inline int elementary_parity(const SquareMatrix& m, const std::vector<int>& g) {
  int p = -1;
  for (std::size_t i = 1; i <= m.size(); ++i)
    for (std::size_t j = 1; j <= m.size(); ++j) {
      if (m.at(i, j) == 0) continue;
      int q = (g.at(i - 1) + g.at(j - 1)) % 2;
      if (p == -1) p = q;
      else if (p != q) return -1;
    }
  return p == -1 ? 0 : p;
}

/// Builds a *-algebra on the span of `basis` (a subalgebra of M_n). `star_image` maps a
/// basis matrix to the matrix of its image; the span must be closed under both operations.
inline StarAlgebra from_matrix_span(std::string name, const std::vector<std::string>& labels,
                                    const std::vector<SquareMatrix>& basis, std::vector<int> grading,
                                    const std::function<SquareMatrix(std::size_t)>& star_image) {
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().size();
  std::vector<RatVector> rows;
  for (const auto& b : basis) rows.push_back(b.flat());
  const RatMatrix span = RatMatrix::from_rows(rows);
  auto coords = [&](const SquareMatrix& m, const char* what) {
    auto c = coordinates_in(span, m.flat());
    if (!c) throw Error(name + ": span is not closed under " + what);
    return *c;
  };
  std::vector<std::vector<SparseVector>> mult(d, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mult[i][j] = to_sparse(coords(basis[i] * basis[j], "products"));
  RatMatrix inv(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto img = coords(star_image(i), "the involution");
    for (std::size_t r = 0; r < d; ++r) inv(r, i) = img[r];
  }
  std::optional<RatVector> unit;
  if (auto u = coordinates_in(span, SquareMatrix::identity(n).flat())) unit = *u;
  return StarAlgebra(std::move(name), labels, std::move(grading), std::move(mult), std::move(inv),
                     std::move(unit));
}

/// Involution acting diagonally on the given basis with the given signs.
inline std::function<SquareMatrix(std::size_t)> diagonal_involution(const std::vector<SquareMatrix>& basis,
                                                                     std::vector<int> signs) {
  return [basis, signs](std::size_t i) {
    SquareMatrix m(basis[i].size());
    return signs.at(i) > 0 ? basis[i] : m - basis[i];
  };
}

/// Exterior algebra on k generators, basis indexed by subsets (bit masks) in
/// order of increasing mask. `gen_parity` gives the Z2-degree of each generator
/// and `gen_sign` the involution sign on it; the involution is extended to products
/// by (xy)* = (-1)^{|x||y|} y* x*.
inline StarAlgebra grassmann(std::string name, std::size_t k, const std::vector<int>& gen_parity,
                             const std::vector<int>& gen_sign) {
  const std::size_t d = std::size_t{1} << k;
  std::vector<std::string> labels(d);
  std::vector<int> grading(d);
  for (std::size_t mask = 0; mask < d; ++mask) {
    std::string l;
    int p = 0;
    for (std::size_t g = 0; g < k; ++g)
      if (mask >> g & 1) {
        l += "e" + std::to_string(g + 1);
        p += gen_parity.at(g);
      }
    labels[mask] = l.empty() ? "1" : l;
    grading[mask] = p % 2;
  }
  auto sign_of_product = [](std::size_t a, std::size_t b) {
    // Each generator in a must pass every smaller generator in b.
    int swaps = 0;
    for (std::size_t g = 0; g < 64 && (a >> g); ++g)
      if (a >> g & 1) swaps += __builtin_popcountll(b & ((std::size_t{1} << g) - 1));
    return swaps % 2 ? -1 : 1;
  };
  std::vector<std::vector<SparseVector>> mult(d, std::vector<SparseVector>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if ((a & b) == 0) mult[a][b] = {{a | b, Rational(sign_of_product(a, b))}};
  StarAlgebra tmp(name, labels, grading, mult, RatMatrix::identity(d), basis_vector(d, 0));
  // star(e_S) by induction on |S|: (x e_g)* = (-1)^{|x||e_g|} e_g* x*.
  std::vector<RatVector> image(d);
  image[0] = basis_vector(d, 0);
  for (std::size_t mask = 1; mask < d; ++mask) {
    std::size_t top = 63 - static_cast<std::size_t>(__builtin_clzll(mask));
    std::size_t gen = std::size_t{1} << top, rest = mask ^ gen;
    if (rest == 0) {
      image[mask] = basis_vector(d, mask);
      if (gen_sign.at(top) < 0) image[mask][mask] = -1;
      continue;
    }
    // e_mask = e_rest * e_gen with sign +1, since gen is the largest generator.
    auto prod = multiply(tmp, image[gen], image[rest]);
    if (grading[rest] * grading[gen] == 1)
      for (auto& x : prod) x = -x;
    image[mask] = prod;
  }
  RatMatrix inv(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) inv(r, c) = image[c][r];
  return StarAlgebra(std::move(name), std::move(labels), std::move(grading), std::move(mult),
                     std::move(inv), basis_vector(d, 0));
}

enum class NUKind { N, U };

/// N_m or U_m inside UT_{2m} with the reflection superinvolution. An empty
/// `parities` selects the trivial grading; otherwise it is the elementary
/// grading tuple (length 2m) and must satisfy g_1+g_n = g_2+g_{n-1} = ...
inline StarAlgebra make_NU(std::size_t m, NUKind kind, const std::vector<int>& parities = {},
                           std::string name = "") {
  if (m < 2) throw Error("make_NU: m must be at least 2");
  const std::size_t n = 2 * m;
  if (!parities.empty()) {
    if (parities.size() != n) throw Error("make_NU: parity tuple must have length 2m");
    for (int g : parities)
      if (g != 0 && g != 1) throw Error("make_NU: parity tuple entries must be 0 or 1");
    const int s = (parities[0] + parities[n - 1]) % 2;
    for (std::size_t i = 0; i < n; ++i)
      if ((parities[i] + parities[n - 1 - i]) % 2 != s)
        throw Error("make_NU: parity tuple violates g_1+g_n = g_2+g_{n-1} = ...");
  }
  if (name.empty()) name = std::string(kind == NUKind::N ? "N" : "U") + std::to_string(m);

  SquareMatrix big_e(n);
  for (std::size_t i = 2; i <= m - 1; ++i)
    big_e = big_e + e(n, i, i + 1) + e(n, n - i, n - i + 1);
  std::vector<SquareMatrix> basis;
  std::vector<std::string> labels;
  SquareMatrix power = SquareMatrix::identity(n);
  for (std::size_t k = 0; k + 2 <= m; ++k) {
    basis.push_back(power);
    labels.push_back(k == 0 ? "I" : k == 1 ? "E" : "E^" + std::to_string(k));
    power = power * big_e;
  }
  const std::string mid = "e" + std::to_string(n - 1) + std::to_string(n);
  if (kind == NUKind::N) {
    basis.push_back(e(n, 1, 2) - e(n, n - 1, n));
    labels.push_back("e12-" + mid);
  } else {
    basis.push_back(e(n, 1, 2) + e(n, n - 1, n));
    labels.push_back("e12+" + mid);
  }
  for (std::size_t j = 3; j <= m; ++j) {
    basis.push_back(e(n, 1, j));
    labels.push_back("e1" + std::to_string(j));
  }
  for (std::size_t i = m + 1; i <= n - 2; ++i) {
    basis.push_back(e(n, i, n));
    labels.push_back("e" + std::to_string(i) + std::to_string(n));
  }
  std::vector<int> grading(basis.size(), 0);
  if (!parities.empty())
    for (std::size_t i = 0; i < basis.size(); ++i) {
      grading[i] = elementary_parity(basis[i], parities);
      if (grading[i] < 0) throw Error(name + ": basis element " + labels[i] + " is not homogeneous");
    }
  return from_matrix_span(std::move(name), labels, basis, std::move(grading),
                          [&basis](std::size_t i) { return basis[i].reflected(); });
}

namespace detail {

inline StarAlgebra make_c2(std::string name, bool graded, int sign_b) {
  std::vector<SquareMatrix> basis = {SquareMatrix::identity(2), e(2, 1, 2)};
  return from_matrix_span(std::move(name), {"1", "e12"}, basis, {0, graded ? 1 : 0},
                          diagonal_involution(basis, {1, sign_b}));
}

inline StarAlgebra make_c3(std::string name, bool graded, int sign_b, int sign_c) {
  std::vector<SquareMatrix> basis = {SquareMatrix::identity(3), e(3, 1, 2) + e(3, 2, 3), e(3, 1, 3)};
  return from_matrix_span(std::move(name), {"1", "e12+e23", "e13"}, basis, {0, graded ? 1 : 0, 0},
                          diagonal_involution(basis, {1, sign_b, sign_c}));
}

// W inside UT_4 with coordinates (a, b, c, d) on {I, e12+e34, e13+e24, e14}.
inline StarAlgebra make_w(std::string name, std::vector<int> grading, std::vector<int> signs) {
  std::vector<SquareMatrix> basis = {SquareMatrix::identity(4), e(4, 1, 2) + e(4, 3, 4),
                                     e(4, 1, 3) + e(4, 2, 4), e(4, 1, 4)};
  return from_matrix_span(std::move(name), {"1", "e12+e34", "e13+e24", "e14"}, basis,
                          std::move(grading), diagonal_involution(basis, std::move(signs)));
}

// Generator parities for the gradings of G2: trivial, gr = (F1+Fe1e2, Fe1+Fe2),
// gri = (F1+Fe1, Fe2+Fe1e2).
inline std::vector<int> g2_grading(const std::string& g) {
  if (g == "trivial") return {0, 0};
  if (g == "gr") return {1, 1};
  return {0, 1};
}

// psi(e_i) = e_i, tau(e_i) = -e_i, gamma(e_i) = (-1)^i e_i.
inline std::vector<int> g2_involution(const std::string& s) {
  if (s == "psi") return {1, 1};
  if (s == "tau") return {-1, -1};
  return {-1, 1};
}

inline StarAlgebra make_g2(std::string name, const std::string& grading, const std::string& inv) {
  return grassmann(std::move(name), 2, g2_grading(grading), g2_involution(inv));
}

inline const std::vector<std::pair<std::string, std::function<StarAlgebra()>>>& catalog_table() {
  static const std::vector<std::pair<std::string, std::function<StarAlgebra()>>> table = {
      {"F",
       [] {
         return StarAlgebra("F", {"1"}, {0}, {{SparseVector{{0, Rational(1)}}}}, RatMatrix::identity(1),
                            RatVector{Rational(1)});
       }},
      {"C2_star", [] { return make_c2("C2_star", false, -1); }},
      {"C2_gr", [] { return make_c2("C2_gr", true, 1); }},
      {"C2_star_gr", [] { return make_c2("C2_star_gr", true, -1); }},
      // i1: (b, c) -> (b, -c); i2: (-b, c); i3: (-b, -c).
      {"C3_i2", [] { return make_c3("C3_i2", false, -1, 1); }},
      {"C3_i1_gr", [] { return make_c3("C3_i1_gr", true, 1, -1); }},
      {"C3_i3_gr", [] { return make_c3("C3_i3_gr", true, -1, -1); }},
      {"G2_tau", [] { return make_g2("G2_tau", "trivial", "tau"); }},
      {"G2_psi_gr", [] { return make_g2("G2_psi_gr", "gr", "psi"); }},
      {"G2_tau_gr", [] { return make_g2("G2_tau_gr", "gr", "tau"); }},
      {"G2_gamma_gr", [] { return make_g2("G2_gamma_gr", "gr", "gamma"); }},
      {"G2_tau_gri", [] { return make_g2("G2_tau_gri", "gri", "tau"); }},
      {"G2_gamma_gri", [] { return make_g2("G2_gamma_gri", "gri", "gamma"); }},
      // eta1: (b, c, d) -> (-b, c, -d); eta2: (-b, c, d); eta3: (-b, -c, d).
      {"W_eta2_gr", [] { return make_w("W_eta2_gr", {0, 1, 1, 0}, {1, -1, 1, 1}); }},
      {"W_eta1_gri", [] { return make_w("W_eta1_gri", {0, 0, 1, 1}, {1, -1, 1, -1}); }},
      {"W_eta3_gri", [] { return make_w("W_eta3_gri", {0, 0, 1, 1}, {1, -1, -1, 1}); }},
      {"N3_star", [] { return make_NU(3, NUKind::N, {}, "N3_star"); }},
      {"U3_star", [] { return make_NU(3, NUKind::U, {}, "U3_star"); }},
      {"N3_gri", [] { return make_NU(3, NUKind::N, {0, 1, 1, 0, 0, 1}, "N3_gri"); }},
      {"U3_gri", [] { return make_NU(3, NUKind::U, {0, 1, 1, 0, 0, 1}, "U3_gri"); }},
  };
  return table;
}

}  // namespace detail

inline std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, f] : detail::catalog_table()) keys.push_back(k);
  return keys;
}

inline StarAlgebra catalog(const std::string& key) {
  for (const auto& [k, f] : detail::catalog_table())
    if (k == key) return f();
  throw Error("unknown catalog key '" + key + "'");
}

/// Catalog key or '+'-separated list of keys, e.g. "G2_gamma_gri+W_eta1_gri".
inline StarAlgebra catalog_sum(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, '+');) {
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    if (part.empty()) throw Error("empty summand in '" + spec + "'");
    parts.push_back(part);
  }
  if (parts.empty()) throw Error("empty algebra specification");
  StarAlgebra out = catalog(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, catalog(parts[i]));
  return out;
}

inline StarAlgebra direct_sum_of(const std::vector<StarAlgebra>& parts) {
  if (parts.empty()) throw Error("direct_sum_of: empty list");
  StarAlgebra out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

}  // namespace pistar
