#pragma once

// Multilinear fragment of the free associative algebra with superinvolution.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pistar/exact.hpp"

namespace pistar {

/// One of the four variable kinds 0+, 0-, 1+, 1- (parity, symmetric/skew).
struct VarType {
  int parity = 0;     // 0 or 1
  bool skew = false;  // sign '-'

  /// Position in the canonical block order 0+, 0-, 1+, 1-.
  constexpr int index() const { return 2 * parity + (skew ? 1 : 0); }
  static constexpr VarType from_index(int i) { return {i / 2, (i % 2) == 1}; }
  std::string str() const { return std::to_string(parity) + (skew ? "-" : "+"); }

  friend constexpr bool operator==(VarType a, VarType b) { return a.index() == b.index(); }
  friend constexpr bool operator<(VarType a, VarType b) { return a.index() < b.index(); }
};

inline constexpr std::array<VarType, 4> kVarTypes = {VarType{0, false}, VarType{0, true},
                                                     VarType{1, false}, VarType{1, true}};

/// Counts (n1, n2, n3, n4) of variables of types 0+, 0-, 1+, 1-.
struct Signature {
  std::array<int, 4> counts{};

  int degree() const { return counts[0] + counts[1] + counts[2] + counts[3]; }

  /// Canonical variable types for indices 1..n, blocks in order 0+, 0-, 1+, 1-.
  std::vector<VarType> variable_types() const {
    std::vector<VarType> out;
    for (int t = 0; t < 4; ++t)
      for (int k = 0; k < counts[t]; ++k) out.push_back(VarType::from_index(t));
    return out;
  }

  std::string str() const {
    return "(" + std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," +
           std::to_string(counts[2]) + "," + std::to_string(counts[3]) + ")";
  }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// All signatures of total degree n, lexicographically descending (so (n,0,0,0) first).
inline std::vector<Signature> signatures_of_degree(int n) {
  std::vector<Signature> out;
  for (int a = n; a >= 0; --a)
    for (int b = n - a; b >= 0; --b)
      for (int c = n - a - b; c >= 0; --c) out.push_back({{a, b, c, n - a - b - c}});
  return out;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Integer multinomial(const Signature& s) {
  Integer out = factorial(s.degree());
  for (int c : s.counts) out /= factorial(c);
  return out;
}

/// A monomial is the ordered list of its variable indices.
using Word = std::vector<int>;

/// Multilinear-capable polynomial: a finitely supported map Word -> Rational together
/// with the fixed type of every variable index that occurs.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial variable(int index, VarType t) {
    Polynomial p;
    p.types_[index] = t;
    p.terms_[Word{index}] = 1;
    return p;
  }
  static Polynomial constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_[Word{}] = c;
    return p;
  }

  const std::map<Word, Rational>& terms() const { return terms_; }
  const std::map<int, VarType>& types() const { return types_; }
  bool is_zero() const { return terms_.empty(); }

  VarType type_of(int index) const {
    auto it = types_.find(index);
    if (it == types_.end()) throw Error("variable x" + std::to_string(index) + " has no type");
    return it->second;
  }

  /// Declares the type of a variable; conflicting declarations are an error.
  void declare(int index, VarType t) {
    auto [it, inserted] = types_.emplace(index, t);
    if (!inserted && !(it->second == t))
      throw Error("inconsistent type for x" + std::to_string(index) + ": " + it->second.str() +
                  " vs " + t.str());
  }

  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto& slot = terms_[w];
    slot += c;
    if (slot == 0) terms_.erase(w);
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [i, t] : o.types_) declare(i, t);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += o * Rational(-1); }
  Polynomial operator*(const Rational& c) const {
    Polynomial p;
    p.types_ = types_;
    if (c != 0)
      for (const auto& [w, x] : terms_) p.terms_[w] = x * c;
    return p;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  /// Concatenation product; a variable may appear twice only if its type agrees.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    p.types_ = a.types_;
    for (const auto& [i, t] : b.types_) p.declare(i, t);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        p.add_term(w, ca * cb);
      }
    return p;
  }

  /// Equality of the term maps and of the types of variables that occur in some term.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_ != b.terms_) return false;
    for (const auto& [w, c] : a.terms_)
      for (int i : w)
        if (!(a.type_of(i) == b.type_of(i))) return false;
    return true;
  }

  /// Sorted indices of variables occurring in some term.
  std::vector<int> variables() const {
    std::vector<int> out;
    for (const auto& [w, c] : terms_) out.insert(out.end(), w.begin(), w.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Every term contains each of `variables()` exactly once.
  bool is_multilinear() const {
    auto vars = variables();
    for (const auto& [w, c] : terms_) {
      Word s = w;
      std::sort(s.begin(), s.end());
      if (s != vars) return false;
    }
    return true;
  }

  int degree() const { return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size()); }

  /// Restricts the type table to the variables that occur.
  Polynomial pruned() const {
    Polynomial p;
    p.terms_ = terms_;
    for (int i : variables()) p.types_[i] = type_of(i);
    return p;
  }

 private:
  std::map<int, VarType> types_;
  std::map<Word, Rational> terms_;
};

inline Polynomial commutator(const Polynomial& a, const Polynomial& b) { return a * b - b * a; }
inline Polynomial jordan(const Polynomial& a, const Polynomial& b) { return a * b + b * a; }

/// The free superinvolution: w_1...w_k -> eps * s(w_k)...s(w_1), where s flips the sign of
/// skew variables and eps = (-1)^{t(t-1)/2} for t odd variables in the word.
inline Polynomial star_free(const Polynomial& p) {
  Polynomial out = Polynomial::constant(0);
  for (const auto& [i, t] : p.types()) out.declare(i, t);
  for (const auto& [w, c] : p.terms()) {
    int odd = 0, skew = 0;
    for (int i : w) {
      const VarType t = p.type_of(i);
      odd += t.parity;
      skew += t.skew ? 1 : 0;
    }
    const int sign_exp = odd * (odd - 1) / 2 + skew;
    Word rev(w.rbegin(), w.rend());
    out.add_term(rev, sign_exp % 2 ? Rational(-c) : c);
  }
  return out;
}

/// Lexicographic rank of a permutation word of {1..n} (0-based row index).
inline std::size_t permutation_rank(const Word& w) {
  const std::size_t n = w.size();
  std::size_t rank = 0;
  std::vector<bool> used(n + 1, false);
  std::size_t fact = 1;
  for (std::size_t k = 2; k < n; ++k) fact *= k;
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t smaller = 0;
    for (int v = 1; v < w[pos]; ++v)
      if (!used[static_cast<std::size_t>(v)]) ++smaller;
    used[static_cast<std::size_t>(w[pos])] = true;
    rank += smaller * fact;
    if (n - pos - 1 > 0) fact /= (n - pos - 1);
  }
  return rank;
}

/// All n! orderings of the canonical variables of `sig`, in lexicographic order.
inline std::vector<Polynomial> multilinear_basis(const Signature& sig) {
  const auto types = sig.variable_types();
  Word w(types.size());
  std::iota(w.begin(), w.end(), 1);
  std::vector<Polynomial> out;
  do {
    Polynomial p;
    for (std::size_t i = 0; i < types.size(); ++i) p.declare(static_cast<int>(i + 1), types[i]);
    p.add_term(w, 1);
    out.push_back(std::move(p));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Coordinates of a multilinear polynomial over exactly the variables 1..n of `sig`
/// (types must match) in the monomial basis of `multilinear_basis(sig)`.
inline RatVector monomial_coordinates(const Polynomial& p, const Signature& sig) {
  const auto types = sig.variable_types();
  const int n = static_cast<int>(types.size());
  std::size_t size = 1;
  for (int k = 2; k <= n; ++k) size *= static_cast<std::size_t>(k);
  RatVector out(size);
  for (const auto& [w, c] : p.terms()) {
    if (static_cast<int>(w.size()) != n) throw Error("monomial_coordinates: wrong degree");
    for (int i : w)
      if (i < 1 || i > n || !(p.type_of(i) == types[static_cast<std::size_t>(i - 1)]))
        throw Error("monomial_coordinates: variable x" + std::to_string(i) + " does not match signature " +
                    sig.str());
    out[permutation_rank(w)] += c;
  }
  return out;
}

/// Inverse of monomial_coordinates.
inline Polynomial polynomial_from_coordinates(std::span<const Rational> v, const Signature& sig) {
  const auto types = sig.variable_types();
  Polynomial p;
  for (std::size_t i = 0; i < types.size(); ++i) p.declare(static_cast<int>(i + 1), types[i]);
  Word w(types.size());
  std::iota(w.begin(), w.end(), 1);
  std::size_t r = 0;
  do {
    if (r >= v.size()) throw Error("polynomial_from_coordinates: vector too short");
    p.add_term(w, v[r++]);
  } while (std::next_permutation(w.begin(), w.end()));
  return p;
}

/// Signature of a polynomial from the types of its variables.
inline Signature signature_of(const Polynomial& p) {
  Signature s;
  for (int i : p.variables()) ++s.counts[static_cast<std::size_t>(p.type_of(i).index())];
  return s;
}

/// Map old index -> new index that relabels the variables as 1..n in canonical block order
/// (ties broken by old index).
inline std::map<int, int> canonical_renaming(const Polynomial& p) {
  auto vars = p.variables();
  std::stable_sort(vars.begin(), vars.end(),
                   [&](int a, int b) { return p.type_of(a).index() < p.type_of(b).index(); });
  std::map<int, int> rename;
  for (std::size_t k = 0; k < vars.size(); ++k) rename[vars[k]] = static_cast<int>(k + 1);
  return rename;
}

/// Applies an index renaming (must be injective on the occurring variables).
inline Polynomial rename_variables(const Polynomial& p, const std::map<int, int>& rename) {
  Polynomial out;
  for (int v : p.variables()) out.declare(rename.at(v), p.type_of(v));
  for (const auto& [w, c] : p.terms()) {
    Word nw;
    for (int i : w) nw.push_back(rename.at(i));
    out.add_term(nw, c);
  }
  return out;
}

inline Polynomial canonicalize_variables(const Polynomial& p) {
  return rename_variables(p, canonical_renaming(p));
}

}  // namespace pistar
