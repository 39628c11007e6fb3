#pragma once

// Evaluation of multilinear *-polynomials on a StarAlgebra.
//
// The rank engine works on integers: component basis vectors are scaled to primitive
// integer vectors and the structure constants are multiplied by the common denominator L.
// A degree-n product then picks up the uniform factor L^(n-1), which leaves ranks and
// kernels unchanged. Arithmetic first runs on checked int64 and is redone with GMP
// integers when an overflow is detected.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "pistar/free_star.hpp"
#include "pistar/star_algebra.hpp"

namespace pistar {

namespace detail {

struct Overflow {};

template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
    return std::gcd(a, b);
  }
  static std::int64_t div(std::int64_t a, std::int64_t b) { return a / b; }
  static std::int64_t from(const Integer& x) {
    if (!x.fits_slong_p()) throw Overflow{};
    return x.get_si();
  }
  static Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }
};

template <>
struct Arith<Integer> {
  static Integer mul(const Integer& a, const Integer& b) { return a * b; }
  static Integer add(const Integer& a, const Integer& b) { return a + b; }
  static Integer sub(const Integer& a, const Integer& b) { return a - b; }
  static Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Integer div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static Integer from(const Integer& x) { return x; }
  static Integer to_integer(const Integer& x) { return x; }
};

/// Divides by the content and makes the first nonzero entry positive. Returns false for zero.
template <class T>
bool normalize(std::vector<T>& v) {
  using A = Arith<T>;
  T g = 0;
  std::size_t first = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      if (first == v.size()) first = i;
      g = A::gcd(g, v[i]);
    }
  if (first == v.size()) return false;
  if (v[first] < 0) g = -g;
  if (g != 1)
    for (auto& x : v)
      if (x != 0) x = A::div(x, g);
  return true;
}

/// Incremental fraction-free echelon basis. Rows are kept primitive.
template <class T>
class IntEchelon {
 public:
  explicit IntEchelon(std::size_t width) : width_(width) {}

  /// Returns true when v enlarged the span.
  bool insert(std::vector<T> v) {
    using A = Arith<T>;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p] == 0) continue;
      const T a = rows_[r][p];
      const T b = v[p];
      for (std::size_t c = 0; c < width_; ++c) v[c] = A::sub(A::mul(a, v[c]), A::mul(b, rows_[r][c]));
      if (!normalize(v)) return false;
    }
    if (!normalize(v)) return false;
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class T>
std::size_t echelon_rank(const std::vector<std::vector<T>>& rows, std::size_t width) {
  IntEchelon<T> e(width);
  for (const auto& r : rows) {
    e.insert(r);
    if (e.rank() == width) break;
  }
  return e.rank();
}

/// Rank of integer rows: checked int64 first, GMP on overflow.
inline std::size_t integer_rank(const std::vector<IntVector>& rows, std::size_t width) {
  try {
    std::vector<std::vector<std::int64_t>> small;
    small.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<std::int64_t> s(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) s[i] = Arith<std::int64_t>::from(r[i]);
      small.push_back(std::move(s));
    }
    return echelon_rank(small, width);
  } catch (const Overflow&) {
    return bareiss_rank(rows, width);
  }
}

inline std::size_t factorial_size(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

/// Scaled integer data of an algebra in one scalar type.
template <class T>
struct ScaledAlgebra {
  std::size_t d = 0;
  std::array<std::vector<std::vector<T>>, 4> comp;   // component basis vectors
  std::array<std::vector<std::vector<T>>, 4> right;  // right multiplication d x d (row i -> e_i * b)
};

}  // namespace detail

/// One evaluation of the variables: canonical index -> chosen component basis vector.
struct Witness {
  std::map<int, RatVector> assignment;
  RatVector value;
};

struct IdentityCheck {
  bool identity = true;
  std::optional<Witness> witness;
};

/// Evaluation data precomputed for one algebra.
class Evaluator {
 public:
  explicit Evaluator(const StarAlgebra& a) : algebra_(a), comps_(components(a)) {
    const std::size_t d = a.dim();
    // Common denominator of the structure constants.
    Integer lcm = 1;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [k, x] : a.product(i, j)) {
          Integer den = x.get_den();
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
    scale_ = lcm;
    std::vector<std::vector<std::vector<Integer>>> mult(d, std::vector<std::vector<Integer>>(d, std::vector<Integer>(d)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [k, x] : a.product(i, j)) {
          Rational s = x * Rational(lcm);
          mult[i][j][k] = s.get_num();
        }
    big_.d = d;
    for (int t = 0; t < 4; ++t) {
      const auto& basis = comps_.basis[static_cast<std::size_t>(t)];
      for (std::size_t r = 0; r < basis.rows(); ++r) {
        IntVector b = primitive_integer(basis.row(r));
        std::vector<Integer> right(d * d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            for (std::size_t k = 0; k < d; ++k)
              if (mult[i][j][k] != 0) right[i * d + k] += b[j] * mult[i][j][k];
          }
        big_.comp[t].push_back(std::move(b));
        big_.right[t].push_back(std::move(right));
      }
    }
    try {
      small_ = convert<std::int64_t>(big_);
    } catch (const detail::Overflow&) {
      small_.reset();
    }
  }

  const StarAlgebra& algebra() const { return algebra_; }
  const ComponentBases& component_bases() const { return comps_; }

  /// Integer component basis vector `r` of type `t` (a nonzero multiple of the rref row).
  RatVector component_vector(int t, std::size_t r) const {
    const auto& b = big_.comp[static_cast<std::size_t>(t)].at(r);
    return RatVector(b.begin(), b.end());
  }

  /// Distinct nonzero columns of the monomial evaluation matrix of `sig`, each made
  /// primitive with positive leading entry, sorted. Each has length n!.
  std::vector<IntVector> columns(const Signature& sig) const {
    if (small_) {
      try {
        auto cols = columns_in<std::int64_t>(*small_, sig);
        std::vector<IntVector> out;
        out.reserve(cols.size());
        for (const auto& c : cols) {
          IntVector v(c.size());
          for (std::size_t i = 0; i < c.size(); ++i) v[i] = detail::Arith<std::int64_t>::to_integer(c[i]);
          out.push_back(std::move(v));
        }
        return out;
      } catch (const detail::Overflow&) {
      }
    }
    auto cols = columns_in<Integer>(big_, sig);
    return {cols.begin(), cols.end()};
  }

  /// dim P_sig / (P_sig ∩ Id*(A)).
  std::size_t rank(const Signature& sig) const {
    return detail::integer_rank(columns(sig), detail::factorial_size(sig.degree()));
  }

  /// Rank of the evaluation matrix whose rows are the given polynomials, written in the
  /// monomial coordinates of `multilinear_basis(sig)`.
  std::size_t rank_of(const Signature& sig, const std::vector<RatVector>& coords) const {
    if (coords.empty()) return 0;
    std::vector<IntVector> c;
    for (const auto& r : coords) c.push_back(primitive_integer(r));
    std::set<IntVector> images;
    for (const auto& col : columns(sig)) {
      IntVector img(c.size());
      for (std::size_t r = 0; r < c.size(); ++r)
        for (std::size_t i = 0; i < col.size(); ++i)
          if (c[r][i] != 0 && col[i] != 0) img[r] += c[r][i] * col[i];
      if (detail::normalize(img)) images.insert(std::move(img));
    }
    return detail::integer_rank({images.begin(), images.end()}, c.size());
  }

  /// Basis (rref rows) of P_sig ∩ Id*(A) in monomial coordinates.
  RatMatrix identity_space(const Signature& sig) const {
    const std::size_t width = detail::factorial_size(sig.degree());
    const auto cols = columns(sig);
    RatMatrix m(cols.size(), width);
    for (std::size_t r = 0; r < cols.size(); ++r)
      for (std::size_t c = 0; c < width; ++c) m(r, c) = cols[r][c];
    return kernel_basis(m);
  }

  /// Decides whether a multilinear polynomial vanishes on all evaluations. Variables may
  /// carry any indices; a witness uses the polynomial's own indices.
  IdentityCheck check_identity(const Polynomial& p) const {
    IdentityCheck out;
    if (p.is_zero()) return out;
    if (!p.is_multilinear()) throw Error("is_identity: polynomial is not multilinear");
    for (const auto& [w, c] : p.terms())
      if (w.empty()) {
        out.identity = false;
        out.witness = Witness{{}, {}};
        return out;
      }
    const auto rename = canonical_renaming(p);
    const Polynomial q = rename_variables(p, rename);
    const Signature sig = signature_of(q);
    const IntVector coeff = primitive_integer(monomial_coordinates(q, sig));
    const std::size_t d = big_.d;
    std::optional<std::vector<std::size_t>> bad;
    for_each_tuple<Integer>(big_, sig, [&](const std::vector<std::size_t>& tuple, const std::vector<Integer>& vals) {
      for (std::size_t k = 0; k < d; ++k) {
        Integer s = 0;
        for (std::size_t m = 0; m < coeff.size(); ++m)
          if (coeff[m] != 0) s += coeff[m] * vals[m * d + k];
        if (s != 0) {
          bad = tuple;
          return false;
        }
      }
      return true;
    });
    if (!bad) return out;
    out.identity = false;
    Witness wit;
    const auto types = sig.variable_types();
    std::map<int, int> back;
    for (const auto& [o, n] : rename) back[n] = o;
    for (std::size_t v = 0; v < types.size(); ++v)
      wit.assignment[back[static_cast<int>(v + 1)]] = component_vector(types[v].index(), (*bad)[v]);
    wit.value = evaluate_unchecked(p, wit.assignment);
    out.witness = std::move(wit);
    return out;
  }

  /// Rational evaluation without component checks.
  RatVector evaluate_unchecked(const Polynomial& p, const std::map<int, RatVector>& assignment) const {
    RatVector total(algebra_.dim());
    for (const auto& [w, c] : p.terms()) {
      if (w.empty()) {
        if (!algebra_.unit()) throw Error("evaluate: constant term in a non-unitary algebra");
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += c * (*algebra_.unit())[k];
        continue;
      }
      RatVector acc = assignment.at(w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) acc = multiply(algebra_, acc, assignment.at(w[i]));
      for (std::size_t k = 0; k < total.size(); ++k) total[k] += c * acc[k];
    }
    return total;
  }

 private:
  template <class T>
  static detail::ScaledAlgebra<T> convert(const detail::ScaledAlgebra<Integer>& a) {
    detail::ScaledAlgebra<T> out;
    out.d = a.d;
    for (std::size_t t = 0; t < 4; ++t) {
      for (const auto& v : a.comp[t]) {
        std::vector<T> s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s[i] = detail::Arith<T>::from(v[i]);
        out.comp[t].push_back(std::move(s));
      }
      for (const auto& v : a.right[t]) {
        std::vector<T> s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s[i] = detail::Arith<T>::from(v[i]);
        out.right[t].push_back(std::move(s));
      }
    }
    return out;
  }

  /// Calls f(tuple, values) for every assignment of component basis vectors to the canonical
  /// variables of `sig`. values[m*d + k] is coordinate k of monomial m (lex permutation order).
  /// Returning false from f stops the enumeration.
  template <class T, class F>
  static void for_each_tuple(const detail::ScaledAlgebra<T>& a, const Signature& sig, F&& f) {
    using A = detail::Arith<T>;
    const auto types = sig.variable_types();
    const std::size_t n = types.size();
    const std::size_t d = a.d;
    std::vector<std::size_t> tix(n);
    for (std::size_t v = 0; v < n; ++v) tix[v] = static_cast<std::size_t>(types[v].index());
    for (std::size_t v = 0; v < n; ++v)
      if (a.comp[tix[v]].empty()) return;
    if (n == 0) return;
    std::vector<std::size_t> fact(n + 1, 1);
    for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
    std::vector<T> vals(fact[n] * d);
    std::vector<std::vector<T>> prefix(n + 1, std::vector<T>(d));
    std::vector<std::size_t> tuple(n, 0);
    std::vector<bool> used(n, false);

    // Depth-first over permutations in lexicographic order with shared prefixes.
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t depth, std::size_t base) {
      if (depth == n) {
        std::copy(prefix[n].begin(), prefix[n].end(), vals.begin() + static_cast<std::ptrdiff_t>(base * d));
        return;
      }
      std::size_t child = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        const std::size_t leaf_base = base + child * fact[n - depth - 1];
        ++child;
        auto& next = prefix[depth + 1];
        if (depth == 0) {
          next = a.comp[tix[v]][tuple[v]];
        } else {
          const auto& cur = prefix[depth];
          const auto& r = a.right[tix[v]][tuple[v]];
          std::fill(next.begin(), next.end(), T(0));
          for (std::size_t i = 0; i < d; ++i) {
            if (cur[i] == 0) continue;
            for (std::size_t k = 0; k < d; ++k)
              if (r[i * d + k] != 0) next[k] = A::add(next[k], A::mul(cur[i], r[i * d + k]));
          }
        }
        if (std::all_of(next.begin(), next.end(), [](const T& x) { return x == 0; })) {
          // Every completion of a zero prefix is zero.
          std::fill(vals.begin() + static_cast<std::ptrdiff_t>(leaf_base * d),
                    vals.begin() + static_cast<std::ptrdiff_t>((leaf_base + fact[n - depth - 1]) * d), T(0));
          continue;
        }
        used[v] = true;
        dfs(depth + 1, leaf_base);
        used[v] = false;
      }
    };

    while (true) {
      dfs(0, 0);
      if (!f(tuple, vals)) return;
      std::size_t v = 0;
      while (v < n && ++tuple[v] == a.comp[tix[v]].size()) tuple[v++] = 0;
      if (v == n) return;
    }
  }

  template <class T>
  static std::set<std::vector<T>> columns_in(const detail::ScaledAlgebra<T>& a, const Signature& sig) {
    const std::size_t n = static_cast<std::size_t>(sig.degree());
    const std::size_t rows = detail::factorial_size(static_cast<int>(n));
    const std::size_t d = a.d;
    std::set<std::vector<T>> cols;
    std::vector<T> col(rows);
    for_each_tuple<T>(a, sig, [&](const std::vector<std::size_t>&, const std::vector<T>& vals) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < rows; ++m) col[m] = vals[m * d + k];
        std::vector<T> c = col;
        if (detail::normalize(c)) cols.insert(std::move(c));
      }
      return true;
    });
    return cols;
  }

  StarAlgebra algebra_;
  ComponentBases comps_;
  Integer scale_ = 1;
  detail::ScaledAlgebra<Integer> big_;
  std::optional<detail::ScaledAlgebra<std::int64_t>> small_;
};

/// Substitutes the assignment into p. Every variable must be assigned a vector of the
/// component matching its type.
inline RatVector evaluate(const StarAlgebra& a, const Polynomial& p, const std::map<int, RatVector>& assignment) {
  const auto comps = components(a);
  for (int v : p.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw Error("evaluate: no value assigned to x" + std::to_string(v));
    check_length(a, it->second);
    const VarType t = p.type_of(v);
    if (!subspace_contains(comps.basis[static_cast<std::size_t>(t.index())], it->second))
      throw Error("evaluate: value of x" + std::to_string(v) + " is not in component " + t.str());
  }
  return Evaluator(a).evaluate_unchecked(p, assignment);
}

inline bool is_identity(const StarAlgebra& a, const Polynomial& p) { return Evaluator(a).check_identity(p).identity; }

}  // namespace pistar
