#pragma once

// Finite-dimensional superalgebras with superinvolution, given by structure
// constants on a homogeneous basis.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pistar/exact.hpp"

namespace pistar {

/// Sparse coefficient list, sorted by basis index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

inline SparseVector to_sparse(std::span<const Rational> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

inline RatVector to_dense(const SparseVector& v, std::size_t dim) {
  RatVector out(dim);
  for (const auto& [i, x] : v) out.at(i) += x;
  return out;
}

inline RatVector basis_vector(std::size_t dim, std::size_t i) {
  RatVector v(dim);
  v.at(i) = 1;
  return v;
}

/// Human-readable linear combination such as "e12-e56" or "2*e13+1/2*1".
inline std::string format_combination(const std::vector<std::string>& labels,
                                      std::span<const Rational> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!out.empty()) {
      out += "+";
    }
    if (c != 1) out += to_string(c) + "*";
    out += labels.at(i);
  }
  return out.empty() ? "0" : out;
}

class StarAlgebra {
 public:
  StarAlgebra() = default;

  /// `mult[i][j]` is the product e_i e_j; `involution` has the image of e_i in column i.
  StarAlgebra(std::string name, std::vector<std::string> basis, std::vector<int> grading,
              std::vector<std::vector<SparseVector>> mult, RatMatrix involution,
              std::optional<RatVector> unit)
      : name_(std::move(name)),
        basis_(std::move(basis)),
        grading_(std::move(grading)),
        mult_(std::move(mult)),
        involution_(std::move(involution)),
        unit_(std::move(unit)) {
    const std::size_t d = basis_.size();
    if (grading_.size() != d) throw Error(name_ + ": grading length differs from dim");
    for (int g : grading_)
      if (g != 0 && g != 1) throw Error(name_ + ": grading entries must be 0 or 1");
    if (mult_.size() != d) throw Error(name_ + ": structure constants must be dim x dim");
    for (const auto& row : mult_) {
      if (row.size() != d) throw Error(name_ + ": structure constants must be dim x dim");
      for (const auto& prod : row)
        for (const auto& [k, x] : prod)
          if (k >= d) throw Error(name_ + ": structure constant index out of range");
    }
    if (involution_.rows() != d || involution_.cols() != d)
      throw Error(name_ + ": involution must be a dim x dim matrix");
    if (unit_ && unit_->size() != d) throw Error(name_ + ": unit vector has wrong length");
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<int>& grading() const { return grading_; }
  int parity(std::size_t i) const { return grading_.at(i); }
  const SparseVector& product(std::size_t i, std::size_t j) const { return mult_.at(i).at(j); }
  const RatMatrix& involution() const { return involution_; }
  const std::optional<RatVector>& unit() const { return unit_; }
  bool unitary() const { return unit_.has_value(); }

  StarAlgebra renamed(std::string name) const {
    StarAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<int> grading_;
  std::vector<std::vector<SparseVector>> mult_;
  RatMatrix involution_;
  std::optional<RatVector> unit_;
};

inline void check_length(const StarAlgebra& a, std::span<const Rational> v) {
  if (v.size() != a.dim())
    throw Error(a.name() + ": coefficient vector of length " + std::to_string(v.size()) +
                ", expected " + std::to_string(a.dim()));
}

inline RatVector multiply(const StarAlgebra& a, std::span<const Rational> u,
                          std::span<const Rational> v) {
  check_length(a, u);
  check_length(a, v);
  RatVector out(a.dim());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      const Rational uv = u[i] * v[j];
      for (const auto& [k, x] : a.product(i, j)) out[k] += uv * x;
    }
  }
  return out;
}

inline RatVector star(const StarAlgebra& a, std::span<const Rational> u) {
  check_length(a, u);
  return a.involution().apply(u);
}

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;  // basis indices
  std::string detail;
};

/// Checks every structural axiom; an empty result means the algebra is a valid *-algebra.
inline std::vector<Violation> validate(const StarAlgebra& a) {
  std::vector<Violation> out;
  const std::size_t d = a.dim();
  auto e = [d](std::size_t i) { return basis_vector(d, i); };

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto ij = to_dense(a.product(i, j), d);
      for (std::size_t k = 0; k < d; ++k) {
        auto lhs = multiply(a, ij, e(k));
        auto rhs = multiply(a, e(i), to_dense(a.product(j, k), d));
        if (lhs != rhs)
          out.push_back({"associativity", {i, j, k},
                         "(e_i e_j) e_k = " + format_combination(a.basis(), lhs) +
                             " but e_i (e_j e_k) = " + format_combination(a.basis(), rhs)});
      }
    }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const int p = (a.parity(i) + a.parity(j)) % 2;
      for (const auto& [k, x] : a.product(i, j))
        if (a.parity(k) != p) {
          out.push_back({"grading", {i, j, k},
                         "product of parities " + std::to_string(a.parity(i)) + "," +
                             std::to_string(a.parity(j)) + " has a component on " + a.basis()[k]});
          break;
        }
    }

  const RatMatrix& s = a.involution();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (s(k, i) != 0 && a.parity(k) != a.parity(i)) {
        out.push_back({"involution-parity", {i, k}, "image of " + a.basis()[i] + " leaves its parity"});
        break;
      }

  for (std::size_t i = 0; i < d; ++i) {
    auto twice = star(a, star(a, e(i)));
    if (twice != e(i))
      out.push_back({"involutive", {i},
                     "(e_i*)* = " + format_combination(a.basis(), twice)});
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto lhs = star(a, to_dense(a.product(i, j), d));
      auto rhs = multiply(a, star(a, e(j)), star(a, e(i)));
      if (a.parity(i) * a.parity(j) == 1)
        for (auto& x : rhs) x = -x;
      if (lhs != rhs)
        out.push_back({"sign-rule", {i, j},
                       "(e_i e_j)* = " + format_combination(a.basis(), lhs) +
                           " but (-1)^{|i||j|} e_j* e_i* = " + format_combination(a.basis(), rhs)});
    }

  if (a.unit()) {
    const RatVector& u = *a.unit();
    for (std::size_t i = 0; i < d; ++i) {
      if (multiply(a, u, e(i)) != e(i) || multiply(a, e(i), u) != e(i))
        out.push_back({"unit", {i}, "unit does not act as identity on " + a.basis()[i]});
      if (u[i] != 0 && a.parity(i) != 0)
        out.push_back({"unit", {i}, "unit has an odd component"});
    }
    if (star(a, u) != u) out.push_back({"unit", {}, "unit is not symmetric"});
  }
  return out;
}

/// Row bases of A_0^+, A_0^-, A_1^+, A_1^- (in that order), each in RREF.
struct ComponentBases {
  std::array<RatMatrix, 4> basis;

  std::array<std::size_t, 4> dims() const {
    return {basis[0].rows(), basis[1].rows(), basis[2].rows(), basis[3].rows()};
  }
};

inline void require_valid(const StarAlgebra& a) {
  auto v = validate(a);
  if (!v.empty())
    throw Error(a.name() + ": invalid *-algebra (" + v.front().axiom + ": " + v.front().detail + ")");
}

inline ComponentBases components(const StarAlgebra& a) {
  require_valid(a);
  const std::size_t d = a.dim();
  std::array<RatMatrix, 4> raw;
  for (auto& m : raw) m = RatMatrix(0, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto v = basis_vector(d, i);
    auto vs = star(a, v);
    RatVector sym(d), skew(d);
    for (std::size_t k = 0; k < d; ++k) {
      sym[k] = (v[k] + vs[k]) / 2;
      skew[k] = (v[k] - vs[k]) / 2;
    }
    const int p = a.parity(i);
    raw[2 * p].append_row(sym);
    raw[2 * p + 1].append_row(skew);
  }
  ComponentBases out;
  std::size_t total = 0;
  for (int t = 0; t < 4; ++t) {
    out.basis[t] = row_basis(raw[t]);
    total += out.basis[t].rows();
  }
  if (total != d) throw Error(a.name() + ": component dimensions do not add up");
  return out;
}

/// Block-diagonal sum. A unit is recorded only when both summands are unitary.
inline StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a.basis()) labels.push_back(a.name() + ":" + l);
  for (const auto& l : b.basis()) labels.push_back(b.name() + ":" + l);
  std::vector<int> grading = a.grading();
  grading.insert(grading.end(), b.grading().begin(), b.grading().end());
  std::vector<std::vector<SparseVector>> mult(d, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) mult[i][j] = a.product(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      SparseVector shifted;
      for (const auto& [k, x] : b.product(i, j)) shifted.emplace_back(k + da, x);
      mult[i + da][j + da] = std::move(shifted);
    }
  RatMatrix inv(d, d);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t c = 0; c < da; ++c) inv(r, c) = a.involution()(r, c);
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t c = 0; c < db; ++c) inv(r + da, c + da) = b.involution()(r, c);
  std::optional<RatVector> unit;
  if (a.unit() && b.unit()) {
    RatVector u = *a.unit();
    u.insert(u.end(), b.unit()->begin(), b.unit()->end());
    unit = std::move(u);
  }
  return StarAlgebra(a.name() + "+" + b.name(), std::move(labels), std::move(grading),
                     std::move(mult), std::move(inv), std::move(unit));
}

/// A x F with (a,x)(b,y) = (ab + y a + x b, xy); the new unit (0,1) is the last basis element.
inline StarAlgebra unitarize(const StarAlgebra& a) {
  const std::size_t da = a.dim(), d = da + 1;
  std::vector<std::string> labels = a.basis();
  labels.push_back("1~");
  std::vector<int> grading = a.grading();
  grading.push_back(0);
  std::vector<std::vector<SparseVector>> mult(d, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) mult[i][j] = a.product(i, j);
  for (std::size_t i = 0; i < da; ++i) {
    mult[i][da] = {{i, Rational(1)}};
    mult[da][i] = {{i, Rational(1)}};
  }
  mult[da][da] = {{da, Rational(1)}};
  RatMatrix inv(d, d);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t c = 0; c < da; ++c) inv(r, c) = a.involution()(r, c);
  inv(da, da) = 1;
  return StarAlgebra(a.name() + "~", std::move(labels), std::move(grading), std::move(mult),
                     std::move(inv), basis_vector(d, da));
}

/// Smallest two-sided ideal containing `gens` that is closed under the involution.
inline RatMatrix ideal_closure(const StarAlgebra& a, const std::vector<RatVector>& gens) {
  const std::size_t d = a.dim();
  RowSpace space(d);
  std::vector<RatVector> queue;
  auto push = [&](RatVector v) {
    if (space.insert(v)) queue.push_back(std::move(v));
  };
  for (const auto& g : gens) {
    check_length(a, g);
    push(g);
  }
  while (!queue.empty()) {
    RatVector v = std::move(queue.back());
    queue.pop_back();
    push(star(a, v));
    for (std::size_t i = 0; i < d; ++i) {
      auto e = basis_vector(d, i);
      push(multiply(a, e, v));
      push(multiply(a, v, e));
    }
  }
  return space.matrix();
}

/// Smallest *-closed subalgebra containing `gens` (and the unit when requested).
inline RatMatrix subalgebra_closure(const StarAlgebra& a, const std::vector<RatVector>& gens,
                                    bool with_unit) {
  const std::size_t d = a.dim();
  RowSpace space(d);
  std::vector<RatVector> members;
  auto push = [&](const RatVector& v) {
    if (space.insert(v)) members.push_back(v);
  };
  if (with_unit) {
    if (!a.unit()) throw Error(a.name() + ": subalgebra_closure with unit on a non-unitary algebra");
    push(*a.unit());
  }
  for (const auto& g : gens) {
    check_length(a, g);
    push(g);
  }
  for (std::size_t done = 0; done < members.size(); ++done) {
    push(star(a, members[done]));
    for (std::size_t k = 0; k <= done; ++k) {
      const RatVector x = members[done], y = members[k];
      push(multiply(a, x, y));
      push(multiply(a, y, x));
    }
  }
  return space.matrix();
}

namespace detail {

inline int row_parity(const StarAlgebra& a, std::span<const Rational> row) {
  int p = -1;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (p == -1) p = a.parity(i);
    else if (p != a.parity(i)) return -2;
  }
  return p;
}

}  // namespace detail

/// The algebra structure on a subspace closed under product and involution,
/// using the RREF rows of `subspace` as basis.
inline StarAlgebra restrict_to(const StarAlgebra& a, const RatMatrix& subspace, std::string name) {
  const RatMatrix rows = row_basis(subspace);
  const std::size_t k = rows.rows(), d = a.dim();
  auto [red, piv] = rref(rows);
  auto coords = [&](const RatVector& v) {
    RatVector c(k);
    RatVector check(d);
    for (std::size_t r = 0; r < k; ++r) {
      c[r] = v[piv[r]];
      for (std::size_t j = 0; j < d; ++j) check[j] += c[r] * rows(r, j);
    }
    if (check != v) throw Error(name + ": subspace is not closed under the algebra operations");
    return c;
  };
  std::vector<std::string> labels;
  std::vector<int> grading;
  for (std::size_t r = 0; r < k; ++r) {
    labels.push_back(format_combination(a.basis(), rows.row(r)));
    int p = detail::row_parity(a, rows.row(r));
    if (p < 0) throw Error(name + ": subspace is not spanned by homogeneous elements");
    grading.push_back(p);
  }
  std::vector<std::vector<SparseVector>> mult(k, std::vector<SparseVector>(k));
  RatMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      mult[i][j] = to_sparse(coords(multiply(a, rows.row_vector(i), rows.row_vector(j))));
    auto img = coords(star(a, rows.row_vector(i)));
    for (std::size_t r = 0; r < k; ++r) inv(r, i) = img[r];
  }
  std::optional<RatVector> unit;
  if (a.unit() && subspace_contains(rows, *a.unit()))
    unit = coords(*a.unit());
  return StarAlgebra(std::move(name), std::move(labels), std::move(grading), std::move(mult),
                     std::move(inv), std::move(unit));
}

/// A / I on the complement spanned by the basis vectors at non-pivot columns of I's RREF.
inline StarAlgebra quotient(const StarAlgebra& a, const RatMatrix& ideal, std::string name = "") {
  const std::size_t d = a.dim();
  if (ideal.rows() > 0 && ideal.cols() != d) throw Error("quotient: ideal basis has wrong width");
  if (name.empty()) name = a.name() + "/I";
  RowSpace space(d);
  for (std::size_t r = 0; r < ideal.rows(); ++r) space.insert(ideal.row(r));
  const auto& rows = space.rows();
  for (const auto& row : rows) {
    if (detail::row_parity(a, row) < 0) throw Error("quotient: subspace is not homogeneous");
    if (!space.contains(star(a, row))) throw Error("quotient: subspace is not closed under *");
    for (std::size_t i = 0; i < d; ++i) {
      auto e = basis_vector(d, i);
      if (!space.contains(multiply(a, e, row)) || !space.contains(multiply(a, row, e)))
        throw Error("quotient: subspace is not a two-sided ideal");
    }
  }
  std::vector<bool> is_pivot(d, false);
  for (auto p : space.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) keep.push_back(j);
  const std::size_t k = keep.size();
  auto reduce = [&](RatVector v) {
    space.reduce(v);
    RatVector c(k);
    for (std::size_t r = 0; r < k; ++r) c[r] = v[keep[r]];
    return c;
  };
  std::vector<std::string> labels;
  std::vector<int> grading;
  for (auto j : keep) {
    labels.push_back("[" + a.basis()[j] + "]");
    grading.push_back(a.parity(j));
  }
  std::vector<std::vector<SparseVector>> mult(k, std::vector<SparseVector>(k));
  RatMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      mult[i][j] = to_sparse(reduce(to_dense(a.product(keep[i], keep[j]), d)));
    auto img = reduce(star(a, basis_vector(d, keep[i])));
    for (std::size_t r = 0; r < k; ++r) inv(r, i) = img[r];
  }
  std::optional<RatVector> unit;
  if (a.unit() && k > 0) unit = reduce(*a.unit());
  return StarAlgebra(std::move(name), std::move(labels), std::move(grading), std::move(mult),
                     std::move(inv), std::move(unit));
}

}  // namespace pistar
