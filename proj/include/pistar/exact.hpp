#pragma once

// Exact rational arithmetic and dense linear algebra over Q.
//
// All elimination routines clear denominators row by row and run
// fraction-free (Bareiss) elimination on GMP integers; the reduced echelon
// form is only normalized back to rationals at the very end.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pistar {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p", "p/q", "-p/q"; the Unicode minus U+2212 is also accepted.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
    } else if (c == ' ' || c == '\t') {
      continue;
    } else {
      s.push_back(static_cast<char>(c));
    }
  }
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error("malformed rational: '" + std::string(text) + "'");
  Integer d(den);
  if (d == 0) throw Error("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

inline bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// Scales a rational vector to a primitive integer vector with the same span.
inline IntVector primitive_integer(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

/// Divides by the content and fixes the sign so the first nonzero entry is positive.
inline void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// All rows must share one width; `cols` is used when `rows` is empty.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error("RatMatrix::from_rows: ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  std::vector<RatVector> row_vectors() const {
    std::vector<RatVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void append_row(std::span<const Rational> v) {
    if (rows_ == 0 && data_.empty()) cols_ = v.size();
    if (v.size() != cols_) throw Error("RatMatrix::append_row: width mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  RatVector apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw Error("RatMatrix::apply: length mismatch");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

// Fraction-free Gauss-Jordan. On return `m` holds d * RREF(m) in its first
// `pivots.size()` rows (d = last pivot), remaining rows zero.
inline std::vector<std::size_t> bareiss_gauss_jordan(std::vector<IntVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Integer piv = m[r][c];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      auto& row = m[i];
      const Integer factor = row[c];
      for (std::size_t j = 0; j < cols; ++j) {
        // row[j] = (piv*row[j] - factor*m[r][j]) / prev, exact by Sylvester's identity.
        tmp = piv * row[j];
        if (factor != 0 && m[r][j] != 0) tmp -= factor * m[r][j];
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::vector<IntVector> integerize(const RatMatrix& m) {
  std::vector<IntVector> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(primitive_integer(m.row(r)));
  return out;
}

}  // namespace detail

/// Rank of integer row vectors by forward Bareiss elimination. Rows are consumed.
inline std::size_t bareiss_rank(std::vector<IntVector> m, std::size_t cols) {
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Integer piv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      auto& row = m[i];
      const Integer factor = row[c];
      for (std::size_t j = c; j < cols; ++j) {
        tmp = piv * row[j];
        if (factor != 0 && m[r][j] != 0) tmp -= factor * m[r][j];
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    ++r;
  }
  return r;
}

inline std::size_t rank(const RatMatrix& m) {
  return bareiss_rank(detail::integerize(m), m.cols());
}

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the returned matrix has the same shape as the input.
inline RrefResult rref(const RatMatrix& m) {
  auto ints = detail::integerize(m);
  auto pivots = detail::bareiss_gauss_jordan(ints, m.cols());
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Integer& piv = ints[r][pivots[r]];
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (ints[r][c] != 0) {
        out(r, c) = Rational(ints[r][c], piv);
        out(r, c).canonicalize();
      }
  }
  return {std::move(out), std::move(pivots)};
}

/// Nonzero rows of the RREF: a canonical basis of the row space.
inline RatMatrix row_basis(const RatMatrix& m) {
  auto [red, piv] = rref(m);
  RatMatrix out(0, m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) out.append_row(red.row(r));
  return out;
}

/// Rows form a basis of the right null space {x : M x = 0}.
inline RatMatrix kernel_basis(const RatMatrix& m) {
  auto [red, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  RatMatrix out(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, f);
    out.append_row(v);
  }
  return out;
}

/// Maintains a row space in reduced echelon form under incremental insertion.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t dim() const { return rows_.size(); }
  bool full() const { return rows_.size() == width_; }

  /// Reduces v against the current basis in place; v ends up zero iff it was in the span.
  void reduce(RatVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < width_; ++c)
        if (rows_[r][c] != 0) v[c] -= f * rows_[r][c];
    }
  }

  bool contains(std::span<const Rational> v) const {
    if (v.size() != width_) throw Error("RowSpace::contains: width mismatch");
    RatVector w(v.begin(), v.end());
    reduce(w);
    return is_zero(w);
  }

  /// Returns true when v enlarged the span.
  bool insert(std::span<const Rational> v) {
    if (v.size() != width_) throw Error("RowSpace::insert: width mismatch");
    RatVector w(v.begin(), v.end());
    reduce(w);
    auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
    if (it == w.end()) return false;
    const std::size_t pc = static_cast<std::size_t>(it - w.begin());
    const Rational inv = 1 / w[pc];
    for (auto& x : w) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = rows_[r][pc];
      if (f == 0) continue;
      for (std::size_t c = 0; c < width_; ++c)
        if (w[c] != 0) rows_[r][c] -= f * w[c];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pc);
    rows_.insert(rows_.begin() + idx, std::move(w));
    return true;
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<RatVector>& rows() const { return rows_; }

  /// The basis in RREF (rows sorted by pivot column).
  RatMatrix matrix() const { return RatMatrix::from_rows(rows_, width_); }

 private:
  std::size_t width_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline bool subspace_contains(const RatMatrix& span_rows, std::span<const Rational> v) {
  if (span_rows.rows() > 0 && span_rows.cols() != v.size())
    throw Error("subspace_contains: width mismatch (" + std::to_string(span_rows.cols()) + " vs " +
                std::to_string(v.size()) + ")");
  if (span_rows.rows() == 0) return is_zero(v);
  RowSpace space(v.size());
  for (std::size_t r = 0; r < span_rows.rows(); ++r) space.insert(span_rows.row(r));
  return space.contains(v);
}

/// Coefficients c with sum_i c_i * rows[i] == v, when v lies in the span of linearly independent rows.
inline std::optional<RatVector> coordinates_in(const RatMatrix& independent_rows,
                                               std::span<const Rational> v) {
  const std::size_t k = independent_rows.rows();
  const std::size_t n = v.size();
  if (k > 0 && independent_rows.cols() != n) throw Error("coordinates_in: width mismatch");
  // Columns = basis rows, last column = v.
  RatMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c) aug(c, i) = independent_rows(i, c);
  for (std::size_t c = 0; c < n; ++c) aug(c, k) = v[c];
  auto [red, piv] = rref(aug);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  if (piv.size() != k) throw Error("coordinates_in: basis rows are linearly dependent");
  RatVector out(k);
  for (std::size_t r = 0; r < piv.size(); ++r) out[piv[r]] = red(r, k);
  return out;
}

}  // namespace pistar
