#pragma once

// *-codimensions and proper codimensions.

#include <string>
#include <vector>

#include "pistar/evaluation.hpp"

namespace pistar {

struct SignatureCodimRecord {
  Signature sig;
  Integer pn_dim;  // n!
  Integer identity_dim;
  Integer codim;
};

inline SignatureCodimRecord signature_codim(const Evaluator& ev, const Signature& sig) {
  SignatureCodimRecord r;
  r.sig = sig;
  r.pn_dim = factorial(sig.degree());
  r.codim = static_cast<unsigned long>(ev.rank(sig));
  r.identity_dim = r.pn_dim - r.codim;
  return r;
}

inline SignatureCodimRecord signature_codim(const StarAlgebra& a, const Signature& sig) {
  return signature_codim(Evaluator(a), sig);
}

/// c_n = sum over signatures of multinomial * signature codim; c_0 = 1.
inline Integer codim(const Evaluator& ev, int n, std::vector<SignatureCodimRecord>* per_signature = nullptr) {
  if (n < 0) throw Error("codim: negative degree");
  if (n == 0) return 1;
  Integer total = 0;
  for (const auto& sig : signatures_of_degree(n)) {
    auto rec = signature_codim(ev, sig);
    total += multinomial(sig) * rec.codim;
    if (per_signature) per_signature->push_back(std::move(rec));
  }
  return total;
}

inline Integer codim(const StarAlgebra& a, int n) { return codim(Evaluator(a), n); }

/// c_0..c_N.
inline std::vector<Integer> codim_sequence(const Evaluator& ev, int N) {
  std::vector<Integer> out;
  for (int n = 0; n <= N; ++n) out.push_back(codim(ev, n));
  return out;
}

inline std::vector<Integer> codim_sequence(const StarAlgebra& a, int N) { return codim_sequence(Evaluator(a), N); }

/// Inverse binomial transform gamma_n = sum_i (-1)^(n-i) C(n,i) c_i, checked by forward substitution.
inline std::vector<Integer> proper_from_codim(const std::vector<Integer>& c) {
  if (c.empty()) return {};
  if (c[0] != 1) throw Error("proper_from_codim: c_0 must be 1");
  const int N = static_cast<int>(c.size()) - 1;
  std::vector<Integer> g(c.size());
  for (int n = 0; n <= N; ++n) {
    Integer s = 0;
    for (int i = 0; i <= n; ++i) {
      Integer term = binomial(n, i) * c[static_cast<std::size_t>(i)];
      s += ((n - i) % 2) ? Integer(-term) : term;
    }
    if (s < 0)
      throw Error("proper_from_codim: negative gamma_" + std::to_string(n) +
                  " (algebra not unitary or sequence inconsistent)");
    g[static_cast<std::size_t>(n)] = s;
  }
  for (int n = 0; n <= N; ++n) {
    Integer s = 0;
    for (int i = 0; i <= n; ++i) s += binomial(n, i) * g[static_cast<std::size_t>(i)];
    if (s != c[static_cast<std::size_t>(n)]) throw Error("proper_from_codim: forward check failed");
  }
  return g;
}

/// Spanning set of the proper multilinear polynomials of a signature of degree <= 2,
/// in the canonical variables of the signature.
inline std::vector<Polynomial> proper_spanning_set(const Signature& sig) {
  const int n = sig.degree();
  if (n > 2) throw Error("proper spanning sets are only available for degree <= 2");
  const auto types = sig.variable_types();
  std::vector<Polynomial> out;
  if (n == 1) {
    if (!(types[0] == kVarTypes[0])) out.push_back(Polynomial::variable(1, types[0]));
    return out;
  }
  if (n == 2) {
    const auto x1 = Polynomial::variable(1, types[0]);
    const auto x2 = Polynomial::variable(2, types[1]);
    if (types[0] == kVarTypes[0]) {
      out.push_back(commutator(x1, x2));
    } else {
      out.push_back(x1 * x2);
      out.push_back(x2 * x1);
    }
  }
  return out;
}

inline std::vector<RatVector> coordinates(const std::vector<Polynomial>& polys, const Signature& sig) {
  std::vector<RatVector> out;
  for (const auto& p : polys) out.push_back(monomial_coordinates(p, sig));
  return out;
}

/// Proper codimension of one signature, degree <= 2.
inline std::size_t proper_signature_codim(const Evaluator& ev, const Signature& sig) {
  return ev.rank_of(sig, coordinates(proper_spanning_set(sig), sig));
}

inline std::size_t proper_signature_codim(const StarAlgebra& a, const Signature& sig) {
  return proper_signature_codim(Evaluator(a), sig);
}

struct CrosscheckRow {
  int n = 0;
  Integer from_codim;      // inverse binomial transform
  Integer from_signature;  // sum of multinomial * proper signature codim
  std::vector<std::pair<Signature, std::size_t>> breakdown;
};

struct CrosscheckReport {
  std::string algebra;
  std::vector<CrosscheckRow> rows;
  bool pass() const {
    for (const auto& r : rows)
      if (r.from_codim != r.from_signature) return false;
    return true;
  }
};

/// Compares both routes to gamma_n for n = 1..N (N <= 2).
inline CrosscheckReport crosscheck_proper(const Evaluator& ev, int N = 2) {
  if (N > 2) throw Error("crosscheck: degree must be <= 2");
  if (!ev.algebra().unitary()) throw Error("crosscheck: algebra must be unitary");
  CrosscheckReport rep;
  rep.algebra = ev.algebra().name();
  const auto gamma = proper_from_codim(codim_sequence(ev, N));
  for (int n = 1; n <= N; ++n) {
    CrosscheckRow row;
    row.n = n;
    row.from_codim = gamma[static_cast<std::size_t>(n)];
    for (const auto& sig : signatures_of_degree(n)) {
      const auto g = proper_signature_codim(ev, sig);
      row.from_signature += multinomial(sig) * static_cast<unsigned long>(g);
      if (g) row.breakdown.emplace_back(sig, g);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline CrosscheckReport crosscheck_proper(const StarAlgebra& a, int N = 2) { return crosscheck_proper(Evaluator(a), N); }

inline RatMatrix identity_space(const StarAlgebra& a, const Signature& sig) { return Evaluator(a).identity_space(sig); }

}  // namespace pistar
