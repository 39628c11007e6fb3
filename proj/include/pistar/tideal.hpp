#pragma once

// Bounded-degree verification of T*-ideal generating sets.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pistar/codim.hpp"
#include "pistar/parser.hpp"

namespace pistar {

/// Multilinear generators after wildcard expansion, closed under the free star.
struct GeneratorSet {
  std::vector<std::string> sources;   // input lines
  std::vector<std::string> notes;     // how wildcards were expanded
  std::vector<Polynomial> generators;

  /// Adds g unless it is a scalar multiple of a generator already present.
  void add(const Polynomial& g) {
    if (g.is_zero()) return;
    if (!g.is_multilinear()) throw Error("generator is not multilinear: " + print(g));
    for (const auto& h : generators)
      if (proportional(g, h)) return;
    generators.push_back(g.pruned());
  }

  void close_under_star() {
    for (std::size_t i = 0; i < generators.size(); ++i) add(star_free(generators[i]));
  }

  /// One expression per line; '#' starts a comment.
  static GeneratorSet from_lines(const std::vector<std::string>& lines) {
    GeneratorSet s;
    for (auto line : lines) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      s.sources.push_back(line);
      auto expansion = expand_wildcards(line);
      for (const auto& note : expansion.notes) s.notes.push_back(line + ": " + note);
      for (const auto& text : expansion.texts) s.add(parse(text));
    }
    s.close_under_star();
    return s;
  }

  static GeneratorSet from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    return from_lines(lines);
  }

  static GeneratorSet from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open generator file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
  }

  static bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.terms().size() != b.terms().size()) return false;
    std::optional<Rational> ratio;
    for (const auto& [w, c] : a.terms()) {
      auto it = b.terms().find(w);
      if (it == b.terms().end()) return false;
      for (int i : w)
        if (!(a.type_of(i) == b.type_of(i))) return false;
      const Rational r = c / it->second;
      if (ratio && *ratio != r) return false;
      ratio = r;
    }
    return true;
  }
};

namespace detail {

/// Substitutes polynomials for the variables of g (indices from `vars`, in order).
inline Polynomial substitute(const Polynomial& g, const std::vector<int>& vars, const std::vector<Polynomial>& values) {
  std::map<int, const Polynomial*> at;
  for (std::size_t i = 0; i < vars.size(); ++i) at[vars[i]] = &values[i];
  Polynomial out;
  for (const auto& [w, c] : g.terms()) {
    Polynomial term = Polynomial::constant(c);
    for (int v : w) term = term * *at.at(v);
    out += term;
  }
  return out;
}

/// Monomial of the given variable order, typed according to `types` (1-based).
inline Polynomial monomial(const std::vector<int>& order, const std::vector<VarType>& types) {
  Polynomial p = Polynomial::constant(1);
  for (int v : order) p = p * Polynomial::variable(v, types[static_cast<std::size_t>(v - 1)]);
  return p;
}

template <class F>
void for_each_ordering(std::vector<int> block, F&& f) {
  std::sort(block.begin(), block.end());
  do {
    f(block);
  } while (std::next_permutation(block.begin(), block.end()));
}

}  // namespace detail

/// Multilinear consequences of the generators in signature `sig`, as an rref row basis in
/// the coordinates of multilinear_basis(sig).
///
/// Consequences are a * g(S(m_1), ..., S(m_k)) * b, where the variables 1..n are split into
/// blocks for a, b and the k slots of g. Slot i receives S(m) = m + s m* for an ordering m of
/// its block, s = +1 for a symmetric slot and -1 for a skew slot; the block's parity must
/// match the slot's. Every *-endomorphism image is a linear combination of these, so the
/// span is the full multilinear part of the T*-ideal (no unit is substituted).
inline RatMatrix consequences(const GeneratorSet& gens, const Signature& sig) {
  const int n = sig.degree();
  const std::size_t width = static_cast<std::size_t>(factorial(n).get_ui());
  const auto types = sig.variable_types();
  RowSpace span(width);
  for (const auto& g : gens.generators) {
    const auto vars = g.variables();
    const std::size_t k = vars.size();
    if (k == 0 || static_cast<int>(k) > n) continue;
    // label[v] in {0: a, 1: b, 2..k+1: slot}
    std::vector<std::size_t> label(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<std::vector<int>> blocks(k + 2);
      for (int v = 1; v <= n; ++v) blocks[label[static_cast<std::size_t>(v - 1)]].push_back(v);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const auto& blk = blocks[i + 2];
        if (blk.empty()) {
          ok = false;
          break;
        }
        int parity = 0;
        for (int v : blk) parity += types[static_cast<std::size_t>(v - 1)].parity;
        if (parity % 2 != g.type_of(vars[i]).parity) ok = false;
      }
      if (ok) {
        // Slot values: every symmetrized ordering of the block.
        std::vector<std::vector<Polynomial>> options(k);
        for (std::size_t i = 0; i < k; ++i) {
          const bool skew = g.type_of(vars[i]).skew;
          detail::for_each_ordering(blocks[i + 2], [&](const std::vector<int>& ord) {
            Polynomial m = detail::monomial(ord, types);
            Polynomial s = skew ? m - star_free(m) : m + star_free(m);
            if (!s.is_zero()) options[i].push_back(std::move(s));
          });
        }
        if (std::none_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) {
          std::vector<std::size_t> pick(k, 0);
          std::vector<Polynomial> values(k);
          while (true) {
            for (std::size_t i = 0; i < k; ++i) values[i] = options[i][pick[i]];
            const Polynomial core = detail::substitute(g, vars, values);
            if (!core.is_zero()) {
              detail::for_each_ordering(blocks[0], [&](const std::vector<int>& a) {
                const Polynomial left = detail::monomial(a, types) * core;
                detail::for_each_ordering(blocks[1], [&](const std::vector<int>& b) {
                  if (span.full()) return;
                  span.insert(monomial_coordinates(left * detail::monomial(b, types), sig));
                });
              });
            }
            std::size_t i = 0;
            while (i < k && ++pick[i] == options[i].size()) pick[i++] = 0;
            if (i == k || span.full()) break;
          }
        }
      }
      if (span.full()) break;
      std::size_t v = 0;
      while (v < label.size() && ++label[v] == k + 2) label[v++] = 0;
      if (v == label.size()) break;
    }
    if (span.full()) break;
  }
  return span.matrix();
}

struct GeneratorCheck {
  std::string generator;
  bool identity = true;
  std::optional<Witness> witness;
};

struct SignatureCheck {
  Signature sig;
  std::size_t consequence_dim = 0;
  std::size_t identity_dim = 0;
  bool sound = true;     // consequences lie in the identity space
  std::string missing;   // an identity outside the consequences, if any
  bool pass() const { return sound && consequence_dim == identity_dim; }
};

struct DegreeCheck {
  int n = 0;
  std::size_t consequence_dim = 0;
  std::size_t identity_dim = 0;
  std::vector<SignatureCheck> signatures;
  bool pass() const {
    for (const auto& s : signatures)
      if (!s.pass()) return false;
    return true;
  }
};

struct TidealReport {
  std::string algebra;
  int max_degree = 0;
  std::vector<std::string> notes;
  std::vector<GeneratorCheck> generators;
  std::vector<DegreeCheck> degrees;

  bool generators_ok() const {
    for (const auto& g : generators)
      if (!g.identity) return false;
    return true;
  }
  bool pass() const {
    if (!generators_ok()) return false;
    for (const auto& d : degrees)
      if (!d.pass()) return false;
    return true;
  }
};

/// (a) each generator is an identity; (b) for every signature of degree <= maxN the
/// consequence space lies in, and has the dimension of, the identity space.
inline TidealReport verify_tideal(const Evaluator& ev, const GeneratorSet& gens, int maxN) {
  if (maxN < 1 || maxN > 5) throw Error("verify_tideal: max degree must be in 1..5");
  TidealReport rep;
  rep.algebra = ev.algebra().name();
  rep.max_degree = maxN;
  rep.notes = gens.notes;
  for (const auto& g : gens.generators) {
    GeneratorCheck gc;
    gc.generator = print(g);
    auto chk = ev.check_identity(g);
    gc.identity = chk.identity;
    gc.witness = std::move(chk.witness);
    rep.generators.push_back(std::move(gc));
  }
  for (int n = 1; n <= maxN; ++n) {
    DegreeCheck dc;
    dc.n = n;
    for (const auto& sig : signatures_of_degree(n)) {
      SignatureCheck sc;
      sc.sig = sig;
      const RatMatrix cons = consequences(gens, sig);
      const RatMatrix ids = ev.identity_space(sig);
      sc.consequence_dim = cons.rows();
      sc.identity_dim = ids.rows();
      RowSpace idspace(ids.cols());
      for (std::size_t r = 0; r < ids.rows(); ++r) idspace.insert(ids.row(r));
      for (std::size_t r = 0; r < cons.rows() && sc.sound; ++r)
        if (!idspace.contains(cons.row(r))) sc.sound = false;
      if (sc.sound && sc.consequence_dim < sc.identity_dim) {
        RowSpace cspace(cons.cols());
        for (std::size_t r = 0; r < cons.rows(); ++r) cspace.insert(cons.row(r));
        for (std::size_t r = 0; r < ids.rows(); ++r)
          if (!cspace.contains(ids.row(r))) {
            sc.missing = print(polynomial_from_coordinates(ids.row(r), sig));
            break;
          }
      }
      dc.consequence_dim += sc.consequence_dim;
      dc.identity_dim += sc.identity_dim;
      dc.signatures.push_back(std::move(sc));
    }
    rep.degrees.push_back(std::move(dc));
  }
  return rep;
}

inline TidealReport verify_tideal(const StarAlgebra& a, const GeneratorSet& gens, int maxN) {
  return verify_tideal(Evaluator(a), gens, maxN);
}

}  // namespace pistar
