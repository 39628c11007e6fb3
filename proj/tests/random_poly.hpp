#pragma once

// Random polynomials for property tests.

#include <algorithm>
#include <random>

#include <ostream>

#include "pistar/parser.hpp"

namespace pistar {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << print(p); }

}  // namespace pistar

namespace pistar::test_support {

/// Up to `max_vars` typed variables with indices in 1..12; words use distinct indices.
/// With `multilinear`, every word is a permutation of all variables.
inline Polynomial random_polynomial(std::mt19937& rng, int max_vars = 4, bool multilinear = false) {
  std::uniform_int_distribution<int> nvars(1, max_vars), type(0, 3), nterms(1, 5), num(-9, 9), den(1, 3);
  std::vector<int> pool(12);
  for (int i = 0; i < 12; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  const int n = nvars(rng);
  std::vector<int> vars(pool.begin(), pool.begin() + n);
  std::map<int, VarType> types;
  for (int v : vars) types[v] = VarType::from_index(type(rng));
  Polynomial p;
  for (int v : vars) p.declare(v, types[v]);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<int> w = vars;
    std::shuffle(w.begin(), w.end(), rng);
    if (!multilinear) w.resize(std::uniform_int_distribution<std::size_t>(0, w.size())(rng));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(w, c);
  }
  return p.pruned();
}

}  // namespace pistar::test_support
