#pragma once

// Reference values, kept independent of the claim registry so the two can check each other.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pistar/free_star.hpp"

namespace pistar::test_support {

struct Formula {
  std::string algebra;
  int a, b, c;  // c_n = a + b n + c C(n,2)
  Integer at(int n) const { return a + b * n + c * binomial(n, 2); }
};

inline const std::vector<Formula>& codim_formulas() {
  static const std::vector<Formula> f = {
      {"F", 1, 0, 0},           {"U3_star", 1, 1, 1},     {"N3_star", 1, 1, 2},
      {"N3_gri", 1, 2, 2},      {"U3_gri", 1, 2, 2},      {"C2_star", 1, 1, 0},
      {"C2_gr", 1, 1, 0},       {"C2_star_gr", 1, 1, 0},  {"C3_i1_gr", 1, 2, 1},
      {"C3_i3_gr", 1, 2, 1},    {"C3_i2", 1, 1, 1},       {"G2_tau", 1, 1, 1},
      {"G2_psi_gr", 1, 1, 1},   {"G2_tau_gr", 1, 1, 1},   {"G2_gamma_gr", 1, 3, 2},
      {"G2_tau_gri", 1, 2, 2},  {"G2_gamma_gri", 1, 2, 2}, {"W_eta2_gr", 1, 2, 2},
      {"W_eta1_gri", 1, 3, 2},  {"W_eta3_gri", 1, 3, 2},
      {"G2_gamma_gri+W_eta1_gri", 1, 3, 4},
      {"G2_gamma_gr+W_eta2_gr", 1, 3, 4},
      {"G2_tau_gri+W_eta3_gri", 1, 3, 4},
  };
  return f;
}

using Profile = std::map<std::string, std::size_t>;

/// Nonzero proper cocharacters of degree <= 2, after the three corrections
/// (N3_star, U3_star: (1)_{0-}; W_eta1_gri: ((1)_{0-},(1)_{1+})).
inline const std::vector<std::pair<std::string, Profile>>& expected_tables() {
  static const std::vector<std::pair<std::string, Profile>> t = {
      {"F", {}},
      {"N3_star", {{"((1)_{0-})", 1}, {"((1)_{0+},(1)_{0-})", 1}}},
      {"U3_star", {{"((1)_{0-})", 1}, {"((1,1)_{0+})", 1}}},
      {"N3_gri", {{"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0+},(1)_{1-})", 1}}},
      {"U3_gri", {{"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0+},(1)_{1+})", 1}}},
      {"C2_star", {{"((1)_{0-})", 1}}},
      {"C2_gr", {{"((1)_{1+})", 1}}},
      {"C2_star_gr", {{"((1)_{1-})", 1}}},
      {"C3_i2", {{"((1)_{0-})", 1}, {"((2)_{0-})", 1}}},
      {"C3_i1_gr", {{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((2)_{1+})", 1}}},
      {"C3_i3_gr", {{"((1)_{0-})", 1}, {"((1)_{1-})", 1}, {"((2)_{1-})", 1}}},
      {"G2_tau", {{"((1)_{0-})", 1}, {"((1,1)_{0-})", 1}}},
      {"G2_psi_gr", {{"((1)_{1+})", 1}, {"((1,1)_{1+})", 1}}},
      {"G2_tau_gr", {{"((1)_{1-})", 1}, {"((1,1)_{1-})", 1}}},
      {"G2_gamma_gr", {{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{1+},(1)_{1-})", 1}}},
      {"G2_tau_gri", {{"((1)_{0-})", 1}, {"((1)_{1-})", 1}, {"((1)_{0-},(1)_{1-})", 1}}},
      {"G2_gamma_gri", {{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{0-},(1)_{1+})", 1}}},
      {"W_eta2_gr", {{"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{1+},(1)_{1-})", 1}}},
      {"W_eta1_gri", {{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0-},(1)_{1+})", 1}}},
      {"W_eta3_gri", {{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0-},(1)_{1-})", 1}}},
      {"G2_gamma_gri+W_eta1_gri",
       {{"((1)_{1-})", 1}, {"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{0-},(1)_{1+})", 2}}},
      {"G2_gamma_gr+W_eta2_gr",
       {{"((1)_{1-})", 1}, {"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1+},(1)_{1-})", 2}}},
      {"G2_tau_gri+W_eta3_gri",
       {{"((1)_{1-})", 1}, {"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{0-},(1)_{1-})", 2}}},
  };
  return t;
}

}  // namespace pistar::test_support
