#pragma once

// Proper cocharacter multiplicities in degrees 1 and 2 via highest weight vectors.

#include <array>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include "pistar/codim.hpp"

namespace pistar {

using Partition = std::vector<int>;

/// Four partitions, one per variable type (0+, 0-, 1+, 1-).
struct Multipartition {
  std::array<Partition, 4> parts;

  Signature signature() const {
    Signature s;
    for (std::size_t t = 0; t < 4; ++t)
      for (int x : parts[t]) s.counts[t] += x;
    return s;
  }
  int degree() const { return signature().degree(); }

  /// E.g. "((1)_{0+},(1)_{1-})".
  std::string str() const {
    std::string out = "(";
    bool first = true;
    for (std::size_t t = 0; t < 4; ++t) {
      if (parts[t].empty()) continue;
      if (!first) out += ",";
      first = false;
      out += "(";
      for (std::size_t k = 0; k < parts[t].size(); ++k) out += (k ? "," : "") + std::to_string(parts[t][k]);
      out += ")_{" + VarType::from_index(static_cast<int>(t)).str() + "}";
    }
    return out + ")";
  }

  /// Accepts the form produced by str() and the short form "(1)0+ (1)1-".
  static Multipartition parse(const std::string& text) {
    static const std::regex block(R"(\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)\s*\)\s*_?\{?\s*([01])\s*([+-])\s*\}?)");
    Multipartition mp;
    std::string rest;
    auto begin = std::sregex_iterator(text.begin(), text.end(), block);
    std::size_t covered = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      covered += static_cast<std::size_t>(m.length());
      const int t = 2 * (m[2].str()[0] - '0') + (m[3].str()[0] == '-' ? 1 : 0);
      auto& part = mp.parts[static_cast<std::size_t>(t)];
      if (!part.empty()) throw Error("multipartition '" + text + "': repeated type");
      std::string nums = m[1].str();
      for (std::size_t pos = 0; pos < nums.size();) {
        std::size_t next = nums.find(',', pos);
        part.push_back(std::stoi(nums.substr(pos, next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
      }
      if (!std::is_sorted(part.begin(), part.end(), std::greater<int>()))
        throw Error("multipartition '" + text + "': parts must be weakly decreasing");
    }
    if (covered == 0) throw Error("multipartition '" + text + "': nothing parsed");
    return mp;
  }

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
};

inline std::vector<Partition> partitions_of(int n) {
  if (n == 0) return {{}};
  if (n == 1) return {{1}};
  if (n == 2) return {{2}, {1, 1}};
  throw Error("partitions are only enumerated up to 2");
}

/// All multipartitions of total degree n <= 2, signatures in descending lexicographic
/// order and partitions in descending lexicographic order within a signature.
inline std::vector<Multipartition> multipartitions_of_degree(int n) {
  std::vector<Multipartition> out;
  for (const auto& sig : signatures_of_degree(n)) {
    std::vector<Multipartition> acc(1);
    for (std::size_t t = 0; t < 4; ++t) {
      std::vector<Multipartition> next;
      for (const auto& mp : acc)
        for (const auto& p : partitions_of(sig.counts[t])) {
          auto m = mp;
          m.parts[t] = p;
          next.push_back(std::move(m));
        }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

/// Proper highest weight vectors of a multipartition of degree <= 2.
inline std::vector<Polynomial> hwv_catalog(const Multipartition& mp) {
  const Signature sig = mp.signature();
  const int n = sig.degree();
  if (n > 2) throw Error("highest weight vectors are only tabulated for degree <= 2");
  const auto types = sig.variable_types();
  std::vector<Polynomial> out;
  if (n == 1) {
    if (!(types[0] == kVarTypes[0])) out.push_back(Polynomial::variable(1, types[0]));
    return out;
  }
  if (n == 0) return out;
  const auto x1 = Polynomial::variable(1, types[0]);
  const auto x2 = Polynomial::variable(2, types[1]);
  if (types[0] == types[1]) {
    const bool row = mp.parts[static_cast<std::size_t>(types[0].index())].size() == 1;  // partition (2)
    if (types[0] == kVarTypes[0]) {
      if (!row) out.push_back(commutator(x1, x2));
    } else {
      out.push_back(row ? jordan(x1, x2) : commutator(x1, x2));
    }
    return out;
  }
  out.push_back(commutator(x1, x2));
  if (!(types[0] == kVarTypes[0])) out.push_back(x1 * x2);
  return out;
}

inline std::size_t multiplicity(const Evaluator& ev, const Multipartition& mp) {
  const auto sig = mp.signature();
  return ev.rank_of(sig, coordinates(hwv_catalog(mp), sig));
}

inline std::size_t multiplicity(const StarAlgebra& a, const Multipartition& mp) { return multiplicity(Evaluator(a), mp); }

struct MultiplicityTable {
  std::string algebra;
  std::vector<std::pair<Multipartition, std::size_t>> entries;  // every multipartition of degree 1, 2

  std::map<Multipartition, std::size_t> nonzero() const {
    std::map<Multipartition, std::size_t> out;
    for (const auto& [mp, m] : entries)
      if (m) out[mp] = m;
    return out;
  }
  std::size_t at(const Multipartition& mp) const {
    for (const auto& [k, m] : entries)
      if (k == mp) return m;
    return 0;
  }
};

inline MultiplicityTable cocharacter_table(const Evaluator& ev) {
  MultiplicityTable t;
  t.algebra = ev.algebra().name();
  for (int n = 1; n <= 2; ++n)
    for (const auto& mp : multipartitions_of_degree(n)) t.entries.emplace_back(mp, multiplicity(ev, mp));
  return t;
}

inline MultiplicityTable cocharacter_table(const StarAlgebra& a) { return cocharacter_table(Evaluator(a)); }

/// c_0..c_N of a unitary algebra whose proper cocharacter stops at degree 2.
/// All characters involved have degree 1; mixed degree-2 signatures have weight 2.
inline std::vector<Integer> codim_from_table(const MultiplicityTable& table, int N) {
  Integer s1 = 0, s2 = 0;
  for (const auto& [mp, m] : table.entries) {
    const int n = mp.degree();
    if (n == 1) s1 += static_cast<unsigned long>(m);
    else if (n == 2) s2 += multinomial(mp.signature()) * static_cast<unsigned long>(m);
    else if (m) throw Error("codim_from_table: entries above degree 2 are not supported");
  }
  std::vector<Integer> c;
  for (int n = 0; n <= N; ++n) c.push_back(1 + n * s1 + binomial(n, 2) * s2);
  return c;
}

/// "chi_{(1)_{1-}} + 2 chi_{(1)_{0-}} x chi_{(1)_{1+}}" style summary of the nonzero entries.
inline std::string describe_nonzero(const MultiplicityTable& t) {
  std::string out;
  for (const auto& [mp, m] : t.entries) {
    if (!m) continue;
    if (!out.empty()) out += ", ";
    if (m > 1) out += std::to_string(m) + " ";
    out += mp.str();
  }
  return out.empty() ? "(none)" : out;
}

inline std::string cocharacter_markdown(const std::vector<MultiplicityTable>& tables) {
  std::string out = "| algebra | nonzero proper cocharacters (degree <= 2) |\n|---|---|\n";
  for (const auto& t : tables) out += "| " + t.algebra + " | " + describe_nonzero(t) + " |\n";
  return out;
}

}  // namespace pistar
