#pragma once

// Claim registry and runner reproducing the reference codimension formulas, cocharacter
// tables, T*-ideal generating sets and building-block reconstructions.

#include <chrono>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pistar/algebra_json.hpp"
#include "pistar/cocharacter.hpp"
#include "pistar/tideal.hpp"

namespace pistar {

// ---------------------------------------------------------------- reconstruction

/// One direct summand: a single catalog expression, or alternatives that cannot be told
/// apart by the degree <= 2 profile.
struct Block {
  std::vector<std::string> alternatives;
  std::string reason;  // multipartition that forced the block
  bool ambiguous() const { return alternatives.size() > 1; }
};

/// Building blocks dictated by a proper cocharacter profile of degree <= 2.
inline std::vector<Block> reconstruct(const MultiplicityTable& profile) {
  static const std::map<std::string, std::vector<std::vector<std::string>>> rules = {
      {"((1)_{0-})", {{"C2_star"}}},
      {"((1)_{1+})", {{"C2_gr"}}},
      {"((1)_{1-})", {{"C2_star_gr"}}},
      {"((2)_{0-})", {{"C3_i2"}}},
      {"((2)_{1+})", {{"C3_i1_gr"}}},
      {"((2)_{1-})", {{"C3_i3_gr"}}},
      {"((1,1)_{0+})", {{"U3_star"}}},
      {"((1,1)_{0-})", {{"G2_tau"}}},
      {"((1,1)_{1+})", {{"G2_psi_gr"}}},
      {"((1,1)_{1-})", {{"G2_tau_gr"}}},
      {"((1)_{0+},(1)_{0-})", {{"N3_star"}}},
      {"((1)_{0+},(1)_{1+})", {{"U3_gri"}}},
      {"((1)_{0+},(1)_{1-})", {{"N3_gri"}}},
      // multiplicity 1 / multiplicity 2
      {"((1)_{0-},(1)_{1+})", {{"G2_gamma_gri", "W_eta1_gri"}, {"G2_gamma_gri+W_eta1_gri"}}},
      {"((1)_{1+},(1)_{1-})", {{"G2_gamma_gr", "W_eta2_gr"}, {"G2_gamma_gr+W_eta2_gr"}}},
      {"((1)_{0-},(1)_{1-})", {{"G2_tau_gri", "W_eta3_gri"}, {"G2_tau_gri+W_eta3_gri"}}},
  };
  std::vector<Block> out;
  for (const auto& [mp, m] : profile.entries) {
    if (m == 0) continue;
    if (m > hwv_catalog(mp).size())
      throw Error("reconstruct: multiplicity " + std::to_string(m) + " of " + mp.str() + " exceeds its bound");
    auto it = rules.find(mp.str());
    if (it == rules.end()) throw Error("reconstruct: no building block for " + mp.str());
    const auto& options = it->second;
    if (m > options.size()) throw Error("reconstruct: unsupported multiplicity for " + mp.str());
    out.push_back({options[m - 1], mp.str()});
  }
  if (out.empty()) out.push_back({{"F"}, "empty profile"});
  return out;
}

// ---------------------------------------------------------------- claims

struct Claim {
  std::string id;
  std::string kind;     // axioms, codim, table, tideal, proper, table-codim, reconstruct
  std::string subject;  // catalog expression
  Json expected;
};

struct ClaimResult {
  Claim claim;
  bool pass = false;
  std::string expected;
  std::string computed;
  std::string witness;  // on failure
  std::vector<std::string> notes;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<ClaimResult> results;
  std::vector<std::string> notes;
  std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& r : results) k += r.pass ? 1 : 0;
    return k;
  }
  std::size_t failed() const { return results.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

struct SuiteOptions {
  std::string only;       // id prefix filter
  int max_n = 5;          // codimension degree bound
  int tideal_degree = 4;  // T*-ideal check degree (capped by max_n)
};

namespace detail {

inline std::string seq_str(const std::vector<Integer>& v, std::size_t from = 1) {
  std::string out = "[";
  for (std::size_t i = from; i < v.size(); ++i) out += (i > from ? "," : "") + v[i].get_str();
  return out + "]";
}

inline std::string formula_str(long a, long b, long c) {
  return std::to_string(a) + "+" + std::to_string(b) + "n+" + std::to_string(c) + "C(n,2)";
}

inline Json table_row(std::initializer_list<std::pair<const char*, int>> entries) {
  Json row = Json::array();
  for (const auto& [mp, m] : entries) row.push_back(Json::array({mp, m}));
  return row;
}

}  // namespace detail

inline std::vector<std::string> registered_tideal_lines(const std::string& key) {
  static const std::map<std::string, std::vector<std::string>> sets = {
      {"N3_gri", {"x1:0-", "x1:1? x2:1?", "[x1:0+, x2:1+]"}},
      {"U3_gri", {"x1:0-", "x1:1? x2:1?", "[x1:0+, x2:1-]"}},
      {"C3_i1_gr",
       {"[x1:0+, x?]", "[x1:1+, x2:1+]", "x1:1-", "x1:0- x2:0-", "x1:1+ x2:0-", "x1:1+ x2:1+ x3:1+"}},
      {"C3_i3_gr",
       {"[x1:0+, x?]", "[x1:1-, x2:1-]", "x1:1+", "x1:0- x2:0-", "x1:1- x2:0-", "x1:1- x2:1- x3:1-"}},
      {"G2_tau_gr", {"x1:0-", "x1:1+", "[x1:0+, x?]", "x1:1- o x2:1-", "x1:1- x2:1- x3:1-"}},
      {"G2_psi_gr", {"x1:0-", "x1:1-", "[x1:0+, x?]", "x1:1+ o x2:1+", "x1:1+ x2:1+ x3:1+"}},
      {"G2_gamma_gr",
       {"x1:1- x2:1-", "x1:1+ x2:1+", "x1:0- x2:0-", "x1:1- x2:0-", "x1:1+ x2:0-", "[x1:0+, x?]",
        "x1:1- o x2:1+"}},
      {"W_eta2_gr", {"[x1:0+, x?]", "[x1:1-, x2:1+]", "x1:0-", "x1:1- x2:1-", "x1:1+ x2:1+"}},
      {"G2_gamma_gri+W_eta1_gri",
       {"[x1:0+, x?]", "x1:0- x2:0-", "x1:0- x2:1-", "x1:1+ x2:1+", "x1:1+ x2:1-", "x1:1- x2:1-"}},
      {"G2_gamma_gr+W_eta2_gr",
       {"[x1:0+, x?]", "x1:1- x2:1-", "x1:1- x2:0-", "x1:1+ x2:1+", "x1:1+ x2:0-", "x1:0- x2:0-"}},
      {"G2_tau_gri+W_eta3_gri",
       {"[x1:0+, x?]", "x1:0- x2:0-", "x1:0- x2:1+", "x1:1- x2:1-", "x1:1- x2:1+", "x1:1+ x2:1+"}},
  };
  auto it = sets.find(key);
  if (it == sets.end()) throw Error("no registered generating set for " + key);
  return it->second;
}

inline std::vector<std::string> registered_tideal_keys() {
  return {"N3_gri",    "U3_gri",           "C3_i1_gr", "C3_i3_gr", "G2_tau_gr", "G2_psi_gr", "G2_gamma_gr",
          "W_eta2_gr", "G2_gamma_gri+W_eta1_gri", "G2_gamma_gr+W_eta2_gr", "G2_tau_gri+W_eta3_gri"};
}

inline const std::vector<std::string>& direct_sum_keys() {
  static const std::vector<std::string> keys = {"G2_gamma_gri+W_eta1_gri", "G2_gamma_gr+W_eta2_gr",
                                                "G2_tau_gri+W_eta3_gri"};
  return keys;
}

/// The full registry in deterministic order.
inline std::vector<Claim> registry() {
  std::vector<Claim> out;
  std::vector<std::string> subjects = catalog_keys();
  for (const auto& s : direct_sum_keys()) subjects.push_back(s);

  for (const auto& s : subjects) out.push_back({"axioms/" + s, "axioms", s, Json::object()});

  // Codimension formulas c_n = a + b n + c C(n,2).
  const std::vector<std::tuple<std::string, int, int, int>> formulas = {
      {"F", 1, 0, 0},
      {"U3_star", 1, 1, 1},          {"N3_star", 1, 1, 2},          {"N3_gri", 1, 2, 2},
      {"U3_gri", 1, 2, 2},           {"C2_star", 1, 1, 0},          {"C2_gr", 1, 1, 0},
      {"C2_star_gr", 1, 1, 0},       {"C3_i1_gr", 1, 2, 1},         {"C3_i3_gr", 1, 2, 1},
      {"C3_i2", 1, 1, 1},            {"G2_tau", 1, 1, 1},           {"G2_psi_gr", 1, 1, 1},
      {"G2_tau_gr", 1, 1, 1},        {"G2_gamma_gr", 1, 3, 2},      {"G2_tau_gri", 1, 2, 2},
      {"G2_gamma_gri", 1, 2, 2},     {"W_eta2_gr", 1, 2, 2},        {"W_eta1_gri", 1, 3, 2},
      {"W_eta3_gri", 1, 3, 2},       {"G2_gamma_gri+W_eta1_gri", 1, 3, 4},
      {"G2_gamma_gr+W_eta2_gr", 1, 3, 4}, {"G2_tau_gri+W_eta3_gri", 1, 3, 4},
  };
  for (const auto& [s, a, b, c] : formulas)
    out.push_back({"codim/" + s, "codim", s, Json{{"a", a}, {"b", b}, {"c", c}}});

  // Nonzero proper cocharacters as listed, plus corrections for entries that cannot occur.
  using detail::table_row;
  struct Row {
    std::string family, key;
    Json listed;
    Json errata = Json::array();
  };
  const std::vector<Row> rows = {
      {"NU", "N3_star", table_row({{"((1)_{1-})", 1}, {"((1)_{0+},(1)_{0-})", 1}}),
       Json::array({Json{{"listed", "((1)_{1-})"}, {"corrected", "((1)_{0-})"}}})},
      {"NU", "U3_star", table_row({{"((1)_{1-})", 1}, {"((1,1)_{0+})", 1}}),
       Json::array({Json{{"listed", "((1)_{1-})"}, {"corrected", "((1)_{0-})"}}})},
      {"NU", "N3_gri", table_row({{"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0+},(1)_{1-})", 1}})},
      {"NU", "U3_gri", table_row({{"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0+},(1)_{1+})", 1}})},
      {"C", "C2_star", table_row({{"((1)_{0-})", 1}})},
      {"C", "C2_gr", table_row({{"((1)_{1+})", 1}})},
      {"C", "C2_star_gr", table_row({{"((1)_{1-})", 1}})},
      {"C", "C3_i2", table_row({{"((1)_{0-})", 1}, {"((2)_{0-})", 1}})},
      {"C", "C3_i1_gr", table_row({{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((2)_{1+})", 1}})},
      {"C", "C3_i3_gr", table_row({{"((1)_{0-})", 1}, {"((1)_{1-})", 1}, {"((2)_{1-})", 1}})},
      {"G2", "G2_tau", table_row({{"((1)_{0-})", 1}, {"((1,1)_{0-})", 1}})},
      {"G2", "G2_psi_gr", table_row({{"((1)_{1+})", 1}, {"((1,1)_{1+})", 1}})},
      {"G2", "G2_tau_gr", table_row({{"((1)_{1-})", 1}, {"((1,1)_{1-})", 1}})},
      {"G2", "G2_gamma_gr",
       table_row({{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{1+},(1)_{1-})", 1}})},
      {"G2", "G2_tau_gri", table_row({{"((1)_{0-})", 1}, {"((1)_{1-})", 1}, {"((1)_{0-},(1)_{1-})", 1}})},
      {"G2", "G2_gamma_gri", table_row({{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{0-},(1)_{1+})", 1}})},
      {"W", "W_eta2_gr", table_row({{"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{1+},(1)_{1-})", 1}})},
      {"W", "W_eta3_gri",
       table_row({{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0-},(1)_{1-})", 1}})},
      {"W", "W_eta1_gri",
       table_row({{"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1-})", 1}, {"((1)_{0+},(1)_{1-})", 1}}),
       Json::array({Json{{"listed", "((1)_{0+},(1)_{1-})"}, {"corrected", "((1)_{0-},(1)_{1+})"}}})},
      {"sum", "G2_gamma_gri+W_eta1_gri",
       table_row({{"((1)_{1-})", 1}, {"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{0-},(1)_{1+})", 2}})},
      {"sum", "G2_gamma_gr+W_eta2_gr",
       table_row({{"((1)_{1-})", 1}, {"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{1+},(1)_{1-})", 2}})},
      {"sum", "G2_tau_gri+W_eta3_gri",
       table_row({{"((1)_{1-})", 1}, {"((1)_{0-})", 1}, {"((1)_{1+})", 1}, {"((1)_{0-},(1)_{1-})", 2}})},
      {"trivial", "F", Json::array()},
  };
  for (const auto& r : rows)
    out.push_back({"table/" + r.family + "/" + r.key, "table", r.key, Json{{"listed", r.listed}, {"errata", r.errata}}});

  for (const auto& k : registered_tideal_keys())
    out.push_back({"tideal/" + k, "tideal", k, Json{{"generators", registered_tideal_lines(k)}}});

  for (const auto& s : subjects) {
    out.push_back({"proper/" + s, "proper", s, Json::object()});
    out.push_back({"table-codim/" + s, "table-codim", s, Json::object()});
  }

  for (const std::string s : {"F", "N3_gri+C3_i2", "G2_gamma_gri+W_eta1_gri", "G2_gamma_gr+W_eta2_gr",
                              "G2_tau_gri+W_eta3_gri", "W_eta2_gr", "U3_star+G2_tau+C3_i1_gr",
                              "N3_star+U3_gri+G2_tau_gr", "C3_i3_gr+W_eta1_gri"})
    out.push_back({"reconstruct/" + s, "reconstruct", s, Json::object()});
  return out;
}

/// Shared evaluators and codimension sequences across claims.
class SuiteContext {
 public:
  explicit SuiteContext(SuiteOptions opt) : opt_(std::move(opt)) {}

  const SuiteOptions& options() const { return opt_; }

  const Evaluator& evaluator(const std::string& spec) {
    auto it = evaluators_.find(spec);
    if (it == evaluators_.end()) it = evaluators_.emplace(spec, std::make_unique<Evaluator>(catalog_sum(spec))).first;
    return *it->second;
  }

  /// c_0..c_N.
  const std::vector<Integer>& codims(const std::string& spec, int N) {
    auto& seq = codims_[spec];
    const auto& ev = evaluator(spec);
    while (static_cast<int>(seq.size()) <= N) seq.push_back(codim(ev, static_cast<int>(seq.size())));
    return seq;
  }

  const MultiplicityTable& table(const std::string& spec) {
    auto it = tables_.find(spec);
    if (it == tables_.end()) it = tables_.emplace(spec, cocharacter_table(evaluator(spec))).first;
    return it->second;
  }

 private:
  SuiteOptions opt_;
  std::map<std::string, std::unique_ptr<Evaluator>> evaluators_;
  std::map<std::string, std::vector<Integer>> codims_;
  std::map<std::string, MultiplicityTable> tables_;
};

namespace detail {

inline std::string map_str(const std::map<Multipartition, std::size_t>& m) {
  std::string out;
  for (const auto& [mp, k] : m) out += (out.empty() ? "" : ", ") + (k > 1 ? std::to_string(k) + " " : "") + mp.str();
  return out.empty() ? "(none)" : out;
}

/// Structural reason why a multipartition has multiplicity zero, or "" if none is evident.
inline std::string zero_reason(const Evaluator& ev, const Multipartition& mp) {
  const auto dims = ev.component_bases().dims();
  for (std::size_t t = 0; t < 4; ++t)
    if (!mp.parts[t].empty() && dims[t] == 0)
      return "component " + VarType::from_index(static_cast<int>(t)).str() + " of the algebra is zero";
  const auto& a = ev.algebra();
  if (!mp.parts[0].empty() && a.unitary() && dims[0] == 1 &&
      subspace_contains(ev.component_bases().basis[0], *a.unit()))
    return "component 0+ is spanned by the unit, so every proper polynomial involving a 0+ variable vanishes";
  return "";
}

inline void run_axioms(SuiteContext& ctx, ClaimResult& r) {
  const auto a = catalog_sum(r.claim.subject);
  const auto v = validate(a);
  r.expected = "no violations, component dims sum to " + std::to_string(a.dim());
  if (!v.empty()) {
    r.computed = std::to_string(v.size()) + " violation(s)";
    r.witness = v.front().axiom + ": " + v.front().detail;
    return;
  }
  const auto dims = ctx.evaluator(r.claim.subject).component_bases().dims();
  r.computed = "no violations, dims (" + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
               std::to_string(dims[2]) + "," + std::to_string(dims[3]) + ")";
  r.pass = dims[0] + dims[1] + dims[2] + dims[3] == a.dim();
}

inline void run_codim(SuiteContext& ctx, ClaimResult& r) {
  const long a = r.claim.expected.at("a"), b = r.claim.expected.at("b"), c = r.claim.expected.at("c");
  const int N = ctx.options().max_n;
  const auto& seq = ctx.codims(r.claim.subject, N);
  std::vector<Integer> want(1, 1);
  for (int n = 1; n <= N; ++n) want.push_back(a + b * n + c * binomial(n, 2));
  r.expected = formula_str(a, b, c) + " = " + seq_str(want);
  r.computed = seq_str(std::vector<Integer>(seq.begin(), seq.begin() + N + 1));
  r.pass = true;
  for (int n = 1; n <= N; ++n)
    if (seq[static_cast<std::size_t>(n)] != want[static_cast<std::size_t>(n)]) {
      r.pass = false;
      r.witness = "first mismatch at n=" + std::to_string(n);
      break;
    }
}

inline void run_table(SuiteContext& ctx, ClaimResult& r) {
  const auto& ev = ctx.evaluator(r.claim.subject);
  std::map<Multipartition, std::size_t> listed;
  for (const auto& e : r.claim.expected.at("listed"))
    listed[Multipartition::parse(e[0].get<std::string>())] = e[1].get<std::size_t>();
  auto want = listed;
  bool errata_ok = true;
  for (const auto& e : r.claim.expected.at("errata")) {
    const auto bad = Multipartition::parse(e.at("listed").get<std::string>());
    const auto fix = Multipartition::parse(e.at("corrected").get<std::string>());
    const std::string reason = zero_reason(ev, bad);
    if (reason.empty()) {
      errata_ok = false;
      r.notes.push_back("correction of " + bad.str() + " rejected: no structural reason for multiplicity 0");
      continue;
    }
    auto it = want.find(bad);
    if (it == want.end()) {
      errata_ok = false;
      r.notes.push_back("correction refers to an unlisted entry " + bad.str());
      continue;
    }
    const auto m = it->second;
    want.erase(it);
    want[fix] = m;
    r.notes.push_back("WARN listed entry " + bad.str() + " replaced by " + fix.str() + ": " + reason);
  }
  const auto got = ctx.table(r.claim.subject).nonzero();
  r.expected = map_str(want);
  r.computed = map_str(got);
  r.pass = errata_ok && got == want;
  if (!r.pass) {
    std::string w;
    for (const auto& [mp, m] : want)
      if (!got.count(mp) || got.at(mp) != m) w += "missing/mismatched " + mp.str() + "; ";
    for (const auto& [mp, m] : got)
      if (!want.count(mp)) w += "extra " + mp.str() + "; ";
    r.witness = w;
  }
}

inline void run_tideal(SuiteContext& ctx, ClaimResult& r) {
  const auto gens = GeneratorSet::from_lines(r.claim.expected.at("generators").get<std::vector<std::string>>());
  const int deg = std::min(ctx.options().tideal_degree, ctx.options().max_n);
  const auto rep = verify_tideal(ctx.evaluator(r.claim.subject), gens, deg);
  r.notes = rep.notes;
  r.expected = "all generators identities; consequences = identities in every signature of degree <= " +
               std::to_string(deg);
  std::string dims;
  for (const auto& d : rep.degrees)
    dims += (dims.empty() ? "" : " ") + std::to_string(d.n) + ":" + std::to_string(d.consequence_dim) + "/" +
            std::to_string(d.identity_dim);
  r.computed = std::to_string(gens.generators.size()) + " generators after expansion; consequence/identity dims " +
               dims + (rep.pass() ? " (verified up to degree " + std::to_string(deg) + ", bounded check)" : "");
  r.pass = rep.pass();
  for (const auto& g : rep.generators)
    if (!g.identity) {
      r.witness = "not an identity: " + g.generator;
      if (g.witness) {
        r.witness += " at";
        for (const auto& [i, v] : g.witness->assignment)
          r.witness += " x" + std::to_string(i) + "=" + format_combination(ctx.evaluator(r.claim.subject).algebra().basis(), v);
      }
      return;
    }
  for (const auto& d : rep.degrees)
    for (const auto& s : d.signatures)
      if (!s.pass()) {
        r.witness = "signature " + s.sig.str() + ": " +
                    (s.sound ? "identity not generated: " + s.missing : std::string("unsound consequence"));
        return;
      }
}

inline void run_proper(SuiteContext& ctx, ClaimResult& r) {
  const auto& ev = ctx.evaluator(r.claim.subject);
  const auto rep = crosscheck_proper(ev, 2);
  std::string a, b;
  for (const auto& row : rep.rows) {
    a += (a.empty() ? "" : ",") + row.from_codim.get_str();
    b += (b.empty() ? "" : ",") + row.from_signature.get_str();
  }
  r.expected = "gamma_1,2 from codimensions [" + a + "]";
  r.computed = "gamma_1,2 from proper signatures [" + b + "]";
  r.pass = rep.pass();
  if (!r.pass)
    for (const auto& row : rep.rows) {
      r.witness += "n=" + std::to_string(row.n) + ":";
      for (const auto& [sig, g] : row.breakdown) r.witness += " " + sig.str() + "->" + std::to_string(g);
      r.witness += "; ";
    }
}

inline void run_table_codim(SuiteContext& ctx, ClaimResult& r) {
  const int N = ctx.options().max_n;
  const auto& seq = ctx.codims(r.claim.subject, N);
  const auto from_table = codim_from_table(ctx.table(r.claim.subject), N);
  const std::vector<Integer> direct(seq.begin(), seq.begin() + N + 1);
  r.expected = "codimensions " + seq_str(direct);
  r.computed = "from cocharacter table " + seq_str(from_table);
  r.pass = direct == from_table;
}

inline void run_reconstruct(SuiteContext& ctx, ClaimResult& r) {
  const int N = ctx.options().max_n;
  const auto& target = ctx.codims(r.claim.subject, N);
  const auto blocks = reconstruct(ctx.table(r.claim.subject));
  std::string shape;
  std::size_t combos = 1;
  for (const auto& b : blocks) {
    std::string alt;
    for (const auto& s : b.alternatives) alt += (alt.empty() ? "" : " | ") + s;
    shape += (shape.empty() ? "" : " + ") + (b.ambiguous() ? "{" + alt + "}" : alt);
    combos *= b.alternatives.size();
  }
  r.expected = "codimensions " + seq_str(std::vector<Integer>(target.begin(), target.begin() + N + 1)) +
               " reproduced by " + shape;
  std::vector<std::string> matched, tried;
  for (std::size_t c = 0; c < combos; ++c) {
    std::string spec;
    std::size_t rest = c;
    for (const auto& b : blocks) {
      spec += (spec.empty() ? "" : "+") + b.alternatives[rest % b.alternatives.size()];
      rest /= b.alternatives.size();
    }
    const auto& got = ctx.codims(spec, N);
    bool ok = true;
    for (int n = 0; n <= N; ++n) ok = ok && got[static_cast<std::size_t>(n)] == target[static_cast<std::size_t>(n)];
    tried.push_back(spec + " " + seq_str(std::vector<Integer>(got.begin(), got.begin() + N + 1)));
    if (ok) matched.push_back(spec);
  }
  r.pass = !matched.empty();
  if (r.pass) {
    r.computed = "matched by " + matched.front();
    for (std::size_t i = 1; i < matched.size(); ++i) r.computed += " ; " + matched[i];
  } else {
    r.computed = "no combination matched";
    for (const auto& t : tried) r.witness += t + "; ";
  }
}

}  // namespace detail

inline ClaimResult run_claim(SuiteContext& ctx, const Claim& c) {
  ClaimResult r;
  r.claim = c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (c.kind == "axioms") detail::run_axioms(ctx, r);
    else if (c.kind == "codim") detail::run_codim(ctx, r);
    else if (c.kind == "table") detail::run_table(ctx, r);
    else if (c.kind == "tideal") detail::run_tideal(ctx, r);
    else if (c.kind == "proper") detail::run_proper(ctx, r);
    else if (c.kind == "table-codim") detail::run_table_codim(ctx, r);
    else if (c.kind == "reconstruct") detail::run_reconstruct(ctx, r);
    else throw Error("unknown claim kind " + c.kind);
  } catch (const std::exception& e) {
    r.pass = false;
    r.witness = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline VerificationReport run_claims(const std::vector<Claim>& claims, const SuiteOptions& opt = {}) {
  SuiteContext ctx(opt);
  VerificationReport rep;
  for (const auto& c : claims)
    if (c.id.rfind(opt.only, 0) == 0) rep.results.push_back(run_claim(ctx, c));
  bool uses_blocks = false;
  for (const auto& r : rep.results) uses_blocks = uses_blocks || r.claim.kind == "reconstruct";
  if (uses_blocks)
    rep.notes.push_back(
        "WARN the building-block list names C3_i2_gr, which is not defined among the algebras; it is read as "
        "C3_i3_gr");
  return rep;
}

inline VerificationReport run_paper_suite(const SuiteOptions& opt = {}) { return run_claims(registry(), opt); }

// ---------------------------------------------------------------- emitters

inline Json report_json(const VerificationReport& rep, bool timings = false) {
  Json j;
  j["summary"] = {{"claims", rep.results.size()}, {"passed", rep.passed()}, {"failed", rep.failed()}};
  j["notes"] = rep.notes;
  Json arr = Json::array();
  for (const auto& r : rep.results) {
    Json c = {{"id", r.claim.id},       {"kind", r.claim.kind},     {"subject", r.claim.subject},
              {"pass", r.pass},         {"expected", r.expected},   {"computed", r.computed}};
    if (!r.witness.empty()) c["witness"] = r.witness;
    if (!r.notes.empty()) c["notes"] = r.notes;
    if (timings) c["seconds"] = r.seconds;
    arr.push_back(c);
  }
  j["claims"] = arr;
  return j;
}

inline std::string report_text(const VerificationReport& rep, bool timings = false) {
  std::string out;
  for (const auto& r : rep.results) {
    out += std::string(r.pass ? "PASS " : "FAIL ") + r.claim.id + "  " + r.computed;
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.3fs)", r.seconds);
      out += buf;
    }
    out += "\n";
    if (!r.pass) out += "     expected: " + r.expected + "\n     witness: " + r.witness + "\n";
    for (const auto& n : r.notes)
      if (n.rfind("WARN", 0) == 0) out += "     " + n + "\n";
  }
  for (const auto& n : rep.notes) out += n + "\n";
  out += std::to_string(rep.passed()) + "/" + std::to_string(rep.results.size()) + " claims passed\n";
  return out;
}

inline std::string report_markdown(const VerificationReport& rep, bool timings = false) {
  static const std::vector<std::pair<std::string, std::string>> sections = {
      {"axioms", "Axioms"},
      {"codim", "Codimension formulas"},
      {"table", "Proper cocharacter tables"},
      {"tideal", "T*-ideal generating sets (bounded degree)"},
      {"proper", "Proper codimensions: binomial transform vs. signatures"},
      {"table-codim", "Codimensions recovered from cocharacter tables"},
      {"reconstruct", "Reconstruction from building blocks"},
  };
  std::string out = "# Verification report\n\n" + std::to_string(rep.passed()) + "/" +
                    std::to_string(rep.results.size()) + " claims passed.\n";
  for (const auto& [kind, title] : sections) {
    std::string body;
    for (const auto& r : rep.results) {
      if (r.claim.kind != kind) continue;
      body += "| " + r.claim.id + " | " + (r.pass ? "PASS" : "**FAIL**") + " | " + r.expected + " | " + r.computed;
      if (!r.witness.empty()) body += " (" + r.witness + ")";
      for (const auto& n : r.notes)
        if (n.rfind("WARN", 0) == 0) body += "<br>" + n;
      if (timings) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " | %.3f", r.seconds);
        body += buf;
      }
      body += " |\n";
    }
    if (body.empty()) continue;
    out += "\n## " + title + "\n\n| claim | verdict | expected | computed |" + std::string(timings ? " seconds |" : "") +
           "\n|---|---|---|---|" + std::string(timings ? "---|" : "") + "\n" + body;
  }
  if (!rep.notes.empty()) {
    out += "\n## Notes\n\n";
    for (const auto& n : rep.notes) out += "- " + n + "\n";
  }
  return out;
}

}  // namespace pistar
