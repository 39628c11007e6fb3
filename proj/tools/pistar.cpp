// Command-line front end. Exit codes: 0 success/all pass, 1 a check failed, 2 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "pistar/pistar.hpp"

using namespace pistar;

namespace {

std::string seq_json_free(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].get_str();
  return out;
}

Json int_array(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
  return a;
}

int cmd_validate(const std::string& file) {
  const auto a = load_algebra_file(file);
  const auto v = validate(a);
  if (v.empty()) {
    const auto dims = components(a).dims();
    std::cout << a.name() << ": valid, dim " << a.dim() << ", components 0+ 0- 1+ 1- = " << dims[0] << " "
              << dims[1] << " " << dims[2] << " " << dims[3] << "\n";
    return 0;
  }
  std::cout << a.name() << ": " << v.size() << " violation(s)\n";
  for (const auto& x : v) {
    std::cout << "  " << x.axiom << " at (";
    for (std::size_t i = 0; i < x.witness.size(); ++i) std::cout << (i ? "," : "") << x.witness[i];
    std::cout << "): " << x.detail << "\n";
  }
  return 1;
}

int cmd_catalog_show(const std::string& key, bool json) {
  const auto a = catalog_sum(key);
  if (json) {
    std::cout << to_json(a).dump(2) << "\n";
    return 0;
  }
  const auto comps = components(a);
  std::cout << a.name() << " (dim " << a.dim() << (a.unitary() ? ", unitary" : "") << ")\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::cout << "  " << a.basis()[i] << "  parity " << a.parity(i) << "  * -> "
              << format_combination(a.basis(), star(a, basis_vector(a.dim(), i))) << "\n";
  }
  for (int t = 0; t < 4; ++t) {
    std::cout << "  A_" << VarType::from_index(t).str() << ":";
    const auto& b = comps.basis[static_cast<std::size_t>(t)];
    if (b.rows() == 0) std::cout << " 0";
    for (std::size_t r = 0; r < b.rows(); ++r) std::cout << (r ? ", " : " ") << format_combination(a.basis(), b.row_vector(r));
    std::cout << "\n";
  }
  return 0;
}

int cmd_codim(const std::string& spec, int N, bool per_sig, bool json) {
  const Evaluator ev(resolve_algebra(spec));
  std::vector<Integer> c{1};
  std::vector<SignatureCodimRecord> recs;
  for (int n = 1; n <= N; ++n) c.push_back(codim(ev, n, &recs));
  std::optional<std::vector<Integer>> gamma;
  if (ev.algebra().unitary()) gamma = proper_from_codim(c);
  if (json) {
    Json j;
    j["algebra"] = ev.algebra().name();
    j["c"] = int_array(c);
    j["gamma"] = gamma ? int_array(*gamma) : Json(nullptr);
    Json ps = Json::array();
    if (per_sig)
      for (const auto& r : recs) ps.push_back({{"sig", r.sig.counts}, {"codim", r.codim.get_si()}});
    j["per_signature"] = ps;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << ev.algebra().name() << "\n  c: " << seq_json_free(c) << "\n";
  if (gamma) std::cout << "  gamma: " << seq_json_free(*gamma) << "\n";
  if (per_sig)
    for (const auto& r : recs)
      std::cout << "  " << r.sig.str() << "  codim " << r.codim << "  identities " << r.identity_dim << "/" << r.pn_dim
                << "\n";
  return 0;
}

int cmd_proper(const std::string& spec, int N) {
  const Evaluator ev(resolve_algebra(spec));
  if (!ev.algebra().unitary()) throw Error(ev.algebra().name() + " is not unitary; proper codimensions need a unit");
  const auto gamma = proper_from_codim(codim_sequence(ev, N));
  std::cout << ev.algebra().name() << "\n  gamma: " << seq_json_free(gamma) << "\n";
  const auto rep = crosscheck_proper(ev, std::min(N, 2));
  for (const auto& row : rep.rows) {
    std::cout << "  n=" << row.n << "  transform " << row.from_codim << "  signatures " << row.from_signature;
    for (const auto& [sig, g] : row.breakdown) std::cout << "  " << sig.str() << ":" << g;
    std::cout << "\n";
  }
  std::cout << (rep.pass() ? "  consistent\n" : "  MISMATCH\n");
  return rep.pass() ? 0 : 1;
}

int cmd_cocharacter(const std::string& spec, bool json, bool markdown) {
  const auto t = cocharacter_table(resolve_algebra(spec));
  if (json) {
    Json j;
    j["algebra"] = t.algebra;
    Json e = Json::array();
    for (const auto& [mp, m] : t.entries) e.push_back({{"multipartition", mp.str()}, {"multiplicity", m}});
    j["entries"] = e;
    std::cout << j.dump(2) << "\n";
  } else if (markdown) {
    std::cout << cocharacter_markdown({t});
  } else {
    for (const auto& [mp, m] : t.entries) std::cout << mp.str() << "  " << m << "\n";
  }
  return 0;
}

int cmd_verify_tideal(const std::string& spec, const std::string& file, int maxN, bool json) {
  const auto gens = GeneratorSet::from_file(file);
  const auto rep = verify_tideal(resolve_algebra(spec), gens, maxN);
  if (json) {
    Json j;
    j["algebra"] = rep.algebra;
    j["max_degree"] = rep.max_degree;
    j["notes"] = rep.notes;
    Json g = Json::array();
    for (const auto& x : rep.generators) g.push_back({{"generator", x.generator}, {"identity", x.identity}});
    j["generators"] = g;
    Json d = Json::array();
    for (const auto& x : rep.degrees)
      d.push_back({{"n", x.n},
                   {"consequence_dim", x.consequence_dim},
                   {"identity_dim", x.identity_dim},
                   {"verdict", x.pass() ? "verified at n" : "failed"}});
    j["degrees"] = d;
    j["pass"] = rep.pass();
    std::cout << j.dump(2) << "\n";
    return rep.pass() ? 0 : 1;
  }
  std::cout << rep.algebra << ": " << gens.generators.size() << " generators after expansion and star closure\n";
  for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  for (const auto& x : rep.generators) {
    std::cout << "  " << (x.identity ? "identity     " : "NOT identity ") << x.generator;
    if (x.witness)
      for (const auto& [i, v] : x.witness->assignment)
        std::cout << "  x" << i << "=" << format_combination(resolve_algebra(spec).basis(), v);
    std::cout << "\n";
  }
  for (const auto& d : rep.degrees) {
    std::cout << "  degree " << d.n << ": consequences " << d.consequence_dim << ", identities " << d.identity_dim
              << " (summed over signatures) " << (d.pass() ? "verified" : "FAILED") << "\n";
    for (const auto& s : d.signatures)
      if (!s.pass())
        std::cout << "    " << s.sig.str() << ": " << s.consequence_dim << "/" << s.identity_dim
                  << (s.sound ? "" : " unsound") << (s.missing.empty() ? "" : " missing " + s.missing) << "\n";
  }
  std::cout << (rep.pass() ? "verified up to degree " + std::to_string(maxN) + " (bounded check)\n" : "FAILED\n");
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pistar: codimensions and cocharacters of superalgebras with superinvolution"};
  app.require_subcommand(1);

  auto* algebra = app.add_subcommand("algebra", "Algebra files");
  algebra->require_subcommand(1);
  std::string file;
  auto* validate_cmd = algebra->add_subcommand("validate", "Check the axioms of a JSON algebra");
  validate_cmd->add_option("file", file, "JSON algebra file")->required();

  auto* cat = app.add_subcommand("catalog", "Built-in algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog keys");
  std::string key;
  bool json = false, markdown = false, per_sig = false, timings = false;
  auto* cat_show = cat->add_subcommand("show", "Describe a catalog algebra");
  cat_show->add_option("key", key, "Catalog key or sum like A+B")->required();
  cat_show->add_flag("--json", json, "Emit the JSON algebra format");

  int n = 5;
  auto* codim_cmd = app.add_subcommand("codim", "Codimension sequence c_0..c_N");
  codim_cmd->add_option("algebra", key, "Catalog key, sum A+B, or JSON file")->required();
  codim_cmd->add_option("--n", n, "Maximal degree")->check(CLI::Range(1, 7));
  codim_cmd->add_flag("--per-signature", per_sig, "Show per-signature codimensions");
  codim_cmd->add_flag("--json", json, "JSON output");

  auto* proper_cmd = app.add_subcommand("proper-codim", "Proper codimensions");
  proper_cmd->add_option("algebra", key, "Catalog key, sum A+B, or JSON file")->required();
  proper_cmd->add_option("--n", n, "Maximal degree")->check(CLI::Range(1, 7));

  auto* coch_cmd = app.add_subcommand("cocharacter", "Proper cocharacter multiplicities in degrees 1 and 2");
  coch_cmd->add_option("algebra", key, "Catalog key, sum A+B, or JSON file")->required();
  auto* coch_fmt = coch_cmd->add_option_group("format");
  coch_fmt->add_flag("--json", json, "JSON output");
  coch_fmt->add_flag("--markdown", markdown, "Markdown table");
  coch_fmt->require_option(0, 1);

  std::string gens_file;
  int max_degree = 4;
  auto* tideal_cmd = app.add_subcommand("verify-tideal", "Check a generating set of the identities");
  tideal_cmd->add_option("algebra", key, "Catalog key, sum A+B, or JSON file")->required();
  tideal_cmd->add_option("--generators", gens_file, "One polynomial per line")->required();
  tideal_cmd->add_option("--max-degree", max_degree, "Degree bound")->check(CLI::Range(1, 5));
  tideal_cmd->add_flag("--json", json, "JSON output");

  SuiteOptions opt;
  auto* paper_cmd = app.add_subcommand("verify-paper", "Run the built-in claim registry");
  paper_cmd->add_option("--only", opt.only, "Run claims whose id starts with this prefix");
  paper_cmd->add_option("--max-n", opt.max_n, "Codimension degree bound")->check(CLI::Range(1, 6));
  auto* paper_fmt = paper_cmd->add_option_group("format");
  paper_fmt->add_flag("--json", json, "JSON report");
  paper_fmt->add_flag("--markdown", markdown, "Markdown report");
  paper_fmt->require_option(0, 1);
  paper_cmd->add_flag("--timings", timings, "Include per-claim runtimes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*cat_list) {
      for (const auto& k : catalog_keys()) std::cout << k << "\n";
      return 0;
    }
    if (*cat_show) return cmd_catalog_show(key, json);
    if (*codim_cmd) return cmd_codim(key, n, per_sig, json);
    if (*proper_cmd) return cmd_proper(key, n);
    if (*coch_cmd) return cmd_cocharacter(key, json, markdown);
    if (*tideal_cmd) return cmd_verify_tideal(key, gens_file, max_degree, json);
    if (*paper_cmd) {
      const auto rep = run_paper_suite(opt);
      if (rep.results.empty()) {
        std::cerr << "no claim matches '" << opt.only << "'\n";
        return 2;
      }
      if (json) std::cout << report_json(rep, timings).dump(2) << "\n";
      else if (markdown) std::cout << report_markdown(rep, timings);
      else std::cout << report_text(rep, timings);
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
