// mcg: command-line front end for the presentation / homology library.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcg/mcg.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mcg;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Options {
  std::string family;
  std::optional<int> genus;
  std::string genus_range;
  std::string file;
  std::string coefficients = "trivial";
  std::string subgroup;
  std::string transversal;
  std::optional<std::size_t> max_cosets;
  std::string format = "text";
  std::string expect;
  bool expect_given = false;
  bool simplify = false;
  bool perturb = false;
};

// One presentation to run a command on.
struct Job {
  Presentation presentation;
  std::optional<FamilyId> family;
  std::string group;
  int genus = 0;
};

struct Outcome {
  std::string text;
  json record;
  bool ok = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> genera(const Options& o, Family f) {
  if (!o.genus_range.empty()) {
    const auto dots = o.genus_range.find("..");
    if (dots == std::string::npos) throw Error("--genus-range expects a..b");
    const int a = std::stoi(o.genus_range.substr(0, dots));
    const int b = std::stoi(o.genus_range.substr(dots + 2));
    if (a > b) throw Error("--genus-range: empty range " + o.genus_range);
    std::vector<int> out;
    for (int g = a; g <= b; ++g) out.push_back(g);
    return out;
  }
  if (o.genus) return {*o.genus};
  if (f == Family::N3) return {3};
  throw Error("--genus or --genus-range is required for family " + std::string(family_name(f)));
}

std::vector<Job> resolve_jobs(const Options& o) {
  if (o.family.empty() == o.file.empty()) throw Error("give exactly one of --family or --file");
  if (!o.file.empty()) {
    return {{parse_presentation(read_file(o.file)), std::nullopt, o.file, 0}};
  }
  const auto f = parse_family(o.family);
  if (!f) throw Error("unknown family '" + o.family + "' (see `mcg catalog list`)");
  std::vector<Job> jobs;
  for (int g : genera(o, *f)) {
    const FamilyId id{*f, g};
    check_genus(id);
    jobs.push_back({build_presentation(id), id, std::string(family_name(*f)), g});
  }
  return jobs;
}

// Accepts "Z/2 ⊕ Z/12 ⊕ Z", "2,12" or "0".
InvariantFactors parse_expectation(const std::string& s) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    const auto a = cur.find_first_not_of(" \t"), b = cur.find_last_not_of(" \t");
    if (a != std::string::npos) tokens.push_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  const std::string oplus = "⊕";
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, oplus.size(), oplus) == 0) {
      flush();
      i += oplus.size();
    } else if (s[i] == ',' || s[i] == '+') {
      flush();
      ++i;
    } else {
      cur += s[i++];
    }
  }
  flush();
  std::vector<long> diag;
  std::size_t free_rank = 0;
  for (const std::string& t : tokens) {
    if (t == "0") continue;
    if (t == "Z") {
      ++free_rank;
      continue;
    }
    const std::string digits = t.rfind("Z/", 0) == 0 ? t.substr(2) : t;
    std::size_t used = 0;
    long d = 0;
    try {
      d = std::stol(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != digits.size() || d < 1) throw Error("cannot read expected group '" + s + "'");
    diag.push_back(d);
  }
  // Normalize to a divisor chain.
  IntMatrix rel(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) rel(i, i) = diag[i];
  InvariantFactors f = invariant_factors(FpAbelianGroup(diag.size(), rel));
  f.free_rank += free_rank;
  return f;
}

json to_json(const InvariantFactors& f) {
  json torsion = json::array();
  for (const Integer& t : f.torsion) torsion.push_back(t.convert_to<std::int64_t>());
  return {{"torsion", torsion}, {"free_rank", f.free_rank}};
}

json base_record(const Job& j) {
  return {{"group", j.group}, {"genus", j.genus}};
}

std::string abelianization_ref(const std::optional<FamilyId>& id) {
  if (!id) return "";
  switch (id->family) {
    case Family::SphereBraid: return "Theorem 3.1";
    case Family::PuncturedSphere: return "Theorem 3.2";
    case Family::PuncturedSphereExt: return "Theorem 3.4";
    case Family::HyperellipticN:
    case Family::N3: return "Corollary 4.2";
    case Family::HyperellipticNPlus: return "Corollary 4.5";
    case Family::HyperellipticS:
    case Family::HyperellipticSExt: return "Remark, Section 4";
    case Family::Braid: return "Theorem 3.2 (proof)";
  }
  return "";
}

std::string twisted_ref(const FamilyId& id) {
  return id.family == Family::HyperellipticNPlus ? "Theorem 5.5" : "Theorem 5.6";
}

std::string verify_ref(const FamilyId& id) {
  switch (id.family) {
    case Family::HyperellipticNPlus: return "Theorem 4.4 / Section 5.2";
    case Family::N3: return "Corollary 4.3 / Section 5.2";
    default: return "Theorem 4.1 / Section 5.2";
  }
}

// Compares against an explicit --expect value, or the catalog's stated value
// when --expect is given bare.
bool check_expectation(const Options& o, const InvariantFactors& got,
                       const std::optional<InvariantFactors>& stated, std::string& note) {
  if (!o.expect_given) return true;
  std::optional<InvariantFactors> want;
  if (!o.expect.empty()) {
    want = parse_expectation(o.expect);
  } else {
    if (!stated) throw Error("--expect without a value needs a catalog family with a known answer");
    want = stated;
  }
  const bool ok = got == *want;
  note = ok ? "" : "expected " + to_string(*want) + ", got " + to_string(got);
  return ok;
}

Outcome finish_group(const Options& o, const Job& j, const InvariantFactors& result,
                     const std::optional<InvariantFactors>& stated, const std::string& ref) {
  Outcome out;
  json rec = base_record(j);
  rec["result"] = to_json(result);
  rec["paper_ref"] = ref;
  std::string note;
  out.ok = check_expectation(o, result, stated, note);
  if (o.expect_given) rec["expect_pass"] = out.ok;
  out.text = to_string(result);
  if (!note.empty()) out.text += "\nMISMATCH: " + note;
  out.record = std::move(rec);
  return out;
}

Outcome cmd_abelianize(const Options& o, const Job& j) {
  const auto stated = j.family ? stated_abelianization(*j.family) : std::nullopt;
  return finish_group(o, j, abelianization(j.presentation), stated, abelianization_ref(j.family));
}

Outcome cmd_h1(const Options& o, const Job& j) {
  if (o.coefficients == "trivial") {
    const auto stated = j.family ? stated_abelianization(*j.family) : std::nullopt;
    const InvariantFactors r = twisted_h1(j.presentation, GAction::trivial(j.presentation.generator_count()));
    return finish_group(o, j, r, stated, abelianization_ref(j.family));
  }
  if (!j.family || !is_nonorientable_family(j.family->family))
    throw Error("--coefficients h1-module needs one of the families hyperelliptic-n, hyperelliptic-n-plus, n3");
  const InvariantFactors r = twisted_h1(j.presentation, build_h1_action(*j.family));
  return finish_group(o, j, r, stated_twisted_h1(*j.family), twisted_ref(*j.family));
}

std::size_t max_cosets(const Options& o) {
  if (o.max_cosets) return *o.max_cosets;
  if (const char* env = std::getenv("MCG_MAX_COSETS")) {
    try {
      const long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(std::string("MCG_MAX_COSETS must be a positive integer, got '") + env + "'");
  }
  return kDefaultMaxCosets;
}

Outcome cmd_schreier(const Options& o, const Job& j) {
  const Presentation& p = j.presentation;
  const CosetTable t = todd_coxeter(p, parse_word_list(o.subgroup, ',', p), max_cosets(o));
  std::optional<std::vector<FreeWord>> override_words;
  if (!o.transversal.empty()) override_words = parse_word_list(o.transversal, ';', p);
  const SchreierPresentation s = reidemeister_schreier(p, t, override_words);
  const std::size_t raw_count = s.base.generator_count();
  const Presentation sub = o.simplify ? eliminate_generators(s.base) : s.base;
  const InvariantFactors ab = abelianization(sub);

  std::vector<std::string> transversal;
  for (const FreeWord& w : s.transversal) transversal.push_back(format_word(w, p.generators()));

  Outcome out;
  std::string note;
  out.ok = check_expectation(o, ab, std::nullopt, note);
  std::ostringstream os;
  os << "index " << t.cosets << "\n";
  os << "transversal:";
  for (std::size_t c = 0; c < transversal.size(); ++c) os << (c ? "; " : " ") << transversal[c];
  os << "\nschreier generators: " << raw_count << " (n|X|-(n-1) = " << schreier_generator_count(t, p) << ")\n";
  if (o.simplify) os << "after elimination: " << sub.generator_count() << " generators\n";
  os << "presentation:\n" << to_grammar(sub);
  os << "abelianization: " << to_string(ab);
  if (!note.empty()) os << "\nMISMATCH: " << note;
  out.text = os.str();

  json rec = base_record(j);
  rec["result"] = to_json(ab);
  rec["paper_ref"] = j.family ? "Remark after Theorem 3.2" : "";
  rec["index"] = t.cosets;
  rec["transversal"] = transversal;
  rec["schreier_generators"] = raw_count;
  rec["presentation"] = to_grammar(sub);
  if (o.expect_given) rec["expect_pass"] = out.ok;
  out.record = std::move(rec);
  return out;
}

Outcome cmd_coset_enum(const Options& o, const Job& j) {
  const Presentation& p = j.presentation;
  const CosetTable t = todd_coxeter(p, parse_word_list(o.subgroup, ',', p), max_cosets(o));
  Outcome out;
  if (o.expect_given) {
    if (o.expect.empty()) throw Error("coset-enum --expect needs the expected index");
    out.ok = std::to_string(t.cosets) == o.expect;
  }
  std::ostringstream os;
  os << "index " << t.cosets << "\n";
  os << "coset";
  for (const std::string& g : p.generators()) os << '\t' << g;
  os << "\ttransversal\n";
  json table = json::array();
  for (std::size_t c = 0; c < t.cosets; ++c) {
    os << c;
    json row = json::array();
    for (std::size_t x = 0; x < p.generator_count(); ++x) {
      os << '\t' << t.action[x][c];
      row.push_back(t.action[x][c]);
    }
    os << '\t' << format_word(t.transversal[c], p.generators()) << "\n";
    table.push_back(row);
  }
  if (!out.ok) os << "MISMATCH: expected index " << o.expect << "\n";
  out.text = os.str();
  if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
  json rec = base_record(j);
  rec["index"] = t.cosets;
  rec["action"] = table;
  rec["paper_ref"] = j.family ? "Remark after Theorem 3.2" : "";
  if (o.expect_given) rec["expect_pass"] = out.ok;
  out.record = std::move(rec);
  return out;
}

Outcome cmd_verify_rep(const Options& o, const Job& j) {
  if (!j.family || !is_nonorientable_family(j.family->family))
    throw Error("verify-rep needs one of the families hyperelliptic-n, hyperelliptic-n-plus, n3");
  GAction a = build_h1_action(*j.family);
  if (o.perturb) {
    // Negative control: rho (or s when there is no rho) acts trivially.
    const auto victim = j.presentation.find("rho") ? j.presentation.at("rho") : j.presentation.at("s");
    a = a.with_matrix(victim, IntMatrix::identity(a.module().rank()));
  }
  const auto report = verify_representation(j.presentation, a);
  bool pairing_ok = true;
  for (GeneratorId x = 0; x < a.generator_count(); ++x) pairing_ok = pairing_ok && preserves_pairing(a.matrix(x));

  Outcome out;
  out.ok = all_pass(report) && pairing_ok;
  std::ostringstream os;
  json rows = json::array();
  std::size_t passed = 0;
  for (const RelatorCheck& c : report) {
    const Relator& r = j.presentation.relators()[c.index];
    os << (c.label.empty() ? "#" + std::to_string(c.index) : c.label) << '\t' << (c.pass ? "pass" : "FAIL") << '\t'
       << format_relator(r, j.presentation.generators()) << "\n";
    rows.push_back({{"index", c.index}, {"label", c.label}, {"pass", c.pass}});
    passed += c.pass ? 1 : 0;
  }
  os << passed << "/" << report.size() << " relators pass; pairing " << (pairing_ok ? "preserved" : "NOT preserved");
  out.text = os.str();
  json rec = base_record(j);
  rec["relators"] = rows;
  rec["pairing_preserved"] = pairing_ok;
  rec["pass"] = out.ok;
  rec["paper_ref"] = verify_ref(*j.family);
  out.record = std::move(rec);
  return out;
}

int run_jobs(const Options& o, Outcome (*cmd)(const Options&, const Job&)) {
  const std::vector<Job> jobs = resolve_jobs(o);
  std::vector<std::future<Outcome>> pending;
  for (const Job& j : jobs) pending.push_back(std::async(std::launch::async, cmd, std::cref(o), std::cref(j)));

  std::vector<Outcome> results;
  for (auto& f : pending) results.push_back(f.get());  // rethrows the first failure in genus order

  bool ok = true;
  const bool sweep = jobs.size() > 1;
  if (o.format == "json") {
    if (sweep) {
      json arr = json::array();
      for (Outcome& r : results) arr.push_back(std::move(r.record));
      std::cout << arr.dump(2) << "\n";
    } else {
      std::cout << results[0].record.dump(2) << "\n";
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    ok = ok && results[i].ok;
    if (o.format == "json") continue;
    if (sweep) {
      std::cout << "g=" << jobs[i].genus << ":" << (results[i].text.find('\n') == std::string::npos ? " " : "\n")
                << results[i].text << "\n";
    } else {
      std::cout << results[i].text << "\n";
    }
  }
  return ok ? kOk : kMismatch;
}

int catalog_list() {
  for (const auto& [f, name] : kFamilyNames) {
    std::cout << name << "\tgenus " << (f == Family::N3 ? "= 3" : ">= " + std::to_string(min_genus(f)));
    if (is_nonorientable_family(f)) std::cout << "\th1-module";
    std::cout << "\n";
  }
  return kOk;
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "catalog family (see `mcg catalog list`)");
  cmd->add_option("--genus", o.genus, "genus parameter");
  cmd->add_option("--genus-range", o.genus_range, "sweep a..b, evaluated concurrently");
  cmd->add_option("--file", o.file, "presentation file");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_expect(CLI::App* cmd, Options& o) {
  cmd->add_option("--expect", o.expect, "expected result; bare flag uses the catalog's stated value")
      ->expected(0, 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented groups, mapping class group presentations and their homology"};
  app.require_subcommand(1);
  Options o;

  auto* ab = app.add_subcommand("abelianize", "invariant factors of the abelianization");
  add_source_options(ab, o);
  add_expect(ab, o);

  auto* h1 = app.add_subcommand("h1", "first homology with trivial or H_1(N_g; Z) coefficients");
  add_source_options(h1, o);
  add_expect(h1, o);
  h1->add_option("--coefficients", o.coefficients, "coefficient module")
      ->check(CLI::IsMember({"trivial", "h1-module"}));

  auto* sch = app.add_subcommand("schreier", "Reidemeister-Schreier presentation of a finite-index subgroup");
  add_source_options(sch, o);
  add_expect(sch, o);
  sch->add_option("--subgroup", o.subgroup, "comma-separated subgroup generators")->required();
  sch->add_option("--transversal", o.transversal, "semicolon-separated coset representatives, `1` for identity");
  sch->add_option("--max-cosets", o.max_cosets, "coset budget (default 100000 or $MCG_MAX_COSETS)");
  sch->add_flag("--simplify", o.simplify, "eliminate generators that occur once in a relator");

  auto* ce = app.add_subcommand("coset-enum", "Todd-Coxeter coset table");
  add_source_options(ce, o);
  add_expect(ce, o);
  ce->add_option("--subgroup", o.subgroup, "comma-separated subgroup generators (empty: trivial subgroup)");
  ce->add_option("--max-cosets", o.max_cosets, "coset budget (default 100000 or $MCG_MAX_COSETS)");

  auto* vr = app.add_subcommand("verify-rep", "check the H_1(N_g; Z) action against every relator");
  add_source_options(vr, o);
  vr->add_flag("--perturb", o.perturb, "test hook: corrupt the action");

  auto* cat = app.add_subcommand("catalog", "catalog queries");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list catalog families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  for (CLI::App* c : {ab, h1, sch, ce})
    if (c->parsed()) o.expect_given = c->get_option("--expect")->count() > 0;

  try {
    if (list->parsed()) return catalog_list();
    if (ab->parsed()) return run_jobs(o, cmd_abelianize);
    if (h1->parsed()) return run_jobs(o, cmd_h1);
    if (sch->parsed()) return run_jobs(o, cmd_schreier);
    if (ce->parsed()) return run_jobs(o, cmd_coset_enum);
    if (vr->parsed()) return run_jobs(o, cmd_verify_rep);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << (o.file.empty() ? "" : o.file + ": ") << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
