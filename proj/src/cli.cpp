#include "chainops/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "chainops/construct.hpp"
#include "chainops/core.hpp"
#include "chainops/evaluate.hpp"
#include "chainops/explore.hpp"
#include "chainops/extract.hpp"
#include "chainops/gspec.hpp"
#include "chainops/io.hpp"
#include "chainops/verify.hpp"

namespace chainops::cli {

namespace {

struct Common {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 12345;
};

struct Outcome {
  int code = 0;
  Json report;
  std::string human;
};

std::string verdict_name(int code) { return code == 0 ? "pass" : "fail"; }

Json witness_json(const Witness& w) {
  Json j{{"property", w.property}, {"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}};
  if (w.position >= 0) j["position"] = w.position;
  return j;
}

std::string witness_text(const Witness& w) {
  std::ostringstream out;
  out << "witness (" << w.property << "): inputs";
  for (long long x : w.inputs) out << ' ' << x;
  out << " give " << w.lhs << " vs " << w.rhs;
  if (w.position >= 0) out << " at position " << w.position;
  out << '\n';
  return out.str();
}

std::string ext_text(ExtValue v) {
  if (v.is_point()) return std::to_string(v.as_point());
  return std::to_string(v.twice() / 2) + ".5";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Outcome handle_build(const std::string& gspec_path, const std::string& out_path) {
  const GSpec s = load_gspec(gspec_path);
  const BinTable t = build_table(s);
  Outcome oc;
  oc.report = Json{{"command", "build"}, {"verdict", "pass"}, {"k", t.k}};
  if (out_path.empty()) {
    oc.report["table"] = table_to_json(t)["table"];
    oc.human = table_to_csv(t);
  } else {
    save_table(t, out_path);
    oc.report["out"] = out_path;
    oc.human = "wrote " + out_path + "\n";
  }
  return oc;
}

Outcome handle_nary_eval(const std::string& gspec_path, const std::string& tuple_text,
                         const std::string& mode) {
  const GSpec s = load_gspec(gspec_path);
  const std::vector<Element> tuple = parse_elements(tuple_text);
  Element value;
  if (mode == "direct") {
    value = build_nary_direct(s, tuple);
  } else if (mode == "uninorm") {
    value = build_commutative_uninorm(s, tuple);
  } else {
    throw InputError("mode must be \"direct\" or \"uninorm\"");
  }
  Outcome oc;
  oc.report = Json{{"command", "nary-eval"}, {"verdict", "pass"}, {"mode", mode}, {"value", value}};
  oc.human = std::to_string(value) + "\n";
  return oc;
}

Outcome handle_eval(const std::string& table_path, Element neutral, const std::string& tuple_text,
                    bool oracle, bool check) {
  const BinTable t = load_table(table_path);
  const std::vector<Element> tuple = parse_elements(tuple_text);
  const Element value = fast_eval(t, neutral, tuple, check);
  Outcome oc;
  oc.report = Json{{"command", "eval"}, {"verdict", "pass"}, {"value", value}};
  oc.human = std::to_string(value) + "\n";
  if (oracle) {
    const Element folded = fold_eval(t, tuple);
    const bool agrees = folded == value;
    oc.report["oracle"] = Json{{"value", folded}, {"agrees", agrees}};
    oc.human += "oracle agreement: " + std::string(agrees ? "true" : "false") + "\n";
    if (!agrees) {
      oc.code = 1;
      oc.report["verdict"] = "fail";
    }
  }
  return oc;
}

Outcome handle_check(const std::string& table_path, int nary, const std::string& poset_path,
                     int word_law, std::uint64_t seed) {
  const BinTable t = load_table(table_path);
  const Poset order = poset_path.empty() ? Poset::chain(t.k) : load_poset(poset_path);

  const NaryOp f = NaryOp::from_table(t);
  const CheckReport assoc = check_n_associative(f);
  const CheckReport idem = idempotency_report(f);
  const MonotoneReport mono = check_monotone(f, order);
  const bool increasing = check_monotone_increasing(f, order);
  const CheckReport quasi = quasitriviality_report(f);
  const std::vector<Element> neutrals = find_neutral_elements(f);
  const auto noncomm = noncommutative_pairs(t);
  const bool in_class = assoc.ok && idem.ok && mono.ok && !neutrals.empty();

  bool all_hold = in_class;
  std::ostringstream human;
  human << "k: " << t.k << '\n'
        << "associative: " << yes_no(assoc.ok) << '\n'
        << "idempotent: " << yes_no(idem.ok) << '\n'
        << "monotone: " << yes_no(mono.ok) << '\n'
        << "monotone increasing: " << yes_no(increasing) << '\n'
        << "quasitrivial: " << yes_no(quasi.ok) << '\n';
  human << "neutral elements:";
  for (Element e : neutrals) human << ' ' << e;
  human << '\n';
  human << "noncommutative pairs:";
  for (auto [a, b] : noncomm) human << " (" << a << ',' << b << ')';
  human << '\n';
  human << "in class: " << yes_no(in_class) << '\n';

  Json witnesses = Json::array();
  auto add_witnesses = [&](const std::vector<Witness>& ws) {
    for (const Witness& w : ws) {
      witnesses.push_back(witness_json(w));
      human << witness_text(w);
    }
  };
  add_witnesses(assoc.witnesses);
  add_witnesses(idem.witnesses);
  add_witnesses(mono.witnesses);

  Json trends = Json::array();
  for (Trend tr : mono.coordinate_trends) trends.push_back(to_string(tr));

  Json pairs = Json::array();
  for (auto [a, b] : noncomm) pairs.push_back(Json::array({a, b}));

  Outcome oc;
  oc.report = Json{{"command", "check"},
                   {"verdict", "pass"},
                   {"k", t.k},
                   {"associative", assoc.ok},
                   {"idempotent", idem.ok},
                   {"monotone", mono.ok},
                   {"monotone_increasing", increasing},
                   {"quasitrivial", quasi.ok},
                   {"coordinate_trends", std::move(trends)},
                   {"neutral_elements", neutrals},
                   {"noncommutative_pairs", std::move(pairs)},
                   {"in_class", in_class}};

  if (nary > 0) {
    const NaryOp fd = NaryOp::derived(t, nary);
    const CheckReport assoc_n = check_n_associative(fd);
    const CheckReport idem_n = idempotency_report(fd);
    const MonotoneReport mono_n = check_monotone(fd, order);
    const CheckReport quasi_n = quasitriviality_report(fd);
    const std::vector<Element> neutrals_n = find_neutral_elements(fd);
    all_hold = all_hold && assoc_n.ok && idem_n.ok && mono_n.ok;
    human << "derived arity " << nary << ": associative " << yes_no(assoc_n.ok) << ", idempotent "
          << yes_no(idem_n.ok) << ", monotone " << yes_no(mono_n.ok) << ", quasitrivial "
          << yes_no(quasi_n.ok) << '\n';
    add_witnesses(assoc_n.witnesses);
    add_witnesses(idem_n.witnesses);
    add_witnesses(mono_n.witnesses);
    oc.report["nary"] = Json{{"arity", nary},
                             {"associative", assoc_n.ok},
                             {"idempotent", idem_n.ok},
                             {"monotone", mono_n.ok},
                             {"quasitrivial", quasi_n.ok},
                             {"neutral_elements", neutrals_n}};
  }

  if (word_law > 0) {
    const WordLawReport wl = check_word_law(t, word_law, seed);
    all_hold = all_hold && wl.ok;
    human << "word law up to length " << word_law << ": " << yes_no(wl.ok) << " ("
          << wl.cases_checked << (wl.exhaustive ? " pairs, exhaustive)" : " pairs, sampled)")
          << '\n';
    Json violations = Json::array();
    for (const WordLawWitness& w : wl.witnesses) {
      violations.push_back(
          Json{{"left", w.left}, {"right", w.right}, {"lhs", w.lhs}, {"rhs", w.rhs}});
      std::ostringstream line;
      line << "word-law violation: left";
      for (Element x : w.left) line << ' ' << x;
      line << " right";
      for (Element x : w.right) line << ' ' << x;
      line << " give " << w.lhs << " vs " << w.rhs << '\n';
      human << line.str();
    }
    oc.report["word_law"] = Json{{"max_len", word_law},
                                 {"ok", wl.ok},
                                 {"exhaustive", wl.exhaustive},
                                 {"cases_checked", wl.cases_checked},
                                 {"violations", std::move(violations)}};
  }

  oc.report["witnesses"] = std::move(witnesses);
  oc.code = all_hold ? 0 : 1;
  oc.report["verdict"] = verdict_name(oc.code);
  human << "verdict: " << verdict_name(oc.code) << '\n';
  oc.human = human.str();
  return oc;
}

Outcome handle_extract(const std::string& nary_path, int arity, Element neutral,
                       const std::string& out_path) {
  const NaryTable nt = load_nary(nary_path);
  if (nt.n != arity) {
    throw InputError("arity flag does not match the arity stored in the file");
  }
  const NaryOp f = NaryOp::from_values(nt.k, nt.n, nt.values);
  const BinTable t = extract_binary(f, neutral);
  Outcome oc;
  oc.report = Json{{"command", "extract"}, {"verdict", "pass"}, {"k", t.k}};
  if (out_path.empty()) {
    oc.report["table"] = table_to_json(t)["table"];
    oc.human = table_to_csv(t);
  } else {
    save_table(t, out_path);
    oc.report["out"] = out_path;
    oc.human = "wrote " + out_path + "\n";
  }
  return oc;
}

Outcome handle_reconstruct(const std::string& table_path, const std::string& out_path) {
  const BinTable t = load_table(table_path);
  const GSpec s = reconstruct_gspec(t);
  Outcome oc;
  oc.report = Json{{"command", "reconstruct"}, {"verdict", "pass"}, {"gspec", gspec_to_json(s)}};
  std::ostringstream human;
  human << "k: " << s.k << '\n' << "e: " << s.e << '\n' << "g:";
  for (ExtValue v : s.g) human << ' ' << ext_text(v);
  human << '\n' << "ties:";
  for (const auto& [pair, choice] : s.ties) {
    human << " (" << pair.first << ',' << pair.second << ")->" << to_string(choice);
  }
  human << '\n';
  oc.human = human.str();
  if (!out_path.empty()) {
    save_gspec(s, out_path);
    oc.report["out"] = out_path;
    oc.human += "wrote " + out_path + "\n";
  }
  return oc;
}

Outcome handle_roundtrip(const std::string& table_path, int arity) {
  const BinTable t = load_table(table_path);
  const bool ok = bijection_roundtrip(t, arity);
  Outcome oc;
  oc.code = ok ? 0 : 1;
  oc.report = Json{{"command", "roundtrip"},
                   {"verdict", verdict_name(oc.code)},
                   {"arity", arity},
                   {"identity", ok}};
  oc.human = "round trip: " + verdict_name(oc.code) + "\n";
  return oc;
}

void write_table_dir(const std::vector<BinTable>& tables, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (size_t i = 0; i < tables.size(); ++i) {
    std::ostringstream name;
    name << dir << "/table_" << std::setfill('0') << std::setw(4) << i << ".json";
    save_table(tables[i], name.str());
  }
}

Outcome handle_enumerate(int k, const std::string& source, const std::string& out_dir) {
  Outcome oc;
  std::ostringstream human;
  human << "k: " << k << '\n' << "source: " << source << '\n';
  if (source == "both") {
    const EnumReport rep = compare_enumerations(k);
    oc.code = rep.matched ? 0 : 1;
    oc.report = Json{{"command", "enumerate"},
                     {"verdict", verdict_name(oc.code)},
                     {"k", k},
                     {"source", source},
                     {"count_gspec", rep.count_gspec},
                     {"count_brute", rep.count_brute},
                     {"matched", rep.matched},
                     {"extra_critical_count", rep.extra_critical_count},
                     {"brute_restricted_quasitrivial", rep.brute_restricted_quasitrivial}};
    human << "tables from generating data: " << rep.count_gspec << '\n'
          << "tables from direct search: " << rep.count_brute << '\n'
          << "matched: " << yes_no(rep.matched) << '\n'
          << "tables with a noncommutative pair: " << rep.extra_critical_count << '\n'
          << "direct search space: " << (rep.brute_restricted_quasitrivial ? "quasitrivial" : "full")
          << '\n';
    if (!out_dir.empty()) write_table_dir(rep.tables_gspec, out_dir);
  } else if (source == "gspec") {
    const GspecEnumeration en = enumerate_class_gspec(k);
    long long sym = 0, comm = 0;
    for (const GeneratorAudit& a : en.audits) {
      if (a.has_sym_generator) ++sym;
      if (a.has_commutative_generator) ++comm;
    }
    oc.report = Json{{"command", "enumerate"},
                     {"verdict", "pass"},
                     {"k", k},
                     {"source", source},
                     {"count", static_cast<long long>(en.tables.size())},
                     {"with_sym_generator", sym},
                     {"with_commutative_generator", comm}};
    human << "tables: " << en.tables.size() << '\n'
          << "with a symmetric generator: " << sym << '\n'
          << "with a commutative generator: " << comm << '\n';
    if (!out_dir.empty()) write_table_dir(en.tables, out_dir);
  } else if (source == "brute") {
    const std::vector<BinTable> tables = enumerate_class_brute(k);
    oc.report = Json{{"command", "enumerate"},
                     {"verdict", "pass"},
                     {"k", k},
                     {"source", source},
                     {"count", static_cast<long long>(tables.size())}};
    human << "tables: " << tables.size() << '\n';
    if (!out_dir.empty()) write_table_dir(tables, out_dir);
  } else {
    throw InputError("source must be \"gspec\", \"brute\" or \"both\"");
  }
  if (!out_dir.empty()) {
    oc.report["out"] = out_dir;
    human << "wrote tables to " << out_dir << '\n';
  }
  oc.human = human.str();
  return oc;
}

Outcome handle_mmt_gap(int kmax) {
  const std::vector<MmtGapWitness> ws = find_mmt_gap(kmax);
  Outcome oc;
  Json witnesses = Json::array();
  std::ostringstream human;
  for (const MmtGapWitness& w : ws) {
    Json j = gspec_to_json(w.gspec);
    j["mmt"] = w.mmt;
    j["sym"] = w.sym;
    j["table_in_class"] = w.table_in_class;
    witnesses.push_back(std::move(j));
    human << "k=" << w.gspec.k << " e=" << w.gspec.e << " g=[";
    for (size_t i = 0; i < w.gspec.g.size(); ++i) {
      if (i) human << ',';
      human << ext_text(w.gspec.g[i]);
    }
    human << "] mmt=true sym=false table_in_class=" << (w.table_in_class ? "true" : "false")
          << '\n';
  }
  human << "witnesses: " << ws.size() << '\n';
  oc.report = Json{{"command", "mmt-gap"},
                   {"verdict", "pass"},
                   {"kmax", kmax},
                   {"count", static_cast<long long>(ws.size())},
                   {"witnesses", std::move(witnesses)}};
  oc.human = human.str();
  return oc;
}

Outcome handle_fixture(int poset_q, const std::string& alternating, const std::string& name) {
  const int given = (poset_q > 0 ? 1 : 0) + (alternating.empty() ? 0 : 1) + (name.empty() ? 0 : 1);
  if (given != 1) {
    throw InputError("choose exactly one of --poset-q, --alternating, --name");
  }
  Outcome oc;
  if (poset_q > 0) {
    const PosetFixture fx = build_poset_fixture(poset_q);
    const NaryOp f2 = NaryOp::from_table(fx.op);
    const bool associative = check_n_associative(f2).ok;
    const bool monotone = check_monotone(f2, fx.poset).ok;
    const bool fold_q_idempotent = check_idempotent(NaryOp::derived(fx.op, fx.q));
    const bool fold_q1_idempotent = check_idempotent(NaryOp::derived(fx.op, fx.q + 1));
    oc.report = Json{{"command", "fixture"},
                     {"verdict", "pass"},
                     {"kind", "poset"},
                     {"q", fx.q},
                     {"size", fx.op.k},
                     {"neutral", fx.neutral},
                     {"poset", poset_to_json(fx.poset)},
                     {"table", table_to_json(fx.op)},
                     {"report", Json{{"associative", associative},
                                     {"monotone", monotone},
                                     {"fold_arity_q_idempotent", fold_q_idempotent},
                                     {"fold_arity_q_plus_1_idempotent", fold_q1_idempotent}}}};
  } else if (!alternating.empty()) {
    const std::vector<Element> parts = parse_elements(alternating);
    if (parts.size() != 2) throw InputError("--alternating expects \"m,n\"");
    const int m = parts[0], n = parts[1];
    const NaryOp f = build_alternating(m, n);
    const bool associative = check_n_associative(f).ok;
    const bool group = check_nary_group(f).ok;
    const bool idempotent = check_idempotent(f);
    const bool quasitrivial = check_quasitrivial(f);
    const std::vector<Element> neutrals = find_neutral_elements(f);
    oc.report = Json{{"command", "fixture"},
                     {"verdict", "pass"},
                     {"kind", "alternating"},
                     {"m", m},
                     {"n", n},
                     {"values", materialize(f)},
                     {"report", Json{{"n_associative", associative},
                                     {"nary_group", group},
                                     {"idempotent", idempotent},
                                     {"quasitrivial", quasitrivial},
                                     {"neutral_elements", neutrals}}}};
  } else {
    const Fixture* fx = nullptr;
    if (name == "rx3") fx = &rx3();
    else if (name == "min3") fx = &min3();
    else if (name == "max3") fx = &max3();
    else throw InputError("unknown fixture name: " + name);
    oc.report = Json{{"command", "fixture"},
                     {"verdict", "pass"},
                     {"kind", "named"},
                     {"name", fx->name},
                     {"gspec", gspec_to_json(fx->gspec)},
                     {"table", table_to_json(fx->table)}};
  }
  oc.human = oc.report.dump(2) + "\n";
  return oc;
}

void add_common(CLI::App* sub, Common& common, bool json_report_alias = false) {
  sub->add_flag(json_report_alias ? "--json,--json-report" : "--json", common.json,
                "emit a machine-readable JSON report");
  sub->add_flag("--timing", common.timing,
                "include elapsed milliseconds (off by default so reports are byte-stable)");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"operations on finite chains: threshold constructions, one-pass evaluation, "
               "axiom checking and exhaustive enumeration"};
  app.require_subcommand(1);
  Common common;

  auto* build = app.add_subcommand("build", "build a binary table from generating data");
  std::string build_gspec, build_out;
  build->add_option("--gspec", build_gspec, "generating-data JSON file")->required();
  build->add_option("--out", build_out, "write the table here (.csv or .json)");
  add_common(build, common);

  auto* nary = app.add_subcommand("nary-eval", "evaluate an n-ary tuple from generating data");
  std::string nary_gspec, nary_tuple, nary_mode = "direct";
  nary->add_option("--gspec", nary_gspec, "generating-data JSON file")->required();
  nary->add_option("--tuple", nary_tuple, "comma-separated elements")->required();
  nary->add_option("--mode", nary_mode, "direct or uninorm (default direct)");
  add_common(nary, common);

  auto* eval = app.add_subcommand("eval", "one-pass evaluation of a derived operation");
  std::string eval_table, eval_tuple;
  Element eval_neutral = 0;
  bool eval_oracle = false, eval_check = false;
  eval->add_option("--table", eval_table, "table file (.csv or .json)")->required();
  eval->add_option("--neutral", eval_neutral, "neutral element of the table")->required();
  eval->add_option("--tuple", eval_tuple, "comma-separated elements")->required();
  eval->add_flag("--oracle", eval_oracle, "also run the fold oracle and compare");
  eval->add_flag("--check", eval_check, "verify the table's class membership first");
  add_common(eval, common);

  auto* check = app.add_subcommand("check", "verify the axioms of a binary table");
  std::string check_table, check_poset;
  int check_nary = 0, check_word_law = 0;
  check->add_option("--table", check_table, "table file (.csv or .json)")->required();
  check->add_option("--nary", check_nary, "also check the derived operation of this arity");
  check->add_option("--poset", check_poset, "check monotonicity against this partial order");
  check->add_option("--word-law", check_word_law,
                    "also check the concatenation law up to this word length");
  check->add_option("--seed", common.seed, "seed for sampled word-law checking (default 12345)");
  add_common(check, common, /*json_report_alias=*/true);

  auto* extract = app.add_subcommand("extract", "binary restriction of an n-ary value table");
  std::string extract_file, extract_out;
  int extract_arity = 0;
  Element extract_neutral = 0;
  extract->add_option("--nary", extract_file, "n-ary value table JSON file")->required();
  extract->add_option("--arity", extract_arity, "arity of the stored operation")->required();
  extract->add_option("--neutral", extract_neutral, "neutral element")->required();
  extract->add_option("--out", extract_out, "write the binary table here");
  add_common(extract, common);

  auto* reconstruct = app.add_subcommand("reconstruct", "recover generating data from a table");
  std::string rec_table, rec_out;
  reconstruct->add_option("--table", rec_table, "table file (.csv or .json)")->required();
  reconstruct->add_option("--out", rec_out, "write the generating data here");
  add_common(reconstruct, common);

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "derive an n-ary operation and extract the binary one back");
  std::string rt_table;
  int rt_arity = 0;
  roundtrip->add_option("--table", rt_table, "table file (.csv or .json)")->required();
  roundtrip->add_option("--arity", rt_arity, "arity of the derived operation")->required();
  add_common(roundtrip, common);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate all class tables for a chain");
  int enum_k = 0;
  std::string enum_source = "both", enum_out;
  enumerate->add_option("--k", enum_k, "chain size")->required();
  enumerate->add_option("--source", enum_source, "gspec, brute or both (default both)");
  enumerate->add_option("--out", enum_out, "write every table into this directory");
  add_common(enumerate, common);

  auto* mmtgap = app.add_subcommand(
      "mmt-gap", "list generating data passing the level-set condition but not the symmetry "
                 "surrogate");
  int gap_kmax = 0;
  mmtgap->add_option("--kmax", gap_kmax, "largest chain size to search")->required();
  add_common(mmtgap, common);

  auto* fixture = app.add_subcommand("fixture", "emit a shipped or constructed fixture");
  int fx_poset_q = 0;
  std::string fx_alternating, fx_name;
  fixture->add_option("--poset-q", fx_poset_q, "bounded poset fixture with this group order");
  fixture->add_option("--alternating", fx_alternating, "alternating-sum fixture, \"m,n\"");
  fixture->add_option("--name", fx_name, "shipped fixture: rx3, min3 or max3");
  add_common(fixture, common);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage" << '\n';
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    Outcome oc;
    if (app.got_subcommand(build)) {
      oc = handle_build(build_gspec, build_out);
    } else if (app.got_subcommand(nary)) {
      oc = handle_nary_eval(nary_gspec, nary_tuple, nary_mode);
    } else if (app.got_subcommand(eval)) {
      oc = handle_eval(eval_table, eval_neutral, eval_tuple, eval_oracle, eval_check);
    } else if (app.got_subcommand(check)) {
      oc = handle_check(check_table, check_nary, check_poset, check_word_law, common.seed);
    } else if (app.got_subcommand(extract)) {
      oc = handle_extract(extract_file, extract_arity, extract_neutral, extract_out);
    } else if (app.got_subcommand(reconstruct)) {
      oc = handle_reconstruct(rec_table, rec_out);
    } else if (app.got_subcommand(roundtrip)) {
      oc = handle_roundtrip(rt_table, rt_arity);
    } else if (app.got_subcommand(enumerate)) {
      oc = handle_enumerate(enum_k, enum_source, enum_out);
    } else if (app.got_subcommand(mmtgap)) {
      oc = handle_mmt_gap(gap_kmax);
    } else {
      oc = handle_fixture(fx_poset_q, fx_alternating, fx_name);
    }
    if (common.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      const long long ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
      oc.report["timing_ms"] = ms;
      oc.human += "timing: " + std::to_string(ms) + " ms\n";
    }
    if (common.json) {
      out << oc.report.dump(2) << '\n';
    } else {
      out << oc.human;
    }
    return oc.code;
  } catch (const InputError& e) {
    if (common.json) {
      out << Json{{"verdict", "error"}, {"message", e.what()}}.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace chainops::cli
