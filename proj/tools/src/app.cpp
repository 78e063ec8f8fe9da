#include "sfinv/cli/app.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sfinv/cayley.hpp"
#include "sfinv/cli/battery.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/cli/report.hpp"
#include "sfinv/error.hpp"
#include "sfinv/expansion.hpp"
#include "sfinv/inverse_monoid.hpp"
#include "sfinv/msf.hpp"
#include "sfinv/pieces.hpp"
#include "sfinv/stephen.hpp"
#include "sfinv/witness.hpp"

namespace sfinv::cli {

namespace {

/// Budgets, inputs and output settings shared by the subcommands.
struct RunConfig {
  std::size_t rounds = default_rounds;
  std::size_t vertex_cap = default_vertex_budget;
  std::size_t cycle_cap = SearchBudget{}.max_extensions;
  std::size_t enum_cap = default_slot_cap;
  std::vector<std::string> witness_files;
  std::vector<std::string> unchecked_witness_files;
  std::string format = "json";
  std::string out_path;

  std::vector<std::string> group;
  std::vector<std::string> relators;
  std::string generators;
  std::string presentation_file;

  std::vector<std::string> args;
  std::string point;
  std::string span;
  std::string word;
  bool only_span = false;
  bool list = false;
  bool cycles = false;
  bool builtin = false;
  bool progress = false;
  std::string dump_text;
  std::string dump_table;
  std::uint64_t seed = BatteryConfig{}.seed;
  std::vector<int> criteria;

  StephenBudget stephen() const { return {rounds, vertex_cap}; }
  SearchBudget search() const {
    SearchBudget b;
    b.max_extensions = cycle_cap;
    return b;
  }
  VerifyOptions verify() const { return {enum_cap, search(), CyclicClosure::default_budget}; }
};

struct Output {
  Json json;
  std::optional<std::string> dot;
};

class Usage : public Error {
 public:
  using Error::Error;
};

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--rounds", cfg.rounds, "Stephen expansion rounds")->check(CLI::NonNegativeNumber);
  app->add_option("--vertex-cap", cfg.vertex_cap, "Stephen vertex budget")->check(CLI::PositiveNumber);
  app->add_option("--cycle-cap", cfg.cycle_cap, "path/cycle search extension budget")->check(CLI::PositiveNumber);
  app->add_option("--enum-cap", cfg.enum_cap, "largest |G|*|X| enumerated")->check(CLI::PositiveNumber);
  app->add_option("--witness", cfg.witness_files, "witness file (validated against the relators)")
      ->allow_extra_args(false);
  app->add_option("--unchecked-witness", cfg.unchecked_witness_files,
                  "witness file registered without validation (fault injection)")
      ->allow_extra_args(false);
  app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table", "dot"}));
  app->add_option("--out", cfg.out_path, "write output to this path instead of stdout");
}

void add_group(CLI::App* app, RunConfig& cfg) {
  app->add_option("--group", cfg.group, "group description, e.g. 'cyclic 3 a'")->required()->expected(1, 64);
}

void add_presentation(CLI::App* app, RunConfig& cfg) {
  app->add_option("--relator", cfg.relators, "relator word (repeatable)")->allow_extra_args(false);
  app->add_option("--generators", cfg.generators, "generator letters (default: letters of the relators)");
  app->add_option("--presentation", cfg.presentation_file, "presentation file");
}

FiniteGroup group_of(const RunConfig& cfg) { return parse_group(cfg.group); }

Presentation presentation_of(const RunConfig& cfg) {
  if (!cfg.presentation_file.empty()) {
    if (!cfg.relators.empty()) throw Usage("give either --presentation or --relator, not both");
    return parse_presentation(read_file(cfg.presentation_file));
  }
  if (cfg.relators.empty()) throw Usage("a presentation is required (--relator or --presentation)");
  return make_presentation(cfg.relators, cfg.generators);
}

struct LoadedWitnesses {
  std::vector<WitnessAssignment> assignments;
  std::vector<std::string> notes;
  bool unchecked = false;
};

LoadedWitnesses load_witnesses(const RunConfig& cfg, const Presentation& P) {
  LoadedWitnesses out;
  for (const auto& path : cfg.witness_files) {
    WitnessAssignment A = parse_witness(read_file(path), P.alphabet, path);
    if (validate_witness(P, A)) {
      for (const auto& w : A.warnings) out.notes.push_back("witness " + A.id + ": " + w);
      out.assignments.push_back(std::move(A));
    } else {
      out.notes.push_back("witness " + A.id + " rejected: a relator does not evaluate to the identity");
    }
  }
  for (const auto& path : cfg.unchecked_witness_files) {
    out.assignments.push_back(parse_witness(read_file(path), P.alphabet, path));
    out.unchecked = true;
  }
  return out;
}

std::unique_ptr<PieceContext> piece_context(const RunConfig& cfg, const Presentation& P,
                                            std::vector<std::string>& notes) {
  LoadedWitnesses w = load_witnesses(cfg, P);
  notes = w.notes;
  // Checked files were validated above, so everything can go in unchecked.
  auto ctx = std::make_unique<PieceContext>(P, cfg.stephen(), std::move(w.assignments), true, true);
  for (const auto& n : ctx->notes()) {
    if (w.unchecked) notes.push_back(n);
  }
  return ctx;
}

std::vector<std::string> words_of(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(format_word(w, alphabet));
  return out;
}

std::string pass_fail(Tri t) { return t == Tri::yes ? "pass" : t == Tri::no ? "fail" : "unknown"; }

// ---- words ----------------------------------------------------------------

Output cmd_words(const RunConfig& cfg) {
  if (cfg.args.size() != 2) throw Usage("usage: words <op> <word>");
  const std::string& op = cfg.args[0];
  Alphabet alphabet = cfg.generators.empty() ? Alphabet::infer(cfg.args[1]) : parse_alphabet(cfg.generators);
  Word w = parse_word(cfg.args[1], alphabet);
  Json j = record("words");
  j["op"] = op;
  j["word"] = format_word(w, alphabet);
  if (op == "normalize") {
    j["result"] = format_word(w, alphabet);
  } else if (op == "reduce") {
    j["result"] = format_word(reduce(w), alphabet);
  } else if (op == "invert") {
    j["result"] = format_word(invert(w), alphabet);
  } else if (op == "dyck") {
    j["result"] = is_dyck(w);
  } else if (op == "cyclically-reduced") {
    j["result"] = is_cyclically_reduced(w);
  } else if (op == "conjugates") {
    j["result"] = words_of(cyclic_conjugates(w), alphabet);
  } else if (op == "splits") {
    Json pairs = Json::array();
    for (const auto& [u, v] : splits(w)) pairs.push_back({format_word(u, alphabet), format_word(v, alphabet)});
    j["result"] = pairs;
  } else {
    throw Usage("unknown words op '" + op + "' (normalize, reduce, invert, dyck, cyclically-reduced, conjugates, splits)");
  }
  return {j, std::nullopt};
}

// ---- group ----------------------------------------------------------------

Output cmd_group(const RunConfig& cfg) {
  FiniteGroup G = group_of(cfg);
  Json j = record("group");
  j["group"] = G.description();
  j["order"] = G.order();
  j["generators"] = G.alphabet().names();
  Json elements = Json::array();
  for (Element g = 0; g < G.order(); ++g) {
    elements.push_back({{"index", g}, {"word", format_word(G.word_of(g), G.alphabet())}});
  }
  j["elements"] = elements;
  if (!cfg.word.empty()) {
    j["evaluate"] = {{"word", cfg.word}, {"element", G.evaluate(parse_word(cfg.word, G.alphabet()))}};
  }
  if (!cfg.relators.empty()) {
    std::vector<Word> relators;
    for (const auto& r : cfg.relators) relators.push_back(parse_word(r, G.alphabet()));
    j["dagger"] = check_dagger(G, relators);
  }
  if (cfg.cycles) {
    CycleListing cycles = simple_cycles_at_identity(G, cfg.search());
    j["cycles"] = {{"words", words_of(cycles.words, G.alphabet())}, {"truncated", cycles.truncated}};
  }
  std::optional<Subgraph> span;
  if (!cfg.span.empty()) {
    span = span_of_word(G, parse_word(cfg.span, G.alphabet()));
    j["span"] = edge_key(G, *span);
  }
  return {j, cayley_dot(G, span ? &*span : nullptr, cfg.only_span)};
}

// ---- mgx ------------------------------------------------------------------

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw ParseError("cannot write " + path);
}

Json keys_of(const FiniteInverseMonoid& M) {
  Json keys = Json::array();
  for (FiniteInverseMonoid::Index i = 0; i < M.size(); ++i) keys.push_back(M.key(i));
  return keys;
}

Output cmd_mgx(const std::string& op, const RunConfig& cfg) {
  FiniteGroup G = group_of(cfg);
  Json j = record("mgx-" + op);
  j["group"] = G.description();
  if (op == "maxima") {
    if (cfg.point.empty()) throw Usage("mgx maxima needs --point <word>");
    Element g = G.evaluate(parse_word(cfg.point, G.alphabet()));
    MaximaListing maxima = maximal_sigma_elements(G, g, cfg.search());
    j["point"] = g;
    Json keys = Json::array();
    for (const auto& m : maxima.elements) keys.push_back(mm_key(G, m));
    j["elements"] = keys;
    j["truncated"] = maxima.truncated;
    return {j, std::nullopt};
  }
  FiniteInverseMonoid M = enumerate_mm(G, cfg.enum_cap);
  j["size"] = M.size();
  j["idempotents"] = M.idempotents().size();
  if (op == "f-inverse") {
    j["e_unitary"] = is_E_unitary(M);
    j["f_inverse"] = is_F_inverse(M);
    return {j, std::nullopt};
  }
  if (cfg.list) j["elements"] = keys_of(M);
  if (!cfg.dump_text.empty()) write_file(cfg.dump_text, dump_text(M));
  if (!cfg.dump_table.empty()) write_file(cfg.dump_table, dump_table_blob(M));
  return {j, std::nullopt};
}

// ---- msf ------------------------------------------------------------------

Output cmd_msf(const std::string& op, const RunConfig& cfg) {
  FiniteGroup G = group_of(cfg);
  if (op == "enumerate") {
    CyclicClosure closure(G);
    FiniteInverseMonoid S = enumerate_msf(closure, cfg.enum_cap);
    Json j = record("msf-enumerate");
    j["group"] = G.description();
    j["size"] = S.size();
    j["idempotents"] = S.idempotents().size();
    j["f_inverse"] = is_F_inverse(S);
    j["strongly_f_inverse"] = to_string(is_strongly_F_inverse_quotient(S, G, cfg.cycle_cap).verdict);
    if (cfg.list) j["elements"] = keys_of(S);
    if (!cfg.dump_text.empty()) write_file(cfg.dump_text, dump_text(S));
    if (!cfg.dump_table.empty()) write_file(cfg.dump_table, dump_table_blob(S));
    return {j, std::nullopt};
  }
  if (op == "theta") {
    ThetaListing theta = theta_pairs(G, cfg.search());
    Json j = record("msf-theta");
    j["group"] = G.description();
    j["count"] = theta.pairs.size();
    j["truncated"] = theta.truncated;
    Json pairs = Json::array();
    for (const auto& p : theta.pairs) {
      pairs.push_back({format_word(p.u, G.alphabet()), format_word(p.v, G.alphabet())});
    }
    j["pairs"] = pairs;
    return {j, std::nullopt};
  }
  auto start = std::chrono::steady_clock::now();
  Json j = record("msf-verify");
  j["group"] = G.description();
  if (op == "verify-pre1") {
    Pre1Report r = verify_pre1(G, cfg.verify());
    CyclicClosure closure(G);
    j["mm_size"] = r.mm_size;
    j["xi_classes"] = r.xi_classes;
    j["s_circ_size"] = enumerate_msf(closure, cfg.enum_cap).size();
    j["pre1"] = pass_fail(r.verdict);
    j["iso"] = "not-run";
    j["detail"] = r.first_mismatch ? r.detail + " (" + *r.first_mismatch + ")" : r.detail;
  } else {
    IsoReport r = verify_s_circ_iso(G, cfg.verify());
    j["mm_size"] = r.mm_size;
    j["xi_classes"] = r.xi_classes;
    j["s_circ_size"] = r.s_circ_size;
    j["pre1"] = "not-run";
    j["iso"] = pass_fail(r.verdict);
    j["detail"] = r.detail;
  }
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {j, std::nullopt};
}

// ---- stephen --------------------------------------------------------------

Output cmd_stephen(const std::string& op, const RunConfig& cfg) {
  Presentation P = presentation_of(cfg);
  auto word = [&](const std::string& text) { return parse_word(text, P.alphabet); };
  auto need = [&](std::size_t n, const char* usage) {
    if (cfg.args.size() != n) throw Usage(usage);
  };
  if (op == "approximate") {
    if (cfg.args.size() > 1) throw Usage("usage: stephen approximate [word]");
    Word w = cfg.args.empty() ? Word{} : word(cfg.args[0]);
    WordGraph g;
    bool exhausted = false;
    try {
      g = approximant(P, w, cfg.rounds, cfg.vertex_cap);
    } catch (const GraphBudgetExceeded& e) {
      g = e.partial();
      exhausted = true;
    }
    Json j = record("stephen-approximant");
    j["presentation"] = format_presentation(P);
    j["word"] = format_word(w, P.alphabet);
    j["stage"] = g.stage;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["fixpoint"] = g.fixpoint;
    j["budget_exhausted"] = exhausted;
    return {j, word_graph_dot(g, P.alphabet)};
  }
  if (op == "right-invertible") {
    need(1, "usage: stephen right-invertible <word>");
    Word u = word(cfg.args[0]);
    return {certificate_json("right-invertible " + format_word(u, P.alphabet),
                             certify_right_invertible(P, u, cfg.stephen())),
            std::nullopt};
  }
  if (op == "leq") {
    need(2, "usage: stephen leq <lower> <upper>");
    Word lower = word(cfg.args[0]), upper = word(cfg.args[1]);
    return {certificate_json(format_word(lower, P.alphabet) + " <= " + format_word(upper, P.alphabet),
                             certify_leq(P, upper, lower, cfg.stephen())),
            std::nullopt};
  }
  need(2, "usage: stephen equal <word> <word>");
  Word u = word(cfg.args[0]), v = word(cfg.args[1]);
  return {certificate_json(format_word(u, P.alphabet) + " = " + format_word(v, P.alphabet),
                           certify_equal(P, u, v, cfg.stephen())),
          std::nullopt};
}

// ---- witness --------------------------------------------------------------

Output cmd_witness(const std::string& op, const RunConfig& cfg) {
  Presentation P = presentation_of(cfg);
  if (op == "check") {
    Json j = record("witness-check");
    j["presentation"] = format_presentation(P);
    Json list = Json::array();
    auto add = [&](WitnessAssignment A, const std::string& source) {
      bool valid = validate_witness(P, A);
      list.push_back({{"id", A.id},
                      {"source", source},
                      {"valid", valid},
                      {"warnings", A.warnings},
                      {"assignment", format_witness(A)}});
    };
    for (const auto& path : cfg.witness_files) add(parse_witness(read_file(path), P.alphabet, path), "file");
    for (const auto& path : cfg.unchecked_witness_files) {
      add(parse_witness(read_file(path), P.alphabet, path), "file");
    }
    if (cfg.builtin || (cfg.witness_files.empty() && cfg.unchecked_witness_files.empty())) {
      for (auto& A : builtin_witnesses(P)) add(std::move(A), "builtin");
    }
    j["witnesses"] = list;
    return {j, std::nullopt};
  }
  if (cfg.args.size() != 1) throw Usage("usage: witness certify <word>");
  Word u = parse_word(cfg.args[0], P.alphabet);
  LoadedWitnesses loaded = load_witnesses(cfg, P);
  for (auto& A : builtin_witnesses(P)) loaded.assignments.push_back(std::move(A));
  Json j = record("witness-certify");
  j["presentation"] = format_presentation(P);
  j["word"] = format_word(u, P.alphabet);
  std::vector<std::string> not_left, not_right;
  for (const auto& A : loaded.assignments) {
    if (certify_non_left_invertible(A, u)) not_left.push_back(A.id);
    if (certify_non_right_invertible(A, u)) not_right.push_back(A.id);
  }
  j["non_left_invertible"] = not_left;
  j["non_right_invertible"] = not_right;
  j["notes"] = loaded.notes;
  return {j, std::nullopt};
}

// ---- pieces ---------------------------------------------------------------

Output cmd_pieces(const std::string& op, const RunConfig& cfg) {
  Presentation P = presentation_of(cfg);
  std::vector<std::string> notes;
  auto ctx = piece_context(cfg, P, notes);
  if (op == "linked") return {linked_json(is_linked(*ctx), ctx->relator(), P.alphabet), std::nullopt};
  if (op == "factorize") {
    // The factorization path alone, without the syntactic shortcuts.
    return {piece_report_json("pieces-factorize", decide_strongly_f_inverse(*ctx), P.alphabet, notes), std::nullopt};
  }
  PieceReport r = analyze(*ctx);
  if (r.method == "pieces" && !cross_validate_against_linked(*ctx)) {
    throw SoundnessViolation("piece verdict and linked criterion disagree");
  }
  return {piece_report_json("pieces-decide", r, P.alphabet, notes), std::nullopt};
}

// ---- battery --------------------------------------------------------------

Output cmd_battery(const RunConfig& cfg, std::ostream& err, bool& violation) {
  BatteryConfig bc;
  bc.stephen = cfg.stephen();
  bc.search = cfg.search();
  bc.slot_cap = cfg.enum_cap;
  bc.seed = cfg.seed;
  for (const auto& path : cfg.witness_files) bc.witnesses.push_back({path, read_file(path)});
  for (const auto& path : cfg.unchecked_witness_files) bc.unchecked_witnesses.push_back({path, read_file(path)});
  std::function<void(const CaseResult&)> progress;
  if (cfg.progress) {
    progress = [&err](const CaseResult& c) {
      err << (c.pass ? "pass " : "FAIL ") << c.criterion << " " << c.name << "\n";
    };
  }
  BatteryReport r = run_battery(bc, cfg.criteria, progress);
  violation = r.soundness_violation;
  return {battery_json(r), std::nullopt};
}

void emit(const Output& o, const RunConfig& cfg, std::ostream& out) {
  std::string text;
  if (cfg.format == "dot") {
    if (!o.dot) throw Usage("--format dot is only available for group and stephen approximate");
    text = *o.dot;
  } else if (cfg.format == "table") {
    text = render_table(o.json);
  } else {
    text = o.json.dump(2) + "\n";
  }
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_file(cfg.out_path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sfinv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations with special inverse monoid presentations", "sfinv"};
  app.require_subcommand(1);
  std::function<Output()> action;
  bool battery_violation = false;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_common(sub, cfg);
    return sub;
  };
  auto group_leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = leaf(parent, name, help);
    add_group(sub, cfg);
    return sub;
  };
  auto presentation_leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = leaf(parent, name, help);
    add_presentation(sub, cfg);
    return sub;
  };

  CLI::App* words = leaf(&app, "words", "word utilities");
  words->add_option("args", cfg.args, "<op> <word>");
  words->add_option("--generators", cfg.generators, "generator letters");
  words->callback([&] { action = [&] { return cmd_words(cfg); }; });

  CLI::App* group = group_leaf(&app, "group", "finite group and Cayley graph");
  group->add_option("--word", cfg.word, "evaluate a word");
  group->add_option("--span", cfg.span, "highlight the path spanned by a word");
  group->add_flag("--only-span", cfg.only_span, "draw only the highlighted subgraph");
  group->add_option("--relator", cfg.relators, "check that relators are cyclic words")->allow_extra_args(false);
  group->add_flag("--cycles", cfg.cycles, "list cyclic words read at the identity");
  group->callback([&] { action = [&] { return cmd_group(cfg); }; });

  CLI::App* mgx = app.add_subcommand("mgx", "Margolis-Meakin expansion M(G,X)");
  mgx->require_subcommand(1);
  for (std::string op : {"enumerate", "maxima", "f-inverse"}) {
    CLI::App* sub = group_leaf(mgx, op, "mgx " + op);
    sub->add_flag("--list", cfg.list, "include element keys");
    sub->add_option("--point", cfg.point, "group element (as a word) for maxima");
    sub->add_option("--dump-text", cfg.dump_text, "write the element dump");
    sub->add_option("--dump-table", cfg.dump_table, "write the binary multiplication table");
    sub->callback([&, op] { action = [&, op] { return cmd_mgx(op, cfg); }; });
  }

  CLI::App* msf = app.add_subcommand("msf", "strongly F-inverse cover MsF(G,X)");
  msf->require_subcommand(1);
  for (std::string op : {"enumerate", "theta", "verify-pre1", "verify-iso"}) {
    CLI::App* sub = group_leaf(msf, op, "msf " + op);
    if (op == "enumerate") {
      sub->add_flag("--list", cfg.list, "include element keys");
      sub->add_option("--dump-text", cfg.dump_text, "write the element dump");
      sub->add_option("--dump-table", cfg.dump_table, "write the binary multiplication table");
    }
    sub->callback([&, op] { action = [&, op] { return cmd_msf(op, cfg); }; });
  }

  CLI::App* stephen = app.add_subcommand("stephen", "Stephen approximants and certificates");
  stephen->require_subcommand(1);
  for (std::string op : {"approximate", "right-invertible", "leq", "equal"}) {
    CLI::App* sub = presentation_leaf(stephen, op, "stephen " + op);
    sub->add_option("args", cfg.args, "words");
    sub->callback([&, op] { action = [&, op] { return cmd_stephen(op, cfg); }; });
  }

  CLI::App* witness = app.add_subcommand("witness", "partial-injection witnesses");
  witness->require_subcommand(1);
  for (std::string op : {"check", "certify"}) {
    CLI::App* sub = presentation_leaf(witness, op, "witness " + op);
    sub->add_option("args", cfg.args, "word");
    sub->add_flag("--builtin", cfg.builtin, "also list the built-in witnesses");
    sub->callback([&, op] { action = [&, op] { return cmd_witness(op, cfg); }; });
  }

  CLI::App* pieces = app.add_subcommand("pieces", "invertible pieces and the strong F-inverse verdict");
  pieces->require_subcommand(1);
  for (std::string op : {"factorize", "decide", "linked"}) {
    CLI::App* sub = presentation_leaf(pieces, op, "pieces " + op);
    sub->callback([&, op] { action = [&, op] { return cmd_pieces(op, cfg); }; });
  }

  CLI::App* battery = leaf(&app, "battery", "run the acceptance battery");
  battery->add_option("--seed", cfg.seed, "random seed");
  battery->add_option("--criterion", cfg.criteria, "run only these criteria (repeatable)")
      ->allow_extra_args(false)
      ->check(CLI::Range(1, 9));
  battery->add_flag("--progress", cfg.progress, "print each case to stderr as it finishes");
  battery->callback([&] { action = [&] { return cmd_battery(cfg, err, battery_violation); }; });

  if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
    err << "error: unknown subcommand '" << argv[1] << "'\n\n" << app.help();
    return exit_usage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    Output o = action();
    emit(o, cfg, out);
    return battery_violation ? exit_soundness : exit_ok;
  } catch (const SoundnessViolation& e) {
    err << "soundness violation: " << e.what() << "\n";
    return exit_soundness;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace sfinv::cli
