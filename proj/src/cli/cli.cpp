#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "wordpow/combinatorics.hpp"
#include "wordpow/constructions.hpp"
#include "wordpow/equation.hpp"
#include "wordpow/morphism.hpp"
#include "wordpow/pex.hpp"
#include "wordpow/reductions.hpp"
#include "wordpow/solver.hpp"

namespace wordpow::cli {

namespace {

// Witness failed its own re-check; a bug, not a user error.
void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("witness re-validation failed: " + what);
}

Alphabet alphabet_of_text(const std::string& text) {
  std::set<char> chars;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) chars.insert(c);
  }
  return Alphabet::from_chars(std::string(chars.begin(), chars.end()));
}

Word read_word(const std::string& text, const std::string& alphabet) {
  return Word::parse(text, alphabet.empty() ? alphabet_of_text(text) : Alphabet::parse(alphabet));
}

EquationSystem read_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read equation file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return EquationSystem::parse(text.str());
}

std::optional<std::uint64_t> search_cap_from_env() {
  const char* raw = std::getenv("WORDPOWER_MAX_SEARCH");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw DomainError("WORDPOWER_MAX_SEARCH must be a nonnegative integer");
  return v;
}

Json exponent_list(const ExponentSet& s) { return Json(std::vector<std::size_t>(s.begin(), s.end())); }

Json system_json(const EquationSystem& s) {
  Json j;
  j["variables"] = s.variables().str();
  j["constants"] = s.constants().str();
  Json eqs = Json::array();
  for (const auto& e : s.equations()) eqs.push_back(e.str());
  j["equations"] = eqs;
  j["length"] = s.length();
  j["text"] = s.str();
  return j;
}

void flag_unused_variables(const EquationSystem& s, Report& r) {
  for (const auto& v : s.unused_variables()) r.caveats.push_back("variable '" + v + "' does not occur");
}

struct Options {
  std::string format = "json";
  std::string word;
  std::string alphabet;
  std::string family = "nonperiodic";
  std::size_t max_exp = 6;
  std::size_t max_len = 3;
  bool no_theorems = false;
  std::string letter;
  std::size_t n = 0;
  bool unchecked = false;
  std::string system;
  std::string morphism;
  std::string codomain;
  std::string vars;
};

Report cmd_pex(const Options& o) {
  Report r;
  r.command = "pex";
  const Word w = read_word(o.word, o.alphabet);
  PexQuery q = PexQuery::over(w, parse_family(o.family), o.max_exp, o.max_len);
  q.theorem_witnesses = !o.no_theorems;
  q.max_candidates = search_cap_from_env();
  r.inputs = {{"word", w.str()}, {"alphabet", w.alphabet().str()}, {"family", o.family},
              {"max_exp", o.max_exp}, {"max_len", o.max_len}};
  const PexReport rep = pex_bounded(q);

  Json witnesses = Json::array();
  for (const auto& [n, wit] : rep.witnesses) {
    require(wit.morphism.apply(w) == wit.base.pow(n) && is_primitive(wit.base) &&
                in_family(wit.morphism, q.family),
            "pex exponent " + std::to_string(n));
    witnesses.push_back({{"exponent", n}, {"morphism", wit.morphism.str()}, {"base", wit.base.str()},
                         {"source", wit.source}});
  }
  Json gex_witnesses = Json::array();
  for (const auto& [n, wit] : rep.gex_witnesses) {
    require(wit.morphism.apply(w) == wit.base.pow(n) && in_family(wit.morphism, q.family),
            "gex exponent " + std::to_string(n));
    gex_witnesses.push_back({{"exponent", n}, {"morphism", wit.morphism.str()}, {"base", wit.base.str()},
                             {"source", wit.source}});
  }
  r.result["observed_pex"] = exponent_list(rep.observed_pex);
  r.result["observed_gex"] = exponent_list(rep.observed_gex);
  r.result["beyond_window"] = exponent_list(rep.beyond_window);
  r.result["complete"] = std::string(to_string(rep.complete));
  r.result["closed_form"] = rep.closed_form ? exponent_list(*rep.closed_form) : Json(nullptr);
  r.result["witnesses"] = witnesses;
  r.result["gex_witnesses"] = gex_witnesses;
  r.result["candidates_examined"] = rep.candidates_examined;
  r.caveats = rep.caveats;
  if (rep.search_capped) r.caveats.push_back("search cap");
  return r;
}

Report cmd_classify(const Options& o) {
  Report r;
  r.command = "classify-inj";
  const Word w = read_word(o.word, o.alphabet);
  r.inputs = {{"word", w.str()}, {"alphabet", w.alphabet().str()}};
  const auto pr = primitive_root(w);
  const auto c = classify_injective(w);
  r.result["kind"] = std::string(to_string(c.kind));
  r.result["reason"] = std::string(to_string(c.reason));
  r.result["upper_bound"] = c.upper_bound ? Json(*c.upper_bound) : Json(nullptr);
  r.result["known_exact"] = c.known_exact ? exponent_list(*c.known_exact) : Json(nullptr);
  r.result["primitive_root"] = pr.root.str();
  r.result["root_exponent"] = pr.exponent;
  return r;
}

Report cmd_unique_letter(const Options& o) {
  Report r;
  r.command = "construct unique-letter";
  const Word w = read_word(o.word, o.alphabet);
  r.inputs = {{"word", w.str()}, {"letter", o.letter}, {"n", o.n}, {"unchecked", o.unchecked}};
  const auto hw = o.unchecked ? construct_unique_letter_morphism_unchecked(w, o.letter, o.n)
                              : construct_unique_letter_morphism(w, o.letter, o.n);
  const Word image = hw.h.apply(hw.w);
  require(image == hw.base.pow(hw.exponent), "unique-letter construction");
  r.result["w"] = hw.w.str();
  r.result["morphism"] = hw.h.str();
  r.result["exponent"] = hw.exponent;
  r.result["base"] = hw.base.str();
  r.result["image"] = image.str();
  r.result["injective"] = hw.h.is_injective();
  return r;
}

Report cmd_lower_bound(const Options& o) {
  Report r;
  r.command = "construct lower-bound";
  r.inputs = {{"n", o.n}};
  const auto inst = construct_lower_bound_instance(o.n);
  const Word image = inst.h.apply(inst.w);
  require(image == inst.base.pow(inst.exponent) && is_primitive(inst.base), "lower-bound instance");
  r.result["w"] = inst.w.str();
  r.result["alphabet"] = inst.w.alphabet().str();
  r.result["morphism"] = inst.h.str();
  r.result["exponent"] = inst.exponent;
  r.result["base"] = inst.base.str();
  r.result["image_length"] = image.size();
  r.result["injective"] = inst.h.is_injective();
  r.result["w_primitive"] = is_primitive(inst.w);
  return r;
}

Report cmd_reduce(const std::string& which, const Options& o) {
  Report r;
  r.command = "reduce " + which;
  if (which == "pow-to-eq") {
    const Word w = read_word(o.word, o.alphabet);
    r.inputs = {{"word", w.str()}, {"n", o.n}};
    const auto e = pow_to_equation(w, o.n);
    r.result = system_json(EquationSystem::constant_free(e));
  } else if (which == "nonprim-to-eq") {
    const Word w = read_word(o.word, o.alphabet);
    r.inputs = {{"word", w.str()}};
    r.result = system_json(nonprim_to_system(w));
  } else {
    const EquationSystem s = read_system(o.system);
    r.inputs = {{"system", o.system}};
    flag_unused_variables(s, r);
    if (which == "eq-to-pow") {
      r.inputs["n"] = o.n;
      const Word w = eqsatcf_to_pow(s, o.n);
      r.result = {{"word", w.str()}, {"alphabet", w.alphabet().str()}, {"length", w.size()}};
    } else if (which == "eq-to-nonprim") {
      const Word w = eqsatcf_to_nonprim(s);
      r.result = {{"word", w.str()}, {"alphabet", w.alphabet().str()}, {"length", w.size()}};
    } else if (which == "cf-to-const") {
      r.result = system_json(eqsatcf_to_eqsat(s));
    } else {
      const auto e = balance_system(s);
      r.result = {{"lhs", e.lhs.str()}, {"rhs", e.rhs.str()}, {"length", e.lhs.size() + e.rhs.size()},
                  {"balanced", is_balanced(e)}};
    }
  }
  return r;
}

Report cmd_solve(const Options& o) {
  Report r;
  r.command = "solve";
  const EquationSystem s = read_system(o.system);
  const MorphismFamily family = parse_family(o.family);
  const Alphabet codomain = !o.codomain.empty() ? Alphabet::parse(o.codomain)
                            : s.constant_free()  ? Alphabet::from_chars("ab")
                                                 : s.constants();
  r.inputs = {{"system", o.system}, {"family", o.family}, {"max_len", o.max_len}, {"codomain", codomain.str()}};
  flag_unused_variables(s, r);
  SolveOptions opts;
  opts.max_candidates = search_cap_from_env();
  const auto out = solve_bounded(s, family, o.max_len, codomain, opts);
  if (out.witness) require(check_solution(s, *out.witness) && in_family(*out.witness, family), "solution");
  r.result["status"] = std::string(to_string(out.status));
  r.result["witness"] = out.witness ? Json(out.witness->str()) : Json(nullptr);
  r.result["bound_used"] = out.bound_used;
  r.result["candidates_examined"] = out.candidates_examined;
  if (out.search_capped) r.caveats.push_back("search cap");
  if (!out.sat()) r.caveats.push_back("UnknownAtBound L=" + std::to_string(o.max_len) + " is not a proof of unsatisfiability");
  return r;
}

Report cmd_check(const std::string& which, const Options& o) {
  Report r;
  r.command = "check " + which;
  if (which == "primitive") {
    const Word w = read_word(o.word, o.alphabet);
    r.inputs = {{"word", w.str()}};
    const auto pr = primitive_root(w);
    r.result = {{"primitive", pr.exponent == 1}, {"root", pr.root.str()}, {"exponent", pr.exponent}};
    return r;
  }
  const std::optional<Alphabet> codomain =
      o.codomain.empty() ? std::nullopt : std::optional<Alphabet>(Alphabet::parse(o.codomain));
  if (which == "solution") {
    const EquationSystem s = read_system(o.system);
    const Morphism h = Morphism::parse(o.morphism, std::nullopt, codomain);
    r.inputs = {{"system", o.system}, {"morphism", h.str()}};
    r.result = {{"solution", check_solution(s, h)}, {"periodic", h.restricted(s.variables()).is_periodic()}};
    return r;
  }
  const Morphism h = Morphism::parse(o.morphism, std::nullopt, codomain);
  r.inputs = {{"morphism", h.str()}};
  if (which == "injective") {
    r.result = {{"injective", h.is_injective()}};
  } else {
    r.result = {{"periodic", h.is_periodic()}};
  }
  return r;
}

Report cmd_xy(const Options& o) {
  Report r;
  r.command = "xy-words";
  Alphabet vars;
  if (!o.vars.empty()) {
    vars = Alphabet::parse(o.vars);
  } else {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= o.n; ++i) names.push_back("x" + std::to_string(i));
    vars = Alphabet(std::move(names));
  }
  r.inputs = {{"vars", vars.str()}};
  const auto xy = xy_words(vars);
  r.result = {{"X", xy.x.str()}, {"Y", xy.y.str()}, {"length", xy.x.size()}};
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Words, morphisms and powers: exponent sets, constructions and reductions", "word"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::function<Report()> action;
  auto word_opts = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--word", o.word, "Word, letters juxtaposed (or space separated)");
    if (required) opt->required();
    c->add_option("--alphabet", o.alphabet, "Comma separated letters (default: letters of the word)");
  };

  auto* pex = app.add_subcommand("pex", "Observe pex/gex exponent sets by bounded search");
  word_opts(pex);
  pex->add_option("--family", o.family)->check(CLI::IsMember({"all", "nonperiodic", "injective"}));
  pex->add_option("--max-exp", o.max_exp)->check(CLI::PositiveNumber);
  pex->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
  pex->add_flag("--no-theorems", o.no_theorems, "Bounded search only");
  pex->callback([&] { action = [&] { return cmd_pex(o); }; });

  auto* cls = app.add_subcommand("classify-inj", "Classify pex under injective morphisms");
  word_opts(cls);
  cls->callback([&] { action = [&] { return cmd_classify(o); }; });

  auto* construct = app.add_subcommand("construct", "Explicit high-power constructions");
  construct->require_subcommand(1);
  auto* unique = construct->add_subcommand("unique-letter", "h(a) = a(vua)^(n-1) for w = uav");
  word_opts(unique);
  unique->add_option("--letter", o.letter)->required();
  unique->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  unique->add_flag("--unchecked", o.unchecked, "Allow nonprimitive words");
  unique->callback([&] { action = [&] { return cmd_unique_letter(o); }; });
  auto* lower = construct->add_subcommand("lower-bound", "Injective instance reaching exponent n-1");
  lower->add_option("--n", o.n)->required();
  lower->callback([&] { action = [&] { return cmd_lower_bound(o); }; });

  auto* reduce = app.add_subcommand("reduce", "Reductions between power problems and word equations");
  reduce->require_subcommand(1);
  for (const char* which : {"pow-to-eq", "eq-to-pow", "nonprim-to-eq", "eq-to-nonprim", "cf-to-const", "balance"}) {
    auto* c = reduce->add_subcommand(which);
    const std::string name = which;
    if (name == "pow-to-eq" || name == "nonprim-to-eq") {
      word_opts(c);
    } else {
      c->add_option("--system", o.system, "Equation file")->required();
    }
    if (name == "pow-to-eq" || name == "eq-to-pow") c->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    c->callback([&, name] { action = [&, name] { return cmd_reduce(name, o); }; });
  }

  auto* solve = app.add_subcommand("solve", "Bounded search for a solution of an equation system");
  solve->add_option("--system", o.system, "Equation file")->required();
  solve->add_option("--family", o.family)->check(CLI::IsMember({"all", "nonperiodic", "injective"}));
  solve->add_option("--max-len", o.max_len, "Per-variable image length bound");
  solve->add_option("--codomain", o.codomain, "Comma separated target letters");
  solve->callback([&] { action = [&] { return cmd_solve(o); }; });

  auto* check = app.add_subcommand("check", "Predicates on words, morphisms and solutions");
  check->require_subcommand(1);
  for (const char* which : {"injective", "periodic", "primitive", "solution"}) {
    auto* c = check->add_subcommand(which);
    const std::string name = which;
    if (name == "primitive") {
      word_opts(c);
    } else {
      c->add_option("--morphism", o.morphism, "Morphism, e.g. a->ab;b->ba")->required();
      c->add_option("--codomain", o.codomain, "Comma separated codomain letters");
    }
    if (name == "solution") c->add_option("--system", o.system, "Equation file")->required();
    c->callback([&, name] { action = [&, name] { return cmd_check(name, o); }; });
  }

  auto* xy = app.add_subcommand("xy-words", "The X and Y separator words over a variable set");
  auto* vars_opt = xy->add_option("--vars", o.vars, "Comma separated variables");
  auto* n_opt = xy->add_option("--n", o.n, "Use variables x1..xn")->check(CLI::PositiveNumber);
  vars_opt->excludes(n_opt);
  xy->callback([&] {
    if (o.vars.empty() && o.n == 0) throw CLI::ValidationError("xy-words needs --vars or --n");
    action = [&] { return cmd_xy(o); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'word --help' for usage\n";
    return 2;
  }

  try {
    const Report report = action();
    out << render(report, o.format == "text" ? Format::Text : Format::Json);
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"word"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wordpow::cli
