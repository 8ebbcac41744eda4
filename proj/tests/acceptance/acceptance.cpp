// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "wordpow/combinatorics.hpp"
#include "wordpow/constructions.hpp"
#include "wordpow/equation.hpp"
#include "wordpow/morphism.hpp"
#include "wordpow/pex.hpp"
#include "wordpow/reductions.hpp"
#include "wordpow/solver.hpp"

using namespace wordpow;

namespace {

const Alphabet kAB = Alphabet::from_chars("ab");

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string show(const ExponentSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

// ---------------------------------------------------------------------------

Verdict small_examples() {
  Verdict v;
  struct Case {
    const char* word;
    ExponentSet expect;
  };
  const Case cases[] = {{"aa", {2, 4, 6}}, {"aab", {1, 2, 3, 4, 5, 6}}, {"aabb", {1}}};
  std::string summary;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    PexQuery q = PexQuery::over(Word::parse(c.word, kAB), MorphismFamily::Nonperiodic, 6, 4);
    q.domain = kAB;
    const PexReport r = pex_bounded(q);
    const double dt = seconds_since(t0);
    v.expect(r.observed_pex == c.expect, std::string(c.word) + ": got " + show(r.observed_pex));
    v.expect(dt < 60.0, std::string(c.word) + ": took " + std::to_string(dt) + "s");
    for (const auto& [n, wit] : r.witnesses) {
      const std::string img = wit.morphism.apply(q.word).str();
      v.expect(img.size() / oracle::root(img).size() == n && !wit.morphism.is_periodic(),
               std::string(c.word) + ": bad witness for " + std::to_string(n));
    }
    summary += std::string(summary.empty() ? "" : " ") + c.word + "=" + show(r.observed_pex);
  }
  if (v.pass) v.detail = summary;
  return v;
}

Verdict lower_bound_example() {
  Verdict v;
  const auto inst = construct_lower_bound_instance(4);
  const Morphism rename = Morphism::parse("x1->a;x2->b;x3->c;x4->d", inst.w.alphabet(), Alphabet::from_chars("abcd"));
  const std::string w = rename.apply(inst.w).str();
  v.expect(w == "aabbcddc", "w = " + w);
  const std::vector<std::string> images{"aaaabaa", "aabaaaa", "b", "aaa"};
  const std::string expect = oracle::power("aaaabaaaaaab", 3);
  v.expect(oracle::apply("abcd", images, w) == expect, "hand-written images disagree");
  v.expect(inst.h.apply(inst.w).str() == expect, "h(w) = " + inst.h.apply(inst.w).str());
  v.expect(inst.h.is_injective(), "h not injective");
  if (v.pass) v.detail = "w=aabbcddc h(w)=(a^4ba^6b)^3 injective";
  return v;
}

Verdict lower_bound_family() {
  Verdict v;
  for (std::size_t n : {4, 6, 8, 10}) {
    const auto inst = construct_lower_bound_instance(n);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    v.expect(inst.w.size() == 2 * n, tag + "|w| = " + std::to_string(inst.w.size()));
    for (auto c : inst.w.letter_counts()) v.expect(c == 2, tag + "letter count " + std::to_string(c));
    // Letter names are multi-character; primitivity is checked on the letter sequence.
    std::string letters;
    for (Letter l : inst.w.letters()) letters.push_back(static_cast<char>('A' + l));
    v.expect(oracle::primitive(letters), tag + "w not primitive");
    v.expect(inst.h.is_injective(), tag + "h not injective");
    const std::string img = inst.h.apply(inst.w).str();
    const std::size_t e = img.size() / oracle::root(img).size();
    v.expect(e == n - 1, tag + "exponent " + std::to_string(e));
    v.expect(e + 1 >= inst.w.size() / 2, tag + "exponent below |w|/2 - 1");
  }
  if (v.pass) v.detail = "n=4,6,8,10: |w|=2n, counts 2, exponent n-1";
  return v;
}

// Words over `letters`, |w| <= max_len, primitive, no letter exactly once.
std::vector<std::string> sweep_words(const std::string& letters, std::size_t max_len) {
  std::vector<std::string> out;
  for (const auto& s : oracle::words_up_to(letters, max_len)) {
    if (!oracle::primitive(s)) continue;
    bool once = false;
    for (char c : letters) once = once || std::count(s.begin(), s.end(), c) == 1;
    if (!once) out.push_back(s);
  }
  return out;
}

// Injective morphisms from `domain` into {a,b}, images of length <= 3.
std::vector<std::vector<std::string>> injective_images(const std::string& domain) {
  const auto images = oracle::words_up_to("ab", 3);
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  std::function<void()> rec = [&] {
    if (cur.size() == domain.size()) {
      std::vector<Word> ws;
      for (const auto& s : cur) ws.push_back(Word::parse(s, kAB));
      if (Morphism(Alphabet::from_chars(domain), kAB, ws).is_injective()) out.push_back(cur);
      return;
    }
    for (const auto& s : images) {
      cur.push_back(s);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

struct SweepResult {
  std::size_t pairs = 0;
  std::size_t bound_violations = 0;
  std::size_t exact_violations = 0;
  std::string first;
};

SweepResult sweep(const std::string& domain, std::size_t max_len, bool binary_exact) {
  SweepResult r;
  const auto words = sweep_words(domain, max_len);
  const auto morphisms = injective_images(domain);
  for (const auto& im : morphisms) {
    for (const auto& w : words) {
      const std::string img = oracle::apply(domain, im, w);
      const std::size_t e = img.size() / oracle::root(img).size();
      ++r.pairs;
      if (e >= w.size()) {
        if (r.first.empty()) r.first = w;
        ++r.bound_violations;
      }
      if (binary_exact && e != 1) {
        if (r.first.empty()) r.first = w;
        ++r.exact_violations;
      }
    }
  }
  return r;
}

Verdict injective_bound() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto bin = sweep("ab", 8, false);
  const auto ter = sweep("abc", 6, false);
  const double dt = seconds_since(t0);
  const std::size_t bad = bin.bound_violations + ter.bound_violations;
  v.expect(bad == 0, std::to_string(bad) + " violations, e.g. w=" + bin.first + ter.first);
  v.expect(dt <= 600.0, "took " + std::to_string(dt) + "s");
  // The library classifier must bound the same observations.
  for (const auto& s : sweep_words("abc", 6)) {
    const auto c = classify_injective(Word::parse(s, Alphabet::from_chars("abc")));
    if (c.kind == InjKind::FiniteBounded) v.expect(c.upper_bound && *c.upper_bound < s.size(), "classifier bound for " + s);
  }
  if (v.pass) {
    v.detail = std::to_string(bin.pairs + ter.pairs) + " (w,h) pairs, 0 violations, " +
               std::to_string(static_cast<int>(dt)) + "s";
  }
  return v;
}

Verdict binary_exactness() {
  Verdict v;
  const auto r = sweep("ab", 8, true);
  v.expect(r.exact_violations == 0, std::to_string(r.exact_violations) + " violations, e.g. w=" + r.first);
  for (const auto& s : sweep_words("ab", 8)) {
    const auto c = classify_injective(Word::parse(s, kAB));
    v.expect(c.known_exact && *c.known_exact == ExponentSet{1}, "classifier for " + s);
  }
  if (v.pass) v.detail = std::to_string(r.pairs) + " (w,h) pairs, exponent always 1";
  return v;
}

Verdict separator_equivalence() {
  Verdict v;
  std::mt19937 rng(20240521);
  std::size_t periodic = 0, cases = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = i % 2 == 0 ? 2 : 3;
    const std::string domain = std::string("xyz").substr(0, d);
    std::vector<std::string> im;
    auto random_word = [&](std::size_t max) {
      std::string s;
      const std::size_t len = rng() % (max + 1);
      for (std::size_t k = 0; k < len; ++k) s.push_back(rng() % 2 ? 'b' : 'a');
      return s;
    };
    if (rng() % 3 == 0) {
      // Powers of one word, so that periodic morphisms are well represented.
      const std::string root = random_word(2);
      for (std::size_t k = 0; k < d; ++k) {
        std::size_t e = rng() % 4;
        while (e * root.size() > 3) --e;
        im.push_back(oracle::power(root, e));
      }
    } else {
      for (std::size_t k = 0; k < d; ++k) im.push_back(random_word(3));
    }
    std::vector<Word> ws;
    for (const auto& s : im) ws.push_back(Word::parse(s, kAB));
    const Alphabet dom = Alphabet::from_chars(domain);
    const Morphism h(dom, kAB, ws);
    const auto sep = xy_words(dom);
    const Word hx = h.apply(sep.x), hy = h.apply(sep.y);
    const bool c1 = h.is_periodic();
    v.expect(c1 == oracle::periodic(im), "periodicity oracle disagrees on " + h.str());
    periodic += c1;
    for (std::size_t n : {2, 3}) {
      ++cases;
      const bool c2 = hx == hy;
      const bool c3 = hx + hy == hy + hx;
      const Word p = hx.pow(n) + hy.pow(n);
      const bool c4 = !is_primitive(p);
      v.expect(c1 == c2 && c2 == c3 && c3 == c4, "conditions disagree on " + h.str() + " n=" + std::to_string(n));
    }
  }
  if (v.pass) {
    v.detail = std::to_string(cases) + " cases agree (" + std::to_string(periodic) + " of 200 morphisms periodic)";
  }
  return v;
}

Verdict periodic_only_equations() {
  Verdict v;
  const Alphabet xyz = Alphabet::from_chars("xyz");
  for (std::size_t k : {2, 3}) {
    for (std::size_t m : {2, 3}) {
      for (std::size_t n : {2, 3}) {
        const std::string lhs = oracle::power("x", k);
        const std::string rhs = oracle::power("y", m) + oracle::power("z", n);
        const auto s = EquationSystem::constant_free({Word::parse(lhs, xyz), Word::parse(rhs, xyz)});
        const auto out = solve_bounded(s, MorphismFamily::Nonperiodic, 4, kAB);
        v.expect(!out.sat() && !out.witness, lhs + "=" + rhs + " returned a witness");
      }
    }
  }
  const auto s = EquationSystem::parse("vars:x,y,z\nconsts:\nxx = yzy\n");
  const auto out = solve_bounded(s, MorphismFamily::Nonperiodic, 4, kAB);
  v.expect(out.sat() && out.witness && check_solution(s, *out.witness) && !out.witness->is_periodic(),
           "xx=yzy not solved");
  if (v.pass) v.detail = "8 equations UnknownAtBound; xx=yzy Sat with " + out.witness->str();
  return v;
}

// ---------------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct FixtureCheck {
  bool sat[4] = {false, false, false, false};  // s, EqSat, Pow(2), NonPrim
  std::size_t backward = 0;                    // witnesses found on reduced instances
  std::string problem;
};

FixtureCheck check_fixture(const EquationSystem& s) {
  FixtureCheck f;
  auto problem = [&](const std::string& why) {
    if (f.problem.empty()) f.problem = why;
  };
  const auto base = solve_bounded(s, MorphismFamily::Nonperiodic, 4, kAB);
  f.sat[0] = base.sat();

  const EquationSystem constant = eqsatcf_to_eqsat(s);
  const Word pow = eqsatcf_to_pow(s, 2);
  const Word nonprim = eqsatcf_to_nonprim(s);

  // Forward: translate the solution of s.
  if (base.sat()) {
    const Morphism& h = *base.witness;
    const auto lifted = lift_to_constant_system(s, h);
    if (lifted && check_solution(constant, *lifted)) {
      f.sat[1] = true;
      const Morphism back = restrict_to_variables(s, *lifted);
      if (!check_solution(s, back) || back.is_periodic()) problem("constant system witness does not restrict");
    }
    const std::string hp = h.apply(pow).str();
    if (hp.size() % 2 == 0 && hp.substr(0, hp.size() / 2) == hp.substr(hp.size() / 2)) f.sat[2] = true;
    if (!oracle::primitive(h.apply(nonprim).str())) f.sat[3] = true;
  }

  // Backward: independent bounded searches on the reduced instances; any
  // witness must translate back into a nonperiodic solution of s.
  auto solves_s = [&](const Morphism& g) {
    const Morphism r = g.restricted(s.variables());
    return check_solution(s, r) && !r.is_periodic();
  };
  SolveOptions opts;
  opts.max_candidates = 2'000'000;
  const std::size_t fresh = xy_words(s.variables()).x.size() * 2;
  for (const char* name : {"_x", "_y", "_z"}) opts.variable_bounds[name] = fresh;
  const auto c = solve_bounded(constant, MorphismFamily::All, 2, Alphabet::parse("_a,_b"), opts);
  f.backward += c.sat();
  if (c.sat()) {
    f.sat[1] = true;
    if (!solves_s(restrict_to_variables(s, *c.witness))) problem("constant system witness contradicts s");
  }
  const auto p = find_power_witness(pow, 2, MorphismFamily::Nonperiodic, 2, {{}, 200'000});
  f.backward += p.sat();
  if (p.sat()) {
    f.sat[2] = true;
    if (!solves_s(*p.witness)) problem("square witness contradicts s");
  }
  const auto q = find_nonprimitive_witness(nonprim, MorphismFamily::Nonperiodic, 1, {{}, 200'000});
  f.backward += q.sat();
  if (q.sat()) {
    f.sat[3] = true;
    if (!solves_s(*q.witness)) problem("nonprimitive witness contradicts s");
  }
  return f;
}

Verdict reduction_round_trip() {
  Verdict v;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    const std::string name = e.path().filename().string();
    if (e.path().extension() == ".eq" && (name.rfind("sat_", 0) == 0 || name.rfind("unsat_", 0) == 0)) {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  v.expect(files.size() >= 10, "only " + std::to_string(files.size()) + " fixtures");
  std::size_t sat = 0, backward = 0;
  for (const auto& path : files) {
    const std::string name = path.stem().string();
    const EquationSystem s = EquationSystem::parse(slurp(path));
    v.expect(s.constant_free() && s.variables().size() <= 3 && s.length() <= 8, name + ": fixture out of range");
    const bool expect_sat = name.rfind("sat_", 0) == 0;
    const auto f = check_fixture(s);
    v.expect(f.problem.empty(), name + ": " + f.problem);
    v.expect(f.sat[0] == expect_sat, name + ": unexpected status of s");
    for (int k = 1; k < 4; ++k) {
      v.expect(f.sat[k] == f.sat[0], name + ": reduced instance " + std::to_string(k) + " disagrees");
    }
    sat += f.sat[0];
    backward += f.backward;
  }
  if (v.pass) {
    v.detail = std::to_string(files.size()) + " fixtures (" + std::to_string(sat) + " Sat), verdicts consistent, " +
               std::to_string(backward) + " reduced-instance witnesses mapped back";
  }
  return v;
}

Verdict scaling_consistency() {
  Verdict v;
  constexpr std::size_t window = 4;
  std::size_t checked = 0;
  for (const auto& r : oracle::words_up_to("ab", 4)) {
    if (!oracle::primitive(r)) continue;
    for (std::size_t k : {2, 3}) {
      for (bool theorems : {true, false}) {
        PexQuery qr = PexQuery::over(Word::parse(r, kAB), MorphismFamily::Nonperiodic, window, 3);
        qr.domain = kAB;
        qr.theorem_witnesses = theorems;
        PexQuery qk = qr;
        qk.word = Word::parse(oracle::power(r, k), kAB);
        qk.max_exponent = k * window;
        const auto pr = pex_bounded(qr).observed_pex;
        const auto pk = pex_bounded(qk).observed_pex;
        const auto scaled = pex_scale_by_primitive_power(pr, k, k * window);
        v.expect(pk == scaled.pex, r + "^" + std::to_string(k) + ": " + show(pk) + " vs " + show(scaled.pex));
        ++checked;
      }
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " comparisons exact";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"pex of aa, aab, aabb over {a,b}", small_examples},
      {"lower-bound instance n=4", lower_bound_example},
      {"lower-bound family n=4..10", lower_bound_family},
      {"injective exponent below |w|", injective_bound},
      {"binary words: injective exponent exactly 1", binary_exactness},
      {"separator words: four periodicity conditions agree", separator_equivalence},
      {"periodic-only equations stay unsolved", periodic_only_equations},
      {"reduction round trips", reduction_round_trip},
      {"pex of r^k is the scaled pex of r", scaling_consistency},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", index, c.name, v.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
