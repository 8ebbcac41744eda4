#include "wordpow/equation.hpp"

#include <cctype>
#include <sstream>

namespace wordpow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_balanced(const Equation& e) {
  if (!(e.lhs.alphabet() == e.rhs.alphabet())) throw DomainError("equation sides use different alphabets");
  return e.lhs.letter_counts() == e.rhs.letter_counts();
}

EquationSystem::EquationSystem(Alphabet variables, Alphabet constants, std::vector<Equation> equations)
    : variables_(std::move(variables)),
      constants_(std::move(constants)),
      symbols_(variables_.concat(constants_)) {
  equations_.reserve(equations.size());
  for (auto& e : equations) {
    Word lhs = e.lhs.alphabet() == symbols_ ? std::move(e.lhs) : e.lhs.rebased(symbols_);
    Word rhs = e.rhs.alphabet() == symbols_ ? std::move(e.rhs) : e.rhs.rebased(symbols_);
    equations_.push_back({std::move(lhs), std::move(rhs)});
  }
}

EquationSystem EquationSystem::constant_free(const Equation& e) {
  return EquationSystem(e.lhs.alphabet(), Alphabet(), {e});
}

EquationSystem EquationSystem::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  std::size_t i = 0;
  auto next_nonblank = [&]() -> std::string_view {
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i == lines.size()) throw ParseError("equation file ends before the vars:/consts: headers");
    return trim(lines[i++]);
  };
  auto header = [&](std::string_view key) {
    auto line = next_nonblank();
    if (line.substr(0, key.size()) != key) {
      throw ParseError("expected '" + std::string(key) + "' header, got '" + std::string(line) + "'");
    }
    return Alphabet::parse(line.substr(key.size()));
  };
  Alphabet vars = header("vars:");
  Alphabet consts = header("consts:");
  Alphabet symbols = vars.concat(consts);

  std::vector<Equation> equations;
  for (; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos || line.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("equation line needs exactly one '=': '" + std::string(line) + "'");
    }
    Word lhs = Word::parse(trim(line.substr(0, eq)), symbols);
    Word rhs = Word::parse(trim(line.substr(eq + 1)), symbols);
    equations.push_back({std::move(lhs), std::move(rhs)});
  }
  return EquationSystem(std::move(vars), std::move(consts), std::move(equations));
}

std::string EquationSystem::str() const {
  std::ostringstream out;
  out << "vars:" << variables_.str() << '\n' << "consts:" << constants_.str() << '\n';
  for (const auto& e : equations_) out << e.str() << '\n';
  return out.str();
}

std::size_t EquationSystem::length() const {
  std::size_t n = 0;
  for (const auto& e : equations_) n += e.lhs.size() + e.rhs.size();
  return n;
}

std::vector<std::string> EquationSystem::unused_variables() const {
  std::vector<bool> used(variables_.size(), false);
  for (const auto& e : equations_) {
    for (const Word* side : {&e.lhs, &e.rhs}) {
      for (Letter l : side->letters()) {
        if (l < used.size()) used[l] = true;
      }
    }
  }
  std::vector<std::string> out;
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) out.push_back(variables_.name(static_cast<Letter>(v)));
  }
  return out;
}

bool is_balanced(const EquationSystem& s) {
  if (!s.constant_free()) throw DomainError("balance is only defined for constant-free systems");
  for (const auto& e : s.equations()) {
    if (!is_balanced(e)) return false;
  }
  return true;
}

bool check_solution(const EquationSystem& s, const Morphism& h) {
  // Image of every symbol: variables through h, constants to themselves.
  std::vector<std::vector<Letter>> images(s.symbols().size());
  for (std::size_t v = 0; v < s.variables().size(); ++v) {
    const auto& name = s.variables().name(static_cast<Letter>(v));
    auto d = h.domain().find(name);
    if (!d) throw DomainError("solution does not define variable '" + name + "'");
    images[v] = h.raw_images()[*d];
  }
  for (std::size_t c = 0; c < s.constants().size(); ++c) {
    const auto& name = s.constants().name(static_cast<Letter>(c));
    auto l = h.codomain().find(name);
    if (!l) throw DomainError("constant '" + name + "' is not a letter of the solution's codomain");
    images[s.variables().size() + c] = {*l};
  }
  std::vector<Letter> lhs, rhs;
  for (const auto& e : s.equations()) {
    seq::apply_images(images, e.lhs.letters(), lhs);
    seq::apply_images(images, e.rhs.letters(), rhs);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace wordpow
