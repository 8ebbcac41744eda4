#include "wordpow/reductions.hpp"

#include <string>
#include <vector>

namespace wordpow {

namespace {

void require_fresh(const Alphabet& taken, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (taken.contains(n)) {
      throw DomainError(std::string("symbol '") + n + "' is reserved for generated variables");
    }
  }
}

void require_constant_free(const EquationSystem& s) {
  if (!s.constant_free()) throw DomainError("reduction needs a constant-free system");
}

}  // namespace

XYWords xy_words(const Alphabet& vars) {
  if (vars.empty()) throw DomainError("X/Y words need at least one variable");
  const std::size_t n = vars.size();
  std::vector<Letter> x, y;
  x.reserve(2 * n * n);
  y.reserve(2 * n * n);
  for (Letter i = 0; i < n; ++i) {
    for (Letter j = 0; j < n; ++j) {
      x.insert(x.end(), {i, j});
      y.insert(y.end(), {j, i});
    }
  }
  return {Word(vars, std::move(x)), Word(vars, std::move(y))};
}

Equation balance_system(const EquationSystem& s) {
  require_constant_free(s);
  if (s.equations().empty()) throw DomainError("cannot balance an empty system");
  for (const auto& e : s.equations()) {
    if (e.lhs.empty() || e.rhs.empty()) throw DomainError("cannot balance an equation with an empty side");
  }
  const auto xy = xy_words(s.variables());
  const std::size_t big_n = s.length();
  const Word block = xy.x.pow(big_n) + xy.y.pow(big_n);
  const Word separator = block.pow(2);

  Word lhs(s.variables()), rhs(s.variables());
  for (const auto& e : s.equations()) {
    lhs += e.lhs + separator + e.rhs;
    rhs += e.rhs + separator + e.lhs;
  }
  return {std::move(lhs), std::move(rhs)};
}

EquationSystem eqsatcf_to_eqsat(const EquationSystem& s) {
  require_constant_free(s);
  require_fresh(s.variables(), {"_x", "_y", "_z", "_a", "_b"});
  const Alphabet vars = s.variables().concat(Alphabet({"_x", "_y", "_z"}));
  const Alphabet consts({"_a", "_b"});
  const Alphabet symbols = vars.concat(consts);
  const auto xy = xy_words(s.variables());

  std::vector<Equation> equations;
  for (const auto& e : s.equations()) equations.push_back({e.lhs.rebased(symbols), e.rhs.rebased(symbols)});
  equations.push_back({xy.x.rebased(symbols), Word::parse("_x _a _y", symbols)});
  equations.push_back({xy.y.rebased(symbols), Word::parse("_x _b _z", symbols)});
  return EquationSystem(vars, consts, std::move(equations));
}

Equation pow_to_equation(const Word& w, std::size_t n) {
  if (n == 0) throw DomainError("exponent must be positive");
  require_fresh(w.alphabet(), {"_x"});
  const Alphabet symbols = w.alphabet().concat(Alphabet({"_x"}));
  const Word x = Word::parse("_x", symbols);
  return {w.rebased(symbols), x.pow(n)};
}

Word eqsatcf_to_pow(const EquationSystem& s, std::size_t n) {
  if (n < 2) throw DomainError("Pow(n) reduction needs n >= 2");
  const Equation uv = balance_system(s);
  return uv.lhs + uv.rhs.pow(n - 1);
}

EquationSystem nonprim_to_system(const Word& w) {
  require_fresh(w.alphabet(), {"_x", "_y"});
  const Alphabet vars = w.alphabet().concat(Alphabet({"_x", "_y"}));
  std::vector<Equation> equations;
  equations.push_back({w.rebased(vars), Word::parse("_x _x _y _y _y", vars)});
  equations.push_back({Word::parse("_x _y", vars), Word::parse("_y _x", vars)});
  return EquationSystem(vars, Alphabet(), std::move(equations));
}

Word eqsatcf_to_nonprim(const EquationSystem& s) {
  const Equation uv = balance_system(s);
  const auto xy = xy_words(s.variables());
  const std::size_t m = uv.lhs.size() + uv.rhs.size();
  const Word z4 = (xy.x.pow(m) + xy.y.pow(m)).pow(4);
  return z4 + uv.lhs + z4 + uv.rhs;
}

std::optional<Morphism> lift_to_constant_system(const EquationSystem& s, const Morphism& h) {
  require_constant_free(s);
  const auto xy = xy_words(s.variables());
  const Word hx = h.apply(xy.x);
  const Word hy = h.apply(xy.y);
  // |X|_v == |Y|_v for every v, so |h(X)| == |h(Y)|.
  std::size_t p = 0;
  while (p < hx.size() && hx[p] == hy[p]) ++p;
  if (p == hx.size()) return std::nullopt;

  // Codomain: _a, _b for the two differing letters, then the rest by name.
  const Letter first = hx[p], second = hy[p];
  std::vector<std::string> names{"_a", "_b"};
  std::vector<Letter> rename(h.codomain().size());
  rename[first] = 0;
  rename[second] = 1;
  for (std::size_t l = 0; l < h.codomain().size(); ++l) {
    if (l == first || l == second) continue;
    const auto& name = h.codomain().name(static_cast<Letter>(l));
    if (name == "_a" || name == "_b") throw DomainError("codomain letter clashes with generated constants");
    rename[l] = static_cast<Letter>(names.size());
    names.push_back(name);
  }
  const Alphabet codomain(std::move(names));
  auto renamed = [&](std::span<const Letter> letters) {
    std::vector<Letter> out;
    for (Letter l : letters) out.push_back(rename[l]);
    return out;
  };

  const EquationSystem target = eqsatcf_to_eqsat(s);
  std::vector<std::vector<Letter>> images;
  const Morphism on_vars = h.restricted(s.variables());
  for (const auto& img : on_vars.raw_images()) images.push_back(renamed(img));
  images.push_back(renamed(hx.letters().subspan(0, p)));
  images.push_back(renamed(hx.letters().subspan(p + 1)));
  images.push_back(renamed(hy.letters().subspan(p + 1)));
  return Morphism(target.variables(), codomain, std::move(images));
}

Morphism restrict_to_variables(const EquationSystem& s, const Morphism& g) {
  return g.restricted(s.variables());
}

Morphism extend_power_witness(const Word& w, const Morphism& h, const Word& base) {
  const Alphabet vars = w.alphabet().concat(Alphabet({"_x"}));
  std::vector<std::vector<Letter>> images;
  for (const auto& name : w.alphabet().names()) images.push_back(h.raw_images()[h.domain().letter(name)]);
  const Word b = base.alphabet() == h.codomain() ? base : base.rebased(h.codomain());
  images.emplace_back(b.letters().begin(), b.letters().end());
  return Morphism(vars, h.codomain(), std::move(images));
}

std::pair<std::size_t, std::size_t> split_two_three(std::size_t n) {
  if (n < 2) throw DomainError("n = 2i + 3j needs n >= 2");
  for (std::size_t i = 0; 2 * i <= n; ++i) {
    if ((n - 2 * i) % 3 == 0) return {i, (n - 2 * i) / 3};
  }
  throw std::logic_error("unreachable: every n >= 2 is 2i + 3j");
}

Morphism extend_nonprim_witness(const Word& w, const Morphism& h, const Word& base, std::size_t n) {
  const auto [i, j] = split_two_three(n);
  const Alphabet vars = w.alphabet().concat(Alphabet({"_x", "_y"}));
  std::vector<std::vector<Letter>> images;
  for (const auto& name : w.alphabet().names()) images.push_back(h.raw_images()[h.domain().letter(name)]);
  const Word b = base.alphabet() == h.codomain() ? base : base.rebased(h.codomain());
  for (std::size_t k : {i, j}) {
    const Word p = b.pow(k);
    images.emplace_back(p.letters().begin(), p.letters().end());
  }
  return Morphism(vars, h.codomain(), std::move(images));
}

}  // namespace wordpow
