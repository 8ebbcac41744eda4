// Word equations and systems of them.
//
// Text format (one system per file):
//
//   vars:x,y,z
//   consts:
//   xx = yzy
//
// Both headers are required and come first; symbols on equation lines are
// juxtaposed (longest declared name wins) and powers are always written out.

#ifndef WORDPOW_EQUATION_HPP_
#define WORDPOW_EQUATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wordpow/morphism.hpp"
#include "wordpow/word.hpp"

namespace wordpow {

// lhs and rhs share one alphabet of symbols.
struct Equation {
  Word lhs;
  Word rhs;

  // "lhs = rhs"
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
  bool operator==(const Equation&) const = default;
};

// |lhs|_x == |rhs|_x for every symbol x.
bool is_balanced(const Equation& e);

class EquationSystem {
 public:
  // Equation words may be over any alphabet whose names are declared
  // symbols; they are re-expressed over symbols() = variables ++ constants.
  EquationSystem(Alphabet variables, Alphabet constants, std::vector<Equation> equations);

  // A constant-free system holding one equation over e.lhs.alphabet().
  static EquationSystem constant_free(const Equation& e);

  static EquationSystem parse(std::string_view text);
  std::string str() const;

  const Alphabet& variables() const { return variables_; }
  const Alphabet& constants() const { return constants_; }
  // Variables first, then constants; letter i < |variables| is variable i.
  const Alphabet& symbols() const { return symbols_; }
  const std::vector<Equation>& equations() const { return equations_; }

  bool constant_free() const { return constants_.empty(); }
  bool is_constant(Letter symbol) const { return symbol >= variables_.size(); }
  // Sum of |lhs| + |rhs| over all equations.
  std::size_t length() const;
  // Variables that occur in no equation.
  std::vector<std::string> unused_variables() const;

 private:
  Alphabet variables_;
  Alphabet constants_;
  Alphabet symbols_;
  std::vector<Equation> equations_;
};

// Every equation balanced. Throws for systems with constants.
bool is_balanced(const EquationSystem& s);

// h extended by the identity on constants equalizes every equation. h must
// be defined on every variable; constants must be codomain letters.
bool check_solution(const EquationSystem& s, const Morphism& h);

}  // namespace wordpow

#endif  // WORDPOW_EQUATION_HPP_
