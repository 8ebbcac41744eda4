// Polynomial reductions between power-mapping problems and word-equation
// satisfiability, with witness translation in both directions.
//
// Problems involved:
//   EqSat     solvability of a system with constants,
//   EqSatCF   nonperiodic solvability of a constant-free system,
//   Pow(n)    can w be mapped onto an n-th power by a nonperiodic morphism,
//   NonPrim   can w be mapped onto a nonprimitive word by one.
//
// Fresh symbols are named _x, _y, _z (variables) and _a, _b (constants);
// inputs that already use these names are rejected.

#ifndef WORDPOW_REDUCTIONS_HPP_
#define WORDPOW_REDUCTIONS_HPP_

#include <cstddef>
#include <optional>

#include "wordpow/equation.hpp"
#include "wordpow/morphism.hpp"
#include "wordpow/word.hpp"

namespace wordpow {

struct XYWords {
  Word x;  // prod_i prod_j x_i x_j
  Word y;  // prod_i prod_j x_j x_i
};

// Over the given variables (n >= 1). h is nonperiodic iff h(X) != h(Y).
XYWords xy_words(const Alphabet& vars);

// Single balanced equation with the same nonperiodic solutions as s:
//   ( prod u_i (X^N Y^N)^2 v_i , prod v_i (X^N Y^N)^2 u_i ),  N = s.length().
// s must be constant-free, nonempty, with no empty equation side.
Equation balance_system(const EquationSystem& s);

// EqSatCF -> EqSat: adds variables _x,_y,_z, constants _a,_b and the
// equations (X, _x _a _y), (Y, _x _b _z).
EquationSystem eqsatcf_to_eqsat(const EquationSystem& s);

// Pow(n) -> EqSatCF: the equation (w, _x^n) over w.alphabet() + {_x}.
Equation pow_to_equation(const Word& w, std::size_t n);

// EqSatCF -> Pow(n): u v^(n-1) where (u, v) = balance_system(s).
Word eqsatcf_to_pow(const EquationSystem& s, std::size_t n);

// NonPrim -> EqSatCF: {(w, _x^2 _y^3), (_x _y, _y _x)}.
EquationSystem nonprim_to_system(const Word& w);

// EqSatCF -> NonPrim: Z^4 u Z^4 v with Z = X^|uv| Y^|uv| and
// (u, v) = balance_system(s).
Word eqsatcf_to_nonprim(const EquationSystem& s);

// --- witness transport -------------------------------------------------

// Nonperiodic solution h of constant-free s -> solution of
// eqsatcf_to_eqsat(s). The letters at the first difference of h(X), h(Y)
// are renamed to _a and _b. Returns nullopt when h(X) == h(Y), i.e. h is
// periodic.
std::optional<Morphism> lift_to_constant_system(const EquationSystem& s, const Morphism& h);

// Solution of eqsatcf_to_eqsat(s) -> nonperiodic solution of s (restriction
// to the original variables).
Morphism restrict_to_variables(const EquationSystem& s, const Morphism& g);

// h with h(w) = base^n -> solution of (w, _x^n): _x -> base.
Morphism extend_power_witness(const Word& w, const Morphism& h, const Word& base);

// Solution of nonprim_to_system(w) from h with h(w) = base^n, n >= 2:
// n = 2i + 3j with i minimal, then _x -> base^i, _y -> base^j.
Morphism extend_nonprim_witness(const Word& w, const Morphism& h, const Word& base, std::size_t n);

// (i, j) with n = 2i + 3j, i minimal. n >= 2.
std::pair<std::size_t, std::size_t> split_two_three(std::size_t n);

}  // namespace wordpow

#endif  // WORDPOW_REDUCTIONS_HPP_
