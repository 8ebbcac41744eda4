// Explicit morphisms that map words onto high powers.

#ifndef WORDPOW_CONSTRUCTIONS_HPP_
#define WORDPOW_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <string_view>

#include "wordpow/morphism.hpp"
#include "wordpow/word.hpp"

namespace wordpow {

// apply(h, w) == base^exponent.
struct HighPowerWitness {
  Word w;
  Morphism h;
  std::size_t exponent = 0;
  Word base;
};

// For w = u a v with |w|_a = 1: h fixes every other letter and sends
// a -> a (v u a)^(n-1), so h(w) = (uav)^n. h is an endomorphism of
// w.alphabet(). Throws unless w is primitive and a occurs exactly once.
HighPowerWitness construct_unique_letter_morphism(const Word& w, std::string_view letter, std::size_t n);

// Same formula without the primitivity check. The result still satisfies
// h(w) = w^n, but for nonprimitive w the exponent is not the pex exponent.
HighPowerWitness construct_unique_letter_morphism_unchecked(const Word& w, std::string_view letter,
                                                            std::size_t n);

struct LowerBoundInstance {
  Word w;            // over x1..xn, |w| = 2n, every letter twice
  Morphism h;        // into {a, b}, injective
  std::size_t exponent = 0;  // n - 1
  Word base;         // a^(2n-4) b a^(2n-2) b
};

// n even, n >= 4:
//   w = x1^2 x2^2 ... x(n-2)^2 . x(n-1) xn^2 x(n-1)
//   h(xi) = a^(2n-2i-2) b a^(2i) for i <= n-2,  h(x(n-1)) = b,  h(xn) = a^(n-1)
LowerBoundInstance construct_lower_bound_instance(std::size_t n);

// Injective morphism from sigma into a two-letter codomain that maps
// primitive words to primitive words: the identity renaming when
// |sigma| <= 2, otherwise the i-th letter (1-based) goes to a^i b.
Morphism binary_encoding(const Alphabet& sigma, const Alphabet& binary);

}  // namespace wordpow

#endif  // WORDPOW_CONSTRUCTIONS_HPP_
