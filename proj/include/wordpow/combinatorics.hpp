// Primitivity, conjugacy and periodicity on words.
//
// The span overloads work on raw letter sequences and are what the search
// loops call; the Word overloads add alphabet bookkeeping and precondition
// checks.

#ifndef WORDPOW_COMBINATORICS_HPP_
#define WORDPOW_COMBINATORICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wordpow/word.hpp"

namespace wordpow {

namespace seq {

// Length of the longest proper border of s (0 for empty s).
std::size_t longest_border(std::span<const Letter> s);

// Same, reusing a caller-owned failure table to avoid reallocating inside
// hot loops.
std::size_t longest_border(std::span<const Letter> s, std::vector<std::size_t>& scratch);

// Length of the primitive root of a nonempty s: |s| - border(s) when that
// divides |s|, otherwise |s|. Returns 0 for the empty sequence.
std::size_t primitive_root_length(std::span<const Letter> s);
std::size_t primitive_root_length(std::span<const Letter> s, std::vector<std::size_t>& scratch);

// Leftmost occurrence of needle in hay at a position >= from, or npos.
std::size_t find(std::span<const Letter> hay, std::span<const Letter> needle, std::size_t from = 0);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool are_conjugate(std::span<const Letter> u, std::span<const Letter> v);
bool is_internal_factor(std::span<const Letter> u, std::span<const Letter> v);

}  // namespace seq

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

// The unique primitive r with w = r^k, k maximal. Throws on the empty word.
PrimitiveRoot primitive_root(const Word& w);

bool is_primitive(const Word& w);  // false for the empty word

// u = xy and v = yx for some x, y.
bool are_conjugate(const Word& u, const Word& v);

// v = x u y with x and y both nonempty.
bool is_internal_factor(const Word& u, const Word& v);

// If u^omega and v^omega agree on their first |uv| - gcd(|u|,|v|) letters,
// returns the common root of length gcd(|u|,|v|); otherwise nullopt.
// Throws on empty input.
std::optional<Word> fine_wilf_root(const Word& u, const Word& v);

}  // namespace wordpow

#endif  // WORDPOW_COMBINATORICS_HPP_
