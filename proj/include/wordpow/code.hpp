// Unique decodability of finite word sets.

#ifndef WORDPOW_CODE_HPP_
#define WORDPOW_CODE_HPP_

#include <span>
#include <vector>

#include "wordpow/word.hpp"

namespace wordpow {

// Sardinas-Patterson test. The input is treated as a set (duplicates are
// collapsed); a set containing the empty word is never a code.
bool is_uniquely_decodable(std::span<const std::vector<Letter>> words);

}  // namespace wordpow

#endif  // WORDPOW_CODE_HPP_
