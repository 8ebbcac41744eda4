#include "wordpow/constructions.hpp"

#include <string>
#include <vector>

#include "wordpow/combinatorics.hpp"

namespace wordpow {

namespace {

std::vector<Letter> repeat(Letter l, std::size_t k) { return std::vector<Letter>(k, l); }

void append(std::vector<Letter>& out, const std::vector<Letter>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

HighPowerWitness construct_unique_letter_morphism_unchecked(const Word& w, std::string_view letter,
                                                            std::size_t n) {
  if (n == 0) throw DomainError("exponent must be positive");
  const Letter a = w.alphabet().letter(letter);
  if (w.count(a) != 1) {
    throw DomainError("letter '" + std::string(letter) + "' must occur exactly once in " + w.str());
  }
  const auto letters = w.letters();
  std::size_t pos = 0;
  while (letters[pos] != a) ++pos;
  // w = u a v;  vua is the rotation that ends with a.
  std::vector<Letter> vua(letters.begin() + static_cast<std::ptrdiff_t>(pos) + 1, letters.end());
  vua.insert(vua.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos) + 1);

  std::vector<std::vector<Letter>> images;
  for (std::size_t l = 0; l < w.alphabet().size(); ++l) images.push_back({static_cast<Letter>(l)});
  for (std::size_t i = 1; i < n; ++i) append(images[a], vua);

  Morphism h(w.alphabet(), w.alphabet(), std::move(images));
  return {w, h, n, w};
}

HighPowerWitness construct_unique_letter_morphism(const Word& w, std::string_view letter, std::size_t n) {
  if (w.empty() || !is_primitive(w)) {
    throw DomainError("unique-letter construction needs a primitive word, got '" + w.str() + "'");
  }
  return construct_unique_letter_morphism_unchecked(w, letter, n);
}

LowerBoundInstance construct_lower_bound_instance(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("lower-bound instance needs an even n >= 4, got " + std::to_string(n));
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  const Alphabet sigma(std::move(names));
  const Alphabet binary = Alphabet::from_chars("ab");
  const Letter a = 0, b = 1;

  // Letters are 0-based here: x_i is letter i-1.
  std::vector<Letter> w;
  for (std::size_t i = 0; i + 2 < n; ++i) append(w, repeat(static_cast<Letter>(i), 2));
  const auto prev = static_cast<Letter>(n - 2), last = static_cast<Letter>(n - 1);
  append(w, {prev, last, last, prev});

  std::vector<std::vector<Letter>> images(n);
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    auto& img = images[i - 1];
    img = repeat(a, 2 * n - 2 * i - 2);
    img.push_back(b);
    append(img, repeat(a, 2 * i));
  }
  images[n - 2] = {b};
  images[n - 1] = repeat(a, n - 1);

  std::vector<Letter> base = repeat(a, 2 * n - 4);
  base.push_back(b);
  append(base, repeat(a, 2 * n - 2));
  base.push_back(b);

  return {Word(sigma, std::move(w)), Morphism(sigma, binary, std::move(images)), n - 1,
          Word(binary, std::move(base))};
}

Morphism binary_encoding(const Alphabet& sigma, const Alphabet& binary) {
  if (binary.size() != 2) throw DomainError("binary encoding needs a two-letter codomain");
  std::vector<std::vector<Letter>> images;
  if (sigma.size() <= 2) {
    for (std::size_t l = 0; l < sigma.size(); ++l) images.push_back({static_cast<Letter>(l)});
  } else {
    for (std::size_t i = 1; i <= sigma.size(); ++i) {
      auto img = repeat(0, i);
      img.push_back(1);
      images.push_back(std::move(img));
    }
  }
  return Morphism(sigma, binary, std::move(images));
}

}  // namespace wordpow
