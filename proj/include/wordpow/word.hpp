// Alphabets and finite words over them.

#ifndef WORDPOW_WORD_HPP_
#define WORDPOW_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordpow {

// Raised when an operation's precondition on its (mathematical) input is
// violated, e.g. asking for the primitive root of the empty word.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed text (words, morphisms, equation files).
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

using Letter = std::uint32_t;

// An ordered set of distinct named letters. Letter i is the i-th declared
// name; that declaration order is the canonical order used everywhere.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> names);

  // One letter per character, in the given order: from_chars("ab") = {a, b}.
  static Alphabet from_chars(std::string_view chars);
  // Comma separated names: "x1,x2,x3".
  static Alphabet parse(std::string_view list);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& name(Letter l) const { return (*names_)[l]; }
  std::span<const std::string> names() const { return *names_; }

  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;  // throws DomainError
  bool contains(std::string_view name) const { return find(name).has_value(); }

  // Disjoint union, this alphabet's letters first. Name clashes throw.
  Alphabet concat(const Alphabet& other) const;

  // True when every name here also occurs in other.
  bool subset_of(const Alphabet& other) const;

  // "a,b,c"
  std::string str() const;

  bool operator==(const Alphabet& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// A finite sequence of letters of a declared alphabet. Words over different
// alphabets never compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  // Parses juxtaposed letter names. Whitespace separates names explicitly;
  // otherwise the longest declared name is matched greedily.
  static Word parse(std::string_view text, const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::size_t count(Letter l) const;
  // |w|_a for every letter of the alphabet, indexed by letter.
  std::vector<std::size_t> letter_counts() const;
  // Letters that actually occur, in alphabet order.
  std::vector<Letter> used_letters() const;

  Word slice(std::size_t pos, std::size_t len) const;
  Word pow(std::size_t k) const;
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  // Same letters, re-expressed over a larger alphabet (matched by name).
  Word rebased(const Alphabet& target) const;

  // Juxtaposed letter names; "" for the empty word.
  std::string str() const;

  bool operator==(const Word& other) const {
    return letters_ == other.letters_ && alphabet_ == other.alphabet_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

}  // namespace wordpow

#endif  // WORDPOW_WORD_HPP_
