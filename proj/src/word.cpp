#include "wordpow/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace wordpow {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Alphabet::Alphabet() : names_(std::make_shared<const std::vector<std::string>>()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("alphabet letter names must be nonempty");
    if (!seen.insert(n).second) throw DomainError("duplicate letter '" + n + "' in alphabet");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

Alphabet Alphabet::parse(std::string_view list) {
  std::vector<std::string> names;
  list = trim(list);
  if (list.empty()) return Alphabet();
  std::size_t start = 0;
  while (true) {
    auto comma = list.find(',', start);
    auto piece = trim(list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
    if (piece.empty()) throw ParseError("empty letter name in alphabet list");
    names.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  const auto& v = *names_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw DomainError("letter '" + std::string(name) + "' is not in alphabet {" + str() + "}");
}

Alphabet Alphabet::concat(const Alphabet& other) const {
  std::vector<std::string> names(names_->begin(), names_->end());
  for (const auto& n : other.names()) {
    if (contains(n)) throw DomainError("symbol '" + n + "' already declared");
    names.push_back(n);
  }
  return Alphabet(std::move(names));
}

bool Alphabet::subset_of(const Alphabet& other) const {
  return std::all_of(names_->begin(), names_->end(),
                     [&](const std::string& n) { return other.contains(n); });
}

std::string Alphabet::str() const {
  std::string out;
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if (i) out += ',';
    out += (*names_)[i];
  }
  return out;
}

bool Alphabet::operator==(const Alphabet& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l >= alphabet_.size()) throw DomainError("letter index out of alphabet range");
  }
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    // Greedy longest match against the declared names.
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      const auto& name = alphabet.name(static_cast<Letter>(l));
      if (name.size() > best_len && text.substr(i, name.size()) == name) {
        best_len = name.size();
        best = static_cast<Letter>(l);
      }
    }
    if (best_len == 0) {
      throw ParseError("cannot read a letter of {" + alphabet.str() + "} at '" +
                       std::string(text.substr(i)) + "'");
    }
    out.push_back(best);
    i += best_len;
  }
  return Word(alphabet, std::move(out));
}

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

std::vector<std::size_t> Word::letter_counts() const {
  std::vector<std::size_t> counts(alphabet_.size(), 0);
  for (Letter l : letters_) ++counts[l];
  return counts;
}

std::vector<Letter> Word::used_letters() const {
  auto counts = letter_counts();
  std::vector<Letter> used;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    if (counts[l] > 0) used.push_back(static_cast<Letter>(l));
  }
  return used;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw DomainError("slice position out of range");
  len = std::min(len, letters_.size() - pos);
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::pow(std::size_t k) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(alphabet_, std::move(out));
}

Word& Word::operator+=(const Word& other) {
  if (!(alphabet_ == other.alphabet_)) {
    throw DomainError("cannot concatenate words over different alphabets");
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::rebased(const Alphabet& target) const {
  std::vector<Letter> map(alphabet_.size());
  for (std::size_t l = 0; l < alphabet_.size(); ++l) {
    auto t = target.find(alphabet_.name(static_cast<Letter>(l)));
    map[l] = t ? *t : static_cast<Letter>(-1);
  }
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    if (map[l] == static_cast<Letter>(-1)) {
      throw DomainError("letter '" + alphabet_.name(l) + "' is not in alphabet {" + target.str() + "}");
    }
    out.push_back(map[l]);
  }
  return Word(target, std::move(out));
}

std::string Word::str() const {
  std::string out;
  for (Letter l : letters_) out += alphabet_.name(l);
  return out;
}

}  // namespace wordpow
