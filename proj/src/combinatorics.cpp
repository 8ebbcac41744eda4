#include "wordpow/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace wordpow {

namespace seq {

std::size_t longest_border(std::span<const Letter> s, std::vector<std::size_t>& fail) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  fail.assign(n, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  return fail[n - 1];
}

std::size_t longest_border(std::span<const Letter> s) {
  std::vector<std::size_t> scratch;
  return longest_border(s, scratch);
}

std::size_t primitive_root_length(std::span<const Letter> s, std::vector<std::size_t>& scratch) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  const std::size_t period = n - longest_border(s, scratch);
  return n % period == 0 ? period : n;
}

std::size_t primitive_root_length(std::span<const Letter> s) {
  std::vector<std::size_t> scratch;
  return primitive_root_length(s, scratch);
}

std::size_t find(std::span<const Letter> hay, std::span<const Letter> needle, std::size_t from) {
  if (from > hay.size()) return npos;
  auto it = std::search(hay.begin() + static_cast<std::ptrdiff_t>(from), hay.end(), needle.begin(),
                        needle.end());
  if (it == hay.end() && !needle.empty()) return npos;
  return static_cast<std::size_t>(it - hay.begin());
}

bool are_conjugate(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  std::vector<Letter> uu(u.begin(), u.end());
  uu.insert(uu.end(), u.begin(), u.end());
  return find(uu, v) != npos;
}

bool is_internal_factor(std::span<const Letter> u, std::span<const Letter> v) {
  if (v.size() < u.size() + 2) return false;
  return find(v.subspan(1, v.size() - 2), u) != npos;
}

}  // namespace seq

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw DomainError("empty word has no primitive root");
  const std::size_t len = seq::primitive_root_length(w.letters());
  return {w.slice(0, len), w.size() / len};
}

bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  return seq::primitive_root_length(w.letters()) == w.size();
}

bool are_conjugate(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) return false;
  return seq::are_conjugate(u.letters(), v.letters());
}

bool is_internal_factor(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) return false;
  return seq::is_internal_factor(u.letters(), v.letters());
}

std::optional<Word> fine_wilf_root(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw DomainError("Fine-Wilf root needs nonempty words");
  if (!(u.alphabet() == v.alphabet())) return std::nullopt;
  const std::size_t g = std::gcd(u.size(), v.size());
  const std::size_t threshold = u.size() + v.size() - g;
  for (std::size_t i = 0; i < threshold; ++i) {
    if (u[i % u.size()] != v[i % v.size()]) return std::nullopt;
  }
  return u.slice(0, g);
}

}  // namespace wordpow
