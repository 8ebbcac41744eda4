#include "wordpow/code.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wordpow {

namespace {

using Seq = std::vector<Letter>;

bool has_prefix(const Seq& s, const Seq& p) {
  return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}

}  // namespace

bool is_uniquely_decodable(std::span<const std::vector<Letter>> words) {
  std::set<Seq> code(words.begin(), words.end());
  if (code.count(Seq{})) return false;

  // Dangling suffixes: everything reachable from C^-1 C \ {eps} under
  // x -> C^-1 x and x -> x^-1 C. Reaching a code word means some residual
  // quotient is empty, i.e. two factorizations meet.
  std::set<Seq> seen;
  std::deque<Seq> pending;
  auto push = [&](Seq s) {
    if (seen.insert(s).second) pending.push_back(std::move(s));
  };
  for (const auto& u : code) {
    for (const auto& v : code) {
      if (&u != &v && has_prefix(v, u)) push(Seq(v.begin() + static_cast<std::ptrdiff_t>(u.size()), v.end()));
    }
  }
  while (!pending.empty()) {
    Seq x = std::move(pending.front());
    pending.pop_front();
    if (code.count(x)) return false;
    for (const auto& c : code) {
      if (has_prefix(x, c)) {
        push(Seq(x.begin() + static_cast<std::ptrdiff_t>(c.size()), x.end()));
      } else if (has_prefix(c, x)) {
        push(Seq(c.begin() + static_cast<std::ptrdiff_t>(x.size()), c.end()));
      }
    }
  }
  return true;
}

}  // namespace wordpow
