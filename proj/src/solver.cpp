#include "wordpow/solver.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "wordpow/combinatorics.hpp"
#include "wordpow/enumerate.hpp"

namespace wordpow {

std::string_view to_string(SolveStatus s) { return s == SolveStatus::Sat ? "Sat" : "UnknownAtBound"; }

namespace {

bool family_accepts(std::span<const std::vector<Letter>> images, MorphismFamily f) {
  switch (f) {
    case MorphismFamily::All: return true;
    case MorphismFamily::Nonperiodic: return !seq::images_periodic(images);
    case MorphismFamily::Injective: return seq::images_injective(images);
  }
  return false;
}

struct Occurrence {
  std::size_t equation;
  int side;
  std::size_t index;  // position in the side's symbol sequence
};

// Depth-first completion of one length vector. Variables are assigned in
// declaration order and each image runs through its letters
// lexicographically, skipping positions forced by already known letters on
// the other side of an equation.
class LengthVectorSearch {
 public:
  LengthVectorSearch(const EquationSystem& s, const std::vector<Letter>& constant_letters,
                     const std::vector<std::vector<Occurrence>>& occurrences, std::size_t codomain_size,
                     MorphismFamily family, std::uint64_t& examined, std::optional<std::uint64_t> cap)
      : s_(s),
        constant_letters_(constant_letters),
        occurrences_(occurrences),
        codomain_size_(codomain_size),
        family_(family),
        examined_(examined),
        cap_(cap) {}

  // True when a solution was found (images()) ; capped() tells whether the
  // search stopped early.
  bool run(std::span<const std::size_t> lengths) {
    lengths_.assign(lengths.begin(), lengths.end());
    const std::size_t vars = s_.variables().size();
    images_.assign(vars, {});
    offsets_.clear();
    known_.clear();
    for (const auto& e : s_.equations()) {
      std::array<std::vector<std::size_t>, 2> offs;
      std::array<std::vector<int>, 2> known;
      for (int side = 0; side < 2; ++side) {
        const Word& w = side == 0 ? e.lhs : e.rhs;
        std::size_t pos = 0;
        for (Letter sym : w.letters()) {
          offs[side].push_back(pos);
          pos += sym < vars ? lengths_[sym] : 1;
        }
        known[side].assign(pos, -1);
      }
      if (known[0].size() != known[1].size()) return false;
      // Constants are known from the start.
      for (int side = 0; side < 2; ++side) {
        const Word& w = side == 0 ? e.lhs : e.rhs;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] >= vars) known[side][offs[side][i]] = static_cast<int>(constant_letters_[w[i] - vars]);
        }
      }
      for (std::size_t p = 0; p < known[0].size(); ++p) {
        if (known[0][p] >= 0 && known[1][p] >= 0 && known[0][p] != known[1][p]) return false;
      }
      offsets_.push_back(std::move(offs));
      known_.push_back(std::move(known));
    }
    return assign(0);
  }

  bool capped() const { return capped_; }
  const std::vector<std::vector<Letter>>& images() const { return images_; }

 private:
  bool assign(std::size_t v) {
    if (v == images_.size()) return family_accepts(images_, family_);
    const std::size_t len = lengths_[v];
    std::vector<int> forced(len, -1);
    for (const auto& occ : occurrences_[v]) {
      const std::size_t o = offsets_[occ.equation][occ.side][occ.index];
      const auto& opp = known_[occ.equation][1 - occ.side];
      for (std::size_t i = 0; i < len; ++i) {
        const int c = opp[o + i];
        if (c < 0) continue;
        if (forced[i] < 0) {
          forced[i] = c;
        } else if (forced[i] != c) {
          return false;
        }
      }
    }
    std::vector<std::size_t> free;
    auto& img = images_[v];
    img.assign(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (forced[i] >= 0) {
        img[i] = static_cast<Letter>(forced[i]);
      } else {
        free.push_back(i);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> written;  // (equation*2 + side, position)
    while (true) {
      if (cap_ && examined_ >= *cap_) {
        capped_ = true;
        return false;
      }
      ++examined_;
      if (write(v, written) && assign(v + 1)) return true;
      undo(written);
      if (capped_) return false;
      // Next image: odometer over the free positions, last one fastest.
      std::size_t k = free.size();
      while (k > 0) {
        auto& c = img[free[k - 1]];
        if (c + 1 < codomain_size_) {
          ++c;
          break;
        }
        c = 0;
        --k;
      }
      if (k == 0) return false;
    }
  }

  bool write(std::size_t v, std::vector<std::pair<std::size_t, std::size_t>>& written) {
    const auto& img = images_[v];
    bool ok = true;
    for (const auto& occ : occurrences_[v]) {
      const std::size_t o = offsets_[occ.equation][occ.side][occ.index];
      auto& mine = known_[occ.equation][occ.side];
      const auto& opp = known_[occ.equation][1 - occ.side];
      for (std::size_t i = 0; i < img.size(); ++i) {
        mine[o + i] = static_cast<int>(img[i]);
        written.emplace_back(occ.equation * 2 + static_cast<std::size_t>(occ.side), o + i);
        if (opp[o + i] >= 0 && opp[o + i] != static_cast<int>(img[i])) ok = false;
      }
      if (!ok) break;
    }
    return ok;
  }

  void undo(std::vector<std::pair<std::size_t, std::size_t>>& written) {
    for (const auto& [slot, pos] : written) known_[slot / 2][slot % 2][pos] = -1;
    written.clear();
  }

  const EquationSystem& s_;
  const std::vector<Letter>& constant_letters_;
  const std::vector<std::vector<Occurrence>>& occurrences_;
  std::size_t codomain_size_;
  MorphismFamily family_;
  std::uint64_t& examined_;
  std::optional<std::uint64_t> cap_;
  bool capped_ = false;

  std::vector<std::size_t> lengths_;
  std::vector<std::vector<Letter>> images_;
  std::vector<std::array<std::vector<std::size_t>, 2>> offsets_;
  std::vector<std::array<std::vector<int>, 2>> known_;
};

template <typename Accept>
SolveOutcome search_powers(const Word& w, MorphismFamily family, std::size_t max_image_len,
                           const SolveOptions& options, Accept accept) {
  const Alphabet binary = Alphabet::from_chars("ab");
  SolveOutcome out;
  out.bound_used = max_image_len;
  const auto counts = w.letter_counts();
  auto e = MorphismEnumerator::per_image(w.alphabet(), binary, max_image_len);
  std::vector<Letter> image;
  std::vector<std::size_t> scratch;
  while (e.next()) {
    if (options.max_candidates && out.candidates_examined >= *options.max_candidates) {
      out.search_capped = true;
      break;
    }
    ++out.candidates_examined;
    const auto images = e.images();
    std::size_t len = 0;
    for (std::size_t l = 0; l < counts.size(); ++l) len += counts[l] * images[l].size();
    if (len == 0 || !accept(len, len)) continue;
    // The periodicity test is far cheaper than materializing h(w).
    if (family == MorphismFamily::Nonperiodic && seq::images_periodic(images)) continue;
    seq::apply_images(images, w.letters(), image);
    const std::size_t root_len = seq::primitive_root_length(image, scratch);
    const std::size_t exponent = len / root_len;
    if (!accept(exponent, len)) continue;
    if (family == MorphismFamily::Injective && !seq::images_injective(images)) continue;
    out.status = SolveStatus::Sat;
    out.witness = e.morphism();
    out.exponent = exponent;
    out.base = Word(binary, std::vector<Letter>(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(root_len)));
    return out;
  }
  return out;
}

}  // namespace

SolveOutcome solve_bounded(const EquationSystem& s, MorphismFamily family, std::size_t max_image_len,
                           const Alphabet& codomain, const SolveOptions& options) {
  if (!s.constant_free() && family != MorphismFamily::All) {
    throw DomainError("systems with constants are solved over the family of all morphisms");
  }
  if (codomain.empty()) throw DomainError("solver needs a nonempty codomain");
  std::vector<Letter> constant_letters;
  for (const auto& name : s.constants().names()) {
    auto l = codomain.find(name);
    if (!l) throw DomainError("constant '" + name + "' is not a codomain letter");
    constant_letters.push_back(*l);
  }

  const std::size_t vars = s.variables().size();
  std::vector<std::size_t> caps(vars, max_image_len);
  for (const auto& [name, bound] : options.variable_bounds) caps[s.variables().letter(name)] = bound;

  // Length constraint per equation: sum coef[v] * len[v] + const_diff == 0.
  std::vector<std::vector<long long>> coef;
  std::vector<long long> const_diff;
  std::vector<std::vector<Occurrence>> occurrences(vars);
  for (std::size_t e = 0; e < s.equations().size(); ++e) {
    const auto& eq = s.equations()[e];
    std::vector<long long> c(vars, 0);
    long long d = 0;
    for (int side = 0; side < 2; ++side) {
      const Word& w = side == 0 ? eq.lhs : eq.rhs;
      const long long sign = side == 0 ? 1 : -1;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < vars) {
          c[w[i]] += sign;
          occurrences[w[i]].push_back({e, side, i});
        } else {
          d += sign;
        }
      }
    }
    coef.push_back(std::move(c));
    const_diff.push_back(d);
  }

  SolveOutcome out;
  out.bound_used = max_image_len;
  LengthVectorSearch search(s, constant_letters, occurrences, codomain.size(), family, out.candidates_examined,
                            options.max_candidates);
  std::size_t total_cap = 0;
  for (auto c : caps) total_cap += c;
  LengthVectorEnumerator lengths(caps, total_cap);
  while (lengths.next()) {
    const auto ls = lengths.lengths();
    bool consistent = true;
    for (std::size_t e = 0; e < coef.size() && consistent; ++e) {
      long long sum = const_diff[e];
      for (std::size_t v = 0; v < vars; ++v) sum += coef[e][v] * static_cast<long long>(ls[v]);
      consistent = sum == 0;
    }
    if (!consistent) continue;
    if (search.run(ls)) {
      out.status = SolveStatus::Sat;
      out.witness = Morphism(s.variables(), codomain, search.images());
      if (!check_solution(s, *out.witness) || !in_family(*out.witness, family)) {
        throw std::logic_error("solver produced an invalid witness");
      }
      return out;
    }
    if (search.capped()) {
      out.search_capped = true;
      break;
    }
  }
  return out;
}

SolveOutcome find_power_witness(const Word& w, std::size_t n, MorphismFamily family, std::size_t max_image_len,
                                const SolveOptions& options) {
  if (n == 0) throw DomainError("exponent must be positive");
  return search_powers(w, family, max_image_len, options,
                       [n](std::size_t exponent, std::size_t) { return exponent % n == 0; });
}

SolveOutcome find_nonprimitive_witness(const Word& w, MorphismFamily family, std::size_t max_image_len,
                                       const SolveOptions& options) {
  // A length-1 image is always primitive; otherwise test the exponent.
  return search_powers(w, family, max_image_len, options,
                       [](std::size_t exponent, std::size_t len) { return len >= 2 && exponent >= 2; });
}

}  // namespace wordpow
