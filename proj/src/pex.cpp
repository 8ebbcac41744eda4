#include "wordpow/pex.hpp"

#include <algorithm>
#include <stdexcept>

#include "wordpow/combinatorics.hpp"
#include "wordpow/constructions.hpp"
#include "wordpow/enumerate.hpp"

namespace wordpow {

namespace {

ExponentSet multiples(std::size_t k, std::size_t max) {
  ExponentSet out;
  for (std::size_t n = k; n <= max; n += k) out.insert(n);
  return out;
}

ExponentSet truncated(const ExponentSet& s, std::size_t max) {
  return ExponentSet(s.begin(), s.upper_bound(max));
}

ExponentSet united(ExponentSet a, const ExponentSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

bool family_accepts(std::span<const std::vector<Letter>> images, MorphismFamily f) {
  switch (f) {
    case MorphismFamily::All: return true;
    case MorphismFamily::Nonperiodic: return !seq::images_periodic(images);
    case MorphismFamily::Injective: return seq::images_injective(images);
  }
  return false;
}

// First letter over all images is the first codomain letter.
bool canonical_images(std::span<const std::vector<Letter>> images) {
  for (const auto& img : images) {
    if (!img.empty()) return img.front() == 0;
  }
  return true;
}

struct RootShape {
  Word root;
  std::size_t k;
  std::vector<std::size_t> root_counts;
  std::size_t own_letters;    // |alphabet(w)|
  std::size_t root_letters;   // |alphabet(r)|
  std::optional<Letter> unique_letter;  // first letter occurring once in r
};

RootShape shape_of(const Word& w) {
  auto pr = primitive_root(w);
  RootShape s{pr.root, pr.exponent, pr.root.letter_counts(), w.used_letters().size(), 0, std::nullopt};
  for (std::size_t l = 0; l < s.root_counts.size(); ++l) {
    if (s.root_counts[l] > 0) ++s.root_letters;
    if (s.root_counts[l] == 1 && !s.unique_letter) s.unique_letter = static_cast<Letter>(l);
  }
  return s;
}

// Exact pex for nonperiodic or injective morphisms on alphabet(w) itself.
std::optional<ExponentSet> own_alphabet_closed_form(const RootShape& s, MorphismFamily f, std::size_t max) {
  if (f == MorphismFamily::Nonperiodic && s.own_letters == 1) return ExponentSet{};
  if (s.unique_letter) return multiples(s.k, max);
  // Binary primitive words without a unique letter map only to primitive
  // words under injective morphisms; on a binary domain every nonperiodic
  // morphism is injective.
  if (s.root_letters == 2) return truncated(ExponentSet{s.k}, max);
  return std::nullopt;
}

// Choice of k_i with sum k_i * counts[i] == n, smallest letter first.
std::optional<std::vector<std::size_t>> semigroup_representation(const std::vector<std::size_t>& counts,
                                                                 std::size_t n) {
  std::vector<int> via(n + 1, -1);  // generator index used to reach v, -2 for 0
  via[0] = -2;
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] > 0 && counts[i] <= v && via[v - counts[i]] != -1) {
        via[v] = static_cast<int>(i);
        break;
      }
    }
  }
  if (via[n] == -1) return std::nullopt;
  std::vector<std::size_t> ks(counts.size(), 0);
  for (std::size_t v = n; v > 0; v -= counts[static_cast<std::size_t>(via[v])]) {
    ++ks[static_cast<std::size_t>(via[v])];
  }
  return ks;
}

std::optional<Morphism> theorem_witness(const Word& w, const RootShape& s, MorphismFamily f, std::size_t n,
                                        const Alphabet& binary) {
  const Alphabet& sigma = w.alphabet();
  const bool extra_letters = sigma.size() > s.own_letters;
  const bool base_family_nonempty = f != MorphismFamily::Nonperiodic || s.own_letters >= 2;

  if (base_family_nonempty && s.unique_letter && n % s.k == 0) {
    auto hw = construct_unique_letter_morphism(s.root, sigma.name(*s.unique_letter), n / s.k);
    return compose(binary_encoding(sigma, binary), hw.h).canonical();
  }
  if (base_family_nonempty && !s.unique_letter && s.root_letters == 2 && n == s.k) {
    return binary_encoding(sigma, binary).canonical();
  }
  if (f == MorphismFamily::All || (f == MorphismFamily::Nonperiodic && extra_letters)) {
    auto counts = w.letter_counts();
    auto ks = semigroup_representation(counts, n);
    if (!ks) return std::nullopt;
    std::vector<std::vector<Letter>> images(sigma.size());
    for (std::size_t l = 0; l < sigma.size(); ++l) {
      if (counts[l] > 0) {
        images[l].assign((*ks)[l], 0);
      } else if (f == MorphismFamily::Nonperiodic) {
        images[l] = {1};
      }
    }
    return Morphism(sigma, binary, std::move(images));
  }
  return std::nullopt;
}

}  // namespace

PexQuery PexQuery::over(const Word& w, MorphismFamily family, std::size_t max_exponent,
                        std::size_t max_image_len) {
  PexQuery q;
  q.word = w;
  q.family = family;
  q.domain = w.alphabet();
  q.max_exponent = max_exponent;
  q.max_image_len = max_image_len;
  return q;
}

std::string_view to_string(Completeness c) {
  switch (c) {
    case Completeness::ProvenComplete: return "ProvenComplete";
    case Completeness::CompleteUpToBound: return "CompleteUpToBound";
    case Completeness::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(InjKind k) { return k == InjKind::Infinite ? "Infinite" : "FiniteBounded"; }

std::string_view to_string(InjReason r) {
  switch (r) {
    case InjReason::LetterOnceInRoot: return "LetterOnceInRoot";
    case InjReason::UpperBoundTheorem: return "UpperBoundTheorem";
    case InjReason::BinaryExact: return "BinaryExact";
  }
  return "?";
}

ExponentSet semigroup_values(const std::vector<std::size_t>& counts, std::size_t max) {
  std::vector<bool> reach(max + 1, false);
  reach[0] = true;
  ExponentSet out;
  for (std::size_t v = 1; v <= max; ++v) {
    for (std::size_t c : counts) {
      if (c > 0 && c <= v && reach[v - c]) {
        reach[v] = true;
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

ExponentSet gex_from_pex(const ExponentSet& pex, std::size_t max) {
  ExponentSet out;
  for (std::size_t n : pex) {
    for (std::size_t d = 1; d <= std::min(n, max); ++d) {
      if (n % d == 0) out.insert(d);
    }
  }
  return out;
}

ExponentSets pex_scale_by_primitive_power(const ExponentSet& pex_of_root, std::size_t k, std::size_t max) {
  if (k == 0) throw DomainError("power exponent must be positive");
  ExponentSets out;
  for (std::size_t n : pex_of_root) {
    if (n == 0) throw DomainError("exponent sets contain positive integers only");
    if (k * n <= max) out.pex.insert(k * n);
  }
  for (std::size_t n_div : gex_from_pex(pex_of_root, max)) {
    for (std::size_t k_div = 1; k_div <= k; ++k_div) {
      if (k % k_div == 0 && k_div * n_div <= max) out.gex.insert(k_div * n_div);
    }
  }
  return out;
}

ExponentSet pex_all_morphisms_closed_form(const Word& w, const Alphabet& sigma,
                                          const ExponentSet& pex_nonperiodic, std::size_t max) {
  const Word over = w.alphabet() == sigma ? w : w.rebased(sigma);
  return united(truncated(pex_nonperiodic, max), semigroup_values(over.letter_counts(), max));
}

ExponentSets pex_enlarged_domain_closed_form(const Word& w, const Alphabet& sigma,
                                             const ExponentSet& pex_restricted, std::size_t max) {
  const Word over = w.alphabet() == sigma ? w : w.rebased(sigma);
  if (over.used_letters().size() == sigma.size()) {
    throw DomainError("theorem precondition violated: alphabet(w) must be a proper subset of sigma");
  }
  ExponentSets out;
  out.pex = pex_all_morphisms_closed_form(over, sigma, pex_restricted, max);
  for (std::size_t n = 1; n <= max; ++n) out.gex.insert(n);
  return out;
}

std::optional<ExponentSet> closed_form_pex(const Word& w, MorphismFamily family, std::size_t max) {
  if (w.empty()) throw DomainError("exponent sets are defined for nonempty words");
  const RootShape s = shape_of(w);
  const bool extra_letters = w.alphabet().size() > s.own_letters;
  switch (family) {
    case MorphismFamily::Injective:
      return own_alphabet_closed_form(s, MorphismFamily::Injective, max);
    case MorphismFamily::Nonperiodic: {
      auto base = own_alphabet_closed_form(s, MorphismFamily::Nonperiodic, max);
      if (!base || !extra_letters) return base;
      return united(*base, semigroup_values(w.letter_counts(), max));
    }
    case MorphismFamily::All: {
      auto base = own_alphabet_closed_form(s, MorphismFamily::Nonperiodic, max);
      if (!base) return std::nullopt;
      return united(*base, semigroup_values(w.letter_counts(), max));
    }
  }
  return std::nullopt;
}

PexReport pex_bounded(const PexQuery& q) {
  if (q.word.empty()) throw DomainError("pex query needs a nonempty word");
  if (q.max_exponent == 0) throw DomainError("max exponent must be positive");
  if (q.max_image_len == 0) throw DomainError("max image length must be positive");
  const Word w = q.word.alphabet() == q.domain ? q.word : q.word.rebased(q.domain);
  const Alphabet binary = Alphabet::from_chars("ab");
  const std::size_t max = q.max_exponent;
  const auto counts = w.letter_counts();

  PexReport report;
  std::vector<bool> pex_found(max + 1, false), gex_found(max + 1, false);
  std::size_t pex_missing = max;

  auto record = [&](std::size_t e, const Morphism& h, const Word& root, const char* source) {
    if (e <= max && !pex_found[e]) {
      pex_found[e] = true;
      --pex_missing;
      report.observed_pex.insert(e);
      report.witnesses.emplace(e, PowerWitness{h, root, source});
    }
    if (e > max) report.beyond_window.insert(e);
    for (std::size_t d = 1; d <= std::min(e, max); ++d) {
      if (e % d == 0 && !gex_found[d]) {
        gex_found[d] = true;
        report.observed_gex.insert(d);
        report.gex_witnesses.emplace(d, PowerWitness{h, root.pow(e / d), source});
      }
    }
  };

  auto e = MorphismEnumerator::per_image(w.alphabet(), binary, q.max_image_len);
  std::vector<Letter> image;
  std::vector<std::size_t> scratch;
  while (pex_missing > 0 && e.next()) {
    if (q.max_candidates && report.candidates_examined >= *q.max_candidates) {
      report.search_capped = true;
      break;
    }
    ++report.candidates_examined;
    const auto images = e.images();
    if (!canonical_images(images)) continue;
    std::size_t len = 0;
    for (std::size_t l = 0; l < counts.size(); ++l) len += counts[l] * images[l].size();
    if (len == 0) continue;
    bool wanted = false;
    for (std::size_t n = 1; n <= std::min(max, len) && !wanted; ++n) {
      wanted = !pex_found[n] && len % n == 0;
    }
    if (!wanted) continue;

    seq::apply_images(images, w.letters(), image);
    const std::size_t root_len = seq::primitive_root_length(image, scratch);
    const std::size_t exponent = len / root_len;
    bool useful = exponent <= max && !pex_found[exponent];
    for (std::size_t d = 1; d <= std::min(exponent, max) && !useful; ++d) {
      useful = exponent % d == 0 && !gex_found[d];
    }
    if (!useful || !family_accepts(images, q.family)) continue;
    record(exponent, e.morphism(),
           Word(binary, std::vector<Letter>(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(root_len))),
           "search");
  }

  report.closed_form = closed_form_pex(w, q.family, max);
  if (report.closed_form && q.theorem_witnesses) {
    const RootShape s = shape_of(w);
    for (std::size_t n : *report.closed_form) {
      if (pex_found[n]) continue;
      auto h = theorem_witness(w, s, q.family, n, binary);
      if (!h) continue;
      const Word hw = h->apply(w);
      const auto pr = primitive_root(hw);
      if (pr.exponent != n) throw std::logic_error("theorem witness has the wrong exponent");
      record(n, *h, pr.root, "theorem");
    }
    // gex gaps: a multiple of d further out in the closed form.
    const auto wide = closed_form_pex(w, q.family, max * w.size());
    for (std::size_t d = 1; d <= max; ++d) {
      if (gex_found[d]) continue;
      for (std::size_t m : *wide) {
        if (m % d != 0) continue;
        auto h = theorem_witness(w, s, q.family, m, binary);
        if (!h) continue;
        const auto pr = primitive_root(h->apply(w));
        if (pr.exponent != m) throw std::logic_error("theorem witness has the wrong exponent");
        record(m, *h, pr.root, "theorem");
        break;
      }
    }
  }

  if (report.search_capped) {
    report.caveats.push_back("search cap reached after " + std::to_string(report.candidates_examined) +
                             " morphisms");
  }
  if (report.closed_form && report.observed_pex == *report.closed_form) {
    report.complete = Completeness::ProvenComplete;
    report.caveats.push_back("ProvenComplete: closed form applies");
  } else {
    if (report.closed_form &&
        !std::includes(report.closed_form->begin(), report.closed_form->end(), report.observed_pex.begin(),
                       report.observed_pex.end())) {
      report.caveats.push_back("observed exponents outside the closed form");
    }
    report.complete = report.search_capped ? Completeness::Unknown : Completeness::CompleteUpToBound;
    if (!report.search_capped) {
      report.caveats.push_back("CompleteUpToBound L=" + std::to_string(q.max_image_len));
    }
  }
  return report;
}

InjClassification classify_injective(const Word& w) {
  if (w.empty()) throw DomainError("empty word has no primitive root");
  const RootShape s = shape_of(w);
  InjClassification c;
  if (s.unique_letter) {
    c.kind = InjKind::Infinite;
    c.reason = InjReason::LetterOnceInRoot;
    return c;
  }
  c.kind = InjKind::FiniteBounded;
  if (s.root_letters == 2) {
    c.reason = InjReason::BinaryExact;
    c.known_exact = ExponentSet{s.k};
    c.upper_bound = s.k;
  } else {
    c.reason = InjReason::UpperBoundTheorem;
    c.upper_bound = s.k * (s.root.size() - 1);
  }
  return c;
}

}  // namespace wordpow
