// Exponent sets of words under morphism families.
//
// pex_H(w): exponents n such that some h in H maps w onto r^n with r
// primitive. gex_H(w): exponents n such that h(w) is some n-th power; it is
// the divisor closure of pex_H(w). Both are observed by bounded search over
// morphisms into a two-letter codomain (the target alphabet does not change
// either set), supplemented by the closed forms that are known exactly.

#ifndef WORDPOW_PEX_HPP_
#define WORDPOW_PEX_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordpow/morphism.hpp"
#include "wordpow/word.hpp"

namespace wordpow {

using ExponentSet = std::set<std::size_t>;

struct PexQuery {
  Word word;  // nonempty
  MorphismFamily family = MorphismFamily::Nonperiodic;
  Alphabet domain;  // sigma; must contain every letter used by word
  std::size_t max_exponent = 1;
  std::size_t max_image_len = 1;
  // Stop after examining this many morphisms (see caveats in the report).
  std::optional<std::uint64_t> max_candidates;
  // Add verified witnesses from the explicit constructions when a closed
  // form applies. Turning this off leaves pure bounded search.
  bool theorem_witnesses = true;

  // Query with sigma = word.alphabet().
  static PexQuery over(const Word& w, MorphismFamily family, std::size_t max_exponent,
                       std::size_t max_image_len);
};

enum class Completeness { ProvenComplete, CompleteUpToBound, Unknown };

std::string_view to_string(Completeness c);

struct PowerWitness {
  Morphism morphism;
  Word base;            // h(w) = base^n
  std::string source;   // "search" or "theorem"
};

struct PexReport {
  ExponentSet observed_pex;   // within [1, max_exponent]
  ExponentSet observed_gex;   // within [1, max_exponent]
  ExponentSet beyond_window;  // pex exponents > max_exponent that were seen
  std::map<std::size_t, PowerWitness> witnesses;      // base primitive
  std::map<std::size_t, PowerWitness> gex_witnesses;  // base arbitrary
  Completeness complete = Completeness::Unknown;
  // The exact pex set within the window, when a closed form applies.
  std::optional<ExponentSet> closed_form;
  std::vector<std::string> caveats;
  std::uint64_t candidates_examined = 0;
  bool search_capped = false;
};

PexReport pex_bounded(const PexQuery& query);

// Nonzero values sum k_i * counts[i] (k_i >= 0) up to max.
ExponentSet semigroup_values(const std::vector<std::size_t>& counts, std::size_t max);

// All positive divisors of members of pex, up to max.
ExponentSet gex_from_pex(const ExponentSet& pex, std::size_t max);

struct ExponentSets {
  ExponentSet pex;
  ExponentSet gex;
};

// For w = r^k with r primitive, from the (truncated) pex of r.
ExponentSets pex_scale_by_primitive_power(const ExponentSet& pex_of_root, std::size_t k, std::size_t max);

// pex over all morphisms: pex_nonperiodic plus the semigroup generated by
// the letter counts of w (w is read over sigma).
ExponentSet pex_all_morphisms_closed_form(const Word& w, const Alphabet& sigma,
                                          const ExponentSet& pex_nonperiodic, std::size_t max);

// Nonperiodic morphisms on a sigma strictly larger than alphabet(w):
// gex is everything; pex is pex_restricted plus the letter-count semigroup.
ExponentSets pex_enlarged_domain_closed_form(const Word& w, const Alphabet& sigma,
                                             const ExponentSet& pex_restricted, std::size_t max);

// Exact pex within [1, max] when one of the closed forms applies, w read
// over its own alphabet as sigma.
std::optional<ExponentSet> closed_form_pex(const Word& w, MorphismFamily family, std::size_t max);

enum class InjKind { Infinite, FiniteBounded };
enum class InjReason { LetterOnceInRoot, UpperBoundTheorem, BinaryExact };

std::string_view to_string(InjKind k);
std::string_view to_string(InjReason r);

struct InjClassification {
  InjKind kind = InjKind::FiniteBounded;
  InjReason reason = InjReason::UpperBoundTheorem;
  std::optional<std::size_t> upper_bound;  // inclusive maximum of pex_I(w)
  std::optional<ExponentSet> known_exact;
};

InjClassification classify_injective(const Word& w);

}  // namespace wordpow

#endif  // WORDPOW_PEX_HPP_
