// Bounded-search oracle for word equations.
//
// Candidate solutions are visited in the same order as MorphismEnumerator
// (length vectors by total, then lexicographic images); the first one that
// solves the system and lies in the requested family is returned. Search
// never concludes unsatisfiability: an exhausted search is UnknownAtBound.

#ifndef WORDPOW_SOLVER_HPP_
#define WORDPOW_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wordpow/equation.hpp"
#include "wordpow/morphism.hpp"
#include "wordpow/word.hpp"

namespace wordpow {

enum class SolveStatus { Sat, UnknownAtBound };

std::string_view to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::UnknownAtBound;
  std::optional<Morphism> witness;
  std::size_t bound_used = 0;
  std::uint64_t candidates_examined = 0;
  bool search_capped = false;
  // Power searches only: h(w) = base^exponent with the exponent the
  // primitive-root exponent of h(w).
  std::optional<Word> base;
  std::size_t exponent = 0;

  bool sat() const { return status == SolveStatus::Sat; }
};

struct SolveOptions {
  // Per-variable image length bounds overriding the uniform bound.
  std::map<std::string, std::size_t> variable_bounds;
  // Stop after this many candidate images / morphisms.
  std::optional<std::uint64_t> max_candidates;
};

// Systems with constants need family All and a codomain containing every
// constant (matched by name).
SolveOutcome solve_bounded(const EquationSystem& s, MorphismFamily family, std::size_t max_image_len,
                           const Alphabet& codomain, const SolveOptions& options = {});

// Morphisms on w.alphabet() into {a, b} mapping w onto an n-th power of a
// nonempty word.
SolveOutcome find_power_witness(const Word& w, std::size_t n, MorphismFamily family, std::size_t max_image_len,
                                const SolveOptions& options = {});

// Same, accepting any h(w) that is not primitive.
SolveOutcome find_nonprimitive_witness(const Word& w, MorphismFamily family, std::size_t max_image_len,
                                       const SolveOptions& options = {});

}  // namespace wordpow

#endif  // WORDPOW_SOLVER_HPP_
