// Deterministic enumeration of morphisms with bounded image lengths.
//
// Order: image-length vectors by nondecreasing total, lexicographically
// within a total (first domain letter most significant); for a fixed length
// vector, the image tuple in lexicographic order (first domain letter most
// significant, letters compared in codomain declaration order).

#ifndef WORDPOW_ENUMERATE_HPP_
#define WORDPOW_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wordpow/morphism.hpp"

namespace wordpow {

// Length vectors of dimension `dim` with each entry <= caps[i] and entry sum
// <= max_total, in the order described above.
class LengthVectorEnumerator {
 public:
  LengthVectorEnumerator(std::vector<std::size_t> caps, std::size_t max_total);

  // Advances to the next vector; false once exhausted. Must be called once
  // before the first lengths().
  bool next();
  std::span<const std::size_t> lengths() const { return lengths_; }
  std::size_t total() const { return total_; }

 private:
  bool first_with_total(std::size_t total);

  std::vector<std::size_t> caps_;
  std::size_t max_total_;
  std::size_t cap_sum_ = 0;
  std::vector<std::size_t> lengths_;
  std::size_t total_ = 0;
  bool started_ = false;
  bool done_ = false;
};

class MorphismEnumerator {
 public:
  // Every image of length <= max_image_len, summed length <= max_total.
  MorphismEnumerator(Alphabet domain, Alphabet codomain, std::size_t max_image_len,
                     std::size_t max_total);

  static MorphismEnumerator per_image(Alphabet domain, Alphabet codomain, std::size_t max_image_len);
  static MorphismEnumerator total(Alphabet domain, Alphabet codomain, std::size_t max_total);

  bool next();
  std::span<const std::vector<Letter>> images() const { return images_; }
  std::span<const std::size_t> lengths() const { return lengths_.lengths(); }
  // Zero-based position of the current morphism in the stream.
  std::uint64_t index() const { return index_; }
  Morphism morphism() const;

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }

 private:
  bool next_images();

  Alphabet domain_;
  Alphabet codomain_;
  LengthVectorEnumerator lengths_;
  std::vector<std::vector<Letter>> images_;
  std::uint64_t index_ = 0;
  bool have_vector_ = false;
  bool started_ = false;
};

// The stream materialized: every morphism with summed image length <=
// max_total_image_len, each exactly once.
std::vector<Morphism> enumerate_morphisms(const Alphabet& domain, const Alphabet& codomain,
                                          std::size_t max_total_image_len);

}  // namespace wordpow

#endif  // WORDPOW_ENUMERATE_HPP_
