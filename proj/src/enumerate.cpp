#include "wordpow/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace wordpow {

LengthVectorEnumerator::LengthVectorEnumerator(std::vector<std::size_t> caps, std::size_t max_total)
    : caps_(std::move(caps)), max_total_(max_total), lengths_(caps_.size(), 0) {
  cap_sum_ = std::accumulate(caps_.begin(), caps_.end(), std::size_t{0});
  max_total_ = std::min(max_total_, cap_sum_);
}

// Lexicographically smallest vector with the given sum: mass pushed right.
bool LengthVectorEnumerator::first_with_total(std::size_t total) {
  std::size_t remaining = total;
  for (std::size_t i = lengths_.size(); i-- > 0;) {
    lengths_[i] = std::min(caps_[i], remaining);
    remaining -= lengths_[i];
  }
  return remaining == 0;
}

bool LengthVectorEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    total_ = 0;
    first_with_total(0);
    return true;
  }
  // Rightmost position (not last) that can grow while its suffix shrinks.
  if (lengths_.size() >= 2) {
    std::size_t suffix = lengths_.back();
    for (std::size_t i = lengths_.size() - 1; i-- > 0;) {
      if (lengths_[i] < caps_[i] && suffix > 0) {
        ++lengths_[i];
        std::size_t remaining = suffix - 1;
        for (std::size_t j = lengths_.size(); j-- > i + 1;) {
          lengths_[j] = std::min(caps_[j], remaining);
          remaining -= lengths_[j];
        }
        return true;
      }
      suffix += lengths_[i];
    }
  }
  while (total_ < max_total_) {
    ++total_;
    if (first_with_total(total_)) return true;
  }
  done_ = true;
  return false;
}

MorphismEnumerator::MorphismEnumerator(Alphabet domain, Alphabet codomain, std::size_t max_image_len,
                                       std::size_t max_total)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      lengths_(std::vector<std::size_t>(domain_.size(), codomain_.empty() ? 0 : max_image_len),
               max_total),
      images_(domain_.size()) {}

MorphismEnumerator MorphismEnumerator::per_image(Alphabet domain, Alphabet codomain,
                                                 std::size_t max_image_len) {
  const std::size_t total = max_image_len * domain.size();
  return MorphismEnumerator(std::move(domain), std::move(codomain), max_image_len, total);
}

MorphismEnumerator MorphismEnumerator::total(Alphabet domain, Alphabet codomain, std::size_t max_total) {
  return MorphismEnumerator(std::move(domain), std::move(codomain), max_total, max_total);
}

bool MorphismEnumerator::next_images() {
  const Letter top = static_cast<Letter>(codomain_.size() - 1);
  for (std::size_t v = images_.size(); v-- > 0;) {
    auto& img = images_[v];
    for (std::size_t p = img.size(); p-- > 0;) {
      if (img[p] < top) {
        ++img[p];
        return true;
      }
      img[p] = 0;
    }
  }
  return false;
}

bool MorphismEnumerator::next() {
  if (started_) {
    ++index_;
    if (have_vector_ && next_images()) return true;
  }
  started_ = true;
  if (!lengths_.next()) {
    have_vector_ = false;
    return false;
  }
  have_vector_ = true;
  auto ls = lengths_.lengths();
  for (std::size_t v = 0; v < images_.size(); ++v) images_[v].assign(ls[v], 0);
  return true;
}

Morphism MorphismEnumerator::morphism() const {
  return Morphism(domain_, codomain_, std::vector<std::vector<Letter>>(images_.begin(), images_.end()));
}

std::vector<Morphism> enumerate_morphisms(const Alphabet& domain, const Alphabet& codomain,
                                          std::size_t max_total_image_len) {
  std::vector<Morphism> out;
  auto e = MorphismEnumerator::total(domain, codomain, max_total_image_len);
  while (e.next()) out.push_back(e.morphism());
  return out;
}

}  // namespace wordpow
