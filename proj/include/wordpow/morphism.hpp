// Morphisms between free monoids and the families All / Nonperiodic /
// Injective.

#ifndef WORDPOW_MORPHISM_HPP_
#define WORDPOW_MORPHISM_HPP_

#include <atomic>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordpow/word.hpp"

namespace wordpow {

enum class MorphismFamily { All, Nonperiodic, Injective };

std::string_view to_string(MorphismFamily f);
MorphismFamily parse_family(std::string_view name);

namespace seq {

// Raw-image predicates shared by Morphism and the enumeration loops.
bool images_periodic(std::span<const std::vector<Letter>> images);
bool images_injective(std::span<const std::vector<Letter>> images);

// h(w) for raw images, appended to out (which is cleared first).
void apply_images(std::span<const std::vector<Letter>> images, std::span<const Letter> w,
                  std::vector<Letter>& out);

}  // namespace seq

class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<std::vector<Letter>> images);
  Morphism(Alphabet domain, Alphabet codomain, const std::vector<Word>& images);

  static Morphism identity(const Alphabet& alphabet);

  // "a->abb;b->ba;c->". Whitespace is ignored. When domain is omitted it is
  // the left-hand letters in order of appearance; when codomain is omitted it
  // is the sorted set of image characters (or the domain if all images are
  // empty). Every domain letter must be given exactly once.
  static Morphism parse(std::string_view text, const std::optional<Alphabet>& domain = std::nullopt,
                        const std::optional<Alphabet>& codomain = std::nullopt);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  std::span<const std::vector<Letter>> raw_images() const { return images_; }
  Word image(Letter l) const { return Word(codomain_, images_.at(l)); }
  Word image(std::string_view name) const { return image(domain_.letter(name)); }

  // w may be over any alphabet whose used letters are domain letters (by
  // name); throws otherwise.
  Word apply(const Word& w) const;

  bool is_periodic() const;
  bool is_injective() const;

  // Same images with the domain restricted to the named letters.
  Morphism restricted(const Alphabet& sub_domain) const;

  // Codomain letters renamed so that they first occur in declaration order
  // when reading the images domain letter by domain letter.
  Morphism canonical() const;

  std::string str() const;

  bool operator==(const Morphism& other) const {
    return images_ == other.images_ && domain_ == other.domain_ && codomain_ == other.codomain_;
  }

 private:
  struct Classification {
    // -1 unknown, 0 false, 1 true. Racing writers store the same value.
    std::atomic<int> periodic{-1};
    std::atomic<int> injective{-1};
  };

  Alphabet domain_;
  Alphabet codomain_;
  std::vector<std::vector<Letter>> images_;
  std::shared_ptr<Classification> cache_;
};

bool is_periodic(const Morphism& h);
bool is_injective(const Morphism& h);
bool in_family(const Morphism& h, MorphismFamily family);

// (g o h)(a) = g(h(a)). Requires h.codomain() == g.domain().
Morphism compose(const Morphism& g, const Morphism& h);

}  // namespace wordpow

#endif  // WORDPOW_MORPHISM_HPP_
