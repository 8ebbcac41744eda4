#include "wordpow/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wordpow/code.hpp"
#include "wordpow/combinatorics.hpp"

namespace wordpow {

std::string_view to_string(MorphismFamily f) {
  switch (f) {
    case MorphismFamily::All: return "all";
    case MorphismFamily::Nonperiodic: return "nonperiodic";
    case MorphismFamily::Injective: return "injective";
  }
  return "?";
}

MorphismFamily parse_family(std::string_view name) {
  if (name == "all") return MorphismFamily::All;
  if (name == "nonperiodic") return MorphismFamily::Nonperiodic;
  if (name == "injective") return MorphismFamily::Injective;
  throw ParseError("unknown morphism family '" + std::string(name) +
                   "' (expected all, nonperiodic or injective)");
}

namespace seq {

bool images_periodic(std::span<const std::vector<Letter>> images) {
  const std::vector<Letter>* first = nullptr;
  std::size_t root_len = 0;
  for (const auto& img : images) {
    if (img.empty()) continue;
    if (!first) {
      first = &img;
      root_len = primitive_root_length(img);
      continue;
    }
    if (img.size() % root_len != 0) return false;
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i] != (*first)[i % root_len]) return false;
    }
  }
  return true;
}

bool images_injective(std::span<const std::vector<Letter>> images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].empty()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (images[i] == images[j]) return false;
    }
  }
  return is_uniquely_decodable(images);
}

void apply_images(std::span<const std::vector<Letter>> images, std::span<const Letter> w,
                  std::vector<Letter>& out) {
  out.clear();
  for (Letter l : w) out.insert(out.end(), images[l].begin(), images[l].end());
}

}  // namespace seq

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<std::vector<Letter>> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)),
      cache_(std::make_shared<Classification>()) {
  if (images_.size() != domain_.size()) {
    throw DomainError("morphism needs exactly one image per domain letter");
  }
  for (const auto& img : images_) {
    for (Letter l : img) {
      if (l >= codomain_.size()) throw DomainError("morphism image uses a letter outside the codomain");
    }
  }
}

Morphism::Morphism(Alphabet domain, Alphabet codomain, const std::vector<Word>& images)
    : Morphism(domain, codomain, [&] {
        std::vector<std::vector<Letter>> raw;
        raw.reserve(images.size());
        for (const auto& w : images) {
          const Word rebased = w.alphabet() == codomain ? w : w.rebased(codomain);
          raw.emplace_back(rebased.letters().begin(), rebased.letters().end());
        }
        return raw;
      }()) {}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<std::vector<Letter>> images;
  for (std::size_t l = 0; l < alphabet.size(); ++l) images.push_back({static_cast<Letter>(l)});
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism Morphism::parse(std::string_view text, const std::optional<Alphabet>& domain,
                         const std::optional<Alphabet>& codomain) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::vector<std::pair<std::string, std::string>> rules;
  std::size_t start = 0;
  while (start <= compact.size()) {
    auto semi = compact.find(';', start);
    std::string piece = compact.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!piece.empty()) {
      auto arrow = piece.find("->");
      if (arrow == std::string::npos || arrow == 0) {
        throw ParseError("malformed morphism rule '" + piece + "' (expected letter->image)");
      }
      rules.emplace_back(piece.substr(0, arrow), piece.substr(arrow + 2));
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (rules.empty() && !(domain && domain->empty())) throw ParseError("empty morphism text");

  Alphabet dom = domain ? *domain : [&] {
    std::vector<std::string> names;
    for (const auto& r : rules) names.push_back(r.first);
    return Alphabet(std::move(names));
  }();
  Alphabet cod = codomain ? *codomain : [&] {
    std::set<char> chars;
    for (const auto& r : rules) chars.insert(r.second.begin(), r.second.end());
    if (chars.empty()) return dom;
    return Alphabet::from_chars(std::string(chars.begin(), chars.end()));
  }();

  std::vector<std::optional<std::vector<Letter>>> images(dom.size());
  for (const auto& [lhs, rhs] : rules) {
    auto l = dom.find(lhs);
    if (!l) throw ParseError("morphism rule for '" + lhs + "' which is not a domain letter");
    if (images[*l]) throw ParseError("letter '" + lhs + "' has more than one image");
    Word img = Word::parse(rhs, cod);
    images[*l] = std::vector<Letter>(img.letters().begin(), img.letters().end());
  }
  std::vector<std::vector<Letter>> raw;
  for (std::size_t l = 0; l < dom.size(); ++l) {
    if (!images[l]) throw ParseError("no image given for letter '" + dom.name(static_cast<Letter>(l)) + "'");
    raw.push_back(std::move(*images[l]));
  }
  return Morphism(dom, cod, std::move(raw));
}

Word Morphism::apply(const Word& w) const {
  std::vector<Letter> out;
  if (w.alphabet() == domain_) {
    seq::apply_images(images_, w.letters(), out);
    return Word(codomain_, std::move(out));
  }
  std::vector<Letter> map(w.alphabet().size(), static_cast<Letter>(-1));
  for (Letter l : w.letters()) {
    if (map[l] == static_cast<Letter>(-1)) {
      auto d = domain_.find(w.alphabet().name(l));
      if (!d) throw DomainError("letter '" + w.alphabet().name(l) + "' is outside the morphism domain");
      map[l] = *d;
    }
    const auto& img = images_[map[l]];
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(codomain_, std::move(out));
}

bool Morphism::is_periodic() const {
  int v = cache_->periodic.load(std::memory_order_relaxed);
  if (v < 0) {
    v = seq::images_periodic(images_) ? 1 : 0;
    cache_->periodic.store(v, std::memory_order_relaxed);
  }
  return v == 1;
}

bool Morphism::is_injective() const {
  int v = cache_->injective.load(std::memory_order_relaxed);
  if (v < 0) {
    v = seq::images_injective(images_) ? 1 : 0;
    cache_->injective.store(v, std::memory_order_relaxed);
  }
  return v == 1;
}

Morphism Morphism::restricted(const Alphabet& sub_domain) const {
  std::vector<std::vector<Letter>> raw;
  for (const auto& name : sub_domain.names()) raw.push_back(images_[domain_.letter(name)]);
  return Morphism(sub_domain, codomain_, std::move(raw));
}

Morphism Morphism::canonical() const {
  std::vector<Letter> rename(codomain_.size(), static_cast<Letter>(-1));
  Letter next = 0;
  for (const auto& img : images_) {
    for (Letter l : img) {
      if (rename[l] == static_cast<Letter>(-1)) rename[l] = next++;
    }
  }
  for (auto& r : rename) {
    if (r == static_cast<Letter>(-1)) r = next++;
  }
  std::vector<std::vector<Letter>> raw = images_;
  for (auto& img : raw) {
    for (auto& l : img) l = rename[l];
  }
  return Morphism(domain_, codomain_, std::move(raw));
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t l = 0; l < images_.size(); ++l) {
    if (l) out += ';';
    out += domain_.name(static_cast<Letter>(l));
    out += "->";
    for (Letter c : images_[l]) out += codomain_.name(c);
  }
  return out;
}

bool is_periodic(const Morphism& h) { return h.is_periodic(); }

bool is_injective(const Morphism& h) { return h.is_injective(); }

bool in_family(const Morphism& h, MorphismFamily family) {
  switch (family) {
    case MorphismFamily::All: return true;
    case MorphismFamily::Nonperiodic: return !h.is_periodic();
    case MorphismFamily::Injective: return h.is_injective();
  }
  return false;
}

Morphism compose(const Morphism& g, const Morphism& h) {
  if (!(h.codomain() == g.domain())) {
    throw DomainError("cannot compose: codomain {" + h.codomain().str() + "} is not domain {" +
                      g.domain().str() + "}");
  }
  std::vector<std::vector<Letter>> raw;
  raw.reserve(h.domain().size());
  for (const auto& img : h.raw_images()) {
    std::vector<Letter> out;
    seq::apply_images(g.raw_images(), img, out);
    raw.push_back(std::move(out));
  }
  return Morphism(h.domain(), g.codomain(), std::move(raw));
}

}  // namespace wordpow
