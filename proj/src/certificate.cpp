#include "thompson/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace thompson {

namespace {

struct Egcd {
  long long g, s, t;
};

Egcd extended_gcd(long long a, long long b) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

long long floor_mod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const std::array<BranchPair, 5>& closure_pairs() {
  static const std::array<BranchPair, 5> pairs{{
      {BinaryWord("00"), BinaryWord("0")},
      {BinaryWord("11"), BinaryWord("1")},
      {BinaryWord("01"), BinaryWord("10")},
      {BinaryWord("01"), BinaryWord("010")},
      {BinaryWord("10"), BinaryWord("011")},
  }};
  return pairs;
}

std::vector<BallEntry> ball_with_words(std::span<const Element> gens, std::size_t depth) {
  std::vector<std::pair<Element, GroupWord::Letter>> letters;
  for (unsigned i = 0; i < gens.size(); ++i) {
    letters.push_back({gens[i], {i, 1}});
    letters.push_back({invert(gens[i]), {i, -1}});
  }

  std::vector<BallEntry> found{{Element::identity(), {}}};
  std::unordered_map<Element, std::size_t> seen{{Element::identity(), 0}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= depth; ++len) {
    const std::size_t layer_end = found.size();
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (const auto& [step, letter] : letters) {
        Element next = multiply(found[idx].element, step);
        if (seen.contains(next)) continue;
        GroupWord word = found[idx].word;
        if (!word.letters.empty() && word.letters.back().generator == letter.generator) {
          word.letters.back().exponent += letter.exponent;
        } else {
          word.letters.push_back(letter);
        }
        seen.emplace(next, found.size());
        found.push_back({std::move(next), std::move(word)});
      }
    }
    layer_begin = layer_end;
    if (layer_begin == found.size()) break;
  }

  std::vector<std::pair<std::size_t, std::string>> keys;
  keys.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) keys.push_back({found[i].element.size(), found[i].element.serialize()});
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  std::vector<BallEntry> sorted;
  sorted.reserve(found.size());
  for (std::size_t i : order) sorted.push_back(std::move(found[i]));
  return sorted;
}

std::vector<Element> ball(std::span<const Element> gens, std::size_t depth) {
  std::vector<Element> out;
  for (auto& e : ball_with_words(gens, depth)) out.push_back(std::move(e.element));
  return out;
}

std::optional<Witnesses> find_closure_witnesses(std::span<const Element> gens, std::size_t depth) {
  const auto entries = ball_with_words(gens, depth);
  Witnesses result;
  for (std::size_t i = 0; i < closure_pairs().size(); ++i) {
    const auto& pair = closure_pairs()[i];
    auto hit = std::find_if(entries.begin(), entries.end(), [&](const BallEntry& e) {
      return has_branch_pair(e.element, pair.source, pair.target);
    });
    if (hit == entries.end()) return std::nullopt;
    result[i] = Witness{pair, hit->word, hit->element};
  }
  return result;
}

Lattice2::Lattice2(std::span<const AbImage> vectors) {
  for (const auto& v : vectors) {
    long long leftover;
    if (v.a == 0 && a_ == 0) {
      leftover = v.b;
    } else {
      auto [g, s, t] = extended_gcd(a_, v.a);
      const long long nb = s * b_ + t * v.b;
      leftover = (a_ / g) * v.b - (v.a / g) * b_;
      a_ = g;
      b_ = nb;
    }
    c_ = std::gcd(c_, leftover);
    if (c_ != 0) b_ = floor_mod(b_, c_);
  }
}

int Lattice2::rank() const noexcept { return (a_ != 0 ? 1 : 0) + (c_ != 0 ? 1 : 0); }

bool Lattice2::contains(AbImage v) const noexcept {
  long long rem = v.b;
  if (a_ == 0) {
    if (v.a != 0) return false;
  } else {
    if (v.a % a_ != 0) return false;
    rem -= (v.a / a_) * b_;
  }
  return c_ == 0 ? rem == 0 : rem % c_ == 0;
}

std::optional<AbImage> Lattice2::outside_vector() const {
  for (AbImage e : {AbImage{1, 0}, AbImage{0, 1}}) {
    if (!contains(e)) return e;
  }
  return std::nullopt;
}

bool ab_images_generate(std::span<const AbImage> images) { return Lattice2(images).is_everything(); }

bool ab_generates(std::span<const Element> gens) {
  std::vector<AbImage> images;
  for (const auto& g : gens) images.push_back(ab(g));
  return ab_images_generate(images);
}

const char* to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Generates: return "Generates";
    case VerdictKind::NotGenerating: return "NotGenerating";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

Verdict certify_generates_F(std::span<const Element> gens, std::size_t depth) {
  Verdict v;
  for (const auto& g : gens) v.ab_images.push_back(ab(g));
  Lattice2 lattice(v.ab_images);
  if (!lattice.is_everything()) {
    v.kind = VerdictKind::NotGenerating;
    auto out = lattice.outside_vector();
    v.reason = "abelianization image has rank " + std::to_string(lattice.rank()) +
               " and determinant gcd " + std::to_string(lattice.determinant_gcd()) + "; (" +
               std::to_string(out->a) + "," + std::to_string(out->b) + ") is not in its span";
    return v;
  }
  v.witnesses = find_closure_witnesses(gens, depth);
  if (v.witnesses) {
    v.kind = VerdictKind::Generates;
    v.reason = "abelianization onto Z^2 and all five closure witnesses found";
  } else {
    v.kind = VerdictKind::Unknown;
    v.reason = "abelianization onto Z^2 but closure witnesses missing at depth " + std::to_string(depth);
  }
  return v;
}

}  // namespace thompson
