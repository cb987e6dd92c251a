#pragma once

// Sound but incomplete test of whether a finite set generates F.
//
// H = <gens> equals F iff Cl(H) = F and H[F,F] = F. The second condition is
// decided exactly through the abelianization Z^2. For the first, it is
// enough to find in H an element with each of the pairs of branches
// 00->0, 11->1, 01->10, 01->010, 10->011; those witnesses are searched for in
// the ball of words of bounded length. When no witness set is found the
// answer is Unknown, never a false "no".

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thompson/action.hpp"
#include "thompson/element.hpp"

namespace thompson {

/// The five branch pairs whose presence in H forces Cl(H) = F.
const std::array<BranchPair, 5>& closure_pairs();

struct BallEntry {
  Element element;
  GroupWord word;  // over the input generators; shortest, first in BFS order
};

/// Every element given by a word of length <= depth in gens and their
/// inverses, deduplicated, in canonical order. Always contains the identity.
std::vector<BallEntry> ball_with_words(std::span<const Element> gens, std::size_t depth);
std::vector<Element> ball(std::span<const Element> gens, std::size_t depth);

struct Witness {
  BranchPair pair;
  GroupWord word;
  Element element;
};
using Witnesses = std::array<Witness, 5>;

/// For each closure pair, the canonically smallest ball element having it;
/// nullopt if some pair has no witness at this depth.
std::optional<Witnesses> find_closure_witnesses(std::span<const Element> gens, std::size_t depth);

/// Sublattice of Z^2 spanned by integer vectors, kept in Hermite normal
/// form: rows (a, b) and (0, c) with a, c >= 0.
class Lattice2 {
 public:
  explicit Lattice2(std::span<const AbImage> vectors);

  int rank() const noexcept;
  bool contains(AbImage v) const noexcept;
  bool is_everything() const noexcept { return a_ == 1 && c_ == 1; }
  /// gcd of all 2x2 determinants of the spanning vectors (0 if rank < 2).
  long long determinant_gcd() const noexcept { return a_ * c_; }
  /// A vector outside the lattice, if it is proper.
  std::optional<AbImage> outside_vector() const;

 private:
  long long a_ = 0, b_ = 0, c_ = 0;
};

bool ab_images_generate(std::span<const AbImage> images);
bool ab_generates(std::span<const Element> gens);

enum class VerdictKind { Generates, NotGenerating, Unknown };
const char* to_string(VerdictKind kind) noexcept;

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Witnesses> witnesses;  // set iff Generates
  std::vector<AbImage> ab_images;
  std::string reason;
};

Verdict certify_generates_F(std::span<const Element> gens, std::size_t depth);

}  // namespace thompson
