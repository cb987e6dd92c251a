#pragma once

// Elements of Thompson's group F as reduced tree diagrams.
//
// An element is stored as its ordered list of branch pairs u_i -> v_i: the
// sources are the leaves of T+ left to right, the targets the leaves of T-.
// Both lists are complete prefix codes, and no two neighbouring pairs
// u0 -> v0, u1 -> v1 can be merged (the diagram has no common caret).
// Composition is left to right: (a * b)(t) = b(a(t)).

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/word.hpp"

namespace thompson {

struct BranchPair {
  BinaryWord source;
  BinaryWord target;

  friend bool operator==(const BranchPair&, const BranchPair&) = default;
};

/// Full binary tree, held as its leaf branches in left-to-right order.
class BinaryTree {
 public:
  BinaryTree() : leaves_{BinaryWord{}} {}

  /// Throws Error(InvalidArgument) unless `leaves` are the left-to-right
  /// branches of a full binary tree.
  static BinaryTree from_branches(std::vector<BinaryWord> leaves);

  /// Preorder encoding: '1' for a caret, '0' for a leaf.
  static BinaryTree from_preorder(std::string_view bits);
  std::string preorder() const;

  const std::vector<BinaryWord>& branches() const noexcept { return leaves_; }
  std::size_t leaves() const noexcept { return leaves_.size(); }
  std::size_t carets() const noexcept { return leaves_.size() - 1; }

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  explicit BinaryTree(std::vector<BinaryWord> leaves) : leaves_(std::move(leaves)) {}
  std::vector<BinaryWord> leaves_;
};

/// Ordered pair (T+, T-) with equal leaf counts; not necessarily reduced.
struct TreeDiagram {
  TreeDiagram(BinaryTree plus, BinaryTree minus);

  BinaryTree source;
  BinaryTree target;
};

class Element {
 public:
  /// The identity: both trees are single leaves.
  Element() : pairs_{BranchPair{}} {}

  static Element identity() { return Element(); }

  /// Builds the diagram with the given pairs and reduces it. Throws
  /// Error(InvalidArgument) if sources or targets are not the ordered
  /// branches of a tree, or the lists are empty.
  static Element from_branch_pairs(std::vector<BranchPair> pairs);

  /// Accepts the canonical "<T+>,<T->" preorder format (reducing if
  /// needed) or group-word syntax such as "x0^2 x1^-1 x4".
  static Element parse(std::string_view text);

  /// Number of carets of the reduced diagram.
  std::size_t size() const noexcept { return pairs_.size() - 1; }
  bool is_identity() const noexcept { return pairs_.size() == 1; }

  const std::vector<BranchPair>& branch_pairs() const noexcept { return pairs_; }
  BinaryTree source_tree() const;
  BinaryTree target_tree() const;
  TreeDiagram diagram() const { return {source_tree(), target_tree()}; }

  std::string serialize() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  friend Element reduce(const TreeDiagram& d);
  friend Element multiply(const Element& a, const Element& b);
  friend Element invert(const Element& a);

  explicit Element(std::vector<BranchPair> pairs) : pairs_(std::move(pairs)) {}
  std::vector<BranchPair> pairs_;
};

Element reduce(const TreeDiagram& d);
Element multiply(const Element& a, const Element& b);
Element invert(const Element& a);
Element power(const Element& a, long long exponent);

/// True iff no adjacent leaf pair is a caret in both trees.
bool is_reduced(const TreeDiagram& d);

/// Canonical total order: by size, then by serialization.
std::strong_ordering canonical_compare(const Element& a, const Element& b);

struct CanonicalLess {
  bool operator()(const Element& a, const Element& b) const {
    return canonical_compare(a, b) < 0;
  }
};

/// Word in indexed generators with integer exponents. Read against the
/// standard generators x_i of F by from_group_word, or against an arbitrary
/// generating list by evaluate.
struct GroupWord {
  struct Letter {
    unsigned generator = 0;
    long long exponent = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
  };
  std::vector<Letter> letters;

  /// Whitespace-separated tokens "x<i>" or "x<i>^<e>"; empty text is the
  /// empty word.
  static GroupWord parse(std::string_view text);
  std::string to_string(std::string_view symbol = "x") const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// x_0, x_1 from their branch tables; x_{i+1} = x_0^{-i} x_1 x_0^{i}.
Element generator(unsigned index);
Element from_group_word(const GroupWord& w);
Element evaluate(const GroupWord& w, std::span<const Element> gens);

/// Conjugation a^b = b^{-1} a b and commutator [a,b] = a^{-1} b^{-1} a b.
Element conjugate(const Element& a, const Element& b);
Element commutator(const Element& a, const Element& b);

}  // namespace thompson

template <>
struct std::hash<thompson::Element> {
  std::size_t operator()(const thompson::Element& e) const noexcept;
};
