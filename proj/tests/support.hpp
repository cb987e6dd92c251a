#pragma once

// Seeded generators and brute-force oracles shared by the tests. Nothing here
// calls into the reduction or counting code it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thompson/element.hpp"

namespace testkit {

using Rng = std::mt19937_64;

inline Rng seeded(std::uint64_t salt) { return Rng(0x5eed0000ull + salt); }

/// Leaves of a random tree with `carets` carets, grown by splitting a
/// uniformly chosen leaf each time (not uniform over shapes, which is fine
/// for property tests).
inline std::vector<std::string> random_leaves(unsigned carets, Rng& rng) {
  std::vector<std::string> leaves{""};
  for (unsigned c = 0; c < carets; ++c) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    const std::size_t i = pick(rng);
    const std::string w = leaves[i];
    leaves[i] = w + "0";
    leaves.insert(leaves.begin() + static_cast<long>(i) + 1, w + "1");
  }
  return leaves;
}

inline thompson::TreeDiagram random_diagram(unsigned carets, Rng& rng) {
  auto to_tree = [](const std::vector<std::string>& leaves) {
    std::vector<thompson::BinaryWord> words;
    for (const auto& l : leaves) words.emplace_back(l);
    return thompson::BinaryTree::from_branches(words);
  };
  return {to_tree(random_leaves(carets, rng)), to_tree(random_leaves(carets, rng))};
}

/// Random element; its size is at most max_carets.
inline thompson::Element random_element(unsigned max_carets, Rng& rng) {
  std::uniform_int_distribution<unsigned> size(0, max_carets);
  return thompson::reduce(random_diagram(size(rng), rng));
}

inline thompson::Element random_nonidentity(unsigned max_carets, Rng& rng) {
  while (true) {
    auto e = random_element(max_carets, rng);
    if (!e.is_identity()) return e;
  }
}

inline std::string random_bits(std::size_t len, Rng& rng) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(rng() & 1 ? '1' : '0');
  return s;
}

/// Independent reducedness test on raw leaf lists: a common caret is an index
/// i where leaves i, i+1 are siblings w0, w1 in both trees.
inline bool oracle_is_reduced(const std::vector<std::string>& src, const std::vector<std::string>& tgt) {
  auto siblings = [](const std::string& a, const std::string& b) {
    return a.size() == b.size() && !a.empty() && a.back() == '0' && b.back() == '1' &&
           a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
  };
  for (std::size_t i = 0; i + 1 < src.size(); ++i) {
    if (siblings(src[i], src[i + 1]) && siblings(tgt[i], tgt[i + 1])) return false;
  }
  return true;
}

/// Reduction by repeatedly merging a randomly chosen common caret; the
/// result must not depend on the choices.
inline std::pair<std::vector<std::string>, std::vector<std::string>> oracle_reduce(
    std::vector<std::string> src, std::vector<std::string> tgt, Rng& rng) {
  auto siblings = [](const std::string& a, const std::string& b) {
    return a.size() == b.size() && !a.empty() && a.back() == '0' && b.back() == '1' &&
           a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
  };
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < src.size(); ++i) {
      if (siblings(src[i], src[i + 1]) && siblings(tgt[i], tgt[i + 1])) spots.push_back(i);
    }
    if (spots.empty()) return {src, tgt};
    const std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    src[i].pop_back();
    tgt[i].pop_back();
    src.erase(src.begin() + static_cast<long>(i) + 1);
    tgt.erase(tgt.begin() + static_cast<long>(i) + 1);
  }
}

/// All full binary trees with n carets, as leaf lists, by direct recursion.
inline std::vector<std::vector<std::string>> oracle_trees(unsigned n, const std::string& prefix = "") {
  if (n == 0) return {{prefix}};
  std::vector<std::vector<std::string>> out;
  for (unsigned left = 0; left < n; ++left) {
    for (const auto& l : oracle_trees(left, prefix + "0")) {
      for (const auto& r : oracle_trees(n - 1 - left, prefix + "1")) {
        auto t = l;
        t.insert(t.end(), r.begin(), r.end());
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

/// Piecewise-linear evaluation on a dyadic point given as a bit string long
/// enough to lie under a leaf: the point .s maps to .v t where s = u t.
inline std::string oracle_apply(const thompson::Element& f, const std::string& s) {
  for (const auto& bp : f.branch_pairs()) {
    const auto& u = bp.source.str();
    if (s.compare(0, u.size(), u) == 0 && s.size() >= u.size()) return bp.target.str() + s.substr(u.size());
  }
  return {};
}

}  // namespace testkit
