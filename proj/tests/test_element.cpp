#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "thompson/action.hpp"
#include "thompson/element.hpp"
#include "thompson/error.hpp"

using namespace thompson;

namespace {

std::vector<std::string> strs(const std::vector<BinaryWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

TEST(Word, RejectsOtherLetters) {
  EXPECT_THROW(BinaryWord("012"), Error);
  EXPECT_EQ(BinaryWord("0110").sibling().str(), "0111");
  EXPECT_TRUE(BinaryWord("01").is_prefix_of(BinaryWord("011")));
  EXPECT_FALSE(BinaryWord("011").is_prefix_of(BinaryWord("01")));
  EXPECT_EQ(display(BinaryWord()), "ε");
}

TEST(Tree, PreorderRoundTrip) {
  auto rng = testkit::seeded(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = testkit::random_diagram(trial % 9, rng);
    EXPECT_EQ(BinaryTree::from_preorder(d.source.preorder()), d.source);
  }
  EXPECT_THROW(BinaryTree::from_preorder("10"), Error);
  EXPECT_THROW(BinaryTree::from_branches({BinaryWord("0"), BinaryWord("10")}), Error);
}

TEST(Generators, BranchTables) {
  const auto x0 = generator(0);
  ASSERT_EQ(x0.branch_pairs().size(), 3u);
  EXPECT_EQ(x0.branch_pairs()[0], (BranchPair{BinaryWord("00"), BinaryWord("0")}));
  EXPECT_EQ(x0.branch_pairs()[1], (BranchPair{BinaryWord("01"), BinaryWord("10")}));
  EXPECT_EQ(x0.branch_pairs()[2], (BranchPair{BinaryWord("1"), BinaryWord("11")}));
  const auto x1 = generator(1);
  ASSERT_EQ(x1.size(), 3u);
  EXPECT_EQ(x1.branch_pairs()[1], (BranchPair{BinaryWord("100"), BinaryWord("10")}));
  for (unsigned i = 0; i < 8; ++i) EXPECT_EQ(generator(i).size(), i + 2);
}

TEST(Reduction, ConfluenceOracle) {
  auto rng = testkit::seeded(2);
  for (int trial = 0; trial < 2000; ++trial) {
    auto d = testkit::random_diagram(trial % 12, rng);
    const auto e = reduce(d);
    auto [src, tgt] = testkit::oracle_reduce(strs(d.source.branches()), strs(d.target.branches()), rng);
    std::vector<std::string> got_src, got_tgt;
    for (const auto& bp : e.branch_pairs()) {
      got_src.push_back(bp.source.str());
      got_tgt.push_back(bp.target.str());
    }
    ASSERT_EQ(got_src, src);
    ASSERT_EQ(got_tgt, tgt);
    EXPECT_EQ(is_reduced(d), testkit::oracle_is_reduced(strs(d.source.branches()), strs(d.target.branches())));
  }
}

TEST(Multiply, AgreesWithPointwiseComposition) {
  auto rng = testkit::seeded(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = testkit::random_element(8, rng);
    const auto b = testkit::random_element(8, rng);
    const auto ab_ = multiply(a, b);
    for (int pt = 0; pt < 10; ++pt) {
      const std::string s = testkit::random_bits(40, rng);
      ASSERT_EQ(testkit::oracle_apply(ab_, s), testkit::oracle_apply(b, testkit::oracle_apply(a, s)));
      ASSERT_EQ(apply_to_word(ab_, BinaryWord(s)).str(), testkit::oracle_apply(ab_, s));
    }
  }
}

TEST(GroupLaws, RandomTriples) {
  auto rng = testkit::seeded(4);
  const Element e;
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testkit::random_element(7, rng);
    const auto b = testkit::random_element(7, rng);
    const auto c = testkit::random_element(7, rng);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_EQ(multiply(a, invert(a)), e);
    EXPECT_EQ(multiply(invert(a), a), e);
    EXPECT_EQ(multiply(a, e), a);
    EXPECT_EQ(invert(invert(a)), a);
    EXPECT_EQ(invert(multiply(a, b)), multiply(invert(b), invert(a)));
    EXPECT_EQ(power(a, 3), multiply(a, multiply(a, a)));
    EXPECT_EQ(power(a, -2), invert(multiply(a, a)));
    EXPECT_EQ(a.size(), invert(a).size());
  }
}

TEST(Presentation, RelatorsAndConjugation) {
  const auto x0 = generator(0), x1 = generator(1);
  const auto u = multiply(x0, invert(x1));
  EXPECT_TRUE(commutator(u, conjugate(x1, x0)).is_identity());
  EXPECT_TRUE(commutator(u, conjugate(x1, power(x0, 2))).is_identity());
  for (unsigned i = 1; i <= 6; ++i) {
    for (unsigned j = 0; j < i; ++j) EXPECT_EQ(conjugate(generator(i), generator(j)), generator(i + 1));
  }
  EXPECT_FALSE(commutator(x0, x1).is_identity());
}

TEST(Serialization, RoundTripAndParse) {
  auto rng = testkit::seeded(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testkit::random_element(10, rng);
    EXPECT_EQ(Element::parse(a.serialize()), a);
  }
  EXPECT_EQ(Element::parse("x0"), generator(0));
  EXPECT_EQ(Element::parse("x0^2 x1^-1"), multiply(power(generator(0), 2), invert(generator(1))));
  EXPECT_EQ(Element::parse("").serialize(), Element().serialize());
  EXPECT_EQ(Element().serialize(), "0,0");
  EXPECT_THROW(Element::parse("x0^"), Error);
  EXPECT_THROW(Element::parse("110,0"), Error);
  // A non-reduced diagram is accepted and reduced.
  EXPECT_TRUE(Element::parse("100,100").is_identity());
}

TEST(GroupWord, TextRoundTrip) {
  const auto w = GroupWord::parse("x0^2 x1 x4^-1");
  ASSERT_EQ(w.letters.size(), 3u);
  EXPECT_EQ(w.letters[2].generator, 4u);
  EXPECT_EQ(w.letters[2].exponent, -1);
  EXPECT_EQ(GroupWord::parse(w.to_string()), w);
  const std::vector<Element> gens{generator(1), generator(0)};
  EXPECT_EQ(evaluate(GroupWord::parse("x1 x0^-1"), gens), multiply(generator(0), invert(generator(1))));
}

TEST(CanonicalOrder, SizeThenText) {
  auto rng = testkit::seeded(6);
  std::vector<Element> v;
  for (int i = 0; i < 200; ++i) v.push_back(testkit::random_element(6, rng));
  std::sort(v.begin(), v.end(), CanonicalLess{});
  for (std::size_t i = 1; i < v.size(); ++i) {
    ASSERT_LE(v[i - 1].size(), v[i].size());
    if (v[i - 1].size() == v[i].size()) ASSERT_LE(v[i - 1].serialize(), v[i].serialize());
  }
}

TEST(Examples, SerializationsAndTables) {
  EXPECT_EQ(generator(0).serialize(), "11000,10100");
  EXPECT_EQ(generator(1).serialize(), "1011000,1010100");
  EXPECT_TRUE(reduce(TreeDiagram(BinaryTree::from_preorder("100"), BinaryTree::from_preorder("100"))).is_identity());
  const auto inv = invert(generator(0));
  ASSERT_EQ(inv.branch_pairs().size(), 3u);
  EXPECT_EQ(inv.branch_pairs()[0], (BranchPair{BinaryWord("0"), BinaryWord("00")}));
  EXPECT_EQ(inv.branch_pairs()[1], (BranchPair{BinaryWord("10"), BinaryWord("01")}));
  EXPECT_EQ(inv.branch_pairs()[2], (BranchPair{BinaryWord("11"), BinaryWord("1")}));
  EXPECT_TRUE(Element::from_branch_pairs({BranchPair{}}).is_identity());
  EXPECT_THROW(Element::from_branch_pairs({{BinaryWord("0"), BinaryWord("1")}, {BinaryWord("1"), BinaryWord("0")}}),
               Error);
  EXPECT_TRUE(from_group_word(GroupWord{}).is_identity());
  EXPECT_EQ(generator(2), from_group_word(GroupWord::parse("x0^-1 x1 x0")));
}

TEST(Reduction, ThreeCaretPairsExhaustive) {
  // Every pair of 3-caret trees; grafting a caret on a common leaf and
  // reducing again gives the same element.
  const auto trees = testkit::oracle_trees(3);
  auto rng = testkit::seeded(7);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      std::vector<BinaryWord> wa, wb;
      for (const auto& s : a) wa.emplace_back(s);
      for (const auto& s : b) wb.emplace_back(s);
      const auto e = reduce(TreeDiagram(BinaryTree::from_branches(wa), BinaryTree::from_branches(wb)));
      EXPECT_EQ(reduce(e.diagram()), e);
      const std::size_t i = rng() % a.size();
      auto ga = a, gb = b;
      ga[i] += "0";
      ga.insert(ga.begin() + static_cast<long>(i) + 1, a[i] + "1");
      gb[i] += "0";
      gb.insert(gb.begin() + static_cast<long>(i) + 1, b[i] + "1");
      std::vector<BinaryWord> xa, xb;
      for (const auto& s : ga) xa.emplace_back(s);
      for (const auto& s : gb) xb.emplace_back(s);
      EXPECT_EQ(reduce(TreeDiagram(BinaryTree::from_branches(xa), BinaryTree::from_branches(xb))), e);
    }
  }
}

TEST(Properties, AssociativitySizeAndBranchRoundTrip) {
  auto rng = testkit::seeded(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = testkit::random_element(10, rng);
    const auto b = testkit::random_element(10, rng);
    const auto c = testkit::random_element(10, rng);
    ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    ASSERT_LE(multiply(a, b).size(), a.size() + b.size());
    ASSERT_EQ(Element::from_branch_pairs(a.branch_pairs()), a);
  }
}
