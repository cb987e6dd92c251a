#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "support.hpp"
#include "thompson/certificate.hpp"
#include "thompson/constructions.hpp"
#include "thompson/error.hpp"
#include "thompson/sampling.hpp"

using namespace thompson;

namespace {

// Every category's count is within 5 binomial standard deviations.
template <class Key>
void expect_uniform(const std::map<Key, std::uint64_t>& counts, std::size_t categories, std::uint64_t draws) {
  ASSERT_EQ(counts.size(), categories);
  const double p = 1.0 / double(categories);
  const double sd = std::sqrt(double(draws) * p * (1 - p));
  for (const auto& [key, c] : counts) ASSERT_LT(std::abs(double(c) - double(draws) * p), 5 * sd);
}

std::vector<std::vector<Element>> brute_multisets(unsigned k, unsigned n, Model model) {
  std::vector<Element> pool;
  for (unsigned s = 0; s <= n; ++s) {
    for (auto& e : enumerate_reduced(s)) pool.push_back(e);
  }
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == k) {
      std::size_t sum = 0, max = 0;
      for (auto i : idx) {
        sum += pool[i].size();
        max = std::max(max, pool[i].size());
      }
      if ((model == Model::Sum ? sum : max) == n) {
        std::vector<Element> t;
        for (auto i : idx) t.push_back(pool[i]);
        out.push_back(t);
      }
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      idx.push_back(i);
      self(self, i);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST(Unrank, BijectionOntoTrees) {
  for (unsigned n = 0; n <= 7; ++n) {
    std::set<std::string> seen;
    for (Count r = 0; r < catalan(n); ++r) seen.insert(unrank_tree(n, r).preorder());
    std::set<std::string> all;
    for (const auto& t : all_trees(n)) all.insert(t.preorder());
    ASSERT_EQ(seen, all);
  }
  EXPECT_THROW(unrank_tree(3, 5), Error);
}

TEST(UniformBelow, LargeBoundsStayInRange) {
  Rng rng(1);
  const Count big = catalan(60) * catalan(60);
  for (int i = 0; i < 200; ++i) {
    const Count x = uniform_below(big, rng);
    ASSERT_GE(x, 0);
    ASSERT_LT(x, big);
  }
  std::map<int, std::uint64_t> counts;
  for (int i = 0; i < 30000; ++i) counts[uniform_below(Count(3), rng).convert_to<int>()]++;
  expect_uniform(counts, 3, 30000);
}

TEST(SampleTree, Uniform) {
  Rng rng(2);
  EXPECT_EQ(sample_tree(0, rng).preorder(), "0");
  std::map<std::string, std::uint64_t> two, five;
  for (int i = 0; i < 10000; ++i) two[sample_tree(2, rng).preorder()]++;
  expect_uniform(two, 2, 10000);
  for (int i = 0; i < 100000; ++i) five[sample_tree(5, rng).preorder()]++;
  expect_uniform(five, 42, 100000);
}

TEST(SampleElement, UniformOnSmallClasses) {
  Rng rng(3);
  EXPECT_TRUE(sample_element(0, rng).is_identity());
  EXPECT_THROW(sample_element(1, rng), Error);
  SampleStats stats;
  std::map<std::string, std::uint64_t> two, three;
  for (int i = 0; i < 10000; ++i) two[sample_element(2, rng).serialize()]++;
  expect_uniform(two, 2, 10000);
  for (int i = 0; i < 100000; ++i) three[sample_element(3, rng, &stats).serialize()]++;
  expect_uniform(three, 14, 100000);
  EXPECT_NEAR(stats.element_acceptance(), 14.0 / 25.0, 0.01);
}

TEST(SampleTuple, CompositionAndOrderedUniformity) {
  Rng rng(4);
  const auto ee = sample_tuple(2, 0, Model::Sum, rng);
  EXPECT_TRUE(ee[0].is_identity() && ee[1].is_identity());
  // (2,2) composition at n = 4: probability r2^2 / (2 r0 r4 + r2^2) = 4/220.
  std::uint64_t hits = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto t = sample_tuple(2, 4, Model::Sum, rng);
    hits += t[0].size() == 2;
  }
  const double p = 4.0 / 220.0;
  EXPECT_LT(std::abs(double(hits) - draws * p), 5 * std::sqrt(draws * p * (1 - p)));

  std::map<std::string, std::uint64_t> ordered;
  for (int i = 0; i < draws; ++i) {
    const auto t = sample_tuple(2, 2, Model::Max, rng);
    ordered[t[0].serialize() + "|" + t[1].serialize()]++;
  }
  expect_uniform(ordered, ordered_sphere_count(2, 2, Model::Max).convert_to<std::size_t>(), draws);
}

TEST(Experiment, DeterministicAcrossThreads) {
  ExperimentConfig cfg;
  cfg.k = 2;
  cfg.n = 8;
  cfg.samples = 500;
  cfg.seed = 99;
  const auto a = estimate_generating_fraction(cfg);
  cfg.threads = 3;
  const auto b = estimate_generating_fraction(cfg);
  EXPECT_EQ(a.generates, b.generates);
  EXPECT_EQ(a.unknown, b.unknown);
  EXPECT_EQ(a.s_hits, b.s_hits);
  EXPECT_EQ(a.stats.element_attempts, b.stats.element_attempts);
  EXPECT_EQ(a.generates + a.unknown + a.not_generating, cfg.samples);

  cfg.n = 0;
  const auto zero = estimate_generating_fraction(cfg);
  EXPECT_EQ(zero.not_generating, cfg.samples);
}

TEST(Experiment, PositiveGenerationAtTen) {
  ExperimentConfig cfg;
  cfg.k = 2;
  cfg.n = 10;
  cfg.samples = 2000;
  cfg.depth = 2;
  cfg.seed = 7;
  EXPECT_GT(estimate_generating_fraction(cfg).generates, 0u);
}

TEST(VerdictOracle, MatchesCertifier) {
  auto rng = testkit::seeded(40);
  for (std::size_t depth = 0; depth <= 2; ++depth) {
    const VerdictOracle oracle(depth);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Element> gens;
      const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
      for (unsigned i = 0; i < k; ++i) gens.push_back(testkit::random_element(6, rng));
      if (trial % 7 == 0) gens.push_back(gens.front());
      if (trial % 11 == 0) gens.push_back(invert(gens.front()));
      ASSERT_EQ(oracle(gens), certify_generates_F(gens, depth).kind) << trial;
    }
  }
  const std::vector<Element> xy{make_x(), make_y()};
  EXPECT_EQ(VerdictOracle(1)(xy), VerdictKind::Generates);
}

TEST(Census, MatchesBruteForce) {
  for (auto [k, n, model] : {std::tuple{2u, 4u, Model::Sum}, std::tuple{2u, 3u, Model::Max},
                             std::tuple{3u, 4u, Model::Sum}, std::tuple{2u, 2u, Model::Max}}) {
    const auto census = exact_generating_census(k, n, model, 2);
    const auto tuples = brute_multisets(k, n, model);
    Count gen = 0, unk = 0, no = 0;
    for (const auto& t : tuples) {
      switch (certify_generates_F(t, 2).kind) {
        case VerdictKind::Generates: gen += 1; break;
        case VerdictKind::Unknown: unk += 1; break;
        case VerdictKind::NotGenerating: no += 1; break;
      }
    }
    ASSERT_EQ(census.unordered.total, tuples.size());
    ASSERT_EQ(census.unordered.total, sphere_count(k, n, model));
    ASSERT_EQ(census.ordered.total, ordered_sphere_count(k, n, model));
    ASSERT_EQ(census.unordered.generates, gen);
    ASSERT_EQ(census.unordered.unknown, unk);
    ASSERT_EQ(census.unordered.not_generating, no);
  }
  const auto small = exact_generating_census(2, 2, Model::Max, 2);
  EXPECT_EQ(small.unordered.total, 5);
  EXPECT_EQ(small.unordered.generates, 0);
  EXPECT_THROW(exact_generating_census(3, 8, Model::Max, 2, Count(1000)), Error);
}

TEST(Census, CyclicSubgroupBruteForce) {
  const Element g = generator(0);
  std::set<std::string> inside;
  for (long long j = -10; j <= 10; ++j) inside.insert(power(g, j).serialize());
  for (auto model : {Model::Sum, Model::Max}) {
    for (unsigned n = 0; n <= 4; ++n) {
      std::size_t count = 0;
      const auto tuples = brute_multisets(2, n, model);
      for (const auto& t : tuples) count += inside.contains(t[0].serialize()) && inside.contains(t[1].serialize());
      const auto c = cyclic_subgroup_census(g, 2, n, model);
      ASSERT_EQ(c.inside, count) << n;
      ASSERT_EQ(c.total, tuples.size());
    }
  }
}

TEST(SHits, OrderedDensityFormula) {
  // S at radius 10 is the Phi image of the radius-2 sum sphere: the pairs
  // {e, x0^{+-1}}. Each image has two members of different sizes, hence two
  // orderings, and is_in_S accepts both.
  Count hits = 0;
  for (const auto& t : brute_multisets(2, 2, Model::Sum)) {
    const auto img = big_phi(KTuple(t));
    ASSERT_EQ(img.sum_size(), 10u);
    ASSERT_NE(img.members()[0].size(), img.members()[1].size());
    ASSERT_EQ(is_in_S(KTuple({img.members()[1], img.members()[0]})), KTuple(t));
    hits += 2;
  }
  EXPECT_EQ(Rational(hits, ordered_sphere_count(2, 10, Model::Sum)), ordered_pair_S_density(10));

  // Empirical S-hit fraction at radius 12 agrees within 3 standard errors.
  ExperimentConfig cfg;
  cfg.k = 2;
  cfg.n = 12;
  cfg.samples = 3000;
  cfg.depth = 0;
  const auto r = estimate_generating_fraction(cfg);
  const double p = to_double(ordered_pair_S_density(12));
  const double se = std::sqrt(std::max(p * (1 - p), 1.0 / double(cfg.samples)) / double(cfg.samples));
  EXPECT_LE(std::abs(r.fraction(r.s_hits) - p), 3 * se);
}
