#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "thompson/enumeration.hpp"
#include "thompson/error.hpp"

using namespace thompson;

namespace {

// Elements of size <= n grouped by size, from the brute-force enumeration.
std::vector<std::size_t> sizes_up_to(unsigned n) {
  std::vector<std::size_t> sizes;
  for (unsigned s = 0; s <= n; ++s) {
    for (std::size_t i = 0; i < enumerate_reduced(s).size(); ++i) sizes.push_back(s);
  }
  return sizes;
}

// Multisets as non-decreasing index sequences over explicit elements.
void multisets(const std::vector<std::size_t>& sizes, unsigned k, std::size_t start, std::size_t sum,
               std::size_t max, std::vector<std::pair<std::size_t, std::size_t>>& out) {
  if (k == 0) {
    out.push_back({sum, max});
    return;
  }
  for (std::size_t i = start; i < sizes.size(); ++i) {
    multisets(sizes, k - 1, i, sum + sizes[i], std::max(max, sizes[i]), out);
  }
}

}  // namespace

TEST(Catalan, Values) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(10), 16796);
  for (unsigned n = 0; n <= 9; ++n) EXPECT_EQ(catalan(n), testkit::oracle_trees(n).size());
  for (unsigned n = 0; n <= 6; ++n) {
    const auto& trees = all_trees(n);
    ASSERT_EQ(trees.size(), catalan(n));
    for (std::size_t i = 1; i < trees.size(); ++i) ASSERT_LT(trees[i - 1].preorder(), trees[i].preorder());
  }
}

TEST(Forest, ClosedFormAgainstConvolution) {
  EXPECT_EQ(forest_count(3, 2), 9);
  // forest(q, j) as the q-fold convolution of the Catalan sequence.
  for (unsigned q = 1; q <= 6; ++q) {
    std::vector<Count> conv(13);
    conv[0] = 1;
    for (unsigned t = 0; t < q; ++t) {
      std::vector<Count> next(13);
      for (unsigned a = 0; a < 13; ++a)
        for (unsigned b = 0; a + b < 13; ++b) next[a + b] += conv[a] * catalan(b);
      conv = next;
    }
    for (unsigned j = 0; j < 13; ++j) ASSERT_EQ(forest_count(q, j), conv[j]) << q << "," << j;
  }
}

TEST(ReducedCounts, BruteForceOracle) {
  const std::vector<int> expected{1, 0, 2, 14, 108};
  for (unsigned n = 0; n <= 6; ++n) {
    const auto trees = testkit::oracle_trees(n);
    std::size_t count = 0;
    for (const auto& a : trees)
      for (const auto& b : trees) count += testkit::oracle_is_reduced(a, b);
    ASSERT_EQ(r_count(n), count) << n;
    ASSERT_EQ(enumerate_reduced(n).size(), count) << n;
    if (n < expected.size()) ASSERT_EQ(count, static_cast<std::size_t>(expected[n]));
  }
  EXPECT_TRUE(enumerate_reduced(1).empty());
  EXPECT_TRUE(enumerate_reduced(0).front().is_identity());
}

TEST(ReducedCounts, EnumerationIsCanonicalAndDistinct) {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto all = enumerate_reduced(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      ASSERT_EQ(all[i].size(), n);
      if (i) ASSERT_TRUE(CanonicalLess{}(all[i - 1], all[i]));
    }
  }
  const auto two = enumerate_reduced(2);
  const std::set<std::string> got{two[0].serialize(), two[1].serialize()};
  const std::set<std::string> want{generator(0).serialize(), invert(generator(0)).serialize()};
  EXPECT_EQ(got, want);
}

TEST(ReducedCounts, MassIdentity) {
  for (unsigned n = 0; n <= 60; ++n) {
    Count total = 0;
    for (unsigned m = 0; m <= n; ++m) total += r_count(m) * forest_count(m + 1, n - m);
    ASSERT_EQ(total, catalan(n) * catalan(n)) << n;
  }
}

TEST(ReducedCounts, RatioApproachesGrowthConstant) {
  std::vector<Rational> gaps;
  for (unsigned n : {20u, 40u, 60u}) {
    const auto d = distance(Rational(r_count(n - 1), r_count(n)), mu_inverse_power(1));
    gaps.push_back(d.hi);
  }
  EXPECT_LT(gaps.back(), Rational(1, 20));
  EXPECT_LT(distance(Rational(r_count(59), r_count(60)), mu_inverse_power(1)).hi, Rational(1, 20));
  EXPECT_GT(distance(Rational(r_count(19), r_count(20)), mu_inverse_power(1)).lo, gaps[1]);
  EXPECT_GT(distance(Rational(r_count(39), r_count(40)), mu_inverse_power(1)).lo, gaps[2]);
}

TEST(Interval, Sqrt3) {
  const auto s = sqrt3_interval();
  EXPECT_LT(s.width(), Rational(1, 1000000000000LL));
  EXPECT_LE(s.lo * s.lo, Rational(3));
  EXPECT_GE(s.hi * s.hi, Rational(3));
  const auto mu = mu_inverse_power(1);
  EXPECT_NEAR(to_double(mu.lo), 1.0 / (8 + 4 * std::sqrt(3.0)), 1e-15);
}

TEST(Spheres, BruteForce) {
  for (unsigned k = 1; k <= 3; ++k) {
    const unsigned top = k == 3 ? 4 : 5;
    std::vector<std::pair<std::size_t, std::size_t>> all;
    multisets(sizes_up_to(top), k, 0, 0, 0, all);
    for (unsigned n = 0; n <= top; ++n) {
      std::size_t by_max = 0, by_sum = 0;
      for (auto [s, m] : all) {
        by_sum += s == n;
        by_max += m == n;
      }
      ASSERT_EQ(sphere_max_count(k, n), by_max) << k << "," << n;
      ASSERT_EQ(sphere_sum_count(k, n), by_sum) << k << "," << n;
    }
  }
  EXPECT_EQ(sphere_sum_count(2, 2), 2);
  EXPECT_EQ(sphere_max_count(2, 2), 5);
}

TEST(Spheres, OrderedCounts) {
  for (unsigned k = 1; k <= 3; ++k) {
    const auto sizes = sizes_up_to(4);
    for (unsigned n = 0; n <= 4; ++n) {
      Count sum = 0, max = 0, sum_distinct = 0, max_distinct = 0;
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::size_t s = 0, m = 0;
        std::set<std::size_t> uniq(idx.begin(), idx.end());
        for (auto i : idx) {
          s += sizes[i];
          m = std::max(m, sizes[i]);
        }
        const bool distinct = uniq.size() == k;
        if (s == n) {
          sum += 1;
          sum_distinct += distinct;
        }
        if (m == n) {
          max += 1;
          max_distinct += distinct;
        }
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] == sizes.size()) idx[pos++] = 0;
        if (pos == k) break;
      }
      ASSERT_EQ(ordered_sphere_count(k, n, Model::Sum), sum);
      ASSERT_EQ(ordered_sphere_count(k, n, Model::Max), max);
      ASSERT_EQ(distinct_ordered_count(k, n, Model::Sum), sum_distinct);
      ASSERT_EQ(distinct_ordered_count(k, n, Model::Max), max_distinct);
      ASSERT_EQ(composition_weight(k, n), sum);
    }
  }
}

TEST(Spheres, BoundsHold) {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned n = k; n <= 30; ++n) {
      ASSERT_TRUE(sphere_bounds(k, n, Model::Sum).holds) << k << "," << n;
      ASSERT_TRUE(sphere_bounds(k, n, Model::Max).holds) << k << "," << n;
    }
  }
}

TEST(Density, ExamplesAndErrors) {
  EXPECT_EQ(density_S(2, 10, Model::Sum), Rational(sphere_sum_count(2, 2), sphere_sum_count(2, 10)));
  EXPECT_EQ(density_S(2, 6, Model::Max), Rational(Count(1), sphere_max_count(2, 6)));
  EXPECT_THROW(density_S(2, 7, Model::Sum), Error);
  EXPECT_THROW(density_S(1, 10, Model::Sum), Error);
  EXPECT_TRUE(density_envelope(2, 10, Model::Sum).inside);
  for (unsigned n = 10; n <= 30; ++n) {
    const auto env = density_envelope(2, n, Model::Sum);
    const Rational floor(r_count_signed(static_cast<long long>(n) - 9), r_count(n + 1));
    ASSERT_GE(env.value, floor) << n;
  }
}

TEST(Models, Parse) {
  EXPECT_EQ(parse_model("sum"), Model::Sum);
  EXPECT_EQ(parse_model("max"), Model::Max);
  EXPECT_THROW(parse_model("avg"), Error);
  EXPECT_EQ(phi_shift(Model::Max), 6u);
}
