#include "thompson/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "thompson/error.hpp"

namespace thompson {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

// Memo tables are append-only and guarded by one lock; a recursive lock
// because the tables are filled through each other.
struct Tables {
  std::recursive_mutex lock;
  std::vector<Count> catalan{1};
  std::vector<Count> r;
  std::map<std::pair<unsigned, unsigned>, Count> compositions;
  std::map<std::tuple<unsigned, unsigned, int>, Count> spheres;
  std::map<unsigned, std::vector<BinaryTree>> trees;
};

Tables& tables() {
  static Tables t;
  return t;
}

std::uint32_t sibling_mask(const BinaryTree& t) {
  std::uint32_t mask = 0;
  const auto& w = t.branches();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const std::string& a = w[i].str();
    const std::string& b = w[i + 1].str();
    if (!a.empty() && a.size() == b.size() && a.back() == '0' && b.back() == '1' &&
        a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0) {
      mask |= std::uint32_t{1} << i;
    }
  }
  return mask;
}

void build_preorders(unsigned n, std::vector<std::string>& out) {
  if (n == 0) {
    out.push_back("0");
    return;
  }
  for (unsigned left = 0; left < n; ++left) {
    std::vector<std::string> ls, rs;
    build_preorders(left, ls);
    build_preorders(n - 1 - left, rs);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back("1" + l + r);
  }
}

Count binomial_big(const Count& n, unsigned k) {
  if (n < k) return 0;
  Count result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

// DP over size classes 0..n for multisets (`repeat`) or sets of k members
// with total size n.
Count sum_model_tuples(unsigned k, unsigned n, bool repeat) {
  std::vector<std::vector<Count>> dp(k + 1, std::vector<Count>(n + 1));
  dp[0][0] = 1;
  for (unsigned s = 0; s <= n; ++s) {
    const Count rs = r_count(s);
    if (rs == 0) continue;
    std::vector<std::vector<Count>> next = dp;
    for (unsigned used = 0; used <= k; ++used) {
      for (unsigned total = 0; total <= n; ++total) {
        if (dp[used][total] == 0) continue;
        for (unsigned c = 1; used + c <= k && total + c * s <= n; ++c) {
          Count ways = repeat ? multiset_count(rs, c) : binomial_big(rs, c);
          if (ways == 0) break;
          next[used + c][total + c * s] += dp[used][total] * ways;
        }
      }
    }
    dp = std::move(next);
  }
  return dp[k][n];
}

Count power(const Count& base, unsigned e) {
  Count result = 1;
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace

const char* to_string(Model model) noexcept { return model == Model::Sum ? "sum" : "max"; }

Model parse_model(const std::string& name) {
  if (name == "sum") return Model::Sum;
  if (name == "max") return Model::Max;
  throw Error(ErrorCode::InvalidArgument, "model must be 'sum' or 'max', got '" + name + "'");
}

Count binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (unsigned long i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

Count multiset_count(const Count& classes, unsigned k) {
  if (k == 0) return 1;
  return binomial_big(classes + k - 1, k);
}

Count factorial(unsigned n) {
  Count f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Count catalan(unsigned n) {
  auto& t = tables();
  std::lock_guard guard(t.lock);
  while (t.catalan.size() <= n) {
    const std::size_t m = t.catalan.size();
    Count c = 0;
    for (std::size_t i = 0; i < m; ++i) c += t.catalan[i] * t.catalan[m - 1 - i];
    t.catalan.push_back(c);
  }
  return t.catalan[n];
}

Count forest_count(unsigned q, unsigned j) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "a forest needs at least one tree");
  if (j == 0) return 1;
  return Count(q) * binomial(2UL * j + q, j) / (2UL * j + q);
}

Count r_count(unsigned n) {
  auto& t = tables();
  std::lock_guard guard(t.lock);
  while (t.r.size() <= n) {
    const auto m = static_cast<unsigned>(t.r.size());
    Count c = catalan(m);
    Count value = c * c;
    for (unsigned s = 0; s < m; ++s) value -= t.r[s] * forest_count(s + 1, m - s);
    t.r.push_back(value);
  }
  return t.r[n];
}

Count r_count_signed(long long n) { return n < 0 ? Count(0) : r_count(static_cast<unsigned>(n)); }

Count r_cumulative(long long n) {
  Count total = 0;
  for (long long s = 0; s <= n; ++s) total += r_count(static_cast<unsigned>(s));
  return total;
}

const std::vector<BinaryTree>& all_trees(unsigned n) {
  auto& t = tables();
  std::lock_guard guard(t.lock);
  auto it = t.trees.find(n);
  if (it == t.trees.end()) {
    if (n > 12) throw Error(ErrorCode::TooLarge, "tree enumeration is capped at 12 carets");
    std::vector<std::string> pre;
    build_preorders(n, pre);
    std::sort(pre.begin(), pre.end());
    std::vector<BinaryTree> trees;
    trees.reserve(pre.size());
    for (const auto& s : pre) trees.push_back(BinaryTree::from_preorder(s));
    it = t.trees.emplace(n, std::move(trees)).first;
  }
  return it->second;
}

void for_each_reduced(unsigned n, const std::function<void(const Element&)>& visit) {
  if (n > 8) throw Error(ErrorCode::TooLarge, "brute-force enumeration is capped at n = 8");
  const auto& trees = all_trees(n);
  std::vector<std::uint32_t> masks;
  masks.reserve(trees.size());
  for (const auto& tr : trees) masks.push_back(sibling_mask(tr));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = 0; j < trees.size(); ++j) {
      if (masks[i] & masks[j]) continue;
      visit(reduce(TreeDiagram(trees[i], trees[j])));
    }
  }
}

std::vector<Element> enumerate_reduced(unsigned n) {
  std::vector<Element> out;
  for_each_reduced(n, [&](const Element& e) { out.push_back(e); });
  return out;
}

Count sphere_sum_count(unsigned k, unsigned n) {
  auto& t = tables();
  std::lock_guard guard(t.lock);
  auto key = std::make_tuple(k, n, 0);
  if (auto it = t.spheres.find(key); it != t.spheres.end()) return it->second;
  Count value = sum_model_tuples(k, n, true);
  t.spheres.emplace(key, value);
  return value;
}

Count sphere_max_count(unsigned k, unsigned n) {
  const Count hi = multiset_count(r_cumulative(n), k);
  const Count lo = multiset_count(r_cumulative(static_cast<long long>(n) - 1), k);
  return hi - lo;
}

Count sphere_count(unsigned k, unsigned n, Model model) {
  return model == Model::Sum ? sphere_sum_count(k, n) : sphere_max_count(k, n);
}

Count composition_weight(unsigned k, unsigned t) {
  auto& tb = tables();
  std::lock_guard guard(tb.lock);
  auto key = std::make_pair(k, t);
  if (auto it = tb.compositions.find(key); it != tb.compositions.end()) return it->second;
  Count value = 0;
  if (k == 0) {
    value = t == 0 ? 1 : 0;
  } else {
    for (unsigned s = 0; s <= t; ++s) {
      const Count rs = r_count(s);
      if (rs != 0) value += rs * composition_weight(k - 1, t - s);
    }
  }
  tb.compositions.emplace(key, value);
  return value;
}

Count ordered_sphere_count(unsigned k, unsigned n, Model model) {
  if (model == Model::Sum) return composition_weight(k, n);
  return power(r_cumulative(n), k) - power(r_cumulative(static_cast<long long>(n) - 1), k);
}

Count distinct_ordered_count(unsigned k, unsigned n, Model model) {
  if (model == Model::Sum) return factorial(k) * sum_model_tuples(k, n, false);
  const Count sets = binomial_big(r_cumulative(n), k) -
                     binomial_big(r_cumulative(static_cast<long long>(n) - 1), k);
  return factorial(k) * sets;
}

unsigned phi_shift(Model model) noexcept { return model == Model::Sum ? 8 : 6; }

Rational density_S(unsigned k, unsigned n, Model model) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "S is defined for k >= 2");
  const unsigned shift = phi_shift(model);
  if (n < shift) {
    throw Error(ErrorCode::InvalidArgument, "n = " + std::to_string(n) + " is too small for the " +
                                                to_string(model) + " model (need n >= " +
                                                std::to_string(shift) + ")");
  }
  const Count den = sphere_count(k, n, model);
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "sphere of radius " + std::to_string(n) + " is empty");
  return Rational(sphere_count(k, n - shift, model), den);
}

SphereBounds sphere_bounds(unsigned k, unsigned n, Model model) {
  SphereBounds b;
  b.value = sphere_count(k, n, model);
  const long long nn = n, kk = k;
  if (model == Model::Sum) {
    b.lower = Rational(r_count_signed(nn - kk + 1));
    b.upper = Rational(r_count_signed(nn + kk - 1));
  } else {
    const Count rk = power(r_count(n), k);
    b.lower = Rational(rk, factorial(k));
    b.upper = Rational(Count(k) * rk);
  }
  const Rational v(b.value);
  b.holds = b.lower <= v && v <= b.upper;
  return b;
}

DensityEnvelope density_envelope(unsigned k, unsigned n, Model model) {
  DensityEnvelope env;
  env.value = density_S(k, n, model);
  const unsigned shift = phi_shift(model);
  const long long nn = n, kk = k, sh = shift;
  env.applicable = nn - sh >= kk;
  if (model == Model::Sum) {
    const Count lo_den = r_count_signed(nn + kk - 1);
    env.lower = lo_den == 0 ? Rational(0) : Rational(r_count_signed(nn - sh - kk + 1), lo_den);
    const Count up_den = r_count_signed(nn - kk + 1);
    if (up_den != 0) env.upper = Rational(r_count_signed(nn - sh + kk - 1), up_den);
  } else {
    const Count small = power(r_count(n - shift), k);
    const Count big = power(r_count(n), k);
    const Count kf = factorial(k);
    env.lower = big == 0 ? Rational(0) : Rational(small, kf * Count(k) * big);
    if (big != 0) env.upper = Rational(Count(k) * kf * small, big);
  }
  env.inside = env.lower <= env.value && (!env.upper || env.value <= *env.upper);
  return env;
}

Interval sqrt3_interval() {
  // floor(sqrt(3 * 10^60)) / 10^30, accurate to 1e-30.
  const Count scale = boost::multiprecision::pow(Count(10), 30);
  const Count root = boost::multiprecision::sqrt(Count(3) * scale * scale);
  return {Rational(root, scale), Rational(root + 1, scale)};
}

Interval mu_inverse_power(unsigned e) {
  // 1/mu = (2 - sqrt 3) / 4, decreasing in sqrt 3.
  const Interval s = sqrt3_interval();
  Rational lo = (Rational(2) - s.hi) / 4;
  Rational hi = (Rational(2) - s.lo) / 4;
  Rational plo = 1, phi = 1;
  for (unsigned i = 0; i < e; ++i) {
    plo *= lo;
    phi *= hi;
  }
  return {plo, phi};
}

Interval distance(const Rational& q, const Interval& x) {
  if (q >= x.hi) return {q - x.hi, q - x.lo};
  if (q <= x.lo) return {x.lo - q, x.hi - q};
  return {Rational(0), std::max(q - x.lo, x.hi - q)};
}

double to_double(const Rational& q) {
  Float num(boost::multiprecision::numerator(q));
  Float den(boost::multiprecision::denominator(q));
  return static_cast<double>(num / den);
}

std::string to_decimal(const Rational& q, int digits) {
  Float num(boost::multiprecision::numerator(q));
  Float den(boost::multiprecision::denominator(q));
  Float v = num / den;
  if (v == 0) return "0";
  return v.str(digits, std::ios_base::scientific);
}

}  // namespace thompson
