#pragma once

// Exact counting: Catalan numbers, reduced-diagram counts r_n, sphere sizes
// in the sum and max stratifications of unordered k-tuples, and the exact
// density of the image of Phi inside those spheres.
//
// r_n comes from the unreduction recurrence
//   C_n^2 = sum_{m <= n} r_m * forest(m + 1, n - m),
// since every pair of n-caret trees reduces to exactly one reduced diagram
// of some size m and is recovered by grafting one forest with n - m carets
// onto the m + 1 leaf pairs. enumerate_reduced is the brute-force check.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thompson/element.hpp"

namespace thompson {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Model { Sum, Max };
const char* to_string(Model model) noexcept;
/// "sum" or "max"; throws Error(InvalidArgument) otherwise.
Model parse_model(const std::string& name);

Count binomial(unsigned long n, unsigned long k);
Count multiset_count(const Count& classes, unsigned k);  // C(N + k - 1, k)
Count factorial(unsigned n);

Count catalan(unsigned n);
/// Ordered forests of q full binary trees with j carets in total.
Count forest_count(unsigned q, unsigned j);
/// Number of reduced tree diagrams of size n.
Count r_count(unsigned n);
/// Signed-index convenience: 0 for n < 0.
Count r_count_signed(long long n);
/// R_n = r_0 + ... + r_n (0 for n < 0).
Count r_cumulative(long long n);

/// All full binary trees with n carets, in lexicographic preorder.
const std::vector<BinaryTree>& all_trees(unsigned n);

/// Brute force: every pair of n-caret trees, kept iff reduced. Elements come
/// out in canonical order. n <= 8.
std::vector<Element> enumerate_reduced(unsigned n);
void for_each_reduced(unsigned n, const std::function<void(const Element&)>& visit);

/// Unordered k-tuples with sum (resp. max) of sizes equal to n.
Count sphere_sum_count(unsigned k, unsigned n);
Count sphere_max_count(unsigned k, unsigned n);
Count sphere_count(unsigned k, unsigned n, Model model);

/// Ordered k-sequences in the same sphere, and those with pairwise distinct
/// members.
Count ordered_sphere_count(unsigned k, unsigned n, Model model);
Count distinct_ordered_count(unsigned k, unsigned n, Model model);

/// Number of ordered size compositions: entry t of the k-fold convolution of
/// the r-table, i.e. sum over s_1 + ... + s_k = t of prod r_{s_i}.
Count composition_weight(unsigned k, unsigned t);

/// |S cap Sph(n)| / |Sph(n)| for S = Phi(X_k). Requires k >= 2 and n >= 8
/// (sum) or n >= 6 (max); throws Error(InvalidArgument) otherwise.
Rational density_S(unsigned k, unsigned n, Model model);
unsigned phi_shift(Model model) noexcept;  // 8 or 6

/// Lower/upper bounds on a sphere size; `holds` is evaluated exactly.
struct SphereBounds {
  Count value;
  Rational lower;
  Rational upper;
  bool holds = false;
};
/// r_{n-k+1} <= |Sph_sum| <= r_{n+k-1} and r_n^k / k! <= |Sph_max| <= k r_n^k.
SphereBounds sphere_bounds(unsigned k, unsigned n, Model model);

/// Squeeze for density_S obtained by bounding both spheres. Meaningful when
/// the smaller radius n - shift is still >= k (`applicable`). An upper bound
/// with a zero denominator is reported as nullopt (unbounded).
struct DensityEnvelope {
  Rational value;
  Rational lower;
  std::optional<Rational> upper;
  bool applicable = false;
  bool inside = false;
};
DensityEnvelope density_envelope(unsigned k, unsigned n, Model model);

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// Enclosures of sqrt(3) and mu^{-e} for mu = 8 + 4 sqrt(3), of width far
/// below 1e-12.
Interval sqrt3_interval();
Interval mu_inverse_power(unsigned e);
/// Enclosure of |q - x| over x in the interval.
Interval distance(const Rational& q, const Interval& x);

std::string to_decimal(const Rational& q, int digits = 12);
double to_double(const Rational& q);

}  // namespace thompson
