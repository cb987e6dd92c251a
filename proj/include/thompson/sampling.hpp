#pragma once

// Exactly uniform random generation of trees, reduced diagrams and sphere
// tuples, Monte Carlo estimates of the generating fraction, and the exact
// census those estimates are checked against.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thompson/certificate.hpp"
#include "thompson/element.hpp"
#include "thompson/enumeration.hpp"

namespace thompson {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound); bound must be positive.
Count uniform_below(const Count& bound, Rng& rng);

/// Tree number `rank` among the catalan(n) trees with n carets, ordered by
/// left subtree size, then left subtree rank, then right subtree rank.
BinaryTree unrank_tree(unsigned n, const Count& rank);
BinaryTree sample_tree(unsigned n, Rng& rng);

struct SampleStats {
  std::uint64_t element_attempts = 0;
  std::uint64_t element_accepts = 0;
  std::uint64_t tuple_attempts = 0;
  std::uint64_t tuple_accepts = 0;

  double element_acceptance() const {
    return element_attempts ? double(element_accepts) / double(element_attempts) : 1.0;
  }
  SampleStats& operator+=(const SampleStats& o);
};

/// Uniform over the r_n reduced diagrams of size n, by rejection from
/// independent uniform tree pairs (acceptance r_n / C_n^2). Throws
/// Error(EmptyClass) for n = 1.
Element sample_element(unsigned n, Rng& rng, SampleStats* stats = nullptr);

/// Uniform over ORDERED k-sequences in the sphere of radius n. Throws
/// Error(EmptyClass) if the sphere is empty.
std::vector<Element> sample_tuple(unsigned k, unsigned n, Model model, Rng& rng,
                                  SampleStats* stats = nullptr);

/// Deterministic per-task generator derived from (seed, task).
Rng substream(std::uint64_t seed, std::uint64_t task);

struct ExperimentConfig {
  unsigned k = 2;
  unsigned n = 10;
  Model model = Model::Sum;
  std::uint64_t samples = 1000;
  std::size_t depth = 2;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::uint64_t generates = 0;
  std::uint64_t unknown = 0;
  std::uint64_t not_generating = 0;
  std::uint64_t s_hits = 0;  // samples whose multiset lies in Phi(X_k)
  SampleStats stats;

  double fraction(std::uint64_t count) const {
    return config.samples ? double(count) / double(config.samples) : 0.0;
  }
  /// Binomial standard error of the generates fraction.
  double standard_error() const;
};

/// Samples are split into fixed tasks, each with its own substream, so the
/// result depends on the seed only and not on the thread count.
ExperimentResult estimate_generating_fraction(const ExperimentConfig& config);

/// Verdict of certify_generates_F, computed with precomputed per-element data
/// where depth <= 2 and by the full certifier otherwise.
class VerdictOracle {
 public:
  explicit VerdictOracle(std::size_t depth) : depth_(depth) {}
  VerdictKind operator()(std::span<const Element> gens) const;

 private:
  std::size_t depth_;
};

struct Tally {
  Count total = 0;
  Count generates = 0;
  Count unknown = 0;
  Count not_generating = 0;

  Rational fraction(const Count& part) const {
    return total == 0 ? Rational(0) : Rational(part, total);
  }
};

struct CensusResult {
  unsigned k = 0;
  unsigned n = 0;
  Model model = Model::Sum;
  std::size_t depth = 0;
  Tally unordered;  // each multiset once
  Tally ordered;    // each multiset weighted by its number of orderings
};

/// Verdict tally over the whole sphere. Throws Error(TooLarge) if the sphere
/// has more than `max_tuples` unordered tuples, or needs elements of size
/// above 8.
CensusResult exact_generating_census(unsigned k, unsigned n, Model model, std::size_t depth,
                                     const Count& max_tuples = Count(100'000'000));

/// Unordered tuples of the sphere whose members all lie in <g>, as a
/// fraction of the sphere. Uses |g^j| >= |j| for g != 1 to bound the powers
/// that can occur.
struct CyclicCensus {
  Count inside = 0;
  Count total = 0;
  Rational fraction() const { return total == 0 ? Rational(0) : Rational(inside, total); }
};
CyclicCensus cyclic_subgroup_census(const Element& g, unsigned k, unsigned n, Model model);

/// Exact fraction of ordered pairs of the sum sphere of radius n lying in
/// Phi(X_2): 2 |Sph_sum(n - 8)| / (ordered sphere size).
Rational ordered_pair_S_density(unsigned n);

}  // namespace thompson
