#include "thompson/sampling.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <thread>

#include "thompson/action.hpp"
#include "thompson/constructions.hpp"
#include "thompson/error.hpp"

namespace thompson {

namespace {

constexpr std::uint64_t kTaskSize = 64;

void unrank_into(unsigned n, Count rank, std::string& out) {
  if (n == 0) {
    out.push_back('0');
    return;
  }
  out.push_back('1');
  for (unsigned left = 0; left < n; ++left) {
    const Count right_count = catalan(n - 1 - left);
    const Count block = catalan(left) * right_count;
    if (rank < block) {
      unrank_into(left, rank / right_count, out);
      unrank_into(n - 1 - left, rank % right_count, out);
      return;
    }
    rank -= block;
  }
  throw Error(ErrorCode::InvalidArgument, "tree rank out of range");
}

// Index s drawn with probability weights[s] / sum(weights).
std::size_t draw_weighted(const std::vector<Count>& weights, const Count& total, Rng& rng) {
  Count x = uniform_below(total, rng);
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (x < weights[s]) return s;
    x -= weights[s];
  }
  throw Error(ErrorCode::InvalidArgument, "weights do not sum to the total");
}

std::uint8_t pair_flags(const Element& g) {
  std::uint8_t flags = 0;
  const auto& pairs = closure_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (has_branch_pair(g, pairs[i].source, pairs[i].target)) flags |= std::uint8_t(1u << i);
  }
  return flags;
}

// Flags of g together with g^{-1}: g^{-1} has u -> v iff g has v -> u.
std::uint8_t two_way_flags(const Element& g) {
  std::uint8_t flags = pair_flags(g);
  const auto& pairs = closure_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (has_branch_pair(g, pairs[i].target, pairs[i].source)) flags |= std::uint8_t(1u << i);
  }
  return flags;
}

constexpr std::uint8_t kAllFlags = 0x1f;

// Per-element data reused across the tuples of a census.
struct ElementInfo {
  Element element;
  AbImage image;
  mutable bool ready = false;
  mutable Element inverse;
  mutable std::uint8_t single = 0;  // g, g^-1
  mutable std::uint8_t square = 0;  // g^2, g^-2

  explicit ElementInfo(Element e) : element(std::move(e)), image(ab(element)) {}

  void prepare() const {
    if (ready) return;
    inverse = invert(element);
    single = two_way_flags(element);
    square = two_way_flags(multiply(element, element));
    ready = true;
  }
};

// Same verdict as certify_generates_F for depth <= 2: the ball of radius 2
// consists of 1, g^{+-1}, g^{+-2} and the products g^a h^b, h^b g^a for
// distinct members, the latter being inverses of the former.
VerdictKind fast_verdict(std::span<const ElementInfo* const> members, std::size_t depth) {
  std::vector<AbImage> images;
  images.reserve(members.size());
  for (const auto* m : members) images.push_back(m->image);
  if (!ab_images_generate(images)) return VerdictKind::NotGenerating;
  if (depth == 0) return VerdictKind::Unknown;

  std::vector<const ElementInfo*> distinct;
  for (const auto* m : members) {
    if (std::none_of(distinct.begin(), distinct.end(),
                     [&](const ElementInfo* d) { return d->element == m->element; })) {
      distinct.push_back(m);
    }
  }
  std::uint8_t flags = 0;
  for (const auto* m : distinct) {
    m->prepare();
    flags |= m->single;
  }
  if (flags == kAllFlags) return VerdictKind::Generates;
  if (depth == 1) return VerdictKind::Unknown;
  for (const auto* m : distinct) flags |= m->square;
  if (flags == kAllFlags) return VerdictKind::Generates;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      const ElementInfo& a = *distinct[i];
      const ElementInfo& b = *distinct[j];
      for (const Element* x : std::array<const Element*, 2>{&a.element, &a.inverse}) {
        for (const Element* y : std::array<const Element*, 2>{&b.element, &b.inverse}) {
          flags |= two_way_flags(multiply(*x, *y));
          if (flags == kAllFlags) return VerdictKind::Generates;
        }
      }
    }
  }
  return VerdictKind::Unknown;
}

VerdictKind verdict_of(std::span<const ElementInfo* const> members, std::size_t depth) {
  if (depth <= 2) return fast_verdict(members, depth);
  std::vector<Element> gens;
  for (const auto* m : members) gens.push_back(m->element);
  return certify_generates_F(gens, depth).kind;
}

void add(Tally& t, VerdictKind kind, const Count& weight) {
  t.total += weight;
  switch (kind) {
    case VerdictKind::Generates: t.generates += weight; break;
    case VerdictKind::Unknown: t.unknown += weight; break;
    case VerdictKind::NotGenerating: t.not_generating += weight; break;
  }
}

Count tuples_from_classes(const std::vector<Count>& classes, unsigned k, unsigned n) {
  std::vector<std::vector<Count>> dp(k + 1, std::vector<Count>(n + 1));
  dp[0][0] = 1;
  for (unsigned s = 0; s < classes.size() && s <= n; ++s) {
    if (classes[s] == 0) continue;
    auto next = dp;
    for (unsigned used = 0; used <= k; ++used)
      for (unsigned total = 0; total <= n; ++total) {
        if (dp[used][total] == 0) continue;
        for (unsigned c = 1; used + c <= k && total + c * s <= n; ++c)
          next[used + c][total + c * s] += dp[used][total] * multiset_count(classes[s], c);
      }
    dp = std::move(next);
  }
  return dp[k][n];
}

}  // namespace

Count uniform_below(const Count& bound, Rng& rng) {
  if (bound <= 0) throw Error(ErrorCode::InvalidArgument, "uniform_below needs a positive bound");
  if (bound == 1) return 0;
  const Count top = bound - 1;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(top)) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned spare = words * 64 - bits;
  while (true) {
    Count x = 0;
    for (unsigned w = 0; w < words; ++w) {
      x <<= 64;
      x += rng();
    }
    x >>= spare;
    if (x < bound) return x;
  }
}

SampleStats& SampleStats::operator+=(const SampleStats& o) {
  element_attempts += o.element_attempts;
  element_accepts += o.element_accepts;
  tuple_attempts += o.tuple_attempts;
  tuple_accepts += o.tuple_accepts;
  return *this;
}

BinaryTree unrank_tree(unsigned n, const Count& rank) {
  if (rank < 0 || rank >= catalan(n)) throw Error(ErrorCode::InvalidArgument, "tree rank out of range");
  std::string pre;
  pre.reserve(2 * n + 1);
  unrank_into(n, rank, pre);
  return BinaryTree::from_preorder(pre);
}

BinaryTree sample_tree(unsigned n, Rng& rng) { return unrank_tree(n, uniform_below(catalan(n), rng)); }

Element sample_element(unsigned n, Rng& rng, SampleStats* stats) {
  if (r_count(n) == 0) {
    throw Error(ErrorCode::EmptyClass, "there are no reduced diagrams of size " + std::to_string(n));
  }
  while (true) {
    TreeDiagram d(sample_tree(n, rng), sample_tree(n, rng));
    if (stats) ++stats->element_attempts;
    if (is_reduced(d)) {
      if (stats) ++stats->element_accepts;
      return reduce(d);
    }
  }
}

std::vector<Element> sample_tuple(unsigned k, unsigned n, Model model, Rng& rng, SampleStats* stats) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "tuples need k >= 1");
  if (ordered_sphere_count(k, n, model) == 0) {
    throw Error(ErrorCode::EmptyClass, "the " + std::string(to_string(model)) + " sphere of radius " +
                                           std::to_string(n) + " is empty for k = " + std::to_string(k));
  }
  std::vector<unsigned> sizes;
  if (model == Model::Sum) {
    unsigned remaining = n;
    for (unsigned slot = 0; slot < k; ++slot) {
      const unsigned after = k - slot - 1;
      std::vector<Count> weights(remaining + 1);
      for (unsigned s = 0; s <= remaining; ++s) weights[s] = r_count(s) * composition_weight(after, remaining - s);
      const auto s = static_cast<unsigned>(draw_weighted(weights, composition_weight(k - slot, remaining), rng));
      sizes.push_back(s);
      remaining -= s;
    }
    if (stats) {
      ++stats->tuple_attempts;
      ++stats->tuple_accepts;
    }
  } else {
    std::vector<Count> weights(n + 1);
    for (unsigned s = 0; s <= n; ++s) weights[s] = r_count(s);
    const Count total = r_cumulative(n);
    do {
      sizes.clear();
      for (unsigned slot = 0; slot < k; ++slot) sizes.push_back(static_cast<unsigned>(draw_weighted(weights, total, rng)));
      if (stats) ++stats->tuple_attempts;
    } while (*std::max_element(sizes.begin(), sizes.end()) != n);
    if (stats) ++stats->tuple_accepts;
  }
  std::vector<Element> out;
  out.reserve(k);
  for (unsigned s : sizes) out.push_back(sample_element(s, rng, stats));
  return out;
}

Rng substream(std::uint64_t seed, std::uint64_t task) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(task), static_cast<std::uint32_t>(task >> 32)};
  return Rng(seq);
}

double ExperimentResult::standard_error() const {
  if (config.samples == 0) return 0.0;
  const double p = fraction(generates);
  return std::sqrt(p * (1.0 - p) / double(config.samples));
}

ExperimentResult estimate_generating_fraction(const ExperimentConfig& config) {
  if (config.k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (ordered_sphere_count(config.k, config.n, config.model) == 0) {
    throw Error(ErrorCode::EmptyClass, "the sphere is empty");
  }
  const std::uint64_t tasks = (config.samples + kTaskSize - 1) / kTaskSize;
  std::vector<ExperimentResult> partial(tasks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t t = next++; t < tasks; t = next++) {
      ExperimentResult& r = partial[t];
      Rng rng = substream(config.seed, t);
      const std::uint64_t begin = t * kTaskSize;
      const std::uint64_t end = std::min(config.samples, begin + kTaskSize);
      for (std::uint64_t i = begin; i < end; ++i) {
        auto tuple = sample_tuple(config.k, config.n, config.model, rng, &r.stats);
        std::vector<ElementInfo> infos;
        infos.reserve(tuple.size());
        for (const auto& e : tuple) infos.emplace_back(e);
        std::vector<const ElementInfo*> ptrs;
        for (const auto& info : infos) ptrs.push_back(&info);
        switch (verdict_of(ptrs, config.depth)) {
          case VerdictKind::Generates: ++r.generates; break;
          case VerdictKind::Unknown: ++r.unknown; break;
          case VerdictKind::NotGenerating: ++r.not_generating; break;
        }
        if (config.k >= 2) {
          try {
            is_in_S(KTuple(std::move(tuple)));
            ++r.s_hits;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NotInImage) throw;
          }
        }
      }
    }
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ExperimentResult result;
  result.config = config;
  for (const auto& r : partial) {
    result.generates += r.generates;
    result.unknown += r.unknown;
    result.not_generating += r.not_generating;
    result.s_hits += r.s_hits;
    result.stats += r.stats;
  }
  return result;
}

VerdictKind VerdictOracle::operator()(std::span<const Element> gens) const {
  std::vector<ElementInfo> infos;
  infos.reserve(gens.size());
  for (const auto& g : gens) infos.emplace_back(g);
  std::vector<const ElementInfo*> ptrs;
  for (const auto& info : infos) ptrs.push_back(&info);
  return verdict_of(ptrs, depth_);
}

CensusResult exact_generating_census(unsigned k, unsigned n, Model model, std::size_t depth,
                                     const Count& max_tuples) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const Count sphere = sphere_count(k, n, model);
  if (sphere > max_tuples) {
    throw Error(ErrorCode::TooLarge, "sphere has " + sphere.str() + " unordered tuples, above the cap of " +
                                         max_tuples.str());
  }
  if (n > 8) throw Error(ErrorCode::TooLarge, "census needs elements of size up to 8");

  std::vector<std::vector<ElementInfo>> classes(n + 1);
  for (unsigned s = 0; s <= n; ++s) {
    if (s == 1) continue;
    for_each_reduced(s, [&](const Element& e) { classes[s].emplace_back(e); });
  }

  CensusResult result;
  result.k = k;
  result.n = n;
  result.model = model;
  result.depth = depth;

  const Count k_factorial = factorial(k);
  std::vector<const ElementInfo*> chosen;
  chosen.reserve(k);
  // Multisets as non-decreasing (size, index) sequences.
  auto visit = [&](auto&& self, unsigned slot, unsigned min_size, std::size_t min_index, unsigned partial) -> void {
    if (slot == k) {
      const VerdictKind kind = verdict_of(chosen, depth);
      add(result.unordered, kind, 1);
      Count orderings = k_factorial;
      for (std::size_t i = 0; i < k;) {
        std::size_t j = i;
        while (j < k && chosen[j] == chosen[i]) ++j;
        orderings /= factorial(static_cast<unsigned>(j - i));
        i = j;
      }
      add(result.ordered, kind, orderings);
      return;
    }
    const unsigned left = k - slot;
    unsigned lo = min_size, hi = n;
    if (model == Model::Sum) {
      if (left == 1) {
        if (partial > n || n - partial < min_size) return;
        lo = hi = n - partial;
      } else {
        // Remaining members are at least this size each.
        if (partial + left * min_size > n) return;
        hi = (n - partial) / left;
      }
    } else if (left == 1) {
      lo = hi = n;
    }
    for (unsigned s = lo; s <= hi; ++s) {
      const auto& cls = classes[s];
      for (std::size_t i = (s == min_size ? min_index : 0); i < cls.size(); ++i) {
        chosen.push_back(&cls[i]);
        self(self, slot + 1, s, i, partial + s);
        chosen.pop_back();
      }
    }
  };
  visit(visit, 0, 0, 0, 0);
  return result;
}

CyclicCensus cyclic_subgroup_census(const Element& g, unsigned k, unsigned n, Model model) {
  std::vector<Count> classes(n + 1);
  if (g.is_identity()) {
    classes[0] = 1;
  } else {
    // |g^j| >= |j|, so only |j| <= n can have size <= n.
    for (long long j = -static_cast<long long>(n); j <= static_cast<long long>(n); ++j) {
      const std::size_t s = power(g, j).size();
      if (s <= n) classes[s] += 1;
    }
  }
  CyclicCensus c;
  c.total = sphere_count(k, n, model);
  if (model == Model::Sum) {
    c.inside = tuples_from_classes(classes, k, n);
  } else {
    Count upto = 0;
    for (unsigned s = 0; s < n; ++s) upto += classes[s];
    c.inside = multiset_count(upto + classes[n], k) - multiset_count(upto, k);
  }
  return c;
}

Rational ordered_pair_S_density(unsigned n) {
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "need n >= 8");
  return Rational(Count(2) * sphere_sum_count(2, n - 8), ordered_sphere_count(2, n, Model::Sum));
}

}  // namespace thompson
