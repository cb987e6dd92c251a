#include "thompson/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "thompson/action.hpp"
#include "thompson/certificate.hpp"
#include "thompson/constructions.hpp"
#include "thompson/enumeration.hpp"
#include "thompson/error.hpp"
#include "thompson/sampling.hpp"

namespace thompson {

namespace {

class Checks {
 public:
  explicit Checks(CriterionResult& r) : r_(r) { r_.passed = true; }

  bool operator()(bool ok, const std::string& what) {
    r_.notes.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok) r_.passed = false;
    return ok;
  }
  void note(const std::string& what) { r_.notes.push_back("     " + what); }

 private:
  CriterionResult& r_;
};

std::vector<BranchPair> table(std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<BranchPair> out;
  for (auto [s, t] : rows) out.push_back({BinaryWord(s), BinaryWord(t)});
  return out;
}

// Uniform size in {lo, ..., hi} minus the empty class 1, then a uniform
// element of that size.
Element random_element(unsigned lo, unsigned hi, Rng& rng) {
  while (true) {
    const unsigned s = lo + static_cast<unsigned>(rng() % (hi - lo + 1));
    if (s != 1) return sample_element(s, rng);
  }
}

std::string dec(const Rational& q) { return to_decimal(q, 6); }

void branch_tables(Checks& check) {
  const auto x_rows = table({{"000", "000"},
                             {"00100", "0010"},
                             {"00101", "00110"},
                             {"0011", "00111"},
                             {"01", "010"},
                             {"10", "011"},
                             {"11", "1"}});
  const auto y_rows = table({{"00", "0"}, {"01", "10"}, {"1", "11"}});
  check(make_x().branch_pairs() == x_rows, "x has the 7-row branch table");
  check(make_y().branch_pairs() == y_rows, "y has the 3-row branch table");
  check(make_x() == from_group_word(GroupWord::parse("x0^2 x1^2 x4^-1 x2^-1 x1^-1 x0^-2")),
        "x equals x0^2 x1^2 x4^-1 x2^-1 x1^-1 x0^-2");
  check(make_y() == generator(0), "y equals x0");
}

void presentation(Checks& check) {
  const auto x0 = generator(0), x1 = generator(1);
  const auto u = multiply(x0, invert(x1));
  check(commutator(u, conjugate(x1, x0)).is_identity(), "[x0 x1^-1, x1^x0] = 1");
  check(commutator(u, conjugate(x1, power(x0, 2))).is_identity(), "[x0 x1^-1, x1^(x0^2)] = 1");
  bool all = true;
  for (unsigned i = 1; i <= 6; ++i)
    for (unsigned j = 0; j < i; ++j) all = all && conjugate(generator(i), generator(j)) == generator(i + 1);
  check(all, "x_i^(x_j) = x_(i+1) for all j < i <= 6");
}

void counting(Checks& check) {
  const std::vector<int> expected{1, 0, 2, 14, 108};
  bool agree = true;
  std::string sizes;
  for (unsigned n = 0; n <= 6; ++n) {
    const auto brute = enumerate_reduced(n).size();
    agree = agree && r_count(n) == brute;
    sizes += (n ? " " : "") + std::to_string(brute);
    if (n < expected.size()) agree = agree && brute == static_cast<std::size_t>(expected[n]);
  }
  check(agree, "brute force r_0..r_6 = " + sizes + " matches the recurrence and 1 0 2 14 108");
  bool mass = true;
  for (unsigned n = 0; n <= 60; ++n) {
    Count total = 0;
    for (unsigned m = 0; m <= n; ++m) total += r_count(m) * forest_count(m + 1, n - m);
    mass = mass && total == catalan(n) * catalan(n);
  }
  check(mass, "sum_m r_m forest(m+1, n-m) = C_n^2 for n <= 60");
}

void growth(Checks& check) {
  const auto mu1 = mu_inverse_power(1);
  std::map<unsigned, Interval> gap;
  for (unsigned n : {20u, 40u, 60u}) {
    gap[n] = distance(Rational(r_count(n - 1), r_count(n)), mu1);
    check.note("n = " + std::to_string(n) + ": |r_(n-1)/r_n - 1/mu| = " + dec(gap[n].hi));
  }
  check(gap[60].hi < Rational(1, 20), "gap at n = 60 is below 0.05");
  check(gap[20].lo > gap[40].hi && gap[40].lo > gap[60].hi, "gap strictly decreases over 20, 40, 60");
}

void sphere_bound_check(Checks& check) {
  for (auto model : {Model::Sum, Model::Max}) {
    int bad = 0, total = 0;
    for (unsigned k = 2; k <= 4; ++k)
      for (unsigned n = k; n <= 30; ++n, ++total) bad += !sphere_bounds(k, n, model).holds;
    check(bad == 0, std::string(to_string(model)) + " model bounds hold on " + std::to_string(total - bad) + "/" +
                        std::to_string(total) + " spheres (k in 2..4, k <= n <= 30)");
  }
}

void phi_laws(Checks& check, Rng& rng) {
  for (unsigned k = 2; k <= 4; ++k) {
    int sum_ok = 0, max_ok = 0, inverse_ok = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Element> members;
      for (unsigned i = 0; i < k; ++i) members.push_back(random_element(0, 8, rng));
      const KTuple tau(std::move(members));
      const auto img = big_phi(tau);
      sum_ok += img.sum_size() == tau.sum_size() + 8;
      max_ok += img.max_size() == tau.max_size() + 6;
      try {
        inverse_ok += is_in_S(img) == tau;
      } catch (const Error&) {
      }
    }
    check(sum_ok == 1000 && max_ok == 1000 && inverse_ok == 1000,
          "k = " + std::to_string(k) + ": sum shift 8 on " + std::to_string(sum_ok) + ", max shift 6 on " +
              std::to_string(max_ok) + ", round trip on " + std::to_string(inverse_ok) + " of 1000 tuples");
  }
}

void pair_generation(Checks& check, Rng& rng) {
  int generates = 0, named = 0, witnesses_valid = 0, ab_ok = 0;
  const auto& pairs = closure_pairs();
  auto has = [](const Element& f, const char* u, const char* v) {
    return has_branch_pair(f, BinaryWord(u), BinaryWord(v));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto h1 = random_element(0, 12, rng), h2 = random_element(0, 12, rng);
    const std::vector<Element> gens{phi1(h1), phi2(h2)};
    const auto v = certify_generates_F(gens, 1);
    generates += v.kind == VerdictKind::Generates;
    named += has(gens[0], "11", "1") && has(gens[0], "10", "011") && has(gens[0], "01", "010") &&
             has(gens[1], "00", "0") && has(gens[1], "01", "10");
    const auto a1 = ab(gens[0]), a2 = ab(gens[1]);
    ab_ok += a1 == AbImage{0, 1} && a2.a == 1;
    if (v.witnesses) {
      bool ok = true;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& w = (*v.witnesses)[i];
        const auto replay = evaluate(w.word, gens);
        ok = ok && replay == w.element && has_branch_pair(replay, pairs[i].source, pairs[i].target) &&
             w.word.letters.size() <= 1;
      }
      witnesses_valid += ok;
    }
  }
  check(generates == 500, "Generates at depth 1 on " + std::to_string(generates) + "/500 pairs");
  check(named == 500, "phi1(h1) has 11->1, 10->011, 01->010 and phi2(h2) has 00->0, 01->10 on " +
                          std::to_string(named) + "/500");
  check(witnesses_valid == 500, "witness words replay to elements with their pairs on " +
                                    std::to_string(witnesses_valid) + "/500");
  check(ab_ok == 500, "ab(phi1(h1)) = (0,1) and ab(phi2(h2)) = (1,*) on " + std::to_string(ab_ok) + "/500");
}

void controls(Checks& check) {
  const std::vector<Element> x0{generator(0)};
  check(certify_generates_F(x0, 3).kind == VerdictKind::NotGenerating, "{x0} is NotGenerating");
  const std::vector<Element> halves{copy_in(generator(0), BinaryWord("0")), copy_in(generator(0), BinaryWord("1"))};
  const auto v = certify_generates_F(halves, 3);
  check(v.kind == VerdictKind::Unknown && ab_generates(halves),
        "{(x0)_[0], (x0)_[1]} is Unknown at depth 3 with surjective abelianization");
  bool no_witness = true;
  for (const auto& e : ball(halves, 3)) no_witness = no_witness && !has_branch_pair(e, BinaryWord("01"), BinaryWord("10"));
  check(no_witness, "no element of its depth-3 ball has 01->10");
  const std::vector<Element> left{copy_in(generator(0), BinaryWord("0")), copy_in(generator(1), BinaryWord("0"))};
  const auto w = certify_generates_F(left, 3);
  check(w.kind == VerdictKind::NotGenerating && Lattice2(w.ab_images).determinant_gcd() == 0,
        "{(x0)_[0], (x1)_[0]} is NotGenerating with determinant gcd 0");
}

void density(Checks& check) {
  for (auto model : {Model::Sum, Model::Max}) {
    const unsigned shift = phi_shift(model);
    // For k = 2 the sum density behaves like r_(n-8)/r_n and the max
    // density like (r_(n-6)/r_n)^2.
    const unsigned exponent = model == Model::Sum ? shift : 2 * shift;
    const std::string label = std::string(to_string(model)) + " model";
    std::string zero_at, outside_at;
    int applicable = 0;
    for (unsigned n = shift; n <= 30; ++n) {
      const auto env = density_envelope(2, n, model);
      if (env.value <= 0) zero_at += " " + std::to_string(n);
      if (env.applicable) {
        ++applicable;
        if (!env.inside) outside_at += " " + std::to_string(n);
      }
    }
    check(outside_at.empty(), label + ": density inside the r_n envelope at all " + std::to_string(applicable) +
                                  " radii with n - " + std::to_string(shift) + " >= k" +
                                  (outside_at.empty() ? "" : "; outside at" + outside_at));
    check(zero_at.empty(), label + ": density positive for " + std::to_string(shift) + " <= n <= 30" +
                               (zero_at.empty() ? "" : "; zero at n =" + zero_at));
    const auto target = mu_inverse_power(exponent);
    std::map<unsigned, Interval> gap;
    for (unsigned n : {16u, 24u, 30u}) {
      gap[n] = distance(density_S(2, n, model), target);
      check.note(label + ", n = " + std::to_string(n) + ": density = " + dec(density_S(2, n, model)) +
                 ", gap to mu^-" + std::to_string(exponent) + " = " + dec(gap[n].hi));
    }
    check(gap[16].lo > gap[24].hi && gap[24].lo > gap[30].hi,
          label + ": gap strictly decreases over n = 16, 24, 30");
    const Rational ratio = gap[30].hi / target.lo;
    check(gap[30].hi < target.lo / 10, label + ": final gap below 0.1 mu^-" + std::to_string(exponent) +
                                           " (observed " + dec(ratio) + " mu^-" + std::to_string(exponent) + ")");
  }
}

void nat_machinery(Checks& check, Rng& rng) {
  const Element f1 = copy_in(generator(1), BinaryWord("0"));
  const Element f2 = copy_in(generator(0), BinaryWord("0"));
  const auto plan = nat_plan({f1, f2}, BinaryWord("0"), 4);
  check(plan.ell == 1 && plan.p.str() == "00" && plan.c1 == 38 && plan.c2 == 14,
        "worked plan: ell = " + std::to_string(plan.ell) + ", p = " + plan.p.str() + ", C1 = " +
            std::to_string(plan.c1) + ", C2 = " + std::to_string(plan.c2));
  int shifts = 0, sizes = 0, gammas = 0, recovery = 0, round_trip = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Element> members;
    for (unsigned i = 0; i < plan.k; ++i) members.push_back(random_element(2, 8, rng));
    const auto c = check_nat_identities(plan, KTuple(std::move(members)));
    shifts += c.shifts;
    sizes += c.sizes;
    gammas += c.gammas;
    recovery += c.recovery;
    round_trip += c.round_trip;
  }
  check(shifts == 500, "sum shift C1 and max shift C2 on " + std::to_string(shifts) + "/500 tuples");
  check(sizes == 500, "size identities for psi_i, gamma_1, gamma_2, rho on " + std::to_string(sizes) + "/500");
  check(gammas == 500, "gamma_j = copy of phi_j at p on " + std::to_string(gammas) + "/500");
  check(recovery == 500, "f_i = psi_i(h_i) copy(h_i, p_i)^-1 on " + std::to_string(recovery) + "/500");
  check(round_trip == 500, "inverse map round trip on " + std::to_string(round_trip) + "/500");
}

void cyclic(Checks& check, Rng& rng) {
  int ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_element(2, 12, rng);
    bool good = true;
    Element fn = f;
    for (long long n = 1; n <= 20; ++n) {
      good = good && fn.size() >= static_cast<std::size_t>(n);
      fn = multiply(fn, f);
    }
    ok += good;
  }
  check(ok == 200, "size(f^n) >= n for n <= 20 on " + std::to_string(ok) + "/200 elements");
  // The subgroup generated by x0. Radius 0 holds only {1, 1}, which lies in
  // every subgroup, and radius 1 is empty, so the census starts at 2.
  const Element g = generator(0);
  for (auto model : {Model::Sum, Model::Max}) {
    const auto c2 = cyclic_subgroup_census(g, 2, 2, model);
    const auto c3 = cyclic_subgroup_census(g, 2, 3, model);
    const std::string label = std::string(to_string(model)) + " model, <x0>: ";
    check(c2.fraction() < Rational(1, 10) && c3.fraction() < Rational(1, 10),
          label + "fraction below 0.1 at n = 2, 3 (observed " + c2.inside.str() + "/" + c2.total.str() + ", " +
              c3.inside.str() + "/" + c3.total.str() + ")");
    check(c3.fraction() < c2.fraction(), label + "fraction decreases from n = 2 to n = 3");
  }
}

void sampler(Checks& check, const AcceptanceOptions& options) {
  Rng rng = substream(options.seed, 12);
  const std::uint64_t draws = 100000;
  for (unsigned n : {0u, 2u, 3u}) {
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < draws; ++i) counts[sample_element(n, rng).serialize()]++;
    const auto cells = static_cast<double>(r_count(n).convert_to<unsigned long>());
    const double p = 1.0 / cells;
    double chi2 = 0.0, worst = 0.0;
    for (const auto& [key, c] : counts) {
      const double expect = double(draws) * p;
      chi2 += (double(c) - expect) * (double(c) - expect) / expect;
      if (p < 1.0) worst = std::max(worst, std::abs(double(c) - expect) / std::sqrt(expect * (1 - p)));
    }
    const double df = cells - 1;
    const double z = df > 0 ? (chi2 - df) / std::sqrt(2 * df) : 0.0;
    check(counts.size() == cells && worst < 5 && z < 5,
          "size " + std::to_string(n) + ": " + std::to_string(counts.size()) + " classes seen, max |z| = " +
              std::to_string(worst) + ", chi-square z = " + std::to_string(z));
  }

  for (auto model : {Model::Sum, Model::Max}) {
    for (unsigned n : {6u, 8u}) {
      const std::string label = "(k=2, n=" + std::to_string(n) + ", " + to_string(model) + ")";
      ExperimentConfig cfg;
      cfg.k = 2;
      cfg.n = n;
      cfg.model = model;
      cfg.samples = 40000;
      cfg.depth = 2;
      cfg.seed = options.seed + n + (model == Model::Max ? 100 : 0);
      cfg.threads = options.threads;
      const auto mc = estimate_generating_fraction(cfg);
      CensusResult census;
      try {
        census = exact_generating_census(2, n, model, 2);
      } catch (const Error& e) {
        check(false, label + ": census unavailable (" + e.what() + ")");
        continue;
      }
      bool ok = true;
      std::string line;
      for (auto [name, part, observed] : {std::tuple{"generates", census.ordered.generates, mc.generates},
                                          std::tuple{"unknown", census.ordered.unknown, mc.unknown},
                                          std::tuple{"not generating", census.ordered.not_generating,
                                                     mc.not_generating}}) {
        const double p = to_double(census.ordered.fraction(part));
        const double se = std::sqrt(p * (1 - p) / double(cfg.samples));
        const double got = mc.fraction(observed);
        ok = ok && std::abs(got - p) <= 3 * se;
        line += std::string(line.empty() ? "" : "; ") + name + " " + std::to_string(got) + " vs " +
                std::to_string(p) + " (" + std::to_string(se > 0 ? std::abs(got - p) / se : 0.0) + " se)";
      }
      check(ok, label + ": " + line);
    }
  }
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names{
      "branch tables",  "presentation",        "counting oracle",      "growth rate",
      "sphere bounds",  "phi laws",            "pair generation",      "certificate controls",
      "S density",      "nat map machinery",   "cyclic subgroups",     "sampler correctness",
  };
  return names;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > 12) throw Error(ErrorCode::InvalidArgument, "criteria are numbered 1 to 12");
  CriterionResult r;
  r.id = id;
  r.name = criterion_names()[static_cast<std::size_t>(id - 1)];
  Checks check(r);
  Rng rng = substream(options.seed, static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: branch_tables(check); break;
      case 2: presentation(check); break;
      case 3: counting(check); break;
      case 4: growth(check); break;
      case 5: sphere_bound_check(check); break;
      case 6: phi_laws(check, rng); break;
      case 7: pair_generation(check, rng); break;
      case 8: controls(check); break;
      case 9: density(check); break;
      case 10: nat_machinery(check, rng); break;
      case 11: cyclic(check, rng); break;
      case 12: sampler(check, options); break;
    }
  } catch (const std::exception& e) {
    check(false, std::string("unexpected error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> ids = options.only;
  if (ids.empty())
    for (int i = 1; i <= 12; ++i) ids.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << r.seconds << " s)\n";
  for (const auto& n : r.notes) os << "       " << n << "\n";
  return os.str();
}

}  // namespace thompson
