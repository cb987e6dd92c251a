#include "thompson/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "thompson/action.hpp"
#include "thompson/certificate.hpp"
#include "thompson/constructions.hpp"
#include "thompson/enumeration.hpp"
#include "thompson/error.hpp"

namespace thompson {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

std::string exact(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Json interval_json(const Interval& i) { return Json{{"lo", to_decimal(i.lo, 15)}, {"hi", to_decimal(i.hi, 15)}}; }

void add_meta(Json& j, bool meta) {
  if (!meta) return;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  j["meta"] = Json{{"tool", "thompson"}, {"version", kVersion}, {"generated_at", buf}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string pair_text(const BranchPair& p) { return display(p.source) + "->" + display(p.target); }

}  // namespace

std::vector<Element> parse_element_list(std::string_view text) {
  std::vector<Element> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t item_start = 0;
    while (item_start <= line.size()) {
      std::size_t item_end = line.find(';', item_start);
      if (item_end == std::string_view::npos) item_end = line.size();
      std::string item(line.substr(item_start, item_end - item_start));
      const auto first = item.find_first_not_of(" \t\r");
      if (first != std::string::npos) {
        item = item.substr(first, item.find_last_not_of(" \t\r") - first + 1);
        try {
          out.push_back(Element::parse(item));
        } catch (const Error& e) {
          throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
        }
      }
      item_start = item_end + 1;
    }
    pos = end + 1;
  }
  return out;
}

std::string count_csv(unsigned max_n) {
  std::ostringstream os;
  os << "n,r_n,ratio,mu_inv_gap\n";
  const Interval mu = mu_inverse_power(1);
  for (unsigned n = 0; n <= max_n; ++n) {
    os << n << "," << r_count(n).str() << ",";
    if (n > 0 && r_count(n) != 0) {
      const Rational ratio(r_count(n - 1), r_count(n));
      const Interval gap = distance(ratio, mu);
      os << to_decimal(ratio, 12) << "," << to_decimal(gap.hi, 6);
    } else {
      os << ",";
    }
    os << "\n";
  }
  return os.str();
}

std::string sphere_json(unsigned k, unsigned n, Model model, bool meta) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const auto b = sphere_bounds(k, n, model);
  Json j;
  j["command"] = "sphere";
  j["k"] = k;
  j["n"] = n;
  j["model"] = to_string(model);
  j["count"] = b.value.str();
  j["ordered_count"] = ordered_sphere_count(k, n, model).str();
  j["distinct_ordered_count"] = distinct_ordered_count(k, n, model).str();
  j["bounds"] = Json{{"lower", exact(b.lower)},
                     {"upper", exact(b.upper)},
                     {"applicable", n >= k},
                     {"holds", b.holds}};
  j["finite_n_observation"] = true;
  add_meta(j, meta);
  return dump(j);
}

std::string density_json(unsigned k, unsigned n, Model model, bool meta) {
  const auto env = density_envelope(k, n, model);
  const unsigned shift = phi_shift(model);
  const unsigned exponent = model == Model::Sum ? shift : shift * k;
  Json j;
  j["command"] = "density-s";
  j["k"] = k;
  j["n"] = n;
  j["model"] = to_string(model);
  j["shift"] = shift;
  j["numerator"] = sphere_count(k, n - shift, model).str();
  j["denominator"] = sphere_count(k, n, model).str();
  j["density"] = exact(env.value);
  j["density_decimal"] = to_decimal(env.value, 12);
  j["positive"] = env.value > 0;
  j["envelope"] = Json{{"lower", exact(env.lower)},
                       {"upper", env.upper ? Json(exact(*env.upper)) : Json(nullptr)},
                       {"applicable", env.applicable},
                       {"inside", env.inside}};
  const Interval ref = mu_inverse_power(exponent);
  j["mu_reference"] = Json{{"exponent", -static_cast<int>(exponent)},
                           {"value", interval_json(ref)},
                           {"gap", interval_json(distance(env.value, ref))}};
  if (model == Model::Sum && k == 2) j["ordered_pair_density"] = exact(ordered_pair_S_density(n));
  j["finite_n_observation"] = true;
  add_meta(j, meta);
  return dump(j);
}

std::string certify_json(const std::vector<Element>& gens, std::size_t depth, bool meta) {
  const auto v = certify_generates_F(gens, depth);
  Json j;
  j["command"] = "certify";
  j["depth"] = depth;
  Json g = Json::array();
  for (const auto& e : gens) g.push_back(e.serialize());
  j["generators"] = g;
  j["verdict"] = to_string(v.kind);
  j["reason"] = v.reason;
  Json images = Json::array();
  for (const auto& a : v.ab_images) images.push_back(Json::array({a.a, a.b}));
  j["ab_images"] = images;
  const Lattice2 lattice(v.ab_images);
  j["ab_determinant_gcd"] = lattice.determinant_gcd();
  if (auto out = lattice.outside_vector()) {
    j["ab_outside_vector"] = Json::array({out->a, out->b});
  }
  if (v.witnesses) {
    Json w = Json::array();
    for (const auto& wit : *v.witnesses) {
      w.push_back(Json{{"pair", pair_text(wit.pair)},
                       {"word", wit.word.letters.empty() ? std::string("1") : wit.word.to_string("g")},
                       {"element", wit.element.serialize()}});
    }
    j["witnesses"] = w;
  } else {
    j["witnesses"] = nullptr;
  }
  add_meta(j, meta);
  return dump(j);
}

std::string experiment_json(const ExperimentConfig& config, bool meta) {
  const auto r = estimate_generating_fraction(config);
  Json j;
  j["command"] = "experiment";
  j["k"] = config.k;
  j["n"] = config.n;
  j["model"] = to_string(config.model);
  j["samples"] = config.samples;
  j["depth"] = config.depth;
  j["seed"] = config.seed;
  j["generates"] = r.fraction(r.generates);
  j["unknown"] = r.fraction(r.unknown);
  j["not_generating"] = r.fraction(r.not_generating);
  j["acceptance_rate"] = r.stats.element_acceptance();
  j["stderr"] = r.standard_error();
  j["counts"] = Json{{"generates", std::to_string(r.generates)},
                     {"unknown", std::to_string(r.unknown)},
                     {"not_generating", std::to_string(r.not_generating)},
                     {"s_hits", std::to_string(r.s_hits)}};
  j["tuple_acceptance_rate"] =
      r.stats.tuple_attempts ? double(r.stats.tuple_accepts) / double(r.stats.tuple_attempts) : 1.0;
  j["s_hit_fraction"] = r.fraction(r.s_hits);
  if (config.k == 2 && config.model == Model::Sum && config.n >= 8) {
    j["s_exact_ordered_density"] = exact(ordered_pair_S_density(config.n));
  }
  // Samples are ordered tuples; spheres count unordered multisets. The two
  // weightings differ only on tuples with a repeated member.
  const Count ordered = ordered_sphere_count(config.k, config.n, config.model);
  const Rational repeated(ordered - distinct_ordered_count(config.k, config.n, config.model), ordered);
  j["sampling"] = Json{{"space", "ordered tuples"},
                       {"ordered_sphere_size", ordered.str()},
                       {"unordered_sphere_size", sphere_count(config.k, config.n, config.model).str()},
                       {"repeated_member_mass", exact(repeated)},
                       {"repeated_member_mass_decimal", to_decimal(repeated, 6)}};
  j["finite_n_observation"] = true;
  add_meta(j, meta);
  return dump(j);
}

std::string nat_json(const std::vector<Element>& gens, const BinaryWord& u, std::size_t k, bool meta) {
  const auto plan = nat_plan(gens, u, k);
  Json j;
  j["command"] = "nat";
  j["hypothesis"] = "the copy F_[u] lies in the subgroup generated by gens; assumed, not checked";
  j["m"] = plan.m();
  j["k"] = plan.k;
  j["u"] = plan.u.str();
  j["ell"] = plan.ell;
  j["p"] = plan.p.str();
  Json g = Json::array();
  for (const auto& e : plan.gens) g.push_back(e.serialize());
  j["gens"] = g;
  Json slots = Json::array();
  for (const auto& s : plan.slots) {
    slots.push_back(Json{{"u_i", s.source.str()}, {"v_i", s.target.str()}, {"w_i", s.tail.str()}, {"p_i", s.copy.str()}});
  }
  j["slots"] = slots;
  j["xbar"] = plan.xbar.serialize();
  j["ybar"] = plan.ybar.serialize();
  j["C1"] = plan.c1;
  j["C2"] = plan.c2;

  // Identity checks on seeded random tuples of non-identity members.
  Rng rng = substream(1, 0);
  const int trials = 100;
  int shifts = 0, sizes = 0, gammas = 0, recovery = 0, round_trip = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Element> members;
    for (std::size_t i = 0; i < k; ++i) members.push_back(sample_element(2 + static_cast<unsigned>(rng() % 5), rng));
    const auto c = check_nat_identities(plan, KTuple(std::move(members)));
    shifts += c.shifts;
    sizes += c.sizes;
    gammas += c.gammas;
    recovery += c.recovery;
    round_trip += c.round_trip;
  }
  auto entry = [&](int ok) { return Json{{"passed", ok}, {"total", trials}}; };
  j["checks"] = Json{{"sum_shift_C1_and_max_shift_C2", entry(shifts)},
                     {"size_identities", entry(sizes)},
                     {"gamma_is_copy_of_phi", entry(gammas)},
                     {"generator_recovery", entry(recovery)},
                     {"inverse_round_trip", entry(round_trip)}};
  j["all_checks_passed"] = shifts == trials && sizes == trials && gammas == trials && recovery == trials &&
                           round_trip == trials;
  j["report"] = describe(plan);
  add_meta(j, meta);
  return dump(j);
}

}  // namespace thompson
