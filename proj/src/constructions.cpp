#include "thompson/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "thompson/action.hpp"
#include "thompson/error.hpp"

namespace thompson {

namespace {

Error not_in_image(const std::string& stage, const std::string& detail) {
  return Error(ErrorCode::NotInImage, "not in image at stage " + stage + ": " + detail);
}

void sort_descending(std::vector<Element>& v) {
  std::sort(v.begin(), v.end(),
            [](const Element& a, const Element& b) { return canonical_compare(a, b) > 0; });
}

Element strip_for_stage(const Element& f, const BinaryWord& v, const std::string& stage) {
  try {
    return strip_copy(f, v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotACopy) throw;
    throw not_in_image(stage, e.what());
  }
}

// The letter of u 0^inf at position j.
char ray_letter(const BinaryWord& u, std::size_t j) {
  return j < u.size() ? u.str()[j] : '0';
}

}  // namespace

Element copy_in(const Element& g, const BinaryWord& v) {
  if (g.is_identity() || v.empty()) return g;
  std::vector<BranchPair> pairs;
  pairs.reserve(g.branch_pairs().size() + v.size());
  // Leaves of the minimal tree with branch v: those hanging off to the left
  // of the path come first (shallowest first), those to the right last
  // (deepest first).
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.bit(i) == 1) {
      BinaryWord leaf = v.prefix(i).child(0);
      pairs.push_back({leaf, leaf});
    }
  }
  for (const auto& p : g.branch_pairs()) pairs.push_back({v + p.source, v + p.target});
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v.bit(i) == 0) {
      BinaryWord leaf = v.prefix(i).child(1);
      pairs.push_back({leaf, leaf});
    }
  }
  return Element::from_branch_pairs(std::move(pairs));
}

Element strip_copy(const Element& f, const BinaryWord& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    BinaryWord outside = v.prefix(i + 1).sibling();
    if (!fixes_interval(f, outside)) {
      throw Error(ErrorCode::NotACopy,
                  "element moves points of [" + display(outside) + "], outside [" + display(v) + "]");
    }
  }
  if (fixes_interval(f, v)) return Element::identity();

  std::vector<BranchPair> inner;
  for (const auto& p : f.branch_pairs()) {
    if (!v.is_prefix_of(p.source)) continue;
    if (!v.is_prefix_of(p.target)) {
      throw Error(ErrorCode::NotACopy, "element does not preserve [" + display(v) + "]");
    }
    inner.push_back({p.source.drop(v.size()), p.target.drop(v.size())});
  }
  Element g;
  try {
    g = Element::from_branch_pairs(std::move(inner));
  } catch (const Error&) {
    throw Error(ErrorCode::NotACopy, "branches under [" + display(v) + "] do not form a diagram");
  }
  if (copy_in(g, v) != f) {
    throw Error(ErrorCode::NotACopy, "element is not the [" + display(v) + "]-copy of its restriction");
  }
  return g;
}

const Element& make_x() {
  static const Element x = [] {
    auto table = Element::from_branch_pairs({
        {BinaryWord("000"), BinaryWord("000")},
        {BinaryWord("00100"), BinaryWord("0010")},
        {BinaryWord("00101"), BinaryWord("00110")},
        {BinaryWord("0011"), BinaryWord("00111")},
        {BinaryWord("01"), BinaryWord("010")},
        {BinaryWord("10"), BinaryWord("011")},
        {BinaryWord("11"), BinaryWord("1")},
    });
    if (table != from_group_word(GroupWord::parse("x0^2 x1^2 x4^-1 x2^-1 x1^-1 x0^-2"))) {
      throw std::logic_error("branch table of x disagrees with its group word");
    }
    return table;
  }();
  return x;
}

const Element& make_y() {
  static const Element y = [] {
    auto table = Element::from_branch_pairs({
        {BinaryWord("00"), BinaryWord("0")},
        {BinaryWord("01"), BinaryWord("10")},
        {BinaryWord("1"), BinaryWord("11")},
    });
    if (table != generator(0)) throw std::logic_error("branch table of y disagrees with x0");
    return table;
  }();
  return y;
}

Element phi1(const Element& g) { return multiply(make_x(), copy_in(g, phi1_word())); }
Element phi2(const Element& g) { return multiply(make_y(), copy_in(g, phi2_word())); }

Element invert_phi1(const Element& f) {
  return strip_for_stage(multiply(invert(make_x()), f), phi1_word(), "phi1");
}

Element invert_phi2(const Element& f) {
  return strip_for_stage(multiply(invert(make_y()), f), phi2_word(), "phi2");
}

KTuple::KTuple(std::vector<Element> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::InvalidArgument, "a tuple needs at least one member");
  sort_descending(members_);
}

std::size_t KTuple::sum_size() const noexcept {
  std::size_t s = 0;
  for (const auto& h : members_) s += h.size();
  return s;
}

std::size_t KTuple::max_size() const noexcept { return members_.front().size(); }

std::string KTuple::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += "; ";
    out += members_[i].serialize();
  }
  return out + "}";
}

KTuple big_phi(const KTuple& tau) {
  if (tau.arity() < 2) throw Error(ErrorCode::InvalidArgument, "Phi needs k >= 2");
  std::vector<Element> out = tau.members();
  out[0] = phi1(out[0]);
  out[1] = phi2(out[1]);
  return KTuple(std::move(out));
}

KTuple is_in_S(const KTuple& tau) {
  if (tau.arity() < 2) throw Error(ErrorCode::InvalidArgument, "S is defined for k >= 2");
  const auto& t = tau.members();
  if (t[0].size() <= t[1].size()) {
    throw not_in_image("sizes", "largest member is not unique");
  }
  std::vector<Element> pre = t;
  pre[0] = invert_phi1(t[0]);
  pre[1] = invert_phi2(t[1]);
  KTuple preimage(std::move(pre));
  if (big_phi(preimage) != tau) throw not_in_image("ordering", "preimage does not map back");
  return preimage;
}

NatPlan nat_plan(std::vector<Element> gens, const BinaryWord& u, std::size_t k) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one generator");
  const std::size_t m = gens.size();
  if (k < m + 2) {
    throw Error(ErrorCode::ArityTooSmall,
                "k = " + std::to_string(k) + " but the construction needs k >= m + 2 = " +
                    std::to_string(m + 2));
  }
  NatPlan plan;
  sort_descending(gens);
  plan.gens = std::move(gens);
  plan.u = u;
  plan.k = k;

  std::size_t longest = 0;
  for (const auto& f : plan.gens) {
    const BranchPair* hit = nullptr;
    for (const auto& pr : f.branch_pairs()) {
      bool on_ray = true;
      for (std::size_t j = 0; j < pr.target.size() && on_ray; ++j) {
        on_ray = pr.target.str()[j] == ray_letter(u, j);
      }
      if (on_ray) {
        hit = &pr;
        break;
      }
    }
    // Targets form a complete prefix code, so exactly one lies on the ray.
    plan.slots.push_back({hit->source, hit->target, {}, {}});
    longest = std::max(longest, hit->target.size());
  }
  plan.ell = longest > u.size() ? longest - u.size() : 0;
  plan.p = u + BinaryWord::zeros(plan.ell);

  for (std::size_t i = 0; i < m; ++i) {
    NatSlot& s = plan.slots[i];
    const std::size_t len = plan.p.size() + 7 + m - (i + 1);
    std::string tail;
    for (std::size_t j = 0; j < len; ++j) tail.push_back(ray_letter(plan.p, s.target.size() + j));
    s.tail = BinaryWord(tail);
    s.copy = s.target + s.tail;
  }
  plan.xbar = copy_in(make_x(), plan.p);
  plan.ybar = copy_in(make_y(), plan.p);

  long long sum_f = 0;
  for (const auto& f : plan.gens) sum_f += static_cast<long long>(f.size());
  const auto mm = static_cast<long long>(m);
  const auto plen = static_cast<long long>(plan.p.size());
  plan.c1 = static_cast<long long>(k) * plen + 8 + mm * (mm + 13) / 2 + sum_f;
  plan.c2 = static_cast<long long>(plan.gens.front().size()) + plen + mm + 6;
  return plan;
}

Element nat_psi(const NatPlan& plan, std::size_t i, const Element& g) {
  return multiply(plan.gens.at(i), copy_in(g, plan.slots.at(i).copy));
}

Element nat_gamma1(const NatPlan& plan, const Element& g) {
  return multiply(plan.xbar, copy_in(g, plan.p + phi1_word()));
}

Element nat_gamma2(const NatPlan& plan, const Element& g) {
  return multiply(plan.ybar, copy_in(g, plan.p + phi2_word()));
}

Element nat_rho(const NatPlan& plan, const Element& g) { return copy_in(g, plan.p); }

KTuple nat_map(const NatPlan& plan, const KTuple& tau) {
  if (tau.arity() != plan.k) {
    throw Error(ErrorCode::InvalidArgument, "tuple arity " + std::to_string(tau.arity()) +
                                                " does not match plan arity " + std::to_string(plan.k));
  }
  const auto& h = tau.members();
  const std::size_t m = plan.m();
  std::vector<Element> out;
  out.reserve(h.size());
  for (std::size_t i = 0; i < m; ++i) out.push_back(nat_psi(plan, i, h[i]));
  out.push_back(nat_gamma1(plan, h[m]));
  out.push_back(nat_gamma2(plan, h[m + 1]));
  for (std::size_t i = m + 2; i < h.size(); ++i) out.push_back(nat_rho(plan, h[i]));
  return KTuple(std::move(out));
}

KTuple invert_nat_map(const NatPlan& plan, const KTuple& image) {
  if (image.arity() != plan.k) {
    throw Error(ErrorCode::InvalidArgument, "tuple arity " + std::to_string(image.arity()) +
                                                " does not match plan arity " + std::to_string(plan.k));
  }
  const auto& t = image.members();
  const std::size_t m = plan.m();
  std::vector<Element> pre;
  pre.reserve(t.size());
  for (std::size_t i = 0; i < m; ++i) {
    pre.push_back(strip_for_stage(multiply(invert(plan.gens[i]), t[i]), plan.slots[i].copy,
                                  "psi" + std::to_string(i + 1)));
  }
  pre.push_back(strip_for_stage(multiply(invert(plan.xbar), t[m]), plan.p + phi1_word(), "gamma1"));
  pre.push_back(strip_for_stage(multiply(invert(plan.ybar), t[m + 1]), plan.p + phi2_word(), "gamma2"));
  for (std::size_t i = m + 2; i < t.size(); ++i) pre.push_back(strip_for_stage(t[i], plan.p, "rho"));
  KTuple preimage(std::move(pre));
  if (nat_map(plan, preimage) != image) throw not_in_image("ordering", "preimage does not map back");
  return preimage;
}

std::string describe(const NatPlan& plan) {
  std::ostringstream out;
  out << "generators (m = " << plan.m() << ", sorted by size):\n";
  for (std::size_t i = 0; i < plan.m(); ++i) {
    const auto& s = plan.slots[i];
    out << "  f" << i + 1 << " = " << plan.gens[i].serialize() << "  |f" << i + 1
        << "| = " << plan.gens[i].size() << "\n"
        << "    u" << i + 1 << " = " << display(s.source) << "  v" << i + 1 << " = " << display(s.target)
        << "  w" << i + 1 << " = " << display(s.tail) << " (|w| = " << s.tail.size() << ")"
        << "  p" << i + 1 << " = " << display(s.copy) << "\n";
  }
  out << "u = " << display(plan.u) << "\n"
      << "ell = " << plan.ell << "\n"
      << "p = " << display(plan.p) << "  |p| = " << plan.p.size() << "\n"
      << "xbar = " << plan.xbar.serialize() << "  |xbar| = " << plan.xbar.size() << "\n"
      << "ybar = " << plan.ybar.serialize() << "  |ybar| = " << plan.ybar.size() << "\n"
      << "k = " << plan.k << "\n"
      << "C1 = " << plan.c1 << "\n"
      << "C2 = " << plan.c2 << "\n";
  return out.str();
}

NatIdentityCheck check_nat_identities(const NatPlan& plan, const KTuple& tau) {
  NatIdentityCheck c;
  const auto& h = tau.members();
  const std::size_t m = plan.m(), P = plan.p.size();
  const auto img = nat_map(plan, tau);
  c.shifts = static_cast<long long>(img.sum_size()) == static_cast<long long>(tau.sum_size()) + plan.c1 &&
             static_cast<long long>(img.max_size()) == static_cast<long long>(tau.max_size()) + plan.c2;
  c.sizes = true;
  c.recovery = true;
  for (std::size_t i = 0; i < m; ++i) {
    const auto psi = nat_psi(plan, i, h[i]);
    c.sizes = c.sizes && psi.size() == h[i].size() + plan.gens[i].size() + P + 7 + m - (i + 1);
    c.recovery = c.recovery && multiply(psi, invert(copy_in(h[i], plan.slots[i].copy))) == plan.gens[i];
  }
  const auto g1 = nat_gamma1(plan, h[m]);
  const auto g2 = nat_gamma2(plan, h[m + 1]);
  c.sizes = c.sizes && g1.size() == h[m].size() + P + 6 && g2.size() == h[m + 1].size() + P + 2;
  for (std::size_t i = m + 2; i < plan.k; ++i) c.sizes = c.sizes && nat_rho(plan, h[i]).size() == h[i].size() + P;
  c.gammas = g1 == copy_in(phi1(h[m]), plan.p) && g2 == copy_in(phi2(h[m + 1]), plan.p);
  try {
    c.round_trip = invert_nat_map(plan, img) == tau;
  } catch (const Error&) {
    c.round_trip = false;
  }
  return c;
}

}  // namespace thompson
