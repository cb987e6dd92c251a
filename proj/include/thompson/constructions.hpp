#pragma once

// Natural copies F_[v] and the injective, size-shifting maps built from them:
// phi_1, phi_2 and the tuple map Phi (generation of F), and psi_i, gamma_j,
// rho and the tuple map Gamma (generation of a subgroup containing a natural
// copy of F), together with their inverses.

#include <cstddef>
#include <string>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/word.hpp"

namespace thompson {

/// The [v]-copy g_[v]: T+ and T- grafted at the end of branch v of the
/// minimal tree containing v. An injective homomorphism F -> F_[v]; for
/// non-identity g, size grows by exactly |v|. The copy of the identity is
/// the identity.
Element copy_in(const Element& g, const BinaryWord& v);

/// Inverse of copy_in. Throws Error(NotACopy) unless f is supported on [v].
Element strip_copy(const Element& f, const BinaryWord& v);

/// x = x0^2 x1^2 x4^-1 x2^-1 x1^-1 x0^-2 and y = x0. Both are built from
/// their branch tables and checked against the group words on first use.
const Element& make_x();
const Element& make_y();

/// Attachment words for phi_1 and phi_2: x has 00101 -> 00110 and y has
/// 1 -> 11.
inline const BinaryWord& phi1_word() {
  static const BinaryWord w("00110");
  return w;
}
inline const BinaryWord& phi2_word() {
  static const BinaryWord w("11");
  return w;
}

Element phi1(const Element& g);  // x * g_[00110]
Element phi2(const Element& g);  // y * g_[11]

/// Throw Error(NotInImage) if f is not in the image.
Element invert_phi1(const Element& f);
Element invert_phi2(const Element& f);

/// Unordered k-tuple of elements. Members are kept in descending canonical
/// order (size, then serialization), which is also the order in which the
/// tuple maps consume them; two tuples are equal iff they are equal as
/// multisets.
class KTuple {
 public:
  explicit KTuple(std::vector<Element> members);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t arity() const noexcept { return members_.size(); }
  std::size_t sum_size() const noexcept;
  std::size_t max_size() const noexcept;

  std::string to_string() const;

  friend bool operator==(const KTuple&, const KTuple&) = default;

 private:
  std::vector<Element> members_;
};

/// Phi({h1,...,hk}) = {phi1(h1), phi2(h2), h3, ..., hk}; requires k >= 2.
KTuple big_phi(const KTuple& tau);

/// Preimage under Phi, or Error(NotInImage) naming the failing stage.
KTuple is_in_S(const KTuple& tau);

struct NatSlot {
  BinaryWord source;  // u_i, with u_i -> v_i a branch pair of f_i
  BinaryWord target;  // v_i, the branch of T-(f_i) on the ray u0^inf
  BinaryWord tail;    // w_i, |w_i| = |p| + 7 + m - i
  BinaryWord copy;    // p_i = v_i w_i
};

/// Data of the Gamma construction for generators f_1..f_m of a subgroup
/// containing F_[u], and tuple arity k >= m + 2.
struct NatPlan {
  std::vector<Element> gens;  // sorted |f_1| >= ... >= |f_m|
  BinaryWord u;
  std::size_t ell = 0;
  BinaryWord p;  // u 0^ell
  std::vector<NatSlot> slots;
  Element xbar;  // x_[p]
  Element ybar;  // y_[p]
  std::size_t k = 0;
  long long c1 = 0;  // sum-model shift
  long long c2 = 0;  // max-model shift

  std::size_t m() const noexcept { return gens.size(); }
};

/// Computes the plan. The hypothesis F_[u] <= <gens> is the caller's
/// obligation and is not checked. Throws Error(ArityTooSmall) if k < m + 2.
NatPlan nat_plan(std::vector<Element> gens, const BinaryWord& u, std::size_t k);

Element nat_psi(const NatPlan& plan, std::size_t i, const Element& g);  // i is 0-based
Element nat_gamma1(const NatPlan& plan, const Element& g);
Element nat_gamma2(const NatPlan& plan, const Element& g);
Element nat_rho(const NatPlan& plan, const Element& g);

/// Gamma(tau). The exact size shifts C1/C2 hold when no member of tau is
/// the identity: the copy of the identity does not grow.
KTuple nat_map(const NatPlan& plan, const KTuple& tau);

/// Inverse of nat_map, validated by re-applying it. Throws Error(NotInImage)
/// naming the failing stage.
KTuple invert_nat_map(const NatPlan& plan, const KTuple& image);

/// The identities the Gamma construction rests on, evaluated on one tuple.
struct NatIdentityCheck {
  bool shifts = false;      // sum grows by C1, max by C2
  bool sizes = false;       // exact sizes of psi_i, gamma_1, gamma_2, rho images
  bool gammas = false;      // gamma_j(h) = phi_j(h) copied into [p]
  bool recovery = false;    // psi_i(h_i) * (h_i)_[p_i]^-1 = f_i
  bool round_trip = false;  // invert_nat_map undoes nat_map
};
NatIdentityCheck check_nat_identities(const NatPlan& plan, const KTuple& tau);

/// Multi-line human-readable description of the plan.
std::string describe(const NatPlan& plan);

}  // namespace thompson
