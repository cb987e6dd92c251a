#pragma once

// Elements of F acting on [0,1]. Points are handled only through finite
// binary words (dyadic intervals); there is no floating point here.

#include <compare>

#include "thompson/element.hpp"
#include "thompson/word.hpp"

namespace thompson {

/// Image of w: if w = u_i s for a source branch u_i, returns v_i s.
/// Throws Error(WordTooShort) if w is a proper prefix of every source
/// branch it meets.
BinaryWord apply_to_word(const Element& f, const BinaryWord& w);

/// True iff f maps [u] linearly onto [v], i.e. some diagram of f has the
/// pair of branches u -> v.
bool has_branch_pair(const Element& f, const BinaryWord& u, const BinaryWord& v);

/// True iff f restricted to [u] is the identity.
bool fixes_interval(const Element& f, const BinaryWord& u);

/// Image in the abelianization Z^2: (log2 f'(0+), log2 f'(1-)).
struct AbImage {
  long long a = 0;
  long long b = 0;

  friend AbImage operator+(AbImage x, AbImage y) { return {x.a + y.a, x.b + y.b}; }
  friend bool operator==(const AbImage&, const AbImage&) = default;
  friend auto operator<=>(const AbImage&, const AbImage&) = default;
};

AbImage ab(const Element& f);

}  // namespace thompson
