#include "thompson/action.hpp"

#include "thompson/error.hpp"

namespace thompson {

BinaryWord apply_to_word(const Element& f, const BinaryWord& w) {
  for (const auto& p : f.branch_pairs()) {
    if (p.source.is_prefix_of(w)) return p.target + w.drop(p.source.size());
  }
  throw Error(ErrorCode::WordTooShort,
              "no source branch is a prefix of '" + display(w) + "'; extend the word");
}

bool has_branch_pair(const Element& f, const BinaryWord& u, const BinaryWord& v) {
  bool inside = false;
  for (const auto& p : f.branch_pairs()) {
    if (p.source.is_prefix_of(u)) {
      // [u] sits inside one linear piece: its image is [v' s].
      return p.target + u.drop(p.source.size()) == v;
    }
    if (u.is_prefix_of(p.source)) {
      // Pieces subdividing [u] must all be u s -> v s.
      inside = true;
      BinaryWord s = p.source.drop(u.size());
      if (!(p.target.size() == v.size() + s.size() && v.is_prefix_of(p.target) &&
            p.target.drop(v.size()) == s)) {
        return false;
      }
    }
  }
  return inside;
}

bool fixes_interval(const Element& f, const BinaryWord& u) { return has_branch_pair(f, u, u); }

AbImage ab(const Element& f) {
  const auto& pairs = f.branch_pairs();
  const auto& first = pairs.front();
  const auto& last = pairs.back();
  return {static_cast<long long>(first.source.size()) - static_cast<long long>(first.target.size()),
          static_cast<long long>(last.source.size()) - static_cast<long long>(last.target.size())};
}

}  // namespace thompson
