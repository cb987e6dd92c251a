#include "thompson/element.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "thompson/error.hpp"

namespace thompson {

namespace {

// Consumes the leaves under `prefix` from w[idx...]; false if they do not
// form the subtree rooted at `prefix`.
bool consume_subtree(const std::vector<BinaryWord>& w, std::size_t& idx, std::string& prefix) {
  if (idx >= w.size()) return false;
  const std::string& cur = w[idx].str();
  if (cur == prefix) {
    ++idx;
    return true;
  }
  if (cur.size() <= prefix.size() || cur.compare(0, prefix.size(), prefix) != 0) return false;
  prefix.push_back('0');
  bool ok = consume_subtree(w, idx, prefix);
  prefix.back() = '1';
  ok = ok && consume_subtree(w, idx, prefix);
  prefix.pop_back();
  return ok;
}

void emit_preorder(const std::vector<BinaryWord>& w, std::size_t& idx, std::string& prefix,
                   std::string& out) {
  if (w[idx].str() == prefix) {
    out.push_back('0');
    ++idx;
    return;
  }
  out.push_back('1');
  prefix.push_back('0');
  emit_preorder(w, idx, prefix, out);
  prefix.back() = '1';
  emit_preorder(w, idx, prefix, out);
  prefix.pop_back();
}

bool read_preorder(std::string_view bits, std::size_t& pos, std::string& prefix,
                   std::vector<BinaryWord>& out) {
  if (pos >= bits.size()) return false;
  char c = bits[pos++];
  if (c == '0') {
    out.emplace_back(prefix);
    return true;
  }
  if (c != '1') return false;
  prefix.push_back('0');
  bool ok = read_preorder(bits, pos, prefix, out);
  prefix.back() = '1';
  ok = ok && read_preorder(bits, pos, prefix, out);
  prefix.pop_back();
  return ok;
}

bool mergeable(const BranchPair& left, const BranchPair& right) {
  const std::string& a = left.source.str();
  const std::string& b = right.source.str();
  const std::string& c = left.target.str();
  const std::string& d = right.target.str();
  if (a.empty() || c.empty() || a.size() != b.size() || c.size() != d.size()) return false;
  if (a.back() != '0' || b.back() != '1' || c.back() != '0' || d.back() != '1') return false;
  return a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0 &&
         c.compare(0, c.size() - 1, d, 0, d.size() - 1) == 0;
}

// Stack pass: a merge can only enable a further merge with the pair to its
// left, which is the new top of the stack.
std::vector<BranchPair> reduce_pairs(const std::vector<BranchPair>& in) {
  std::vector<BranchPair> out;
  out.reserve(in.size());
  for (const auto& p : in) {
    out.push_back(p);
    while (out.size() >= 2 && mergeable(out[out.size() - 2], out.back())) {
      BranchPair merged{out.back().source.prefix(out.back().source.size() - 1),
                        out.back().target.prefix(out.back().target.size() - 1)};
      out.pop_back();
      out.back() = std::move(merged);
    }
  }
  return out;
}

void check_code(const std::vector<BinaryWord>& w, const char* what) {
  std::size_t idx = 0;
  std::string prefix;
  if (w.empty() || !consume_subtree(w, idx, prefix) || idx != w.size()) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " are not the ordered branches of a full binary tree");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BinaryTree BinaryTree::from_branches(std::vector<BinaryWord> leaves) {
  check_code(leaves, "tree leaves");
  return BinaryTree(std::move(leaves));
}

BinaryTree BinaryTree::from_preorder(std::string_view bits) {
  std::vector<BinaryWord> leaves;
  std::size_t pos = 0;
  std::string prefix;
  if (!read_preorder(bits, pos, prefix, leaves) || pos != bits.size()) {
    throw Error(ErrorCode::Parse, "'" + std::string(bits) + "' is not a preorder full binary tree");
  }
  return BinaryTree(std::move(leaves));
}

std::string BinaryTree::preorder() const {
  std::string out;
  out.reserve(2 * leaves_.size());
  std::size_t idx = 0;
  std::string prefix;
  emit_preorder(leaves_, idx, prefix, out);
  return out;
}

TreeDiagram::TreeDiagram(BinaryTree plus, BinaryTree minus)
    : source(std::move(plus)), target(std::move(minus)) {
  if (source.leaves() != target.leaves()) {
    throw Error(ErrorCode::InvalidArgument, "tree diagram with unequal leaf counts");
  }
}

Element Element::from_branch_pairs(std::vector<BranchPair> pairs) {
  std::vector<BinaryWord> src, tgt;
  src.reserve(pairs.size());
  tgt.reserve(pairs.size());
  for (const auto& p : pairs) {
    src.push_back(p.source);
    tgt.push_back(p.target);
  }
  check_code(src, "source words");
  check_code(tgt, "target words");
  return Element(reduce_pairs(pairs));
}

Element Element::parse(std::string_view text) {
  text = trim(text);
  auto comma = text.find(',');
  if (comma != std::string_view::npos) {
    auto plus = BinaryTree::from_preorder(trim(text.substr(0, comma)));
    auto minus = BinaryTree::from_preorder(trim(text.substr(comma + 1)));
    if (plus.leaves() != minus.leaves()) {
      throw Error(ErrorCode::Parse, "trees of '" + std::string(text) + "' have different leaf counts");
    }
    return reduce(TreeDiagram(std::move(plus), std::move(minus)));
  }
  return from_group_word(GroupWord::parse(text));
}

BinaryTree Element::source_tree() const {
  std::vector<BinaryWord> w;
  w.reserve(pairs_.size());
  for (const auto& p : pairs_) w.push_back(p.source);
  return BinaryTree::from_branches(std::move(w));
}

BinaryTree Element::target_tree() const {
  std::vector<BinaryWord> w;
  w.reserve(pairs_.size());
  for (const auto& p : pairs_) w.push_back(p.target);
  return BinaryTree::from_branches(std::move(w));
}

std::string Element::serialize() const {
  return source_tree().preorder() + "," + target_tree().preorder();
}

Element reduce(const TreeDiagram& d) {
  std::vector<BranchPair> pairs;
  pairs.reserve(d.source.leaves());
  for (std::size_t i = 0; i < d.source.leaves(); ++i) {
    pairs.push_back({d.source.branches()[i], d.target.branches()[i]});
  }
  return Element(reduce_pairs(pairs));
}

bool is_reduced(const TreeDiagram& d) {
  const auto& s = d.source.branches();
  const auto& t = d.target.branches();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (mergeable({s[i], t[i]}, {s[i + 1], t[i + 1]})) return false;
  }
  return true;
}

Element multiply(const Element& a, const Element& b) {
  // Refine a's target tree and b's source tree to their common expansion S
  // by splitting whichever current leaf is coarser.
  std::vector<BranchPair> left(a.pairs_.rbegin(), a.pairs_.rend());
  std::vector<BranchPair> right(b.pairs_.rbegin(), b.pairs_.rend());
  std::vector<BranchPair> out;
  out.reserve(a.pairs_.size() + b.pairs_.size());
  while (!left.empty() && !right.empty()) {
    BranchPair& p = left.back();
    BranchPair& q = right.back();
    if (p.target.size() == q.source.size()) {
      out.push_back({std::move(p.source), std::move(q.target)});
      left.pop_back();
      right.pop_back();
    } else if (p.target.size() < q.source.size()) {
      BranchPair hi{p.source.child(1), p.target.child(1)};
      BranchPair lo{p.source.child(0), p.target.child(0)};
      left.back() = std::move(hi);
      left.push_back(std::move(lo));
    } else {
      BranchPair hi{q.source.child(1), q.target.child(1)};
      BranchPair lo{q.source.child(0), q.target.child(0)};
      right.back() = std::move(hi);
      right.push_back(std::move(lo));
    }
  }
  return Element(reduce_pairs(out));
}

Element invert(const Element& a) {
  std::vector<BranchPair> pairs;
  pairs.reserve(a.pairs_.size());
  for (const auto& p : a.pairs_) pairs.push_back({p.target, p.source});
  // Swapping trees preserves reducedness but not source order.
  std::sort(pairs.begin(), pairs.end(),
            [](const BranchPair& x, const BranchPair& y) { return x.source < y.source; });
  return Element(std::move(pairs));
}

Element power(const Element& a, long long exponent) {
  Element base = exponent < 0 ? invert(a) : a;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Element result;
  while (e) {
    if (e & 1ULL) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

std::strong_ordering canonical_compare(const Element& a, const Element& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (a == b) return std::strong_ordering::equal;
  return a.serialize() <=> b.serialize();
}

GroupWord GroupWord::parse(std::string_view text) {
  GroupWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto fail = [&] { throw Error(ErrorCode::Parse, "bad group-word token '" + tok + "'"); };
    if (tok.size() < 2 || tok[0] != 'x') fail();
    auto caret = tok.find('^');
    std::string_view idx = std::string_view(tok).substr(1, caret == std::string::npos ? std::string::npos
                                                                                       : caret - 1);
    Letter letter;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), letter.generator);
    if (ec != std::errc{} || p != idx.data() + idx.size() || idx.empty()) fail();
    if (caret != std::string::npos) {
      std::string_view ex = std::string_view(tok).substr(caret + 1);
      if (!ex.empty() && ex.front() == '+') ex.remove_prefix(1);
      auto [q, ec2] = std::from_chars(ex.data(), ex.data() + ex.size(), letter.exponent);
      if (ec2 != std::errc{} || q != ex.data() + ex.size() || ex.empty()) fail();
    }
    if (letter.exponent != 0) w.letters.push_back(letter);
  }
  return w;
}

std::string GroupWord::to_string(std::string_view symbol) const {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += symbol;
    out += std::to_string(l.generator);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

Element generator(unsigned index) {
  static const Element x0 = Element::from_branch_pairs({
      {BinaryWord("00"), BinaryWord("0")},
      {BinaryWord("01"), BinaryWord("10")},
      {BinaryWord("1"), BinaryWord("11")},
  });
  static const Element x1 = Element::from_branch_pairs({
      {BinaryWord("0"), BinaryWord("0")},
      {BinaryWord("100"), BinaryWord("10")},
      {BinaryWord("101"), BinaryWord("110")},
      {BinaryWord("11"), BinaryWord("111")},
  });
  if (index == 0) return x0;
  if (index == 1) return x1;
  Element shift = power(x0, index - 1);
  return multiply(multiply(invert(shift), x1), shift);
}

Element from_group_word(const GroupWord& w) {
  Element result;
  for (const auto& l : w.letters) result = multiply(result, power(generator(l.generator), l.exponent));
  return result;
}

Element evaluate(const GroupWord& w, std::span<const Element> gens) {
  Element result;
  for (const auto& l : w.letters) {
    if (l.generator >= gens.size()) {
      throw Error(ErrorCode::InvalidArgument, "word uses generator " + std::to_string(l.generator) +
                                                  " but only " + std::to_string(gens.size()) + " given");
    }
    result = multiply(result, power(gens[l.generator], l.exponent));
  }
  return result;
}

Element conjugate(const Element& a, const Element& b) { return multiply(multiply(invert(b), a), b); }

Element commutator(const Element& a, const Element& b) {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

}  // namespace thompson

std::size_t std::hash<thompson::Element>::operator()(const thompson::Element& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : e.branch_pairs()) {
    h ^= std::hash<std::string>{}(p.source.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(p.target.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
