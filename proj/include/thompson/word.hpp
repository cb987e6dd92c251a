#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace thompson {

/// Finite word over {0,1}. Labels tree branches and the dyadic interval
/// [.w, .w1^inf]; the empty word names the whole unit interval.
class BinaryWord {
 public:
  BinaryWord() = default;

  /// Throws Error(Parse) if `bits` contains anything other than '0'/'1'.
  explicit BinaryWord(std::string_view bits);

  static BinaryWord zeros(std::size_t n) { return from_raw(std::string(n, '0')); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int bit(std::size_t i) const noexcept { return bits_[i] == '1' ? 1 : 0; }
  const std::string& str() const noexcept { return bits_; }

  bool is_prefix_of(const BinaryWord& other) const noexcept {
    return other.bits_.size() >= bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
  }
  bool comparable(const BinaryWord& other) const noexcept {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  BinaryWord prefix(std::size_t n) const { return from_raw(bits_.substr(0, n)); }
  BinaryWord drop(std::size_t n) const { return from_raw(bits_.substr(n)); }
  BinaryWord child(int b) const { return from_raw(bits_ + (b ? '1' : '0')); }

  /// The word obtained by flipping the last letter (the sibling branch).
  BinaryWord sibling() const;

  BinaryWord& append(const BinaryWord& tail) {
    bits_ += tail.bits_;
    return *this;
  }

  friend BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs) {
    lhs.bits_ += rhs.bits_;
    return lhs;
  }

  // Lexicographic order; on a prefix-free set this is left-to-right order.
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  static BinaryWord from_raw(std::string bits) {
    BinaryWord w;
    w.bits_ = std::move(bits);
    return w;
  }

  std::string bits_;
};

/// Human-readable form; the empty word prints as "ε".
std::string display(const BinaryWord& w);

}  // namespace thompson

template <>
struct std::hash<thompson::BinaryWord> {
  std::size_t operator()(const thompson::BinaryWord& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
