#include "thompson/word.hpp"

#include "thompson/error.hpp"

namespace thompson {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::WordTooShort: return "WordTooShort";
    case ErrorCode::NotACopy: return "NotACopy";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::ArityTooSmall: return "ArityTooSmall";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::Parse, "binary word contains '" + std::string(1, c) + "'");
    }
  }
}

BinaryWord BinaryWord::sibling() const {
  if (bits_.empty()) throw Error(ErrorCode::InvalidArgument, "the empty word has no sibling");
  std::string s = bits_;
  s.back() = s.back() == '0' ? '1' : '0';
  return from_raw(std::move(s));
}

std::string display(const BinaryWord& w) { return w.empty() ? std::string("ε") : w.str(); }

}  // namespace thompson
