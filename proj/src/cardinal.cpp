#include "simpair/cardinal.hpp"

#include <algorithm>
#include <limits>

#include "simpair/error.hpp"

namespace simpair {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ClassIndexOutOfRange: return "ClassIndexOutOfRange";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotInSc: return "NotInSc";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::InfiniteShape: return "InfiniteShape";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Cardinal operator+(Cardinal a, Cardinal b) {
  if (!a.is_finite() || !b.is_finite()) return std::max(a, b);
  if (a.count() > std::numeric_limits<std::uint64_t>::max() - b.count())
    throw Error(ErrorCode::RangeError, "finite cardinal sum overflows");
  return Cardinal(a.count() + b.count());
}

std::string Cardinal::str() const {
  switch (kind_) {
    case Kind::Finite: return std::to_string(count_);
    case Kind::Aleph0: return "inf";
    case Kind::Aleph1: return "aleph1";
    case Kind::Continuum: return "continuum";
  }
  return "?";
}

Cardinal sum(std::span<const Cardinal> terms, bool unbounded_nonzero) {
  Cardinal total = unbounded_nonzero ? Cardinal::aleph0() : Cardinal();
  for (auto c : terms) total += c;
  return total;
}

}  // namespace simpair
