#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ortho {

enum class Errc {
  DimensionMismatch,
  Overflow,
  IndexOutOfRange,
  NotSquareMatrix,
  EmptyInput,
  ZeroInput,
  NotOrthogonal,
  NormMismatch,
  TooManyVectors,
  NotPerfectSquareNorm,
  NotPrimitive,
  SearchExhausted,
  DivisionByZero,
  InvalidArgument,
  PreconditionFailed,
  BudgetExceeded,
  InternalFailure,
  Parse,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported through this type. `first()`/`second()`
// carry the offending indices for NotOrthogonal/NormMismatch/Parse (line
// number) and are `npos` otherwise.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& what, std::size_t first = npos,
        std::size_t second = npos)
      : std::runtime_error(what), code_(code), first_(first), second_(second) {}

  Errc code() const noexcept { return code_; }
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  Errc code_;
  std::size_t first_;
  std::size_t second_;
};

// Raised when a step that a proved statement guarantees does not hold.
[[noreturn]] void internal_failure(const std::string& what);

}  // namespace ortho
