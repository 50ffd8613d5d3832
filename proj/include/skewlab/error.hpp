#ifndef SKEWLAB_ERROR_HPP
#define SKEWLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlab {

enum class ErrorCode {
    ParseError,
    NonPrimeP,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    TowerMismatch,
    DivisionByZero,
    BothZero,
    ZeroInput,
    ConstantInput,
    DegenerateInput,
    NotMonic,
    DegreeTooHigh,
    EmptyList,
    RightInvariantInput,
    TValuationNonzero,
    HypothesisViolated,
    TooLarge,
    Inconclusive,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. The code is machine readable,
/// the message is for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace skewlab

#endif
