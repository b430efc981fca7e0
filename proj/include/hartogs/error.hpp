#ifndef HARTOGS_ERROR_HPP
#define HARTOGS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hartogs {

enum class ErrorKind {
  InvalidPair,
  NotDivisible,
  InternalMismatch,
  UnsupportedFamily,
  NotPalindromic,
  ZeroConstantTerm,
  ConvergenceFailure,
  OutsideDomain,
  DenominatorVanishes,
  DegenerateInput,
  NoInteriorRoot,
  WitnessMargin,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class HartogsError : public std::runtime_error {
 public:
  HartogsError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hartogs

#endif  // HARTOGS_ERROR_HPP
