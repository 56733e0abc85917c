#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cycdiv {

/// Base of all library errors. `name()` is the stable identifier the CLI
/// prints on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct NotDivisible : Error {
  explicit NotDivisible(const std::string& w) : Error("NotDivisible", w) {}
};
struct OrderMismatch : Error {
  explicit OrderMismatch(const std::string& w) : Error("OrderMismatch", w) {}
};
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& w) : Error("NotInvertible", w) {}
};
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& w) : Error("CapExceeded", w) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& w) : Error("BudgetExceeded", w) {}
};
struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& w) : Error("VerificationFailed", w) {}
};
struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& w) : Error("PreconditionViolated", w) {}
};

}  // namespace cycdiv
