#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lawvere {

/// Thrown for malformed input: unknown category kinds, out-of-range indices,
/// documents that do not resolve.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a configured size or search budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a law check. A failing result names the violated law and
/// carries a human-readable witness.
class CheckResult {
 public:
  static CheckResult pass() { return CheckResult{}; }
  static CheckResult fail(std::string law, std::string witness) {
    CheckResult r;
    r.ok_ = false;
    r.law_ = std::move(law);
    r.witness_ = std::move(witness);
    return r;
  }

  bool ok() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const std::string& law() const { return law_; }
  const std::string& witness() const { return witness_; }

  std::string describe() const {
    if (ok_) return "ok";
    return law_ + ": " + witness_;
  }

 private:
  bool ok_ = true;
  std::string law_;
  std::string witness_;
};

}  // namespace lawvere
