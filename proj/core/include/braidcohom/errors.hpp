#pragma once

#include <stdexcept>
#include <string>

namespace braidcohom {

/// Argument outside an operation's domain (bad n, q, degree, part size...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A formula produced a value it never should (inexact division, negative
/// average). Always indicates an implementation bug, never bad input.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A brute-force oracle refused to run above its configured size cap.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(std::string const &what, std::string flag, int cap)
    : std::runtime_error(what), flag_(std::move(flag)), cap_(cap) {}

  std::string const &flag() const noexcept { return flag_; }
  int cap() const noexcept { return cap_; }

private:
  std::string flag_;
  int cap_;
};

} // namespace braidcohom
