#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catquant {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index out of range, shape mismatch, or other malformed input that is not
/// an algebraic law violation.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured candidate cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_enumerated, double count, std::size_t cap)
      : Error(what_enumerated + ": " + format_count(count) + " candidates exceed cap " +
              std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  double count() const noexcept { return count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  static std::string format_count(double c) {
    if (c < 1e18) return std::to_string(static_cast<unsigned long long>(c));
    return std::to_string(c);
  }

  double count_;
  std::size_t cap_;
};

/// Malformed document (JSON syntax, unknown names, missing fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace catquant
