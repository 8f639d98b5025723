// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_OUTCOME_HPP
#define TILT_OUTCOME_HPP

#include <compare>
#include <string>
#include <variant>

#include "tilt/errors.hpp"

namespace tilt {

/// An outcome label: either an opaque identifier or a real number.
/// Numeric operations (quadratic losses, moment functionals) require the
/// numeric form and fail loudly on labels.
class Outcome {
 public:
  Outcome(std::string label) : value_(std::move(label)) {}
  Outcome(const char* label) : value_(std::string(label)) {}
  Outcome(double x) : value_(x) {}
  Outcome(int x) : value_(static_cast<double>(x)) {}

  bool is_numeric() const { return std::holds_alternative<double>(value_); }

  double numeric() const {
    if (!is_numeric())
      throw NonNumericOutcome("outcome '" + std::get<std::string>(value_) +
                              "' is not numeric");
    return std::get<double>(value_);
  }

  const std::string& label() const { return std::get<std::string>(value_); }

  std::string to_string() const {
    if (is_numeric()) {
      double x = std::get<double>(value_);
      if (x == static_cast<long long>(x))
        return std::to_string(static_cast<long long>(x));
      return std::to_string(x);
    }
    return std::get<std::string>(value_);
  }

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend auto operator<=>(const Outcome& a, const Outcome& b) {
    return a.value_ <=> b.value_;
  }

 private:
  std::variant<std::string, double> value_;
};

}  // namespace tilt

#endif
