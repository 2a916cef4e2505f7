#pragma once

#include <stdexcept>
#include <string>

namespace kwg {

/// A parameter lies outside its admissible domain (nonpositive rate, p outside (0,1), ...).
class ParameterDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A survival value underflowed where a finite hazard or ratio was requested.
class OverflowDomainError : public std::range_error {
 public:
  OverflowDomainError(const std::string& what, double x) : std::range_error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Vector arguments of mismatched length.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scanned function produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double x) : std::runtime_error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Malformed scenario text. Line 0 means the problem is not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& message)
      : std::runtime_error(format(line, field, message)), line_(line), field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(int line, const std::string& field, const std::string& message) {
    std::string out = "scenario";
    if (line > 0) out += ":" + std::to_string(line);
    if (!field.empty()) out += " [" + field + "]";
    return out + ": " + message;
  }

  int line_;
  std::string field_;
};

}  // namespace kwg
