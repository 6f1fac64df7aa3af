#include "lvp/exponent.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "lvp/errors.hpp"

namespace lvp {

Exponent Exponent::finite(double value) {
  if (!std::isfinite(value) || !(value >= 1.0)) {
    throw InvalidArgument("exponent must be a finite value >= 1, got " +
                          formatReal(value));
  }
  return Exponent(false, value);
}

Exponent Exponent::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity" ||
      text == "\xe2\x88\x9e") {
    return infinity();
  }
  std::string buffer(text);
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(buffer, &consumed);
  } catch (const std::exception&) {
    throw InvalidArgument("not an exponent: '" + buffer + "'");
  }
  if (consumed != buffer.size()) {
    throw InvalidArgument("not an exponent: '" + buffer + "'");
  }
  return finite(value);
}

double Exponent::value() const {
  if (infinite_) throw InvalidArgument("infinite exponent has no finite value");
  return value_;
}

Exponent Exponent::conjugate() const {
  if (infinite_) return finite(1.0);
  if (value_ == 1.0) return infinity();
  // p/(p-1) rounds to 1 for huge p; keep it in range.
  const double q = value_ / (value_ - 1.0);
  return finite(q < 1.0 ? 1.0 : q);
}

std::string Exponent::toString() const {
  return infinite_ ? std::string("inf") : formatReal(value_);
}

std::string formatReal(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace lvp
