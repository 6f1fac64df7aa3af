#pragma once

#include <string>
#include <string_view>

namespace lvp {

/// An exponent in the extended range [1, inf]. Infinity is a distinct tag,
/// never a large finite number.
class Exponent {
 public:
  /// Throws InvalidArgument unless value is finite and >= 1.
  static Exponent finite(double value);
  static Exponent infinity() { return Exponent(true, 0.0); }

  /// Parses "inf" / "infinity" / "∞" or a decimal number >= 1.
  static Exponent parse(std::string_view text);

  bool isInfinite() const { return infinite_; }
  bool isFinite() const { return !infinite_; }

  /// Finite value; throws InvalidArgument for the infinite tag.
  double value() const;

  /// 1/p with 1/inf = 0.
  double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

  /// The q with 1/p + 1/q = 1.
  Exponent conjugate() const;

  /// "inf" or the value printed with 17 significant digits.
  std::string toString() const;

  friend bool operator==(const Exponent& lhs, const Exponent& rhs) {
    return lhs.infinite_ == rhs.infinite_ &&
           (lhs.infinite_ || lhs.value_ == rhs.value_);
  }

  /// Strict order with infinity as the largest element.
  friend bool operator<(const Exponent& lhs, const Exponent& rhs) {
    if (lhs.infinite_) return false;
    if (rhs.infinite_) return true;
    return lhs.value_ < rhs.value_;
  }

 private:
  Exponent(bool infinite, double value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  double value_;
};

/// Formats a double with 17 significant digits (round-trip exact).
std::string formatReal(double value);

}  // namespace lvp
