#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cnn {

using Rational = mpq_class;
using Integer = mpz_class;

/**
 * Exact element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
 *
 * Both coefficients are arbitrary-precision rationals kept in lowest terms
 * with positive denominators, so two Scalars are equal exactly when their
 * coefficient pairs are equal. Ordering is decided without floating point.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value), b_(0) {}  // NOLINT: implicit on purpose
  Scalar(Rational a, Rational b = 0);

  static Scalar sqrt3() { return Scalar(0, 1); }
  static Scalar fraction(long num, long den);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  /// -1, 0 or +1.
  int sign() const;
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const { return Scalar(-a_, -b_); }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// Nearest double (correct to within one ulp).
  double to_double() const;

  /// Largest integer not exceeding the value.
  Integer floor() const;
  Integer ceil() const;

  /// Human-readable exact form, e.g. "3 + 2·√3" or "-1/2 + 1/2·√3".
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

Scalar abs(const Scalar& x);
const Scalar& min(const Scalar& lhs, const Scalar& rhs);
const Scalar& max(const Scalar& lhs, const Scalar& rhs);

/// Parses "3", "-7/4", "0.125" or "-2.5" into an exact rational Scalar.
/// Throws std::invalid_argument on anything else.
Scalar parse_decimal(std::string_view text);

/// Constants of the Bishop-Rook analysis.
namespace constants {
/// 1 + sqrt3, decay rate of the offset during vertical rook moves.
Scalar vertical_decay();
/// 3 + 2 sqrt3, the competitive ratio.
Scalar competitive_ratio();
/// 6 - 2 sqrt3, slope of the f-term.
Scalar f_slope();
/// (sqrt3 - 1) / 2 = 1 / (1 + sqrt3).
Scalar inverse_decay();
}  // namespace constants

}  // namespace cnn
