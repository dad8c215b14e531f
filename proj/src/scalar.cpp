#include "cnn/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cnn {

Scalar::Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(Rational(num, den));
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 3 b^2.
  const Rational lhs = a_ * a_;
  const Rational rhs = 3 * b_ * b_;
  const int c = cmp(lhs, rhs);
  return sa > 0 ? c : -c;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  Rational a = a_ * rhs.a_ + 3 * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero in Q(sqrt3)");
  // (a + b r)(c - d r) / (c^2 - 3 d^2)
  const Rational norm = rhs.a_ * rhs.a_ - 3 * rhs.b_ * rhs.b_;
  Rational a = (a_ * rhs.a_ - 3 * b_ * rhs.b_) / norm;
  Rational b = (b_ * rhs.a_ - a_ * rhs.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  // Fast path for the common case of equal sqrt3 parts (plain rationals).
  const int s = lhs.b_ == rhs.b_ ? cmp(lhs.a_, rhs.a_) : (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Scalar::to_double() const {
  if (is_rational()) return a_.get_d();
  constexpr mp_bitcnt_t kPrecision = 512;
  mpf_class root(3, kPrecision);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class a(a_, kPrecision);
  mpf_class b(b_, kPrecision);
  mpf_class value(a + b * root, kPrecision);
  // mpf_get_d truncates; pick the closest of the truncation and its neighbours.
  const double trunc = value.get_d();
  double best = trunc;
  mpf_class best_err(abs(value - mpf_class(trunc, kPrecision)), kPrecision);
  for (double cand : {std::nextafter(trunc, HUGE_VAL), std::nextafter(trunc, -HUGE_VAL)}) {
    mpf_class err(abs(value - mpf_class(cand, kPrecision)), kPrecision);
    if (err < best_err) {
      best = cand;
      best_err = err;
    }
  }
  return best;
}

Integer Scalar::floor() const {
  constexpr mp_bitcnt_t kPrecision = 512;
  mpf_class root(3, kPrecision);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class value(mpf_class(a_, kPrecision) + mpf_class(b_, kPrecision) * root, kPrecision);
  mpf_floor(value.get_mpf_t(), value.get_mpf_t());
  Integer guess(value);
  while (Scalar(Rational(guess)) > *this) guess -= 1;
  while (Scalar(Rational(guess + 1)) <= *this) guess += 1;
  return guess;
}

Integer Scalar::ceil() const {
  Integer f = floor();
  if (Scalar(Rational(f)) == *this) return f;
  return f + 1;
}

std::string Scalar::to_string() const {
  std::ostringstream out;
  if (is_rational()) {
    out << a_;
    return out.str();
  }
  if (sgn(a_) != 0) {
    out << a_ << (sgn(b_) < 0 ? " - " : " + ");
    out << abs(b_) << "·√3";
  } else {
    out << b_ << "·√3";
  }
  return out.str();
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

const Scalar& min(const Scalar& lhs, const Scalar& rhs) { return rhs < lhs ? rhs : lhs; }

const Scalar& max(const Scalar& lhs, const Scalar& rhs) { return lhs < rhs ? rhs : lhs; }

Scalar parse_decimal(std::string_view text) {
  auto fail = [&]() -> Scalar {
    throw std::invalid_argument("not an exact number: '" + std::string(text) + "'");
  };
  std::string s(text);
  if (s.empty()) return fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      return fail();
    if (den == 0) return fail();
    return Scalar(Rational(num, den));
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '-' || s[pos] == '+') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_dot = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  Integer num(digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
  if (negative) num = -num;
  return Scalar(Rational(num, den));
}

namespace constants {
Scalar vertical_decay() { return Scalar(1, 1); }
Scalar competitive_ratio() { return Scalar(3, 2); }
Scalar f_slope() { return Scalar(6, -2); }
Scalar inverse_decay() { return Scalar(Rational(-1, 2), Rational(1, 2)); }
}  // namespace constants

}  // namespace cnn
