#pragma once

#include <cstdint>
#include <random>

#include "cnn/geometry.hpp"

namespace cnn::testing {

inline Scalar q(long num, long den = 1) { return Scalar::fraction(num, den); }

inline Scalar qs(long a_num, long a_den, long b_num, long b_den) {
  return q(a_num, a_den) + q(b_num, b_den) * Scalar::sqrt3();
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Small rational in [-bound, bound] with denominator up to 6.
  Scalar rational(long bound = 5) {
    const long den = integer(1, 6);
    return q(integer(-bound * den, bound * den), den);
  }
  /// a + b sqrt3 with small rational parts.
  Scalar scalar(long bound = 5) { return rational(bound) + rational(bound) * Scalar::sqrt3(); }
  Point point(long bound = 5) { return {scalar(bound), scalar(bound)}; }
  AxisMap axis_map() { return kAllAxisMaps[static_cast<std::size_t>(integer(0, 7))]; }
  Frame frame() { return {axis_map(), {scalar(), scalar()}}; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cnn::testing
