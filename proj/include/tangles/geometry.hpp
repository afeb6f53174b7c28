#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tangles {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Exact element a + b*sqrt(3) of the field Q[sqrt 3].
///
/// The representation is unique, so equality is componentwise and the value
/// is zero iff both coefficients are zero.
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  QSqrt3(long long a) : a_(a) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  QSqrt3& operator+=(const QSqrt3& rhs);
  QSqrt3& operator-=(const QSqrt3& rhs);
  QSqrt3& operator*=(const QSqrt3& rhs);

  friend QSqrt3 operator+(QSqrt3 lhs, const QSqrt3& rhs) { return lhs += rhs; }
  friend QSqrt3 operator-(QSqrt3 lhs, const QSqrt3& rhs) { return lhs -= rhs; }
  friend QSqrt3 operator*(QSqrt3 lhs, const QSqrt3& rhs) { return lhs *= rhs; }
  friend QSqrt3 operator-(const QSqrt3& x) { return QSqrt3(-x.a_, -x.b_); }
  friend bool operator==(const QSqrt3&, const QSqrt3&) = default;

  /// Exact sign of the real value.
  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  double to_double() const;

 private:
  Rational a_;
  Rational b_;
};

inline int sign(const QSqrt3& x) { return x.sign(); }
std::string to_string(const QSqrt3& x);

/// Exact total order on the real values.
std::strong_ordering compare(const QSqrt3& lhs, const QSqrt3& rhs);

const QSqrt3& sqrt3();

struct ExactPoint {
  QSqrt3 x;
  QSqrt3 y;

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

inline ExactPoint operator+(const ExactPoint& p, const ExactPoint& q) { return {p.x + q.x, p.y + q.y}; }
inline ExactPoint operator-(const ExactPoint& p, const ExactPoint& q) { return {p.x - q.x, p.y - q.y}; }
ExactPoint scale(const ExactPoint& p, const QSqrt3& s);
ExactPoint midpoint(const ExactPoint& p, const ExactPoint& q);
QSqrt3 dot(const ExactPoint& p, const ExactPoint& q);
QSqrt3 cross(const ExactPoint& p, const ExactPoint& q);
QSqrt3 dist_squared(const ExactPoint& p, const ExactPoint& q);

/// Directions at 30 degree granularity: k in [0, 12), angle = 30k degrees.
class Direction {
 public:
  static constexpr int kCount = 12;

  constexpr Direction() = default;
  constexpr explicit Direction(int k) : k_(((k % kCount) + kCount) % kCount) {}

  constexpr int index() const { return k_; }
  constexpr Direction rotated(int steps) const { return Direction(k_ + steps); }
  constexpr Direction opposite() const { return rotated(6); }
  friend constexpr bool operator==(Direction, Direction) = default;
  friend constexpr auto operator<=>(Direction, Direction) = default;

  /// Unit vector (cos 30k, sin 30k), exact.
  ExactPoint unit() const;

 private:
  int k_ = 0;
};

/// Steps from `from` to `to` going counterclockwise, in [0, 12).
constexpr int ccw_steps(Direction from, Direction to) {
  return (to.index() - from.index() + Direction::kCount) % Direction::kCount;
}

/// Area value alg + pi_coeff * pi, in units of r^2.
struct AreaValue {
  QSqrt3 alg;
  QSqrt3 pi;

  AreaValue& operator+=(const AreaValue& rhs) {
    alg += rhs.alg;
    pi += rhs.pi;
    return *this;
  }
  friend AreaValue operator+(AreaValue lhs, const AreaValue& rhs) { return lhs += rhs; }
  friend bool operator==(const AreaValue&, const AreaValue&) = default;
};

AreaValue scale(const AreaValue& v, const QSqrt3& s);

/// Decimal evaluation with `digits` significant digits. Display only.
std::string approx(const AreaValue& v, int digits = 6);

/// Human-readable exact form, e.g. "16 + 0√3 + 1π".
std::string to_string(const AreaValue& v);

}  // namespace tangles
