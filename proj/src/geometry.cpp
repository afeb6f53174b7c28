#include "tangles/geometry.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tangles {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(num, den);
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& rhs) {
  // (a + b r)(c + d r) = (ac + 3bd) + (ad + bc) r
  Rational a = a_ * rhs.a_ + 3 * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

int QSqrt3::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Mixed signs: the larger of a^2 and 3b^2 wins. They are never equal
  // because sqrt(3) is irrational.
  const Rational a2 = a_ * a_;
  const Rational b2 = 3 * b_ * b_;
  return b2 > a2 ? sb : sa;
}

double QSqrt3::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(3.0);
}

std::string to_string(const QSqrt3& x) {
  return to_string(x.a()) + " + " + to_string(x.b()) + "√3";
}

std::strong_ordering compare(const QSqrt3& lhs, const QSqrt3& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const QSqrt3& sqrt3() {
  static const QSqrt3 value(0, 1);
  return value;
}

ExactPoint scale(const ExactPoint& p, const QSqrt3& s) { return {p.x * s, p.y * s}; }

ExactPoint midpoint(const ExactPoint& p, const ExactPoint& q) {
  const QSqrt3 half(Rational(1, 2));
  return scale(p + q, half);
}

QSqrt3 dot(const ExactPoint& p, const ExactPoint& q) { return p.x * q.x + p.y * q.y; }

QSqrt3 cross(const ExactPoint& p, const ExactPoint& q) { return p.x * q.y - p.y * q.x; }

QSqrt3 dist_squared(const ExactPoint& p, const ExactPoint& q) {
  const ExactPoint d = p - q;
  return dot(d, d);
}

ExactPoint Direction::unit() const {
  // cos(30k) for k = 0..11; sin(30k) = cos(30(k - 3)).
  static const std::array<QSqrt3, 12> cosines = [] {
    const Rational h(1, 2);
    return std::array<QSqrt3, 12>{
        QSqrt3(1),        QSqrt3(0, h),  QSqrt3(h),  QSqrt3(0),        QSqrt3(-h),        QSqrt3(0, -h),
        QSqrt3(-1),       QSqrt3(0, -h), QSqrt3(-h), QSqrt3(0),        QSqrt3(h),         QSqrt3(0, h)};
  }();
  return {cosines[static_cast<std::size_t>(k_)], cosines[static_cast<std::size_t>((k_ + 9) % 12)]};
}

AreaValue scale(const AreaValue& v, const QSqrt3& s) { return {v.alg * s, v.pi * s}; }

std::string approx(const AreaValue& v, int digits) {
  const long double value = static_cast<long double>(v.alg.to_double()) +
                            static_cast<long double>(v.pi.to_double()) * 3.14159265358979323846L;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, value);
  return buf;
}

namespace {

std::string coefficient(const Rational& q) {
  const std::string s = to_string(abs(q));
  return boost::multiprecision::denominator(q) == 1 ? s : "(" + s + ")";
}

std::string signed_term(const Rational& q, const std::string& suffix) {
  return (q < 0 ? " - " : " + ") + coefficient(q) + suffix;
}

}  // namespace

std::string to_string(const AreaValue& v) {
  std::string out = (v.alg.a() < 0 ? "-" : "") + coefficient(v.alg.a());
  out += signed_term(v.alg.b(), "√3");
  if (v.pi.b() == 0) {
    out += signed_term(v.pi.a(), "π");
  } else {
    out += " + (" + to_string(v.pi.a()) + signed_term(v.pi.b(), "√3") + ")π";
  }
  return out;
}

}  // namespace tangles
