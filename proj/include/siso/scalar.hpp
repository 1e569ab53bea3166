#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "siso/errors.hpp"

namespace siso {

using Rational = boost::multiprecision::cpp_rational;

// Exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt d),
// d square-free and > 1. Canonical form keeps d == 0 whenever b == 0, so
// componentwise equality is field equality. All comparisons are exact: the
// sign of a + b*sqrt(d) is decided by comparing a^2 against b^2*d.
class Scalar {
public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long long n) : a_(n), b_(0), d_(0) {}
  explicit Scalar(Rational r) : a_(std::move(r)), b_(0), d_(0) {}

  // a + b*sqrt(d); throws not_square_free for bad d.
  static Scalar quadratic(Rational a, Rational b, std::int64_t d);

  static Scalar ratio(long long num, long long den);

  const Rational& base() const { return a_; }
  const Rational& coef() const { return b_; }
  std::int64_t rad() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Scalar& o) const { return o < *this; }
  bool operator<=(const Scalar& o) const { return !(o < *this); }
  bool operator>=(const Scalar& o) const { return !(*this < o); }

  double to_double() const;
  std::string str() const;  // canonical text; document grammar round-trips it

private:
  Scalar(Rational a, Rational b, std::int64_t d);
  void normalize();
  // The common field of two operands, or field_mismatch.
  static std::int64_t merge_rad(const Scalar& x, const Scalar& y);

  Rational a_, b_;
  std::int64_t d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar min(const Scalar& x, const Scalar& y) { return x < y ? x : y; }
inline Scalar max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }
inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

bool square_free(std::int64_t d);

}  // namespace siso
