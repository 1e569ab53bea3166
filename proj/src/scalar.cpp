#include "siso/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace siso {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::none: return "none";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::not_square_free: return "not_square_free";
    case Errc::non_positive_length: return "non_positive_length";
    case Errc::cycle_detected: return "cycle_detected";
    case Errc::disconnected: return "disconnected";
    case Errc::bad_index: return "bad_index";
    case Errc::host_mismatch: return "host_mismatch";
    case Errc::outside_host: return "outside_host";
    case Errc::isometry_violation: return "isometry_violation";
    case Errc::containment_violation: return "containment_violation";
    case Errc::anchor_deficit: return "anchor_deficit";
    case Errc::unreduced_word: return "unreduced_word";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::empty_output: return "empty_output";
    case Errc::not_a_splitting_point: return "not_a_splitting_point";
    case Errc::freeness_violation: return "freeness_violation";
    case Errc::keane_violation: return "keane_violation";
    case Errc::invalid_iet: return "invalid_iet";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    case Errc::usage_error: return "usage_error";
    case Errc::internal_error: return "internal_error";
  }
  return "unknown";
}

bool square_free(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  normalize();
}

void Scalar::normalize() {
  if (b_ == 0) d_ = 0;
  if (d_ == 0 && b_ != 0) fail(Errc::internal_error, "irrational part without a radicand");
}

Scalar Scalar::quadratic(Rational a, Rational b, std::int64_t d) {
  if (b == 0) return Scalar(std::move(a));
  require(square_free(d), Errc::not_square_free,
          "radicand " + std::to_string(d) + " must be square-free and > 1");
  return Scalar(std::move(a), std::move(b), d);
}

Scalar Scalar::ratio(long long num, long long den) {
  require(den != 0, Errc::division_by_zero, "rational with zero denominator");
  return Scalar(Rational(num, den));
}

std::int64_t Scalar::merge_rad(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  fail(Errc::field_mismatch, "cannot combine sqrt(" + std::to_string(x.d_) +
                                 ") with sqrt(" + std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(d) decided by squares. Equality would
  // force d to be a rational square, which square_free rules out.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * d_;
  if (lhs == rhs) fail(Errc::internal_error, "radicand turned out to be a square");
  return lhs > rhs ? sa : sb;
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, d_); }

Scalar Scalar::operator+(const Scalar& o) const {
  std::int64_t d = merge_rad(*this, o);
  return Scalar(a_ + o.a_, b_ + o.b_, d);
}

Scalar Scalar::operator-(const Scalar& o) const {
  std::int64_t d = merge_rad(*this, o);
  return Scalar(a_ - o.a_, b_ - o.b_, d);
}

Scalar Scalar::operator*(const Scalar& o) const {
  std::int64_t d = merge_rad(*this, o);
  Rational rad(d);
  return Scalar(a_ * o.a_ + b_ * o.b_ * rad, a_ * o.b_ + b_ * o.a_, d);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero scalar");
  std::int64_t d = merge_rad(*this, o);
  // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  if (norm == 0) fail(Errc::internal_error, "zero field norm for nonzero scalar");
  Scalar conj(o.a_ / norm, -o.b_ / norm, d);
  return *this * conj;
}

bool Scalar::operator==(const Scalar& o) const {
  return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

double Scalar::to_double() const {
  double v = a_.convert_to<double>();
  if (d_ != 0) v += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
  return v;
}

namespace {
std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}
}  // namespace

std::string Scalar::str() const {
  if (d_ == 0) return rational_str(a_);
  std::string tail = rational_str(boost::multiprecision::abs(b_));
  tail += "*sqrt(" + std::to_string(d_) + ")";
  if (a_ == 0) return (b_ < 0 ? "-" : "") + tail;
  return rational_str(a_) + (b_ < 0 ? "-" : "+") + tail;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace siso
