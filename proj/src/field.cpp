#include "pcx/field.hpp"

#include "pcx/error.hpp"

namespace pcx {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void check_same(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw Error(ErrorCode::ShapeMismatch, "scalars from different fields");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorCode::Semantic, "field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  Scalar s;
  s.p_ = p_;
  if (p_ != 0) {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    s.r_ = static_cast<std::uint32_t>(m);
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Field::from_rational(const Rational& q) const {
  if (p_ == 0) {
    Scalar s;
    s.q_ = q;
    return s;
  }
  BigInt num = boost::multiprecision::numerator(q) % p_;
  BigInt den = boost::multiprecision::denominator(q) % p_;
  if (num < 0) num += p_;
  if (den == 0) throw Error(ErrorCode::Semantic, "denominator divisible by the characteristic");
  return from_int(num.convert_to<std::int64_t>()) / from_int(den.convert_to<std::int64_t>());
}

Scalar Field::element(std::uint64_t i) const {
  if (p_ == 0) throw Error(ErrorCode::Semantic, "cannot enumerate the rationals");
  return from_int(static_cast<std::int64_t>(i % p_));
}

Field Scalar::field() const { return Field(p_); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ != 0)
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(p_, o.p_);
  if (p_ != 0) {
    std::uint64_t t = std::uint64_t(r_) + o.r_;
    r_ = static_cast<std::uint32_t>(t >= p_ ? t - p_ : t);
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(p_, o.p_);
  if (p_ != 0)
    r_ = r_ >= o.r_ ? r_ - o.r_ : static_cast<std::uint32_t>(std::uint64_t(r_) + p_ - o.r_);
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(p_, o.p_);
  if (p_ != 0)
    r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % p_);
  else
    q_ *= o.q_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Semantic, "division by zero");
  Scalar s = *this;
  if (p_ != 0)
    s.r_ = pow_mod(r_, p_ - 2, p_);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const {
  if (p_ != 0) {
    if (r_ > p_ / 2) return "-" + std::to_string(p_ - r_);
    return std::to_string(r_);
  }
  return q_.str();
}

}  // namespace pcx
