#pragma once

// Exact scalars: the prime field F_p (p < 2^31) or the rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace pcx {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Scalar;

/// Descriptor of the base field. p == 0 means the rationals.
class Field {
 public:
  Field() = default;
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field{}; }

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  /// Number of elements, or nullopt for Q.
  std::optional<std::uint64_t> size() const noexcept {
    if (p_ == 0) return std::nullopt;
    return p_;
  }
  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const Rational& q) const;
  /// The i-th element in a fixed enumeration of F_p (i < p). Only for finite fields.
  Scalar element(std::uint64_t i) const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const noexcept { return p_ != 0 ? r_ == 0 : q_.is_zero(); }
  bool is_one() const noexcept { return p_ != 0 ? r_ == 1 : q_ == 1; }

  /// Canonical representative in [0, p) for F_p.
  std::uint32_t residue() const noexcept { return r_; }
  const Rational& rational() const noexcept { return q_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.p_ == b.p_ && (a.p_ != 0 ? a.r_ == b.r_ : a.q_ == b.q_);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) noexcept { return !(a == b); }

  /// Signed display: F_p residues above p/2 print as negatives ("-1" rather than "4").
  std::string to_string() const;

 private:
  friend class Field;
  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  Rational q_;
};

}  // namespace pcx
