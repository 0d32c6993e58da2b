#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo an odd prime.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace trialg {

class Scalar;

/// Field descriptor. Either Q or F_p for an odd prime p < 2^31.
class Field {
 public:
  static Field rational() noexcept { return Field(0); }
  /// Throws InvalidParameter unless p is an odd prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return p_ != 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  /// Accepts "n", "-n" or "n/d". Throws InvalidParameter on malformed input.
  Scalar parse(std::string_view text) const;

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field field, long long value);

  static Scalar from_rational(mpq_class value);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws std::domain_error for zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  /// *this += a * b without a temporary Scalar.
  void add_product(const Scalar& a, const Scalar& b);
  /// *this -= a * b.
  void sub_product(const Scalar& a, const Scalar& b);

  const mpq_class& rational_value() const;
  std::uint64_t residue() const;

  /// Canonical text: "n" for integers, "n/d" otherwise; residues print as "v".
  std::string to_string() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& o) const;

  std::uint64_t p_ = 0;
  mpq_class q_;
  std::uint64_t v_ = 0;
};

}  // namespace trialg
