#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tamex {

// Base field: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  // "Q" or a prime written in decimal.
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;
  bool operator==(const Field&) const = default;

 private:
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long v);
  static Scalar from_rational(Field f, const mpq_class& q);
  // Accepts "a" or "a/b" with optional sign.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Only meaningful over Q.
  const mpq_class& rational() const { return q_; }
  // Only meaningful over F_p.
  std::uint32_t residue() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Q: canonical p/q (q omitted when 1). F_p: residue in [0, p).
  std::string str() const;
  // True when str() starts with '-'.
  bool is_negative_literal() const;
  std::size_t hash() const;

 private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint32_t r_ = 0;
  Field field_;
};

std::string rational_str(const mpq_class& q);
mpq_class parse_rational(std::string_view text);

}  // namespace tamex
