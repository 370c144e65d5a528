#include "tamex/scalar.hpp"

#include <cctype>
#include <functional>

#include "tamex/error.hpp"

namespace tamex {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "QQ" || text == "rationals") return rationals();
  std::uint64_t v = 0;
  if (text.empty()) throw PreconditionError("empty field name");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw PreconditionError("bad field name '" + std::string(text) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 0xffffffffULL) throw PreconditionError("field characteristic too large");
  }
  return prime(static_cast<std::uint32_t>(v));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar Scalar::zero(Field f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(mpz_class(std::to_string(v)));
  } else {
    long long p = f.characteristic();
    long long r = v % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  std::uint32_t p = f.characteristic();
  std::uint32_t den = mod_reduce(q.get_den(), p);
  if (den == 0) throw DivisionByZero("denominator " + q.get_den().get_str() + " vanishes in " + f.name());
  std::uint32_t num = mod_reduce(q.get_num(), p);
  s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) * mod_pow(den, p - 2, p) % p);
  return s;
}

Scalar Scalar::parse(Field f, std::string_view text) { return from_rational(f, parse_rational(text)); }

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ += o.q_;
  else
    s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % field_.characteristic());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ *= o.q_;
  else
    s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % field_.characteristic());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r = one(field_);
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const { return field_.is_rational() ? rational_str(q_) : std::to_string(r_); }

bool Scalar::is_negative_literal() const { return field_.is_rational() && q_ < 0; }

std::size_t Scalar::hash() const {
  if (!field_.is_rational()) return std::hash<std::uint32_t>()(r_);
  std::size_t h = mpz_get_ui(q_.get_num_mpz_t()) * 1000003u;
  h ^= mpz_get_ui(q_.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  if (q_ < 0) h = ~h;
  return h;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return PreconditionError("bad rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& k) {
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(start, k - start);
  };
  std::string whole = digits(i);
  mpq_class value;
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::string frac = digits(i);
    if (whole.empty() && frac.empty()) throw bad();
    mpz_class num(whole.empty() ? "0" : whole);
    mpz_class scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    num = num * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
    value = mpq_class(num, scale);
  } else if (i < s.size() && s[i] == '/') {
    ++i;
    std::string den = digits(i);
    if (whole.empty() || den.empty()) throw bad();
    mpz_class d(den);
    if (d == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    value = mpq_class(mpz_class(whole), d);
  } else {
    if (whole.empty()) throw bad();
    value = mpq_class(mpz_class(whole));
  }
  if (i != s.size()) throw bad();
  value.canonicalize();
  return neg ? mpq_class(-value) : value;
}

}  // namespace tamex
