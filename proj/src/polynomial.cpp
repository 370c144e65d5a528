#include "tamex/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tamex/error.hpp"

namespace tamex {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Polynomial Polynomial::constant(std::size_t n, const Scalar& c) {
  Polynomial p(n, c.field());
  p.add_term(Exponents(n, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, Field f, std::size_t i) {
  if (i >= n) throw DimensionMismatch("variable index out of range");
  Exponents e(n, 0);
  e[i] = 1;
  return monomial(n, e, Scalar::one(f));
}

Polynomial Polynomial::monomial(std::size_t n, const Exponents& e, const Scalar& c) {
  Polynomial p(n, c.field());
  p.add_term(e, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

std::vector<Exponents> Polynomial::support() const {
  std::vector<Exponents> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Exponents(n_, 0)); }

bool Polynomial::depends_on(std::size_t i) const {
  for (const auto& [e, c] : terms_)
    if (e[i] > 0) return true;
  return false;
}

bool Polynomial::is_variable(std::size_t i) const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (!c.is_one()) return false;
  for (std::size_t k = 0; k < n_; ++k)
    if (e[k] != (k == i ? 1u : 0u)) return false;
  return true;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != n_) throw DimensionMismatch("monomial has " + std::to_string(e.size()) + " exponents, expected " + std::to_string(n_));
  if (!(c.field() == field_)) throw FieldMismatch("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (n_ != o.n_) throw DimensionMismatch("polynomial dimensions differ: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial fields differ: " + field_.name() + " vs " + o.field_.name());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(n_, field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(n_, field_);
  Exponents e(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t k = 0; k < n_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (!(c.field() == field_)) throw FieldMismatch("scale factor field mismatch");
  Polynomial r(n_, field_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.add_term(e, a * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(n_, Scalar::one(field_));
  Polynomial b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c.is_negative_literal();
    Scalar mag = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string factors;
    for (std::size_t k = 0; k < n_; ++k) {
      if (e[k] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(k + 1);
      if (e[k] > 1) factors += "^" + std::to_string(e[k]);
    }
    if (factors.empty())
      out += mag.str();
    else if (mag.is_one())
      out += factors;
    else
      out += mag.str() + "*" + factors;
  }
  return out;
}

std::size_t Polynomial::hash() const {
  std::size_t h = n_ * 31 + field_.characteristic();
  for (const auto& [e, c] : terms_) {
    for (auto x : e) h = h * 1315423911u + x;
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& g, unsigned degree_cap) {
  const std::size_t n = p.dim();
  if (g.size() != n) throw DimensionMismatch("substitution needs " + std::to_string(n) + " polynomials, got " + std::to_string(g.size()));
  if (g.empty()) return p;
  const std::size_t m = g[0].dim();
  for (const auto& gi : g) {
    if (gi.dim() != m) throw DimensionMismatch("substituted polynomials have different dimensions");
    if (!(gi.field() == p.field())) throw FieldMismatch("substituted polynomial field mismatch");
  }
  // Powers of each g_j, built on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t j, unsigned k) -> const Polynomial& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(Polynomial::constant(m, Scalar::one(p.field())));
    while (pw.size() <= k) {
      pw.push_back(pw.back() * g[j]);
      if (pw.back().degree() > static_cast<int>(degree_cap))
        throw DegreeCapExceeded("substitution exceeds degree cap " + std::to_string(degree_cap));
    }
    return pw[k];
  };
  Polynomial result(m, p.field());
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      term = term * power(j, e[j]);
      if (term.degree() > static_cast<int>(degree_cap))
        throw DegreeCapExceeded("substitution exceeds degree cap " + std::to_string(degree_cap));
    }
    result = result + term;
  }
  return result;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t n, Field f, std::size_t line, std::size_t col0)
      : s_(s), n_(n), f_(f), line_(line), col0_(col0) {}

  Polynomial run() {
    Polynomial out(n_, f_);
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        neg = s_[pos_] == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, neg ? -c : c);
      skip_ws();
      if (pos_ >= s_.size()) break;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::pair<Exponents, Scalar> term() {
    Scalar coef = Scalar::one(f_);
    Exponents e(n_, 0);
    if (peek_digit()) {
      std::size_t at = pos_;
      std::string num = digits();
      std::string text = num;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        text += "/" + digits();
      }
      try {
        coef = Scalar::parse(f_, text);
      } catch (const DivisionByZero& ex) {
        pos_ = at;
        fail(ex.what());
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        variable_factor(e);
      } else {
        return {e, coef};
      }
    } else {
      variable_factor(e);
    }
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        variable_factor(e);
      } else {
        break;
      }
    }
    return {e, coef};
  }

  void variable_factor(Exponents& e) {
    if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected a variable x<i>");
    ++pos_;
    std::size_t at = pos_;
    std::string idx = digits();
    unsigned long i = std::stoul(idx);
    if (i < 1 || i > n_) {
      pos_ = at;
      fail("variable x" + idx + " out of range 1.." + std::to_string(n_));
    }
    unsigned long k = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      k = std::stoul(digits());
    }
    e[i - 1] += static_cast<std::uint32_t>(k);
  }

  std::string_view s_;
  std::size_t n_;
  Field f_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n, Field f) {
  return PolyParser(text, n, f, 1, 0).run();
}

Polynomial parse_polynomial_at(std::string_view text, std::size_t n, Field f, std::size_t line,
                               std::size_t column_offset) {
  return PolyParser(text, n, f, line, column_offset).run();
}

}  // namespace tamex
