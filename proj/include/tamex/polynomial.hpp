#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tamex/scalar.hpp"

namespace tamex {

using Exponents = std::vector<std::uint32_t>;

inline constexpr unsigned kDefaultDegreeCap = 64;

// Graded order: total degree first, then lexicographic with x1 most significant.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

class Polynomial {
 public:
  using Terms = std::map<Exponents, Scalar, MonomialOrder>;

  Polynomial(std::size_t n, Field f) : n_(n), field_(f) {}
  static Polynomial constant(std::size_t n, const Scalar& c);
  // Variable x_{i+1}; i is zero-based.
  static Polynomial variable(std::size_t n, Field f, std::size_t i);
  static Polynomial monomial(std::size_t n, const Exponents& e, const Scalar& c);

  std::size_t dim() const { return n_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  std::vector<Exponents> support() const;
  Scalar coefficient(const Exponents& e) const;
  Scalar constant_term() const;
  bool depends_on(std::size_t i) const;
  bool is_variable(std::size_t i) const;

  void add_term(const Exponents& e, const Scalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Scalar& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Highest monomial first; see the grammar in parse_polynomial.
  std::string str() const;
  std::size_t hash() const;

 private:
  void check_compatible(const Polynomial& o) const;

  std::size_t n_;
  Field field_;
  Terms terms_;
};

// P(g_1, ..., g_n). Throws DegreeCapExceeded when the result (or an
// intermediate power) exceeds degree_cap.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& g,
                      unsigned degree_cap = kDefaultDegreeCap);

// Terms joined by + or -, each term coef*x1^a*x2^b with coef like 3/4.
Polynomial parse_polynomial(std::string_view text, std::size_t n, Field f);
// Same, reporting errors relative to a position inside a larger file.
Polynomial parse_polynomial_at(std::string_view text, std::size_t n, Field f, std::size_t line,
                               std::size_t column_offset);

}  // namespace tamex
