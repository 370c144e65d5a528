#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tamex/matrix.hpp"
#include "tamex/polynomial.hpp"

namespace tamex {

// x -> A x + t
struct AffineGen {
  Matrix a;
  std::vector<Scalar> t;
};

// x_i -> x_i + p, p independent of x_i; i is zero-based.
struct ElementaryGen {
  std::size_t i;
  Polynomial p;
};

// Components (x_{s^-1(1)}, ..., x_{s^-1(n)}).
struct PermutationGen {
  Permutation sigma;
};

using Generator = std::variant<AffineGen, ElementaryGen, PermutationGen>;

std::vector<Polynomial> generator_components(const Generator& g, std::size_t n, Field f);
Generator generator_inverse(const Generator& g, std::size_t n, Field f);
void validate_generator(const Generator& g, std::size_t n, Field f);
std::string generator_line(const Generator& g);

// A tame automorphism stored as a word g_1 g_2 ... g_k meaning g_1 o g_2 o ... o g_k.
// Components are expanded once on first use and shared between copies.
class TameWord {
 public:
  TameWord(std::size_t n, Field f, unsigned degree_cap = kDefaultDegreeCap);

  static TameWord identity(std::size_t n, Field f, unsigned degree_cap = kDefaultDegreeCap) {
    return TameWord(n, f, degree_cap);
  }
  static TameWord from_generator(std::size_t n, Field f, Generator g,
                                 unsigned degree_cap = kDefaultDegreeCap);
  static TameWord affine(const Matrix& a, const std::vector<Scalar>& t,
                         unsigned degree_cap = kDefaultDegreeCap);
  static TameWord linear(const Matrix& a, unsigned degree_cap = kDefaultDegreeCap);
  static TameWord translation(const std::vector<Scalar>& t, unsigned degree_cap = kDefaultDegreeCap);
  static TameWord elementary(std::size_t i, const Polynomial& p, unsigned degree_cap = kDefaultDegreeCap);
  static TameWord permutation(const Permutation& sigma, Field f, unsigned degree_cap = kDefaultDegreeCap);
  // Text form of a single elementary map, e.g. elementary(n, f, 0, "x2^3").
  static TameWord elementary(std::size_t n, Field f, std::size_t i, std::string_view p,
                             unsigned degree_cap = kDefaultDegreeCap);

  std::size_t dim() const { return n_; }
  Field field() const { return field_; }
  unsigned degree_cap() const { return degree_cap_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t length() const { return gens_.size(); }

  const std::vector<Polynomial>& components() const;
  bool is_identity() const;
  int degree() const;

  bool operator==(const TameWord& o) const { return n_ == o.n_ && field_ == o.field_ && components() == o.components(); }
  bool operator!=(const TameWord& o) const { return !(*this == o); }
  std::size_t hash() const;

  // "(x1 + x2^2, x2)"
  std::string str() const;
  // Word-file text, one generator per line.
  std::string word_text() const;

 private:
  friend TameWord compose(const TameWord& f, const TameWord& g);
  friend TameWord invert(const TameWord& f);

  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> comps;
  };
  void seed(std::vector<Polynomial> comps) const;

  std::size_t n_;
  Field field_;
  unsigned degree_cap_;
  std::vector<Generator> gens_;
  std::shared_ptr<Cache> cache_;
};

struct TameWordHash {
  std::size_t operator()(const TameWord& w) const { return w.hash(); }
};

// (f o g)_i = f_i(g_1, ..., g_n)
TameWord compose(const TameWord& f, const TameWord& g);
TameWord invert(const TameWord& f);
// Checks f o f^-1 = id componentwise.
bool verify_bijection(const TameWord& f);
// Conjugate a o b o a^-1.
TameWord conjugate(const TameWord& a, const TameWord& b);

// Matrix of linear parts; rows are components.
Matrix diff_at_origin(const TameWord& f);
// Linear part regardless of constant terms.
Matrix linear_part(const TameWord& f);
std::vector<Scalar> constant_terms(const TameWord& f);

// Unique sigma with a in B sigma B, B upper triangular.
Permutation bruhat_permutation(const Matrix& a);

// f = f0 o t with t the translation sending f^-1(0) to 0.
std::pair<TameWord, TameWord> split_translation(const TameWord& f);

// Word files: lines `aff [[..],[..]] [..]`, `elem i "P"`, `perm [..]`, `id`;
// '#' starts a comment; composition left-to-right.
TameWord parse_word(std::string_view text, std::size_t n, Field f, unsigned degree_cap = kDefaultDegreeCap);
// Several words separated by lines containing only `---`.
std::vector<TameWord> parse_word_list(std::string_view text, std::size_t n, Field f,
                                      unsigned degree_cap = kDefaultDegreeCap);

}  // namespace tamex
