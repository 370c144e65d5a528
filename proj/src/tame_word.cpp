#include "tamex/tame_word.hpp"

#include <algorithm>

#include "tamex/error.hpp"

namespace tamex {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Polynomial> identity_components(std::size_t n, Field f) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, f, i));
  return c;
}

}  // namespace

void validate_generator(const Generator& g, std::size_t n, Field f) {
  std::visit(overloaded{
                 [&](const AffineGen& a) {
                   if (a.a.size() != n || a.t.size() != n)
                     throw DimensionMismatch("affine generator has wrong size");
                   for (const auto& row : a.a)
                     if (row.size() != n) throw DimensionMismatch("affine matrix is not square");
                   for (const auto& row : a.a)
                     for (const auto& c : row)
                       if (!(c.field() == f)) throw FieldMismatch("affine entry field mismatch");
                   for (const auto& c : a.t)
                     if (!(c.field() == f)) throw FieldMismatch("affine translation field mismatch");
                   if (determinant(a.a).is_zero()) throw PreconditionError("affine matrix is singular");
                 },
                 [&](const ElementaryGen& e) {
                   if (e.i >= n) throw DimensionMismatch("elementary index out of range");
                   if (e.p.dim() != n) throw DimensionMismatch("elementary polynomial has wrong dimension");
                   if (!(e.p.field() == f)) throw FieldMismatch("elementary polynomial field mismatch");
                   if (e.p.depends_on(e.i))
                     throw PreconditionError("elementary polynomial involves x" + std::to_string(e.i + 1));
                 },
                 [&](const PermutationGen& p) {
                   if (p.sigma.size() != n) throw DimensionMismatch("permutation has wrong size");
                   if (!is_permutation(p.sigma)) throw PreconditionError("not a permutation");
                 },
             },
             g);
}

std::vector<Polynomial> generator_components(const Generator& g, std::size_t n, Field f) {
  return std::visit(overloaded{
                        [&](const AffineGen& a) {
                          std::vector<Polynomial> c;
                          for (std::size_t i = 0; i < n; ++i) {
                            Polynomial p = Polynomial::constant(n, a.t[i]);
                            for (std::size_t j = 0; j < n; ++j)
                              p = p + Polynomial::variable(n, f, j).scale(a.a[i][j]);
                            c.push_back(std::move(p));
                          }
                          return c;
                        },
                        [&](const ElementaryGen& e) {
                          auto c = identity_components(n, f);
                          c[e.i] = c[e.i] + e.p;
                          return c;
                        },
                        [&](const PermutationGen& p) {
                          Permutation inv = perm_inverse(p.sigma);
                          std::vector<Polynomial> c;
                          for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, f, inv[i]));
                          return c;
                        },
                    },
                    g);
}

Generator generator_inverse(const Generator& g, std::size_t n, Field f) {
  (void)n;
  (void)f;
  return std::visit(overloaded{
                        [&](const AffineGen& a) -> Generator {
                          Matrix inv = inverse(a.a);
                          std::vector<Scalar> t = matvec(inv, a.t);
                          for (auto& s : t) s = -s;
                          return AffineGen{inv, t};
                        },
                        [&](const ElementaryGen& e) -> Generator { return ElementaryGen{e.i, -e.p}; },
                        [&](const PermutationGen& p) -> Generator { return PermutationGen{perm_inverse(p.sigma)}; },
                    },
                    g);
}

std::string generator_line(const Generator& g) {
  return std::visit(overloaded{
                        [](const AffineGen& a) {
                          std::string t = "[";
                          for (std::size_t i = 0; i < a.t.size(); ++i) t += (i ? "," : "") + a.t[i].str();
                          return "aff " + matrix_str(a.a) + " " + t + "]";
                        },
                        [](const ElementaryGen& e) {
                          return "elem " + std::to_string(e.i + 1) + " \"" + e.p.str() + "\"";
                        },
                        [](const PermutationGen& p) { return "perm " + perm_str(p.sigma); },
                    },
                    g);
}

TameWord::TameWord(std::size_t n, Field f, unsigned degree_cap)
    : n_(n), field_(f), degree_cap_(degree_cap), cache_(std::make_shared<Cache>()) {
  if (n < 1) throw DimensionMismatch("dimension must be positive");
}

TameWord TameWord::from_generator(std::size_t n, Field f, Generator g, unsigned degree_cap) {
  validate_generator(g, n, f);
  TameWord w(n, f, degree_cap);
  w.gens_.push_back(std::move(g));
  return w;
}

TameWord TameWord::affine(const Matrix& a, const std::vector<Scalar>& t, unsigned degree_cap) {
  if (a.empty()) throw DimensionMismatch("empty matrix");
  return from_generator(a.size(), a[0][0].field(), AffineGen{a, t}, degree_cap);
}

TameWord TameWord::linear(const Matrix& a, unsigned degree_cap) {
  if (a.empty()) throw DimensionMismatch("empty matrix");
  Field f = a[0][0].field();
  return affine(a, std::vector<Scalar>(a.size(), Scalar::zero(f)), degree_cap);
}

TameWord TameWord::translation(const std::vector<Scalar>& t, unsigned degree_cap) {
  if (t.empty()) throw DimensionMismatch("empty translation");
  Field f = t[0].field();
  return affine(identity_matrix(t.size(), f), t, degree_cap);
}

TameWord TameWord::elementary(std::size_t i, const Polynomial& p, unsigned degree_cap) {
  return from_generator(p.dim(), p.field(), ElementaryGen{i, p}, degree_cap);
}

TameWord TameWord::elementary(std::size_t n, Field f, std::size_t i, std::string_view p, unsigned degree_cap) {
  return elementary(i, parse_polynomial(p, n, f), degree_cap);
}

TameWord TameWord::permutation(const Permutation& sigma, Field f, unsigned degree_cap) {
  return from_generator(sigma.size(), f, PermutationGen{sigma}, degree_cap);
}

void TameWord::seed(std::vector<Polynomial> comps) const {
  std::call_once(cache_->once, [&] { cache_->comps = std::move(comps); });
}

const std::vector<Polynomial>& TameWord::components() const {
  std::call_once(cache_->once, [&] {
    std::vector<Polynomial> c = identity_components(n_, field_);
    bool first = true;
    for (const auto& g : gens_) {
      auto gc = generator_components(g, n_, field_);
      if (first) {
        c = std::move(gc);
        first = false;
        continue;
      }
      for (auto& ci : c) ci = substitute(ci, gc, degree_cap_);
    }
    cache_->comps = std::move(c);
  });
  return cache_->comps;
}

bool TameWord::is_identity() const {
  const auto& c = components();
  for (std::size_t i = 0; i < n_; ++i)
    if (!c[i].is_variable(i)) return false;
  return true;
}

int TameWord::degree() const {
  int d = 0;
  for (const auto& c : components()) d = std::max(d, c.degree());
  return d;
}

std::size_t TameWord::hash() const {
  std::size_t h = n_;
  for (const auto& c : components()) h = h * 0x100000001b3ULL ^ c.hash();
  return h;
}

std::string TameWord::str() const {
  std::string out = "(";
  const auto& c = components();
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].str();
  return out + ")";
}

std::string TameWord::word_text() const {
  if (gens_.empty()) return "id\n";
  std::string out;
  for (const auto& g : gens_) out += generator_line(g) + "\n";
  return out;
}

TameWord compose(const TameWord& f, const TameWord& g) {
  if (f.n_ != g.n_) throw DimensionMismatch("composing words of different dimensions");
  if (!(f.field_ == g.field_)) throw FieldMismatch("composing words over different fields");
  TameWord r(f.n_, f.field_, std::min(f.degree_cap_, g.degree_cap_));
  r.gens_ = f.gens_;
  r.gens_.insert(r.gens_.end(), g.gens_.begin(), g.gens_.end());
  std::vector<Polynomial> c;
  const auto& gc = g.components();
  for (const auto& fi : f.components()) c.push_back(substitute(fi, gc, r.degree_cap_));
  r.seed(std::move(c));
  return r;
}

TameWord invert(const TameWord& f) {
  TameWord r(f.n_, f.field_, f.degree_cap_);
  for (auto it = f.gens_.rbegin(); it != f.gens_.rend(); ++it)
    r.gens_.push_back(generator_inverse(*it, f.n_, f.field_));
  return r;
}

bool verify_bijection(const TameWord& f) { return compose(f, invert(f)).is_identity(); }

TameWord conjugate(const TameWord& a, const TameWord& b) { return compose(compose(a, b), invert(a)); }

Matrix linear_part(const TameWord& f) {
  std::size_t n = f.dim();
  Matrix m = zero_matrix(n, f.field());
  const auto& c = f.components();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      m[i][j] = c[i].coefficient(e);
    }
  return m;
}

std::vector<Scalar> constant_terms(const TameWord& f) {
  std::vector<Scalar> t;
  for (const auto& c : f.components()) t.push_back(c.constant_term());
  return t;
}

Matrix diff_at_origin(const TameWord& f) {
  for (const auto& c : constant_terms(f))
    if (!c.is_zero()) throw PreconditionError("automorphism does not fix the origin");
  return linear_part(f);
}

Permutation bruhat_permutation(const Matrix& a0) {
  std::size_t n = a0.size();
  Matrix a = a0;
  Permutation sigma(n);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = n; i-- > 0;) {
      if (!used[i] && !a[i][j].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) throw DivisionByZero("singular matrix has no Bruhat cell");
    sigma[j] = piv;
    used[piv] = true;
    // Column operations with later columns: right multiplication by B.
    Scalar inv = a[piv][j].inverse();
    for (std::size_t k = j + 1; k < n; ++k) {
      if (a[piv][k].is_zero()) continue;
      Scalar factor = a[piv][k] * inv;
      for (std::size_t r = 0; r < n; ++r) a[r][k] -= factor * a[r][j];
    }
  }
  return sigma;
}

std::pair<TameWord, TameWord> split_translation(const TameWord& f) {
  std::size_t n = f.dim();
  // c = f^-1(0): constant terms of the inverse.
  std::vector<Scalar> c = constant_terms(invert(f));
  std::vector<Scalar> minus_c;
  for (const auto& s : c) minus_c.push_back(-s);
  TameWord t = TameWord::translation(minus_c, f.degree_cap());
  TameWord t_inv = TameWord::translation(c, f.degree_cap());
  bool trivial = true;
  for (const auto& s : c) trivial = trivial && s.is_zero();
  if (trivial) return {f, TameWord::identity(n, f.field(), f.degree_cap())};
  return {compose(f, t_inv), t};
}

}  // namespace tamex
