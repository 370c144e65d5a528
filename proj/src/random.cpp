#include "tamex/random.hpp"

#include <algorithm>

namespace tamex {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Scalar random_scalar(Field f, Rng& rng, bool nonzero) {
  while (true) {
    Scalar s = f.is_rational() ? Scalar::from_rational(f, mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 3)))
                               : Scalar::from_int(f, uniform(rng, 0, static_cast<int>(f.characteristic()) - 1));
    if (!nonzero || !s.is_zero()) return s;
  }
}

Polynomial random_polynomial(std::size_t n, Field f, Rng& rng, unsigned max_terms, unsigned max_degree) {
  Polynomial p(n, f);
  unsigned terms = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(max_terms)));
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    unsigned deg = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_degree)));
    for (unsigned k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))];
    p = p + Polynomial::monomial(n, e, random_scalar(f, rng, true));
  }
  return p;
}

Weight random_weight(std::size_t n, Rng& rng, unsigned max_value) {
  Weight w;
  for (std::size_t k = 0; k < n; ++k)
    w.push_back(mpq_class(uniform(rng, 1, static_cast<int>(max_value) * 2), uniform(rng, 1, 2)));
  for (auto& x : w) x.canonicalize();
  return w;
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  Permutation p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TameWord random_triangular(std::size_t n, Field f, Rng& rng, unsigned max_degree) {
  Matrix d = identity_matrix(n, f);
  std::vector<Scalar> t;
  for (std::size_t k = 0; k < n; ++k) {
    d[k][k] = random_scalar(f, rng, true);
    t.push_back(uniform(rng, 0, 2) == 0 ? random_scalar(f, rng) : Scalar::zero(f));
  }
  TameWord w = TameWord::affine(d, t);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (uniform(rng, 0, 1) == 0) continue;
    Polynomial p(n, f);
    unsigned terms = static_cast<unsigned>(uniform(rng, 1, 2));
    for (unsigned k = 0; k < terms; ++k) {
      Exponents e(n, 0);
      unsigned deg = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(max_degree)));
      for (unsigned j = 0; j < deg; ++j) ++e[static_cast<std::size_t>(uniform(rng, static_cast<int>(i) + 1, static_cast<int>(n) - 1))];
      p = p + Polynomial::monomial(n, e, random_scalar(f, rng, true));
    }
    if (!p.is_zero()) w = compose(TameWord::elementary(i, p), w);
  }
  return w;
}

TameWord random_tame_word(std::size_t n, Field f, Rng& rng, unsigned length, unsigned max_degree) {
  TameWord w = TameWord::identity(n, f);
  for (unsigned k = 0; k < length; ++k) {
    int kind = uniform(rng, 0, 2);
    if (kind == 0) {
      Matrix a;
      do {
        a = zero_matrix(n, f);
        for (auto& row : a)
          for (auto& c : row) c = uniform(rng, 0, 1) ? random_scalar(f, rng) : Scalar::zero(f);
        for (std::size_t i = 0; i < n; ++i)
          if (uniform(rng, 0, 1)) a[i][i] = Scalar::one(f);
      } while (determinant(a).is_zero());
      std::vector<Scalar> t;
      for (std::size_t i = 0; i < n; ++i) t.push_back(uniform(rng, 0, 1) ? random_scalar(f, rng) : Scalar::zero(f));
      w = compose(w, TameWord::affine(a, t));
    } else if (kind == 1) {
      std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      Polynomial p(n, f);
      Exponents e(n, 0);
      unsigned deg = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(max_degree)));
      for (unsigned j = 0; j < deg; ++j) {
        std::size_t v = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
        ++e[v >= i ? v + 1 : v];
      }
      p = Polynomial::monomial(n, e, random_scalar(f, rng, true));
      w = compose(w, TameWord::elementary(i, p));
    } else {
      w = compose(w, TameWord::permutation(random_permutation(n, rng), f));
    }
  }
  return w;
}

AxiomReport check_valuation_axioms(std::size_t n, Field f, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  AxiomReport r;
  for (std::size_t t = 0; t < trials; ++t) {
    Weight a = random_weight(n, rng);
    Polynomial p = random_polynomial(n, f, rng), q = random_polynomial(n, f, rng);
    ValValue vp = nu_eval(a, p), vq = nu_eval(a, q);
    ValValue vpq = nu_eval(a, p * q), vsum = nu_eval(a, p + q);
    ++r.trials;
    // +inf absorbs under addition.
    ValValue expected = (vp && vq) ? ValValue(*vp + *vq) : std::nullopt;
    if (vpq != expected) ++r.multiplicativity_failures;
    if (vp && vq && vsum && *vsum < std::min(*vp, *vq)) ++r.ultrametric_failures;
    if (vsum && ((vp && !vq && *vsum < *vp) || (!vp && vq && *vsum < *vq))) ++r.ultrametric_failures;
  }
  return r;
}

}  // namespace tamex
