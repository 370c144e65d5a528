#include "tamex/stabilizer.hpp"

#include <functional>

#include "tamex/error.hpp"
#include "tamex/group.hpp"
#include "tamex/local_geometry.hpp"

namespace tamex {

namespace {

void require_sorted(const Weight& a) {
  validate_weight(a);
  if (!is_sorted_weight(a)) throw PreconditionError("weight [" + weight_str(a) + "] is not sorted");
}

void require_dim(const TameWord& f, const Weight& a) {
  if (f.dim() != a.size()) throw DimensionMismatch("word and weight dimensions differ");
}

mpq_class weighted_degree(const Exponents& e, const Weight& a) {
  mpq_class s = 0;
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j]) s += a[j] * e[j];
  return s;
}

// Canonical (m, p, 1) shape with m > p > 1.
bool mp1_shape(const Weight& a) {
  if (a.size() != 3 || !is_sorted_weight(a)) return false;
  Weight c = scaled_to_min_one(a);
  return c[2] == 1 && c[1] > 1 && c[0] > c[1];
}

void require_mp1(const Weight& a) {
  if (!mp1_shape(a)) throw PreconditionError("weight [" + weight_str(a) + "] is not of the shape (m,p,1) with m > p > 1");
}

// Nonconstant terms of f_i - x_i obey the block and weight rules; strict bounds the weight test.
bool triangular_bounded(const TameWord& f, const Weight& a, bool strict) {
  BlockStructure bs = block_structure(a);
  const auto& comps = f.components();
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial rest = comps[i] - Polynomial::variable(n, f.field(), i);
    for (const auto& [e, c] : rest.terms()) {
      if (total_degree(e) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] && bs.block_of[j] <= bs.block_of[i]) return false;
      mpq_class w = weighted_degree(e, a);
      if (strict ? w >= a[i] : w > a[i]) return false;
    }
  }
  return true;
}

std::string not_fixing_reason(const TameWord& f, const Weight& a) {
  FixedRegion region = fixed_inequalities(f);
  if (region.infeasible) return region.infeasible_reason;
  if (const auto* q = region.violated(a)) return "violates " + q->str();
  return "";
}

void require_fixes(const TameWord& f, const Weight& a) {
  if (!fixes(f, a))
    throw PreconditionError(f.str() + " does not fix [" + weight_str(a) + "]: " + not_fixing_reason(f, a));
}

}  // namespace

BlockStructure block_structure(const Weight& a) {
  require_sorted(a);
  BlockStructure bs;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (bs.gamma.empty() || a[k] != bs.gamma.back()) {
      bs.gamma.push_back(a[k]);
      bs.mult.push_back(0);
    }
    ++bs.mult.back();
    bs.block_of.push_back(bs.gamma.size() - 1);
  }
  return bs;
}

bool in_M_alpha(const TameWord& f, const Weight& a) {
  require_sorted(a);
  require_dim(f, a);
  return triangular_bounded(f, a, false);
}

bool in_L_alpha(const TameWord& f, const Weight& a) {
  require_sorted(a);
  require_dim(f, a);
  BlockStructure bs = block_structure(a);
  const auto& comps = f.components();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (const auto& [e, c] : comps[i].terms()) {
      if (total_degree(e) != 1) return false;
      for (std::size_t j = 0; j < f.dim(); ++j)
        if (e[j] && bs.block_of[j] != bs.block_of[i]) return false;
    }
  return true;
}

bool in_N_alpha(const TameWord& f, const Weight& a) {
  require_mp1(a);
  require_dim(f, a);
  return triangular_bounded(f, a, true);
}

StabDecomposition decompose_stabilizer(const TameWord& f, const Weight& a) {
  require_sorted(a);
  require_dim(f, a);
  require_fixes(f, a);
  BlockStructure bs = block_structure(a);
  Matrix lin = linear_part(f);
  Matrix d = lin;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (bs.block_of[i] != bs.block_of[j]) d[i][j] = Scalar::zero(f.field());
  TameWord l = TameWord::linear(d, f.degree_cap());
  TameWord m = compose(f, TameWord::linear(inverse(d), f.degree_cap()));
  if (!in_M_alpha(m, a) || !(compose(m, l) == f)) throw Error("stabilizer decomposition failed to recompose " + f.str());
  return {m, d, l};
}

TameWord triangular_word(const std::vector<Polynomial>& comps, unsigned degree_cap) {
  if (comps.empty()) throw DimensionMismatch("no components");
  const std::size_t n = comps.size();
  const Field f = comps[0].field();
  TameWord w = TameWord::identity(n, f, degree_cap);
  for (std::size_t i = n; i-- > 0;) {
    Polynomial p = comps[i] - Polynomial::variable(n, f, i);
    for (std::size_t j = 0; j <= i; ++j)
      if (p.depends_on(j)) throw PreconditionError("component " + std::to_string(i + 1) + " is not triangular");
    if (!p.is_zero()) w = compose(w, TameWord::elementary(i, p, degree_cap));
  }
  if (w.components() != comps) throw Error("triangular word does not reproduce its components");
  return w;
}

bool locally_equivalent_by_sampling(const TameWord& f, const TameWord& g, const Weight& a) {
  LocalGeometry geo = local_geometry(a, true);
  FixedRegion region = fixed_inequalities(compose(invert(f), g));
  for (const auto& r : geo.rays)
    if (!region.contains(r.sample)) return false;
  for (const auto& s : geo.sectors)
    if (!region.contains(s.sample)) return false;
  return true;
}

bool locally_equivalent(const TameWord& f, const TameWord& g, const Weight& a) {
  require_sorted(a);
  require_dim(f, a);
  require_dim(g, a);
  if (a.size() != 3) throw PreconditionError("local equivalence is implemented for n = 3");
  require_fixes(f, a);
  require_fixes(g, a);
  if (!mp1_shape(a)) return locally_equivalent_by_sampling(f, g, a);
  TameWord mf = decompose_stabilizer(f, a).m, mg = decompose_stabilizer(g, a).m;
  return in_N_alpha(compose(invert(mf), mg), a);
}

std::string SectorDescriptor::str() const {
  std::string k;
  switch (kind) {
    case Kind::Full: k = "full"; break;
    case Kind::Case1: k = "case 1 (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")"; break;
    case Kind::Case2: k = "case 2"; break;
    case Kind::Case3: k = "case 3 (b=" + std::to_string(b) + ")"; break;
  }
  return k + ": " + region.str();
}

SectorDescriptor sector(const TameWord& f, const TameWord& g, const Weight& a0) {
  require_mp1(a0);
  require_dim(f, a0);
  require_dim(g, a0);
  Weight a = scaled_to_min_one(a0);
  if (a[0].get_den() != 1 || a[1].get_den() != 1) throw PreconditionError("sector needs integer m and p");
  require_fixes(f, a);
  require_fixes(g, a);
  const Field fld = f.field();
  TameWord h = compose(invert(decompose_stabilizer(f, a).m), decompose_stabilizer(g, a).m);
  const auto& c = h.components();
  Polynomial x1 = Polynomial::variable(3, fld, 0), x2 = Polynomial::variable(3, fld, 1);
  Polynomial p = c[0] - x1, q = c[1] - x2;
  const unsigned m = static_cast<unsigned>(a[0].get_num().get_ui());
  const unsigned pp = static_cast<unsigned>(a[1].get_num().get_ui());

  unsigned lo = 0, hi = 0;
  Polynomial ptop(3, fld);
  bool first = true;
  for (const auto& [e, coef] : p.terms()) {
    if (e[0] != 0 || pp * e[1] + e[2] != m) continue;
    ptop.add_term(e, coef);
    if (first || e[1] < lo) lo = e[1];
    if (first || e[1] > hi) hi = e[1];
    first = false;
  }
  Scalar qtop = q.coefficient({0, 0, pp});
  TameWord nf = TameWord::identity(3, fld, f.degree_cap());
  if (!qtop.is_zero()) nf = compose(nf, TameWord::elementary(1, Polynomial::monomial(3, {0, 0, pp}, qtop), f.degree_cap()));
  if (!ptop.is_zero()) nf = compose(nf, TameWord::elementary(0, ptop, f.degree_cap()));
  using Kind = SectorDescriptor::Kind;
  Kind kind = Kind::Case3;
  if (ptop.is_zero() && qtop.is_zero()) kind = Kind::Full;
  else if (qtop.is_zero()) kind = Kind::Case1;
  else if (ptop.is_zero()) kind = Kind::Case2;
  return SectorDescriptor{kind, lo, hi, nf, fixed_inequalities(nf)};
}

std::vector<TameWord> stabilizer_generators(const Weight& a, Field f, unsigned degree_cap) {
  BlockStructure bs = block_structure(a);
  const std::size_t n = a.size();
  std::vector<TameWord> out;
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(TameWord::elementary(k, Polynomial::constant(n, Scalar::one(f)), degree_cap));
  // Monomials in later blocks with weighted degree <= a_i.
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    std::function<void(std::size_t, const mpq_class&)> rec = [&](std::size_t j, const mpq_class& acc) {
      if (j == n) {
        if (total_degree(e) > 0 && total_degree(e) <= degree_cap)
          out.push_back(TameWord::elementary(i, Polynomial::monomial(n, e, Scalar::one(f)), degree_cap));
        return;
      }
      if (bs.block_of[j] <= bs.block_of[i]) {
        rec(j + 1, acc);
        return;
      }
      for (unsigned c = 0;; ++c) {
        mpq_class next = acc + a[j] * c;
        if (next > a[i]) break;
        e[j] = c;
        rec(j + 1, next);
      }
      e[j] = 0;
    };
    rec(0, mpq_class(0));
  }
  // Block-wise GL: transvections and one diagonal generator per variable.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && bs.block_of[i] == bs.block_of[j])
        out.push_back(TameWord::elementary(i, Polynomial::variable(n, f, j), degree_cap));
  std::vector<Scalar> scales;
  if (f.is_rational()) scales = {Scalar::from_int(f, 2), Scalar::from_int(f, -1)};
  else if (f.characteristic() > 2) scales = {Scalar::from_int(f, primitive_root(f.characteristic()))};
  for (const auto& s : scales)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix d = identity_matrix(n, f);
      d[k][k] = s;
      out.push_back(TameWord::linear(d, degree_cap));
    }
  return out;
}

}  // namespace tamex
