#include "tamex/linearize.hpp"

#include "tamex/error.hpp"
#include "tamex/group.hpp"

namespace tamex {

namespace {

void check_common(const std::vector<TameWord>& els) {
  if (els.empty()) throw PreconditionError("empty group");
  for (const auto& e : els) {
    if (e.dim() != els[0].dim()) throw DimensionMismatch("group elements of different dimensions");
    if (!(e.field() == els[0].field())) throw FieldMismatch("group elements over different fields");
  }
}

}  // namespace

FiniteGroup group_from_elements(const std::vector<TameWord>& elements) {
  check_common(elements);
  WordSet set;
  for (const auto& e : elements) set.insert(e);
  if (!set.find(TameWord::identity(elements[0].dim(), elements[0].field())))
    throw PreconditionError("group does not contain the identity");
  for (const auto& a : set.items())
    for (const auto& b : set.items())
      if (!set.find(compose(a, b))) throw PreconditionError("not closed: " + a.str() + " o " + b.str());
  return {set.items()};
}

FiniteGroup group_from_generators(const std::vector<TameWord>& gens, std::size_t max_size) {
  check_common(gens);
  return {group_ball(gens, gens[0].dim(), gens[0].field(), -1, max_size).elements};
}

CommonRegion common_fixed_region(const FiniteGroup& g) {
  CommonRegion out;
  for (const auto& e : g.elements) out.region.merge(fixed_inequalities(e));
  if (out.region.infeasible) return out;
  const std::size_t n = g.elements.at(0).dim();
  // Least point above (1,...,1) satisfying every inequality and sortedness.
  Weight a(n, mpq_class(1));
  const mpq_class limit = 1000000;
  for (int round = 0; round < 100000; ++round) {
    bool changed = false;
    for (const auto& q : out.region.inequalities) {
      mpq_class rhs = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (q.m[j]) rhs += a[j] * q.m[j];
      if (a[q.i] < rhs) {
        a[q.i] = rhs;
        changed = true;
      }
    }
    for (std::size_t k = n - 1; k-- > 0;)
      if (a[k] < a[k + 1]) {
        a[k] = a[k + 1];
        changed = true;
      }
    for (const auto& x : a)
      if (x > limit) return out;
    if (!changed) {
      out.sample = a;
      return out;
    }
  }
  return out;
}

Linearization linearize_at(const FiniteGroup& g, const Weight& a0) {
  check_common(g.elements);
  validate_weight(a0);
  if (!is_sorted_weight(a0)) throw PreconditionError("linearization weight must be sorted");
  const Weight a = scaled_to_min_one(a0);
  const std::size_t n = a.size();
  const Field fld = g.elements[0].field();
  const std::size_t order = g.elements.size();
  if (!fld.is_rational() && order % fld.characteristic() == 0)
    throw PreconditionError("field characteristic divides the group order " + std::to_string(order));
  for (const auto& e : g.elements)
    if (!fixes(e, a)) throw PreconditionError(e.str() + " does not fix [" + weight_str(a) + "]");

  Linearization out{a, TameWord::identity(n, fld), {}, {}};
  std::vector<TameWord> lwords;
  std::vector<Polynomial> sum(n, Polynomial(n, fld));
  for (const auto& e : g.elements) {
    StabDecomposition d = decompose_stabilizer(e, a);
    out.linear_parts.push_back(d.l);
    lwords.push_back(d.l_word);
    TameWord k = compose(invert(d.l_word), e);
    const auto& c = k.components();
    for (std::size_t i = 0; i < n; ++i) sum[i] = sum[i] + c[i];
  }
  Scalar inv = Scalar::from_int(fld, static_cast<long long>(order)).inverse();
  for (auto& p : sum) p = p.scale(inv);
  out.h = triangular_word(sum, g.elements[0].degree_cap());
  if (!in_M_alpha(out.h, a)) throw Error("averaged conjugator left M_alpha");
  TameWord hi = invert(out.h);
  for (std::size_t k = 0; k < order; ++k) {
    const auto& e = g.elements[k];
    if (!(compose(out.h, e) == compose(lwords[k], out.h))) throw Error("intertwining failed for " + e.str());
    TameWord c = compose(compose(out.h, e), hi);
    if (!verify_linear(c) || !(c == lwords[k])) throw Error("conjugate of " + e.str() + " is not its linear part");
    out.conjugates.push_back(c);
  }
  return out;
}

Linearization linearize(const FiniteGroup& g) {
  CommonRegion r = common_fixed_region(g);
  if (!r.sample) throw BudgetExceeded("no common fixed point found in the standard chamber");
  return linearize_at(g, *r.sample);
}

Linearization linearize_conjugated(const FiniteGroup& g, const TameWord& c) {
  check_common(g.elements);
  TameWord ci = invert(c);
  FiniteGroup conj;
  for (const auto& e : g.elements) conj.elements.push_back(compose(compose(c, e), ci));
  Linearization lin = linearize(conj);
  lin.h = compose(lin.h, c);
  TameWord hi = invert(lin.h);
  lin.conjugates.clear();
  for (const auto& e : g.elements) {
    TameWord k = compose(compose(lin.h, e), hi);
    if (!verify_linear(k)) throw Error("conjugate of " + e.str() + " is not linear");
    lin.conjugates.push_back(k);
  }
  return lin;
}

bool verify_linear(const TameWord& f) {
  for (const auto& c : f.components())
    if (c.degree() > 1) return false;
  return true;
}

}  // namespace tamex
