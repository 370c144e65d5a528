#include "tamex/valuation.hpp"

#include <algorithm>

#include "tamex/error.hpp"

namespace tamex {

ValValue nu_eval(const Weight& a, const Polynomial& p) {
  if (a.size() != p.dim()) throw DimensionMismatch("weight and polynomial dimensions differ");
  ValValue best;
  for (const auto& [e, c] : p.terms()) {
    mpq_class v = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (e[k]) v -= a[k] * e[k];
    if (!best || v < *best) best = v;
  }
  return best;
}

std::string ValuationPoint::str() const { return "nu[" + frame.str() + ", " + weight.str() + "]"; }

ValValue point_eval(const TameWord& f, const Weight& a, const Polynomial& p) {
  if (p.dim() != f.dim()) throw DimensionMismatch("polynomial and frame dimensions differ");
  return nu_eval(a, substitute(p, f.components(), f.degree_cap()));
}

ValValue point_eval(const ValuationPoint& v, const Polynomial& p) { return point_eval(v.frame, v.weight.values(), p); }

ValuationPoint act(const TameWord& g, const ValuationPoint& v) {
  return ValuationPoint(compose(g, v.frame), v.weight.values());
}

FixedRegion fixed_inequalities(const TameWord& f) {
  FixedRegion region;
  const auto& comps = f.components();
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [e, c] : comps[i].terms()) {
      unsigned deg = total_degree(e);
      if (deg == 0) continue;
      if (e[i] > 0) {
        if (deg == 1) continue;
        if (!region.infeasible) {
          region.infeasible = true;
          region.infeasible_reason = "component " + std::to_string(i + 1) + " contains " +
                                     Polynomial::monomial(n, e, Scalar::one(f.field())).str();
        }
        continue;
      }
      region.add(AdmissibleInequality{i, std::vector<unsigned>(e.begin(), e.end())});
    }
  }
  return region;
}

bool fixes(const TameWord& f, const Weight& a) {
  if (a.size() != f.dim()) throw DimensionMismatch("weight and frame dimensions differ");
  return fixed_inequalities(f).contains(a);
}

ChamberForm chamber_form(const TameWord& f, const Weight& a) {
  Weight canon = scaled_to_min_one(a);
  Permutation sigma = sorting_permutation(canon);
  TameWord frame = f;
  if (sigma != identity_permutation(sigma.size()))
    frame = compose(f, TameWord::permutation(sigma, f.field(), f.degree_cap()));
  return {frame, alpha_plus(canon), sigma};
}

bool points_equal(const ValuationPoint& a, const ValuationPoint& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("points have different dimensions");
  if (!(a.frame.field() == b.frame.field())) throw FieldMismatch("points over different fields");
  ChamberForm ca = chamber_form(a.frame, a.weight.values());
  ChamberForm cb = chamber_form(b.frame, b.weight.values());
  if (ca.sorted != cb.sorted) return false;
  return fixes(compose(invert(ca.frame), cb.frame), ca.sorted);
}

ProjWeight rho_plus(const ValuationPoint& v) { return ProjWeight(alpha_plus(v.weight.values())); }

ProjWeight rho(const ValuationPoint& v) {
  auto [f0, t] = split_translation(v.frame);
  ChamberForm c = chamber_form(f0, v.weight.values());
  Permutation pi = bruhat_permutation(diff_at_origin(c.frame));
  return ProjWeight(permute_weight(pi, c.sorted));
}

namespace {

bool cross_differs(const ValValue& np, const ValValue& nq, const ValValue& fp, const ValValue& fq) {
  if (!np || !nq || !fp || !fq) return false;
  return (*np) * (*fq) != (*nq) * (*fp);
}

struct Candidate {
  TameWord frame;
  Weight weight;
  std::vector<Polynomial> polys;
  std::string construction;
};

}  // namespace

bool certify_witness(const TameWord& f, const MovedWitness& w) {
  ValValue np = point_eval(w.point, w.p), nq = point_eval(w.point, w.q);
  ValuationPoint moved = act(f, w.point);
  ValValue fp = point_eval(moved, w.p), fq = point_eval(moved, w.q);
  return np == w.nu_p && nq == w.nu_q && fp == w.fnu_p && fq == w.fnu_q && cross_differs(np, nq, fp, fq);
}

MovedWitness moved_valuation_witness(const TameWord& f) {
  if (f.is_identity()) throw PreconditionError("the identity moves no point");
  const std::size_t n = f.dim();
  const Field fld = f.field();
  const unsigned cap = f.degree_cap();
  std::vector<Polynomial> vars;
  for (std::size_t k = 0; k < n; ++k) vars.push_back(Polynomial::variable(n, fld, k));

  std::vector<Candidate> cands;
  // Standard apartment first: distinct weights catch everything outside diagonal-times-translation.
  std::vector<Weight> plain;
  {
    Weight w1, w2;
    for (std::size_t k = 0; k < n; ++k) {
      w1.push_back(mpq_class(static_cast<unsigned long>(n - k)));
      w2.push_back(mpq_class(static_cast<unsigned long>(k + 2)));
    }
    plain = {w1, w2, Weight(n, mpq_class(1))};
  }
  for (const auto& w : plain) cands.push_back({TameWord::identity(n, fld, cap), w, vars, "standard apartment"});
  // g = (x_a - x_b^r) frames with alpha_b > alpha_a.
  for (unsigned r : {2u, 3u, 5u, 7u}) {
    if (!fld.is_rational() && r % fld.characteristic() == 0) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        Exponents e(n, 0);
        e[b] = r;
        Polynomial xbr = Polynomial::monomial(n, e, Scalar::one(fld));
        TameWord g = TameWord::elementary(a, -xbr, cap);
        for (unsigned other : {1u, 3u}) {
          Weight w(n, mpq_class(other));
          w[a] = 1;
          w[b] = 2;
          // Discrepancy candidate first, then the normalizing variable x_b.
          std::vector<Polynomial> polys{vars[a] + xbr, vars[b]};
          for (std::size_t k = 0; k < n; ++k)
            if (k != b) polys.push_back(vars[k]);
          cands.push_back({g, w, polys,
                           "frame x" + std::to_string(a + 1) + " - x" + std::to_string(b + 1) + "^" +
                               std::to_string(r)});
        }
      }
  }
  for (const auto& c : cands) {
    ValuationPoint pt(c.frame, c.weight);
    ValuationPoint moved = act(f, pt);
    std::vector<ValValue> nu, fnu;
    for (const auto& p : c.polys) {
      nu.push_back(point_eval(pt, p));
      fnu.push_back(point_eval(moved, p));
    }
    for (std::size_t i = 0; i < c.polys.size(); ++i)
      for (std::size_t j = 0; j < c.polys.size(); ++j) {
        if (i == j) continue;
        if (cross_differs(nu[i], nu[j], fnu[i], fnu[j]))
          return MovedWitness{pt, c.polys[i], c.polys[j], nu[i], nu[j], fnu[i], fnu[j], c.construction};
      }
  }
  throw BudgetExceeded("no moved point found for " + f.str());
}

}  // namespace tamex
