#pragma once

#include <string>
#include <vector>

#include "tamex/admissible.hpp"
#include "tamex/tame_word.hpp"
#include "tamex/weight.hpp"

namespace tamex {

// min over the support of -sum alpha_k i_k; +inf for 0.
ValValue nu_eval(const Weight& a, const Polynomial& p);

// nu_{f,[a]} = f . nu_{id,[a]}
struct ValuationPoint {
  TameWord frame;
  ProjWeight weight;

  ValuationPoint(TameWord f, const Weight& a) : frame(std::move(f)), weight(a) {}
  std::size_t dim() const { return frame.dim(); }
  std::string str() const;
};

// nu_{f,a}(P) = nu_eval(a, P(f_1, ..., f_n)) with the explicit representative a.
ValValue point_eval(const TameWord& f, const Weight& a, const Polynomial& p);
ValValue point_eval(const ValuationPoint& v, const Polynomial& p);

// g . nu_{f,a} = nu_{g o f, a}
ValuationPoint act(const TameWord& g, const ValuationPoint& v);

FixedRegion fixed_inequalities(const TameWord& f);
bool fixes(const TameWord& f, const Weight& a);

// The same point written with a sorted weight: nu_{f,a} = nu_{f sigma, a+}.
struct ChamberForm {
  TameWord frame;
  Weight sorted;
  Permutation sigma;
};
ChamberForm chamber_form(const TameWord& f, const Weight& a);

bool points_equal(const ValuationPoint& a, const ValuationPoint& b);
ProjWeight rho_plus(const ValuationPoint& v);
ProjWeight rho(const ValuationPoint& v);

struct MovedWitness {
  ValuationPoint point;
  Polynomial p;  // discrepancy polynomial
  Polynomial q;  // normalizing polynomial
  ValValue nu_p, nu_q, fnu_p, fnu_q;
  std::string construction;
};

// A point whose homothety class f moves, certified by nu(P) fnu(Q) != nu(Q) fnu(P).
MovedWitness moved_valuation_witness(const TameWord& f);
bool certify_witness(const TameWord& f, const MovedWitness& w);

}  // namespace tamex
