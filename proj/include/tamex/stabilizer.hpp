#pragma once

#include <string>
#include <vector>

#include "tamex/valuation.hpp"

namespace tamex {

struct BlockStructure {
  std::vector<mpq_class> gamma;        // gamma_1 > ... > gamma_r
  std::vector<std::size_t> mult;       // block sizes
  std::vector<std::size_t> block_of;   // block index of each variable
};

BlockStructure block_structure(const Weight& sorted);

bool in_M_alpha(const TameWord& f, const Weight& alpha);
bool in_L_alpha(const TameWord& f, const Weight& alpha);
// n = 3, alpha = (m, p, 1) up to scale with m > p > 1.
bool in_N_alpha(const TameWord& f, const Weight& alpha);

struct StabDecomposition {
  TameWord m;
  Matrix l;
  TameWord l_word;
};

// f = m o l with m in M_alpha and l in L_alpha.
StabDecomposition decompose_stabilizer(const TameWord& f, const Weight& alpha);

// Words built from components x_i + P_i with P_i free of x_1..x_i.
TameWord triangular_word(const std::vector<Polynomial>& comps, unsigned degree_cap = kDefaultDegreeCap);

bool locally_equivalent(const TameWord& f, const TameWord& g, const Weight& alpha);
// f^-1 g fixes the exact ray and sector samples of the local ball (n = 3).
bool locally_equivalent_by_sampling(const TameWord& f, const TameWord& g, const Weight& alpha);

struct SectorDescriptor {
  enum class Kind { Full, Case1, Case2, Case3 };
  Kind kind = Kind::Full;
  unsigned a = 0, b = 0;   // x2 exponents read from the top part of P
  TameWord normal_form;
  FixedRegion region;      // fixed region of the normal form

  bool contains(const Weight& w) const { return region.contains(w); }
  std::string str() const;
};

SectorDescriptor sector(const TameWord& f, const TameWord& g, const Weight& alpha);

// Generators of Stab(nu_{id,alpha}) = M_alpha x L_alpha: translations, weight-bounded
// elementary maps, and block-wise GL generators.
std::vector<TameWord> stabilizer_generators(const Weight& alpha, Field f, unsigned degree_cap = kDefaultDegreeCap);

}  // namespace tamex
