#pragma once

#include <optional>
#include <vector>

#include "tamex/stabilizer.hpp"

namespace tamex {

struct FiniteGroup {
  std::vector<TameWord> elements;
};

// Checks identity, closure and inverses on expanded components.
FiniteGroup group_from_elements(const std::vector<TameWord>& elements);
FiniteGroup group_from_generators(const std::vector<TameWord>& gens, std::size_t max_size);

struct CommonRegion {
  FixedRegion region;
  std::optional<Weight> sample;  // sorted, canonical; empty when nothing was found
};

CommonRegion common_fixed_region(const FiniteGroup& g);

struct Linearization {
  Weight alpha;
  TameWord h;
  std::vector<Matrix> linear_parts;  // l_g in group order
  std::vector<TameWord> conjugates;  // h g h^-1
};

Linearization linearize_at(const FiniteGroup& g, const Weight& alpha);
// Uses the sample of the common fixed region; BudgetExceeded when there is none.
Linearization linearize(const FiniteGroup& g);
// H = h' o c where h' linearizes c G c^-1.
Linearization linearize_conjugated(const FiniteGroup& g, const TameWord& c);

bool verify_linear(const TameWord& f);

}  // namespace tamex
