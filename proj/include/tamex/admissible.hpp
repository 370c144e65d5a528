#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tamex/weight.hpp"

namespace tamex {

// alpha_i >= sum_{j != i} m_j alpha_j  (or = for a hyperplane); i zero-based.
struct AdmissibleInequality {
  std::size_t i = 0;
  std::vector<unsigned> m;

  bool operator==(const AdmissibleInequality& o) const { return i == o.i && m == o.m; }
  bool operator<(const AdmissibleInequality& o) const { return i != o.i ? i < o.i : m < o.m; }
  bool principal() const;
  unsigned weight_sum() const;
  // "a1 >= 2*a2 + 1*a3" or, with equation = true, "a1 = 2*a2 + 1*a3".
  std::string str(bool equation = false) const;
};

void validate_inequality(const AdmissibleInequality& q, std::size_t n);
// alpha_i - sum m_j alpha_j
mpq_class slack(const Weight& a, const AdmissibleInequality& q);
bool satisfies(const Weight& a, const AdmissibleInequality& q);
bool on_hyperplane(const Weight& a, const AdmissibleInequality& q);
// log alpha_i - log sum m_j alpha_j; vanishes exactly on the hyperplane.
double log_defect(const Weight& a, const AdmissibleInequality& q);

// Conjunction of admissible half-spaces; `infeasible` marks a structurally false member.
struct FixedRegion {
  std::vector<AdmissibleInequality> inequalities;
  bool infeasible = false;
  std::string infeasible_reason;

  void add(const AdmissibleInequality& q);
  void merge(const FixedRegion& o);
  bool contains(const Weight& a) const;
  // First violated inequality at a, if any.
  const AdmissibleInequality* violated(const Weight& a) const;
  std::string str() const;
};

std::vector<AdmissibleInequality> hyperplanes_through(const Weight& a);
std::size_t multiplicity(const Weight& a);
// Every hyperplane within log distance r of [a] (plus possibly near misses).
std::vector<AdmissibleInequality> hyperplanes_meeting_ball(const Weight& a, double r);
// Certified lower bound for the log distance from [a] to the hyperplane.
double hyperplane_distance_lower_bound(const Weight& a, const AdmissibleInequality& q);
double local_radius(const Weight& a);

struct SimplicialProjection {
  Weight alpha_prime;
  // One-based indices i with alpha'_{i-1} > alpha'_i (alpha'_0 = 2).
  std::vector<std::size_t> vertex_indices;
  // Type n - i + 1 of each such index.
  std::vector<std::size_t> vertex_types;
};
SimplicialProjection simplicial_projection(const Weight& a);

}  // namespace tamex
