#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tamex/admissible.hpp"
#include "tamex/valuation.hpp"

namespace tamex {

inline constexpr double kDefaultTolerance = 1e-9;

// Mean-centered log coordinates of a projective weight.
struct LogPoint {
  std::vector<double> beta;
};

LogPoint log_coords(const Weight& a);
double apartment_distance(const Weight& a, const Weight& b);

// Log-midpoint of two boundary points of q lies in the closed half-space.
bool halfspace_midpoint_check(const AdmissibleInequality& q, const Weight& a, const Weight& b, double tol = 1e-12);
// Slack of the log-midpoint relative to its largest coordinate (>= 0 up to rounding).
double halfspace_midpoint_slack(const AdmissibleInequality& q, const Weight& a, const Weight& b);

// A direction at a weight: the projective ray [alpha + s * delta], s > 0.
struct Direction {
  Weight delta;  // entries may be zero or negative
  std::string label;
};

// Ray toward an ideal point [gamma] of the closed simplex (gamma >= 0, not all zero).
Direction toward_point(const Weight& gamma);
// One of the two rays of a hyperplane through [alpha] (n = 3); side is +1 or -1.
Direction along_hyperplane(const Weight& alpha, const AdmissibleInequality& q, int side);

enum class AngleMetric { Log, Simplex };

// Unit tangent of the ray in the chosen metric (a vector of R^n).
std::vector<double> tangent(const Weight& alpha, const Direction& d, AngleMetric metric);
double angle(const Weight& alpha, const Direction& d1, const Direction& d2, AngleMetric metric);
// Polar angle of the log tangent inside the plane sum(beta) = 0 (n = 3).
double polar_angle(const Weight& alpha, const Direction& d);

// [a1, a2, a3] -> [a1, p a3, a2 / p]; accepts ideal points with zero entries.
Weight tau_involution(const mpq_class& p, const Weight& point);

// Lower bound from the retraction rho.
double distance_lower(const ValuationPoint& a, const ValuationPoint& b);

struct ChainHop {
  std::string frame;       // component tuple of the apartment frame
  Weight weight;           // apartment coordinates of the point
  std::string certificate; // exact membership that justifies arriving here
};

struct ChainResult {
  double lower = 0;
  double upper = std::numeric_limits<double>::infinity();
  bool connected = false;
  std::vector<ChainHop> witness;
  std::size_t frames = 0;
  std::size_t nodes = 0;
  std::string diagnostic;
};

struct ChainOptions {
  unsigned depth = 1;
  mpq_class mesh = mpq_class(1, 2);  // grid step on sorted weight ratios
  mpq_class extent = 0;              // largest ratio on the grid; 0 picks one from the endpoints
  std::size_t max_nodes = 20000;
};

// Chain search through apartments of the frames {f o w : w a catalog product of length <= depth}.
ChainResult chain_distance_upper(const ValuationPoint& a, const ValuationPoint& b,
                                 const std::vector<TameWord>& catalog, const ChainOptions& opts = {});

// Edge e_i of the tree, from [i,1] to [i+1,1].
double x2_edge_length(unsigned i);

struct TreeFragment {
  std::size_t chambers = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  bool acyclic = false;
  unsigned top_vertex = 0;  // vertices s_1 .. s_top per chamber
  std::vector<std::pair<std::size_t, std::size_t>> edge_list;
  std::vector<unsigned> vertex_level;  // i for s_i
  std::vector<std::string> chamber_frames;
};

// Chamber-adjacency BFS in X_2 over a prime field, degree of stabilizer elements capped.
TreeFragment x2_tree_ball(const ValuationPoint& root, unsigned depth, unsigned degree_cap);
bool x2_acyclicity_check(const TreeFragment& t);

}  // namespace tamex
