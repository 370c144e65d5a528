#pragma once

#include <limits>
#include <string>
#include <vector>

#include "tamex/local_geometry.hpp"

namespace tamex {

struct LinkVertex {
  std::size_t frame = 0;  // representative frame index
  std::size_t ray = 0;
  std::string tag;        // "base", "apex" or empty
};

struct LinkEdge {
  std::size_t u = 0, v = 0;
  double length = 0;
  std::size_t frame = 0;
  std::size_t sector = 0;
};

struct LinkGraph {
  Weight alpha;                  // sorted canonical weight of the point
  std::string base_frame;        // F with nu = nu_{F, alpha}
  LocalGeometry geometry;
  std::vector<TameWord> frames;  // local frames h, chamber E+_{F h}
  bool closed = false;           // frames form a group
  std::vector<LinkVertex> vertices;
  std::vector<LinkEdge> edges;
  std::vector<std::vector<std::size_t>> vertex_of;  // [frame][ray]
  std::vector<std::vector<std::size_t>> edge_of;    // [frame][sector]
};

struct LinkOptions {
  int radius = 2;               // group ball radius; negative runs to closure
  std::size_t max_frames = 20000;
};

// Link at nu for n = 3, glued by exact fixes tests at the local samples.
LinkGraph build_link(const ValuationPoint& nu, const std::vector<TameWord>& generators, const LinkOptions& opts = {});
// Link of nu_{id,[1,1,1]} over F_2 under the affine group.
LinkGraph fano_link();

struct CycleInfo {
  double length = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> vertices;  // closed walk without the repeated endpoint
};

CycleInfo shortest_cycle(const LinkGraph& g, bool metric);
double metric_girth(const LinkGraph& g);
std::size_t combinatorial_girth(const LinkGraph& g);  // SIZE_MAX when acyclic
// Hop diameter; SIZE_MAX when disconnected.
std::size_t link_diameter(const LinkGraph& g);

struct Cat1Report {
  double metric_girth = 0;
  std::size_t combinatorial_girth = 0;
  double threshold = 0;
  bool cat1 = false;
  CycleInfo shortest;
  std::size_t vertices = 0, edges = 0, frames = 0;
  bool scoped = true;  // verdict only covers the generated frames
  std::string str() const;
};

Cat1Report check_cat1(const LinkGraph& g, double tol = 1e-9);
std::string link_dot(const LinkGraph& g);

struct AnglesCycle {
  unsigned p = 0, q = 0;
  std::vector<std::string> apartments;
  std::vector<double> log_lengths, simplex_lengths;
  double log_total = 0, simplex_total = 0;
  bool commute = false;
  bool glued = false;  // shared rays fixed and open arcs moved, all checked exactly
};

AnglesCycle example_angles_cycle(unsigned p, unsigned q);

}  // namespace tamex
