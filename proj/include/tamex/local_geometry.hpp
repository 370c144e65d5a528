#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamex/metric.hpp"

namespace tamex {

enum class RayKind { Hyperplane, Auxiliary };

struct LocalRay {
  Direction dir;
  RayKind kind = RayKind::Hyperplane;
  std::optional<AdmissibleInequality> hyperplane;
  bool wall = false;         // runs along a chamber wall a_k = a_{k+1}
  double polar = 0;          // polar angle of the log tangent
  Weight sample;             // exact rational point on the ray inside the local ball
  Weight ideal;              // where the ray leaves the simplex (canonical scaling)
  std::string tag;           // "base", "apex" or empty
};

struct LocalSector {
  std::size_t left = 0, right = 0;  // indices into rays
  double width = 0;                  // log-metric angle
  Weight sample;                     // exact rational point strictly inside the sector
};

struct LocalGeometry {
  Weight alpha;   // canonical representative
  bool chamber_only = true;
  double radius = 0;
  bool cyclic = false;  // sectors close up into a full circle
  std::vector<LocalRay> rays;
  std::vector<LocalSector> sectors;
};

// Rays and open sectors of the through-hyperplane arrangement at [alpha] (n = 3).
// With chamber_only the weight is sorted first and only directions into the chamber are kept.
LocalGeometry local_geometry(const Weight& alpha, bool chamber_only = true);
std::vector<Direction> local_rays(const Weight& alpha);

}  // namespace tamex
