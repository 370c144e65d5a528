#include "tamex/local_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "tamex/error.hpp"

namespace tamex {

namespace {

const double kTwoPi = 2 * M_PI;

std::vector<double> plane_vector(double theta) {
  const double u[3] = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
  const double v[3] = {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};
  std::vector<double> t(3);
  for (int i = 0; i < 3; ++i) t[i] = std::cos(theta) * u[i] + std::sin(theta) * v[i];
  return t;
}

// Point alpha + s delta at log distance about radius / 2, with s a dyadic rational.
Weight ray_sample(const Weight& alpha, const Direction& d, double radius) {
  std::vector<double> t(3);
  double mean = 0;
  for (int i = 0; i < 3; ++i) {
    mpq_class r = d.delta[i] / alpha[i];
    t[i] = r.get_d();
    mean += t[i] / 3;
  }
  double len = 0;
  for (double x : t) len += (x - mean) * (x - mean);
  len = std::sqrt(len);
  double s = 0.5 * radius / len;
  mpz_class scale = 1;
  scale <<= 24;
  mpq_class sq(mpz_class(static_cast<long>(std::floor(s * 16777216.0))), scale);
  if (sq == 0) sq = mpq_class(1, 1 << 30);
  sq.canonicalize();
  for (int attempt = 0; attempt < 80; ++attempt) {
    Weight w(3);
    bool positive = true;
    for (int i = 0; i < 3; ++i) {
      w[i] = alpha[i] + sq * d.delta[i];
      positive = positive && w[i] > 0;
    }
    if (positive) {
      double dist = apartment_distance(alpha, w);
      if (dist > 0 && dist < 0.9 * radius) return w;
    }
    sq /= 2;
  }
  throw Error("could not place a sample point on " + d.label);
}

Weight primitive_integer(Weight w) {
  mpz_class l = 1, g = 0;
  for (const auto& x : w) l = lcm(l, x.get_den());
  for (auto& x : w) {
    x *= l;
    g = gcd(g, x.get_num());
  }
  if (g != 0)
    for (auto& x : w) x /= g;
  return w;
}

Weight ideal_endpoint(const Weight& alpha, const Weight& delta) {
  std::optional<mpq_class> smax;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (delta[k] < 0) {
      mpq_class s = alpha[k] / -delta[k];
      if (!smax || s < *smax) smax = s;
    }
  Weight out(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) out[k] = smax ? alpha[k] + *smax * delta[k] : delta[k];
  return primitive_integer(out);
}

double ccw_width(double from, double to) {
  double w = to - from;
  while (w < 0) w += kTwoPi;
  while (w >= kTwoPi) w -= kTwoPi;
  return w;
}

}  // namespace

LocalGeometry local_geometry(const Weight& a0, bool chamber_only) {
  validate_weight(a0);
  if (a0.size() != 3) throw PreconditionError("local geometry is implemented for n = 3");
  LocalGeometry g;
  g.chamber_only = chamber_only;
  g.alpha = scaled_to_min_one(chamber_only ? alpha_plus(a0) : a0);
  const Weight& alpha = g.alpha;
  g.radius = local_radius(alpha);

  std::vector<std::size_t> walls;
  if (chamber_only)
    for (std::size_t k = 0; k + 1 < 3; ++k)
      if (alpha[k] == alpha[k + 1]) walls.push_back(k);
  auto in_region = [&](const std::vector<double>& t, double slack) {
    for (auto k : walls)
      if (t[k] - t[k + 1] < slack) return false;
    return true;
  };
  auto sample_ok = [&](const Weight& w) { return !chamber_only || is_sorted_weight(w); };

  auto make_ray = [&](Direction d, RayKind kind, std::optional<AdmissibleInequality> q) {
    LocalRay r;
    r.sample = ray_sample(alpha, d, g.radius);
    r.polar = polar_angle(alpha, d);
    r.ideal = ideal_endpoint(alpha, d.delta);
    r.kind = kind;
    r.hyperplane = std::move(q);
    for (auto k : walls) r.wall = r.wall || r.sample[k] == r.sample[k + 1];
    r.dir = std::move(d);
    return r;
  };

  for (const auto& q : hyperplanes_through(alpha))
    for (int side : {1, -1}) {
      LocalRay r = make_ray(along_hyperplane(alpha, q, side), RayKind::Hyperplane, q);
      if (sample_ok(r.sample)) g.rays.push_back(std::move(r));
    }

  auto sort_rays = [&] {
    std::sort(g.rays.begin(), g.rays.end(), [](const LocalRay& x, const LocalRay& y) { return x.polar < y.polar; });
  };
  // In-region flags for the ccw arc after each ray.
  auto arcs = [&] {
    std::vector<bool> inside(g.rays.size());
    for (std::size_t j = 0; j < g.rays.size(); ++j) {
      double from = g.rays[j].polar, to = g.rays[(j + 1) % g.rays.size()].polar;
      double w = g.rays.size() == 1 ? kTwoPi : ccw_width(from, to);
      inside[j] = in_region(plane_vector(from + w / 2), 1e-12);
    }
    return inside;
  };
  sort_rays();
  bool need_aux = g.rays.empty();
  {
    auto inside = arcs();
    for (std::size_t j = 0; j < g.rays.size() && !need_aux; ++j) {
      double w = g.rays.size() == 1 ? kTwoPi : ccw_width(g.rays[j].polar, g.rays[(j + 1) % g.rays.size()].polar);
      if (inside[j] && w >= M_PI - 1e-9) need_aux = true;
    }
  }
  if (need_aux) {
    for (std::size_t k = 0; k < 3; ++k)
      for (int sign : {1, -1}) {
        Weight delta(3, mpq_class(0));
        delta[k] = alpha[k] * sign;
        Direction d{delta, std::string(sign > 0 ? "+" : "-") + "e" + std::to_string(k + 1)};
        LocalRay r = make_ray(d, RayKind::Auxiliary, std::nullopt);
        if (!sample_ok(r.sample)) continue;
        bool clash = false;
        for (const auto& o : g.rays) {
          double dd = std::fabs(o.polar - r.polar);
          clash = clash || std::min(dd, kTwoPi - dd) < 1e-9;
        }
        if (!clash) g.rays.push_back(std::move(r));
      }
    sort_rays();
  }
  if (g.rays.empty()) throw Error("no directions at " + weight_str(alpha));

  auto inside = arcs();
  const std::size_t R = g.rays.size();
  std::size_t outside = R;
  for (std::size_t j = 0; j < R; ++j)
    if (!inside[j]) {
      if (outside != R) throw Error("chamber directions are not contiguous at " + weight_str(alpha));
      outside = j;
    }
  g.cyclic = outside == R;
  if (!g.cyclic) std::rotate(g.rays.begin(), g.rays.begin() + static_cast<long>((outside + 1) % R), g.rays.end());

  std::vector<double> beta = log_coords(alpha).beta;
  if (walls.size() == 1)
    for (auto& r : g.rays) {
      if (!r.wall) continue;
      auto t = tangent(alpha, r.dir, AngleMetric::Log);
      double dot = 0;
      for (int i = 0; i < 3; ++i) dot -= t[i] * beta[i];
      r.tag = dot > 0 ? "base" : "apex";
    }

  const std::size_t S = g.cyclic ? R : R - 1;
  auto through = hyperplanes_through(alpha);
  for (std::size_t j = 0; j < S; ++j) {
    LocalSector s;
    s.left = j;
    s.right = (j + 1) % R;
    s.width = angle(alpha, g.rays[s.left].dir, g.rays[s.right].dir, AngleMetric::Log);
    if (g.cyclic && R == 1) s.width = kTwoPi;
    Weight w(3);
    for (int i = 0; i < 3; ++i) w[i] = (g.rays[s.left].sample[i] + g.rays[s.right].sample[i]) / 2;
    for (const auto& q : through)
      if (on_hyperplane(w, q)) throw Error("sector sample fell on " + q.str(true));
    if (!sample_ok(w) || apartment_distance(alpha, w) >= 0.95 * g.radius)
      throw Error("sector sample left the local ball at " + weight_str(alpha));
    s.sample = w;
    g.sectors.push_back(std::move(s));
  }
  return g;
}

std::vector<Direction> local_rays(const Weight& alpha) {
  std::vector<Direction> out;
  for (const auto& r : local_geometry(alpha, true).rays) out.push_back(r.dir);
  return out;
}

}  // namespace tamex
