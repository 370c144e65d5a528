#include "tamex/metric.hpp"

#include <cmath>
#include <numeric>

#include "tamex/error.hpp"

namespace tamex {

namespace {

std::vector<double> centered(std::vector<double> v) {
  double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (auto& x : v) x -= mean;
  return v;
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// log(a_i / a_0) computed from exact ratios so large weights stay accurate.
std::vector<double> log_ratios(const Weight& a) {
  std::vector<double> out;
  for (const auto& x : a) {
    mpq_class r = x / a[0];
    out.push_back(std::log(r.get_d()));
  }
  return out;
}

}  // namespace

LogPoint log_coords(const Weight& a) {
  validate_weight(a);
  return {centered(log_ratios(a))};
}

double apartment_distance(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionMismatch("weights of different dimension");
  validate_weight(a);
  validate_weight(b);
  std::vector<double> d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class r = (a[i] * b[0]) / (b[i] * a[0]);
    d.push_back(std::log(r.get_d()));
  }
  return norm(centered(d));
}

double halfspace_midpoint_slack(const AdmissibleInequality& q, const Weight& a, const Weight& b) {
  validate_inequality(q, a.size());
  if (!on_hyperplane(a, q) || !on_hyperplane(b, q))
    throw PreconditionError("midpoint check needs two points on the hyperplane " + q.str(true));
  // Geometric mean of representatives scaled to a common first coordinate.
  std::vector<double> mid;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class ra = a[i] / a[0], rb = b[i] / b[0];
    mid.push_back(std::sqrt(ra.get_d() * rb.get_d()));
  }
  double rhs = 0, mx = 0;
  for (std::size_t j = 0; j < mid.size(); ++j) {
    rhs += q.m[j] * mid[j];
    mx = std::max(mx, mid[j]);
  }
  return (mid[q.i] - rhs) / std::max(mx, rhs);
}

bool halfspace_midpoint_check(const AdmissibleInequality& q, const Weight& a, const Weight& b, double tol) {
  return halfspace_midpoint_slack(q, a, b) >= -tol;
}

Direction toward_point(const Weight& gamma) {
  bool nonzero = false;
  for (const auto& x : gamma) {
    if (x < 0) throw PreconditionError("ideal point must have non-negative coordinates");
    nonzero = nonzero || x > 0;
  }
  if (!nonzero) throw PreconditionError("ideal point must be nonzero");
  return {gamma, "toward [" + weight_str(gamma) + "]"};
}

Direction along_hyperplane(const Weight& alpha, const AdmissibleInequality& q, int side) {
  const std::size_t n = alpha.size();
  if (n != 3) throw PreconditionError("hyperplane directions are defined for n = 3");
  validate_inequality(q, n);
  if (!on_hyperplane(alpha, q)) throw PreconditionError("hyperplane " + q.str(true) + " does not pass through the weight");
  if (side != 1 && side != -1) throw PreconditionError("side must be +1 or -1");
  std::size_t j = (q.i + 1) % 3, k = (q.i + 2) % 3;
  if (j > k) std::swap(j, k);
  Weight d(3, mpq_class(0));
  d[j] = 1;
  d[q.i] = q.m[j];
  if (side < 0)
    for (auto& x : d) x = -x;
  return {d, q.str(true) + (side > 0 ? " (+)" : " (-)")};
}

std::vector<double> tangent(const Weight& alpha, const Direction& d, AngleMetric metric) {
  if (d.delta.size() != alpha.size()) throw DimensionMismatch("direction and weight sizes differ");
  std::vector<double> t(alpha.size());
  if (metric == AngleMetric::Log) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      mpq_class r = d.delta[i] / alpha[i];
      t[i] = r.get_d();
    }
    t = centered(t);
  } else {
    mpq_class sa = 0, sd = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      sa += alpha[i];
      sd += d.delta[i];
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      mpq_class v = (d.delta[i] * sa - alpha[i] * sd) / (sa * sa);
      t[i] = v.get_d();
    }
  }
  double len = norm(t);
  if (len == 0) throw PreconditionError("direction is degenerate at this weight");
  for (auto& x : t) x /= len;
  return t;
}

double angle(const Weight& alpha, const Direction& d1, const Direction& d2, AngleMetric metric) {
  validate_weight(alpha);
  auto t1 = tangent(alpha, d1, metric), t2 = tangent(alpha, d2, metric);
  double dot = 0, cross = 0;
  for (std::size_t i = 0; i < t1.size(); ++i) dot += t1[i] * t2[i];
  // |t1 x t2| via Lagrange's identity keeps small angles accurate.
  for (std::size_t i = 0; i < t1.size(); ++i)
    for (std::size_t j = i + 1; j < t1.size(); ++j) {
      double c = t1[i] * t2[j] - t1[j] * t2[i];
      cross += c * c;
    }
  return std::atan2(std::sqrt(cross), dot);
}

double polar_angle(const Weight& alpha, const Direction& d) {
  if (alpha.size() != 3) throw PreconditionError("polar angles are defined for n = 3");
  auto t = tangent(alpha, d, AngleMetric::Log);
  double u = (t[0] - t[1]) / std::sqrt(2.0);
  double v = (t[0] + t[1] - 2 * t[2]) / std::sqrt(6.0);
  double th = std::atan2(v, u);
  if (th < 0) th += 2 * M_PI;
  return th;
}

Weight tau_involution(const mpq_class& p, const Weight& point) {
  if (point.size() != 3) throw PreconditionError("tau acts on n = 3 weights");
  if (p <= 0) throw PreconditionError("tau needs a positive ratio");
  return {point[0], p * point[2], point[1] / p};
}

double distance_lower(const ValuationPoint& a, const ValuationPoint& b) {
  return apartment_distance(rho(a).values(), rho(b).values());
}

double x2_edge_length(unsigned i) {
  if (i < 1) throw PreconditionError("edges are indexed from 1");
  return (std::log(static_cast<double>(i + 1)) - std::log(static_cast<double>(i))) / std::sqrt(2.0);
}

}  // namespace tamex
