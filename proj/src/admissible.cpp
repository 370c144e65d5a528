#include "tamex/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "tamex/error.hpp"

namespace tamex {

bool AdmissibleInequality::principal() const {
  std::size_t nz = 0;
  for (auto v : m) nz += v > 0;
  return nz == 1;
}

unsigned AdmissibleInequality::weight_sum() const {
  unsigned s = 0;
  for (auto v : m) s += v;
  return s;
}

std::string AdmissibleInequality::str(bool equation) const {
  std::string out = "a" + std::to_string(i + 1) + (equation ? " = " : " >= ");
  bool first = true;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    out += (first ? "" : " + ") + std::to_string(m[j]) + "*a" + std::to_string(j + 1);
    first = false;
  }
  return out;
}

void validate_inequality(const AdmissibleInequality& q, std::size_t n) {
  if (q.m.size() != n || q.i >= n) throw DimensionMismatch("inequality dimension mismatch");
  if (q.m[q.i] != 0) throw PreconditionError("admissible inequality must have m_i = 0");
  if (q.weight_sum() == 0) throw PreconditionError("admissible inequality must have some m_j > 0");
}

mpq_class slack(const Weight& a, const AdmissibleInequality& q) {
  if (a.size() != q.m.size()) throw DimensionMismatch("weight and inequality dimensions differ");
  mpq_class s = a[q.i];
  for (std::size_t j = 0; j < a.size(); ++j)
    if (q.m[j]) s -= a[j] * q.m[j];
  return s;
}

bool satisfies(const Weight& a, const AdmissibleInequality& q) { return slack(a, q) >= 0; }

bool on_hyperplane(const Weight& a, const AdmissibleInequality& q) { return slack(a, q) == 0; }

double log_defect(const Weight& a, const AdmissibleInequality& q) {
  // Ratio taken exactly, then logged once.
  mpq_class rhs = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (q.m[j]) rhs += a[j] * q.m[j];
  mpq_class ratio = a[q.i] / rhs;
  if (ratio == 1) return 0.0;
  return std::log(ratio.get_d());
}

void FixedRegion::add(const AdmissibleInequality& q) {
  auto it = std::lower_bound(inequalities.begin(), inequalities.end(), q);
  if (it == inequalities.end() || !(*it == q)) inequalities.insert(it, q);
}

void FixedRegion::merge(const FixedRegion& o) {
  for (const auto& q : o.inequalities) add(q);
  if (o.infeasible && !infeasible) {
    infeasible = true;
    infeasible_reason = o.infeasible_reason;
  }
}

bool FixedRegion::contains(const Weight& a) const { return !infeasible && violated(a) == nullptr; }

const AdmissibleInequality* FixedRegion::violated(const Weight& a) const {
  for (const auto& q : inequalities)
    if (!satisfies(a, q)) return &q;
  return nullptr;
}

std::string FixedRegion::str() const {
  if (infeasible) return "empty (" + infeasible_reason + ")";
  if (inequalities.empty()) return "everything";
  std::string out;
  for (std::size_t k = 0; k < inequalities.size(); ++k) out += (k ? "; " : "") + inequalities[k].str();
  return out;
}

namespace {

// Calls visit(ineq) for every (i, m) with 0 < sum m and running weighted sum <= cap_i
// and sum m <= max_sum. Skips the duplicate spelling of alpha_i = alpha_k with i > k.
void enumerate(const Weight& a, const std::function<bool(std::size_t, const mpq_class&)>& over_cap,
               unsigned max_sum, const std::function<void(const AdmissibleInequality&)>& visit) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    AdmissibleInequality q{i, std::vector<unsigned>(n, 0)};
    std::function<void(std::size_t, unsigned, const mpq_class&)> rec = [&](std::size_t j, unsigned used,
                                                                            const mpq_class& acc) {
      if (j == n) {
        if (used == 0) return;
        if (q.principal() && q.weight_sum() == 1) {
          std::size_t k = 0;
          while (q.m[k] == 0) ++k;
          if (k < i) return;
        }
        visit(q);
        return;
      }
      if (j == i) {
        rec(j + 1, used, acc);
        return;
      }
      for (unsigned c = 0; used + c <= max_sum; ++c) {
        mpq_class next = acc + a[j] * c;
        if (c > 0 && over_cap(i, next)) break;
        q.m[j] = c;
        rec(j + 1, used + c, next);
      }
      q.m[j] = 0;
    };
    rec(0, 0, mpq_class(0));
  }
}

unsigned ratio_ceiling(const Weight& a, double inflate) {
  mpq_class mx = *std::max_element(a.begin(), a.end());
  mpq_class mn = *std::min_element(a.begin(), a.end());
  mpq_class ratio = mx / mn;
  if (inflate == 1.0) {
    mpz_class c = ratio.get_num() / ratio.get_den();
    if (c * ratio.get_den() != ratio.get_num()) c += 1;
    return static_cast<unsigned>(c.get_ui());
  }
  double bound = std::ceil(ratio.get_d() * inflate * (1 + 1e-9)) + 1;
  if (bound > 1e6) throw BudgetExceeded("hyperplane enumeration bound too large");
  return static_cast<unsigned>(bound);
}

}  // namespace

std::vector<AdmissibleInequality> hyperplanes_through(const Weight& a) {
  validate_weight(a);
  std::vector<AdmissibleInequality> out;
  unsigned max_sum = ratio_ceiling(a, 1.0);
  enumerate(
      a, [&](std::size_t i, const mpq_class& acc) { return acc > a[i]; }, max_sum,
      [&](const AdmissibleInequality& q) {
        if (on_hyperplane(a, q)) out.push_back(q);
      });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t multiplicity(const Weight& a) { return hyperplanes_through(a).size(); }

double hyperplane_distance_lower_bound(const Weight& a, const AdmissibleInequality& q) {
  // The defect is sqrt(2)-Lipschitz for the centered log metric.
  return std::abs(log_defect(a, q)) / std::sqrt(2.0);
}

std::vector<AdmissibleInequality> hyperplanes_meeting_ball(const Weight& a, double r) {
  validate_weight(a);
  if (!(r > 0)) throw PreconditionError("ball radius must be positive");
  const double inflate = std::exp(2 * r);
  unsigned max_sum = ratio_ceiling(a, inflate);
  std::vector<mpq_class> caps;
  for (const auto& x : a) caps.push_back(x * mpq_class(inflate * (1 + 1e-9)));
  std::vector<AdmissibleInequality> out;
  enumerate(
      a, [&](std::size_t i, const mpq_class& acc) { return acc > caps[i]; }, max_sum,
      [&](const AdmissibleInequality& q) {
        if (on_hyperplane(a, q) || hyperplane_distance_lower_bound(a, q) <= r * (1 + 1e-9) + 1e-12)
          out.push_back(q);
      });
  std::sort(out.begin(), out.end());
  return out;
}

double local_radius(const Weight& a) {
  validate_weight(a);
  double r = 0.25;
  for (int round = 0; round < 40; ++round, r *= 2) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : hyperplanes_meeting_ball(a, r)) {
      if (on_hyperplane(a, q)) continue;
      best = std::min(best, hyperplane_distance_lower_bound(a, q));
    }
    if (best < std::numeric_limits<double>::infinity()) return best * (1 - 1e-9);
  }
  throw BudgetExceeded("local radius search did not terminate");
}

SimplicialProjection simplicial_projection(const Weight& a0) {
  validate_weight(a0);
  Weight a = alpha_plus(a0);
  mpq_class mn = a.back();
  SimplicialProjection out;
  for (const auto& x : a) out.alpha_prime.push_back(std::min(mpq_class(2), mpq_class(x / mn)));
  mpq_class prev = 2;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (prev > out.alpha_prime[i]) {
      out.vertex_indices.push_back(i + 1);
      out.vertex_types.push_back(n - i);
    }
    prev = out.alpha_prime[i];
  }
  return out;
}

}  // namespace tamex
