#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tamex/metric.hpp"

using namespace tamex;

namespace {
Weight A(const char* s) { return parse_weight(s); }
bool has(const std::vector<AdmissibleInequality>& qs, const std::string& eq) {
  for (const auto& q : qs)
    if (q.str(true) == eq) return true;
  return false;
}
}  // namespace

TEST_CASE("satisfies and on_hyperplane") {
  AdmissibleInequality q{0, {0, 1, 1}};
  CHECK(on_hyperplane(A("3,2,1"), q));
  CHECK(satisfies(A("4,2,1"), q));
  CHECK(!satisfies(A("2,2,1"), q));
  CHECK(on_hyperplane(A("6,3,2"), AdmissibleInequality{0, {0, 2, 0}}));
  CHECK(on_hyperplane(A("6,3,2"), AdmissibleInequality{0, {0, 0, 3}}));
  for (const auto& h : hyperplanes_through(A("1,1,1"))) CHECK(h.principal());
}

TEST_CASE("hyperplanes through a weight") {
  auto h = hyperplanes_through(A("3,2,1"));
  CHECK(h.size() == 3);
  CHECK(has(h, "a2 = 2*a3"));
  CHECK(has(h, "a1 = 3*a3"));
  CHECK(has(h, "a1 = 1*a2 + 1*a3"));
  CHECK(multiplicity(A("7,3,1")) == 4);
  auto e = hyperplanes_through(A("11,3,2"));
  CHECK(has(e, "a1 = 3*a2 + 1*a3"));
  CHECK(has(e, "a1 = 1*a2 + 4*a3"));
  CHECK(multiplicity(A("7/3,5/3,1")) == 0);
}

TEST_CASE("multiplicity agrees with brute-force enumeration") {
  Rng rng(2);
  for (int t = 0; t < 150; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    Weight a;
    for (std::size_t k = 0; k < n; ++k) a.push_back(std::uniform_int_distribution<int>(1, 9)(rng));
    mpq_class mx = *std::max_element(a.begin(), a.end()), mn = *std::min_element(a.begin(), a.end());
    unsigned bound = static_cast<unsigned>(std::ceil(mpq_class(mx / mn).get_d())) + 1;
    CHECK(multiplicity(a) == oracle::brute_multiplicity(a, bound));
    CHECK(multiplicity(a) == hyperplanes_through(a).size());
    for (const auto& q : hyperplanes_through(a)) {
      CHECK(q.m[q.i] == 0);
      CHECK(q.weight_sum() > 0);
    }
  }
}

TEST_CASE("principal hyperplanes are the single-support equations") {
  for (const char* w : {"3,2,1", "6,3,2", "4,4,1", "2,1,1"})
    for (const auto& q : hyperplanes_through(A(w))) {
      std::size_t support = 0;
      for (auto m : q.m) support += m != 0;
      CHECK(q.principal() == (support == 1));
    }
}

TEST_CASE("hyperplanes meeting a ball") {
  auto small = hyperplanes_meeting_ball(A("7/3,5/3,1"), 1e-3);
  CHECK(small.empty());
  auto big = hyperplanes_meeting_ball(A("3,2,1"), 0.5);
  CHECK(has(big, "a1 = 1*a2"));
  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    Weight a = random_weight(3, rng);
    double r1 = 0.02 * (1 + t % 5), r2 = r1 * 2;
    auto l1 = hyperplanes_meeting_ball(a, r1), l2 = hyperplanes_meeting_ball(a, r2);
    for (const auto& q : l1) CHECK(std::find(l2.begin(), l2.end(), q) != l2.end());
    for (const auto& q : hyperplanes_through(a)) CHECK(std::find(l1.begin(), l1.end(), q) != l1.end());
  }
}

TEST_CASE("local radius guarantee by sampling") {
  Rng rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const char* w : {"1,1,1", "3,2,1", "7/3,5/3,1", "6,3,2", "2,2,1"}) {
    Weight a = A(w);
    double eps = local_radius(a);
    CHECK(eps > 0);
    auto through = hyperplanes_through(a);
    auto near = hyperplanes_meeting_ball(a, 2 * eps + 1);
    auto beta = log_coords(a).beta;
    for (int t = 0; t < 2000; ++t) {
      // Random rational point of the ball, then exact test against every nearby hyperplane.
      std::vector<double> d{u(rng), u(rng), u(rng)};
      double mean = (d[0] + d[1] + d[2]) / 3, norm = 0;
      for (auto& x : d) x -= mean;
      for (auto x : d) norm += x * x;
      double s = 0.999 * eps * std::abs(u(rng)) / std::sqrt(norm);
      Weight b;
      for (int k = 0; k < 3; ++k) b.push_back(mpq_class(std::exp(beta[k] + s * d[k])));
      // A hyperplane missing the ball leaves it on one side.
      for (const auto& q : near) {
        if (std::find(through.begin(), through.end(), q) != through.end()) continue;
        CHECK(sgn(slack(b, q)) == sgn(slack(a, q)));
      }
      CHECK(apartment_distance(a, b) < eps * (1 + 1e-9));
    }
  }
}

TEST_CASE("simplicial projection") {
  auto p = simplicial_projection(A("3,2,1"));
  CHECK(p.alpha_prime == A("2,2,1"));
  CHECK(p.vertex_indices == std::vector<std::size_t>{3});
  CHECK(simplicial_projection(A("1,1,1")).alpha_prime == A("1,1,1"));
  CHECK(simplicial_projection(A("2,2,1")).alpha_prime == A("2,2,1"));
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    auto q = simplicial_projection(random_weight(4, rng)).alpha_prime;
    CHECK(simplicial_projection(q).alpha_prime == q);
  }
}

TEST_CASE("stabilizers grow along increasing families") {
  // Every half-space containing alpha(t) also contains alpha(t') for t' >= t >= 2 on this curve.
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_triangular(3, Field::rationals(), rng, 3);
    bool seen = false;
    for (int t = 2; t <= 12; ++t) {
      Weight a{mpq_class(t * t), mpq_class(2 * t), mpq_class(t + 1)};
      bool now = fixes(f, a);
      if (seen) CHECK(now);
      seen = seen || now;
    }
  }
}
