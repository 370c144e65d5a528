#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tamex/error.hpp"

using namespace tamex;

namespace {
const Field Q = Field::rationals();
const double pi = std::numbers::pi;
Weight A(const char* s) { return parse_weight(s); }
TameWord W(const char* text, std::size_t n, Field f = Q) { return parse_word(text, n, f); }
}  // namespace

TEST_CASE("log coordinates") {
  auto b = log_coords(A("5,3,2")).beta;
  CHECK(std::abs(b[0] + b[1] + b[2]) < 1e-12);
  CHECK(std::abs(std::exp(b[0] - b[2]) - 2.5) < 1e-12);
}

TEST_CASE("apartment distances") {
  CHECK(apartment_distance(A("1,1"), A("2,1")) == doctest::Approx(std::log(2.0) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(apartment_distance(A("3,2,1"), A("6,4,2")) == 0);
  CHECK(apartment_distance(A("1,1,1"), A("2,2,1")) == doctest::Approx(std::log(2.0) * std::sqrt(6.0) / 3).epsilon(1e-14));
}

TEST_CASE("half-space midpoints") {
  AdmissibleInequality q{0, {0, 2}};
  CHECK(halfspace_midpoint_check(q, A("2,1"), A("4,2")));
  CHECK(halfspace_midpoint_slack(q, A("2,1"), A("4,2")) == doctest::Approx(0).scale(1));
  AdmissibleInequality r{0, {0, 1, 1}};
  CHECK(halfspace_midpoint_check(r, A("3,2,1"), A("3,1,2")));
  CHECK(halfspace_midpoint_slack(r, A("3,2,1"), A("3,1,2")) > 1e-3);
  CHECK_THROWS_AS(halfspace_midpoint_check(r, A("3,2,1"), A("4,2,1")), PreconditionError);
}

TEST_CASE("angles between principal lines are pi/3") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    int m = std::uniform_int_distribution<int>(3, 12)(rng), p = std::uniform_int_distribution<int>(2, m - 1)(rng);
    Weight a{mpq_class(m), mpq_class(p), mpq_class(1)};
    double th = angle(a, toward_point(Weight{0, 0, 1}), toward_point(Weight{m, 0, 1}), AngleMetric::Log);
    CHECK(std::abs(th - pi / 3) < 1e-12);
    auto l1 = along_hyperplane(a, AdmissibleInequality{1, {0, 0, static_cast<unsigned>(p)}}, 1);
    auto l2 = along_hyperplane(a, AdmissibleInequality{0, {0, 0, static_cast<unsigned>(m)}}, 1);
    double u = angle(a, l1, l2, AngleMetric::Log);
    CHECK(std::abs(std::min(u, pi - u) - pi / 3) < 1e-12);
  }
  auto d = toward_point(Weight{1, 0, 1});
  CHECK(angle(A("3,2,1"), d, d, AngleMetric::Log) == 0);
}

TEST_CASE("angles agree with finite differences of the log map") {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    Weight a = random_weight(3, rng);
    Weight g1{mpq_class(std::uniform_int_distribution<int>(0, 4)(rng)), 0, 1};
    Weight g2{0, mpq_class(std::uniform_int_distribution<int>(0, 4)(rng)), 1};
    auto d1 = toward_point(g1), d2 = toward_point(g2);
    double th = angle(a, d1, d2, AngleMetric::Log);
    // alpha + s * delta with delta = gamma * sum(alpha) - alpha * sum(gamma) heads to gamma in the simplex.
    auto delta = [&](const Weight& g) {
      mpq_class sa = a[0] + a[1] + a[2], sg = g[0] + g[1] + g[2];
      Weight d;
      for (int k = 0; k < 3; ++k) d.push_back(g[k] * sa - a[k] * sg);
      return d;
    };
    CHECK(std::abs(th - oracle::fd_angle(a, delta(g1), delta(g2))) < 1e-6);
  }
}

TEST_CASE("angle lemma") {
  for (int m = 3; m <= 12; ++m)
    for (int p = 2; p < m; ++p)
      for (int k = 0; k <= m; ++k) {
        Weight a{mpq_class(m), mpq_class(p), mpq_class(1)};
        auto c1 = toward_point(Weight{0, 0, 1}), c2 = toward_point(Weight{k, 0, 1}), c3 = toward_point(Weight{m - k, 0, 1}),
             c4 = toward_point(Weight{m, 0, 1});
        double t12 = angle(a, c1, c2, AngleMetric::Log), t34 = angle(a, c3, c4, AngleMetric::Log),
               t13 = angle(a, c1, c3, AngleMetric::Log);
        CHECK(std::abs(t12 - t34) < 1e-9);
        CHECK(std::abs(t12 + t13 - pi / 3) < 1e-9);
      }
}

TEST_CASE("tau involution") {
  mpq_class p(3);
  CHECK(projectively_equal(tau_involution(p, Weight{0, 0, 1}), Weight{0, 1, 0}));
  for (int t = 1; t < 6; ++t) {
    Weight on{mpq_class(t), p, 1};
    CHECK(projectively_equal(tau_involution(p, on), on));
  }
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Weight x = random_weight(3, rng);
    CHECK(projectively_equal(tau_involution(p, tau_involution(p, x)), x));
  }
  // Angles at a fixed point are preserved.
  Weight a{mpq_class(7), p, 1};
  for (int t = 0; t < 50; ++t) {
    Weight g1 = random_weight(3, rng), g2 = random_weight(3, rng);
    double before = angle(a, toward_point(g1), toward_point(g2), AngleMetric::Log);
    double after = angle(a, toward_point(tau_involution(p, g1)), toward_point(tau_involution(p, g2)), AngleMetric::Log);
    CHECK(std::abs(before - after) < 1e-9);
  }
}

TEST_CASE("tripode distances") {
  auto id = TameWord::identity(2, Q);
  auto f = W("perm [2,1]\nelem 2 \"x1\"", 2);
  ValuationPoint a(id, A("2,1")), b(f, A("2,1"));
  auto r = chain_distance_upper(a, b, {f});
  REQUIRE(r.connected);
  CHECK(std::abs(r.upper - std::sqrt(2.0) * std::log(2.0)) < 1e-9);
  CHECK(r.lower <= r.upper + 1e-12);
  ValuationPoint c(id, A("1,2"));
  CHECK(std::abs(distance_lower(c, a) - std::sqrt(2.0) * std::log(2.0)) < 1e-12);
  auto s = chain_distance_upper(c, a, {});
  CHECK(std::abs(s.upper - s.lower) < 1e-9);
  // Witness hops land on shared points, re-verified here.
  for (std::size_t k = 1; k < r.witness.size(); ++k) CHECK(!r.witness[k].certificate.empty());
}

TEST_CASE("same-apartment pairs are isometric") {
  Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    auto f = random_triangular(3, Q, rng, 2);
    ValuationPoint a(f, random_weight(3, rng)), b(f, random_weight(3, rng));
    auto r = chain_distance_upper(a, b, {});
    CHECK(std::abs(r.upper - apartment_distance(a.weight.values(), b.weight.values())) < 1e-9);
    CHECK(std::abs(r.lower - r.upper) < 1e-9);
  }
}

TEST_CASE("retraction is non-expansive on chains") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    auto f = random_tame_word(2, Q, rng, 2, 3);
    auto e = random_triangular(2, Q, rng, 3);
    ValuationPoint a(f, random_weight(2, rng)), b(compose(f, e), random_weight(2, rng));
    auto r = chain_distance_upper(a, b, {e});
    CHECK(r.lower <= r.upper + 1e-9);
  }
}

TEST_CASE("disconnected catalogs report infinity") {
  auto id = TameWord::identity(2, Q);
  ChainOptions o;
  o.extent = 3;
  // x1 + x2^5 fixes only a1 >= 5 a2, beyond the grid extent.
  auto g = W("elem 1 \"x2^5\"\nperm [2,1]", 2);
  auto r = chain_distance_upper(ValuationPoint(id, A("2,1")), ValuationPoint(g, A("2,1")), {}, o);
  CHECK(!r.connected);
  CHECK(std::isinf(r.upper));
  CHECK(!r.diagnostic.empty());
}

TEST_CASE("tree edge lengths") {
  for (unsigned i = 1; i < 30; ++i) {
    double closed = (std::log(i + 1.0) - std::log(static_cast<double>(i))) / std::sqrt(2.0);
    CHECK(std::abs(x2_edge_length(i) - closed) < 1e-12);
    CHECK(std::abs(apartment_distance(Weight{i, 1}, Weight{i + 1, 1}) - closed) < 1e-12);
  }
}

TEST_CASE("four apartments of the dimension-2 tree glue as drawn") {
  auto id = TameWord::identity(2, Q);
  auto g = W("elem 1 \"x2^3\"", 2), h = W("elem 2 \"x1^2\"", 2), gh = compose(g, h);
  auto eq = [](const TameWord& f1, const char* w1, const TameWord& f2, const char* w2) {
    return points_equal(ValuationPoint(f1, A(w1)), ValuationPoint(f2, A(w2)));
  };
  CHECK(eq(id, "3,1", g, "3,1"));
  CHECK(eq(id, "4,1", g, "4,1"));
  CHECK(!eq(id, "2,1", g, "2,1"));
  CHECK(eq(id, "1,2", h, "1,2"));
  CHECK(!eq(id, "1,1", h, "1,1"));
  CHECK(eq(g, "1,2", gh, "1,2"));
  CHECK(!eq(g, "1,1", gh, "1,1"));
  CHECK(!eq(id, "1,2", gh, "1,2"));
}

TEST_CASE("tree balls are acyclic") {
  Field f2 = Field::prime(2);
  auto root = ValuationPoint(TameWord::identity(2, f2), A("2,1"));
  auto t0 = x2_tree_ball(root, 0, 3);
  CHECK(t0.chambers == 1);
  CHECK(t0.edges == t0.top_vertex - 1);
  auto t = x2_tree_ball(root, 2, 2);
  CHECK(x2_acyclicity_check(t));
  CHECK(t.vertices == t.edges + t.components);
  CHECK(oracle::bfs_girth(t.vertices, t.edge_list) == std::numeric_limits<std::size_t>::max());
  CHECK_THROWS_AS(x2_tree_ball(ValuationPoint(TameWord::identity(2, Q), A("2,1")), 1, 2), PreconditionError);
}
