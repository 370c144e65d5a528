// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tamex/linearize.hpp"
#include "tamex/stabilizer.hpp"

using namespace tamex;

namespace {

const Field Q = Field::rationals();
const double pi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failures with the first few reasons.
struct Tally {
  std::size_t checks = 0, failures = 0;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (failures++ < 3) why << " [" << what << "]";
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks - failures << "/" << checks << " checks";
    if (failures) s << why.str();
    return {failures == 0, s.str()};
  }
};

Weight A(const char* s) { return parse_weight(s); }
TameWord W(const char* text, std::size_t n, Field f = Q) { return parse_word(text, n, f); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome valuation_axioms() {
  Tally t;
  auto t0 = std::chrono::steady_clock::now();
  for (Field f : {Q, Field::prime(5)}) {
    Rng rng(1000 + f.characteristic());
    for (int k = 0; k < 10000; ++k) {
      std::size_t n = 2 + static_cast<std::size_t>(k % 3);
      Weight a = random_weight(n, rng);
      auto p = random_polynomial(n, f, rng), q = random_polynomial(n, f, rng);
      auto vp = nu_eval(a, p), vq = nu_eval(a, q), vpq = nu_eval(a, p * q), vs = nu_eval(a, p + q);
      // The zero polynomial has valuation +infinity.
      bool mult = (!vp || !vq) ? !vpq : (vpq && *vpq == *vp + *vq);
      bool ultra = !vs || (!vp ? (vq && *vs >= *vq) : !vq ? *vs >= *vp : *vs >= std::min(*vp, *vq));
      t.expect(mult, "multiplicativity at trial " + std::to_string(k));
      t.expect(ultra, "ultrametric at trial " + std::to_string(k));
    }
  }
  double s = seconds_since(t0);
  t.expect(s < 10, "took " + std::to_string(s) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "2 x 10^4 triples over Q and F5 in %.2f s", s);
  return t.done(buf);
}

Outcome equivariance() {
  Tally t;
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    auto f = random_tame_word(n, Q, rng, 3, 2);
    auto s = random_permutation(n, rng);
    Weight a = random_weight(n, rng);
    auto p = random_polynomial(n, Q, rng);
    t.expect(point_eval(compose(f, TameWord::permutation(s, Q)), a, p) == point_eval(f, permute_weight(s, a), p),
             "trial " + std::to_string(k));
  }
  return t.done("10^3 random (f, sigma, alpha, P)");
}

Outcome fixed_locus() {
  Tally t;
  Rng rng(3);
  std::vector<Polynomial> corpus;
  for (int k = 0; k < 200; ++k) corpus.push_back(random_polynomial(3, Q, rng, 4, 4));
  // Every monomial of degree <= 4: any violated inequality shows up on one of them.
  for (unsigned i = 0; i <= 4; ++i)
    for (unsigned j = 0; i + j <= 4; ++j)
      for (unsigned k = 0; i + j + k <= 4; ++k)
        if (i + j + k > 0) corpus.push_back(Polynomial::monomial(3, {i, j, k}, Scalar::one(Q)));
  std::size_t fixed = 0, moved = 0;
  for (int trial = 0; trial < 500; ++trial) {
    TameWord f = trial % 2 ? random_triangular(3, Q, rng, 3)
                           : TameWord::elementary(static_cast<std::size_t>(trial / 2 % 3), [&] {
                               Polynomial p = random_polynomial(3, Q, rng, 3, 3);
                               std::size_t i = static_cast<std::size_t>(trial / 2 % 3);
                               Polynomial clean(3, Q);
                               for (const auto& [e, c] : p.terms())
                                 if (e[i] == 0) clean = clean + Polynomial::monomial(3, e, c);
                               return clean;
                             }());
    Weight a = alpha_plus(random_weight(3, rng));
    bool claim = fixes(f, a);
    // Direct evaluation: nu_{f,a}(P) = nu_{id,a}(P o f), with P o f built by substitution.
    bool agree = true;
    for (const auto& p : corpus)
      if (oracle::valuation(a, substitute(p, f.components())) != oracle::valuation(a, p)) {
        agree = false;
        break;
      }
    (claim ? fixed : moved)++;
    t.expect(claim == agree, "trial " + std::to_string(trial) + " " + f.str() + " at [" + weight_str(a) + "]");
  }
  return t.done("500 words: " + std::to_string(fixed) + " fixing, " + std::to_string(moved) + " moving");
}

Outcome identities() {
  Tally t;
  auto id = TameWord::identity(2, Q);
  auto f = W("elem 2 \"x1\"\nperm [2,1]", 2);
  t.expect(f.components()[0] == parse_polynomial("x2", 2, Q) && f.components()[1] == parse_polynomial("x1 + x2", 2, Q),
           "tripode frame");
  t.expect(points_equal(ValuationPoint(id, A("1,2")), ValuationPoint(f, A("2,1"))), "nu_{id,[1,2]} = nu_{f,[2,1]}");
  auto g = W("elem 1 \"x2^3\"", 2), h = W("elem 2 \"x1^2\"", 2), gh = compose(g, h);
  auto eq = [](const TameWord& f1, const char* w1, const TameWord& f2, const char* w2) {
    return points_equal(ValuationPoint(f1, A(w1)), ValuationPoint(f2, A(w2)));
  };
  t.expect(eq(id, "3,1", g, "3,1"), "nu_{id,[3,1]} = nu_{g,[3,1]}");
  t.expect(eq(id, "5,1", g, "5,1"), "nu_{id,[5,1]} = nu_{g,[5,1]}");
  t.expect(!eq(id, "2,1", g, "2,1"), "[2,1] is not glued");
  t.expect(eq(id, "1,2", h, "1,2"), "nu_{id,[1,2]} = nu_{h,[1,2]}");
  t.expect(eq(g, "1,2", gh, "1,2"), "nu_{g,[1,2]} = nu_{gh,[1,2]}");
  t.expect(!eq(id, "1,1", gh, "1,1"), "[1,1] is not glued");
  return t.done("tripode and chain-of-apartments gluings");
}

Outcome multiplicities() {
  Tally t;
  t.expect(multiplicity(A("3,2,1")) == 3, "(3,2,1)");
  t.expect(multiplicity(A("6,3,2")) == 2, "(6,3,2)");
  auto h = hyperplanes_through(A("11,3,2"));
  auto has = [&](const std::string& s) {
    for (const auto& q : h)
      if (q.str(true) == s) return true;
    return false;
  };
  t.expect(has("a1 = 3*a2 + 1*a3") && has("a1 = 1*a2 + 4*a3"), "(11,3,2) equations");
  for (int m = 2; m <= 12; ++m)
    for (int p = 1; p < m; ++p) {
      Weight a{mpq_class(m), mpq_class(p), mpq_class(1)};
      std::size_t q = static_cast<std::size_t>(m / p);
      t.expect(multiplicity(a) == q + 2, "(" + std::to_string(m) + "," + std::to_string(p) + ",1)");
      t.expect(oracle::brute_multiplicity(a, static_cast<unsigned>(m) + 1) == q + 2, "brute force");
    }
  return t.done("(m,p,1) -> q+2 for 1 <= p < m <= 12");
}

Outcome angle_lemma() {
  Tally t;
  double worst = 0, worst_principal = 0;
  for (int m = 3; m <= 20; ++m)
    for (int p = 2; p < m; ++p) {
      Weight a{mpq_class(m), mpq_class(p), mpq_class(1)};
      auto c1 = toward_point(Weight{0, 0, 1}), c4 = toward_point(Weight{m, 0, 1});
      for (int k = 0; k <= m; ++k) {
        auto c2 = toward_point(Weight{k, 0, 1}), c3 = toward_point(Weight{m - k, 0, 1});
        double d = std::abs(angle(a, c1, c2, AngleMetric::Log) - angle(a, c3, c4, AngleMetric::Log));
        worst = std::max(worst, d);
        t.expect(d < 1e-9, "theta12 != theta34");
      }
      double th = angle(a, c1, c4, AngleMetric::Log);
      auto l1 = along_hyperplane(a, AdmissibleInequality{1, {0, 0, static_cast<unsigned>(p)}}, 1);
      auto l2 = along_hyperplane(a, AdmissibleInequality{0, {0, 0, static_cast<unsigned>(m)}}, 1);
      double u = angle(a, l1, l2, AngleMetric::Log);
      double e = std::max(std::abs(th - pi / 3), std::abs(std::min(u, pi - u) - pi / 3));
      worst_principal = std::max(worst_principal, e);
      t.expect(e < 1e-12, "principal angle");
    }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |t12-t34| = %.1e, max principal error = %.1e", worst, worst_principal);
  return t.done(buf);
}

Outcome fano() {
  Tally t;
  auto g = fano_link();
  t.expect(g.vertices.size() == 14, "vertices");
  t.expect(g.edges.size() == 21, "edges");
  t.expect(combinatorial_girth(g) == 6, "girth");
  t.expect(std::abs(metric_girth(g) - 2 * pi) < 1e-9, "metric girth");
  t.expect(link_diameter(g) == 3, "diameter");
  auto [nv, fe] = oracle::fano_incidence();
  auto ge = oracle::edge_pairs(g);
  t.expect(oracle::degree_sequence(14, ge) == oracle::degree_sequence(nv, fe), "degree sequence vs incidence graph");
  t.expect(oracle::bfs_girth(14, ge) == 6 && oracle::bfs_diameter(14, ge) == 3, "BFS girth and diameter");
  return t.done("14 vertices, 21 edges, girth 6, diameter 3");
}

Outcome full_links() {
  Tally t;
  std::ostringstream s;
  for (const char* w : {"2,2,1", "3,3,1"}) {
    auto t0 = std::chrono::steady_clock::now();
    Weight a = A(w);
    Field f2 = Field::prime(2);
    LinkOptions o;
    o.radius = -1;
    auto g = build_link(ValuationPoint(TameWord::identity(3, f2), a), stabilizer_generators(a, f2), o);
    auto girth = combinatorial_girth(g);
    double sec = seconds_since(t0);
    t.expect(g.closed, std::string(w) + " not closed");
    t.expect(girth >= 6, std::string(w) + " girth " + std::to_string(girth));
    t.expect(oracle::bfs_girth(g.vertices.size(), oracle::edge_pairs(g)) == girth, "BFS girth disagrees");
    t.expect(sec < 60, std::string(w) + " took too long");
    char buf[160];
    std::snprintf(buf, sizeof buf, "[%s]: %zu frames, %zu vertices, girth %zu, %.2f s; ", w, g.frames.size(),
                  g.vertices.size(), girth, sec);
    s << buf;
  }
  std::string d = s.str();
  return t.done(d.substr(0, d.size() - 2));
}

Outcome octangle() {
  Tally t;
  double worst = 0;
  for (unsigned p = 1; p <= 3; ++p)
    for (unsigned q = 1; q <= 3; ++q) {
      auto c = example_angles_cycle(p, q);
      worst = std::max(worst, std::abs(c.log_total - 8 * pi / 3));
      t.expect(std::abs(c.log_total - 8 * pi / 3) < 1e-9, "log total");
      if (q >= 3) t.expect(c.simplex_total < 2 * pi, "simplex total at q >= 3");
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "log totals within %.1e of 8pi/3", worst);
  return t.done(buf);
}

Outcome distances() {
  Tally t;
  Rng rng(10);
  std::size_t connected = 0;
  for (int k = 0; k < 1000; ++k) {
    auto f = random_tame_word(2, Q, rng, 2, 2);
    auto e = random_triangular(2, Q, rng, 3);
    ValuationPoint a(f, random_weight(2, rng)), b(compose(f, e), random_weight(2, rng));
    auto r = chain_distance_upper(a, b, {e});
    connected += r.connected;
    t.expect(r.lower <= r.upper + 1e-9, "lower > upper at trial " + std::to_string(k));
  }
  // Within one apartment the chain bound is the Euclidean distance. The retraction bound matches it
  // on triangular frames; elsewhere it may fold the apartment and only bounds from below.
  for (int k = 0; k < 400; ++k) {
    bool tri = k % 2 == 0;
    auto f = tri ? random_triangular(3, Q, rng, 2) : random_tame_word(3, Q, rng, 2, 2);
    ValuationPoint a(f, random_weight(3, rng)), b(f, random_weight(3, rng));
    auto r = chain_distance_upper(a, b, {});
    double d = apartment_distance(a.weight.values(), b.weight.values());
    t.expect(r.connected && std::abs(r.upper - d) < 1e-9, "same-apartment upper bound");
    t.expect(tri ? std::abs(r.lower - d) < 1e-9 : r.lower <= d + 1e-9, "same-apartment lower bound");
  }
  auto id = TameWord::identity(2, Q);
  auto f = W("perm [2,1]\nelem 2 \"x1\"", 2);
  auto r = chain_distance_upper(ValuationPoint(id, A("2,1")), ValuationPoint(f, A("2,1")), {f});
  t.expect(r.connected && std::abs(r.upper - std::sqrt(2.0) * std::log(2.0)) < 1e-9, "tripode distance");
  return t.done("10^3 pairs (" + std::to_string(connected) + " chained), 400 same-apartment pairs, tripode sqrt(2) log 2");
}

Outcome tree() {
  Tally t;
  auto b = x2_tree_ball(ValuationPoint(TameWord::identity(2, Field::prime(2)), A("2,1")), 3, 3);
  t.expect(x2_acyclicity_check(b), "cycle found");
  t.expect(oracle::bfs_girth(b.vertices, b.edge_list) == std::numeric_limits<std::size_t>::max(), "BFS finds a cycle");
  t.expect(b.vertices == b.edges + b.components, "V != E + components");
  for (unsigned i = 1; i <= 64; ++i) {
    double closed = (std::log(i + 1.0) - std::log(static_cast<double>(i))) / std::sqrt(2.0);
    t.expect(x2_edge_length(i) == closed, "closed form at " + std::to_string(i));
    t.expect(std::abs(apartment_distance(Weight{i, 1}, Weight{i + 1, 1}) - closed) < 1e-12, "apartment length");
  }
  return t.done(std::to_string(b.chambers) + " chambers, " + std::to_string(b.vertices) + " vertices, " +
                std::to_string(b.edges) + " edges");
}

Outcome linearization() {
  Tally t;
  for (const char* p : {"2*x2^2", "2*x2*x3"}) {
    std::string text = std::string("elem 1 \"") + p + "\"\naff [[-1,0,0],[0,1,0],[0,0,1]] [0,0,0]";
    auto g = W(text.c_str(), 3);
    auto G = group_from_elements({TameWord::identity(3, Q), g});
    auto l = linearize(G);
    for (std::size_t k = 0; k < G.elements.size(); ++k) {
      t.expect(verify_linear(l.conjugates[k]), std::string("conjugate not linear for ") + p);
      TameWord lk = TameWord::linear(l.linear_parts[k]);
      t.expect(compose(l.h, G.elements[k]) == compose(lk, l.h), std::string("intertwining for ") + p);
    }
  }
  return t.done("both order-two examples");
}

Outcome faithfulness() {
  Tally t;
  const std::vector<const char*> menagerie{
      "aff [[1,0,0],[0,1,0],[0,0,1]] [1,0,0]",
      "aff [[1,0,0],[0,1,0],[0,0,1]] [0,-2,3]",
      "aff [[2,0,0],[0,1,0],[0,0,1]] [0,0,0]",
      "aff [[3,0,0],[0,3,0],[0,0,3]] [0,0,0]",
      "perm [2,1,3]",
      "perm [2,3,1]",
      "elem 1 \"x2^2\"",
      "elem 2 \"x3\"\nelem 1 \"x2*x3\"",
      "aff [[1,2,0],[0,1,5],[0,0,1]] [0,0,0]",
      "aff [[2,1,0],[0,-1,3],[0,0,1]] [1,1,1]\nelem 1 \"x3^3\"",
  };
  for (const char* s : menagerie) {
    auto f = W(s, 3);
    auto w = moved_valuation_witness(f);
    t.expect(certify_witness(f, w), std::string("certificate for ") + s);
    // Two independent evaluations at the moved point.
    auto moved = act(f, w.point);
    auto np = point_eval(w.point, w.p), nq = point_eval(w.point, w.q);
    auto fp = point_eval(moved, w.p), fq = point_eval(moved, w.q);
    t.expect(np && nq && fp && fq && *np * *fq != *nq * *fp, std::string("re-evaluation for ") + s);
  }
  return t.done("10-element menagerie");
}

Outcome convexity() {
  Tally t;
  Rng rng(14);
  std::uniform_int_distribution<int> coef(1, 4), num(1, 40);
  auto rnd = [&] { return mpq_class(num(rng), num(rng)); };
  double worst = 0;
  std::size_t families = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (int shape = 0; shape < 2; ++shape) {
      ++families;
      for (int k = 0; k < 1000; ++k) {
        AdmissibleInequality q{i, std::vector<unsigned>(3, 0)};
        std::size_t j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        q.m[j1] = static_cast<unsigned>(coef(rng));
        if (shape) q.m[j2] = static_cast<unsigned>(coef(rng));
        // Points on the boundary: free coordinates at random, alpha_i solved for.
        auto boundary = [&] {
          Weight a(3);
          a[j1] = rnd();
          a[j2] = rnd();
          a[i] = a[j1] * q.m[j1] + a[j2] * q.m[j2];
          return a;
        };
        Weight a = boundary(), b = boundary();
        double s = halfspace_midpoint_slack(q, a, b);
        worst = std::min(worst, s);
        t.expect(s >= -1e-12, "midpoint leaves " + q.str(true));
      }
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu families x 10^3 boundary pairs, worst slack %.1e", families, worst);
  return t.done(buf);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"valuation axioms", valuation_axioms},
      {"permutation equivariance", equivariance},
      {"fixed-locus oracle", fixed_locus},
      {"worked identities", identities},
      {"multiplicity counts", multiplicities},
      {"angle lemma", angle_lemma},
      {"Fano link", fano},
      {"full links over F2", full_links},
      {"eight-edge cycle", octangle},
      {"distance bounds", distances},
      {"dimension-2 tree", tree},
      {"linearization", linearization},
      {"faithfulness", faithfulness},
      {"convexity", convexity},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
