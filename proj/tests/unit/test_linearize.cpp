#include <doctest.h>

#include "oracles.hpp"
#include "tamex/error.hpp"
#include "tamex/linearize.hpp"

using namespace tamex;

namespace {
const Field Q = Field::rationals();
TameWord W(const char* text, std::size_t n = 3, Field f = Q) { return parse_word(text, n, f); }
Polynomial P(const char* s, std::size_t n = 3, Field f = Q) { return parse_polynomial(s, n, f); }

FiniteGroup pair(const TameWord& g) { return group_from_elements({TameWord::identity(g.dim(), g.field()), g}); }

// Table of e_i o e_j as indices into the element list.
std::vector<std::vector<std::size_t>> table(const std::vector<TameWord>& els) {
  std::vector<std::vector<std::size_t>> t(els.size(), std::vector<std::size_t>(els.size(), SIZE_MAX));
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j) {
      TameWord c = compose(els[i], els[j]);
      for (std::size_t k = 0; k < els.size(); ++k)
        if (c == els[k]) t[i][j] = k;
    }
  return t;
}
}  // namespace

TEST_CASE("order two example") {
  auto g = W("elem 1 \"2*x2^2\"\naff [[-1,0,0],[0,1,0],[0,0,1]] [0,0,0]");
  REQUIRE(compose(g, g).is_identity());
  auto G = pair(g);
  auto region = common_fixed_region(G);
  REQUIRE(region.sample);
  CHECK(*region.sample == parse_weight("2,1,1"));
  CHECK(!fixes(g, parse_weight("3,2,1")));
  CHECK(fixes(g, parse_weight("5,2,2")));

  auto l = linearize(G);
  CHECK(l.h.components()[0] == P("x1 - x2^2"));
  CHECK(l.h.components()[1] == P("x2"));
  CHECK(l.h.components()[2] == P("x3"));
  for (std::size_t k = 0; k < G.elements.size(); ++k) {
    CHECK(verify_linear(l.conjugates[k]));
    // Intertwining, recomputed from scratch.
    TameWord lk = TameWord::linear(l.linear_parts[k]);
    CHECK(compose(l.h, G.elements[k]) == compose(lk, l.h));
  }
  // The other conjugation convention: s^-1 o g o s is linear for s = (x1 + x2^2, x2, x3) = h^-1.
  auto s = W("elem 1 \"x2^2\"");
  CHECK(s == invert(l.h));
  CHECK(verify_linear(compose(compose(invert(s), g), s)));
  CHECK(!verify_linear(compose(compose(s, g), invert(s))));
}

TEST_CASE("second order two example") {
  auto g = W("elem 1 \"2*x2*x3\"\naff [[-1,0,0],[0,1,0],[0,0,1]] [0,0,0]");
  auto l = linearize(pair(g));
  CHECK(l.h.components()[0] == P("x1 - x2*x3"));
  for (const auto& c : l.conjugates) CHECK(verify_linear(c));
}

TEST_CASE("linearity check") {
  CHECK(verify_linear(TameWord::identity(3, Q)));
  CHECK(verify_linear(W("aff [[0,1,0],[1,0,0],[0,0,1]] [0,0,0]")));
  CHECK(!verify_linear(W("elem 1 \"x2^2\"")));
  CHECK(verify_linear(W("elem 1 \"x2^2\"\nelem 1 \"-x2^2\"")));
}

TEST_CASE("common fixed regions") {
  auto trivial = group_from_elements({TameWord::identity(3, Q)});
  auto r = common_fixed_region(trivial);
  CHECK(r.region.inequalities.empty());
  REQUIRE(r.sample);
  CHECK(*r.sample == parse_weight("1,1,1"));
  auto s3 = group_from_generators({W("perm [2,1,3]"), W("perm [1,3,2]")}, 100);
  CHECK(s3.elements.size() == 6);
  auto rs = common_fixed_region(s3);
  REQUIRE(rs.sample);
  for (const auto& e : s3.elements) CHECK(fixes(e, *rs.sample));
  CHECK(projectively_equal(*rs.sample, parse_weight("1,1,1")));
}

TEST_CASE("conjugated linear groups are linearized") {
  // G = c^-1 L c with L linear in L_alpha and c in M_alpha; linearize must undo c up to L.
  Rng rng(21);
  Weight a = parse_weight("3,3,1");
  auto L = group_from_generators({W("perm [2,1,3]"), W("aff [[-1,0,0],[0,1,0],[0,0,1]] [0,0,0]")}, 100);
  REQUIRE(L.elements.size() == 8);
  for (Field f : {Q, Field::prime(3), Field::prime(5)}) {
    for (int t = 0; t < 12; ++t) {
      Polynomial p1 = Polynomial::monomial(3, {0, 0, 3}, random_scalar(f, rng)) + Polynomial::monomial(3, {0, 0, 1}, random_scalar(f, rng));
      Polynomial p2 = Polynomial::monomial(3, {0, 0, 2}, random_scalar(f, rng));
      TameWord c = TameWord::identity(3, f);
      if (!p1.is_zero()) c = compose(c, TameWord::elementary(0, p1));
      if (!p2.is_zero()) c = compose(c, TameWord::elementary(1, p2));
      std::vector<TameWord> els;
      for (const auto& e : L.elements) els.push_back(compose(compose(invert(c), parse_word(e.word_text(), 3, f)), c));
      auto G = group_from_elements(els);
      REQUIRE(G.elements.size() == 8);
      auto lin = linearize_at(G, a);
      CHECK(in_M_alpha(lin.h, a));
      for (const auto& k : lin.conjugates) CHECK(verify_linear(k));
      CHECK(table(lin.conjugates) == table(G.elements));
      // The conjugates are exactly h g h^-1, recomputed here.
      for (std::size_t k = 0; k < G.elements.size(); ++k)
        CHECK(lin.conjugates[k] == compose(compose(lin.h, G.elements[k]), invert(lin.h)));
    }
  }
}

TEST_CASE("characteristic dividing the order") {
  Field f2 = Field::prime(2);
  auto g = W("elem 1 \"x2^2\"\nperm [1,2,3]", 3, f2);
  REQUIRE(compose(g, g).is_identity());
  CHECK_THROWS_AS(linearize(pair(g)), PreconditionError);
}

TEST_CASE("groups needing a preliminary conjugation") {
  // G fixes a point outside the sorted chamber; c moves it in.
  auto g = W("elem 1 \"2*x2^2\"\naff [[-1,0,0],[0,1,0],[0,0,1]] [0,0,0]");
  auto c = W("perm [3,1,2]");
  auto ci = invert(c);
  auto G = pair(compose(compose(ci, g), c));
  auto lin = linearize_conjugated(G, c);
  for (std::size_t k = 0; k < G.elements.size(); ++k) {
    CHECK(verify_linear(lin.conjugates[k]));
    CHECK(lin.conjugates[k] == compose(compose(lin.h, G.elements[k]), invert(lin.h)));
  }
}

TEST_CASE("group input validation") {
  CHECK_THROWS_AS(group_from_elements({W("perm [2,1,3]")}), PreconditionError);
  CHECK_THROWS_AS(group_from_elements({TameWord::identity(3, Q), W("elem 1 \"x2\"")}), PreconditionError);
  CHECK_THROWS_AS(group_from_generators({W("elem 1 \"x2\"")}, 50), BudgetExceeded);
}
