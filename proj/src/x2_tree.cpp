#include <map>
#include <numeric>

#include "tamex/error.hpp"
#include "tamex/group.hpp"
#include "tamex/metric.hpp"

namespace tamex {

namespace {

// Large enough for f^-1 g between frames of degree <= cap after three hops.
constexpr unsigned kWorkCap = 512;

Weight vertex_weight(unsigned i) { return {mpq_class(i), mpq_class(1)}; }
Weight edge_weight(unsigned i) { return {mpq_class(2 * i + 1, 2), mpq_class(1)}; }

// Every element (a x1 + P(x2), b x2 + c) with deg P <= d, plus GL_2 when d = 1 is the vertex [1,1].
std::vector<TameWord> vertex_stabilizer(unsigned i, unsigned cap, Field f) {
  const std::uint32_t p = f.characteristic();
  std::vector<TameWord> out;
  Polynomial x1 = Polynomial::variable(2, f, 0), x2 = Polynomial::variable(2, f, 1);
  if (i == 1) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c)
          for (std::uint32_t d = 0; d < p; ++d) {
            Matrix m{{Scalar::from_int(f, a), Scalar::from_int(f, b)}, {Scalar::from_int(f, c), Scalar::from_int(f, d)}};
            if (determinant(m).is_zero()) continue;
            for (std::uint32_t t1 = 0; t1 < p; ++t1)
              for (std::uint32_t t2 = 0; t2 < p; ++t2)
                out.push_back(TameWord::affine(m, {Scalar::from_int(f, t1), Scalar::from_int(f, t2)}, kWorkCap));
          }
    return out;
  }
  const unsigned d = std::min(i, cap);
  std::size_t count = 1;
  for (unsigned k = 0; k <= d; ++k) count *= p;
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::size_t code = 0; code < count; ++code) {
          Polynomial P(2, f);
          std::size_t rest = code;
          for (unsigned k = 0; k <= d; ++k, rest /= p) {
            Exponents e{0, k};
            if (rest % p) P.add_term(e, Scalar::from_int(f, static_cast<long long>(rest % p)));
          }
          Matrix m{{Scalar::from_int(f, a), Scalar::zero(f)}, {Scalar::zero(f), Scalar::from_int(f, b)}};
          TameWord lin = TameWord::affine(m, {Scalar::zero(f), Scalar::from_int(f, c)}, kWorkCap);
          out.push_back(P.is_zero() ? lin : compose(TameWord::elementary(0, P, kWorkCap), lin));
        }
  return out;
}

// Coset representatives of G_i modulo the pointwise stabilizer of the chamber fragment.
std::vector<TameWord> coset_reps(const std::vector<TameWord>& group, const std::vector<Weight>& chamber_pts) {
  std::vector<TameWord> reps;
  for (const auto& h : group) {
    bool seen = false;
    TameWord hi = invert(h);
    for (const auto& r : reps) {
      FixedRegion region = fixed_inequalities(compose(hi, r));
      bool all = true;
      for (const auto& w : chamber_pts) all = all && region.contains(w);
      if (all) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(h);
  }
  return reps;
}

// Classes of points nu_{f,w}, hashed by valuation values on probe polynomials.
class PointClasses {
 public:
  explicit PointClasses(Field f) {
    Polynomial x1 = Polynomial::variable(2, f, 0), x2 = Polynomial::variable(2, f, 1);
    probes_ = {x1, x2, x1 + x2, x1 + x2.pow(2), x1 + x2.pow(3), x2 + x1.pow(2)};
  }
  std::size_t classify(const TameWord& frame, const Weight& w, bool& fresh) {
    std::vector<ValValue> key;
    for (const auto& p : probes_) key.push_back(point_eval(frame, w, p));
    key.push_back(w[0]);
    auto& bucket = buckets_[key];
    for (std::size_t idx : bucket)
      if (fixes(compose(invert(reps_[idx]), frame), w)) {
        fresh = false;
        return idx;
      }
    fresh = true;
    bucket.push_back(reps_.size());
    reps_.push_back(frame);
    return reps_.size() - 1;
  }
  std::size_t size() const { return reps_.size(); }

 private:
  std::vector<Polynomial> probes_;
  std::map<std::vector<ValValue>, std::vector<std::size_t>> buckets_;
  std::vector<TameWord> reps_;
};

}  // namespace

TreeFragment x2_tree_ball(const ValuationPoint& root, unsigned depth, unsigned degree_cap) {
  if (root.dim() != 2) throw PreconditionError("the tree lives in dimension 2");
  const Field f = root.frame.field();
  if (f.is_rational()) throw PreconditionError("exhaustive tree balls need a finite field");
  if (degree_cap < 1) throw PreconditionError("degree cap must be at least 1");
  const unsigned top = degree_cap + 1;

  std::vector<Weight> chamber_pts{vertex_weight(1), edge_weight(top)};
  std::vector<std::vector<TameWord>> reps(top + 1);
  for (unsigned i = 1; i <= top; ++i) reps[i] = coset_reps(vertex_stabilizer(i, degree_cap, f), chamber_pts);

  TreeFragment out;
  out.top_vertex = top;
  PointClasses vclass(f), eclass(f);
  std::map<std::vector<std::size_t>, std::size_t> chambers;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Returns true if the chamber is new.
  auto add_chamber = [&](const TameWord& frame) {
    std::vector<std::size_t> key;
    std::vector<std::size_t> vid(top + 1);
    for (unsigned i = 1; i <= top; ++i) {
      bool fresh;
      vid[i] = vclass.classify(frame, vertex_weight(i), fresh);
      if (fresh) out.vertex_level.push_back(i);
      key.push_back(vid[i]);
    }
    for (unsigned i = 1; i < top; ++i) {
      bool fresh;
      std::size_t e = eclass.classify(frame, edge_weight(i), fresh);
      if (fresh) edges.push_back({vid[i], vid[i + 1]});
      key.push_back(e);
    }
    if (chambers.count(key)) return false;
    chambers[key] = chambers.size();
    out.chamber_frames.push_back(frame.str());
    return true;
  };

  ChamberForm c0 = chamber_form(root.frame, root.weight.values());
  TameWord start = compose(TameWord::identity(2, f, kWorkCap), c0.frame);
  std::vector<TameWord> layer{start};
  add_chamber(start);
  for (unsigned d = 0; d < depth; ++d) {
    std::vector<TameWord> next;
    for (const auto& fr : layer)
      for (unsigned i = 1; i <= top; ++i)
        for (const auto& h : reps[i]) {
          TameWord g = compose(fr, h);
          if (g.degree() > static_cast<int>(degree_cap)) continue;
          if (add_chamber(g)) next.push_back(g);
        }
    layer = std::move(next);
  }

  out.chambers = chambers.size();
  out.vertices = vclass.size();
  out.edges = edges.size();
  out.edge_list = edges;
  std::vector<std::size_t> parent(out.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool acyclic = true;
  for (auto [u, v] : edges) {
    std::size_t a = find(u), b = find(v);
    if (a == b) acyclic = false;
    else parent[a] = b;
  }
  std::size_t comps = 0;
  for (std::size_t v = 0; v < out.vertices; ++v) comps += find(v) == v;
  out.components = comps;
  out.acyclic = acyclic;
  return out;
}

bool x2_acyclicity_check(const TreeFragment& t) {
  return t.acyclic && t.vertices == t.edges + t.components;
}

}  // namespace tamex
