#include "tamex/link.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>

#include "tamex/error.hpp"
#include "tamex/group.hpp"
#include "tamex/stabilizer.hpp"

namespace tamex {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Permutations fixing the sorted weight: adjacent swaps inside blocks.
std::vector<TameWord> block_swaps(const Weight& a, Field f) {
  std::vector<TameWord> out;
  for (std::size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] == a[k + 1]) {
      Permutation s = identity_permutation(a.size());
      std::swap(s[k], s[k + 1]);
      out.push_back(TameWord::permutation(s, f));
    }
  return out;
}

// Class labels of (frame, sample) pairs, one label vector per sample.
std::vector<std::vector<std::size_t>> classify(const WordSet& frames, const std::vector<FixedRegion>& regions,
                                               const std::vector<Weight>& samples, bool closed) {
  const std::size_t F = frames.size();
  std::vector<std::vector<std::size_t>> label(samples.size(), std::vector<std::size_t>(F));
  if (closed) {
    for (std::size_t s = 0; s < samples.size(); ++s) {
      std::vector<std::size_t> stab;
      for (std::size_t k = 0; k < F; ++k)
        if (regions[k].contains(samples[s])) stab.push_back(k);
      const std::size_t unset = static_cast<std::size_t>(-1);
      std::fill(label[s].begin(), label[s].end(), unset);
      for (std::size_t k = 0; k < F; ++k) {
        if (label[s][k] != unset) continue;
        for (std::size_t h : stab) {
          auto j = frames.find(compose(frames[k], frames[h]));
          if (!j) throw Error("frame set is not closed under composition");
          label[s][*j] = k;
        }
      }
    }
    return label;
  }
  std::vector<UnionFind> uf(samples.size(), UnionFind(F));
  for (std::size_t i = 0; i < F; ++i) {
    TameWord inv = invert(frames[i]);
    for (std::size_t j = i + 1; j < F; ++j) {
      FixedRegion region = fixed_inequalities(compose(inv, frames[j]));
      if (region.infeasible) continue;
      for (std::size_t s = 0; s < samples.size(); ++s)
        if (region.contains(samples[s])) uf[s].unite(i, j);
    }
  }
  for (std::size_t s = 0; s < samples.size(); ++s)
    for (std::size_t k = 0; k < F; ++k) label[s][k] = uf[s].find(k);
  return label;
}

}  // namespace

LinkGraph build_link(const ValuationPoint& nu, const std::vector<TameWord>& generators, const LinkOptions& opts) {
  if (nu.dim() != 3) throw PreconditionError("links are implemented for n = 3");
  const Field fld = nu.frame.field();
  ChamberForm cf = chamber_form(nu.frame, nu.weight.values());
  TameWord base_inv = invert(cf.frame);
  std::vector<TameWord> local;
  for (const auto& g : generators) {
    if (g.dim() != 3) throw DimensionMismatch("generator of the wrong dimension");
    if (!(g.field() == fld)) throw FieldMismatch("generator over the wrong field");
    TameWord h = compose(compose(base_inv, g), cf.frame);
    if (!fixes(h, cf.sorted)) throw PreconditionError("generator " + g.str() + " does not fix " + nu.str());
    local.push_back(h);
  }

  LinkGraph out;
  out.alpha = cf.sorted;
  out.base_frame = cf.frame.str();
  out.geometry = local_geometry(cf.sorted, true);

  std::vector<TameWord> swaps = block_swaps(cf.sorted, fld);
  std::vector<TameWord> all = local;
  all.insert(all.end(), swaps.begin(), swaps.end());
  GroupBall ball = group_ball(all, 3, fld, opts.radius, opts.max_frames);
  WordSet frames;
  for (const auto& b : ball.elements) frames.insert(b);
  // The chamber model needs the whole finite permutation stabilizer on every frame.
  GroupBall perms = group_ball(swaps, 3, fld, -1, 1000);
  for (std::size_t k = 0; k < ball.elements.size(); ++k)
    for (const auto& s : perms.elements) {
      frames.insert(compose(ball.elements[k], s));
      if (frames.size() > opts.max_frames) throw BudgetExceeded("link frame set exceeds the budget");
    }
  out.closed = ball.closed && frames.size() == ball.elements.size();
  out.frames = frames.items();

  const auto& geo = out.geometry;
  std::vector<FixedRegion> regions;
  for (const auto& f : out.frames) regions.push_back(fixed_inequalities(f));
  std::vector<Weight> ray_samples, sector_samples;
  for (const auto& r : geo.rays) ray_samples.push_back(r.sample);
  for (const auto& s : geo.sectors) sector_samples.push_back(s.sample);
  auto vlabel = classify(frames, regions, ray_samples, out.closed);
  auto elabel = classify(frames, regions, sector_samples, out.closed);

  const std::size_t F = out.frames.size();
  out.vertex_of.assign(F, std::vector<std::size_t>(geo.rays.size()));
  out.edge_of.assign(F, std::vector<std::size_t>(geo.sectors.size()));
  std::vector<std::vector<std::size_t>> vid(geo.rays.size(), std::vector<std::size_t>(F, SIZE_MAX));
  for (std::size_t k = 0; k < F; ++k)
    for (std::size_t r = 0; r < geo.rays.size(); ++r) {
      std::size_t rep = vlabel[r][k];
      if (vid[r][rep] == SIZE_MAX) {
        vid[r][rep] = out.vertices.size();
        out.vertices.push_back({rep, r, geo.rays[r].tag});
      }
      out.vertex_of[k][r] = vid[r][rep];
    }
  std::vector<std::vector<std::size_t>> eid(geo.sectors.size(), std::vector<std::size_t>(F, SIZE_MAX));
  for (std::size_t k = 0; k < F; ++k)
    for (std::size_t s = 0; s < geo.sectors.size(); ++s) {
      std::size_t rep = elabel[s][k];
      if (eid[s][rep] == SIZE_MAX) {
        eid[s][rep] = out.edges.size();
        const auto& sec = geo.sectors[s];
        out.edges.push_back({out.vertex_of[k][sec.left], out.vertex_of[k][sec.right], sec.width, rep, s});
      } else {
        const auto& e = out.edges[eid[s][rep]];
        const auto& sec = geo.sectors[s];
        if (e.u != out.vertex_of[k][sec.left] || e.v != out.vertex_of[k][sec.right])
          throw Error("glued sectors disagree on their boundary rays");
      }
      out.edge_of[k][s] = eid[s][rep];
    }
  return out;
}

LinkGraph fano_link() {
  Field f2 = Field::prime(2);
  Weight one(3, mpq_class(1));
  ValuationPoint nu(TameWord::identity(3, f2), one);
  LinkOptions opts;
  opts.radius = -1;
  return build_link(nu, stabilizer_generators(one, f2), opts);
}

CycleInfo shortest_cycle(const LinkGraph& g, bool metric) {
  const std::size_t V = g.vertices.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(V);
  CycleInfo best;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    double w = metric ? ed.length : 1.0;
    if (ed.u == ed.v) {
      if (w < best.length) best = {w, {ed.u}};
      continue;
    }
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < V; ++s) {
    std::vector<double> dist(V, inf);
    std::vector<std::size_t> pe(V, SIZE_MAX), branch(V, SIZE_MAX), prev(V, SIZE_MAX);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      for (auto [v, e] : adj[u]) {
        double w = metric ? g.edges[e].length : 1.0;
        if (d + w < dist[v]) {
          dist[v] = d + w;
          pe[v] = e;
          prev[v] = u;
          branch[v] = u == s ? e : branch[u];
          pq.push({dist[v], v});
        }
      }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto& ed = g.edges[e];
      if (ed.u == ed.v || pe[ed.u] == e || pe[ed.v] == e) continue;
      if (dist[ed.u] == inf || dist[ed.v] == inf) continue;
      if (ed.u != s && ed.v != s && branch[ed.u] == branch[ed.v]) continue;
      double w = metric ? ed.length : 1.0;
      double len = dist[ed.u] + dist[ed.v] + w;
      if (len < best.length - 1e-12) {
        std::vector<std::size_t> left, right;
        for (std::size_t x = ed.u; x != s; x = prev[x]) left.push_back(x);
        for (std::size_t x = ed.v; x != s; x = prev[x]) right.push_back(x);
        CycleInfo c{len, {s}};
        c.vertices.insert(c.vertices.end(), right.rbegin(), right.rend());
        c.vertices.insert(c.vertices.end(), left.begin(), left.end());
        best = std::move(c);
      }
    }
  }
  return best;
}

double metric_girth(const LinkGraph& g) { return shortest_cycle(g, true).length; }

std::size_t combinatorial_girth(const LinkGraph& g) {
  double len = shortest_cycle(g, false).length;
  return std::isinf(len) ? SIZE_MAX : static_cast<std::size_t>(std::llround(len));
}

std::size_t link_diameter(const LinkGraph& g) {
  const std::size_t V = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(V);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t diam = 0;
  for (std::size_t s = 0; s < V; ++s) {
    std::vector<std::size_t> d(V, SIZE_MAX);
    std::queue<std::size_t> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u])
        if (d[v] == SIZE_MAX) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    for (std::size_t x : d) {
      if (x == SIZE_MAX) return SIZE_MAX;
      diam = std::max(diam, x);
    }
  }
  return diam;
}

Cat1Report check_cat1(const LinkGraph& g, double tol) {
  if (g.vertices.empty()) throw PreconditionError("empty link");
  Cat1Report r;
  r.shortest = shortest_cycle(g, true);
  r.metric_girth = r.shortest.length;
  r.combinatorial_girth = combinatorial_girth(g);
  r.threshold = 2 * M_PI - tol;
  r.cat1 = r.metric_girth >= r.threshold;
  r.vertices = g.vertices.size();
  r.edges = g.edges.size();
  r.frames = g.frames.size();
  r.scoped = !g.closed;
  return r;
}

std::string Cat1Report::str() const {
  std::ostringstream os;
  os.precision(12);
  os << "vertices " << vertices << ", edges " << edges << ", frames " << frames << "\n";
  os << "metric girth " << metric_girth << " (threshold " << threshold << ")\n";
  os << "combinatorial girth ";
  if (combinatorial_girth == SIZE_MAX) os << "none";
  else os << combinatorial_girth;
  os << "\n";
  if (!shortest.vertices.empty()) {
    os << "shortest cycle:";
    for (auto v : shortest.vertices) os << " v" << v;
    os << "\n";
  }
  os << "CAT(1): " << (cat1 ? "yes" : "no") << (scoped ? " (within the generated ball only)" : "") << "\n";
  return os.str();
}

std::string link_dot(const LinkGraph& g) {
  std::ostringstream os;
  os.precision(10);
  os << "graph link {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& x = g.vertices[v];
    os << "  v" << v << " [label=\"f" << x.frame << ":" << g.geometry.rays[x.ray].dir.label;
    if (!x.tag.empty()) os << " (" << x.tag << ")";
    os << "\"];\n";
  }
  for (const auto& e : g.edges) os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.length << "\"];\n";
  os << "}\n";
  return os.str();
}

AnglesCycle example_angles_cycle(unsigned p, unsigned q) {
  if (p < 1 || q < 1) throw PreconditionError("p and q must be at least 1");
  const Field Q = Field::rationals();
  const unsigned m = p * q;
  Weight alpha{mpq_class(m), mpq_class(p), mpq_class(1)};
  Polynomial x2 = Polynomial::variable(3, Q, 1), x3 = Polynomial::variable(3, Q, 2);
  TameWord f = TameWord::elementary(0, x2.pow(q));
  TameWord g = TameWord::elementary(0, x3.pow(m));
  TameWord id = TameWord::identity(3, Q);
  TameWord fg = compose(f, g);

  AnglesCycle out;
  out.p = p;
  out.q = q;
  out.commute = fg == compose(g, f);
  out.apartments = {"E_id", "E_f", "E_fg", "E_g"};

  Direction to001 = toward_point({0, 0, 1}), to010 = toward_point({0, 1, 0}), to011 = toward_point({0, 1, 1});
  double log_arc = angle(alpha, to001, to011, AngleMetric::Log) + angle(alpha, to011, to010, AngleMetric::Log);
  double simplex_arc =
      angle(alpha, to001, to011, AngleMetric::Simplex) + angle(alpha, to011, to010, AngleMetric::Simplex);
  out.log_lengths.assign(4, log_arc);
  out.simplex_lengths.assign(4, simplex_arc);
  out.log_total = 4 * log_arc;
  out.simplex_total = 4 * simplex_arc;

  // Exact samples on both rays and inside the arc, within the local ball.
  double radius = local_radius(alpha);
  mpq_class s(1, 2);
  auto shift = [&](int a, int b, int c) {
    return Weight{alpha[0] + s * a, alpha[1] + s * b, alpha[2] + s * c};
  };
  while (apartment_distance(alpha, shift(0, 1, 1)) >= radius / 2 || apartment_distance(alpha, shift(0, 1, 0)) >= radius / 2 ||
         apartment_distance(alpha, shift(0, 0, 1)) >= radius / 2)
    s /= 2;
  Weight ray_a = shift(0, 0, 1), ray_b = shift(0, 1, 0), arc = shift(0, 1, 1);
  // id -A- f -B- fg -A- g -B- id
  const TameWord* cyc[4] = {&id, &f, &fg, &g};
  const Weight* shared[4] = {&ray_a, &ray_b, &ray_a, &ray_b};
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    TameWord t = compose(invert(*cyc[k]), *cyc[(k + 1) % 4]);
    ok = ok && fixes(t, *shared[k]) && !fixes(t, arc);
  }
  out.glued = ok;
  return out;
}

}  // namespace tamex
