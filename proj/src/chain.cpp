#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "tamex/error.hpp"
#include "tamex/group.hpp"
#include "tamex/metric.hpp"

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

// Sorted weights (u_1 >= ... >= u_n = 1) with entries on the grid 1, 1+h, ..., <= extent.
std::vector<Weight> sorted_mesh(std::size_t n, const mpq_class& h, const mpq_class& extent, std::size_t budget) {
  std::vector<mpq_class> grid;
  for (mpq_class v = 1; v <= extent; v += h) grid.push_back(v);
  std::vector<Weight> out;
  Weight cur(n, mpq_class(1));
  // Fill positions n-2 down to 0 with non-decreasing grid indices.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t lo) {
    if (out.size() > budget) throw BudgetExceeded("chain mesh too large; raise the mesh step");
    if (pos == static_cast<std::size_t>(-1)) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = lo; k < grid.size(); ++k) {
      cur[pos] = grid[k];
      rec(pos - 1, k);
    }
  };
  if (n == 1) return {cur};
  rec(n - 2, 0);
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation p = identity_permutation(n);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

ChainResult chain_distance_upper(const ValuationPoint& a, const ValuationPoint& b, const std::vector<TameWord>& catalog,
                                 const ChainOptions& opts) {
  if (a.dim() != b.dim()) throw DimensionMismatch("points have different dimensions");
  if (!(a.frame.field() == b.frame.field())) throw FieldMismatch("points over different fields");
  if (opts.mesh <= 0) throw PreconditionError("mesh step must be positive");
  const std::size_t n = a.dim();
  const Field fld = a.frame.field();
  for (const auto& c : catalog) {
    if (c.dim() != n) throw DimensionMismatch("catalog word of the wrong dimension");
    if (!(c.field() == fld)) throw FieldMismatch("catalog word over the wrong field");
  }

  ChainResult res;
  res.lower = distance_lower(a, b);
  ChamberForm ca = chamber_form(a.frame, a.weight.values());
  ChamberForm cb = chamber_form(b.frame, b.weight.values());

  // Catalog products up to the requested depth.
  WordSet products;
  products.insert(TameWord::identity(n, fld, a.frame.degree_cap()));
  std::vector<std::size_t> layer{0};
  for (unsigned d = 0; d < opts.depth; ++d) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer)
      for (const auto& c : catalog) {
        auto [j, fresh] = products.insert(compose(products[idx], c));
        if (fresh) next.push_back(j);
      }
    layer = std::move(next);
  }
  WordSet frames;
  for (const TameWord* base : {&a.frame, &b.frame})
    for (const auto& w : products.items()) frames.insert(compose(*base, w));
  res.frames = frames.size();

  mpq_class extent = opts.extent;
  if (extent <= 0) extent = std::max({mpq_class(2), ca.sorted.front(), cb.sorted.front()});
  std::vector<Weight> mesh = sorted_mesh(n, opts.mesh, extent, opts.max_nodes);
  for (const Weight* w : {&ca.sorted, &cb.sorted})
    if (std::find(mesh.begin(), mesh.end(), *w) == mesh.end()) mesh.push_back(*w);
  const std::size_t M = mesh.size();

  std::vector<Permutation> perms = all_permutations(n);
  const std::size_t P = perms.size();
  const std::size_t C = frames.size() * P;
  const std::size_t V = C * M;
  res.nodes = V;
  if (V > opts.max_nodes) throw BudgetExceeded("chain graph has " + std::to_string(V) + " nodes");

  std::vector<TameWord> chamber;
  for (std::size_t fi = 0; fi < frames.size(); ++fi)
    for (const auto& p : perms) chamber.push_back(compose(frames[fi], TameWord::permutation(p, fld, frames[fi].degree_cap())));

  // Identify nodes whose points coincide: (F s)^-1 (G t) fixes u.
  UnionFind uf(V);
  for (std::size_t c1 = 0; c1 < C; ++c1) {
    TameWord inv1 = invert(chamber[c1]);
    for (std::size_t c2 = c1 + 1; c2 < C; ++c2) {
      FixedRegion region = fixed_inequalities(compose(inv1, chamber[c2]));
      if (region.infeasible) continue;
      for (std::size_t u = 0; u < M; ++u)
        if (region.contains(mesh[u])) uf.unite(c1 * M + u, c2 * M + u);
    }
  }

  // Log coordinates of each permuted mesh point.
  std::vector<std::vector<std::vector<double>>> logs(P, std::vector<std::vector<double>>(M));
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t u = 0; u < M; ++u) logs[p][u] = log_coords(permute_weight(perms[p], mesh[u])).beta;

  auto frame_index = [&](const TameWord& f) {
    auto idx = frames.find(f);
    if (!idx) throw Error("endpoint frame missing from the frame set");
    return *idx;
  };
  auto perm_index = [&](const Permutation& s) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), s) - perms.begin());
  };
  auto mesh_index = [&](const Weight& w) {
    return static_cast<std::size_t>(std::find(mesh.begin(), mesh.end(), w) - mesh.begin());
  };
  const std::size_t src = (frame_index(a.frame) * P + perm_index(ca.sigma)) * M + mesh_index(ca.sorted);
  const std::size_t dst = (frame_index(b.frame) * P + perm_index(cb.sigma)) * M + mesh_index(cb.sorted);

  std::vector<std::vector<std::size_t>> members(V);
  for (std::size_t v = 0; v < V; ++v) members[uf.find(v)].push_back(v);

  // Dijkstra over classes; pred stores the apartment segment (x -> y) entering a class.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(V, inf);
  std::vector<std::pair<std::size_t, std::size_t>> pred(V, {V, V});
  std::vector<bool> done(V, false);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  const std::size_t rs = uf.find(src), rd = uf.find(dst);
  dist[rs] = 0;
  pq.push({0, rs});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (done[r]) continue;
    done[r] = true;
    if (r == rd) break;
    for (std::size_t x : members[r]) {
      std::size_t cx = x / M, ux = x % M, fx = cx / P, px = cx % P;
      for (std::size_t py = 0; py < P; ++py)
        for (std::size_t uy = 0; uy < M; ++uy) {
          std::size_t y = ((fx * P + py) * M) + uy;
          std::size_t ry = uf.find(y);
          if (done[ry]) continue;
          double nd = d + euclid(logs[px][ux], logs[py][uy]);
          if (nd < dist[ry]) {
            dist[ry] = nd;
            pred[ry] = {x, y};
            pq.push({nd, ry});
          }
        }
    }
  }

  if (!done[rd]) {
    res.diagnostic = "the catalog frames do not connect the two points on this mesh";
    return res;
  }
  res.connected = true;
  res.upper = dist[rd];

  auto hop = [&](std::size_t v, std::string cert) {
    std::size_t c = v / M, u = v % M;
    return ChainHop{frames[c / P].str(), permute_weight(perms[c % P], mesh[u]), std::move(cert)};
  };
  auto identification = [&](std::size_t from, std::size_t to) {
    std::size_t c1 = from / M, c2 = to / M;
    const Weight& u = mesh[from % M];
    FixedRegion region = fixed_inequalities(compose(invert(chamber[c1]), chamber[c2]));
    if (!region.contains(u)) throw Error("chain identification failed its exact recheck");
    return "same point: transition fixes [" + weight_str(u) + "] (" + region.str() + ")";
  };

  // Walk back from the target class, emitting hops in reverse.
  std::vector<ChainHop> rev;
  std::size_t cur = dst;
  std::size_t r = rd;
  while (true) {
    std::size_t entry = (r == rs) ? src : pred[r].second;
    if (cur != entry) rev.push_back(hop(cur, identification(entry, cur)));
    if (r == rs) {
      rev.push_back(hop(entry, "start"));
      break;
    }
    auto [x, y] = pred[r];
    double len = euclid(logs[(x / M) % P][x % M], logs[(y / M) % P][y % M]);
    rev.push_back(hop(y, "segment in one apartment, length " + std::to_string(len)));
    cur = x;
    r = uf.find(x);
  }
  res.witness.assign(rev.rbegin(), rev.rend());
  return res;
}

}  // namespace tamex
