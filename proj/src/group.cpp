#include "tamex/group.hpp"

#include "tamex/error.hpp"

namespace tamex {

std::optional<std::size_t> WordSet::find(const TameWord& w) const {
  auto it = buckets_.find(w.hash());
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t idx : it->second)
    if (items_[idx] == w) return idx;
  return std::nullopt;
}

std::pair<std::size_t, bool> WordSet::insert(const TameWord& w) {
  auto& bucket = buckets_[w.hash()];
  for (std::size_t idx : bucket)
    if (items_[idx] == w) return {idx, false};
  bucket.push_back(items_.size());
  items_.push_back(w);
  return {items_.size() - 1, true};
}

GroupBall group_ball(const std::vector<TameWord>& gens, std::size_t n, Field f, int radius, std::size_t max_size,
                     unsigned degree_cap) {
  std::vector<TameWord> sym;
  for (const auto& g : gens) {
    if (g.dim() != n) throw DimensionMismatch("generator of the wrong dimension");
    if (!(g.field() == f)) throw FieldMismatch("generator over the wrong field");
    sym.push_back(g);
    TameWord gi = invert(g);
    if (!(gi == g)) sym.push_back(gi);
  }
  WordSet set;
  set.insert(TameWord::identity(n, f, degree_cap));
  std::vector<std::size_t> frontier{0};
  GroupBall out;
  for (int r = 0; radius < 0 || r < radius; ++r) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier)
      for (const auto& g : sym) {
        auto [j, fresh] = set.insert(compose(set[idx], g));
        if (!fresh) continue;
        if (set.size() > max_size) throw BudgetExceeded("group ball exceeds " + std::to_string(max_size) + " elements");
        next.push_back(j);
      }
    frontier = std::move(next);
    if (frontier.empty()) {
      out.closed = true;
      break;
    }
  }
  if (!out.closed) {
    // One more layer decides whether the ball happens to be a subgroup.
    out.closed = true;
    for (std::size_t idx : frontier) {
      for (const auto& g : sym)
        if (!set.find(compose(set[idx], g))) {
          out.closed = false;
          break;
        }
      if (!out.closed) break;
    }
  }
  out.elements = set.items();
  return out;
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (powmod(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw PreconditionError("no primitive root");
}

}  // namespace tamex
