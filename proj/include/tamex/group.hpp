#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tamex/tame_word.hpp"

namespace tamex {

// Words deduplicated by their expanded components.
class WordSet {
 public:
  std::optional<std::size_t> find(const TameWord& w) const;
  // Index of w, and whether it was new.
  std::pair<std::size_t, bool> insert(const TameWord& w);
  const std::vector<TameWord>& items() const { return items_; }
  const TameWord& operator[](std::size_t i) const { return items_[i]; }
  std::size_t size() const { return items_.size(); }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::vector<TameWord> items_;
};

struct GroupBall {
  std::vector<TameWord> elements;  // identity first, then BFS order
  bool closed = false;             // closed under right multiplication by the generators
};

// Cayley ball for the symmetric generating set; radius < 0 runs to closure.
GroupBall group_ball(const std::vector<TameWord>& gens, std::size_t n, Field f, int radius,
                     std::size_t max_size, unsigned degree_cap = kDefaultDegreeCap);

std::uint32_t primitive_root(std::uint32_t p);

}  // namespace tamex
