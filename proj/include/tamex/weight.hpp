#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tamex/matrix.hpp"

namespace tamex {

// Strictly positive rational weight vector.
using Weight = std::vector<mpq_class>;

// Valuation value; nullopt stands for +infinity.
using ValValue = std::optional<mpq_class>;

void validate_weight(const Weight& a);
// "3,2,1" or "5/2,2,1".
Weight parse_weight(std::string_view text);
std::string weight_str(const Weight& a);
std::string val_str(const ValValue& v);

Weight alpha_plus(const Weight& a);
bool is_sorted_weight(const Weight& a);
// sigma(a)_i = a_{sigma^-1(i)}
Weight permute_weight(const Permutation& sigma, const Weight& a);
// Smallest (lexicographically) sigma with sigma(alpha_plus(a)) = a.
Permutation sorting_permutation(const Weight& a);
bool projectively_equal(const Weight& a, const Weight& b);
Weight scaled_to_min_one(const Weight& a);
std::vector<double> to_double(const Weight& a);

// Projective class of a weight; the stored representative has min coordinate 1.
class ProjWeight {
 public:
  explicit ProjWeight(const Weight& a);
  const Weight& values() const { return w_; }
  std::size_t dim() const { return w_.size(); }
  bool sorted() const { return is_sorted_weight(w_); }
  // All coordinates distinct.
  bool interior() const;
  bool operator==(const ProjWeight& o) const { return w_ == o.w_; }
  std::string str() const { return "[" + weight_str(w_) + "]"; }

 private:
  Weight w_;
};

}  // namespace tamex
