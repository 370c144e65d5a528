#include "tamex/weight.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tamex/error.hpp"
#include "tamex/scalar.hpp"

namespace tamex {

void validate_weight(const Weight& a) {
  if (a.empty()) throw DimensionMismatch("empty weight");
  for (const auto& x : a)
    if (x <= 0) throw PreconditionError("weight coordinates must be positive, got " + weight_str(a));
}

Weight parse_weight(std::string_view text) {
  Weight w;
  std::size_t start = 0;
  std::string s(text);
  if (!s.empty() && s.front() == '[') s = s.substr(1);
  if (!s.empty() && s.back() == ']') s.pop_back();
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    w.push_back(parse_rational(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  validate_weight(w);
  return w;
}

std::string weight_str(const Weight& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + rational_str(a[i]);
  return out;
}

std::string val_str(const ValValue& v) { return v ? rational_str(*v) : "inf"; }

Weight alpha_plus(const Weight& a) {
  Weight s = a;
  std::stable_sort(s.begin(), s.end(), [](const mpq_class& x, const mpq_class& y) { return x > y; });
  return s;
}

bool is_sorted_weight(const Weight& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] < a[i]) return false;
  return true;
}

Weight permute_weight(const Permutation& sigma, const Weight& a) {
  if (sigma.size() != a.size()) throw DimensionMismatch("permutation and weight sizes differ");
  Permutation inv = perm_inverse(sigma);
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[inv[i]];
  return r;
}

Permutation sorting_permutation(const Weight& a) {
  Permutation idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return a[x] > a[y]; });
  // alpha_plus[k] = a[idx[k]], and sigma(alpha_plus)_i = alpha_plus[sigma^-1(i)] = a_i gives sigma = idx.
  return idx;
}

bool projectively_equal(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] * b[0] != b[i] * a[0]) return false;
  return true;
}

Weight scaled_to_min_one(const Weight& a) {
  validate_weight(a);
  mpq_class m = *std::min_element(a.begin(), a.end());
  Weight r = a;
  for (auto& x : r) x /= m;
  return r;
}

std::vector<double> to_double(const Weight& a) {
  std::vector<double> r;
  for (const auto& x : a) r.push_back(x.get_d());
  return r;
}

ProjWeight::ProjWeight(const Weight& a) : w_(scaled_to_min_one(a)) {}

bool ProjWeight::interior() const {
  Weight s = alpha_plus(w_);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) return false;
  return true;
}

}  // namespace tamex
