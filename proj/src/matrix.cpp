#include "tamex/matrix.hpp"

#include "tamex/error.hpp"

namespace tamex {

Matrix zero_matrix(std::size_t n, Field f) { return Matrix(n, std::vector<Scalar>(n, Scalar::zero(f))); }

Matrix identity_matrix(std::size_t n, Field f) {
  Matrix m = zero_matrix(n, f);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(f);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("matrix sizes differ");
  Field f = n ? a[0][0].field() : Field();
  Matrix c = zero_matrix(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::vector<Scalar> matvec(const Matrix& a, const std::vector<Scalar>& v) {
  std::size_t n = a.size();
  if (v.size() != n) throw DimensionMismatch("matrix/vector sizes differ");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s = Scalar::zero(v.empty() ? Field() : v[0].field());
    for (std::size_t j = 0; j < n; ++j) s += a[i][j] * v[j];
    out.push_back(s);
  }
  return out;
}

Scalar determinant(Matrix a) {
  std::size_t n = a.size();
  if (n == 0) return Scalar::one(Field());
  Field f = a[0][0].field();
  Scalar det = Scalar::one(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Scalar inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Scalar factor = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  std::size_t n = a.size();
  if (n == 0) return a;
  Field f = a[0][0].field();
  Matrix m = a;
  Matrix inv = identity_matrix(n, f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw DivisionByZero("singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Scalar s = m[c][c].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= s;
      inv[c][k] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Scalar factor = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= factor * m[c][k];
        inv[r][k] -= factor * inv[c][k];
      }
    }
  }
  return inv;
}

bool is_upper_triangular(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!a[i][j].is_zero()) return false;
  return true;
}

Matrix permutation_matrix(const Permutation& sigma, Field f) {
  Matrix m = zero_matrix(sigma.size(), f);
  for (std::size_t j = 0; j < sigma.size(); ++j) m[sigma[j]][j] = Scalar::one(f);
  return m;
}

std::string matrix_str(const Matrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (j) out += ",";
      out += a[i][j].str();
    }
    out += "]";
  }
  return out + "]";
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation perm_inverse(const Permutation& s) {
  Permutation r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[s[i]] = i;
  return r;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

bool is_permutation(const Permutation& s) {
  std::vector<bool> seen(s.size(), false);
  for (auto v : s) {
    if (v >= s.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string perm_str(const Permutation& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "]";
}

}  // namespace tamex
