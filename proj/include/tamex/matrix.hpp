#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tamex/scalar.hpp"

namespace tamex {

// Dense square matrices over the session field, row-major.
using Matrix = std::vector<std::vector<Scalar>>;

// Zero-based images: perm[j] = sigma(j).
using Permutation = std::vector<std::size_t>;

Matrix identity_matrix(std::size_t n, Field f);
Matrix zero_matrix(std::size_t n, Field f);
Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<Scalar> matvec(const Matrix& a, const std::vector<Scalar>& v);
Scalar determinant(Matrix a);
// Throws DivisionByZero when singular.
Matrix inverse(const Matrix& a);
bool is_upper_triangular(const Matrix& a);
// Matrix with a 1 at (sigma(j), j).
Matrix permutation_matrix(const Permutation& sigma, Field f);
std::string matrix_str(const Matrix& a);

Permutation identity_permutation(std::size_t n);
Permutation perm_inverse(const Permutation& s);
// (a*b)(j) = a(b(j)).
Permutation perm_compose(const Permutation& a, const Permutation& b);
bool is_permutation(const Permutation& s);
// One-based, e.g. "[2,1,3]".
std::string perm_str(const Permutation& s);

}  // namespace tamex
