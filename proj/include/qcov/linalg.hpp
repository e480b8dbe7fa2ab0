#pragma once

#include "qcov/scalar.hpp"

#include <optional>
#include <vector>

namespace qcov {

using RatMatrix = std::vector<std::vector<RatFun>>;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Rank over Q(q), by fraction-free elimination after clearing denominators.
std::size_t matrix_rank(RatMatrix m);

/// Some solution of A x = b over Q(q), or nullopt if inconsistent.
std::optional<std::vector<RatFun>> solve(RatMatrix a, std::vector<RatFun> b);

/// Solves componentwise at pi = 1 and pi = -1 and recombines.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a, const std::vector<Scalar>& b);

/// Basis of the kernel read off the reduced row echelon form, so it does not
/// depend on pivot order; cols is the column count (rows may be empty).
std::vector<std::vector<RatFun>> nullspace(RatMatrix a, std::size_t cols);
/// Kernel at both values of pi; nullopt when the two dimensions differ.
std::optional<std::vector<std::vector<Scalar>>> nullspace(const ScalarMatrix& a, std::size_t cols);

std::size_t matrix_rank(const ScalarMatrix& a, int sign);

/// Inverse of a square matrix, or nullopt if singular in either component.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& a);

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace qcov
