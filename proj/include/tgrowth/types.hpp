#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace tgrowth {

using Index = std::int32_t;
using Vector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest n for which dense n-by-n intermediates may be formed without an
/// explicit override. Matrix-free paths exist to avoid crossing this wall.
inline constexpr Index kDenseSizeGuard = 4096;

/// Throws DenseGuardError if n exceeds kDenseSizeGuard and no override is set.
void check_dense_guard(Index n, bool override_guard = false);

}  // namespace tgrowth
