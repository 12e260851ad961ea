#pragma once

// Dense exact linear algebra over K, for transition matrices and rank checks.

#include <cstddef>
#include <vector>

#include "fockbridge/scalar.hpp"

namespace fockbridge {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);
/// Gauss-Jordan inverse; throws Error when the matrix is singular.
ScalarMatrix invert(const ScalarMatrix& m);
std::size_t rank(ScalarMatrix m);

}  // namespace fockbridge
