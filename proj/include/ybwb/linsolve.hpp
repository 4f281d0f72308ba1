#ifndef YBWB_LINSOLVE_HPP
#define YBWB_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "ybwb/scalar.hpp"

namespace ybwb {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major, possibly ragged rows forbidden

struct LinearSolution {
  Vec particular;              ///< one exact solution of A x = b
  std::vector<Vec> nullspace;  ///< echelonized basis of ker A
};

/// Exact Gaussian elimination. Returns nullopt iff the system is
/// inconsistent; never fails numerically.
std::optional<LinearSolution> solve_linear(const Mat& a, const Vec& b);

/// Row echelon reduction in place helpers used across the project.
int rank(Mat a);

/// Echelonized basis of the nullspace of a (columns = unknowns).
std::vector<Vec> nullspace(const Mat& a, int ncols);

/// Inverse of a square matrix; nullopt if singular.
std::optional<Mat> inverse(const Mat& a);

bool is_zero_vec(const Vec& v);

}  // namespace ybwb

#endif
