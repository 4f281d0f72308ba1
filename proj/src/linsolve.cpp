#include "ybwb/linsolve.hpp"

#include <map>
#include <stdexcept>

namespace ybwb {

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

namespace {

// Reduced row echelon form of [A | b] (or plain A when b is null).
// Returns pivot column -> row map.
std::map<int, int> rref_inplace(Mat& rows, int ncols) {
  std::map<int, int> pivot_of_col;
  int r = 0;
  int nrows = static_cast<int>(rows.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = -1;
    for (int k = r; k < nrows; ++k)
      if (!is_zero(rows[k][c])) { p = k; break; }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    Scalar pv = rows[r][c];
    for (auto& x : rows[r]) x /= pv;
    for (int k = 0; k < nrows; ++k) {
      if (k == r || is_zero(rows[k][c])) continue;
      Scalar f = rows[k][c];
      for (size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= f * rows[r][j];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  return pivot_of_col;
}

}  // namespace

std::optional<LinearSolution> solve_linear(const Mat& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: rhs size mismatch");
  size_t ncols = a.empty() ? 0 : a.front().size();
  for (const auto& row : a)
    if (row.size() != ncols) throw std::invalid_argument("solve_linear: ragged matrix");

  Mat aug(a.size(), Vec(ncols + 1, Scalar(0)));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < ncols; ++j) aug[i][j] = a[i][j];
    aug[i][ncols] = b[i];
  }
  auto pivots = rref_inplace(aug, static_cast<int>(ncols));

  // Inconsistent iff some row reads 0 = nonzero.
  for (const auto& row : aug) {
    bool lhs_zero = true;
    for (size_t j = 0; j < ncols; ++j)
      if (!is_zero(row[j])) { lhs_zero = false; break; }
    if (lhs_zero && !is_zero(row[ncols])) return std::nullopt;
  }

  LinearSolution sol;
  sol.particular.assign(ncols, Scalar(0));
  for (const auto& [c, r] : pivots) sol.particular[static_cast<size_t>(c)] = aug[r][ncols];

  for (size_t fc = 0; fc < ncols; ++fc) {
    if (pivots.count(static_cast<int>(fc))) continue;
    Vec v(ncols, Scalar(0));
    v[fc] = 1;
    for (const auto& [c, r] : pivots) v[static_cast<size_t>(c)] = -aug[r][fc];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

int rank(Mat a) {
  if (a.empty()) return 0;
  auto pivots = rref_inplace(a, static_cast<int>(a.front().size()));
  return static_cast<int>(pivots.size());
}

std::vector<Vec> nullspace(const Mat& a, int ncols) {
  Mat rows = a;
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != ncols)
      throw std::invalid_argument("nullspace: ragged matrix");
  auto pivots = rref_inplace(rows, ncols);
  std::vector<Vec> out;
  for (int fc = 0; fc < ncols; ++fc) {
    if (pivots.count(fc)) continue;
    Vec v(static_cast<size_t>(ncols), Scalar(0));
    v[static_cast<size_t>(fc)] = 1;
    for (const auto& [c, r] : pivots) v[static_cast<size_t>(c)] = -rows[r][static_cast<size_t>(fc)];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Mat> inverse(const Mat& a) {
  size_t d = a.size();
  for (const auto& row : a)
    if (row.size() != d) throw std::invalid_argument("inverse: non-square matrix");
  Mat aug(d, Vec(2 * d, Scalar(0)));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) aug[i][j] = a[i][j];
    aug[i][d + i] = 1;
  }
  auto pivots = rref_inplace(aug, static_cast<int>(d));
  if (pivots.size() != d) return std::nullopt;
  Mat inv(d, Vec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
  return inv;
}

}  // namespace ybwb
