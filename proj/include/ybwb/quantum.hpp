#ifndef YBWB_QUANTUM_HPP
#define YBWB_QUANTUM_HPP

#include <map>
#include <vector>

#include "ybwb/report.hpp"
#include "ybwb/tensor.hpp"

namespace ybwb {

/// Sparse square matrix of side `dim` (n^2 for tensor representations,
/// n^3 for the triple placements), 1-based indices. The index
/// convention is fixed once: e_ij (x) e_kl occupies row (i-1)n+k,
/// column (j-1)n+l.
template <class R>
class BigMatrix {
 public:
  using EntryMap = std::map<std::pair<int, int>, R>;

  explicit BigMatrix(int dim = 0) : dim_(dim) {}

  static BigMatrix identity(int dim) {
    BigMatrix m(dim);
    for (int i = 1; i <= dim; ++i) m.add(i, i, from_rational<R>(Scalar(1)));
    return m;
  }

  int dim() const { return dim_; }
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  R get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? R{} : it->second;
  }

  void add(int r, int c, const R& v) {
    if (r < 1 || r > dim_ || c < 1 || c > dim_)
      throw std::out_of_range("BigMatrix: index out of range");
    if (ybwb::is_zero(v)) return;
    auto [it, inserted] = entries_.emplace(std::pair<int, int>{r, c}, v);
    if (!inserted) {
      it->second += v;
      if (ybwb::is_zero(it->second)) entries_.erase(it);
    }
  }

  BigMatrix& operator+=(const BigMatrix& o) {
    for (const auto& [rc, v] : o.entries_) add(rc.first, rc.second, v);
    return *this;
  }
  friend BigMatrix operator+(BigMatrix a, const BigMatrix& b) { return a += b; }
  friend BigMatrix operator*(const BigMatrix& a, const R& c) {
    BigMatrix r(a.dim_);
    for (const auto& [rc, v] : a.entries_) r.add(rc.first, rc.second, v * c);
    return r;
  }

  friend BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("BigMatrix: dimension mismatch");
    // row-grouped sparse product
    std::vector<std::vector<std::pair<int, const R*>>> brows(static_cast<size_t>(b.dim_) + 1);
    for (const auto& [rc, v] : b.entries_)
      brows[static_cast<size_t>(rc.first)].push_back({rc.second, &v});
    BigMatrix out(a.dim_);
    for (const auto& [rc, v] : a.entries_)
      for (const auto& [col, bv] : brows[static_cast<size_t>(rc.second)])
        out.add(rc.first, col, v * *bv);
    return out;
  }

  friend bool operator==(const BigMatrix& a, const BigMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  int dim_;
  EntryMap entries_;
};

using QBigMatrix = BigMatrix<Scalar>;
using PBigMatrix = BigMatrix<TPoly>;

/// Kronecker representation of a two-tensor as an n^2 x n^2 matrix.
template <class R>
BigMatrix<R> to_matrix(const Tensor2<R>& t) {
  int n = t.n();
  BigMatrix<R> m(n * n);
  for (const auto& [idx, c] : t.terms())
    m.add((idx[0] - 1) * n + idx[2], (idx[1] - 1) * n + idx[3], c);
  return m;
}

/// b^3 = 0 as an n^2 x n^2 matrix?
bool cube_zero(const QTensor2& b);

/// exp(t b) = 1 + t b + (t^2/2) b^2, defined when b has cube zero.
PBigMatrix exp_quantize(const QTensor2& b);

/// B12 B13 B23 = B23 B13 B12 on the n^3-dimensional triple space,
/// verified over exact polynomial entries.
template <class R>
bool qybe_check(const BigMatrix<R>& b, int n) {
  if (b.dim() != n * n) throw std::invalid_argument("qybe_check: matrix is not n^2 x n^2");
  int n3 = n * n * n;
  BigMatrix<R> b12(n3), b13(n3), b23(n3);
  for (const auto& [rc, v] : b.entries()) {
    int i = (rc.first - 1) / n + 1, k = (rc.first - 1) % n + 1;
    int j = (rc.second - 1) / n + 1, l = (rc.second - 1) % n + 1;
    for (int m = 1; m <= n; ++m) {
      b12.add(((i - 1) * n + k - 1) * n + m, ((j - 1) * n + l - 1) * n + m, v);
      b13.add(((i - 1) * n + m - 1) * n + k, ((j - 1) * n + m - 1) * n + l, v);
      b23.add(((m - 1) * n + i - 1) * n + k, ((m - 1) * n + j - 1) * n + l, v);
    }
  }
  return b12 * b13 * b23 == b23 * b13 * b12;
}

struct CubeZeroRecord {
  int n = 0;
  bool cube_zero = false;
  bool qybe = false;  // meaningful only when cube_zero holds
};

/// Records cube_zero(b_cg_closed(n)) for n = 3..max_n and runs the
/// quantum check whenever the cube vanishes. Guarded at n <= 12 by
/// default (YBWB_GUARD_N raises it).
std::vector<CubeZeroRecord> cube_zero_sweep(int max_n);

/// Plain-text aligned grid of the matrix entries, for visual diffing.
std::string grid_format(const PBigMatrix& m);
std::string grid_format(const QBigMatrix& m);

}  // namespace ybwb

#endif
