#ifndef YBWB_MATRIX_HPP
#define YBWB_MATRIX_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "ybwb/scalar.hpp"

namespace ybwb {

/// Sparse n x n matrix over ring R (Scalar or TPoly), indexed by matrix
/// units e_ij with 1-based indices. Zero entries are never stored.
template <class R>
class SquareMatrix {
 public:
  using Index = std::pair<int, int>;
  using EntryMap = std::map<Index, R>;

  explicit SquareMatrix(int n = 0) : n_(n) {
    if (n < 0) throw std::invalid_argument("SquareMatrix: negative dimension");
  }

  static SquareMatrix unit(int n, int i, int j, const R& c = from_rational<R>(Scalar(1))) {
    SquareMatrix m(n);
    m.add(i, j, c);
    return m;
  }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i) m.add(i, i, from_rational<R>(Scalar(1)));
    return m;
  }

  int n() const { return n_; }
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  R get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? R{} : it->second;
  }

  void add(int i, int j, const R& c) {
    check_index(i, j);
    if (ybwb::is_zero(c)) return;
    auto [it, inserted] = entries_.emplace(Index{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (ybwb::is_zero(it->second)) entries_.erase(it);
    }
  }

  void set(int i, int j, const R& c) {
    check_index(i, j);
    if (ybwb::is_zero(c)) entries_.erase({i, j});
    else entries_[{i, j}] = c;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    require_same_n(o);
    for (const auto& [ij, c] : o.entries_) add(ij.first, ij.second, c);
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    require_same_n(o);
    for (const auto& [ij, c] : o.entries_) add(ij.first, ij.second, -c);
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }

  SquareMatrix operator-() const {
    SquareMatrix r(n_);
    for (const auto& [ij, c] : entries_) r.entries_.emplace(ij, -c);
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.require_same_n(b);
    SquareMatrix r(a.n_);
    for (const auto& [ij, x] : a.entries_) {
      auto it = b.entries_.lower_bound({ij.second, 0});
      for (; it != b.entries_.end() && it->first.first == ij.second; ++it)
        r.add(ij.first, it->first.second, x * it->second);
    }
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const R& c) {
    SquareMatrix r(a.n_);
    for (const auto& [ij, x] : a.entries_) r.add(ij.first, ij.second, x * c);
    return r;
  }
  friend SquareMatrix operator*(const R& c, const SquareMatrix& a) { return a * c; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  R trace() const {
    R t{};
    for (const auto& [ij, c] : entries_)
      if (ij.first == ij.second) t += c;
    return t;
  }

  void require_same_n(const SquareMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SquareMatrix: dimension mismatch");
  }

 private:
  void check_index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::out_of_range("SquareMatrix: index out of range");
  }

  int n_;
  EntryMap entries_;
};

using QMatrix = SquareMatrix<Scalar>;
using PMatrix = SquareMatrix<TPoly>;

/// Commutator AB - BA.
template <class R>
SquareMatrix<R> bracket(const SquareMatrix<R>& a, const SquareMatrix<R>& b) {
  return a * b - b * a;
}

/// Trace form tr(AB), evaluated without forming the product.
template <class R>
R trace_form(const SquareMatrix<R>& a, const SquareMatrix<R>& b) {
  a.require_same_n(b);
  R t{};
  for (const auto& [ij, x] : a.entries()) {
    R y = b.get(ij.second, ij.first);
    if (!is_zero(y)) t += x * y;
  }
  return t;
}

/// The involution e_ij -> e_{n+1-i,n+1-j}.
template <class R>
SquareMatrix<R> sigma_map(const SquareMatrix<R>& a) {
  SquareMatrix<R> r(a.n());
  int n = a.n();
  for (const auto& [ij, c] : a.entries()) r.add(n + 1 - ij.first, n + 1 - ij.second, c);
  return r;
}

template <class R>
bool is_nilpotent(const SquareMatrix<R>& a) {
  SquareMatrix<R> p = a;
  for (int k = 1; k < a.n(); ++k) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return p.is_zero();
}

/// exp(A) = sum_{k<n} A^k / k! for nilpotent A; A^n = 0 is verified by
/// repeated multiplication, not assumed.
template <class R>
SquareMatrix<R> nilpotent_exp(const SquareMatrix<R>& a) {
  int n = a.n();
  SquareMatrix<R> out = SquareMatrix<R>::identity(n);
  SquareMatrix<R> p = a;
  Scalar factorial(1);
  for (int k = 1; k < n; ++k) {
    if (p.is_zero()) return out;
    factorial *= k;
    for (const auto& [ij, c] : p.entries()) out.add(ij.first, ij.second, c / factorial);
    p = p * a;
  }
  if (!p.is_zero()) throw std::domain_error("nilpotent_exp: matrix is not nilpotent");
  return out;
}

/// Lifts a rational matrix into the polynomial ring, optionally scaled
/// by t^degree.
inline PMatrix lift(const QMatrix& a, int degree = 0) {
  PMatrix r(a.n());
  for (const auto& [ij, c] : a.entries()) r.add(ij.first, ij.second, TPoly::t(degree, c));
  return r;
}

}  // namespace ybwb

#endif
