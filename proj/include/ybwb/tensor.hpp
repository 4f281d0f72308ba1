#ifndef YBWB_TENSOR_HPP
#define YBWB_TENSOR_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ybwb/matrix.hpp"
#include "ybwb/subalgebra.hpp"

namespace ybwb {

/// Sparse element of gl(n) (x) gl(n): terms map (i,j,k,l) -> c for
/// c * e_ij (x) e_kl. Kept in gl(n) matrix-unit coordinates throughout;
/// membership in sl /\ sl is a predicate, not an enforced invariant.
template <class R>
class Tensor2 {
 public:
  using Index = std::array<int, 4>;
  using TermMap = std::map<Index, R>;

  explicit Tensor2(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? R{} : it->second;
  }

  void add_term(const Index& idx, const R& c) {
    for (int v : idx)
      if (v < 1 || v > n_) throw std::out_of_range("Tensor2: index out of range");
    if (ybwb::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (ybwb::is_zero(it->second)) terms_.erase(it);
    }
  }

  Tensor2& operator+=(const Tensor2& o) {
    require_same_n(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  Tensor2& operator-=(const Tensor2& o) {
    require_same_n(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
  }
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Tensor2& a, const R& c) {
    Tensor2 r(a.n_);
    for (const auto& [idx, x] : a.terms_) r.add_term(idx, x * c);
    return r;
  }
  friend Tensor2 operator*(const R& c, const Tensor2& a) { return a * c; }
  Tensor2 operator-() const { return *this * from_rational<R>(Scalar(-1)); }

  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void require_same_n(const Tensor2& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Tensor2: dimension mismatch");
  }

 private:
  int n_;
  TermMap terms_;
};

/// Sparse element of gl(n) (x) gl(n) (x) gl(n).
template <class R>
class Tensor3 {
 public:
  using Index = std::array<int, 6>;
  using TermMap = std::map<Index, R>;

  explicit Tensor3(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Index& idx, const R& c) {
    if (ybwb::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (ybwb::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  TermMap terms_;
};

using QTensor2 = Tensor2<Scalar>;
using QTensor3 = Tensor3<Scalar>;
using PTensor2 = Tensor2<TPoly>;
using PTensor3 = Tensor3<TPoly>;

template <class R>
Tensor2<R> tensor_product(const SquareMatrix<R>& a, const SquareMatrix<R>& b, const R& c) {
  a.require_same_n(b);
  Tensor2<R> t(a.n());
  if (ybwb::is_zero(c)) return t;
  for (const auto& [ij, x] : a.entries())
    for (const auto& [kl, y] : b.entries())
      t.add_term({ij.first, ij.second, kl.first, kl.second}, x * y * c);
  return t;
}

/// a /\ b = (1/2)(a (x) b - b (x) a).
template <class R>
Tensor2<R> wedge(const SquareMatrix<R>& a, const SquareMatrix<R>& b) {
  R half = from_rational<R>(rational(1, 2));
  Tensor2<R> t = tensor_product(a, b, half);
  t -= tensor_product(b, a, half);
  return t;
}

template <class R>
bool is_skew(const Tensor2<R>& t) {
  for (const auto& [idx, c] : t.terms()) {
    typename Tensor2<R>::Index flipped{idx[2], idx[3], idx[0], idx[1]};
    if (!ybwb::is_zero(t.coeff(flipped) + c)) return false;
  }
  return true;
}

/// [r12,r13] + [r12,r23] + [r13,r23] computed by positional composition
/// of matrix units; for r in g (x) g all three summands land in g^(x)3.
template <class R>
Tensor3<R> yb_bracket(const Tensor2<R>& r) {
  if (!is_skew(r)) throw std::invalid_argument("yb_bracket: input is not skew");
  Tensor3<R> out(r.n());
  const auto& terms = r.terms();
  for (const auto& [u, cu] : terms) {      // cu * e_{u0 u1} (x) e_{u2 u3}
    for (const auto& [v, cv] : terms) {    // cv * e_{v0 v1} (x) e_{v2 v3}
      R c = cu * cv;
      // [r12, r13] = [a, a'] (x) b (x) b'
      if (u[1] == v[0]) out.add_term({u[0], v[1], u[2], u[3], v[2], v[3]}, c);
      if (v[1] == u[0]) out.add_term({v[0], u[1], u[2], u[3], v[2], v[3]}, -c);
      // [r12, r23] = a (x) [b, a'] (x) b'
      if (u[3] == v[0]) out.add_term({u[0], u[1], u[2], v[1], v[2], v[3]}, c);
      if (v[1] == u[2]) out.add_term({u[0], u[1], v[0], u[3], v[2], v[3]}, -c);
      // [r13, r23] = a (x) a' (x) [b, b']
      if (u[3] == v[2]) out.add_term({u[0], u[1], v[0], v[1], u[2], v[3]}, c);
      if (v[3] == u[2]) out.add_term({u[0], u[1], v[0], v[1], v[2], u[3]}, -c);
    }
  }
  return out;
}

/// Applies [x, .] in each tensor slot and sums.
template <class R>
Tensor2<R> ad_diag(const SquareMatrix<R>& x, const Tensor2<R>& t) {
  if (x.n() != t.n()) throw std::invalid_argument("ad_diag: dimension mismatch");
  Tensor2<R> out(t.n());
  for (const auto& [idx, c] : t.terms()) {
    for (int slot = 0; slot < 2; ++slot) {
      int a = idx[2 * slot], b = idx[2 * slot + 1];
      for (const auto& [pq, xc] : x.entries()) {
        auto [p, q] = pq;
        R v = xc * c;
        if (q == a) {  // x e_ab = e_pb
          auto ni = idx; ni[2 * slot] = p; ni[2 * slot + 1] = b;
          out.add_term(ni, v);
        }
        if (b == p) {  // e_ab x = e_aq
          auto ni = idx; ni[2 * slot] = a; ni[2 * slot + 1] = q;
          out.add_term(ni, -v);
        }
      }
    }
  }
  return out;
}

template <class R>
Tensor3<R> ad_diag(const SquareMatrix<R>& x, const Tensor3<R>& t) {
  if (x.n() != t.n()) throw std::invalid_argument("ad_diag: dimension mismatch");
  Tensor3<R> out(t.n());
  for (const auto& [idx, c] : t.terms()) {
    for (int slot = 0; slot < 3; ++slot) {
      int a = idx[2 * slot], b = idx[2 * slot + 1];
      for (const auto& [pq, xc] : x.entries()) {
        auto [p, q] = pq;
        R v = xc * c;
        if (q == a) {
          auto ni = idx; ni[2 * slot] = p; ni[2 * slot + 1] = b;
          out.add_term(ni, v);
        }
        if (b == p) {
          auto ni = idx; ni[2 * slot] = a; ni[2 * slot + 1] = q;
          out.add_term(ni, -v);
        }
      }
    }
  }
  return out;
}

/// g . r with both g and its exact inverse supplied by the caller; each
/// matrix-unit slot is conjugated and the products re-expanded.
template <class R>
Tensor2<R> conj_action_with_inverse(const SquareMatrix<R>& g, const SquareMatrix<R>& g_inv,
                                    const Tensor2<R>& t) {
  if (g.n() != t.n() || g_inv.n() != t.n())
    throw std::invalid_argument("conj_action: dimension mismatch");
  Tensor2<R> out(t.n());
  std::map<std::pair<int, int>, SquareMatrix<R>> cache;
  auto conj_unit = [&](int i, int j) -> const SquareMatrix<R>& {
    auto it = cache.find({i, j});
    if (it != cache.end()) return it->second;
    SquareMatrix<R> m = g * SquareMatrix<R>::unit(t.n(), i, j) * g_inv;
    return cache.emplace(std::pair<int, int>{i, j}, std::move(m)).first->second;
  };
  for (const auto& [idx, c] : t.terms()) {
    const auto& a = conj_unit(idx[0], idx[1]);
    const auto& b = conj_unit(idx[2], idx[3]);
    for (const auto& [uv, x] : a.entries())
      for (const auto& [wz, y] : b.entries())
        out.add_term({uv.first, uv.second, wz.first, wz.second}, x * y * c);
  }
  return out;
}

/// Slotwise conjugation in all three slots (for equivariance checks).
template <class R>
Tensor3<R> conj_action_with_inverse(const SquareMatrix<R>& g, const SquareMatrix<R>& g_inv,
                                    const Tensor3<R>& t) {
  Tensor3<R> out(t.n());
  std::map<std::pair<int, int>, SquareMatrix<R>> cache;
  auto conj_unit = [&](int i, int j) -> const SquareMatrix<R>& {
    auto it = cache.find({i, j});
    if (it != cache.end()) return it->second;
    SquareMatrix<R> m = g * SquareMatrix<R>::unit(t.n(), i, j) * g_inv;
    return cache.emplace(std::pair<int, int>{i, j}, std::move(m)).first->second;
  };
  for (const auto& [idx, c] : t.terms()) {
    const auto& a = conj_unit(idx[0], idx[1]);
    const auto& b = conj_unit(idx[2], idx[3]);
    const auto& d = conj_unit(idx[4], idx[5]);
    for (const auto& [uv, x] : a.entries())
      for (const auto& [wz, y] : b.entries())
        for (const auto& [pq, z] : d.entries())
          out.add_term({uv.first, uv.second, wz.first, wz.second, pq.first, pq.second},
                       x * y * z * c);
  }
  return out;
}

/// g . r for invertible rational g; the inverse is computed exactly.
QTensor2 conj_action(const QMatrix& g, const QTensor2& t);

/// Standard basis of sl(n): all e_ij (i != j) and e_ii - e_{i+1,i+1}.
std::vector<QMatrix> sl_basis(int n);

template <class R>
bool is_cybe(const Tensor2<R>& r) {
  return yb_bracket(r).is_zero();
}

/// True iff <r,r> is nonzero and invariant under ad x for every x in the
/// standard sl(n) basis.
bool is_mcybe(const QTensor2& r);

/// lambda with r = lambda * s, if any. Both zero yields 1; exactly one
/// zero yields nullopt.
std::optional<Scalar> proportional(const QTensor2& r, const QTensor2& s);

/// Both partial traces vanish, so each slot resolves to a traceless
/// matrix: the tensor lies in sl(n) (x) sl(n).
bool in_sl_tensor_sl(const QTensor2& t);

/// Slotwise application of e_ij -> e_{n+1-i,n+1-j}.
template <class R>
Tensor2<R> sigma_map(const Tensor2<R>& t) {
  Tensor2<R> out(t.n());
  int n = t.n();
  for (const auto& [idx, c] : t.terms())
    out.add_term({n + 1 - idx[0], n + 1 - idx[1], n + 1 - idx[2], n + 1 - idx[3]}, c);
  return out;
}

/// Total antisymmetry under slot permutations (membership in /\^3 g).
bool in_wedge3(const QTensor3& t);

PTensor2 lift(const QTensor2& t, int degree = 0);

/// Splits a polynomial tensor into rational tensors by t-degree;
/// only nonzero degrees are present except degree 0, always included.
std::map<int, QTensor2> split_by_degree(const PTensor2& t);

/// Span of all single-slot contractions of r (the image of the
/// contraction map from linear functionals into gl(n)).
MatSpan contraction_span(const QTensor2& r);

}  // namespace ybwb

#endif
