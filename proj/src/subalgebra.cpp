#include "ybwb/subalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybwb {

namespace {

int flat_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }

// First nonzero coordinate in row-major order, or -1.
int leading_coord(const QMatrix& m) {
  if (m.is_zero()) return -1;
  const auto& ij = m.entries().begin()->first;
  return flat_index(m.n(), ij.first, ij.second);
}

}  // namespace

QMatrix MatSpan::reduce(const QMatrix& m) const {
  QMatrix r = m;
  for (size_t k = 0; k < basis_.size(); ++k) {
    int p = pivots_[k];
    Scalar c = r.get(p / n_ + 1, p % n_ + 1);
    if (!is_zero(c)) r -= basis_[k] * c;
  }
  return r;
}

bool MatSpan::insert(const QMatrix& m) {
  if (m.n() != n_) throw std::invalid_argument("MatSpan: dimension mismatch");
  QMatrix r = reduce(m);
  if (r.is_zero()) return false;
  int p = leading_coord(r);
  r = r * (Scalar(1) / r.get(p / n_ + 1, p % n_ + 1));
  // eliminate the new pivot from existing basis rows
  for (size_t k = 0; k < basis_.size(); ++k) {
    Scalar c = basis_[k].get(p / n_ + 1, p % n_ + 1);
    if (!is_zero(c)) basis_[k] -= r * c;
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  basis_.insert(basis_.begin() + static_cast<long>(idx), std::move(r));
  return true;
}

bool MatSpan::contains(const QMatrix& m) const { return reduce(m).is_zero(); }

Vec MatSpan::coordinates(const QMatrix& m) const {
  if (!contains(m)) throw std::invalid_argument("MatSpan: matrix not in span");
  Vec c(basis_.size());
  for (size_t k = 0; k < basis_.size(); ++k) {
    int p = pivots_[k];
    c[k] = m.get(p / n_ + 1, p % n_ + 1);
  }
  return c;
}

QMatrix MatSpan::from_coordinates(const Vec& c) const {
  if (c.size() != basis_.size()) throw std::invalid_argument("MatSpan: bad coordinate size");
  QMatrix m(n_);
  for (size_t k = 0; k < c.size(); ++k)
    if (!is_zero(c[k])) m += basis_[k] * c[k];
  return m;
}

bool operator==(const MatSpan& a, const MatSpan& b) {
  return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

MatSpan MatSpan::intersect(const MatSpan& other) const {
  // Combinations of the other basis whose reduction against this span
  // vanishes; residues are linear in the combination coefficients.
  MatSpan out(n_);
  if (other.dim() == 0 || dim() == 0) return out;
  std::vector<QMatrix> residues;
  residues.reserve(static_cast<size_t>(other.dim()));
  for (const auto& m : other.basis_) residues.push_back(reduce(m));
  Mat rows(static_cast<size_t>(n_ * n_), Vec(static_cast<size_t>(other.dim()), Scalar(0)));
  for (size_t k = 0; k < residues.size(); ++k)
    for (const auto& [ij, c] : residues[k].entries())
      rows[static_cast<size_t>(flat_index(n_, ij.first, ij.second))][k] = c;
  for (const auto& comb : nullspace(rows, other.dim())) {
    QMatrix m(n_);
    for (size_t k = 0; k < comb.size(); ++k)
      if (!is_zero(comb[k])) m += other.basis_[k] * comb[k];
    out.insert(m);
  }
  return out;
}

MatSpan MatSpan::span_of(int n, const std::vector<QMatrix>& mats) {
  MatSpan s(n);
  for (const auto& m : mats) s.insert(m);
  return s;
}

bool Subalgebra::is_abelian() const {
  const auto& b = basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (!bracket(b[i], b[j]).is_zero()) return false;
  return true;
}

bool Subalgebra::check_closed() const {
  const auto& b = basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (!span.contains(bracket(b[i], b[j]))) return false;
  return true;
}

Subalgebra subalgebra_closure(int n, const std::vector<QMatrix>& gens) {
  MatSpan s(n);
  for (const auto& g : gens) {
    if (g.n() != n) throw std::invalid_argument("subalgebra_closure: dimension mismatch");
    s.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = s.basis();
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j)
        grew |= s.insert(bracket(snapshot[i], snapshot[j]));
  }
  return Subalgebra{std::move(s)};
}

Subalgebra make_subalgebra(MatSpan span) {
  Subalgebra s{std::move(span)};
  if (!s.check_closed()) throw std::domain_error("make_subalgebra: span not bracket-closed");
  return s;
}

MatSpan derived_subspace(const Subalgebra& s) {
  MatSpan d(s.n());
  const auto& b = s.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) d.insert(bracket(b[i], b[j]));
  return d;
}

Mat killing_form(const Subalgebra& s) {
  int d = s.dim();
  const auto& b = s.basis();
  // ad matrices in the echelon basis
  std::vector<Mat> ad(static_cast<size_t>(d), Mat(static_cast<size_t>(d), Vec(static_cast<size_t>(d), Scalar(0))));
  for (int a = 0; a < d; ++a)
    for (int k = 0; k < d; ++k) {
      Vec c = s.span.coordinates(bracket(b[static_cast<size_t>(a)], b[static_cast<size_t>(k)]));
      for (int m = 0; m < d; ++m) ad[static_cast<size_t>(a)][static_cast<size_t>(m)][static_cast<size_t>(k)] = c[static_cast<size_t>(m)];
    }
  Mat kf(static_cast<size_t>(d), Vec(static_cast<size_t>(d), Scalar(0)));
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) {
      Scalar t(0);
      for (int m = 0; m < d; ++m)
        for (int k = 0; k < d; ++k)
          t += ad[static_cast<size_t>(a)][static_cast<size_t>(m)][static_cast<size_t>(k)] *
               ad[static_cast<size_t>(c)][static_cast<size_t>(k)][static_cast<size_t>(m)];
      kf[static_cast<size_t>(a)][static_cast<size_t>(c)] = t;
    }
  return kf;
}

bool is_solvable(const Subalgebra& s) {
  MatSpan cur = s.span;
  for (int step = 0; step <= s.dim(); ++step) {
    if (cur.dim() == 0) return true;
    MatSpan next(s.n());
    const auto& b = cur.basis();
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) next.insert(bracket(b[i], b[j]));
    if (next.dim() == cur.dim()) return false;  // derived series stalled
    cur = std::move(next);
  }
  return cur.dim() == 0;
}

bool is_ideal(const Subalgebra& s, const MatSpan& ideal) {
  for (const auto& x : s.basis())
    for (const auto& y : ideal.basis())
      if (!ideal.contains(bracket(x, y))) return false;
  return true;
}

Subalgebra solvable_radical(const Subalgebra& s) {
  int d = s.dim();
  if (d == 0) return s;
  Mat kf = killing_form(s);
  MatSpan der = derived_subspace(s);
  Mat eqs;
  for (const auto& dm : der.basis()) {
    Vec cd = s.span.coordinates(dm);
    Vec row(static_cast<size_t>(d), Scalar(0));
    for (int a = 0; a < d; ++a) {
      Scalar t(0);
      for (int bcol = 0; bcol < d; ++bcol) t += kf[static_cast<size_t>(a)][static_cast<size_t>(bcol)] * cd[static_cast<size_t>(bcol)];
      row[static_cast<size_t>(a)] = t;
    }
    eqs.push_back(std::move(row));
  }
  MatSpan rad(s.n());
  if (eqs.empty()) {
    rad = s.span;  // abelian: radical is everything
  } else {
    for (const auto& comb : nullspace(eqs, d)) rad.insert(s.span.from_coordinates(comb));
  }
  Subalgebra r{std::move(rad)};
  if (!r.check_closed()) throw std::domain_error("solvable_radical: result not a subalgebra");
  if (!is_solvable(r)) throw std::domain_error("solvable_radical: result not solvable");
  if (!is_ideal(s, r.span)) throw std::domain_error("solvable_radical: result not an ideal");
  return r;
}

}  // namespace ybwb
