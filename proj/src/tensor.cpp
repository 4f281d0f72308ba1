#include "ybwb/tensor.hpp"

namespace ybwb {

QTensor2 conj_action(const QMatrix& g, const QTensor2& t) {
  int n = g.n();
  Mat rows(static_cast<size_t>(n), Vec(static_cast<size_t>(n), Scalar(0)));
  for (const auto& [ij, c] : g.entries())
    rows[static_cast<size_t>(ij.first - 1)][static_cast<size_t>(ij.second - 1)] = c;
  auto inv = inverse(rows);
  if (!inv) throw std::domain_error("conj_action: singular matrix");
  QMatrix gi(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      gi.set(i, j, (*inv)[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]);
  return conj_action_with_inverse(g, gi, t);
}

std::vector<QMatrix> sl_basis(int n) {
  std::vector<QMatrix> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(QMatrix::unit(n, i, j));
  for (int i = 1; i < n; ++i) {
    QMatrix h(n);
    h.add(i, i, Scalar(1));
    h.add(i + 1, i + 1, Scalar(-1));
    out.push_back(std::move(h));
  }
  return out;
}

bool is_mcybe(const QTensor2& r) {
  QTensor3 br = yb_bracket(r);
  if (br.is_zero()) return false;
  for (const auto& x : sl_basis(r.n()))
    if (!ad_diag(x, br).is_zero()) return false;
  return true;
}

std::optional<Scalar> proportional(const QTensor2& r, const QTensor2& s) {
  r.require_same_n(s);
  if (r.is_zero() && s.is_zero()) return Scalar(1);
  if (r.is_zero() || s.is_zero()) return std::nullopt;
  if (r.terms().begin()->first != s.terms().begin()->first) return std::nullopt;
  Scalar lambda = r.terms().begin()->second / s.terms().begin()->second;
  if (r == s * lambda) return lambda;
  return std::nullopt;
}

bool in_sl_tensor_sl(const QTensor2& t) {
  // partial trace over slot 1: sum_i coeff(i,i,k,l) must vanish per (k,l)
  std::map<std::array<int, 2>, Scalar> tr1, tr2;
  for (const auto& [idx, c] : t.terms()) {
    if (idx[0] == idx[1]) tr1[{idx[2], idx[3]}] += c;
    if (idx[2] == idx[3]) tr2[{idx[0], idx[1]}] += c;
  }
  for (const auto& [k, v] : tr1)
    if (!is_zero(v)) return false;
  for (const auto& [k, v] : tr2)
    if (!is_zero(v)) return false;
  return true;
}

bool in_wedge3(const QTensor3& t) {
  struct Perm { int a, b, c; int sign; };
  static const Perm perms[] = {{0, 2, 1, -1}, {1, 0, 2, -1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {2, 1, 0, -1}};
  for (const auto& [idx, c] : t.terms()) {
    std::array<std::array<int, 2>, 3> slots{{{idx[0], idx[1]}, {idx[2], idx[3]}, {idx[4], idx[5]}}};
    for (const auto& p : perms) {
      std::array<int, 6> ni{slots[static_cast<size_t>(p.a)][0], slots[static_cast<size_t>(p.a)][1],
                            slots[static_cast<size_t>(p.b)][0], slots[static_cast<size_t>(p.b)][1],
                            slots[static_cast<size_t>(p.c)][0], slots[static_cast<size_t>(p.c)][1]};
      auto it = t.terms().find(ni);
      Scalar other = it == t.terms().end() ? Scalar(0) : it->second;
      if (other != c * p.sign) return false;
    }
  }
  return true;
}

PTensor2 lift(const QTensor2& t, int degree) {
  PTensor2 out(t.n());
  for (const auto& [idx, c] : t.terms()) out.add_term(idx, TPoly::t(degree, c));
  return out;
}

std::map<int, QTensor2> split_by_degree(const PTensor2& t) {
  std::map<int, QTensor2> out;
  out.emplace(0, QTensor2(t.n()));
  for (const auto& [idx, p] : t.terms())
    for (int d = 0; d <= p.degree(); ++d) {
      Scalar c = p.coeff(d);
      if (is_zero(c)) continue;
      auto it = out.find(d);
      if (it == out.end()) it = out.emplace(d, QTensor2(t.n())).first;
      it->second.add_term(idx, c);
    }
  return out;
}

MatSpan contraction_span(const QTensor2& r) {
  int n = r.n();
  std::map<std::array<int, 2>, QMatrix> by_slot1, by_slot2;
  for (const auto& [idx, c] : r.terms()) {
    auto it2 = by_slot2.find({idx[2], idx[3]});
    if (it2 == by_slot2.end()) it2 = by_slot2.emplace(std::array<int, 2>{idx[2], idx[3]}, QMatrix(n)).first;
    it2->second.add(idx[0], idx[1], c);
    auto it1 = by_slot1.find({idx[0], idx[1]});
    if (it1 == by_slot1.end()) it1 = by_slot1.emplace(std::array<int, 2>{idx[0], idx[1]}, QMatrix(n)).first;
    it1->second.add(idx[2], idx[3], c);
  }
  MatSpan s(n);
  for (const auto& [k, m] : by_slot2) s.insert(m);
  for (const auto& [k, m] : by_slot1) s.insert(m);
  return s;
}

}  // namespace ybwb
