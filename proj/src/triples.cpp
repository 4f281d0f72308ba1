#include "ybwb/triples.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ybwb {

int guard_limit(int default_limit) {
  const char* env = std::getenv("YBWB_GUARD_N");
  if (!env) return default_limit;
  int v = std::atoi(env);
  return v > default_limit ? v : default_limit;
}

TripleReport validate_triple(const Triple& t) {
  TripleReport rep;
  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

  if (t.n < 2) fail("n must be at least 2");
  for (int j : t.pi1)
    if (j < 1 || j > t.n - 1) fail("pi1 element " + std::to_string(j) + " out of range");
  for (int j : t.pi2)
    if (j < 1 || j > t.n - 1) fail("pi2 element " + std::to_string(j) + " out of range");
  if (t.pi1.size() != t.pi2.size()) fail("pi1 and pi2 have different sizes");
  if (t.T.size() != t.pi1.size()) fail("T is not total on pi1");
  std::set<int> image;
  for (const auto& [src, dst] : t.T) {
    if (!t.pi1.count(src)) fail("T defined outside pi1 at " + std::to_string(src));
    if (!t.pi2.count(dst)) fail("T maps " + std::to_string(src) + " outside pi2");
    if (!image.insert(dst).second) fail("T not injective at image " + std::to_string(dst));
  }
  if (!rep.violations.empty()) return rep;

  // Cartan pairing preservation: |i-j| = 1 iff |Ti-Tj| = 1.
  for (int i : t.pi1)
    for (int j : t.pi1) {
      if (i >= j) continue;
      bool adj = (j - i == 1);
      bool img_adj = std::abs(t.T.at(i) - t.T.at(j)) == 1;
      if (adj != img_adj)
        fail("T does not preserve the Cartan pairing on (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
    }

  // Nilpotency: iterating T must leave pi1.
  for (int start : t.pi1) {
    int cur = start;
    bool escaped = false;
    for (size_t step = 0; step <= t.pi1.size(); ++step) {
      int next = t.T.at(cur);
      if (!t.pi1.count(next)) { escaped = true; break; }
      cur = next;
    }
    if (!escaped) fail("T iterates inside pi1 forever starting from " + std::to_string(start));
  }

  rep.valid = rep.violations.empty();
  return rep;
}

Triple cg_triple(int n, int i) {
  if (i < 1 || i > n - 1) throw std::domain_error("cg_triple: i out of range");
  if (std::gcd(i, n) != 1) throw std::domain_error("cg_triple: i and n are not coprime");
  Triple t;
  t.n = n;
  for (int j = 1; j <= n - 1; ++j) {
    if (j != n - i) t.pi1.insert(j);
    if (j != i) t.pi2.insert(j);
  }
  for (int j : t.pi1) t.T[j] = (j + i) % n;
  auto rep = validate_triple(t);
  if (!rep.valid) throw std::logic_error("cg_triple: constructed triple failed validation");
  return t;
}

std::vector<Triple> enumerate_one_omitted(int n) {
  int limit = guard_limit(9);
  if (n > limit)
    throw std::domain_error("enumerate_one_omitted: n exceeds guard (" + std::to_string(limit) + ")");
  std::vector<Triple> out;
  std::vector<int> all(static_cast<size_t>(n - 1));
  std::iota(all.begin(), all.end(), 1);
  for (int skip1 = 1; skip1 <= n - 1; ++skip1) {
    std::vector<int> s1;
    for (int j : all)
      if (j != skip1) s1.push_back(j);
    for (int skip2 = 1; skip2 <= n - 1; ++skip2) {
      std::vector<int> s2;
      for (int j : all)
        if (j != skip2) s2.push_back(j);
      std::vector<int> perm = s2;
      std::sort(perm.begin(), perm.end());
      do {
        Triple t;
        t.n = n;
        t.pi1.insert(s1.begin(), s1.end());
        t.pi2.insert(s2.begin(), s2.end());
        for (size_t k = 0; k < s1.size(); ++k) t.T[s1[k]] = perm[k];
        if (validate_triple(t).valid) out.push_back(std::move(t));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

QTensor2 gamma_term(int n) {
  QTensor2 g(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      g += wedge(QMatrix::unit(n, a, b), QMatrix::unit(n, b, a));
  return g;
}

QTensor2 beta_cg(int n, int i) {
  if (std::gcd(i, n) != 1) throw std::domain_error("beta_cg: i and n are not coprime");
  QTensor2 b(n);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      int s = 0;
      for (int cand = 1; cand <= n - 1; ++cand)
        if ((q - p) % n == (cand * i) % n) { s = cand; break; }
      Scalar coeff = rational(n - 2 * s, n);
      b += coeff * wedge(QMatrix::unit(n, p, p), QMatrix::unit(n, q, q));
    }
  return b;
}

namespace {

// (1 (x) alpha_s) applied to a diagonal-pair tensor: contracts the
// second slot with the root functional alpha_s(e_qq) = d_qs - d_{q,s+1}.
Vec root_contract(const QTensor2& beta, int n, int s) {
  Vec out(static_cast<size_t>(n), Scalar(0));
  for (const auto& [idx, c] : beta.terms()) {
    if (idx[0] != idx[1] || idx[2] != idx[3]) continue;
    int p = idx[0], q = idx[2];
    Scalar val = (q == s ? c : Scalar(0)) - (q == s + 1 ? c : Scalar(0));
    out[static_cast<size_t>(p - 1)] += val;
  }
  return out;
}

}  // namespace

bool beta_equation_holds(const QTensor2& beta, int n, int pi, int t_pi) {
  Vec lhs = root_contract(beta, n, t_pi);
  Vec from = root_contract(beta, n, pi);
  for (int p = 0; p < n; ++p) lhs[static_cast<size_t>(p)] -= from[static_cast<size_t>(p)];
  Vec rhs(static_cast<size_t>(n), Scalar(0));
  rhs[static_cast<size_t>(t_pi - 1)] += rational(1, 2);
  rhs[static_cast<size_t>(t_pi)] -= rational(1, 2);
  rhs[static_cast<size_t>(pi - 1)] += rational(1, 2);
  rhs[static_cast<size_t>(pi)] -= rational(1, 2);
  return lhs == rhs;
}

BetaSolution solve_beta(const Triple& t) {
  auto rep = validate_triple(t);
  if (!rep.valid) throw std::domain_error("solve_beta: invalid triple");
  int n = t.n;
  // Unknowns b_pq for p < q; beta = sum b_pq e_pp /\ e_qq.
  std::vector<std::pair<int, int>> unknowns;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) unknowns.push_back({p, q});
  auto col = [&](int p, int q) {
    // signed column lookup: B_qp = -B_pq
    for (size_t k = 0; k < unknowns.size(); ++k)
      if (unknowns[k] == std::pair<int, int>{std::min(p, q), std::max(p, q)})
        return std::pair<size_t, int>{k, p < q ? 1 : -1};
    throw std::logic_error("solve_beta: unknown lookup");
  };

  Mat a;
  Vec rhs;
  // (1 (x) alpha_s) beta has e_pp coefficient sum_{q != p} B_pq [q = s] -
  // [q = s+1]; build the difference equation for each pi in pi1 and each
  // diagonal coordinate.
  auto add_root_rows = [&](int s, int sign, Mat& rows) {
    for (int p = 1; p <= n; ++p) {
      for (int q : {s, s + 1}) {
        if (q == p) continue;
        auto [k, sg] = col(p, q);
        Scalar w = rational((q == s ? 1 : -1) * sign * sg, 2);  // half from the wedge convention
        rows[static_cast<size_t>(p - 1)][k] += w;
      }
    }
  };
  for (int pi : t.pi1) {
    int tpi = t.T.at(pi);
    Mat rows(static_cast<size_t>(n), Vec(unknowns.size(), Scalar(0)));
    add_root_rows(tpi, 1, rows);
    add_root_rows(pi, -1, rows);
    for (int p = 1; p <= n; ++p) {
      Scalar r(0);
      if (p == tpi) r += rational(1, 2);
      if (p == tpi + 1) r -= rational(1, 2);
      if (p == pi) r += rational(1, 2);
      if (p == pi + 1) r -= rational(1, 2);
      a.push_back(rows[static_cast<size_t>(p - 1)]);
      rhs.push_back(r);
    }
  }
  // Row-sum conditions sum_q B_pq = 0 keep beta inside h /\ h.
  for (int p = 1; p <= n; ++p) {
    Vec row(unknowns.size(), Scalar(0));
    for (int q = 1; q <= n; ++q) {
      if (q == p) continue;
      auto [k, sg] = col(p, q);
      row[k] += Scalar(sg);
    }
    a.push_back(std::move(row));
    rhs.push_back(Scalar(0));
  }

  auto sol = solve_linear(a, rhs);
  if (!sol) throw std::logic_error("solve_beta: inconsistent system for a valid triple");

  auto to_tensor = [&](const Vec& v) {
    QTensor2 b(n);
    for (size_t k = 0; k < unknowns.size(); ++k) {
      if (is_zero(v[k])) continue;
      auto [p, q] = unknowns[k];
      b += v[k] * wedge(QMatrix::unit(n, p, p), QMatrix::unit(n, q, q));
    }
    return b;
  };
  BetaSolution out{to_tensor(sol->particular), {}};
  for (const auto& v : sol->nullspace) out.nullspace.push_back(to_tensor(v));
  return out;
}

QTensor2 alpha_term(const Triple& t) {
  auto rep = validate_triple(t);
  if (!rep.valid) throw std::domain_error("alpha_term: invalid triple");
  int n = t.n;
  QTensor2 alpha(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      // positive root with simple constituents a..b-1, all inside pi1
      bool inside = true;
      for (int c = a; c < b; ++c)
        if (!t.pi1.count(c)) { inside = false; break; }
      if (!inside) continue;
      std::set<int> cur;
      for (int c = a; c < b; ++c) cur.insert(c);
      for (int m = 1; m <= 2 * n; ++m) {
        std::set<int> img;
        for (int c : cur) img.insert(t.T.at(c));
        int lo = *img.begin(), hi = *img.rbegin();
        if (static_cast<int>(img.size()) != hi - lo + 1) break;  // image not a root
        alpha += Scalar(2) * wedge(QMatrix::unit(n, a, b), QMatrix::unit(n, hi + 1, lo));
        bool iterable = true;
        for (int c : img)
          if (!t.pi1.count(c)) { iterable = false; break; }
        if (!iterable) break;
        cur = std::move(img);
      }
    }
  }
  return alpha;
}

QTensor2 assemble_r(const Triple& t, const QTensor2& beta) {
  QTensor2 r = gamma_term(t.n) + beta + alpha_term(t);
  if (!is_mcybe(r))
    throw std::logic_error("assemble_r: assembled tensor does not satisfy the modified equation");
  return r;
}

QTensor2 r_cg_closed(int n) {
  if (n < 2) throw std::domain_error("r_cg_closed: n must be at least 2");
  QTensor2 r = gamma_term(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      r += rational(n + 2 * (i - j), n) * wedge(QMatrix::unit(n, i, i), QMatrix::unit(n, j, j));
      for (int m = 1; m <= j - i - 1; ++m)
        r += Scalar(2) * wedge(QMatrix::unit(n, i, j - m), QMatrix::unit(n, j, i + m));
    }
  return r;
}

}  // namespace ybwb
