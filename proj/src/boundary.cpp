#include "ybwb/boundary.hpp"

#include <stdexcept>

namespace ybwb {

const int AD_E_R_CG_SCALE = -2;

const QTensor2& OrbitExpansion::top() const {
  if (coefficients.empty()) throw std::domain_error("OrbitExpansion: no positive-degree part");
  return coefficients.back();
}

OrbitExpansion orbit_expand(const PMatrix& a, const QTensor2& r) {
  if (a.n() != r.n()) throw std::invalid_argument("orbit_expand: dimension mismatch");
  PMatrix g = nilpotent_exp(a);
  PMatrix gi = nilpotent_exp(-a);
  PTensor2 moved = conj_action_with_inverse(g, gi, lift(r));
  auto parts = split_by_degree(moved);
  OrbitExpansion e{parts.at(0), {}};
  int top = parts.rbegin()->first;
  for (int d = 1; d <= top; ++d) {
    auto it = parts.find(d);
    e.coefficients.push_back(it == parts.end() ? QTensor2(r.n()) : it->second);
  }
  return e;
}

PTensor2 reassemble(const OrbitExpansion& e) {
  PTensor2 out = lift(e.base);
  for (size_t d = 0; d < e.coefficients.size(); ++d)
    for (const auto& [idx, c] : e.coefficients[d].terms())
      out.add_term(idx, TPoly::t(static_cast<int>(d) + 1, c));
  return out;
}

QTensor2 extract_boundary(const OrbitExpansion& e) {
  const QTensor2& top = e.top();
  if (!is_cybe(top))
    throw std::logic_error("extract_boundary: top coefficient violates the classical equation");
  return top;
}

QMatrix b_cg_diag(int n, int p) {
  QMatrix d(n);
  for (int a = 1; a <= p; ++a) d.add(a, a, rational(n - p, n));
  for (int a = p + 1; a <= n; ++a) d.add(a, a, rational(-p, n));
  return d;
}

QTensor2 b_cg_closed(int n) {
  if (n < 2) throw std::domain_error("b_cg_closed: n must be at least 2");
  QTensor2 b(n);
  for (int p = 1; p <= n - 1; ++p) b += wedge(b_cg_diag(n, p), QMatrix::unit(n, p, p + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int m = 1; m <= j - i - 1; ++m)
        b += wedge(QMatrix::unit(n, i, j - m + 1), QMatrix::unit(n, j, i + m));
  if (!is_cybe(b)) throw std::logic_error("b_cg_closed: result violates the classical equation");
  return b;
}

Scalar apply_functional(const Functional& f, const QMatrix& m) {
  Scalar v(0);
  for (const auto& [uv, c] : f) {
    Scalar x = m.get(uv.first, uv.second);
    if (!is_zero(x)) v += c * x;
  }
  return v;
}

CarrierAnalysis carrier(const QTensor2& r) {
  if (r.is_zero()) throw std::domain_error("carrier: zero tensor");
  if (!is_skew(r)) throw std::invalid_argument("carrier: input is not skew");
  int n = r.n();
  MatSpan span = contraction_span(r);
  Subalgebra sub{span};
  if (!sub.check_closed())
    throw std::logic_error("carrier: contraction image is not a subalgebra");
  int d = sub.dim();
  const auto& pivots = sub.span.pivots();

  // r = sum R_ab x_a (x) x_b; with an RREF basis the coefficients are
  // direct reads at pivot coordinate pairs.
  Mat rmat(static_cast<size_t>(d), Vec(static_cast<size_t>(d), Scalar(0)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      int pa = pivots[static_cast<size_t>(a)], pb = pivots[static_cast<size_t>(b)];
      rmat[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          r.coeff({pa / n + 1, pa % n + 1, pb / n + 1, pb % n + 1});
    }
  // reconstruction check: r really lies in carrier /\ carrier
  QTensor2 rec(n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Scalar& c = rmat[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (is_zero(c)) continue;
      rec += tensor_product(sub.basis()[static_cast<size_t>(a)], sub.basis()[static_cast<size_t>(b)], c);
    }
  if (!(rec == r)) throw std::logic_error("carrier: tensor not contained in carrier /\\ carrier");

  auto inv = inverse(rmat);
  if (!inv) throw std::logic_error("carrier: degenerate restriction to the contraction image");
  const Mat& f = *inv;

  // 2-cocycle identity F([x,y],z) + F([y,z],x) + F([z,x],y) = 0
  auto fpair = [&](const Vec& cx, int z) {
    Scalar v(0);
    for (int k = 0; k < d; ++k)
      if (!is_zero(cx[static_cast<size_t>(k)]))
        v += cx[static_cast<size_t>(k)] * f[static_cast<size_t>(k)][static_cast<size_t>(z)];
    return v;
  };
  std::vector<std::vector<Vec>> brkt(static_cast<size_t>(d));
  for (int a = 0; a < d; ++a) {
    brkt[static_cast<size_t>(a)].resize(static_cast<size_t>(d));
    for (int b = 0; b < d; ++b)
      brkt[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          sub.span.coordinates(bracket(sub.basis()[static_cast<size_t>(a)], sub.basis()[static_cast<size_t>(b)]));
  }
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y)
      for (int z = y + 1; z < d; ++z) {
        Scalar v = fpair(brkt[static_cast<size_t>(x)][static_cast<size_t>(y)], z) +
                   fpair(brkt[static_cast<size_t>(y)][static_cast<size_t>(z)], x) +
                   fpair(brkt[static_cast<size_t>(z)][static_cast<size_t>(x)], y);
        if (!is_zero(v)) throw std::logic_error("carrier: inverse fails the 2-cocycle identity");
      }

  // Frobenius attempt: f(x_k) unknowns t_k with sum_k c^k_ab t_k = F_ab.
  Mat a;
  Vec rhs;
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y) {
      a.push_back(brkt[static_cast<size_t>(x)][static_cast<size_t>(y)]);
      rhs.push_back(f[static_cast<size_t>(x)][static_cast<size_t>(y)]);
    }
  std::optional<Functional> frob;
  if (auto sol = solve_linear(a, rhs)) {
    Functional func;
    for (int k = 0; k < d; ++k) {
      if (is_zero(sol->particular[static_cast<size_t>(k)])) continue;
      int p = pivots[static_cast<size_t>(k)];
      func[{p / n + 1, p % n + 1}] = sol->particular[static_cast<size_t>(k)];
    }
    frob = std::move(func);
  }
  return CarrierAnalysis{std::move(sub), std::move(rmat), f, std::move(frob)};
}

bool frobenius_witness(const Subalgebra& s, const Functional& f) {
  int d = s.dim();
  Mat m(static_cast<size_t>(d), Vec(static_cast<size_t>(d), Scalar(0)));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Scalar v = apply_functional(f, bracket(s.basis()[static_cast<size_t>(a)], s.basis()[static_cast<size_t>(b)]));
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
      m[static_cast<size_t>(b)][static_cast<size_t>(a)] = -v;
    }
  return rank(std::move(m)) == d;
}

std::optional<Scalar> functional_matches_cocycle(const CarrierAnalysis& ca, const Functional& f) {
  int d = ca.carrier.dim();
  std::optional<Scalar> lambda;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Scalar lhs = apply_functional(
          f, bracket(ca.carrier.basis()[static_cast<size_t>(a)], ca.carrier.basis()[static_cast<size_t>(b)]));
      const Scalar& rhs = ca.cocycle[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (is_zero(rhs)) {
        if (!is_zero(lhs)) return std::nullopt;
        continue;
      }
      Scalar ratio = lhs / rhs;
      if (!lambda) lambda = ratio;
      else if (*lambda != ratio) return std::nullopt;
    }
  return lambda;
}

Subalgebra parabolic(int n, const std::set<int>& omitted) {
  if (omitted.empty()) throw std::invalid_argument("parabolic: omitted set must be nonempty");
  for (int w : omitted)
    if (w < 1 || w > n - 1) throw std::invalid_argument("parabolic: omitted index out of range");
  MatSpan span(n);
  for (int i = 1; i < n; ++i) {
    QMatrix h(n);
    h.add(i, i, Scalar(1));
    h.add(i + 1, i + 1, Scalar(-1));
    span.insert(h);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      span.insert(QMatrix::unit(n, a, b));
      bool crosses = false;
      for (int w : omitted)
        if (a <= w && w < b) { crosses = true; break; }
      if (!crosses) span.insert(QMatrix::unit(n, b, a));
    }
  return make_subalgebra(std::move(span));
}

FrobeniusResult frobenius_probe(const Subalgebra& s, int trials, std::uint64_t seed) {
  RationalSampler sampler(seed);
  int n = s.n();
  const auto& pivots = s.span.pivots();
  for (int t = 0; t < trials; ++t) {
    Functional f;
    for (int p : pivots) {
      Scalar c = sampler.any();
      if (!is_zero(c)) f[{p / n + 1, p % n + 1}] = c;
    }
    if (frobenius_witness(s, f)) return {FrobeniusVerdict::Frobenius, std::move(f)};
  }
  return {FrobeniusVerdict::ProbablyNot, std::nullopt};
}

int lie_h2(const Subalgebra& s) {
  int d = s.dim();
  int limit = guard_limit(24);
  if (d > limit)
    throw std::domain_error("lie_h2: dimension exceeds guard (" + std::to_string(limit) + ")");
  if (d == 0) return 0;
  std::vector<std::vector<Vec>> brkt(static_cast<size_t>(d), std::vector<Vec>(static_cast<size_t>(d)));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      brkt[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          s.span.coordinates(bracket(s.basis()[static_cast<size_t>(a)], s.basis()[static_cast<size_t>(b)]));

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) pairs.push_back({a, b});
  std::map<std::pair<int, int>, size_t> pidx;
  for (size_t k = 0; k < pairs.size(); ++k) pidx[pairs[k]] = k;

  // d1: f -> ((x,y) -> f([x,y]))
  Mat d1;
  for (const auto& [a, b] : pairs) {
    d1.push_back(brkt[static_cast<size_t>(a)][static_cast<size_t>(b)]);
  }
  int rank1 = rank(d1);

  // d2: F -> ((x,y,z) -> F([x,y],z) - F([x,z],y) + F([y,z],x))
  Mat d2;
  auto accumulate = [&](Vec& row, const Vec& c, int w, int sgn) {
    for (int m = 0; m < d; ++m) {
      if (m == w || is_zero(c[static_cast<size_t>(m)])) continue;
      int lo = std::min(m, w), hi = std::max(m, w);
      int s2 = m < w ? 1 : -1;
      row[pidx.at({lo, hi})] += Scalar(sgn * s2) * c[static_cast<size_t>(m)];
    }
  };
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y)
      for (int z = y + 1; z < d; ++z) {
        Vec row(pairs.size(), Scalar(0));
        accumulate(row, brkt[static_cast<size_t>(x)][static_cast<size_t>(y)], z, 1);
        accumulate(row, brkt[static_cast<size_t>(x)][static_cast<size_t>(z)], y, -1);
        accumulate(row, brkt[static_cast<size_t>(y)][static_cast<size_t>(z)], x, 1);
        if (!is_zero_vec(row)) d2.push_back(std::move(row));
      }
  int rank2 = rank(d2);
  return (static_cast<int>(pairs.size()) - rank2) - rank1;
}

PrincipalSl2 principal_sl2(int n) {
  QMatrix e(n);
  for (int j = 1; j < n; ++j) e.add(j, j + 1, Scalar(n - j));
  QMatrix f = sigma_map(e);
  QMatrix h = bracket(e, f);
  if (!(bracket(h, e) == Scalar(2) * e) || !(bracket(h, f) == Scalar(-2) * f))
    throw std::logic_error("principal_sl2: commutation relations failed");
  return {std::move(e), std::move(f), std::move(h)};
}

QTensor2 heisenberg_boundary(int n) {
  QTensor2 b(n);
  QMatrix d(n);
  d.add(1, 1, Scalar(1));
  d.add(n, n, Scalar(-1));
  b += wedge(d, QMatrix::unit(n, 1, n));
  for (int i = 2; i <= n - 1; ++i)
    b += Scalar(2) * wedge(QMatrix::unit(n, 1, i), QMatrix::unit(n, i, n));
  return b;
}

namespace {

bool spans_equal(const MatSpan& a, const Subalgebra& p) {
  if (a.dim() != p.dim()) return false;
  for (const auto& m : p.basis())
    if (!a.contains(m)) return false;
  return true;
}

}  // namespace

Sl5Report sl5_i2_pipeline() {
  const int n = 5;
  Sl5Report out;
  Report& rep = out.report;
  rep.construction = "sl5_i2";
  rep.n = n;
  rep.i = 2;

  Triple t = cg_triple(5, 2);
  QTensor2 beta = beta_cg(5, 2);
  QTensor2 r2 = assemble_r(t, beta);
  out.r2 = r2;

  // reference values, transcribed in the wedge convention
  QTensor2 gamma_ref = gamma_term(5);
  QTensor2 beta_ref(n);
  {
    auto dd = [&](int p, int q, long num) {
      beta_ref += rational(num, 5) * wedge(QMatrix::unit(n, p, p), QMatrix::unit(n, q, q));
    };
    dd(1, 2, -1); dd(2, 3, -1); dd(3, 4, -1); dd(4, 5, -1);
    dd(1, 3, 3); dd(2, 4, 3); dd(3, 5, 3);
    dd(1, 4, -3); dd(2, 5, -3);
    dd(1, 5, 1);
  }
  QTensor2 alpha_ref(n);
  {
    auto uu = [&](int a, int b, int c, int d) {
      alpha_ref += Scalar(2) * wedge(QMatrix::unit(n, a, b), QMatrix::unit(n, c, d));
    };
    uu(2, 3, 5, 4); uu(2, 3, 2, 1); uu(2, 3, 4, 3);
    uu(4, 5, 2, 1); uu(4, 5, 4, 3);
    uu(1, 2, 4, 3); uu(1, 3, 5, 3);
  }
  rep.add(beta == beta_ref ? Identity::exact("beta_display") : Identity::failed("beta_display"));
  rep.add(alpha_term(t) == alpha_ref ? Identity::exact("alpha_display") : Identity::failed("alpha_display"));
  rep.add(r2 == gamma_ref + beta_ref + alpha_ref ? Identity::exact("r2_display") : Identity::failed("r2_display"));

  QMatrix X(n);
  X.add(1, 3, Scalar(2)); X.add(2, 4, Scalar(1)); X.add(3, 5, Scalar(1));
  QMatrix Y = sigma_map(X);
  QMatrix H = bracket(X, Y);
  QMatrix xi(n); xi.add(2, 3, Scalar(1)); xi.add(4, 5, Scalar(1));
  QMatrix eta(n); eta.add(2, 1, Scalar(1)); eta.add(4, 3, Scalar(1));
  QMatrix H_expected(n);
  H_expected.add(1, 1, Scalar(2)); H_expected.add(2, 2, Scalar(1));
  H_expected.add(4, 4, Scalar(-1)); H_expected.add(5, 5, Scalar(-2));
  rep.add(H == H_expected && bracket(H, X) == Scalar(2) * X && bracket(H, Y) == Scalar(-2) * Y
              ? Identity::exact("sl2_relations") : Identity::failed("sl2_relations"));
  rep.add(sigma_map(X) == Y && sigma_map(r2) == -r2 ? Identity::exact("sigma_relations")
                                                    : Identity::failed("sigma_relations"));
  // sigma negates H = [X, sigma(X)] since it swaps X and Y
  rep.add(sigma_map(H) == -H ? Identity::scaled("sigma_h", Scalar(-1))
                             : Identity::failed("sigma_h"));
  rep.add(bracket(X, xi).is_zero() && bracket(X, eta) == -xi
              ? Identity::exact("x_xi_eta_relations") : Identity::failed("x_xi_eta_relations"));

  // bracket of X with r2, against a reference value whose leading
  // factor 2 is distributed over all summands; that reading is the one
  // validated by the expansion identity further down
  QTensor2 adXr2 = ad_diag(X, r2);
  QTensor2 bracket_ref(n);
  {
    QMatrix d1(n);
    d1.add(1, 1, rational(2, 5)); d1.add(2, 2, rational(2, 5)); d1.add(3, 3, rational(-3, 5));
    d1.add(4, 4, rational(2, 5)); d1.add(5, 5, rational(-3, 5));
    QMatrix d2(n);
    d2.add(1, 1, rational(1, 5)); d2.add(2, 2, rational(1, 5)); d2.add(3, 3, rational(1, 5));
    d2.add(4, 4, rational(-4, 5)); d2.add(5, 5, rational(1, 5));
    QMatrix d3(n);
    d3.add(1, 1, rational(1, 5)); d3.add(2, 2, rational(1, 5)); d3.add(3, 3, rational(1, 5));
    d3.add(4, 4, rational(1, 5)); d3.add(5, 5, rational(-4, 5));
    bracket_ref += wedge(d1, QMatrix::unit(n, 1, 3));
    bracket_ref += wedge(d2, QMatrix::unit(n, 2, 4));
    bracket_ref += wedge(d3, QMatrix::unit(n, 3, 5));
    auto uu = [&](int a, int b, int c, int d) {
      bracket_ref += wedge(QMatrix::unit(n, a, b), QMatrix::unit(n, c, d));
    };
    uu(1, 4, 4, 3); uu(1, 2, 2, 3); uu(2, 5, 5, 4); uu(1, 2, 4, 5); uu(1, 5, 5, 3); uu(3, 4, 4, 5);
    bracket_ref = bracket_ref * Scalar(2);
  }
  if (auto lam = proportional(adXr2, bracket_ref))
    rep.add(Identity::scaled("bracket_x_r2_display", *lam));
  else
    rep.add(Identity::failed("bracket_x_r2_display"));
  rep.add(is_cybe(adXr2) ? Identity::exact("bracket_x_r2_cybe") : Identity::failed("bracket_x_r2_cybe"));
  CarrierAnalysis ca_bracket = carrier(adXr2);
  rep.add(ca_bracket.carrier.dim() == 16 ? Identity::exact("bracket_x_r2_carrier_dim_16")
                                         : Identity::failed("bracket_x_r2_carrier_dim_16"));

  // exp(eta).r2 = r2 + H1 /\ eta
  QMatrix H1(n);
  H1.add(1, 1, rational(-4, 5)); H1.add(2, 2, rational(6, 5)); H1.add(3, 3, rational(-4, 5));
  H1.add(4, 4, rational(6, 5)); H1.add(5, 5, rational(-4, 5));
  QTensor2 moved = conj_action(nilpotent_exp(QMatrix(eta)), r2);
  QTensor2 h1_eta = wedge(H1, eta);
  rep.add(moved == r2 + h1_eta ? Identity::exact("exp_eta_shift") : Identity::failed("exp_eta_shift"));
  rep.add(is_mcybe(moved) ? Identity::exact("exp_eta_mcybe") : Identity::failed("exp_eta_mcybe"));

  // literal expansion exp(tX + eta).r2
  OrbitExpansion lit = orbit_expand(lift(X, 1) + lift(eta), r2);
  rep.add(lit.degree() == 1 ? Identity::exact("literal_degree_1") : Identity::failed("literal_degree_1"));
  rep.add(lit.base == r2 + h1_eta ? Identity::exact("literal_base_shift") : Identity::failed("literal_base_shift"));
  out.omega_literal = extract_boundary(lit);
  QTensor2 brace = adXr2 - rational(3, 2) * wedge(H1, xi) + wedge(eta, xi);
  rep.add(out.omega_literal == brace ? Identity::exact("literal_coefficient_display")
                                     : Identity::failed("literal_coefficient_display"));
  CarrierAnalysis ca_lit = carrier(out.omega_literal);
  out.literal_carrier_dim = ca_lit.carrier.dim();

  Subalgebra p2 = parabolic(n, {2});
  rep.add(spans_equal(ca_lit.carrier.span, p2) ? Identity::exact("literal_carrier_is_p2")
                                               : Identity::failed("literal_carrier_is_p2"));

  // the same orbit with the constant part scaled by t: its first-order
  // coefficient is carried by p2 on the nose
  OrbitExpansion scaled = orbit_expand(lift(X, 1) + lift(eta, 1), r2);
  QTensor2 omega1 = scaled.coefficients.at(0);
  out.omega_scaled = omega1;
  rep.add(is_cybe(omega1) ? Identity::exact("scaled_coefficient_cybe")
                          : Identity::failed("scaled_coefficient_cybe"));
  CarrierAnalysis ca_scaled = carrier(omega1);
  out.scaled_carrier_dim = ca_scaled.carrier.dim();
  bool scaled_is_p2 = spans_equal(ca_scaled.carrier.span, p2);
  rep.add(scaled_is_p2 ? Identity::exact("scaled_carrier_is_p2") : Identity::failed("scaled_carrier_is_p2"));
  rep.carrier = CarrierSummary{ca_scaled.carrier.dim(), scaled_is_p2};

  // alpha_0 invariance and the sub-triple decomposition
  QTensor2 alpha0 = Scalar(2) * wedge(xi, eta);
  rep.add(ad_diag(X, alpha0).is_zero() ? Identity::exact("alpha0_invariant")
                                       : Identity::failed("alpha0_invariant"));
  QTensor2 r2p = r2 - alpha0;
  rep.add(is_mcybe(r2p) ? Identity::exact("r2_minus_alpha0_mcybe") : Identity::failed("r2_minus_alpha0_mcybe"));
  Triple sub;
  sub.n = 5;
  sub.pi1 = {1, 2};
  sub.pi2 = {3, 4};
  sub.T = {{1, 3}, {2, 4}};
  bool sub_ok = validate_triple(sub).valid &&
                r2p == gamma_term(5) + beta + alpha_term(sub);
  rep.add(sub_ok ? Identity::exact("subtriple_decomposition") : Identity::failed("subtriple_decomposition"));
  bool beta_sub_ok = true;
  for (int pi : sub.pi1)
    beta_sub_ok &= beta_equation_holds(beta, 5, pi, sub.T.at(pi));
  rep.add(beta_sub_ok ? Identity::exact("subtriple_beta_equation") : Identity::failed("subtriple_beta_equation"));

  return out;
}

GgsResult ggs_family(int n, const std::vector<Scalar>& lambdas) {
  int d = n / 2;
  if (static_cast<int>(lambdas.size()) != d)
    throw std::invalid_argument("ggs_family: expected " + std::to_string(d) + " parameters");
  for (const auto& l : lambdas)
    if (is_zero(l)) throw std::domain_error("ggs_family: parameters must be nonzero");

  QMatrix a(n);
  for (int p = 1; p <= d; ++p) a.add(p, n - p + 1, lambdas[static_cast<size_t>(p - 1)]);

  GgsResult out{QTensor2(n), Subalgebra{MatSpan(n)}, {}};
  out.report.construction = "ggs_family";
  out.report.n = n;

  OrbitExpansion e = orbit_expand(lift(-a, 1), gamma_term(n));
  out.report.add(e.degree() == 1 ? Identity::exact("degree_1") : Identity::failed("degree_1"));
  out.boundary = extract_boundary(e);
  out.report.add(Identity::exact("boundary_cybe"));  // extract_boundary asserted it

  // the coefficient is linear in the generator: lambda_p scales each
  // block (the lambda_p^{-1} variant does not reproduce the orbit)
  QTensor2 linear_ref(n);
  for (int p = 1; p <= d; ++p) {
    int q = n - p + 1;
    QMatrix diff(n);
    diff.add(p, p, Scalar(1));
    diff.add(q, q, Scalar(-1));
    const Scalar& lp = lambdas[static_cast<size_t>(p - 1)];
    linear_ref += lp * wedge(diff, QMatrix::unit(n, p, q));
    for (int i = p + 1; i <= q - 1; ++i)
      linear_ref += Scalar(2) * lp * wedge(QMatrix::unit(n, p, i), QMatrix::unit(n, i, q));
  }
  out.report.add(out.boundary == linear_ref ? Identity::exact("lambda_linear_display")
                                            : Identity::failed("lambda_linear_display"));

  CarrierAnalysis ca = carrier(out.boundary);
  out.carrier_algebra = ca.carrier;
  int expected_dim = n * (n - 1) / 2 + d;
  bool dim_ok = ca.carrier.dim() == expected_dim;

  // block shape: upper triangular; all strict-upper units present; the
  // diagonal directions are the pair differences e_pp - e_qq
  bool upper = true, units = true, diag_ok = true;
  for (const auto& m : ca.carrier.basis())
    for (const auto& [ij, c] : m.entries())
      if (ij.first > ij.second) upper = false;
  for (int i = 1; i <= n && units; ++i)
    for (int j = i + 1; j <= n && units; ++j)
      units = ca.carrier.span.contains(QMatrix::unit(n, i, j));
  for (int p = 1; p <= d; ++p) {
    QMatrix diff(n);
    diff.add(p, p, Scalar(1));
    diff.add(n - p + 1, n - p + 1, Scalar(-1));
    diag_ok &= ca.carrier.span.contains(diff);
  }
  if (n % 2 == 0) {
    // for even n the displayed diagonal (1,..,1,-1,..,-1) lies inside
    QMatrix disp(n);
    for (int i = 1; i <= n; ++i) disp.add(i, i, Scalar(i <= n / 2 ? 1 : -1));
    diag_ok &= ca.carrier.span.contains(disp);
  } else {
    // for odd n the middle diagonal entry vanishes across the carrier
    int mid = (n + 1) / 2;
    for (const auto& m : ca.carrier.basis())
      if (!is_zero(m.get(mid, mid))) diag_ok = false;
  }
  out.report.add(dim_ok && upper && units && diag_ok ? Identity::exact("carrier_block_shape")
                                                     : Identity::failed("carrier_block_shape"));
  out.report.carrier = CarrierSummary{ca.carrier.dim(), false};

  // canonical functional e_1n^* + ... + e_{d,n-d+1}^*
  Functional f;
  for (int p = 1; p <= d; ++p) f[{p, n - p + 1}] = Scalar(1);
  out.report.add(frobenius_witness(ca.carrier, f) ? Identity::exact("frobenius_functional")
                                                  : Identity::failed("frobenius_functional"));
  return out;
}

WReport nonboundary_W(int n, int samples, std::uint64_t seed) {
  if (n < 4) throw std::domain_error("nonboundary_W: n must be at least 4");
  WReport rep;
  int half = n / 2;
  std::vector<QMatrix> w;
  for (int i = 1; i <= half; ++i)
    for (int j = half + 1; j <= n; ++j) w.push_back(QMatrix::unit(n, i, j));
  Subalgebra ws = subalgebra_closure(n, w);
  rep.w_dim = ws.dim();
  rep.abelian = ws.is_abelian() && ws.dim() == static_cast<int>(w.size());
  rep.wedge_dim = rep.w_dim * (rep.w_dim - 1) / 2;
  rep.component_bound = (n * n - 1) + (n - 1) * (n - 2) / 2;
  RationalSampler sampler(seed);
  rep.random_elements_cybe = true;
  for (int s = 0; s < samples; ++s) {
    QTensor2 r(n);
    for (size_t a = 0; a < w.size(); ++a)
      for (size_t b = a + 1; b < w.size(); ++b) {
        Scalar c = sampler.any(5);
        if (!is_zero(c)) r += c * wedge(w[a], w[b]);
      }
    if (!is_cybe(r)) rep.random_elements_cybe = false;
  }
  return rep;
}

}  // namespace ybwb
