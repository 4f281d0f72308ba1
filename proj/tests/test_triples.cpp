#include <doctest.h>

#include <numeric>

#include "ybwb/triples.hpp"

using namespace ybwb;

namespace {

// The rank-2 solution with the unique nontrivial triple, written out
// termwise; the golden value for several suites.
QTensor2 golden_r3() {
  int n = 3;
  QTensor2 r = gamma_term(n);
  r += rational(1, 3) * wedge(QMatrix::unit(n, 1, 1), QMatrix::unit(n, 2, 2));
  r += rational(-1, 3) * wedge(QMatrix::unit(n, 1, 1), QMatrix::unit(n, 3, 3));
  r += rational(1, 3) * wedge(QMatrix::unit(n, 2, 2), QMatrix::unit(n, 3, 3));
  r += Scalar(2) * wedge(QMatrix::unit(n, 1, 2), QMatrix::unit(n, 3, 2));
  return r;
}

}  // namespace

TEST_SUITE("triples") {

TEST_CASE("validation") {
  Triple empty;
  empty.n = 4;
  CHECK(validate_triple(empty).valid);

  Triple t;
  t.n = 3;
  t.pi1 = {1};
  t.pi2 = {2};
  t.T = {{1, 2}};
  CHECK(validate_triple(t).valid);

  // order-reversing map on both subsegments: nilpotency fails
  Triple rev;
  rev.n = 5;
  rev.pi1 = {1, 2, 3};
  rev.pi2 = {1, 2, 3};
  rev.T = {{1, 3}, {2, 2}, {3, 1}};
  auto rep = validate_triple(rev);
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(rep.violations.empty());

  // adjacency violation
  Triple adj;
  adj.n = 5;
  adj.pi1 = {1, 2};
  adj.pi2 = {1, 3};
  adj.T = {{1, 1}, {2, 3}};
  CHECK_FALSE(validate_triple(adj).valid);
}

TEST_CASE("one-omitted triples have coprime shift") {
  Triple t = cg_triple(3, 1);
  CHECK(t.pi1 == std::set<int>{1});
  CHECK(t.pi2 == std::set<int>{2});
  CHECK(t.T.at(1) == 2);

  Triple t52 = cg_triple(5, 2);
  CHECK(t52.pi1 == std::set<int>{1, 2, 4});
  CHECK(t52.pi2 == std::set<int>{1, 3, 4});
  CHECK(t52.T.at(1) == 3);
  CHECK(t52.T.at(2) == 4);
  CHECK(t52.T.at(4) == 1);

  CHECK_THROWS_AS(cg_triple(4, 2), std::domain_error);
}

TEST_CASE("enumeration agrees with the closed-form family") {
  for (int n = 3; n <= 6; ++n) {
    auto found = enumerate_one_omitted(n);
    std::vector<Triple> expected;
    for (int i = 1; i <= n - 1; ++i)
      if (std::gcd(i, n) == 1) expected.push_back(cg_triple(n, i));
    CHECK(found.size() == expected.size());
    for (const auto& e : expected) {
      bool present = false;
      for (const auto& f : found) present |= (f == e);
      CHECK(present);
    }
  }
}

TEST_CASE("gamma term") {
  CHECK(gamma_term(2) == wedge(QMatrix::unit(2, 1, 2), QMatrix::unit(2, 2, 1)));
  QTensor2 g3 = wedge(QMatrix::unit(3, 1, 2), QMatrix::unit(3, 2, 1)) +
                wedge(QMatrix::unit(3, 1, 3), QMatrix::unit(3, 3, 1)) +
                wedge(QMatrix::unit(3, 2, 3), QMatrix::unit(3, 3, 2));
  CHECK(gamma_term(3) == g3);
  // n(n-1)/2 wedge pairs = n(n-1) tensor terms
  CHECK(static_cast<int>(gamma_term(5).terms().size()) == 5 * 4);
}

TEST_CASE("closed-form beta values") {
  QTensor2 b = beta_cg(3, 1);
  CHECK(b.coeff({1, 1, 2, 2}) == rational(1, 6));  // wedge coefficient 1/3
  QTensor2 expect(3);
  expect += rational(1, 3) * wedge(QMatrix::unit(3, 1, 1), QMatrix::unit(3, 2, 2));
  expect += rational(-1, 3) * wedge(QMatrix::unit(3, 1, 1), QMatrix::unit(3, 3, 3));
  expect += rational(1, 3) * wedge(QMatrix::unit(3, 2, 2), QMatrix::unit(3, 3, 3));
  CHECK(b == expect);

  QTensor2 b52 = beta_cg(5, 2);
  CHECK(b52.coeff({1, 1, 2, 2}) * 2 == rational(-1, 5));
  CHECK(b52.coeff({1, 1, 3, 3}) * 2 == rational(3, 5));
  CHECK(b52.coeff({2, 2, 5, 5}) * 2 == rational(-3, 5));
  CHECK(b52.coeff({1, 1, 5, 5}) * 2 == rational(1, 5));

  // i = 1 reduces to the (n + 2(i-j))/n middle summand pattern
  for (int n : {4, 6}) {
    QTensor2 b1 = beta_cg(n, 1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        CHECK(b1.coeff({i, i, j, j}) * 2 == rational(n + 2 * (i - j), n));
  }
  CHECK_THROWS_AS(beta_cg(4, 2), std::domain_error);
}

TEST_CASE("the sign reading of the congruence classes") {
  // With s defined by q - p = s i (mod n) the displayed values are
  // reproduced; the opposite reading p - q = s i is not, and the test
  // pins both facts.
  int n = 5, i = 2;
  auto coeff_from = [&](bool q_minus_p, int p, int q) {
    int diff = q_minus_p ? q - p : p - q;
    int s = 0;
    for (int cand = 1; cand <= n - 1; ++cand)
      if (((diff % n) + n) % n == (cand * i) % n) { s = cand; break; }
    return rational(n - 2 * s, n);
  };
  CHECK(coeff_from(true, 1, 2) == rational(-1, 5));   // matches the display
  CHECK(coeff_from(false, 1, 2) == rational(1, 5));   // opposite reading does not
  CHECK(beta_cg(5, 2).coeff({1, 1, 2, 2}) * 2 == coeff_from(true, 1, 2));
}

TEST_CASE("beta solver: trivial triple has a C(n-1,2)-dimensional space") {
  for (int n = 3; n <= 5; ++n) {
    Triple t;
    t.n = n;
    auto sol = solve_beta(t);
    CHECK(sol.particular.is_zero());
    CHECK(static_cast<int>(sol.nullspace.size()) == (n - 1) * (n - 2) / 2);
    for (const auto& b : sol.nullspace) CHECK(in_sl_tensor_sl(b));
  }
}

TEST_CASE("beta solver oracle: closed form is the unique solution") {
  for (auto [n, i] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}, {5, 2}, {5, 3}}) {
    auto sol = solve_beta(cg_triple(n, i));
    CHECK(sol.nullspace.empty());
    CHECK(sol.particular == beta_cg(n, i));
  }
}

TEST_CASE("closed-form beta satisfies the defining equation rootwise") {
  for (auto [n, i] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}, {7, 3}}) {
    Triple t = cg_triple(n, i);
    QTensor2 b = beta_cg(n, i);
    for (int pi : t.pi1) CHECK(beta_equation_holds(b, n, pi, t.T.at(pi)));
  }
}

TEST_CASE("alpha terms") {
  Triple trivial;
  trivial.n = 4;
  CHECK(alpha_term(trivial).is_zero());

  CHECK(alpha_term(cg_triple(3, 1)) ==
        Scalar(2) * wedge(QMatrix::unit(3, 1, 2), QMatrix::unit(3, 3, 2)));

  // the seven-term alpha for (5,2), including the composite-root term
  QTensor2 expect(5);
  auto uu = [&](int a, int b, int c, int d) {
    expect += Scalar(2) * wedge(QMatrix::unit(5, a, b), QMatrix::unit(5, c, d));
  };
  uu(2, 3, 5, 4);
  uu(2, 3, 2, 1);
  uu(2, 3, 4, 3);
  uu(4, 5, 2, 1);
  uu(4, 5, 4, 3);
  uu(1, 2, 4, 3);
  uu(1, 3, 5, 3);
  CHECK(alpha_term(cg_triple(5, 2)) == expect);
}

TEST_CASE("assembled solutions") {
  CHECK(assemble_r(cg_triple(3, 1), beta_cg(3, 1)) == golden_r3());

  Triple trivial;
  trivial.n = 2;
  CHECK(assemble_r(trivial, QTensor2(2)) ==
        wedge(QMatrix::unit(2, 1, 2), QMatrix::unit(2, 2, 1)));
}

TEST_CASE("the one-parameter family over the trivial triple") {
  // gamma + lambda (e11/\e22 - e11/\e33 + e22/\e33) solves the modified
  // equation for every lambda
  for (const Scalar& lam : {Scalar(0), Scalar(1), rational(-5, 7)}) {
    QTensor2 beta(3);
    beta += lam * wedge(QMatrix::unit(3, 1, 1), QMatrix::unit(3, 2, 2));
    beta += -lam * wedge(QMatrix::unit(3, 1, 1), QMatrix::unit(3, 3, 3));
    beta += lam * wedge(QMatrix::unit(3, 2, 2), QMatrix::unit(3, 3, 3));
    CHECK(is_mcybe(gamma_term(3) + beta));
    CHECK(in_sl_tensor_sl(beta));
  }
}

TEST_CASE("closed form of the i=1 solution") {
  CHECK(r_cg_closed(3) == golden_r3());
  CHECK(r_cg_closed(2) == wedge(QMatrix::unit(2, 1, 2), QMatrix::unit(2, 2, 1)));
  for (int n = 2; n <= 6; ++n)
    CHECK(r_cg_closed(n) == assemble_r(cg_triple(n, 1), beta_cg(n, 1)));
}

TEST_CASE("alpha of the shift-by-one triple equals the closed form's last summand") {
  for (int n : {3, 4, 5, 6}) {
    QTensor2 expect(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int m = 1; m <= j - i - 1; ++m)
          expect += Scalar(2) * wedge(QMatrix::unit(n, i, j - m), QMatrix::unit(n, j, i + m));
    CHECK(alpha_term(cg_triple(n, 1)) == expect);
  }
}

TEST_CASE("assembled solutions satisfy the modified equation") {
  for (auto [n, i] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 2}, {5, 4}})
    CHECK(is_mcybe(assemble_r(cg_triple(n, i), beta_cg(n, i))));
}

TEST_CASE("order-preserving sub-segment triples assemble") {
  // T: {1,2} -> {3,4} with 1 -> 3, 2 -> 4 (the sub-triple of the (5,2)
  // shift)
  Triple t;
  t.n = 5;
  t.pi1 = {1, 2};
  t.pi2 = {3, 4};
  t.T = {{1, 3}, {2, 4}};
  REQUIRE(validate_triple(t).valid);
  auto sol = solve_beta(t);
  CHECK(sol.nullspace.size() == 1);
  CHECK(is_mcybe(assemble_r(t, sol.particular)));
}

TEST_CASE("order-reversing segment maps are rejected by the assembly postcondition") {
  // T: {1,2} -> {3,4} with 1 -> 4, 2 -> 3 preserves the Cartan pairing
  // and is nilpotent, so it validates; but unit-coefficient root
  // vectors are not an isometric lift for it, and the assembled tensor
  // fails the modified equation on purpose.
  Triple t;
  t.n = 5;
  t.pi1 = {1, 2};
  t.pi2 = {3, 4};
  t.T = {{1, 4}, {2, 3}};
  REQUIRE(validate_triple(t).valid);
  auto sol = solve_beta(t);
  CHECK(sol.nullspace.size() == 1);
  CHECK_THROWS_AS(assemble_r(t, sol.particular), std::logic_error);
}

}
