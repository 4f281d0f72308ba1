#include <doctest.h>

#include "ybwb/tensor.hpp"
#include "ybwb/triples.hpp"

using namespace ybwb;

namespace {

QMatrix random_sparse(int n, RationalSampler& s, int nnz) {
  QMatrix m(n);
  for (int k = 0; k < nnz; ++k)
    m.add(1 + static_cast<int>(s.raw() % static_cast<std::uint64_t>(n)),
          1 + static_cast<int>(s.raw() % static_cast<std::uint64_t>(n)), s.any());
  return m;
}

QTensor2 random_skew(int n, RationalSampler& s, int pairs) {
  QTensor2 t(n);
  for (int k = 0; k < pairs; ++k) t += wedge(random_sparse(n, s, 2), random_sparse(n, s, 2));
  return t;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("wedge basics") {
  int n = 2;
  QMatrix a = QMatrix::unit(n, 1, 2), b = QMatrix::unit(n, 2, 1);
  CHECK(wedge(a, a).is_zero());
  QTensor2 w = wedge(a, b);
  CHECK(w.coeff({1, 2, 2, 1}) == rational(1, 2));
  CHECK(w.coeff({2, 1, 1, 2}) == rational(-1, 2));
  CHECK(is_skew(w));

  RationalSampler s(17);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix x = random_sparse(3, s, 3), y = random_sparse(3, s, 3);
    CHECK(wedge(x, y) == -wedge(y, x));
    CHECK(is_skew(wedge(x, y)));
  }
}

TEST_CASE("bracket of a tensor with abelian slots vanishes") {
  int n = 4;
  QTensor2 r = wedge(QMatrix::unit(n, 1, 3), QMatrix::unit(n, 2, 4));
  CHECK(is_cybe(r));
}

TEST_CASE("the rank-one invariant element") {
  // e12 /\ e21 solves the modified equation, not the classical one
  QTensor2 r = wedge(QMatrix::unit(2, 1, 2), QMatrix::unit(2, 2, 1));
  CHECK_FALSE(is_cybe(r));
  CHECK(is_mcybe(r));
}

TEST_CASE("the triangular solution solves the classical equation") {
  QMatrix h(2);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  QTensor2 r = wedge(h, QMatrix::unit(2, 1, 2));
  CHECK(is_cybe(r));
  CHECK_FALSE(is_mcybe(r));
}

TEST_CASE("yb_bracket rejects non-skew input") {
  QTensor2 t(2);
  t.add_term({1, 2, 1, 2}, Scalar(1));
  CHECK_THROWS_AS(yb_bracket(t), std::invalid_argument);
}

TEST_CASE("yb_bracket is quadratic") {
  RationalSampler s(19);
  QTensor2 r = random_skew(3, s, 3);
  Scalar lam = rational(3, 5);
  QTensor3 b = yb_bracket(r);
  QTensor3 bs = yb_bracket(r * lam);
  QTensor3 expect(3);
  for (const auto& [idx, c] : b.terms()) expect.add_term(idx, c * lam * lam);
  CHECK(bs == expect);
}

TEST_CASE("yb_bracket of a skew tensor is totally antisymmetric") {
  RationalSampler s(23);
  for (int trial = 0; trial < 5; ++trial) {
    QTensor2 r = random_skew(3, s, 3);
    CHECK(in_wedge3(yb_bracket(r)));
  }
}

TEST_CASE("ad_diag basics") {
  int n = 3;
  QTensor2 r = wedge(QMatrix::unit(n, 1, 2), QMatrix::unit(n, 2, 1));
  CHECK(ad_diag(QMatrix(n), r).is_zero());
  // derivation property: ad_x(a /\ b) = [x,a] /\ b + a /\ [x,b]
  RationalSampler s(29);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix x = random_sparse(n, s, 3), a = random_sparse(n, s, 2), b = random_sparse(n, s, 2);
    CHECK(ad_diag(x, wedge(a, b)) == wedge(bracket(x, a), b) + wedge(a, bracket(x, b)));
  }
}

TEST_CASE("conjugation by the identity and by permutations") {
  int n = 3;
  RationalSampler s(31);
  QTensor2 r = random_skew(n, s, 3);
  CHECK(conj_action(QMatrix::identity(n), r) == r);

  // permutation conjugation preserves solutions of the classical equation
  QMatrix perm(n);  // cycle 1 -> 2 -> 3 -> 1
  perm.add(2, 1, Scalar(1));
  perm.add(3, 2, Scalar(1));
  perm.add(1, 3, Scalar(1));
  QMatrix h(n);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  QTensor2 cy = wedge(h, QMatrix::unit(n, 1, 2));
  REQUIRE(is_cybe(cy));
  CHECK(is_cybe(conj_action(perm, cy)));
  CHECK_THROWS_AS(conj_action(QMatrix(n), r), std::domain_error);
}

TEST_CASE("conjugation is equivariant for the bracket") {
  int n = 3;
  RationalSampler s(37);
  for (int trial = 0; trial < 5; ++trial) {
    QMatrix u(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) u.add(i, j, s.any());
    PMatrix g = nilpotent_exp(lift(u, 1)), gi = nilpotent_exp(lift(-u, 1));
    QTensor2 r = random_skew(n, s, 2);
    PTensor2 moved = conj_action_with_inverse(g, gi, lift(r));
    // bracket commutes with the action in all three slots
    PTensor3 lhs = yb_bracket(moved);
    PTensor3 rhs = conj_action_with_inverse(g, gi, [&] {
      QTensor3 b = yb_bracket(r);
      PTensor3 lifted(n);
      for (const auto& [idx, c] : b.terms()) lifted.add_term(idx, TPoly(c));
      return lifted;
    }());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("scaling and constant conjugation preserve the modified equation") {
  QTensor2 r = gamma_term(3) + beta_cg(3, 1) +
               Scalar(2) * wedge(QMatrix::unit(3, 1, 2), QMatrix::unit(3, 3, 2));
  REQUIRE(is_mcybe(r));
  CHECK(is_mcybe(r * rational(-3, 2)));
  QMatrix g = QMatrix::identity(3);
  g.add(1, 2, rational(5, 3));
  CHECK(is_mcybe(conj_action(g, r)));
}

TEST_CASE("the modified predicate rejects zero and non-skew input") {
  CHECK_FALSE(is_mcybe(QTensor2(3)));
  QTensor2 bad(2);
  bad.add_term({1, 2, 1, 2}, Scalar(1));
  CHECK_THROWS_AS(is_mcybe(bad), std::invalid_argument);
}

TEST_CASE("proportionality") {
  int n = 2;
  QTensor2 r = wedge(QMatrix::unit(n, 1, 2), QMatrix::unit(n, 2, 1));
  CHECK(proportional(r, r) == Scalar(1));
  CHECK(proportional(r * Scalar(2), r) == Scalar(2));
  QTensor2 s3 = wedge(QMatrix::unit(3, 1, 3), QMatrix::unit(3, 3, 1));
  QTensor2 r3 = wedge(QMatrix::unit(3, 1, 2), QMatrix::unit(3, 2, 1));
  CHECK_FALSE(proportional(r3, s3));
  CHECK(proportional(QTensor2(3), QTensor2(3)) == Scalar(1));
  CHECK_FALSE(proportional(QTensor2(3), s3));
  CHECK_FALSE(proportional(s3, QTensor2(3)));
}

TEST_CASE("traceless-slot membership") {
  int n = 3;
  QTensor2 ok = gamma_term(n) + beta_cg(n, 1);
  CHECK(in_sl_tensor_sl(ok));
  QTensor2 bad(n);
  bad.add_term({1, 1, 1, 2}, Scalar(1));
  bad.add_term({1, 2, 1, 1}, Scalar(-1));
  CHECK_FALSE(in_sl_tensor_sl(bad));
}

TEST_CASE("degree splitting and reassembly") {
  PTensor2 t(2);
  t.add_term({1, 2, 2, 1}, TPoly{Scalar(1), Scalar(0), rational(1, 2)});
  auto parts = split_by_degree(t);
  CHECK(parts.at(0).coeff({1, 2, 2, 1}) == Scalar(1));
  CHECK(parts.count(1) == 0);
  CHECK(parts.at(2).coeff({1, 2, 2, 1}) == rational(1, 2));
}

TEST_CASE("sigma acts slotwise") {
  QTensor2 r = wedge(QMatrix::unit(3, 1, 2), QMatrix::unit(3, 2, 1));
  QTensor2 expect = wedge(QMatrix::unit(3, 3, 2), QMatrix::unit(3, 2, 3));
  CHECK(sigma_map(r) == expect);
  CHECK(sigma_map(sigma_map(r)) == r);
}

}
