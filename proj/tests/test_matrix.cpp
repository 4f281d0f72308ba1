#include <doctest.h>

#include "ybwb/matrix.hpp"

using namespace ybwb;

namespace {

QMatrix random_sparse(int n, RationalSampler& s, int nnz) {
  QMatrix m(n);
  for (int k = 0; k < nnz; ++k) {
    int i = 1 + static_cast<int>(s.raw() % static_cast<std::uint64_t>(n));
    int j = 1 + static_cast<int>(s.raw() % static_cast<std::uint64_t>(n));
    m.add(i, j, s.any());
  }
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("bracket basics") {
  int n = 2;
  QMatrix h(2);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  CHECK(bracket(QMatrix::unit(n, 1, 2), QMatrix::unit(n, 2, 1)) == h);
  QMatrix a = QMatrix::unit(3, 1, 2) + Scalar(3) * QMatrix::unit(3, 2, 3);
  CHECK(bracket(a, a).is_zero());
  CHECK_THROWS(bracket(QMatrix::unit(2, 1, 2), QMatrix::unit(3, 1, 2)));
}

TEST_CASE("raising and lowering elements close onto the diagonal") {
  // n=3: E = 2 e12 + e23, F = e21 + 2 e32 give [E,F] = 2 e11 - 2 e33
  int n = 3;
  QMatrix e = Scalar(2) * QMatrix::unit(n, 1, 2) + QMatrix::unit(n, 2, 3);
  QMatrix f = QMatrix::unit(n, 2, 1) + Scalar(2) * QMatrix::unit(n, 3, 2);
  QMatrix h(n);
  h.add(1, 1, Scalar(2));
  h.add(3, 3, Scalar(-2));
  CHECK(bracket(e, f) == h);
}

TEST_CASE("trace form") {
  int n = 3;
  CHECK(trace_form(QMatrix::unit(n, 1, 2), QMatrix::unit(n, 2, 1)) == Scalar(1));
  CHECK(trace_form(QMatrix::unit(n, 1, 2), QMatrix::unit(n, 1, 2)) == Scalar(0));
  QMatrix h(n);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  CHECK(trace_form(h, h) == Scalar(2));
  CHECK_THROWS(trace_form(QMatrix(2), QMatrix(3)));
}

TEST_CASE("trace form is invariant: ([a,b],c) + (b,[a,c]) = 0") {
  RationalSampler s(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(s.raw() % 4);
    QMatrix a = random_sparse(n, s, 4), b = random_sparse(n, s, 4), c = random_sparse(n, s, 4);
    CHECK(trace_form(bracket(a, b), c) + trace_form(b, bracket(a, c)) == Scalar(0));
  }
}

TEST_CASE("jacobi identity on random sparse triples") {
  RationalSampler s(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(s.raw() % 4);
    QMatrix a = random_sparse(n, s, 4), b = random_sparse(n, s, 4), c = random_sparse(n, s, 4);
    QMatrix jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("nilpotent exponential") {
  CHECK(nilpotent_exp(PMatrix(3)) == PMatrix::identity(3));

  // exp(t e12) = 1 + t e12
  PMatrix a = lift(QMatrix::unit(2, 1, 2), 1);
  PMatrix expected = PMatrix::identity(2);
  expected.add(1, 2, TPoly::t(1));
  CHECK(nilpotent_exp(a) == expected);

  CHECK_THROWS_AS(nilpotent_exp(lift(QMatrix::unit(2, 1, 1))), std::domain_error);
}

TEST_CASE("mixed raising/lowering generator is nilpotent of order 4") {
  // n=5: A = t(2 e13 + e24 + e35) + (e21 + e43); the chain
  // v5 -> v3 -> {v1,v4} -> v2 -> 0 forces A^4 = 0
  int n = 5;
  QMatrix x(n);
  x.add(1, 3, Scalar(2));
  x.add(2, 4, Scalar(1));
  x.add(3, 5, Scalar(1));
  QMatrix eta(n);
  eta.add(2, 1, Scalar(1));
  eta.add(4, 3, Scalar(1));
  PMatrix a = lift(x, 1) + lift(eta);
  PMatrix p = a;
  int order = 1;
  while (!p.is_zero()) {
    p = p * a;
    ++order;
    REQUIRE(order <= n);
  }
  CHECK(order == 4);
  CHECK(is_nilpotent(a));
  // exp(a) . exp(-a) = 1
  CHECK(nilpotent_exp(a) * nilpotent_exp(-a) == PMatrix::identity(n));
}

TEST_CASE("exp(a) exp(-a) = identity on random strictly upper matrices") {
  RationalSampler s(13);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(s.raw() % 4);
    QMatrix u(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) u.add(i, j, s.any());
    PMatrix a = lift(u, 1);
    CHECK(nilpotent_exp(a) * nilpotent_exp(-a) == PMatrix::identity(n));
  }
}

TEST_CASE("sigma is an involution swapping corners") {
  QMatrix m = QMatrix::unit(4, 1, 2) + Scalar(5) * QMatrix::unit(4, 3, 3);
  CHECK(sigma_map(sigma_map(m)) == m);
  CHECK(sigma_map(QMatrix::unit(4, 1, 2)) == QMatrix::unit(4, 4, 3));
}

}
