#include <doctest.h>

#include "ybwb/linsolve.hpp"

using namespace ybwb;

namespace {

Vec mat_apply(const Mat& a, const Vec& x) {
  Vec y(a.size(), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace

TEST_SUITE("linsolve") {

TEST_CASE("identity system") {
  Mat a = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
  Vec b = {rational(3, 7), Scalar(-2)};
  auto sol = solve_linear(a, b);
  REQUIRE(sol);
  CHECK(sol->particular == b);
  CHECK(sol->nullspace.empty());
}

TEST_CASE("0 x = 0 has a one-dimensional nullspace") {
  Mat a = {{Scalar(0)}};
  auto sol = solve_linear(a, {Scalar(0)});
  REQUIRE(sol);
  CHECK(sol->particular == Vec{Scalar(0)});
  CHECK(sol->nullspace.size() == 1);
}

TEST_CASE("inconsistent system reports no solution") {
  Mat a = {{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}};
  CHECK_FALSE(solve_linear(a, {Scalar(1), Scalar(3)}));
}

TEST_CASE("random systems: particular solves, nullspace annihilates") {
  RationalSampler s(5);
  for (int trial = 0; trial < 30; ++trial) {
    size_t rows = 1 + s.raw() % 5, cols = 1 + s.raw() % 5;
    Mat a(rows, Vec(cols, Scalar(0)));
    Vec x(cols, Scalar(0));
    for (auto& row : a)
      for (auto& v : row) v = s.any(5);
    for (auto& v : x) v = s.any(5);
    Vec b = mat_apply(a, x);  // consistent by construction
    auto sol = solve_linear(a, b);
    REQUIRE(sol);
    CHECK(mat_apply(a, sol->particular) == b);
    for (const auto& nv : sol->nullspace) CHECK(is_zero_vec(mat_apply(a, nv)));
    CHECK(static_cast<int>(cols) ==
          rank(a) + static_cast<int>(sol->nullspace.size()));
  }
}

TEST_CASE("exact inverse") {
  Mat a = {{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}};
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Scalar(1));
  CHECK((*inv)[0][1] == Scalar(-1));
  Mat sing = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK_FALSE(inverse(sing));
}

}
