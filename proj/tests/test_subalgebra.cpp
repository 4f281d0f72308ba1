#include <doctest.h>

#include "ybwb/subalgebra.hpp"

using namespace ybwb;

TEST_SUITE("subalgebra") {

TEST_CASE("closure of {e12, e21} is the full rank-one algebra") {
  auto s = subalgebra_closure(2, {QMatrix::unit(2, 1, 2), QMatrix::unit(2, 2, 1)});
  CHECK(s.dim() == 3);
  QMatrix h(2);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  CHECK(s.span.contains(h));
  CHECK(s.check_closed());
  CHECK_FALSE(s.is_abelian());
}

TEST_CASE("the two string generators for n=5 span an abelian plane") {
  QMatrix xi(5), eta(5);
  xi.add(2, 3, Scalar(1));
  xi.add(4, 5, Scalar(1));
  eta.add(2, 1, Scalar(1));
  eta.add(4, 3, Scalar(1));
  auto s = subalgebra_closure(5, {xi, eta});
  CHECK(s.dim() == 2);
  CHECK(s.is_abelian());
}

TEST_CASE("empty generating set gives the zero algebra") {
  auto s = subalgebra_closure(4, {});
  CHECK(s.dim() == 0);
  CHECK(s.is_abelian());
}

TEST_CASE("closure is idempotent and echelon bases are deterministic") {
  RationalSampler smp(3);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(smp.raw() % 3);
    std::vector<QMatrix> gens;
    for (int g = 0; g < 2; ++g) {
      QMatrix m(n);
      for (int k = 0; k < 3; ++k)
        m.add(1 + static_cast<int>(smp.raw() % static_cast<std::uint64_t>(n)),
              1 + static_cast<int>(smp.raw() % static_cast<std::uint64_t>(n)), smp.any());
      gens.push_back(std::move(m));
    }
    auto s = subalgebra_closure(n, gens);
    CHECK(s.check_closed());
    auto again = subalgebra_closure(n, s.basis());
    CHECK(again.span == s.span);
  }
}

TEST_CASE("coordinates invert from_coordinates") {
  auto s = subalgebra_closure(3, {QMatrix::unit(3, 1, 2), QMatrix::unit(3, 2, 1)});
  Vec c = {rational(1, 3), Scalar(-2), Scalar(5)};
  CHECK(s.span.coordinates(s.span.from_coordinates(c)) == c);
  CHECK_THROWS(s.span.coordinates(QMatrix::unit(3, 1, 3)));
}

TEST_CASE("span intersection") {
  MatSpan a(3), b(3);
  a.insert(QMatrix::unit(3, 1, 2));
  a.insert(QMatrix::unit(3, 1, 3));
  b.insert(QMatrix::unit(3, 1, 3));
  b.insert(QMatrix::unit(3, 2, 3));
  MatSpan c = a.intersect(b);
  CHECK(c.dim() == 1);
  CHECK(c.contains(QMatrix::unit(3, 1, 3)));
}

TEST_CASE("radical of a simple algebra is zero") {
  QMatrix h(2);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  auto sl2 = subalgebra_closure(2, {QMatrix::unit(2, 1, 2), QMatrix::unit(2, 2, 1), h});
  CHECK(sl2.dim() == 3);
  CHECK_FALSE(is_solvable(sl2));
  CHECK(solvable_radical(sl2).dim() == 0);
}

TEST_CASE("radical of a solvable algebra is everything") {
  QMatrix h(2);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  auto borel = subalgebra_closure(2, {h, QMatrix::unit(2, 1, 2)});
  CHECK(borel.dim() == 2);
  CHECK(is_solvable(borel));
  CHECK(solvable_radical(borel).dim() == 2);
}

TEST_CASE("radical of gl-block reductive piece picks out the center") {
  // span{e11 - e22, e12, e21, e11 + e22} inside gl(2) as a subalgebra of
  // sl(4)-sized ambient space via the top-left block, plus nothing else:
  // radical = center = span{e11 + e22}
  int n = 4;
  QMatrix h(n), z(n);
  h.add(1, 1, Scalar(1));
  h.add(2, 2, Scalar(-1));
  z.add(1, 1, Scalar(1));
  z.add(2, 2, Scalar(1));
  auto s = subalgebra_closure(n, {h, z, QMatrix::unit(n, 1, 2), QMatrix::unit(n, 2, 1)});
  CHECK(s.dim() == 4);
  auto rad = solvable_radical(s);
  CHECK(rad.dim() == 1);
  CHECK(rad.span.contains(z));
}

}
