#include "nielsen/smith.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nielsen;
using testsupport::detBareiss;

namespace {

void checkDecomposition(const IntMatrix& m, const SmithDecomposition& s) {
  CHECK(s.d == s.u * m * s.v);
  CHECK(s.u * s.uInv == IntMatrix::Identity(m.rows(), m.rows()));
  CHECK(s.v * s.vInv == IntMatrix::Identity(m.cols(), m.cols()));
  if (m.rows() > 0) {
    Wide du = detBareiss(s.u);
    CHECK((du == 1 || du == -1));
  }
  if (m.cols() > 0) {
    Wide dv = detBareiss(s.v);
    CHECK((dv == 1 || dv == -1));
  }
  const Index k = std::min(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
  for (Index i = 0; i < k; ++i) CHECK(s.d(i, i) >= 0);
  for (Index i = 0; i + 1 < k; ++i) {
    if (s.d(i + 1, i + 1) != 0) {
      REQUIRE(s.d(i, i) != 0);
      CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of a single row") {
  IntMatrix m(1, 2);
  m << 2, 4;
  auto s = smithNormalForm(m);
  checkDecomposition(m, s);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(0, 1) == 0);
}

TEST_CASE("smith normal form fixes the identity") {
  IntMatrix m = IntMatrix::Identity(3, 3);
  auto s = smithNormalForm(m);
  checkDecomposition(m, s);
  CHECK(s.d == IntMatrix::Identity(3, 3));
}

TEST_CASE("smith normal form needs a unimodular mix for [[2,1],[1,2]]") {
  IntMatrix m(2, 2);
  m << 2, 1, 1, 2;
  auto s = smithNormalForm(m);
  checkDecomposition(m, s);
  // gcd of the entries is 1 and |det| = 3, which pins the diagonal
  CHECK(detBareiss(m) == 3);
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == 3);
}

TEST_CASE("smith normal form handles zero and empty matrices") {
  IntMatrix z = IntMatrix::Zero(2, 3);
  auto s = smithNormalForm(z);
  checkDecomposition(z, s);
  CHECK(s.d.isZero());
  CHECK(s.rank() == 0);

  IntMatrix e(0, 4);
  auto se = smithNormalForm(e);
  CHECK(se.d.rows() == 0);
  CHECK(se.d.cols() == 4);
  CHECK(se.v == IntMatrix::Identity(4, 4));
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 100; ++trial) {
    const Index rows = testsupport::randInt(rng, 0, 6);
    const Index cols = testsupport::randInt(rng, 0, 6);
    IntMatrix m = testsupport::randomMatrix(rng, rows, cols, 9);
    auto s = smithNormalForm(m);
    checkDecomposition(m, s);
  }
}
