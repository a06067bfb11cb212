#include "nielsen/abelian.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace nielsen;
using testsupport::allFiniteAbelianUpTo;
using testsupport::randInt;
using testsupport::randomHom;

TEST_CASE("invariant factor lists are validated") {
  CHECK_NOTHROW(FgAbelianGroup({2, 4, 0}));
  CHECK_NOTHROW(FgAbelianGroup(std::vector<Int>{}));
  CHECK_NOTHROW(FgAbelianGroup({0, 0}));
  CHECK_THROWS_AS(FgAbelianGroup({1}), Error);
  CHECK_THROWS_AS(FgAbelianGroup({4, 2}), Error);
  CHECK_THROWS_AS(FgAbelianGroup({2, 3}), Error);
  CHECK_THROWS_AS(FgAbelianGroup({0, 2}), Error);
  CHECK_THROWS_AS(FgAbelianGroup({-2}), Error);
}

TEST_CASE("fromCyclicFactors normalizes cyclic decompositions") {
  CHECK(FgAbelianGroup::fromCyclicFactors({2, 3}) == FgAbelianGroup({6}));
  CHECK(FgAbelianGroup::fromCyclicFactors({4, 2}) == FgAbelianGroup({2, 4}));
  CHECK(FgAbelianGroup::fromCyclicFactors({1, 1}) == FgAbelianGroup::trivial());
  CHECK(FgAbelianGroup::fromCyclicFactors({6, 4}) == FgAbelianGroup({2, 12}));
  CHECK(FgAbelianGroup::fromCyclicFactors({0, 2}) == FgAbelianGroup({2, 0}));
}

TEST_CASE("group order and element order") {
  FgAbelianGroup z = FgAbelianGroup::integers();
  FgAbelianGroup z24 = FgAbelianGroup::cyclic(24);
  FgAbelianGroup mixed({2, 0});  // Z/2 + Z

  CHECK(z.order() == Card::infinite());
  CHECK(z24.order() == Card::of(24));
  CHECK(FgAbelianGroup::trivial().order() == Card::of(1));

  CHECK(elementOrder(GroupElement::zero(z24)) == Card::of(1));
  CHECK(elementOrder(GroupElement(z24, IntVector::Constant(1, 12))) == Card::of(2));
  IntVector freeGen(2);
  freeGen << 0, 1;
  CHECK(elementOrder(GroupElement(mixed, freeGen)) == Card::infinite());
  IntVector torsionGen(2);
  torsionGen << 1, 0;
  CHECK(elementOrder(GroupElement(mixed, torsionGen)) == Card::of(2));
}

TEST_CASE("hom construction rejects order violations") {
  FgAbelianGroup z2 = FgAbelianGroup::cyclic(2);
  FgAbelianGroup z4 = FgAbelianGroup::cyclic(4);
  FgAbelianGroup z = FgAbelianGroup::integers();

  CHECK_THROWS_AS(GroupHom(z2, z, IntMatrix::Constant(1, 1, 1)), Error);
  CHECK_THROWS_AS(GroupHom(z2, z4, IntMatrix::Constant(1, 1, 1)), Error);
  CHECK_NOTHROW(GroupHom(z2, z4, IntMatrix::Constant(1, 1, 2)));
  CHECK_NOTHROW(GroupHom(z2, z, IntMatrix::Zero(1, 1)));
  CHECK_THROWS_AS(GroupHom(z2, z4, IntMatrix::Zero(2, 2)), Error);
}

TEST_CASE("cokernel of a row map") {
  FgAbelianGroup z2free = FgAbelianGroup::freeAbelian(2);
  IntMatrix m(1, 2);
  m << 2, 4;
  auto c = cokernel(GroupHom(z2free, FgAbelianGroup::integers(), m));
  CHECK(c.group == FgAbelianGroup::cyclic(2));
  // the projection must kill the image and hit every class
  GroupElement img = c.projection(GroupElement(
      FgAbelianGroup::integers(), IntVector::Constant(1, 2)));
  CHECK(img.isZero());
  GroupElement one = c.projection(GroupElement(
      FgAbelianGroup::integers(), IntVector::Constant(1, 1)));
  CHECK_FALSE(one.isZero());
}

TEST_CASE("cokernel of the identity is trivial") {
  FgAbelianGroup z6 = FgAbelianGroup::cyclic(6);
  auto c = cokernel(GroupHom::identity(z6));
  CHECK(c.group.isTrivial());
}

TEST_CASE("cokernel of a column map into the plane") {
  IntMatrix m(2, 1);
  m << 2, 0;
  auto c = cokernel(GroupHom(FgAbelianGroup::integers(),
                             FgAbelianGroup::freeAbelian(2), m));
  CHECK(c.group == FgAbelianGroup({2, 0}));
}

TEST_CASE("kernel of the zero map is everything") {
  FgAbelianGroup z2free = FgAbelianGroup::freeAbelian(2);
  auto k = kernel(GroupHom::zero(z2free, FgAbelianGroup::integers()));
  CHECK(k.group == z2free);
  CHECK(k.generators.size() == 2);
}

TEST_CASE("kernel of a coordinate projection") {
  IntMatrix m(1, 2);
  m << 1, 0;
  GroupHom h(FgAbelianGroup::freeAbelian(2), FgAbelianGroup::integers(), m);
  auto k = kernel(h);
  CHECK(k.group == FgAbelianGroup::integers());
  REQUIRE(k.generators.size() == 1);
  CHECK(h(k.generators[0]).isZero());
  CHECK(std::abs(k.generators[0].coordinates()[1]) == 1);
  CHECK(k.generators[0].coordinates()[0] == 0);
}

TEST_CASE("kernel of doubling on Z/6") {
  FgAbelianGroup z6 = FgAbelianGroup::cyclic(6);
  GroupHom dbl(z6, z6, IntMatrix::Constant(1, 1, 2));
  auto k = kernel(dbl);
  CHECK(k.group == FgAbelianGroup::cyclic(2));
  REQUIRE(k.generators.size() == 1);
  CHECK(k.generators[0].coordinates()[0] == 3);
}

TEST_CASE("kernel and image sizes multiply to the domain order") {
  std::mt19937_64 rng(77);
  auto groups = allFiniteAbelianUpTo(48);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& dom = groups[size_t(randInt(rng, 0, Int(groups.size()) - 1))];
    const auto& cod = groups[size_t(randInt(rng, 0, Int(groups.size()) - 1))];
    GroupHom h = randomHom(rng, dom, cod);

    // image size by brute enumeration
    std::set<std::vector<Int>> image;
    for (const auto& x : enumerateElements(dom)) {
      auto y = h(x);
      image.insert(std::vector<Int>(y.coordinates().data(),
                                    y.coordinates().data() + y.coordinates().size()));
    }
    // kernel size two ways: from the computed type and by counting zeros
    auto k = kernel(h);
    Card kOrder = k.group.order();
    REQUIRE(kOrder.finite);
    Int zeros = 0;
    for (const auto& x : enumerateElements(dom))
      if (h(x).isZero()) ++zeros;
    CHECK(kOrder.value == zeros);
    CHECK(kOrder.value * Int(image.size()) == dom.order().value);

    // every reported generator lies in the kernel
    for (const auto& g : k.generators) CHECK(h(g).isZero());
  }
}

TEST_CASE("cokernel type is invariant under domain automorphisms") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Index d = randInt(rng, 1, 4), c = randInt(rng, 1, 4);
    FgAbelianGroup dom = FgAbelianGroup::freeAbelian(d);
    FgAbelianGroup cod = FgAbelianGroup::freeAbelian(c);
    GroupHom h(dom, cod, testsupport::randomMatrix(rng, c, d, 6));
    GroupHom aut(dom, dom, testsupport::randomUnimodular(rng, d));
    CHECK(cokernel(h).group == cokernel(h.compose(aut)).group);
  }
}

TEST_CASE("cokernel projection composed with the map is zero") {
  std::mt19937_64 rng(123);
  auto groups = allFiniteAbelianUpTo(30);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& dom = groups[size_t(randInt(rng, 0, Int(groups.size()) - 1))];
    const auto& cod = groups[size_t(randInt(rng, 0, Int(groups.size()) - 1))];
    GroupHom h = randomHom(rng, dom, cod);
    auto c = cokernel(h);
    GroupHom zeroed = c.projection.compose(h);
    CHECK(zeroed.matrix().isZero());
    // class count times image size equals the codomain order
    std::set<std::vector<Int>> image;
    for (const auto& x : enumerateElements(dom)) {
      auto y = h(x);
      image.insert(std::vector<Int>(y.coordinates().data(),
                                    y.coordinates().data() + y.coordinates().size()));
    }
    CHECK(c.group.order().value * Int(image.size()) == cod.order().value);
  }
}

TEST_CASE("group formatting") {
  CHECK(formatGroup(FgAbelianGroup::trivial()) == "0");
  CHECK(formatGroup(FgAbelianGroup::integers()) == "Z");
  CHECK(formatGroup(FgAbelianGroup({2, 4, 0, 0})) == "Z/2 + Z/4 + Z^2");
}
