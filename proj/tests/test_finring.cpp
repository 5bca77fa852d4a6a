#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlfact/finring.hpp"

#include <set>

using namespace mlfact::ring;

namespace {

RingObjPtr Zr(std::size_t n) {
  return std::make_shared<FiniteCommRing>(FiniteCommRing::zmod(n));
}

RingObjPtr zero_mul(std::size_t n) {
  return std::make_shared<FiniteCommRing>(FiniteCommRing::zero_multiplication(n));
}

RingObjPtr product(const RingObjPtr& a, const RingObjPtr& b) {
  return std::make_shared<FiniteCommRing>(FiniteCommRing::direct_product(*a, *b));
}

// reduction Z/2n -> Z/n as an explicit hom
RingHom mod_hom(const RingObjPtr& a, const RingObjPtr& b) {
  std::vector<std::size_t> m(a->order());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i % b->order();
  RingHom f{a, b, std::move(m)};
  validate(f);
  return f;
}

}  // namespace

TEST_CASE("constructors and validation") {
  CHECK(Zr(6)->order() == 6);
  CHECK(zero_mul(4)->order() == 4);
  auto f4 = std::make_shared<FiniteCommRing>(FiniteCommRing::gf4());
  CHECK(f4->order() == 4);
  // GF(4) is a field: every nonzero element has an inverse under mul
  for (std::size_t x = 1; x < 4; ++x) {
    bool unit = false;
    for (std::size_t y = 1; y < 4; ++y)
      if (f4->mul(x, y) == 1) unit = true;
    CHECK(unit);
  }

  // broken distributivity: Z/2 addition with mul(1,1)=1 replaced is fine, so
  // instead break associativity of addition via a non-group table
  std::vector<std::vector<std::size_t>> bad_add{{0, 1}, {1, 1}};
  std::vector<std::vector<std::size_t>> zmul{{0, 0}, {0, 0}};
  CHECK_THROWS_WITH_AS(FiniteCommRing(bad_add, zmul),
                       doctest::Contains("inverse"), validation_error);
  std::vector<std::vector<std::size_t>> shifted{{1, 0}, {0, 1}};
  CHECK_THROWS_WITH_AS(FiniteCommRing(shifted, zmul),
                       doctest::Contains("identity"), validation_error);
  // valid addition, non-distributive multiplication on Z/3
  std::vector<std::vector<std::size_t>> a3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> m3{{0, 0, 0}, {0, 1, 1}, {0, 1, 1}};
  CHECK_THROWS_WITH_AS(FiniteCommRing(a3, m3),
                       doctest::Contains("distributivity"), validation_error);
}

TEST_CASE("nilradical examples") {
  CHECK(nilradical(Zr(8)).elements == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(nilradical(Zr(6)).elements == std::vector<std::size_t>{0});
  CHECK(nilradical(Zr(12)).elements == std::vector<std::size_t>{0, 6});
  CHECK(is_reduced(Zr(6)));
  CHECK_FALSE(is_reduced(Zr(8)));
  // every element of a zero-multiplication ring squares to zero
  CHECK(is_nil(zero_mul(5)));
  CHECK_FALSE(is_nil(Zr(4)));
  CHECK(is_reduced(std::make_shared<FiniteCommRing>(FiniteCommRing::gf4())));
}

TEST_CASE("nilradical is an ideal and the quotient is reduced") {
  std::vector<RingObjPtr> fixtures{Zr(8), Zr(12), zero_mul(4),
                                   product(Zr(4), Zr(3)),
                                   product(Zr(2), zero_mul(2))};
  for (const auto& r : fixtures) {
    auto nil = nilradical(r);
    CHECK(is_ideal(nil));
    auto q = quotient_ring(r, nil);
    CHECK(is_reduced(q.quotient));
    CHECK(is_surjective(q.projection));
    CHECK(kernel_ideal(q.projection).elements == nil.elements);
  }
  // Z/8 modulo its nilradical is Z/2
  auto q8 = quotient_ring(Zr(8), nilradical(Zr(8)));
  CHECK(q8.quotient->order() == 2);
  CHECK(find_isomorphism(q8.quotient, Zr(2)).has_value());
}

TEST_CASE("kernel / image / cokernel") {
  auto f = mod_hom(Zr(8), Zr(2));
  auto ker = kernel_ideal(f);
  CHECK(ker.elements == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(is_nil(subring_object(f.domain, ker.elements).ring));

  auto g = mod_hom(Zr(6), Zr(2));
  CHECK(is_reduced(subring_object(g.domain, kernel_ideal(g).elements).ring));

  CHECK(cokernel(f).quotient->order() == 1);
  CHECK(cokernel(zero_hom(Zr(3), Zr(4))).quotient->order() == 4);
  // image of Z/3 -> Z/12, 1 |-> 4 (idempotent) generates the ideal {0,4,8}
  std::vector<std::size_t> m{0, 4, 8};
  RingHom h{Zr(3), Zr(12), m};
  validate(h);
  CHECK(cokernel(h).quotient->order() == 4);
}

TEST_CASE("ideal_generated_by and all_ideals") {
  auto z12 = Zr(12);
  CHECK(ideal_generated_by(z12, {4}).elements ==
        std::vector<std::size_t>{0, 4, 8});
  CHECK(ideal_generated_by(z12, {4, 6}).elements ==
        std::vector<std::size_t>{0, 2, 4, 6, 8, 10});
  // ideals of Z/12 are the divisors' multiples: 6 of them
  CHECK(all_ideals(z12).size() == 6);
  // a field has only the two trivial ideals
  CHECK(all_ideals(std::make_shared<FiniteCommRing>(FiniteCommRing::gf4()))
            .size() == 2);
  // zero-multiplication ring: every additive subgroup is an ideal
  CHECK(all_ideals(zero_mul(4)).size() == 3);
}

TEST_CASE("pullback") {
  auto f = mod_hom(Zr(4), Zr(2));
  auto g = mod_hom(Zr(6), Zr(2));
  auto pb = pullback(f, g);
  CHECK(pb.object->order() == 12);
  CHECK(hom_equal(compose(f, pb.p1), compose(g, pb.p2)));
  // universal property over all test cones from Z/12
  auto z12 = Zr(12);
  for (const auto& u : enumerate_ring_homs(z12, f.domain))
    for (const auto& v : enumerate_ring_homs(z12, g.domain)) {
      if (!hom_equal(compose(f, u), compose(g, v))) continue;
      auto med = into_pullback(pb, u, v);
      CHECK(is_ring_hom(med));
      CHECK(hom_equal(compose(pb.p1, med), u));
      CHECK(hom_equal(compose(pb.p2, med), v));
    }
}

TEST_CASE("enumerate_ring_homs examples") {
  // Z/6 -> Z/6: idempotents 0,1,3,4 give four homs
  CHECK(enumerate_ring_homs(Zr(6), Zr(6)).size() == 4);
  CHECK(enumerate_ring_homs(Zr(4), Zr(2)).size() == 2);
  // into a zero-multiplication ring: additive maps killing products
  CHECK(enumerate_ring_homs(zero_mul(4), zero_mul(4)).size() == 4);
}

TEST_CASE("enumerate_ring_homs agrees with raw function enumeration (order <= 8)") {
  std::vector<RingObjPtr> fixtures{
      Zr(1), Zr(2), Zr(4), zero_mul(4),
      std::make_shared<FiniteCommRing>(FiniteCommRing::gf4()),
      product(Zr(2), Zr(2)), Zr(6), Zr(8), product(Zr(2), Zr(4))};
  for (const auto& a : fixtures)
    for (const auto& b : fixtures) {
      auto homs = enumerate_ring_homs(a, b);
      std::set<std::vector<std::size_t>> unique;
      for (const auto& h : homs) {
        CHECK(is_ring_hom(h));
        unique.insert(h.map);
      }
      CHECK(unique.size() == homs.size());
      // raw oracle: odometer over all function tables
      const std::size_t na = a->order(), nb = b->order();
      if (na > 4 && nb > 4) continue;  // keep the raw search tractable
      std::vector<std::size_t> map(na, 0);
      std::size_t count = 0;
      while (true) {
        bool ok = map[0] == 0;
        for (std::size_t x = 0; x < na && ok; ++x)
          for (std::size_t y = 0; y < na && ok; ++y) {
            if (map[a->add(x, y)] != b->add(map[x], map[y])) ok = false;
            if (map[a->mul(x, y)] != b->mul(map[x], map[y])) ok = false;
          }
        if (ok) ++count;
        std::size_t i = 0;
        for (; i < na; ++i) {
          if (++map[i] < nb) break;
          map[i] = 0;
        }
        if (i == na) break;
      }
      CHECK(homs.size() == count);
    }
}

TEST_CASE("find_isomorphism") {
  CHECK(find_isomorphism(Zr(4), Zr(4)).has_value());
  CHECK_FALSE(find_isomorphism(Zr(4), product(Zr(2), Zr(2))).has_value());
  CHECK_FALSE(find_isomorphism(
                  std::make_shared<FiniteCommRing>(FiniteCommRing::gf4()),
                  product(Zr(2), Zr(2)))
                  .has_value());
  auto swapped = product(Zr(3), Zr(2));
  CHECK(find_isomorphism(Zr(6), swapped).has_value());
}
