#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlfact/fingroup.hpp"

#include <set>

using namespace mlfact::grp;

namespace {

GrpObjPtr Zc(std::size_t n) {
  return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n));
}

GrpObjPtr symmetric(std::size_t n) {
  // generated by a transposition and an n-cycle
  std::vector<std::size_t> cycle(n), swap01(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap01[i] = i;
  }
  std::swap(swap01[0], swap01[1]);
  return std::make_shared<FiniteGroup>(
      FiniteGroup::from_permutations(n, {cycle, swap01}));
}

GrpObjPtr alternating(std::size_t n) {
  // generated by 3-cycles
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t j = 2; j < n; ++j) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = i;
    c[0] = 1;
    c[1] = j;
    c[j] = 0;
    gens.push_back(c);
  }
  return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(n, gens));
}

GrpObjPtr klein() {
  return std::make_shared<FiniteGroup>(
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
}

// sign homomorphism on a permutation-built S_n via parity of element order on
// generators is unreliable; derive it as the quotient by the derived subgroup
GroupHom sign_hom(const GrpObjPtr& sn) {
  auto series = derived_series(sn);
  return quotient(sn, series[1]).projection;
}

}  // namespace

TEST_CASE("validate_group accepts valid tables") {
  auto v4 = klein();
  CHECK(v4->order() == 4);
  CHECK(v4->is_abelian());
  CHECK(Zc(3)->order() == 3);
}

TEST_CASE("validate_group rejects broken tables with named axioms") {
  // constant row: no inverse for element 1 (identity row/col kept valid)
  std::vector<std::vector<std::size_t>> t{{0, 1, 2}, {1, 1, 1}, {2, 1, 0}};
  CHECK_THROWS_WITH_AS(FiniteGroup{t}, doctest::Contains("inverse"),
                       validation_error);
  std::vector<std::vector<std::size_t>> t2{{1, 0}, {0, 1}};
  CHECK_THROWS_WITH_AS(FiniteGroup{t2}, doctest::Contains("identity"),
                       validation_error);
  // identity and inverses fine, associativity broken
  std::vector<std::vector<std::size_t>> t3{
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(FiniteGroup{t3}, doctest::Contains("associative"),
                       validation_error);
}

TEST_CASE("normal closure in S3") {
  auto s3 = symmetric(3);
  // find a transposition (order 2) and a 3-cycle (order 3)
  std::size_t transposition = 0, threecycle = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    if (s3->element_order(i) == 2) transposition = i;
    if (s3->element_order(i) == 3) threecycle = i;
  }
  CHECK(normal_closure(s3, {transposition}).elements.size() == 6);
  CHECK(normal_closure(s3, {threecycle}).elements.size() == 3);
  CHECK(normal_closure(s3, {}).elements.size() == 1);
}

TEST_CASE("quotient") {
  auto s3 = symmetric(3);
  auto a3 = derived_series(s3)[1];
  CHECK(a3.elements.size() == 3);
  auto q = quotient(s3, a3);
  CHECK(q.quotient->order() == 2);
  CHECK(is_surjective(q.projection));
  CHECK(kernel_subgroup(q.projection).elements == a3.elements);
  CHECK(quotient(s3, trivial_subgroup(s3)).quotient->order() == 6);
  CHECK(quotient(s3, full_subgroup(s3)).quotient->order() == 1);
  // non-normal subgroup rejected
  std::size_t transposition = 1;
  while (s3->element_order(transposition) != 2) ++transposition;
  auto h = subgroup_closure(s3, {transposition});
  CHECK_THROWS_AS(quotient(s3, h), validation_error);
}

TEST_CASE("derived series") {
  auto s4 = symmetric(4);
  auto series = derived_series(s4);
  REQUIRE(series.size() == 4);
  CHECK(series[0].elements.size() == 24);
  CHECK(series[1].elements.size() == 12);  // A4
  CHECK(series[2].elements.size() == 4);   // V4
  CHECK(series[3].elements.size() == 1);
  CHECK(is_solvable(s4));

  auto a5 = alternating(5);
  REQUIRE(a5->order() == 60);
  CHECK(derived_series(a5).size() == 1);
  CHECK(is_perfect(a5));

  auto z6 = Zc(6);
  CHECK(derived_series(z6).size() == 2);
}

TEST_CASE("kernel image cokernel") {
  auto s3 = symmetric(3);
  auto sgn = sign_hom(s3);
  CHECK(kernel_subgroup(sgn).elements.size() == 3);
  CHECK(image_subgroup(sgn).elements.size() == 2);
  CHECK(cokernel(sgn).quotient->order() == 1);

  auto id = identity_hom(s3);
  CHECK(kernel_subgroup(id).elements.size() == 1);
  CHECK(cokernel(id).quotient->order() == 1);

  auto tr = trivial_hom(s3, Zc(4));
  CHECK(kernel_subgroup(tr).elements.size() == 6);
  CHECK(cokernel(tr).quotient->order() == 4);
}

TEST_CASE("pullback") {
  auto s3 = symmetric(3);
  auto sgn = sign_hom(s3);
  // graph: pullback along identity
  auto pb1 = pullback(sgn, identity_hom(sgn.codomain));
  CHECK(pb1.object->order() == 6);
  // sign with itself: 18 pairs
  auto pb2 = pullback(sgn, sgn);
  CHECK(pb2.object->order() == 18);
  CHECK(hom_equal(compose(sgn, pb2.p1), compose(sgn, pb2.p2)));
  // pullback along 1 -> C is the kernel
  auto one = Zc(1);
  auto pb3 = pullback(sgn, trivial_hom(one, sgn.codomain));
  CHECK(pb3.object->order() == 3);
  // universal property (exhaustive over small test cones)
  auto z3 = Zc(3);
  for (const auto& u : enumerate_homs(z3, s3)) {
    auto v = trivial_hom(z3, s3);
    if (!hom_equal(compose(sgn, u), compose(sgn, v))) continue;
    auto med = into_pullback(pb2, u, v);
    CHECK(is_hom(med));
    CHECK(hom_equal(compose(pb2.p1, med), u));
    CHECK(hom_equal(compose(pb2.p2, med), v));
  }
}

TEST_CASE("enumerate_homs examples") {
  CHECK(enumerate_homs(Zc(2), Zc(4)).size() == 2);
  auto a5 = alternating(5);
  auto s4 = symmetric(4);
  auto homs = enumerate_homs(a5, s4);
  REQUIRE(homs.size() == 1);
  CHECK(is_trivial_hom(homs[0]));
  CHECK(enumerate_homs(symmetric(3), Zc(1)).size() == 1);
  // non-generating set rejected
  CHECK_THROWS_AS(enumerate_homs(symmetric(3), Zc(2), {0}), validation_error);
}

TEST_CASE("enumerate_homs agrees with raw function enumeration (order <= 8)") {
  auto d4 = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(
      4, {{1, 2, 3, 0}, {1, 0, 3, 2}}));
  REQUIRE(d4->order() == 8);
  std::vector<GrpObjPtr> fixtures{Zc(1), Zc(2), Zc(4), klein(), symmetric(3),
                                  Zc(6), d4, Zc(8)};
  for (const auto& a : fixtures)
    for (const auto& b : fixtures) {
      auto homs = enumerate_homs(a, b);
      std::set<std::vector<std::size_t>> unique;
      for (const auto& h : homs) {
        CHECK(is_hom(h));
        unique.insert(h.map);
      }
      CHECK(unique.size() == homs.size());
      // raw oracle: odometer over all function tables
      const std::size_t na = a->order(), nb = b->order();
      std::vector<std::size_t> map(na, 0);
      std::size_t count = 0;
      while (true) {
        bool ok = map[0] == 0;
        for (std::size_t x = 0; x < na && ok; ++x)
          for (std::size_t y = 0; y < na && ok; ++y)
            if (map[a->mul(x, y)] != b->mul(map[x], map[y])) ok = false;
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

TEST_CASE("subgroup enumeration and normality") {
  auto s4 = symmetric(4);
  auto normals = normal_subgroups(s4);
  std::set<std::size_t> sizes;
  for (const auto& n : normals) sizes.insert(n.elements.size());
  CHECK(sizes == std::set<std::size_t>{1, 4, 12, 24});
  auto subs = all_subgroups(symmetric(3));
  CHECK(subs.size() == 6);  // 1, three <transposition>, A3, S3
}

TEST_CASE("quotient of derived series maps onto derived series of quotient") {
  auto s4 = symmetric(4);
  auto a4sub = derived_series(s4)[1];
  auto q = quotient(s4, a4sub);
  auto qseries = derived_series(q.quotient);
  // image of each series term under proj contains the next series level
  auto series = derived_series(s4);
  for (std::size_t i = 0; i < qseries.size() && i < series.size(); ++i) {
    std::set<std::size_t> image;
    for (std::size_t x : series[i].elements) image.insert(q.projection.map[x]);
    for (std::size_t y : qseries[i].elements) CHECK(image.count(y));
  }
}

TEST_CASE("find_isomorphism") {
  auto a = klein();
  auto b = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(
      4, {{1, 0, 3, 2}, {2, 3, 0, 1}}));
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(is_iso_hom(*iso));
  CHECK_FALSE(find_isomorphism(klein(), Zc(4)).has_value());
}
