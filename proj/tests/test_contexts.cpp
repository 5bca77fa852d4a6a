#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlfact/contexts.hpp"

#include <set>

using namespace mlfact::ctx;
namespace ab = mlfact::ab;
namespace grp = mlfact::grp;
namespace ring = mlfact::ring;
namespace xm = mlfact::xmod;
using mlfact::Int;

namespace {

Obj Zab(const Int& n) {
  return wrap(std::make_shared<ab::PresentedAbGroup>(
      ab::PresentedAbGroup::cyclic(n)));
}

Obj ab_sum(const ab::PresentedAbGroup& a, const ab::PresentedAbGroup& b) {
  return wrap(std::make_shared<ab::PresentedAbGroup>(
      ab::PresentedAbGroup::direct_sum(a, b)));
}

Obj Zgrp(std::size_t n) {
  return wrap(std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(n)));
}

grp::GrpObjPtr symmetric(std::size_t n) {
  std::vector<std::size_t> cycle(n), swap01(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap01[i] = i;
  }
  std::swap(swap01[0], swap01[1]);
  return std::make_shared<grp::FiniteGroup>(
      grp::FiniteGroup::from_permutations(n, {cycle, swap01}));
}

grp::GrpObjPtr alternating5() {
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t j = 2; j < 5; ++j) {
    std::vector<std::size_t> c(5);
    for (std::size_t i = 0; i < 5; ++i) c[i] = i;
    c[0] = 1;
    c[1] = j;
    c[j] = 0;
    gens.push_back(c);
  }
  return std::make_shared<grp::FiniteGroup>(
      grp::FiniteGroup::from_permutations(5, gens));
}

Obj Zring(std::size_t n) {
  return wrap(std::make_shared<ring::FiniteCommRing>(
      ring::FiniteCommRing::zmod(n)));
}

}  // namespace

TEST_CASE("make_context tags") {
  CHECK(make_context("ab")->tag() == "ab");
  CHECK(make_context("finab:p=2")->tag() == "finab:p=2");
  CHECK(make_context("fingrp")->tag() == "fingrp");
  CHECK(make_context("finring")->tag() == "finring");
  CHECK(make_context("xmod")->tag() == "xmod");
  CHECK_FALSE(make_context("xmod")->supports_pullback());
  CHECK_THROWS_AS(make_context("banach"), context_error);
  CHECK_THROWS_AS(make_context("finab:p=4"), context_error);
  CHECK_THROWS_AS(make_context("finab:p=x"), context_error);
}

TEST_CASE("handles from another context are rejected") {
  auto c = make_context("ab");
  CHECK_THROWS_AS(c->object_order(Zgrp(3)), context_error);
  auto g = make_context("fingrp");
  CHECK_THROWS_AS(g->radical(Zab(4)), context_error);
}

TEST_CASE("AbClassical radical: torsion subgroup") {
  auto c = make_context("ab");
  // Z ⊕ Z/4: torsion part Z/4, reflection Z
  auto a = ab_sum(ab::PresentedAbGroup::free_group(1),
                  ab::PresentedAbGroup::cyclic(4));
  auto rad = c->radical(a);
  CHECK(c->object_order(rad.torsion) == 4);
  CHECK(as_ab(rad.torsion).invariant_factors() == std::vector<Int>{4});
  CHECK(as_ab(rad.reflection).free_rank() == 1);
  CHECK(as_ab(rad.reflection).invariant_factors().empty());
  CHECK(c->is_mono(rad.counit));
  CHECK(c->is_normal_epi(rad.unit));
  CHECK(c->is_torsion(Zab(6)));
  CHECK(c->is_torsion_free(wrap(std::make_shared<ab::PresentedAbGroup>(
      ab::PresentedAbGroup::free_group(2)))));
  // only the zero object is both
  auto zero = wrap(std::make_shared<ab::PresentedAbGroup>(
      ab::PresentedAbGroup::trivial()));
  CHECK(c->is_torsion(zero));
  CHECK(c->is_torsion_free(zero));
  CHECK_FALSE(c->is_torsion_free(Zab(6)));
}

TEST_CASE("FinAbPrimary(2) radical: 2-primary component") {
  auto c = make_context("finab:p=2");
  auto rad = c->radical(Zab(12));
  // the 2-primary part of Z/12 is the order-4 subgroup {0,3,6,9} ≅ Z/4
  CHECK(c->object_order(rad.torsion) == 4);
  CHECK(as_ab(rad.torsion).invariant_factors() == std::vector<Int>{4});
  CHECK(c->object_order(rad.reflection) == 3);
  // membership oracle: the image of the counit is exactly 3·Z/12
  const auto& incl = as_ab(rad.counit);
  for (const auto& e : as_ab(rad.torsion).elements()) {
    Int image = 0;
    for (std::size_t k = 0; k < e.size(); ++k)
      image += incl.matrix.at(0, k) * e[k];
    Int r = image % 12;
    if (r < 0) r += 12;
    CHECK(r % 3 == 0);
  }
  CHECK(c->is_torsion(Zab(8)));
  CHECK(c->is_torsion_free(Zab(9)));
  CHECK_FALSE(c->is_torsion(Zab(12)));
  CHECK_FALSE(c->is_torsion_free(Zab(12)));
  // infinite objects are outside the instance category
  CHECK_THROWS_AS(c->radical(wrap(std::make_shared<ab::PresentedAbGroup>(
                      ab::PresentedAbGroup::free_group(1)))),
                  context_error);
}

TEST_CASE("FinGrpPerfectSolvable radical: perfect radical") {
  auto c = make_context("fingrp");
  auto s4 = wrap(symmetric(4));
  auto rad = c->radical(s4);
  CHECK(c->object_order(rad.torsion) == 1);
  CHECK(c->object_order(rad.reflection) == 24);
  CHECK(c->is_torsion_free(s4));

  auto a5 = alternating5();
  CHECK(c->is_torsion(wrap(a5)));

  auto a5xz2 = wrap(std::make_shared<grp::FiniteGroup>(
      grp::FiniteGroup::direct_product(*a5, grp::FiniteGroup::cyclic(2))));
  auto rad2 = c->radical(a5xz2);
  CHECK(c->object_order(rad2.torsion) == 60);
  CHECK(c->object_order(rad2.reflection) == 2);
  CHECK(c->is_normal_epi(rad2.unit));
  CHECK(c->is_normal_mono(rad2.counit));
}

TEST_CASE("FinCRngNilReduced radical: nilradical") {
  auto c = make_context("finring");
  auto rad = c->radical(Zring(8));
  CHECK(c->object_order(rad.torsion) == 4);
  CHECK(c->object_order(rad.reflection) == 2);
  CHECK(c->is_torsion_free(Zring(6)));
  auto zm = wrap(std::make_shared<ring::FiniteCommRing>(
      ring::FiniteCommRing::zero_multiplication(4)));
  CHECK(c->is_torsion(zm));
  CHECK(c->is_torsion_free(wrap(std::make_shared<ring::FiniteCommRing>(
      ring::FiniteCommRing::gf4()))));
}

TEST_CASE("XModAbNormMono radical: (Ker α → 1)") {
  auto c = make_context("xmod");
  auto z2 = std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(2));
  auto x = wrap(std::make_shared<xm::CrossedModule>(
      xm::CrossedModule::zero_boundary(z2, z2)));
  auto rad = c->radical(x);
  CHECK(as_xmod(rad.torsion).top()->order() == 2);
  CHECK(as_xmod(rad.torsion).base()->order() == 1);
  CHECK(as_xmod(rad.reflection).top()->order() == 1);
  CHECK(as_xmod(rad.reflection).base()->order() == 2);
  // conjugation crossed modules have injective boundary: torsion-free
  auto s3conj = wrap(std::make_shared<xm::CrossedModule>(
      xm::CrossedModule::conjugation(symmetric(3))));
  CHECK(c->is_torsion_free(s3conj));
  // torsion objects are abelian groups over the trivial base
  auto one = std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(1));
  auto z4 = std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(4));
  CHECK(c->is_torsion(wrap(std::make_shared<xm::CrossedModule>(
      xm::CrossedModule::zero_boundary(z4, one)))));
}

TEST_CASE("radical sequence is short exact in every context") {
  struct Fixture {
    std::string tag;
    Obj obj;
  };
  auto z2 = std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(2));
  std::vector<Fixture> fixtures{
      {"ab", Zab(12)},
      {"ab", ab_sum(ab::PresentedAbGroup::free_group(1),
                    ab::PresentedAbGroup::cyclic(6))},
      {"finab:p=2", Zab(12)},
      {"finab:p=3", Zab(18)},
      {"fingrp", wrap(symmetric(4))},
      {"fingrp", wrap(std::make_shared<grp::FiniteGroup>(
                     grp::FiniteGroup::direct_product(
                         *alternating5(), grp::FiniteGroup::cyclic(2))))},
      {"finring", Zring(8)},
      {"finring", Zring(12)},
      {"xmod", wrap(std::make_shared<xm::CrossedModule>(
                   xm::CrossedModule::zero_boundary(z2, z2)))}};
  for (const auto& fx : fixtures) {
    CAPTURE(fx.tag);
    auto c = make_context(fx.tag);
    auto rad = c->radical(fx.obj);
    CHECK(c->is_normal_mono(rad.counit));
    CHECK(c->is_normal_epi(rad.unit));
    CHECK(c->is_zero(c->compose(rad.unit, rad.counit)));
    // kernel of the unit is the torsion part
    auto k = c->kernel(rad.unit);
    CHECK(c->find_iso(k.object, rad.torsion).has_value());
    // part membership
    CHECK(c->is_torsion(rad.torsion));
    CHECK(c->is_torsion_free(rad.reflection));
    // idempotence on both sides
    CHECK(c->is_iso(c->radical(rad.torsion).counit));
    CHECK(c->is_iso(c->radical(rad.reflection).unit));
  }
}

TEST_CASE("radical is functorial on sample morphisms") {
  // f restricts to T(A) → T(B): the counit square has a (unique) filler
  auto c = make_context("finab:p=2");
  auto a = Zab(12);
  auto b = Zab(8);
  auto homs = c->enumerate_homs(a, b, 1000000);
  REQUIRE(homs.has_value());
  CHECK(homs->size() == 4);  // Hom(Z/12, Z/8) ≅ Z/gcd = Z/4
  auto ra = c->radical(a);
  auto rb = c->radical(b);
  for (const auto& f : *homs) {
    auto restricted =
        c->lift_through_mono(rb.counit, c->compose(f, ra.counit));
    CHECK(restricted.has_value());
  }
  // same in groups: quotient S4 → S4/A4 restricted to perfect radicals
  auto g = make_context("fingrp");
  auto s4 = wrap(symmetric(4));
  auto ghoms = g->enumerate_homs(s4, Zgrp(2), 1000000);
  REQUIRE(ghoms.has_value());
  auto rs4 = g->radical(s4);
  auto rz2 = g->radical(Zgrp(2));
  for (const auto& f : *ghoms)
    CHECK(g->lift_through_mono(rz2.counit, g->compose(f, rs4.counit))
              .has_value());
}

TEST_CASE("torsion classes are closed under extensions (fixture sequences)") {
  // middle of a s.e.s. with torsion ends is torsion, and dually
  auto c = make_context("finab:p=2");
  // 0 → Z/2 → Z/4 → Z/2 → 0 (all 2-groups)
  CHECK(c->is_torsion(Zab(4)));
  // 0 → Z/3 → Z/9 → Z/3 → 0 (all 2-torsion-free)
  CHECK(c->is_torsion_free(Zab(9)));
  auto r = make_context("finring");
  // 0 → (2)/(4) → Z/4 → Z/2·(nil ends) — Z/4 is nil? no: 1 is not nilpotent.
  // correct nil extension: zero-multiplication rings
  auto zm4 = wrap(std::make_shared<ring::FiniteCommRing>(
      ring::FiniteCommRing::zero_multiplication(4)));
  CHECK(r->is_torsion(zm4));
  // reduced extension: Z/6 with ideal {0,3} ≅ Z/2 and quotient Z/3
  CHECK(r->is_torsion_free(Zring(6)));
  auto g = make_context("fingrp");
  // solvable-by-solvable: S4 (extension of S3-like quotient by V4)
  CHECK(g->is_torsion_free(wrap(symmetric(4))));
}

TEST_CASE("check_hom_vanishing") {
  auto c = make_context("finab:p=2");
  auto r1 = check_hom_vanishing(*c, Zab(4), Zab(3));
  CHECK(r1.pass);
  CHECK(r1.homs_found == 1);
  auto g = make_context("fingrp");
  auto r2 = check_hom_vanishing(*g, wrap(alternating5()), wrap(symmetric(4)));
  CHECK(r2.pass);
  CHECK(r2.homs_found == 1);
  // zero source is trivially fine
  auto r3 = check_hom_vanishing(*g, Zgrp(1), wrap(symmetric(3)));
  CHECK(r3.pass);
  // non-vanishing pair reports a counterexample
  auto r4 = check_hom_vanishing(*c, Zab(2), Zab(2));
  CHECK_FALSE(r4.pass);
  REQUIRE(r4.counterexample.has_value());
  CHECK_FALSE(c->is_zero(*r4.counterexample));
  // budget exhaustion is an error, not a pass
  CHECK_THROWS_AS(check_hom_vanishing(*g, wrap(symmetric(4)), wrap(symmetric(4)), 10),
                  unsupported_error);
}

TEST_CASE("normal subobject enumeration") {
  auto c = make_context("ab");
  // subgroups of Z/12, one per divisor
  auto subs = c->normal_subobject_embeddings(Zab(12));
  CHECK(subs.size() == 6);
  std::set<Int> orders;
  for (const auto& m : subs) {
    CHECK(c->is_normal_mono(m));
    orders.insert(c->object_order(c->domain(m)));
  }
  CHECK(orders == std::set<Int>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(c->normal_subobject_embeddings(
                      wrap(std::make_shared<ab::PresentedAbGroup>(
                          ab::PresentedAbGroup::free_group(1)))),
                  unsupported_error);
  auto r = make_context("finring");
  CHECK(r->normal_subobject_embeddings(Zring(12)).size() == 6);
  auto g = make_context("fingrp");
  CHECK(g->normal_subobject_embeddings(wrap(symmetric(4))).size() == 4);
}

TEST_CASE("enumerate_homs respects the budget") {
  auto g = make_context("fingrp");
  CHECK_FALSE(g->enumerate_homs(wrap(symmetric(4)), wrap(symmetric(4)), 10)
                  .has_value());
  auto all = g->enumerate_homs(Zgrp(2), Zgrp(4), 1000);
  REQUIRE(all.has_value());
  CHECK(all->size() == 2);
}

TEST_CASE("pullbacks through the context interface") {
  auto c = make_context("finab:p=2");
  auto f = as_ab(c->radical(Zab(4)).unit);  // Z/4 → 0 (all 2-torsion)
  auto g = make_context("fingrp");
  // group-side sanity: pullback of the two S3 → Z/2 sign maps
  auto s3 = symmetric(3);
  auto sgn = grp::quotient(s3, grp::derived_series(s3)[1]).projection;
  auto pb = g->pullback(wrap(sgn), wrap(sgn));
  CHECK(g->object_order(pb.object) == 18);
  auto med = g->into_pullback(pb, g->identity(wrap(s3)), g->identity(wrap(s3)));
  CHECK(g->mor_equal(g->compose(pb.p1, med), g->identity(wrap(s3))));
  // xmod has no pullbacks
  auto x = make_context("xmod");
  auto z2 = std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(2));
  auto xo = wrap(std::make_shared<xm::CrossedModule>(
      xm::CrossedModule::zero_boundary(z2, z2)));
  CHECK_THROWS_AS(x->pullback(x->identity(xo), x->identity(xo)),
                  unsupported_error);
  (void)f;
}
