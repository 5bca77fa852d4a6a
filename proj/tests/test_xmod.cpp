#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlfact/xmod.hpp"

#include <set>

using namespace mlfact::xmod;
namespace grp = mlfact::grp;

namespace {

grp::GrpObjPtr Zc(std::size_t n) {
  return std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(n));
}

grp::GrpObjPtr symmetric3() {
  return std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::from_permutations(
      3, {{1, 2, 0}, {1, 0, 2}}));
}

XModPtr conj_xmod(const grp::GrpObjPtr& g) {
  return std::make_shared<CrossedModule>(CrossedModule::conjugation(g));
}

XModPtr zero_xmod(const grp::GrpObjPtr& a, const grp::GrpObjPtr& b) {
  return std::make_shared<CrossedModule>(CrossedModule::zero_boundary(a, b));
}

XModPtr terminal_xmod() { return conj_xmod(Zc(1)); }

// quotient by the derived subgroup, i.e. the sign map for S3
grp::GroupHom abelianisation(const grp::GrpObjPtr& g) {
  return grp::quotient(g, grp::derived_series(g)[1]).projection;
}

// is the subgroup of A given by `elems` central in A?
bool central_in(const grp::GrpObjPtr& a, const std::vector<std::size_t>& elems) {
  for (std::size_t z : elems)
    for (std::size_t x = 0; x < a->order(); ++x)
      if (a->mul(z, x) != a->mul(x, z)) return false;
  return true;
}

}  // namespace

TEST_CASE("validation accepts the standard examples") {
  auto s3 = symmetric3();
  CHECK_NOTHROW(CrossedModule::conjugation(s3));
  auto a3 = grp::derived_series(s3)[1];
  CHECK_NOTHROW(CrossedModule::normal_inclusion(s3, a3));
  CHECK_NOTHROW(CrossedModule::zero_boundary(Zc(2), Zc(2)));
  // non-normal subgroup rejected
  std::size_t transposition = 1;
  while (s3->element_order(transposition) != 2) ++transposition;
  auto h = grp::subgroup_closure(s3, {transposition});
  CHECK_THROWS_AS(CrossedModule::normal_inclusion(s3, h), validation_error);
  // zero boundary needs an abelian top group for Peiffer
  CHECK_THROWS_WITH_AS(CrossedModule::zero_boundary(s3, Zc(2)),
                       doctest::Contains("abelian"), validation_error);
}

TEST_CASE("validation rejects broken data with named axioms") {
  auto z2 = Zc(2);
  auto z4 = Zc(4);
  // trivial action with a non-central kernel situation: identity boundary on
  // Z/4 with the trivial action breaks the Peiffer identity? no — Z/4 is
  // abelian, so use equivariance instead: boundary x -> 2x into Z/4 with the
  // trivial action is fine; an action that genuinely moves elements while the
  // base is abelian breaks equivariance.
  std::vector<std::vector<std::size_t>> inversion_act(
      4, std::vector<std::size_t>{0, 3, 2, 1});
  inversion_act[0] = {0, 1, 2, 3};
  CHECK_THROWS_WITH_AS(
      CrossedModule(z4, z4, grp::identity_hom(z4), inversion_act),
      doctest::Contains("not-an-action"), validation_error);
  // consistent inversion action on all rows: a genuine action, but boundary
  // equivariance fails since the base is abelian
  std::vector<std::vector<std::size_t>> act2{
      {0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}};
  CHECK_THROWS_WITH_AS(CrossedModule(z4, z4, grp::identity_hom(z4), act2),
                       doctest::Contains("equivariance"), validation_error);
  // Peiffer failure: a nonabelian top over the trivial base — action and
  // equivariance hold trivially, but ^{α(a)}a₁ = a₁ ≠ a·a₁·a⁻¹
  auto s3 = symmetric3();
  auto one = Zc(1);
  std::vector<std::vector<std::size_t>> triv_act{{0, 1, 2, 3, 4, 5}};
  CHECK_THROWS_WITH_AS(
      CrossedModule(s3, one, grp::trivial_hom(s3, one), triv_act),
      doctest::Contains("Peiffer"), validation_error);
}

TEST_CASE("Ker(boundary) is central in the top group") {
  auto s3 = symmetric3();
  std::vector<XModPtr> fixtures{
      conj_xmod(s3), conj_xmod(Zc(4)), terminal_xmod(),
      zero_xmod(Zc(2), Zc(2)), zero_xmod(Zc(4), Zc(2)),
      std::make_shared<CrossedModule>(
          CrossedModule::normal_inclusion(s3, grp::derived_series(s3)[1]))};
  for (const auto& x : fixtures) {
    std::vector<std::size_t> ker;
    for (std::size_t a = 0; a < x->top()->order(); ++a)
      if (x->boundary().map[a] == 0) ker.push_back(a);
    CHECK(central_in(x->top(), ker));
  }
}

TEST_CASE("morphisms: validation, composition, identities") {
  auto s3 = symmetric3();
  auto xs3 = conj_xmod(s3);
  auto id = identity_morphism(xs3);
  CHECK(is_xmod_morphism(id));
  CHECK(is_iso_morphism(id));
  auto sgn = abelianisation(s3);
  auto xz2 = conj_xmod(sgn.codomain);
  XModMorphism m{xs3, xz2, sgn, sgn};
  CHECK(is_xmod_morphism(m));
  CHECK(morphism_equal(compose(m, id), m));
  CHECK(is_xmod_morphism(zero_morphism(xs3, xz2)));
  // square that does not commute
  XModMorphism bad{xs3, xz2, grp::trivial_hom(s3, sgn.codomain), sgn};
  CHECK_FALSE(is_xmod_morphism(bad));
}

TEST_CASE("xmod_kernel") {
  auto s3 = symmetric3();
  auto xs3 = conj_xmod(s3);
  // kernel of the identity is the trivial crossed module
  auto k1 = xmod_kernel(identity_morphism(xs3));
  CHECK(k1.object->top()->order() == 1);
  CHECK(k1.object->base()->order() == 1);
  // kernel of the unique morphism to the terminal object is everything
  auto k2 = xmod_kernel(zero_morphism(xs3, terminal_xmod()));
  CHECK(k2.object->top()->order() == 6);
  CHECK(k2.object->base()->order() == 6);
  // kernel of the (sign, sign) morphism on conjugation crossed modules
  auto sgn = abelianisation(s3);
  auto xz2 = conj_xmod(sgn.codomain);
  auto k3 = xmod_kernel(XModMorphism{xs3, xz2, sgn, sgn});
  CHECK(k3.object->top()->order() == 3);
  CHECK(k3.object->base()->order() == 3);
  // element restriction oracle: inclusion elements are exactly the preimages
  std::set<std::size_t> expect;
  for (std::size_t i = 0; i < 6; ++i)
    if (sgn.map[i] == 0) expect.insert(i);
  CHECK(std::set<std::size_t>(k3.inclusion.f1.map.begin(),
                              k3.inclusion.f1.map.end()) == expect);
}

TEST_CASE("xmod_reflect") {
  auto s3 = symmetric3();
  // injective boundary: the unit is an isomorphism
  auto incl = std::make_shared<CrossedModule>(
      CrossedModule::normal_inclusion(s3, grp::derived_series(s3)[1]));
  auto r1 = xmod_reflect(incl);
  CHECK(is_iso_morphism(r1.unit));
  // conjugation crossed module reflects to itself
  auto r2 = xmod_reflect(conj_xmod(s3));
  CHECK(is_iso_morphism(r2.unit));
  // zero map Z/2 -> Z/2 reflects to 1 into Z/2, unit kernel is (Z/2 -> 1)
  auto r3 = xmod_reflect(zero_xmod(Zc(2), Zc(2)));
  CHECK(r3.reflected->top()->order() == 1);
  CHECK(r3.reflected->base()->order() == 2);
  auto uk = xmod_kernel(r3.unit);
  CHECK(uk.object->top()->order() == 2);
  CHECK(uk.object->base()->order() == 1);
  // idempotence: reflecting the reflection gives an iso unit
  CHECK(is_iso_morphism(xmod_reflect(r3.reflected).unit));
  // reflected boundary is always injective
  CHECK(grp::is_injective(r3.reflected->boundary()));
}

TEST_CASE("xmod_ml_factorise") {
  auto s3 = symmetric3();
  auto xs3 = conj_xmod(s3);
  // identity morphism: both parts isomorphisms
  auto f1 = xmod_ml_factorise(identity_morphism(xs3));
  CHECK(is_iso_morphism(f1.e));
  CHECK(is_iso_morphism(f1.mstar));
  // injective boundary on the kernel: e is an isomorphism pair
  auto sgn = abelianisation(s3);
  auto f2 = xmod_ml_factorise(XModMorphism{xs3, conj_xmod(sgn.codomain), sgn, sgn});
  CHECK(is_iso_morphism(f2.e));
  // collapse (Z/2 -0-> Z/2) onto (1 -> Z/2): e kills the top Z/2
  auto dom = zero_xmod(Zc(2), Zc(2));
  auto cod = std::make_shared<CrossedModule>(
      CrossedModule::normal_inclusion(Zc(2), grp::trivial_subgroup(Zc(2))));
  XModMorphism collapse{dom, cod, grp::trivial_hom(dom->top(), cod->top()),
                        grp::identity_hom(dom->base())};
  validate(collapse);
  auto f3 = xmod_ml_factorise(collapse);
  CHECK(f3.middle->top()->order() == 1);
  CHECK(grp::is_injective(xmod_kernel(f3.mstar).object->boundary()));
  // general properties over a small corpus of morphisms
  std::vector<XModMorphism> corpus{
      identity_morphism(xs3),
      zero_morphism(dom, dom),
      collapse,
      XModMorphism{xs3, conj_xmod(sgn.codomain), sgn, sgn},
      zero_morphism(xs3, terminal_xmod())};
  for (const auto& m : corpus) {
    auto fac = xmod_ml_factorise(m);
    CHECK(morphism_equal(compose(fac.mstar, fac.e), m));
    // e's kernel has trivial base component and abelian top
    auto ek = xmod_kernel(fac.e);
    CHECK(ek.object->base()->order() == 1);
    CHECK(ek.object->top()->is_abelian());
    // m*'s kernel lies in the normal-monomorphism subcategory
    CHECK(grp::is_injective(xmod_kernel(fac.mstar).object->boundary()));
  }
}

TEST_CASE("normal subcrossed modules and quotients") {
  auto s3 = symmetric3();
  auto xs3 = conj_xmod(s3);
  auto subs = normal_subxmods(xs3);
  // pairs (N1, N0) of normal subgroups with N1 ⊆ N0 and [N0, S3] ⊆ N1:
  // (1,1), (A3,A3), (A3,S3), (S3,S3) — the pairs (1,A3) and (1,S3) fail the
  // Peiffer condition since [A3,S3] = A3
  CHECK(subs.size() == 4);
  for (const auto& s : subs) CHECK(is_normal_subxmod(s));
  // quotient by (A3, A3) is the conjugation crossed module on Z/2
  auto a3 = grp::derived_series(s3)[1];
  auto q = xmod_quotient(xs3, SubXMod{xs3, a3.elements, a3.elements});
  CHECK(q.quotient->top()->order() == 2);
  CHECK(q.quotient->base()->order() == 2);
  CHECK(is_surjective(q.projection));
  // cokernel of the kernel inclusion recovers the quotient
  auto sgn = abelianisation(s3);
  auto k = xmod_kernel(XModMorphism{xs3, conj_xmod(sgn.codomain), sgn, sgn});
  auto coker = xmod_cokernel(k.inclusion);
  CHECK(coker.quotient->top()->order() == 2);
  CHECK(coker.quotient->base()->order() == 2);
}

TEST_CASE("enumerate_xmod_morphisms and find_xmod_isomorphism") {
  auto dom = zero_xmod(Zc(2), Zc(2));
  auto all = enumerate_xmod_morphisms(dom, dom);
  // independent pairs of endomorphisms of Z/2 on each level: the action is
  // trivial and the boundary zero, so all four pairs qualify
  CHECK(all.size() == 4);
  for (const auto& m : all) CHECK(is_xmod_morphism(m));
  auto s3 = symmetric3();
  CHECK(find_xmod_isomorphism(conj_xmod(s3), conj_xmod(s3)).has_value());
  CHECK_FALSE(find_xmod_isomorphism(conj_xmod(s3), dom).has_value());
}
