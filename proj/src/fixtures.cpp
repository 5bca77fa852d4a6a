#include "mlfact/fixtures.hpp"

namespace mlfact::fix {

namespace {

ab::AbObjPtr zn(const Int& n) {
  return std::make_shared<ab::PresentedAbGroup>(ab::PresentedAbGroup::cyclic(n));
}

ab::AbObjPtr absum(const ab::PresentedAbGroup& a,
                   const ab::PresentedAbGroup& b) {
  return std::make_shared<ab::PresentedAbGroup>(
      ab::PresentedAbGroup::direct_sum(a, b));
}

ring::RingObjPtr zr(std::size_t n) {
  return std::make_shared<ring::FiniteCommRing>(ring::FiniteCommRing::zmod(n));
}

xmod::XModPtr conj(const grp::GrpObjPtr& g) {
  return std::make_shared<xmod::CrossedModule>(
      xmod::CrossedModule::conjugation(g));
}

xmod::XModPtr zero_bd(const grp::GrpObjPtr& a, const grp::GrpObjPtr& b) {
  return std::make_shared<xmod::CrossedModule>(
      xmod::CrossedModule::zero_boundary(a, b));
}

}  // namespace

grp::GrpObjPtr cyclic(std::size_t n) {
  return std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::cyclic(n));
}

grp::GrpObjPtr klein4() {
  return std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::direct_product(
      grp::FiniteGroup::cyclic(2), grp::FiniteGroup::cyclic(2)));
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

grp::GrpObjPtr alternating(std::size_t n) {
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t j = 2; j < n; ++j) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = i;
    c[0] = 1;
    c[1] = j;
    c[j] = 0;
    gens.push_back(c);
  }
  return std::make_shared<grp::FiniteGroup>(
      grp::FiniteGroup::from_permutations(n, gens));
}

grp::GrpObjPtr dihedral4() {
  return std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::from_permutations(
      4, {{1, 2, 3, 0}, {1, 0, 3, 2}}));
}

grp::GrpObjPtr quaternion8() {
  // regular representation of Q8 = <i, j> on its 8 elements
  // order the elements 1, -1, i, -i, j, -j, k, -k
  // left multiplication by i and by j as permutations
  std::vector<std::size_t> li{2, 3, 1, 0, 6, 7, 5, 4};
  std::vector<std::size_t> lj{4, 5, 7, 6, 1, 0, 2, 3};
  return std::make_shared<grp::FiniteGroup>(
      grp::FiniteGroup::from_permutations(8, {li, lj}));
}

grp::GrpObjPtr a5_times_z2() {
  return std::make_shared<grp::FiniteGroup>(grp::FiniteGroup::direct_product(
      *alternating(5), grp::FiniteGroup::cyclic(2)));
}

std::vector<NamedObj> fixture_objects(const ctx::TorsionContext& c) {
  const std::string tag = c.tag();
  std::vector<NamedObj> out;
  if (tag == "ab") {
    out.push_back({"0", ctx::wrap(zn(1))});
    out.push_back({"Z", ctx::wrap(std::make_shared<ab::PresentedAbGroup>(
                            ab::PresentedAbGroup::free_group(1)))});
    out.push_back({"Z/2", ctx::wrap(zn(2))});
    out.push_back({"Z/4", ctx::wrap(zn(4))});
    out.push_back({"Z/6", ctx::wrap(zn(6))});
    out.push_back({"Z+Z/2", ctx::wrap(absum(ab::PresentedAbGroup::free_group(1),
                                            ab::PresentedAbGroup::cyclic(2)))});
    out.push_back({"Z/12", ctx::wrap(zn(12))});
  } else if (tag.rfind("finab", 0) == 0) {
    out.push_back({"0", ctx::wrap(zn(1))});
    out.push_back({"Z/2", ctx::wrap(zn(2))});
    out.push_back({"Z/3", ctx::wrap(zn(3))});
    out.push_back({"Z/4", ctx::wrap(zn(4))});
    out.push_back({"Z/6", ctx::wrap(zn(6))});
    out.push_back({"Z/9", ctx::wrap(zn(9))});
    out.push_back({"Z/12", ctx::wrap(zn(12))});
    out.push_back({"Z/2+Z/4", ctx::wrap(absum(ab::PresentedAbGroup::cyclic(2),
                                              ab::PresentedAbGroup::cyclic(4)))});
  } else if (tag == "fingrp") {
    out.push_back({"1", ctx::wrap(cyclic(1))});
    out.push_back({"Z/2", ctx::wrap(cyclic(2))});
    out.push_back({"Z/3", ctx::wrap(cyclic(3))});
    out.push_back({"Z/4", ctx::wrap(cyclic(4))});
    out.push_back({"V4", ctx::wrap(klein4())});
    out.push_back({"S3", ctx::wrap(symmetric(3))});
    out.push_back({"Z/6", ctx::wrap(cyclic(6))});
    out.push_back({"D4", ctx::wrap(dihedral4())});
    out.push_back({"Q8", ctx::wrap(quaternion8())});
    out.push_back({"A4", ctx::wrap(alternating(4))});
    out.push_back({"S4", ctx::wrap(symmetric(4))});
    out.push_back({"A5", ctx::wrap(alternating(5))});
    out.push_back({"A5xZ/2", ctx::wrap(a5_times_z2())});
  } else if (tag == "finring") {
    out.push_back({"0", ctx::wrap(zr(1))});
    out.push_back({"Z/2", ctx::wrap(zr(2))});
    out.push_back({"Z/3", ctx::wrap(zr(3))});
    out.push_back({"Z/4", ctx::wrap(zr(4))});
    out.push_back({"F4", ctx::wrap(std::make_shared<ring::FiniteCommRing>(
                             ring::FiniteCommRing::gf4()))});
    out.push_back({"Z/6", ctx::wrap(zr(6))});
    out.push_back({"Z/8", ctx::wrap(zr(8))});
    out.push_back({"nil4", ctx::wrap(std::make_shared<ring::FiniteCommRing>(
                               ring::FiniteCommRing::zero_multiplication(4)))});
    out.push_back(
        {"Z/2xZ/4", ctx::wrap(std::make_shared<ring::FiniteCommRing>(
                        ring::FiniteCommRing::direct_product(
                            ring::FiniteCommRing::zmod(2),
                            ring::FiniteCommRing::zmod(4))))});
    out.push_back({"Z/12", ctx::wrap(zr(12))});
    out.push_back({"Z/16", ctx::wrap(zr(16))});
  } else if (tag == "xmod") {
    auto one = cyclic(1);
    auto z2 = cyclic(2);
    auto z4 = cyclic(4);
    auto s3 = symmetric(3);
    out.push_back({"1", ctx::wrap(conj(one))});
    out.push_back({"conj(Z/2)", ctx::wrap(conj(z2))});
    out.push_back({"conj(S3)", ctx::wrap(conj(s3))});
    out.push_back({"zero(Z/2,Z/2)", ctx::wrap(zero_bd(z2, z2))});
    out.push_back({"zero(Z/4,Z/2)", ctx::wrap(zero_bd(z4, z2))});
    out.push_back({"zero(Z/2,1)", ctx::wrap(zero_bd(z2, one))});
    out.push_back({"A3<S3", ctx::wrap(std::make_shared<xmod::CrossedModule>(
                                xmod::CrossedModule::normal_inclusion(
                                    s3, grp::derived_series(s3)[1])))});
  } else {
    throw ctx::context_error("no fixture corpus for context " + tag);
  }
  return out;
}

std::vector<ctx::Mor> fixture_morphisms(const ctx::TorsionContext& c,
                                        std::size_t budget) {
  auto objects = fixture_objects(c);
  std::vector<ctx::Mor> out;
  for (const auto& a : objects)
    for (const auto& b : objects) {
      auto homs = c.enumerate_homs(a.obj, b.obj, budget);
      if (!homs) continue;
      for (auto& h : *homs) out.push_back(std::move(h));
    }
  return out;
}

std::vector<NamedObj> torsion_fixtures(const ctx::TorsionContext& c) {
  const std::string tag = c.tag();
  if (tag == "ab")
    return {{"Z/2", ctx::wrap(zn(2))}, {"Z/6", ctx::wrap(zn(6))},
            {"Z/12", ctx::wrap(zn(12))}};
  if (tag.rfind("finab:p=2", 0) == 0)
    return {{"Z/2", ctx::wrap(zn(2))}, {"Z/4", ctx::wrap(zn(4))},
            {"Z/8", ctx::wrap(zn(8))}};
  if (tag.rfind("finab:p=3", 0) == 0)
    return {{"Z/3", ctx::wrap(zn(3))}, {"Z/9", ctx::wrap(zn(9))}};
  if (tag.rfind("finab", 0) == 0)
    return {{"0", ctx::wrap(zn(1))}};
  if (tag == "fingrp") return {{"A5", ctx::wrap(alternating(5))}};
  if (tag == "finring")
    return {{"nil4", ctx::wrap(std::make_shared<ring::FiniteCommRing>(
                         ring::FiniteCommRing::zero_multiplication(4)))},
            {"nil2", ctx::wrap(std::make_shared<ring::FiniteCommRing>(
                         ring::FiniteCommRing::zero_multiplication(2)))}};
  if (tag == "xmod")
    return {{"zero(Z/2,1)", ctx::wrap(zero_bd(cyclic(2), cyclic(1)))},
            {"zero(Z/4,1)", ctx::wrap(zero_bd(cyclic(4), cyclic(1)))}};
  throw ctx::context_error("no torsion fixtures for context " + tag);
}

std::vector<NamedObj> torsion_free_fixtures(const ctx::TorsionContext& c) {
  const std::string tag = c.tag();
  if (tag == "ab")
    return {{"Z", ctx::wrap(std::make_shared<ab::PresentedAbGroup>(
                      ab::PresentedAbGroup::free_group(1)))},
            {"Z^2", ctx::wrap(std::make_shared<ab::PresentedAbGroup>(
                        ab::PresentedAbGroup::free_group(2)))}};
  if (tag.rfind("finab:p=2", 0) == 0)
    return {{"Z/3", ctx::wrap(zn(3))}, {"Z/9", ctx::wrap(zn(9))}};
  if (tag.rfind("finab:p=3", 0) == 0)
    return {{"Z/2", ctx::wrap(zn(2))}, {"Z/4", ctx::wrap(zn(4))}};
  if (tag.rfind("finab", 0) == 0)
    return {{"0", ctx::wrap(zn(1))}};
  if (tag == "fingrp")
    return {{"S4", ctx::wrap(symmetric(4))}, {"S3", ctx::wrap(symmetric(3))}};
  if (tag == "finring")
    return {{"Z/6", ctx::wrap(zr(6))},
            {"F4", ctx::wrap(std::make_shared<ring::FiniteCommRing>(
                       ring::FiniteCommRing::gf4()))}};
  if (tag == "xmod")
    return {{"conj(S3)", ctx::wrap(conj(symmetric(3)))},
            {"conj(Z/2)", ctx::wrap(conj(cyclic(2)))}};
  throw ctx::context_error("no torsion-free fixtures for context " + tag);
}

}  // namespace mlfact::fix
