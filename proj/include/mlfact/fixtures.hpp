#pragma once

#include "mlfact/contexts.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mlfact::fix {

/// Named standard groups used throughout the test corpora.
grp::GrpObjPtr cyclic(std::size_t n);
grp::GrpObjPtr klein4();
grp::GrpObjPtr symmetric(std::size_t n);
grp::GrpObjPtr alternating(std::size_t n);
grp::GrpObjPtr dihedral4();     // D4, order 8
grp::GrpObjPtr quaternion8();   // Q8
grp::GrpObjPtr a5_times_z2();   // order 120

struct NamedObj {
  std::string name;
  ctx::Obj obj;
};

/// The standard object corpus of a context (orders chosen so that every
/// whole-corpus enumeration stays exact and fast).
std::vector<NamedObj> fixture_objects(const ctx::TorsionContext& c);

/// All enumerable morphisms between corpus objects, within a per-pair
/// hom-enumeration budget.
std::vector<ctx::Mor> fixture_morphisms(const ctx::TorsionContext& c,
                                        std::size_t budget = 200000);

/// Declared torsion / torsion-free fixture lists for the torsion-axiom suite.
std::vector<NamedObj> torsion_fixtures(const ctx::TorsionContext& c);
std::vector<NamedObj> torsion_free_fixtures(const ctx::TorsionContext& c);

}  // namespace mlfact::fix
