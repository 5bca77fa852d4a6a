#pragma once

#include "mlfact/fingroup.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace mlfact::xmod {

using grp::FiniteGroup;
using grp::GroupHom;
using grp::GrpObjPtr;
using grp::unsupported_error;
using grp::validation_error;

/// Crossed module of finite groups: a boundary homomorphism α: A → B with a
/// B-action on A by automorphisms, stored as a full |B|×|A| table. The action
/// axioms, equivariance α(ᵇa) = b·α(a)·b⁻¹ and the Peiffer identity
/// ^{α(a)}a₁ = a·a₁·a⁻¹ are checked exhaustively on construction.
class CrossedModule {
 public:
  CrossedModule(GrpObjPtr top, GrpObjPtr base, GroupHom boundary,
                std::vector<std::vector<std::size_t>> action);

  /// Identity boundary G → G with the conjugation action.
  static CrossedModule conjugation(const GrpObjPtr& g);
  /// A normal subgroup N ⊴ G as the inclusion N ↪ G with conjugation.
  static CrossedModule normal_inclusion(const GrpObjPtr& g,
                                        const grp::Subgroup& n);
  /// Zero boundary A → B with the trivial action; A must be abelian.
  static CrossedModule zero_boundary(const GrpObjPtr& a, const GrpObjPtr& b);

  const GrpObjPtr& top() const { return top_; }    // A
  const GrpObjPtr& base() const { return base_; }  // B
  const GroupHom& boundary() const { return boundary_; }
  std::size_t act(std::size_t b, std::size_t a) const { return action_[b][a]; }
  const std::vector<std::vector<std::size_t>>& action() const {
    return action_;
  }

  bool same_data(const CrossedModule& o) const;
  std::string describe() const;

 private:
  GrpObjPtr top_;
  GrpObjPtr base_;
  GroupHom boundary_;
  std::vector<std::vector<std::size_t>> action_;
};

using XModPtr = std::shared_ptr<const CrossedModule>;

/// Morphism of crossed modules: a commuting square (f1 on tops, f0 on bases)
/// that preserves the action.
struct XModMorphism {
  XModPtr domain;
  XModPtr codomain;
  GroupHom f1;  // A → A′
  GroupHom f0;  // B → B′
};

/// A subobject of a crossed module: element sets of the top and base parts.
struct SubXMod {
  XModPtr ambient;
  std::vector<std::size_t> top_elements;   // sorted, subgroup of A
  std::vector<std::size_t> base_elements;  // sorted, subgroup of B
};

struct XModEmbedding {
  XModPtr object;
  XModMorphism inclusion;
};

struct XModQuotient {
  XModPtr quotient;
  XModMorphism projection;
};

/// The reflection to normal monomorphisms: α(A) ↪ B with its unit.
struct XModReflection {
  XModPtr reflected;
  XModMorphism unit;
};

/// The explicit monotone-light factorisation e;m* of a morphism.
struct XModMLFactorisation {
  XModPtr middle;
  XModMorphism e;      // (π: A → A/Ker(α̂), 1_B)
  XModMorphism mstar;  // (φ1, f0)
};

bool is_xmod_morphism(const XModMorphism& m);
void validate(const XModMorphism& m);
bool morphism_equal(const XModMorphism& a, const XModMorphism& b);
XModMorphism compose(const XModMorphism& g, const XModMorphism& f);
XModMorphism identity_morphism(const XModPtr& x);
XModMorphism zero_morphism(const XModPtr& a, const XModPtr& b);
bool is_injective(const XModMorphism& m);
bool is_surjective(const XModMorphism& m);
bool is_iso_morphism(const XModMorphism& m);

/// Is (top_elements, base_elements) a normal subcrossed module (kernel of some
/// morphism): both parts normal, boundary- and action-stable, with Peiffer
/// commutators of base elements landing in the top part?
bool is_normal_subxmod(const SubXMod& s);
SubXMod trivial_subxmod(const XModPtr& x);
SubXMod full_subxmod(const XModPtr& x);
/// Smallest normal subcrossed module containing the seeds.
SubXMod normal_subxmod_closure(const XModPtr& x,
                               const std::vector<std::size_t>& top_seed,
                               const std::vector<std::size_t>& base_seed);
std::vector<SubXMod> normal_subxmods(const XModPtr& x);

XModEmbedding subxmod_object(const SubXMod& s);
XModQuotient xmod_quotient(const XModPtr& x, const SubXMod& n);

XModEmbedding xmod_kernel(const XModMorphism& m);
XModQuotient xmod_cokernel(const XModMorphism& m);

XModReflection xmod_reflect(const XModPtr& x);

/// Factor f = m*∘e through A/Ker(α̂) where α̂ is the kernel crossed module's
/// boundary: e = (π, 1_B) has an abelian, trivially-based kernel and m* has a
/// kernel with injective boundary.
XModMLFactorisation xmod_ml_factorise(const XModMorphism& m);

/// All crossed-module morphisms x → y (pairs of group homs, filtered by the
/// square and action conditions).
std::vector<XModMorphism> enumerate_xmod_morphisms(const XModPtr& x,
                                                   const XModPtr& y);

std::optional<XModMorphism> find_xmod_isomorphism(const XModPtr& x,
                                                  const XModPtr& y);

}  // namespace mlfact::xmod
