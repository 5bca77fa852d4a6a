#pragma once

#include "mlfact/intmat.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfact::ab {

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finitely generated abelian group presented as Z^n / column-lattice of the
/// relation matrix. The canonical form (free rank + invariant factors) is
/// computed once from the Smith normal form of the relations.
class PresentedAbGroup {
 public:
  PresentedAbGroup(std::size_t generators, IntMatrix relations);

  static PresentedAbGroup free_group(std::size_t rank);
  static PresentedAbGroup cyclic(const Int& n);  // Z/n, n >= 0 (0 means Z)
  static PresentedAbGroup trivial();
  static PresentedAbGroup direct_sum(const PresentedAbGroup& a,
                                     const PresentedAbGroup& b);

  std::size_t generators() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }
  const SmithResult& relation_snf() const { return snf_; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }

  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  Int order() const;  // throws unsupported_error when infinite

  bool same_presentation(const PresentedAbGroup& o) const;
  bool isomorphic_to(const PresentedAbGroup& o) const;

  /// Does v lie in the relation lattice (i.e. represent 0)?
  bool is_relation(const std::vector<Int>& v) const;

  /// Canonical coordinates of an element: image under U reduced modulo the
  /// diagonal relation matrix S (free coordinates are left as-is).
  std::vector<Int> canonical_coords(const std::vector<Int>& v) const;

  /// All element representatives, one per coset (finite groups only).
  std::vector<std::vector<Int>> elements() const;

  std::string describe() const;

 private:
  std::size_t generators_;
  IntMatrix relations_;
  SmithResult snf_;
  std::size_t free_rank_ = 0;
  std::vector<Int> factors_;
};

using AbObjPtr = std::shared_ptr<const PresentedAbGroup>;

/// Homomorphism between presented groups, given by a
/// (codomain-generators x domain-generators) matrix; equality is modulo the
/// codomain relation lattice.
struct AbHom {
  AbObjPtr domain;
  AbObjPtr codomain;
  IntMatrix matrix;
};

struct SubgroupEmbedding {
  AbObjPtr sub;
  AbObjPtr ambient;
  AbHom inclusion;
};

struct AbCokernel {
  AbObjPtr quotient;
  AbHom projection;
};

struct AbPullback {
  AbObjPtr object;
  AbHom p1;
  AbHom p2;
};

struct AbCanonicalisation {
  AbObjPtr canonical;
  AbHom to_canonical;    // isomorphism A -> C
  AbHom from_canonical;  // inverse isomorphism C -> A
};

bool is_well_defined(const AbHom& f);
void validate(const AbHom& f);  // throws validation_error

bool hom_equal(const AbHom& f, const AbHom& g);
AbHom compose(const AbHom& g, const AbHom& f);  // g after f
AbHom identity_hom(const AbObjPtr& a);
AbHom zero_hom(const AbObjPtr& a, const AbObjPtr& b);
bool is_zero_hom(const AbHom& f);

SubgroupEmbedding kernel(const AbHom& f);
AbCokernel cokernel(const AbHom& f);
/// Regular-image factorisation f = inclusion ∘ onto.
struct AbImage {
  SubgroupEmbedding embedding;
  AbHom onto;  // domain -> image, a normal epimorphism
};
AbImage image(const AbHom& f);

AbPullback pullback(const AbHom& f, const AbHom& g);
/// Mediating morphism X -> P for u: X->A, v: X->B with f∘u = g∘v.
AbHom into_pullback(const AbPullback& pb, const AbHom& u, const AbHom& v);

/// Subgroup of `ambient` generated by the columns of `gens`.
SubgroupEmbedding subgroup_from_generators(const AbObjPtr& ambient,
                                           const IntMatrix& gens);

/// φ with φ∘e = f (e a normal epimorphism); nullopt when f does not kill
/// the kernel of e.
std::optional<AbHom> factor_through_epi(const AbHom& e, const AbHom& f);
/// φ with m∘φ = f (m a monomorphism); nullopt when f does not land in the
/// image of m.
std::optional<AbHom> lift_through_mono(const AbHom& m, const AbHom& f);

bool is_mono(const AbHom& f);
bool is_epi(const AbHom& f);
bool is_iso(const AbHom& f);

/// All homomorphisms A -> B (both finite); throws unsupported_error on
/// infinite input.
std::vector<AbHom> enumerate_homs(const AbObjPtr& a, const AbObjPtr& b);

AbCanonicalisation canonicalise(const AbObjPtr& a);

}  // namespace mlfact::ab
