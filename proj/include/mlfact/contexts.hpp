#pragma once

#include "mlfact/abgroup.hpp"
#include "mlfact/fingroup.hpp"
#include "mlfact/finring.hpp"
#include "mlfact/xmod.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfact::ctx {

/// Object or morphism passed to a torsion context (owned by whichever
/// concrete category the context wraps).
struct Obj {
  std::shared_ptr<const void> ptr;
};
struct Mor {
  std::shared_ptr<const void> ptr;
};

class context_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Short exact sequence 0 → T(A) → A → I(A) → 0 attached to an object.
struct RadicalData {
  Obj torsion;     // T(A)
  Mor counit;      // t_A: T(A) → A
  Obj reflection;  // I(A)
  Mor unit;        // η_A: A → I(A), a normal epimorphism
};

struct KernelData {
  Obj object;
  Mor embedding;
};
struct CokernelData {
  Obj object;
  Mor projection;
};
struct PullbackData {
  Obj object;
  Mor p1;
  Mor p2;
  std::shared_ptr<const void> extra;  // context-private payload
};

/// A torsion theory on one of the five concrete normal categories, exposed
/// through a uniform interface so the factorisation engine and verifier can
/// stay generic. Objects and morphisms are opaque handles produced by the
/// per-context wrap helpers; handing one context's handle to another is a
/// context_error.
class TorsionContext {
 public:
  virtual ~TorsionContext() = default;

  virtual std::string tag() const = 0;
  virtual bool supports_pullback() const { return true; }

  virtual Obj domain(const Mor& f) const = 0;
  virtual Obj codomain(const Mor& f) const = 0;
  virtual bool obj_equal(const Obj& a, const Obj& b) const = 0;
  virtual bool mor_equal(const Mor& f, const Mor& g) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;
  virtual Mor identity(const Obj& a) const = 0;
  virtual Mor zero(const Obj& a, const Obj& b) const = 0;
  virtual bool is_zero(const Mor& f) const = 0;

  virtual bool is_mono(const Mor& f) const = 0;
  virtual bool is_normal_mono(const Mor& f) const = 0;
  virtual bool is_normal_epi(const Mor& f) const = 0;
  virtual bool is_iso(const Mor& f) const = 0;

  virtual KernelData kernel(const Mor& f) const = 0;
  virtual CokernelData cokernel(const Mor& f) const = 0;

  /// φ with φ∘e = f for a normal epi e, when f kills Ker(e).
  virtual std::optional<Mor> factor_through_epi(const Mor& e,
                                                const Mor& f) const = 0;
  /// φ with m∘φ = f for a mono m, when f lands in the image of m.
  virtual std::optional<Mor> lift_through_mono(const Mor& m,
                                               const Mor& f) const = 0;

  virtual PullbackData pullback(const Mor& f, const Mor& g) const;
  virtual Mor into_pullback(const PullbackData& pb, const Mor& u,
                            const Mor& v) const;

  /// All morphisms a → b, or nullopt when enumeration would exceed the
  /// budget (an upper bound on the number of candidates examined).
  virtual std::optional<std::vector<Mor>> enumerate_homs(
      const Obj& a, const Obj& b, std::size_t budget) const = 0;

  /// Embeddings of every normal subobject of a (throws unsupported_error
  /// when not enumerable, e.g. infinite objects).
  virtual std::vector<Mor> normal_subobject_embeddings(const Obj& a) const = 0;

  virtual RadicalData radical(const Obj& a) const = 0;
  bool is_torsion(const Obj& a) const;       // counit is an isomorphism
  bool is_torsion_free(const Obj& a) const;  // unit is an isomorphism

  virtual std::optional<Mor> find_iso(const Obj& a, const Obj& b) const = 0;

  /// Order of the object as a count of elements; throws unsupported_error
  /// for infinite objects.
  virtual Int object_order(const Obj& a) const = 0;

  virtual std::string describe_object(const Obj& a) const = 0;
  virtual std::string describe_morphism(const Mor& f) const = 0;
};

using ContextPtr = std::shared_ptr<const TorsionContext>;

/// Context from its CLI tag: `ab`, `finab:p=<prime>`, `fingrp`, `finring`,
/// `xmod`.
ContextPtr make_context(const std::string& tag);

struct HomVanishingReport {
  bool pass;               // only the zero morphism y → x exists
  std::size_t homs_found;  // total morphisms enumerated
  std::optional<Mor> counterexample;
};

/// Exhaustively checks hom(y, x) = {0}; throws unsupported_error when the
/// enumeration exceeds the budget (never a silent pass).
HomVanishingReport check_hom_vanishing(const TorsionContext& c, const Obj& y,
                                       const Obj& x,
                                       std::size_t budget = 1000000);

// ---- typed wrap/unwrap helpers --------------------------------------------
// Each context stores the concrete value behind the opaque handle; the
// helpers below are the only way fixtures and tests cross the boundary.

Obj wrap(ab::AbObjPtr a);
Mor wrap(ab::AbHom f);
Obj wrap(grp::GrpObjPtr g);
Mor wrap(grp::GroupHom f);
Obj wrap(ring::RingObjPtr r);
Mor wrap(ring::RingHom f);
Obj wrap(xmod::XModPtr x);
Mor wrap(xmod::XModMorphism f);

const ab::PresentedAbGroup& as_ab(const Obj& o);
const ab::AbHom& as_ab(const Mor& m);
const grp::FiniteGroup& as_grp(const Obj& o);
const grp::GroupHom& as_grp(const Mor& m);
const ring::FiniteCommRing& as_ring(const Obj& o);
const ring::RingHom& as_ring(const Mor& m);
const xmod::CrossedModule& as_xmod(const Obj& o);
const xmod::XModMorphism& as_xmod(const Mor& m);

ab::AbObjPtr ab_ptr(const Obj& o);
grp::GrpObjPtr grp_ptr(const Obj& o);
ring::RingObjPtr ring_ptr(const Obj& o);
xmod::XModPtr xmod_ptr(const Obj& o);

}  // namespace mlfact::ctx
