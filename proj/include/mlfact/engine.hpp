#pragma once

#include "mlfact/contexts.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mlfact::eng {

using ctx::ContextPtr;
using ctx::Mor;
using ctx::Obj;
using ctx::TorsionContext;

class engine_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Condition (N) failure: the torsion part of a kernel is not normal in the
/// ambient object.
class condition_n_error : public engine_error {
 public:
  using engine_error::engine_error;
};

/// Monotone-light factorisation f = m∘q through A/T(Ker f).
struct MLFactorisation {
  Obj middle;
  Mor q;  // A → middle: normal epi with torsion kernel (Ē)
  Mor m;  // middle → B: kernel torsion-free (M̄)
  /// Isomorphism I(Ker f) → Ker(m) witnessing the kernel-of-m law.
  Mor kernel_witness;
};

/// Reflective factorisation f = m∘e through P = I(A) ×_{I(B)} B.
struct ReflectiveFactorisation {
  Obj middle;
  Mor e;  // A → P, inverted by the reflection (E)
  Mor m;  // P → B, pullback of a morphism between torsion-free objects (M)
};

/// Mutually inverse pair A/L ⇄ (A/K)/(L/K).
struct ThirdIsoWitness {
  Obj lhs;  // A/L
  Obj rhs;  // (A/K)/(L/K)
  Mor forward;
  Mor backward;
};

enum class Flag { True, False, Untested };

struct ClassifyOptions {
  std::size_t pullback_samples = 8;
  std::uint64_t seed = 0;
  std::size_t hom_budget = 200000;
  std::optional<Mor> cover;  // candidate effective descent morphism onto B
};

struct ClassificationRecord {
  Flag in_E = Flag::Untested;      // I(f) is an isomorphism (computed)
  Flag in_Ebar = Flag::Untested;   // normal epi with torsion kernel
  Flag in_Mbar = Flag::Untested;   // kernel torsion-free
  Flag in_M = Flag::Untested;      // e-part of the reflective factorisation iso
  Flag in_Eprime_sampled = Flag::Untested;  // every sampled pullback in E
  Flag in_Mstar_assumed = Flag::Untested;   // mirrors in_Mbar (theorem-conditional)
  std::size_t eprime_samples_run = 0;
  bool mstar_certified = false;  // a supplied cover verified p*(f) ∈ M
};

/// The morphism I(f) between reflections, via the unit squares.
Mor induced_on_reflections(const TorsionContext& c, const Mor& f);

/// Monotone-light factorisation; routes through the explicit crossed-module
/// construction in the xmod context and the generic quotient construction
/// everywhere else.
MLFactorisation ml_factorise(const TorsionContext& c, const Mor& f);
/// Always the generic quotient construction (for path-agreement checks).
MLFactorisation ml_factorise_generic(const TorsionContext& c, const Mor& f);

ReflectiveFactorisation reflective_factorise(const TorsionContext& c,
                                             const Mor& f);

/// k: K → A and l: L → A normal monos with K ⊆ L.
ThirdIsoWitness third_iso(const TorsionContext& c, const Mor& k, const Mor& l);

ClassificationRecord classify(const TorsionContext& c, const Mor& f,
                              const ClassifyOptions& options = {});

const char* flag_name(Flag f);

}  // namespace mlfact::eng
