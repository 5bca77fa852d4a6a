#pragma once

#include "mlfact/engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlfact::ver {

using ctx::Mor;
using ctx::Obj;
using ctx::TorsionContext;

class cover_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Inconclusive };
const char* status_name(Status s);

struct CheckResult {
  std::string suite;
  std::string name;
  Status status = Status::Pass;
  std::vector<std::pair<std::string, std::string>> details;
};

/// Flat check list with the fixed one-line-per-check text rendering.
struct VerificationReport {
  std::vector<CheckResult> checks;

  CheckResult& add(std::string suite, std::string name, Status status);
  void merge(const VerificationReport& other);
  std::size_t count(Status s) const;
  bool all_ok() const;  // no FAIL (INCONCLUSIVE allowed)

  /// `<suite>.<check> <PASS|FAIL|INCONCLUSIVE> key=value ...` per line plus
  /// the final `summary pass=<a> fail=<b> inconclusive=<c>` line.
  std::string to_text() const;
};

struct OrthogonalitySquare {
  Mor a;  // top: dom(e) → dom(m)
  Mor b;  // bottom: cod(e) → cod(m)
  std::size_t diagonals_found = 0;
};

struct OrthogonalityReport {
  Status status = Status::Inconclusive;
  std::size_t squares_examined = 0;
  std::size_t homs_top = 0;     // |Hom(dom e, dom m)|
  std::size_t homs_bottom = 0;  // |Hom(cod e, cod m)|
  std::optional<OrthogonalitySquare> counterexample;
};

/// Exhaustive e↓m: every commutative square (a, b) must admit exactly one
/// diagonal d with d∘e = a and m∘d = b. Budget-limited enumerations yield
/// Inconclusive, never Pass.
OrthogonalityReport check_orthogonality(const TorsionContext& c, const Mor& e,
                                        const Mor& m,
                                        std::size_t budget = 200000);

/// Runs ml_factorise over every enumerable fixture morphism and checks the
/// (Ē, M̄) factorisation-system properties: totality, class membership,
/// orthogonality of sampled Ē×M̄ pairs, and pullback stability.
VerificationReport check_factorisation_system(const TorsionContext& c,
                                              const std::vector<Obj>& fixtures,
                                              std::size_t sample_size = 6,
                                              std::size_t budget = 200000,
                                              std::uint64_t seed = 0);

/// Condition (N): for every normal subobject K of a, the composite
/// T(K) → K → a is a normal monomorphism.
VerificationReport check_condition_N(const TorsionContext& c, const Obj& a);

/// Torsion-theory axioms over fixture lists: hom-vanishing for every
/// torsion×torsion-free pair, short-exactness of every radical sequence,
/// and extension closure over subobject-induced sequences.
VerificationReport check_torsion_theory(const TorsionContext& c,
                                        const std::vector<Obj>& torsion_fixtures,
                                        const std::vector<Obj>& free_fixtures,
                                        std::size_t budget = 200000);

struct CoverSpec {
  Mor p;  // candidate effective descent morphism E → B, E torsion-free
};

/// Certifies f ∈ M* relative to the supplied cover: pulls f back along p,
/// checks p*(f) ∈ M and the kernel isomorphism Ker(p*(f)) ≅ Ker(f).
VerificationReport check_cover(const TorsionContext& c, const CoverSpec& cover,
                               const Mor& f);

}  // namespace mlfact::ver
