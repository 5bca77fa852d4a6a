#include "mlfact/contexts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mlfact::ctx {

namespace {

enum class Kind { Ab, Grp, Ring, XMod };

struct ObjCell {
  Kind kind;
  ab::AbObjPtr a;
  grp::GrpObjPtr g;
  ring::RingObjPtr r;
  xmod::XModPtr x;
};

struct MorCell {
  Kind kind;
  std::shared_ptr<const ab::AbHom> a;
  std::shared_ptr<const grp::GroupHom> g;
  std::shared_ptr<const ring::RingHom> r;
  std::shared_ptr<const xmod::XModMorphism> x;
};

const ObjCell& obj_cell(const Obj& o, Kind want) {
  if (!o.ptr) throw context_error("empty object handle");
  const auto& cell = *static_cast<const ObjCell*>(o.ptr.get());
  if (cell.kind != want)
    throw context_error("object does not belong to this context");
  return cell;
}

const MorCell& mor_cell(const Mor& m, Kind want) {
  if (!m.ptr) throw context_error("empty morphism handle");
  const auto& cell = *static_cast<const MorCell*>(m.ptr.get());
  if (cell.kind != want)
    throw context_error("morphism does not belong to this context");
  return cell;
}

Obj make_obj(ObjCell cell) {
  return Obj{std::make_shared<const ObjCell>(std::move(cell))};
}
Mor make_mor(MorCell cell) {
  return Mor{std::make_shared<const MorCell>(std::move(cell))};
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Obj wrap(ab::AbObjPtr a) { return make_obj({Kind::Ab, std::move(a), {}, {}, {}}); }
Mor wrap(ab::AbHom f) {
  return make_mor({Kind::Ab, std::make_shared<const ab::AbHom>(std::move(f)),
                   {}, {}, {}});
}
Obj wrap(grp::GrpObjPtr g) {
  return make_obj({Kind::Grp, {}, std::move(g), {}, {}});
}
Mor wrap(grp::GroupHom f) {
  return make_mor({Kind::Grp, {},
                   std::make_shared<const grp::GroupHom>(std::move(f)), {}, {}});
}
Obj wrap(ring::RingObjPtr r) {
  return make_obj({Kind::Ring, {}, {}, std::move(r), {}});
}
Mor wrap(ring::RingHom f) {
  return make_mor({Kind::Ring, {}, {},
                   std::make_shared<const ring::RingHom>(std::move(f)), {}});
}
Obj wrap(xmod::XModPtr x) {
  return make_obj({Kind::XMod, {}, {}, {}, std::move(x)});
}
Mor wrap(xmod::XModMorphism f) {
  return make_mor({Kind::XMod, {}, {}, {},
                   std::make_shared<const xmod::XModMorphism>(std::move(f))});
}

const ab::PresentedAbGroup& as_ab(const Obj& o) {
  return *obj_cell(o, Kind::Ab).a;
}
const ab::AbHom& as_ab(const Mor& m) { return *mor_cell(m, Kind::Ab).a; }
const grp::FiniteGroup& as_grp(const Obj& o) {
  return *obj_cell(o, Kind::Grp).g;
}
const grp::GroupHom& as_grp(const Mor& m) { return *mor_cell(m, Kind::Grp).g; }
const ring::FiniteCommRing& as_ring(const Obj& o) {
  return *obj_cell(o, Kind::Ring).r;
}
const ring::RingHom& as_ring(const Mor& m) {
  return *mor_cell(m, Kind::Ring).r;
}
const xmod::CrossedModule& as_xmod(const Obj& o) {
  return *obj_cell(o, Kind::XMod).x;
}
const xmod::XModMorphism& as_xmod(const Mor& m) {
  return *mor_cell(m, Kind::XMod).x;
}

ab::AbObjPtr ab_ptr(const Obj& o) { return obj_cell(o, Kind::Ab).a; }
grp::GrpObjPtr grp_ptr(const Obj& o) { return obj_cell(o, Kind::Grp).g; }
ring::RingObjPtr ring_ptr(const Obj& o) { return obj_cell(o, Kind::Ring).r; }
xmod::XModPtr xmod_ptr(const Obj& o) { return obj_cell(o, Kind::XMod).x; }

PullbackData TorsionContext::pullback(const Mor&, const Mor&) const {
  throw unsupported_error("pullbacks are not supported in context " + tag());
}
Mor TorsionContext::into_pullback(const PullbackData&, const Mor&,
                                  const Mor&) const {
  throw unsupported_error("pullbacks are not supported in context " + tag());
}

bool TorsionContext::is_torsion(const Obj& a) const {
  return is_iso(radical(a).counit);
}
bool TorsionContext::is_torsion_free(const Obj& a) const {
  return is_iso(radical(a).unit);
}

// ---------------------------------------------------------------------------
// Abelian contexts (classical torsion and the p-primary variant)
// ---------------------------------------------------------------------------

namespace {

/// Generators of the classical torsion subgroup (invariant-factor part),
/// independent of which abelian torsion theory is in play.
IntMatrix classical_torsion_gens(const ab::AbObjPtr& a);

class AbContextBase : public TorsionContext {
 public:
  Obj domain(const Mor& f) const override { return wrap(as_ab(f).domain); }
  Obj codomain(const Mor& f) const override { return wrap(as_ab(f).codomain); }
  bool obj_equal(const Obj& a, const Obj& b) const override {
    return as_ab(a).same_presentation(as_ab(b));
  }
  bool mor_equal(const Mor& f, const Mor& g) const override {
    return ab::hom_equal(as_ab(f), as_ab(g));
  }
  Mor compose(const Mor& g, const Mor& f) const override {
    return wrap(ab::compose(as_ab(g), as_ab(f)));
  }
  Mor identity(const Obj& a) const override {
    return wrap(ab::identity_hom(ab_ptr(a)));
  }
  Mor zero(const Obj& a, const Obj& b) const override {
    return wrap(ab::zero_hom(ab_ptr(a), ab_ptr(b)));
  }
  bool is_zero(const Mor& f) const override { return ab::is_zero_hom(as_ab(f)); }

  bool is_mono(const Mor& f) const override { return ab::is_mono(as_ab(f)); }
  bool is_normal_mono(const Mor& f) const override {
    return ab::is_mono(as_ab(f));  // every mono in Ab is normal
  }
  bool is_normal_epi(const Mor& f) const override {
    return ab::is_epi(as_ab(f));
  }
  bool is_iso(const Mor& f) const override { return ab::is_iso(as_ab(f)); }

  KernelData kernel(const Mor& f) const override {
    auto k = ab::kernel(as_ab(f));
    return KernelData{wrap(k.sub), wrap(k.inclusion)};
  }
  CokernelData cokernel(const Mor& f) const override {
    auto c = ab::cokernel(as_ab(f));
    return CokernelData{wrap(c.quotient), wrap(c.projection)};
  }

  std::optional<Mor> factor_through_epi(const Mor& e,
                                        const Mor& f) const override {
    auto r = ab::factor_through_epi(as_ab(e), as_ab(f));
    if (!r) return std::nullopt;
    return wrap(std::move(*r));
  }
  std::optional<Mor> lift_through_mono(const Mor& m,
                                       const Mor& f) const override {
    auto r = ab::lift_through_mono(as_ab(m), as_ab(f));
    if (!r) return std::nullopt;
    return wrap(std::move(*r));
  }

  PullbackData pullback(const Mor& f, const Mor& g) const override {
    auto pb = std::make_shared<const ab::AbPullback>(
        ab::pullback(as_ab(f), as_ab(g)));
    return PullbackData{wrap(pb->object), wrap(pb->p1), wrap(pb->p2), pb};
  }
  Mor into_pullback(const PullbackData& pb, const Mor& u,
                    const Mor& v) const override {
    const auto& raw = *static_cast<const ab::AbPullback*>(pb.extra.get());
    return wrap(ab::into_pullback(raw, as_ab(u), as_ab(v)));
  }

  std::optional<std::vector<Mor>> enumerate_homs(
      const Obj& a, const Obj& b, std::size_t budget) const override {
    const auto& A = as_ab(a);
    const auto& B = as_ab(b);
    if (!A.is_finite()) {
      if (B.is_trivial()) return std::vector<Mor>{zero(a, b)};
      return std::nullopt;  // hom-set generally infinite or unenumerable
    }
    if (!B.is_finite()) {
      // a finite domain maps into the torsion subgroup of the codomain
      auto tb = ab::subgroup_from_generators(ab_ptr(b),
                                             classical_torsion_gens(ab_ptr(b)));
      auto inner = enumerate_homs(a, wrap(tb.sub), budget);
      if (!inner) return std::nullopt;
      std::vector<Mor> out;
      for (const auto& h : *inner)
        out.push_back(wrap(ab::compose(tb.inclusion, as_ab(h))));
      return out;
    }
    Int bound = 1;
    for (std::size_t i = 0; i < A.generators() && bound <= budget; ++i)
      bound *= B.order();
    if (bound > budget) return std::nullopt;
    std::vector<Mor> out;
    for (auto& h : ab::enumerate_homs(ab_ptr(a), ab_ptr(b)))
      out.push_back(wrap(std::move(h)));
    return out;
  }

  std::vector<Mor> normal_subobject_embeddings(const Obj& a) const override {
    const auto& A = as_ab(a);
    if (!A.is_finite())
      throw unsupported_error(
          "cannot enumerate subobjects of an infinite group");
    // work with the underlying finite group via its addition table
    auto elems = A.elements();
    std::vector<std::vector<Int>> canon;
    canon.reserve(elems.size());
    std::map<std::vector<Int>, std::size_t> index;
    // put zero first so the table is a valid FiniteGroup
    std::vector<Int> zero_coords =
        A.canonical_coords(std::vector<Int>(A.generators(), 0));
    std::vector<std::vector<Int>> reordered;
    for (auto& e : elems) {
      auto c = A.canonical_coords(e);
      if (c == zero_coords)
        reordered.insert(reordered.begin(), e);
      else
        reordered.push_back(e);
    }
    for (std::size_t i = 0; i < reordered.size(); ++i)
      index[A.canonical_coords(reordered[i])] = i;
    const std::size_t n = reordered.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> sum(A.generators());
        for (std::size_t k = 0; k < A.generators(); ++k)
          sum[k] = reordered[i][k] + reordered[j][k];
        table[i][j] = index.at(A.canonical_coords(sum));
      }
    auto shadow = std::make_shared<grp::FiniteGroup>(std::move(table));
    std::vector<Mor> out;
    for (const auto& sg : grp::all_subgroups(shadow)) {
      IntMatrix gens(A.generators(), sg.elements.size());
      for (std::size_t c = 0; c < sg.elements.size(); ++c)
        for (std::size_t rix = 0; rix < A.generators(); ++rix)
          gens.at(rix, c) = reordered[sg.elements[c]][rix];
      out.push_back(wrap(ab::subgroup_from_generators(ab_ptr(a), gens).inclusion));
    }
    return out;
  }

  RadicalData radical(const Obj& a) const override {
    auto sub = ab::subgroup_from_generators(ab_ptr(a),
                                            torsion_generators(ab_ptr(a)));
    auto coker = ab::cokernel(sub.inclusion);
    return RadicalData{wrap(sub.sub), wrap(sub.inclusion),
                       wrap(coker.quotient), wrap(coker.projection)};
  }

  std::optional<Mor> find_iso(const Obj& a, const Obj& b) const override {
    const auto& A = as_ab(a);
    const auto& B = as_ab(b);
    if (!A.isomorphic_to(B)) return std::nullopt;
    auto ca = ab::canonicalise(ab_ptr(a));
    auto cb = ab::canonicalise(ab_ptr(b));
    if (!ca.canonical->same_presentation(*cb.canonical)) return std::nullopt;
    // route through the shared canonical form
    ab::AbHom from{ca.canonical, cb.from_canonical.codomain,
                   cb.from_canonical.matrix};
    return wrap(ab::compose(from, ca.to_canonical));
  }

  Int object_order(const Obj& a) const override {
    const auto& A = as_ab(a);
    if (!A.is_finite())
      throw unsupported_error("object is infinite: " + A.describe());
    return A.order();
  }

  std::string describe_object(const Obj& a) const override {
    return as_ab(a).describe();
  }
  std::string describe_morphism(const Mor& f) const override {
    const auto& h = as_ab(f);
    return "hom " + h.domain->describe() + " -> " + h.codomain->describe();
  }

 protected:
  /// Columns generating the torsion part T(A) for this theory.
  virtual IntMatrix torsion_generators(const ab::AbObjPtr& a) const = 0;

 public:
  /// Additive order of canonical generator j (the object must make it
  /// finite); helper for the concrete radicals.
  static Int generator_order(const ab::PresentedAbGroup& c, std::size_t j) {
    Int n = 1;
    for (const auto& d : c.invariant_factors()) n *= d;
    // smallest divisor k of n with k·e_j a relation
    for (Int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      std::vector<Int> v(c.generators(), 0);
      v[j] = k;
      if (c.is_relation(v)) return k;
    }
    return 0;  // infinite order (free generator)
  }
};

IntMatrix classical_torsion_gens(const ab::AbObjPtr& a) {
  auto can = ab::canonicalise(a);
  std::vector<std::size_t> torsion_cols;
  for (std::size_t j = 0; j < can.canonical->generators(); ++j)
    if (AbContextBase::generator_order(*can.canonical, j) != 0)
      torsion_cols.push_back(j);
  IntMatrix gens(a->generators(), torsion_cols.size());
  for (std::size_t c = 0; c < torsion_cols.size(); ++c)
    for (std::size_t r = 0; r < a->generators(); ++r)
      gens.at(r, c) = can.from_canonical.matrix.at(r, torsion_cols[c]);
  return gens;
}

class AbClassicalContext final : public AbContextBase {
 public:
  std::string tag() const override { return "ab"; }

 protected:
  IntMatrix torsion_generators(const ab::AbObjPtr& a) const override {
    return classical_torsion_gens(a);
  }
};

class FinAbPrimaryContext final : public AbContextBase {
 public:
  explicit FinAbPrimaryContext(std::size_t p) : p_(p) {}
  std::string tag() const override {
    return "finab:p=" + std::to_string(p_);
  }

 protected:
  IntMatrix torsion_generators(const ab::AbObjPtr& a) const override {
    if (!a->is_finite())
      throw context_error("infinite group passed to context " + tag());
    auto can = ab::canonicalise(a);
    // the p-primary part is generated by (d_j / p^{v_p(d_j)})·g_j
    std::vector<std::pair<std::size_t, Int>> cols;  // (canonical col, scale)
    for (std::size_t j = 0; j < can.canonical->generators(); ++j) {
      Int d = generator_order(*can.canonical, j);
      Int m = d;
      while (m % p_ == 0) m /= p_;
      if (m != d) cols.emplace_back(j, m);
    }
    IntMatrix gens(a->generators(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < a->generators(); ++r)
        gens.at(r, c) = can.from_canonical.matrix.at(r, cols[c].first) *
                        cols[c].second;
    return gens;
  }

 private:
  std::size_t p_;
};

// ---------------------------------------------------------------------------
// Finite groups with the (perfect, solvable) torsion theory
// ---------------------------------------------------------------------------

class FinGrpContext final : public TorsionContext {
 public:
  std::string tag() const override { return "fingrp"; }

  Obj domain(const Mor& f) const override { return wrap(as_grp(f).domain); }
  Obj codomain(const Mor& f) const override { return wrap(as_grp(f).codomain); }
  bool obj_equal(const Obj& a, const Obj& b) const override {
    return as_grp(a).same_table(as_grp(b));
  }
  bool mor_equal(const Mor& f, const Mor& g) const override {
    return grp::hom_equal(as_grp(f), as_grp(g));
  }
  Mor compose(const Mor& g, const Mor& f) const override {
    return wrap(grp::compose(as_grp(g), as_grp(f)));
  }
  Mor identity(const Obj& a) const override {
    return wrap(grp::identity_hom(grp_ptr(a)));
  }
  Mor zero(const Obj& a, const Obj& b) const override {
    return wrap(grp::trivial_hom(grp_ptr(a), grp_ptr(b)));
  }
  bool is_zero(const Mor& f) const override {
    return grp::is_trivial_hom(as_grp(f));
  }

  bool is_mono(const Mor& f) const override {
    return grp::is_injective(as_grp(f));
  }
  bool is_normal_mono(const Mor& f) const override {
    const auto& h = as_grp(f);
    if (!grp::is_injective(h)) return false;
    return grp::is_normal(grp::image_subgroup(h));
  }
  bool is_normal_epi(const Mor& f) const override {
    return grp::is_surjective(as_grp(f));
  }
  bool is_iso(const Mor& f) const override {
    return grp::is_iso_hom(as_grp(f));
  }

  KernelData kernel(const Mor& f) const override {
    auto k = grp::subgroup_object(grp::kernel_subgroup(as_grp(f)));
    return KernelData{wrap(k.group), wrap(k.inclusion)};
  }
  CokernelData cokernel(const Mor& f) const override {
    auto c = grp::cokernel(as_grp(f));
    return CokernelData{wrap(c.quotient), wrap(c.projection)};
  }

  std::optional<Mor> factor_through_epi(const Mor& e,
                                        const Mor& f) const override {
    const auto& he = as_grp(e);
    const auto& hf = as_grp(f);
    if (!he.domain->same_table(*hf.domain))
      throw context_error("factor_through_epi: domains differ");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(he.codomain->order(), unset);
    for (std::size_t x = 0; x < he.map.size(); ++x) {
      std::size_t& slot = map[he.map[x]];
      if (slot == unset)
        slot = hf.map[x];
      else if (slot != hf.map[x])
        return std::nullopt;
    }
    for (std::size_t v : map)
      if (v == unset) return std::nullopt;  // e not surjective
    grp::GroupHom out{he.codomain, hf.codomain, std::move(map)};
    if (!grp::is_hom(out)) return std::nullopt;
    return wrap(std::move(out));
  }

  std::optional<Mor> lift_through_mono(const Mor& m,
                                       const Mor& f) const override {
    const auto& hm = as_grp(m);
    const auto& hf = as_grp(f);
    if (!hm.codomain->same_table(*hf.codomain))
      throw context_error("lift_through_mono: codomains differ");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pre(hm.codomain->order(), unset);
    for (std::size_t x = 0; x < hm.map.size(); ++x) {
      if (pre[hm.map[x]] != unset) return std::nullopt;  // m not injective
      pre[hm.map[x]] = x;
    }
    std::vector<std::size_t> map(hf.map.size());
    for (std::size_t x = 0; x < hf.map.size(); ++x) {
      if (pre[hf.map[x]] == unset) return std::nullopt;
      map[x] = pre[hf.map[x]];
    }
    grp::GroupHom out{hf.domain, hm.domain, std::move(map)};
    if (!grp::is_hom(out)) return std::nullopt;
    return wrap(std::move(out));
  }

  PullbackData pullback(const Mor& f, const Mor& g) const override {
    auto pb = std::make_shared<const grp::GrpPullback>(
        grp::pullback(as_grp(f), as_grp(g)));
    return PullbackData{wrap(pb->object), wrap(pb->p1), wrap(pb->p2), pb};
  }
  Mor into_pullback(const PullbackData& pb, const Mor& u,
                    const Mor& v) const override {
    const auto& raw = *static_cast<const grp::GrpPullback*>(pb.extra.get());
    return wrap(grp::into_pullback(raw, as_grp(u), as_grp(v)));
  }

  std::optional<std::vector<Mor>> enumerate_homs(
      const Obj& a, const Obj& b, std::size_t budget) const override {
    auto gens = grp::generating_set(grp_ptr(a));
    Int bound = 1;
    for (std::size_t i = 0; i < gens.size() && bound <= budget; ++i)
      bound *= as_grp(b).order();
    if (bound > budget) return std::nullopt;
    std::vector<Mor> out;
    for (auto& h : grp::enumerate_homs(grp_ptr(a), grp_ptr(b)))
      out.push_back(wrap(std::move(h)));
    return out;
  }

  std::vector<Mor> normal_subobject_embeddings(const Obj& a) const override {
    std::vector<Mor> out;
    for (const auto& n : grp::normal_subgroups(grp_ptr(a)))
      out.push_back(wrap(grp::subgroup_object(n).inclusion));
    return out;
  }

  RadicalData radical(const Obj& a) const override {
    auto series = grp::derived_series(grp_ptr(a));
    const auto& perfect = series.back();
    auto sub = grp::subgroup_object(perfect);
    auto q = grp::quotient(grp_ptr(a), perfect);
    return RadicalData{wrap(sub.group), wrap(sub.inclusion), wrap(q.quotient),
                       wrap(q.projection)};
  }

  std::optional<Mor> find_iso(const Obj& a, const Obj& b) const override {
    auto iso = grp::find_isomorphism(grp_ptr(a), grp_ptr(b));
    if (!iso) return std::nullopt;
    return wrap(std::move(*iso));
  }

  Int object_order(const Obj& a) const override { return as_grp(a).order(); }

  std::string describe_object(const Obj& a) const override {
    return as_grp(a).describe();
  }
  std::string describe_morphism(const Mor& f) const override {
    const auto& h = as_grp(f);
    return "hom " + h.domain->describe() + " -> " + h.codomain->describe();
  }
};

// ---------------------------------------------------------------------------
// Finite commutative rings with the (nil, reduced) torsion theory
// ---------------------------------------------------------------------------

class FinRingContext final : public TorsionContext {
 public:
  std::string tag() const override { return "finring"; }

  Obj domain(const Mor& f) const override { return wrap(as_ring(f).domain); }
  Obj codomain(const Mor& f) const override {
    return wrap(as_ring(f).codomain);
  }
  bool obj_equal(const Obj& a, const Obj& b) const override {
    return as_ring(a).same_tables(as_ring(b));
  }
  bool mor_equal(const Mor& f, const Mor& g) const override {
    return ring::hom_equal(as_ring(f), as_ring(g));
  }
  Mor compose(const Mor& g, const Mor& f) const override {
    return wrap(ring::compose(as_ring(g), as_ring(f)));
  }
  Mor identity(const Obj& a) const override {
    return wrap(ring::identity_hom(ring_ptr(a)));
  }
  Mor zero(const Obj& a, const Obj& b) const override {
    return wrap(ring::zero_hom(ring_ptr(a), ring_ptr(b)));
  }
  bool is_zero(const Mor& f) const override {
    return ring::is_zero_hom(as_ring(f));
  }

  bool is_mono(const Mor& f) const override {
    return ring::is_injective(as_ring(f));
  }
  bool is_normal_mono(const Mor& f) const override {
    const auto& h = as_ring(f);
    if (!ring::is_injective(h)) return false;
    return ring::is_ideal(ring::Ideal{h.codomain, ring::image_elements(h)});
  }
  bool is_normal_epi(const Mor& f) const override {
    return ring::is_surjective(as_ring(f));
  }
  bool is_iso(const Mor& f) const override {
    return ring::is_iso_hom(as_ring(f));
  }

  KernelData kernel(const Mor& f) const override {
    auto k =
        ring::subring_object(as_ring(f).domain, ring::kernel_ideal(as_ring(f)).elements);
    return KernelData{wrap(k.ring), wrap(k.inclusion)};
  }
  CokernelData cokernel(const Mor& f) const override {
    auto c = ring::cokernel(as_ring(f));
    return CokernelData{wrap(c.quotient), wrap(c.projection)};
  }

  std::optional<Mor> factor_through_epi(const Mor& e,
                                        const Mor& f) const override {
    const auto& he = as_ring(e);
    const auto& hf = as_ring(f);
    if (!he.domain->same_tables(*hf.domain))
      throw context_error("factor_through_epi: domains differ");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(he.codomain->order(), unset);
    for (std::size_t x = 0; x < he.map.size(); ++x) {
      std::size_t& slot = map[he.map[x]];
      if (slot == unset)
        slot = hf.map[x];
      else if (slot != hf.map[x])
        return std::nullopt;
    }
    for (std::size_t v : map)
      if (v == unset) return std::nullopt;
    ring::RingHom out{he.codomain, hf.codomain, std::move(map)};
    if (!ring::is_ring_hom(out)) return std::nullopt;
    return wrap(std::move(out));
  }

  std::optional<Mor> lift_through_mono(const Mor& m,
                                       const Mor& f) const override {
    const auto& hm = as_ring(m);
    const auto& hf = as_ring(f);
    if (!hm.codomain->same_tables(*hf.codomain))
      throw context_error("lift_through_mono: codomains differ");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pre(hm.codomain->order(), unset);
    for (std::size_t x = 0; x < hm.map.size(); ++x) {
      if (pre[hm.map[x]] != unset) return std::nullopt;
      pre[hm.map[x]] = x;
    }
    std::vector<std::size_t> map(hf.map.size());
    for (std::size_t x = 0; x < hf.map.size(); ++x) {
      if (pre[hf.map[x]] == unset) return std::nullopt;
      map[x] = pre[hf.map[x]];
    }
    ring::RingHom out{hf.domain, hm.domain, std::move(map)};
    if (!ring::is_ring_hom(out)) return std::nullopt;
    return wrap(std::move(out));
  }

  PullbackData pullback(const Mor& f, const Mor& g) const override {
    auto pb = std::make_shared<const ring::RingPullback>(
        ring::pullback(as_ring(f), as_ring(g)));
    return PullbackData{wrap(pb->object), wrap(pb->p1), wrap(pb->p2), pb};
  }
  Mor into_pullback(const PullbackData& pb, const Mor& u,
                    const Mor& v) const override {
    const auto& raw = *static_cast<const ring::RingPullback*>(pb.extra.get());
    return wrap(ring::into_pullback(raw, as_ring(u), as_ring(v)));
  }

  std::optional<std::vector<Mor>> enumerate_homs(
      const Obj& a, const Obj& b, std::size_t budget) const override {
    // greedy additive generating set size bounds the search
    const auto& A = as_ring(a);
    std::size_t gens = 0;
    std::set<std::size_t> closed{0};
    while (closed.size() < A.order()) {
      std::size_t x = 0;
      while (closed.count(x)) ++x;
      ++gens;
      std::set<std::size_t> next = closed;
      bool grown = true;
      while (grown) {
        grown = false;
        for (std::size_t y : std::set<std::size_t>(next)) {
          std::size_t v = A.add(y, x);
          if (next.insert(v).second) grown = true;
        }
      }
      closed = std::move(next);
    }
    Int bound = 1;
    for (std::size_t i = 0; i < gens && bound <= budget; ++i)
      bound *= as_ring(b).order();
    if (bound > budget) return std::nullopt;
    std::vector<Mor> out;
    for (auto& h : ring::enumerate_ring_homs(ring_ptr(a), ring_ptr(b)))
      out.push_back(wrap(std::move(h)));
    return out;
  }

  std::vector<Mor> normal_subobject_embeddings(const Obj& a) const override {
    std::vector<Mor> out;
    for (const auto& i : ring::all_ideals(ring_ptr(a)))
      out.push_back(wrap(ring::subring_object(ring_ptr(a), i.elements).inclusion));
    return out;
  }

  RadicalData radical(const Obj& a) const override {
    auto nil = ring::nilradical(ring_ptr(a));
    auto sub = ring::subring_object(ring_ptr(a), nil.elements);
    auto q = ring::quotient_ring(ring_ptr(a), nil);
    return RadicalData{wrap(sub.ring), wrap(sub.inclusion), wrap(q.quotient),
                       wrap(q.projection)};
  }

  std::optional<Mor> find_iso(const Obj& a, const Obj& b) const override {
    auto iso = ring::find_isomorphism(ring_ptr(a), ring_ptr(b));
    if (!iso) return std::nullopt;
    return wrap(std::move(*iso));
  }

  Int object_order(const Obj& a) const override { return as_ring(a).order(); }

  std::string describe_object(const Obj& a) const override {
    return as_ring(a).describe();
  }
  std::string describe_morphism(const Mor& f) const override {
    const auto& h = as_ring(f);
    return "hom " + h.domain->describe() + " -> " + h.codomain->describe();
  }
};

// ---------------------------------------------------------------------------
// Crossed modules with the (abelian-objects, normal-monomorphisms) theory
// ---------------------------------------------------------------------------

class XModContext final : public TorsionContext {
 public:
  std::string tag() const override { return "xmod"; }
  bool supports_pullback() const override { return false; }

  Obj domain(const Mor& f) const override { return wrap(as_xmod(f).domain); }
  Obj codomain(const Mor& f) const override {
    return wrap(as_xmod(f).codomain);
  }
  bool obj_equal(const Obj& a, const Obj& b) const override {
    return as_xmod(a).same_data(as_xmod(b));
  }
  bool mor_equal(const Mor& f, const Mor& g) const override {
    return xmod::morphism_equal(as_xmod(f), as_xmod(g));
  }
  Mor compose(const Mor& g, const Mor& f) const override {
    return wrap(xmod::compose(as_xmod(g), as_xmod(f)));
  }
  Mor identity(const Obj& a) const override {
    return wrap(xmod::identity_morphism(xmod_ptr(a)));
  }
  Mor zero(const Obj& a, const Obj& b) const override {
    return wrap(xmod::zero_morphism(xmod_ptr(a), xmod_ptr(b)));
  }
  bool is_zero(const Mor& f) const override {
    const auto& m = as_xmod(f);
    return grp::is_trivial_hom(m.f1) && grp::is_trivial_hom(m.f0);
  }

  bool is_mono(const Mor& f) const override {
    return xmod::is_injective(as_xmod(f));
  }
  bool is_normal_mono(const Mor& f) const override {
    const auto& m = as_xmod(f);
    if (!xmod::is_injective(m)) return false;
    std::vector<std::size_t> t(m.f1.map.begin(), m.f1.map.end());
    std::vector<std::size_t> b(m.f0.map.begin(), m.f0.map.end());
    std::sort(t.begin(), t.end());
    std::sort(b.begin(), b.end());
    return xmod::is_normal_subxmod(
        xmod::SubXMod{m.codomain, std::move(t), std::move(b)});
  }
  bool is_normal_epi(const Mor& f) const override {
    return xmod::is_surjective(as_xmod(f));
  }
  bool is_iso(const Mor& f) const override {
    return xmod::is_iso_morphism(as_xmod(f));
  }

  KernelData kernel(const Mor& f) const override {
    auto k = xmod::xmod_kernel(as_xmod(f));
    return KernelData{wrap(k.object), wrap(k.inclusion)};
  }
  CokernelData cokernel(const Mor& f) const override {
    auto c = xmod::xmod_cokernel(as_xmod(f));
    return CokernelData{wrap(c.quotient), wrap(c.projection)};
  }

  std::optional<Mor> factor_through_epi(const Mor& e,
                                        const Mor& f) const override {
    const auto& me = as_xmod(e);
    const auto& mf = as_xmod(f);
    if (!me.domain->same_data(*mf.domain))
      throw context_error("factor_through_epi: domains differ");
    auto f1 = level_factor(me.f1, mf.f1);
    auto f0 = level_factor(me.f0, mf.f0);
    if (!f1 || !f0) return std::nullopt;
    xmod::XModMorphism out{me.codomain, mf.codomain, std::move(*f1),
                           std::move(*f0)};
    if (!xmod::is_xmod_morphism(out)) return std::nullopt;
    return wrap(std::move(out));
  }

  std::optional<Mor> lift_through_mono(const Mor& m,
                                       const Mor& f) const override {
    const auto& mm = as_xmod(m);
    const auto& mf = as_xmod(f);
    if (!mm.codomain->same_data(*mf.codomain))
      throw context_error("lift_through_mono: codomains differ");
    auto f1 = level_lift(mm.f1, mf.f1);
    auto f0 = level_lift(mm.f0, mf.f0);
    if (!f1 || !f0) return std::nullopt;
    xmod::XModMorphism out{mf.domain, mm.domain, std::move(*f1),
                           std::move(*f0)};
    if (!xmod::is_xmod_morphism(out)) return std::nullopt;
    return wrap(std::move(out));
  }

  std::optional<std::vector<Mor>> enumerate_homs(
      const Obj& a, const Obj& b, std::size_t budget) const override {
    const auto& A = as_xmod(a);
    const auto& B = as_xmod(b);
    Int bound = 1;
    for (std::size_t i = 0;
         i < grp::generating_set(A.top()).size() && bound <= budget; ++i)
      bound *= B.top()->order();
    for (std::size_t i = 0;
         i < grp::generating_set(A.base()).size() && bound <= budget; ++i)
      bound *= B.base()->order();
    if (bound > budget) return std::nullopt;
    std::vector<Mor> out;
    for (auto& h : xmod::enumerate_xmod_morphisms(xmod_ptr(a), xmod_ptr(b)))
      out.push_back(wrap(std::move(h)));
    return out;
  }

  std::vector<Mor> normal_subobject_embeddings(const Obj& a) const override {
    std::vector<Mor> out;
    for (const auto& s : xmod::normal_subxmods(xmod_ptr(a)))
      out.push_back(wrap(xmod::subxmod_object(s).inclusion));
    return out;
  }

  RadicalData radical(const Obj& a) const override {
    const auto& x = as_xmod(a);
    // T(X) = (Ker α → 1), an abelian object; I(X) = (A/Ker α ↪ B)
    std::vector<std::size_t> ker;
    for (std::size_t i = 0; i < x.top()->order(); ++i)
      if (x.boundary().map[i] == 0) ker.push_back(i);
    xmod::SubXMod n{xmod_ptr(a), std::move(ker), {0}};
    auto sub = xmod::subxmod_object(n);
    auto q = xmod::xmod_quotient(xmod_ptr(a), n);
    return RadicalData{wrap(sub.object), wrap(sub.inclusion),
                       wrap(q.quotient), wrap(q.projection)};
  }

  std::optional<Mor> find_iso(const Obj& a, const Obj& b) const override {
    auto iso = xmod::find_xmod_isomorphism(xmod_ptr(a), xmod_ptr(b));
    if (!iso) return std::nullopt;
    return wrap(std::move(*iso));
  }

  Int object_order(const Obj& a) const override {
    const auto& x = as_xmod(a);
    return Int(x.top()->order()) * Int(x.base()->order());
  }

  std::string describe_object(const Obj& a) const override {
    return as_xmod(a).describe();
  }
  std::string describe_morphism(const Mor& f) const override {
    const auto& m = as_xmod(f);
    return "xmod morphism " + m.domain->describe() + " -> " +
           m.codomain->describe();
  }

 private:
  static std::optional<grp::GroupHom> level_factor(const grp::GroupHom& e,
                                                   const grp::GroupHom& f) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(e.codomain->order(), unset);
    for (std::size_t x = 0; x < e.map.size(); ++x) {
      std::size_t& slot = map[e.map[x]];
      if (slot == unset)
        slot = f.map[x];
      else if (slot != f.map[x])
        return std::nullopt;
    }
    for (std::size_t v : map)
      if (v == unset) return std::nullopt;
    grp::GroupHom out{e.codomain, f.codomain, std::move(map)};
    if (!grp::is_hom(out)) return std::nullopt;
    return out;
  }

  static std::optional<grp::GroupHom> level_lift(const grp::GroupHom& m,
                                                 const grp::GroupHom& f) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pre(m.codomain->order(), unset);
    for (std::size_t x = 0; x < m.map.size(); ++x) {
      if (pre[m.map[x]] != unset) return std::nullopt;
      pre[m.map[x]] = x;
    }
    std::vector<std::size_t> map(f.map.size());
    for (std::size_t x = 0; x < f.map.size(); ++x) {
      if (pre[f.map[x]] == unset) return std::nullopt;
      map[x] = pre[f.map[x]];
    }
    grp::GroupHom out{f.domain, m.domain, std::move(map)};
    if (!grp::is_hom(out)) return std::nullopt;
    return out;
  }
};

}  // namespace

ContextPtr make_context(const std::string& tag) {
  if (tag == "ab") return std::make_shared<AbClassicalContext>();
  if (tag == "fingrp") return std::make_shared<FinGrpContext>();
  if (tag == "finring") return std::make_shared<FinRingContext>();
  if (tag == "xmod") return std::make_shared<XModContext>();
  if (tag.rfind("finab:p=", 0) == 0) {
    std::size_t p = 0;
    try {
      p = std::stoul(tag.substr(8));
    } catch (const std::exception&) {
      throw context_error("malformed context tag: " + tag);
    }
    if (!is_prime(p))
      throw context_error("finab parameter must be prime, got " +
                          std::to_string(p));
    return std::make_shared<FinAbPrimaryContext>(p);
  }
  throw context_error("unknown context tag: " + tag);
}

HomVanishingReport check_hom_vanishing(const TorsionContext& c, const Obj& y,
                                       const Obj& x, std::size_t budget) {
  auto homs = c.enumerate_homs(y, x, budget);
  if (!homs)
    throw unsupported_error("hom enumeration exceeds budget in context " +
                            c.tag());
  HomVanishingReport report{true, homs->size(), std::nullopt};
  for (auto& h : *homs)
    if (!c.is_zero(h)) {
      report.pass = false;
      report.counterexample = std::move(h);
      break;
    }
  return report;
}

}  // namespace mlfact::ctx
