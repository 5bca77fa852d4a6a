#include "mlfact/xmod.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mlfact::xmod {

namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<std::size_t> sorted_copy(std::set<std::size_t> s) {
  return std::vector<std::size_t>(s.begin(), s.end());
}

}  // namespace

CrossedModule::CrossedModule(GrpObjPtr top, GrpObjPtr base, GroupHom boundary,
                             std::vector<std::vector<std::size_t>> action)
    : top_(std::move(top)),
      base_(std::move(base)),
      boundary_(std::move(boundary)),
      action_(std::move(action)) {
  if (!boundary_.domain->same_table(*top_) ||
      !boundary_.codomain->same_table(*base_))
    throw validation_error("boundary endpoints do not match the given groups");
  grp::validate(boundary_);
  const std::size_t na = top_->order(), nb = base_->order();
  if (action_.size() != nb)
    throw validation_error("not-an-action: table has wrong number of rows");
  for (const auto& row : action_) {
    if (row.size() != na)
      throw validation_error("not-an-action: table row has wrong length");
    for (std::size_t v : row)
      if (v >= na)
        throw validation_error("not-an-action: table index out of range");
  }
  for (std::size_t a = 0; a < na; ++a)
    if (action_[0][a] != a)
      throw validation_error("not-an-action: identity acts nontrivially");
  for (std::size_t b = 0; b < nb; ++b) {
    std::vector<char> hit(na, 0);
    for (std::size_t a = 0; a < na; ++a) hit[action_[b][a]] = 1;
    for (std::size_t a = 0; a < na; ++a)
      if (!hit[a])
        throw validation_error("not-an-action: element " + std::to_string(b) +
                               " does not act bijectively");
    for (std::size_t a1 = 0; a1 < na; ++a1)
      for (std::size_t a2 = 0; a2 < na; ++a2)
        if (action_[b][top_->mul(a1, a2)] !=
            top_->mul(action_[b][a1], action_[b][a2]))
          throw validation_error(
              "not-an-action: element " + std::to_string(b) +
              " does not act by an automorphism");
  }
  for (std::size_t b1 = 0; b1 < nb; ++b1)
    for (std::size_t b2 = 0; b2 < nb; ++b2)
      for (std::size_t a = 0; a < na; ++a)
        if (action_[base_->mul(b1, b2)][a] != action_[b1][action_[b2][a]])
          throw validation_error(
              "not-an-action: composition fails at (" + std::to_string(b1) +
              ", " + std::to_string(b2) + ")");
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t a = 0; a < na; ++a)
      if (boundary_.map[action_[b][a]] != base_->conj(b, boundary_.map[a]))
        throw validation_error("equivariance-violation at (b=" +
                               std::to_string(b) + ", a=" + std::to_string(a) +
                               ")");
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t a1 = 0; a1 < na; ++a1)
      if (action_[boundary_.map[a]][a1] != top_->conj(a, a1))
        throw validation_error("Peiffer-violation at (a=" + std::to_string(a) +
                               ", a1=" + std::to_string(a1) + ")");
}

CrossedModule CrossedModule::conjugation(const GrpObjPtr& g) {
  std::vector<std::vector<std::size_t>> act(
      g->order(), std::vector<std::size_t>(g->order()));
  for (std::size_t b = 0; b < g->order(); ++b)
    for (std::size_t a = 0; a < g->order(); ++a) act[b][a] = g->conj(b, a);
  return CrossedModule(g, g, grp::identity_hom(g), std::move(act));
}

CrossedModule CrossedModule::normal_inclusion(const GrpObjPtr& g,
                                              const grp::Subgroup& n) {
  if (!grp::is_normal(n))
    throw validation_error("normal_inclusion: subgroup is not normal");
  auto sub = grp::subgroup_object(n);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < sub.elements.size(); ++i)
    local[sub.elements[i]] = i;
  std::vector<std::vector<std::size_t>> act(
      g->order(), std::vector<std::size_t>(sub.elements.size()));
  for (std::size_t b = 0; b < g->order(); ++b)
    for (std::size_t a = 0; a < sub.elements.size(); ++a)
      act[b][a] = local.at(g->conj(b, sub.elements[a]));
  return CrossedModule(sub.group, g, sub.inclusion, std::move(act));
}

CrossedModule CrossedModule::zero_boundary(const GrpObjPtr& a,
                                           const GrpObjPtr& b) {
  if (!a->is_abelian())
    throw validation_error(
        "zero_boundary: top group must be abelian for the Peiffer identity");
  std::vector<std::vector<std::size_t>> act(b->order());
  for (auto& row : act) {
    row.resize(a->order());
    for (std::size_t i = 0; i < a->order(); ++i) row[i] = i;
  }
  return CrossedModule(a, b, grp::trivial_hom(a, b), std::move(act));
}

bool CrossedModule::same_data(const CrossedModule& o) const {
  return top_->same_table(*o.top_) && base_->same_table(*o.base_) &&
         boundary_.map == o.boundary_.map && action_ == o.action_;
}

std::string CrossedModule::describe() const {
  std::ostringstream os;
  os << "crossed module |A|=" << top_->order() << " |B|=" << base_->order();
  return os.str();
}

bool is_xmod_morphism(const XModMorphism& m) {
  const auto& x = *m.domain;
  const auto& y = *m.codomain;
  if (!grp::is_hom(m.f1) || !grp::is_hom(m.f0)) return false;
  if (!m.f1.domain->same_table(*x.top()) ||
      !m.f1.codomain->same_table(*y.top()) ||
      !m.f0.domain->same_table(*x.base()) ||
      !m.f0.codomain->same_table(*y.base()))
    return false;
  for (std::size_t a = 0; a < x.top()->order(); ++a)
    if (y.boundary().map[m.f1.map[a]] != m.f0.map[x.boundary().map[a]])
      return false;
  for (std::size_t b = 0; b < x.base()->order(); ++b)
    for (std::size_t a = 0; a < x.top()->order(); ++a)
      if (m.f1.map[x.act(b, a)] != y.act(m.f0.map[b], m.f1.map[a]))
        return false;
  return true;
}

void validate(const XModMorphism& m) {
  if (!is_xmod_morphism(m))
    throw validation_error("pair is not a crossed-module morphism");
}

bool morphism_equal(const XModMorphism& a, const XModMorphism& b) {
  return a.domain->same_data(*b.domain) && a.codomain->same_data(*b.codomain) &&
         a.f1.map == b.f1.map && a.f0.map == b.f0.map;
}

XModMorphism compose(const XModMorphism& g, const XModMorphism& f) {
  if (!f.codomain->same_data(*g.domain))
    throw validation_error("compose: middle crossed modules differ");
  return XModMorphism{f.domain, g.codomain, grp::compose(g.f1, f.f1),
                      grp::compose(g.f0, f.f0)};
}

XModMorphism identity_morphism(const XModPtr& x) {
  return XModMorphism{x, x, grp::identity_hom(x->top()),
                      grp::identity_hom(x->base())};
}

XModMorphism zero_morphism(const XModPtr& a, const XModPtr& b) {
  return XModMorphism{a, b, grp::trivial_hom(a->top(), b->top()),
                      grp::trivial_hom(a->base(), b->base())};
}

bool is_injective(const XModMorphism& m) {
  return grp::is_injective(m.f1) && grp::is_injective(m.f0);
}

bool is_surjective(const XModMorphism& m) {
  return grp::is_surjective(m.f1) && grp::is_surjective(m.f0);
}

bool is_iso_morphism(const XModMorphism& m) {
  return grp::is_iso_hom(m.f1) && grp::is_iso_hom(m.f0);
}

bool is_normal_subxmod(const SubXMod& s) {
  const auto& x = *s.ambient;
  grp::Subgroup top{x.top(), s.top_elements};
  grp::Subgroup base{x.base(), s.base_elements};
  if (!grp::is_subgroup(top) || !grp::is_normal(top)) return false;
  if (!grp::is_subgroup(base) || !grp::is_normal(base)) return false;
  for (std::size_t a : s.top_elements)
    if (!contains(s.base_elements, x.boundary().map[a])) return false;
  // stability under the full base action (kernels of morphisms have it)
  for (std::size_t b = 0; b < x.base()->order(); ++b)
    for (std::size_t a : s.top_elements)
      if (!contains(s.top_elements, x.act(b, a))) return false;
  // Peiffer commutators of base elements land in the top part
  for (std::size_t n0 : s.base_elements)
    for (std::size_t a = 0; a < x.top()->order(); ++a)
      if (!contains(s.top_elements,
                    x.top()->mul(x.act(n0, a), x.top()->inv(a))))
        return false;
  return true;
}

SubXMod trivial_subxmod(const XModPtr& x) { return SubXMod{x, {0}, {0}}; }

SubXMod full_subxmod(const XModPtr& x) {
  std::vector<std::size_t> ta(x->top()->order()), ba(x->base()->order());
  for (std::size_t i = 0; i < ta.size(); ++i) ta[i] = i;
  for (std::size_t i = 0; i < ba.size(); ++i) ba[i] = i;
  return SubXMod{x, std::move(ta), std::move(ba)};
}

SubXMod normal_subxmod_closure(const XModPtr& x,
                               const std::vector<std::size_t>& top_seed,
                               const std::vector<std::size_t>& base_seed) {
  std::set<std::size_t> t(top_seed.begin(), top_seed.end());
  std::set<std::size_t> b(base_seed.begin(), base_seed.end());
  t.insert(0);
  b.insert(0);
  bool changed = true;
  while (changed) {
    changed = false;
    auto grow_t = [&](std::size_t v) {
      if (t.insert(v).second) changed = true;
    };
    auto grow_b = [&](std::size_t v) {
      if (b.insert(v).second) changed = true;
    };
    std::vector<std::size_t> tv(t.begin(), t.end()), bv(b.begin(), b.end());
    auto tc = grp::normal_closure(x->top(), tv).elements;
    for (std::size_t v : tc) grow_t(v);
    auto bc = grp::normal_closure(x->base(), bv).elements;
    for (std::size_t v : bc) grow_b(v);
    for (std::size_t v : tv) grow_b(x->boundary().map[v]);
    for (std::size_t g = 0; g < x->base()->order(); ++g)
      for (std::size_t v : tv) grow_t(x->act(g, v));
    for (std::size_t n0 : bv)
      for (std::size_t a = 0; a < x->top()->order(); ++a)
        grow_t(x->top()->mul(x->act(n0, a), x->top()->inv(a)));
  }
  return SubXMod{x, sorted_copy(std::move(t)), sorted_copy(std::move(b))};
}

std::vector<SubXMod> normal_subxmods(const XModPtr& x) {
  auto tops = grp::normal_subgroups(x->top());
  auto bases = grp::normal_subgroups(x->base());
  std::vector<SubXMod> out;
  for (const auto& t : tops)
    for (const auto& b : bases) {
      SubXMod s{x, t.elements, b.elements};
      if (is_normal_subxmod(s)) out.push_back(std::move(s));
    }
  return out;
}

XModEmbedding subxmod_object(const SubXMod& s) {
  const auto& x = *s.ambient;
  auto top = grp::subgroup_object(grp::Subgroup{x.top(), s.top_elements});
  auto base = grp::subgroup_object(grp::Subgroup{x.base(), s.base_elements});
  std::map<std::size_t, std::size_t> tlocal;
  for (std::size_t i = 0; i < top.elements.size(); ++i)
    tlocal[top.elements[i]] = i;
  std::map<std::size_t, std::size_t> blocal;
  for (std::size_t i = 0; i < base.elements.size(); ++i)
    blocal[base.elements[i]] = i;
  std::vector<std::size_t> bnd(top.elements.size());
  for (std::size_t i = 0; i < top.elements.size(); ++i) {
    auto it = blocal.find(x.boundary().map[top.elements[i]]);
    if (it == blocal.end())
      throw validation_error("subxmod boundary leaves the base part");
    bnd[i] = it->second;
  }
  std::vector<std::vector<std::size_t>> act(
      base.elements.size(), std::vector<std::size_t>(top.elements.size()));
  for (std::size_t b = 0; b < base.elements.size(); ++b)
    for (std::size_t a = 0; a < top.elements.size(); ++a) {
      auto it = tlocal.find(x.act(base.elements[b], top.elements[a]));
      if (it == tlocal.end())
        throw validation_error("subxmod top part is not action-stable");
      act[b][a] = it->second;
    }
  auto obj = std::make_shared<CrossedModule>(
      top.group, base.group, GroupHom{top.group, base.group, std::move(bnd)},
      std::move(act));
  XModMorphism incl{obj, s.ambient, top.inclusion, base.inclusion};
  validate(incl);
  return XModEmbedding{obj, std::move(incl)};
}

XModQuotient xmod_quotient(const XModPtr& x, const SubXMod& n) {
  if (!is_normal_subxmod(n))
    throw validation_error("xmod_quotient: not a normal subcrossed module");
  auto qa = grp::quotient(x->top(), grp::Subgroup{x->top(), n.top_elements});
  auto qb = grp::quotient(x->base(), grp::Subgroup{x->base(), n.base_elements});
  const std::size_t na = qa.quotient->order(), nb = qb.quotient->order();
  // boundary and action descend elementwise; consistency is re-checked
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> bnd(na, unset);
  for (std::size_t a = 0; a < x->top()->order(); ++a) {
    std::size_t c = qa.projection.map[a];
    std::size_t v = qb.projection.map[x->boundary().map[a]];
    if (bnd[c] == unset)
      bnd[c] = v;
    else if (bnd[c] != v)
      throw validation_error("quotient boundary is not well defined");
  }
  std::vector<std::vector<std::size_t>> act(nb,
                                            std::vector<std::size_t>(na, unset));
  for (std::size_t b = 0; b < x->base()->order(); ++b)
    for (std::size_t a = 0; a < x->top()->order(); ++a) {
      std::size_t& slot = act[qb.projection.map[b]][qa.projection.map[a]];
      std::size_t v = qa.projection.map[x->act(b, a)];
      if (slot == unset)
        slot = v;
      else if (slot != v)
        throw validation_error("quotient action is not well defined");
    }
  auto obj = std::make_shared<CrossedModule>(
      qa.quotient, qb.quotient,
      GroupHom{qa.quotient, qb.quotient, std::move(bnd)}, std::move(act));
  XModMorphism proj{x, obj, qa.projection, qb.projection};
  validate(proj);
  return XModQuotient{obj, std::move(proj)};
}

XModEmbedding xmod_kernel(const XModMorphism& m) {
  validate(m);
  std::vector<std::size_t> t, b;
  for (std::size_t a = 0; a < m.f1.map.size(); ++a)
    if (m.f1.map[a] == 0) t.push_back(a);
  for (std::size_t v = 0; v < m.f0.map.size(); ++v)
    if (m.f0.map[v] == 0) b.push_back(v);
  return subxmod_object(SubXMod{m.domain, std::move(t), std::move(b)});
}

XModQuotient xmod_cokernel(const XModMorphism& m) {
  validate(m);
  std::vector<std::size_t> t(m.f1.map.begin(), m.f1.map.end());
  std::vector<std::size_t> b(m.f0.map.begin(), m.f0.map.end());
  return xmod_quotient(m.codomain,
                       normal_subxmod_closure(m.codomain, t, b));
}

XModReflection xmod_reflect(const XModPtr& x) {
  auto img = grp::image_subgroup(x->boundary());
  auto reflected = std::make_shared<CrossedModule>(
      CrossedModule::normal_inclusion(x->base(), img));
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < img.elements.size(); ++i)
    local[img.elements[i]] = i;
  std::vector<std::size_t> co(x->top()->order());
  for (std::size_t a = 0; a < co.size(); ++a)
    co[a] = local.at(x->boundary().map[a]);
  XModMorphism unit{x, reflected,
                    GroupHom{x->top(), reflected->top(), std::move(co)},
                    grp::identity_hom(x->base())};
  validate(unit);
  return XModReflection{reflected, std::move(unit)};
}

XModMLFactorisation xmod_ml_factorise(const XModMorphism& m) {
  validate(m);
  const auto& x = *m.domain;
  // Ker(α̂): top elements killed by both f1 and the boundary
  std::vector<std::size_t> n1;
  for (std::size_t a = 0; a < x.top()->order(); ++a)
    if (m.f1.map[a] == 0 && x.boundary().map[a] == 0) n1.push_back(a);
  auto qa = grp::quotient(x.top(), grp::Subgroup{x.top(), n1});
  const std::size_t na = qa.quotient->order();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> bnd(na, unset), phi(na, unset);
  for (std::size_t a = 0; a < x.top()->order(); ++a) {
    std::size_t c = qa.projection.map[a];
    if (bnd[c] == unset) {
      bnd[c] = x.boundary().map[a];
      phi[c] = m.f1.map[a];
    } else if (bnd[c] != x.boundary().map[a] || phi[c] != m.f1.map[a]) {
      throw validation_error("ml middle is not well defined");
    }
  }
  std::vector<std::vector<std::size_t>> act(x.base()->order(),
                                            std::vector<std::size_t>(na));
  for (std::size_t b = 0; b < x.base()->order(); ++b)
    for (std::size_t a = 0; a < x.top()->order(); ++a)
      act[b][qa.projection.map[a]] = qa.projection.map[x.act(b, a)];
  auto middle = std::make_shared<CrossedModule>(
      qa.quotient, x.base(),
      GroupHom{qa.quotient, x.base(), std::move(bnd)}, std::move(act));
  XModMorphism e{m.domain, middle, qa.projection,
                 grp::identity_hom(x.base())};
  XModMorphism mstar{middle, m.codomain,
                     GroupHom{qa.quotient, m.codomain->top(), std::move(phi)},
                     m.f0};
  validate(e);
  validate(mstar);
  return XModMLFactorisation{middle, std::move(e), std::move(mstar)};
}

std::vector<XModMorphism> enumerate_xmod_morphisms(const XModPtr& x,
                                                   const XModPtr& y) {
  std::vector<XModMorphism> out;
  for (const auto& f0 : grp::enumerate_homs(x->base(), y->base()))
    for (const auto& f1 : grp::enumerate_homs(x->top(), y->top())) {
      XModMorphism m{x, y, f1, f0};
      if (is_xmod_morphism(m)) out.push_back(std::move(m));
    }
  return out;
}

std::optional<XModMorphism> find_xmod_isomorphism(const XModPtr& x,
                                                  const XModPtr& y) {
  if (x->top()->order() != y->top()->order() ||
      x->base()->order() != y->base()->order())
    return std::nullopt;
  for (const auto& m : enumerate_xmod_morphisms(x, y))
    if (is_iso_morphism(m)) return m;
  return std::nullopt;
}

}  // namespace mlfact::xmod
