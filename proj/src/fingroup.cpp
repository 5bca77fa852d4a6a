#include "mlfact/fingroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mlfact::grp {

namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  order_ = table.size();
  if (order_ == 0) throw validation_error("empty multiplication table");
  table_.reserve(order_ * order_);
  for (const auto& row : table) {
    if (row.size() != order_)
      throw validation_error("multiplication table is not square");
    for (std::size_t x : row) {
      if (x >= order_)
        throw validation_error("multiplication table index out of range");
      table_.push_back(x);
    }
  }
  for (std::size_t x = 0; x < order_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x)
      throw validation_error("missing identity: index 0 is not neutral");
  inverse_.assign(order_, order_);
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y)
      if (mul(x, y) == 0 && mul(y, x) == 0) {
        inverse_[x] = y;
        break;
      }
    if (inverse_[x] == order_)
      throw validation_error("missing inverse for element " +
                             std::to_string(x));
  }
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      for (std::size_t z = 0; z < order_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw validation_error("non-associative at (" + std::to_string(x) +
                                 "," + std::to_string(y) + "," +
                                 std::to_string(z) + ")");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw validation_error("cyclic: order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const std::size_t n = a.order(), m = b.order();
  std::vector<std::vector<std::size_t>> t(n * m,
                                          std::vector<std::size_t>(n * m));
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2)
          t[i1 * m + j1][i2 * m + j2] = a.mul(i1, i2) * m + b.mul(j1, j2);
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(
    std::size_t degree, std::vector<std::vector<std::size_t>> gens) {
  std::vector<std::size_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  std::vector<std::vector<std::size_t>> elems{id};
  std::map<std::vector<std::size_t>, std::size_t> index{{id, 0}};
  auto comp = [&](const std::vector<std::size_t>& p,
                  const std::vector<std::size_t>& q) {
    std::vector<std::size_t> r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto x = comp(elems[i], g);
      if (!index.count(x)) {
        index[x] = elems.size();
        elems.push_back(x);
      }
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = index.at(comp(elems[i], elems[j]));
  return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::element_order(std::size_t i) const {
  std::size_t x = i, k = 1;
  while (x != 0) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

bool FiniteGroup::same_table(const FiniteGroup& o) const {
  return order_ == o.order_ && table_ == o.table_;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::string FiniteGroup::describe() const {
  std::ostringstream os;
  os << "group of order " << order_;
  return os.str();
}

bool is_hom(const GroupHom& f) {
  const auto& a = *f.domain;
  const auto& b = *f.codomain;
  if (f.map.size() != a.order()) return false;
  for (std::size_t x : f.map)
    if (x >= b.order()) return false;
  if (f.map[0] != 0) return false;
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (f.map[a.mul(x, y)] != b.mul(f.map[x], f.map[y])) return false;
  return true;
}

void validate(const GroupHom& f) {
  if (!is_hom(f)) throw validation_error("map is not a group homomorphism");
}

bool hom_equal(const GroupHom& f, const GroupHom& g) {
  return f.domain->same_table(*g.domain) &&
         f.codomain->same_table(*g.codomain) && f.map == g.map;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!f.codomain->same_table(*g.domain))
    throw validation_error("compose: middle objects differ");
  std::vector<std::size_t> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return GroupHom{f.domain, g.codomain, std::move(m)};
}

GroupHom identity_hom(const GrpObjPtr& g) {
  std::vector<std::size_t> m(g->order());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return GroupHom{g, g, std::move(m)};
}

GroupHom trivial_hom(const GrpObjPtr& a, const GrpObjPtr& b) {
  return GroupHom{a, b, std::vector<std::size_t>(a->order(), 0)};
}

bool is_trivial_hom(const GroupHom& f) {
  for (std::size_t x : f.map)
    if (x != 0) return false;
  return true;
}

bool is_injective(const GroupHom& f) {
  std::set<std::size_t> seen(f.map.begin(), f.map.end());
  return seen.size() == f.map.size();
}

bool is_surjective(const GroupHom& f) {
  std::set<std::size_t> seen(f.map.begin(), f.map.end());
  return seen.size() == f.codomain->order();
}

bool is_iso_hom(const GroupHom& f) {
  return f.domain->order() == f.codomain->order() && is_injective(f);
}

Subgroup subgroup_closure(const GrpObjPtr& g,
                          const std::vector<std::size_t>& seed) {
  for (std::size_t s : seed)
    if (s >= g->order()) throw validation_error("seed index out of range");
  std::set<std::size_t> elems{0};
  std::vector<std::size_t> queue{0};
  for (std::size_t s : seed)
    if (elems.insert(s).second) queue.push_back(s);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j < queue.size(); ++j) {
      for (std::size_t p : {g->mul(queue[i], queue[j]), g->inv(queue[i])}) {
        if (elems.insert(p).second) queue.push_back(p);
      }
    }
  }
  return Subgroup{g, std::vector<std::size_t>(elems.begin(), elems.end())};
}

Subgroup normal_closure(const GrpObjPtr& g,
                        const std::vector<std::size_t>& seed) {
  Subgroup h = subgroup_closure(g, seed);
  while (true) {
    std::vector<std::size_t> extra;
    for (std::size_t x = 0; x < g->order(); ++x)
      for (std::size_t s : h.elements) {
        std::size_t c = g->conj(x, s);
        if (!contains(h.elements, c)) extra.push_back(c);
      }
    if (extra.empty()) break;
    extra.insert(extra.end(), h.elements.begin(), h.elements.end());
    h = subgroup_closure(g, extra);
  }
  return h;
}

bool is_subgroup(const Subgroup& h) {
  if (h.elements.empty() || !contains(h.elements, 0)) return false;
  for (std::size_t x : h.elements) {
    if (!contains(h.elements, h.ambient->inv(x))) return false;
    for (std::size_t y : h.elements)
      if (!contains(h.elements, h.ambient->mul(x, y))) return false;
  }
  return true;
}

bool is_normal(const Subgroup& h) {
  for (std::size_t g = 0; g < h.ambient->order(); ++g)
    for (std::size_t x : h.elements)
      if (!contains(h.elements, h.ambient->conj(g, x))) return false;
  return true;
}

Subgroup trivial_subgroup(const GrpObjPtr& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const GrpObjPtr& g) {
  std::vector<std::size_t> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup{g, std::move(all)};
}

SubgroupObject subgroup_object(const Subgroup& h) {
  if (!is_subgroup(h)) throw validation_error("index set is not a subgroup");
  const auto& elems = h.elements;  // sorted, so identity 0 is first
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  std::vector<std::vector<std::size_t>> t(
      elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      t[i][j] = local.at(h.ambient->mul(elems[i], elems[j]));
  auto grp = std::make_shared<FiniteGroup>(std::move(t));
  return SubgroupObject{grp, GroupHom{grp, h.ambient, elems}, elems};
}

GrpQuotient quotient(const GrpObjPtr& g, const Subgroup& n) {
  if (!is_subgroup(n)) throw validation_error("quotient: not a subgroup");
  if (!is_normal(n)) throw validation_error("quotient: subgroup not normal");
  const std::size_t ord = g->order();
  std::vector<std::size_t> coset_of(ord, ord);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < ord; ++x) {
    if (coset_of[x] != ord) continue;
    std::size_t c = reps.size();
    reps.push_back(x);
    for (std::size_t h : n.elements) coset_of[g->mul(x, h)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<std::vector<std::size_t>> t(q, std::vector<std::size_t>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      t[i][j] = coset_of[g->mul(reps[i], reps[j])];
  auto quo = std::make_shared<FiniteGroup>(std::move(t));
  return GrpQuotient{quo, GroupHom{g, quo, std::move(coset_of)}};
}

Subgroup commutator_subgroup(const Subgroup& h) {
  std::vector<std::size_t> comms;
  const auto& g = *h.ambient;
  for (std::size_t x : h.elements)
    for (std::size_t y : h.elements)
      comms.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  return subgroup_closure(h.ambient, comms);
}

std::vector<Subgroup> derived_series(const GrpObjPtr& g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  while (true) {
    Subgroup next = commutator_subgroup(series.back());
    if (next.elements.size() == series.back().elements.size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_perfect(const GrpObjPtr& g) { return derived_series(g).size() == 1; }

bool is_solvable(const GrpObjPtr& g) {
  return derived_series(g).back().elements.size() == 1;
}

Subgroup kernel_subgroup(const GroupHom& f) {
  validate(f);
  std::vector<std::size_t> ker;
  for (std::size_t x = 0; x < f.domain->order(); ++x)
    if (f.map[x] == 0) ker.push_back(x);
  return Subgroup{f.domain, std::move(ker)};
}

Subgroup image_subgroup(const GroupHom& f) {
  validate(f);
  std::set<std::size_t> img(f.map.begin(), f.map.end());
  return Subgroup{f.codomain,
                  std::vector<std::size_t>(img.begin(), img.end())};
}

GrpQuotient cokernel(const GroupHom& f) {
  Subgroup img = image_subgroup(f);
  return quotient(f.codomain, normal_closure(f.codomain, img.elements));
}

GrpPullback pullback(const GroupHom& f, const GroupHom& g) {
  validate(f);
  validate(g);
  if (!f.codomain->same_table(*g.codomain))
    throw validation_error("pullback: codomain mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < f.domain->order(); ++a)
    for (std::size_t b = 0; b < g.domain->order(); ++b)
      if (f.map[a] == g.map[b]) {
        index[{a, b}] = pairs.size();
        pairs.emplace_back(a, b);
      }
  // identity pair (0,0) is first since the scan is in order
  const std::size_t n = pairs.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = index.at({f.domain->mul(pairs[i].first, pairs[j].first),
                          g.domain->mul(pairs[i].second, pairs[j].second)});
  auto p = std::make_shared<FiniteGroup>(std::move(t));
  std::vector<std::size_t> m1(n), m2(n);
  for (std::size_t i = 0; i < n; ++i) {
    m1[i] = pairs[i].first;
    m2[i] = pairs[i].second;
  }
  return GrpPullback{p, GroupHom{p, f.domain, std::move(m1)},
                     GroupHom{p, g.domain, std::move(m2)}, std::move(pairs)};
}

GroupHom into_pullback(const GrpPullback& pb, const GroupHom& u,
                       const GroupHom& v) {
  if (!u.domain->same_table(*v.domain))
    throw validation_error("into_pullback: domains differ");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < pb.pairs.size(); ++i) index[pb.pairs[i]] = i;
  std::vector<std::size_t> m(u.domain->order());
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto it = index.find({u.map[x], v.map[x]});
    if (it == index.end())
      throw validation_error("into_pullback: square does not commute");
    m[x] = it->second;
  }
  return GroupHom{u.domain, pb.object, std::move(m)};
}

std::vector<std::size_t> generating_set(const GrpObjPtr& g) {
  std::vector<std::size_t> gens;
  Subgroup h = trivial_subgroup(g);
  for (std::size_t x = 1; x < g->order(); ++x) {
    if (contains(h.elements, x)) continue;
    gens.push_back(x);
    h = subgroup_closure(g, gens);
    if (h.elements.size() == g->order()) break;
  }
  return gens;
}

namespace {

struct BfsWords {
  // discovery order; each non-identity entry has (parent, generator index)
  std::vector<std::size_t> order;
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
};

BfsWords bfs_words(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  BfsWords w;
  std::vector<char> seen(g.order(), 0);
  w.order.push_back(0);
  w.provenance.assign(g.order(), {0, 0});
  seen[0] = 1;
  for (std::size_t i = 0; i < w.order.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t nx = g.mul(w.order[i], gens[k]);
      if (!seen[nx]) {
        seen[nx] = 1;
        w.provenance[nx] = {w.order[i], k};
        w.order.push_back(nx);
      }
    }
  if (w.order.size() != g.order())
    throw validation_error("given set does not generate the group");
  return w;
}

}  // namespace

std::vector<GroupHom> enumerate_homs(const GrpObjPtr& a, const GrpObjPtr& b,
                                     std::vector<std::size_t> gens) {
  if (gens.empty()) gens = generating_set(a);
  BfsWords words = bfs_words(*a, gens);
  std::vector<GroupHom> out;
  // candidate images per generator: element order must divide the
  // generator's order
  std::vector<std::vector<std::size_t>> cand(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t d = a->element_order(gens[k]);
    for (std::size_t y = 0; y < b->order(); ++y)
      if (d % b->element_order(y) == 0) cand[k].push_back(y);
  }
  std::vector<std::size_t> pick(gens.size(), 0);
  if (gens.empty()) {
    out.push_back(trivial_hom(a, b));
    return out;
  }
  while (true) {
    std::vector<std::size_t> map(a->order());
    for (std::size_t i = 1; i < words.order.size(); ++i) {
      std::size_t x = words.order[i];
      auto [p, k] = words.provenance[x];
      map[x] = b->mul(map[p], cand[k][pick[k]]);
    }
    GroupHom f{a, b, std::move(map)};
    if (is_hom(f)) out.push_back(std::move(f));
    std::size_t k = 0;
    for (; k < gens.size(); ++k) {
      if (++pick[k] < cand[k].size()) break;
      pick[k] = 0;
    }
    if (k == gens.size()) break;
  }
  return out;
}

std::optional<GroupHom> find_isomorphism(const GrpObjPtr& a,
                                         const GrpObjPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  auto gens = generating_set(a);
  if (gens.empty()) return identity_hom(a);  // both trivial
  BfsWords words = bfs_words(*a, gens);
  std::vector<std::vector<std::size_t>> cand(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t d = a->element_order(gens[k]);
    for (std::size_t y = 0; y < b->order(); ++y)
      if (b->element_order(y) == d) cand[k].push_back(y);
    if (cand[k].empty()) return std::nullopt;
  }
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<std::size_t> map(a->order());
    for (std::size_t i = 1; i < words.order.size(); ++i) {
      std::size_t x = words.order[i];
      auto [p, k] = words.provenance[x];
      map[x] = b->mul(map[p], cand[k][pick[k]]);
    }
    GroupHom f{a, b, std::move(map)};
    if (is_injective(f) && is_hom(f)) return f;
    std::size_t k = 0;
    for (; k < gens.size(); ++k) {
      if (++pick[k] < cand[k].size()) break;
      pick[k] = 0;
    }
    if (k == gens.size()) break;
  }
  return std::nullopt;
}

std::vector<Subgroup> all_subgroups(const GrpObjPtr& g) {
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> queue;
  auto triv = trivial_subgroup(g).elements;
  found.insert(triv);
  queue.push_back(triv);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t x = 1; x < g->order(); ++x) {
      if (contains(queue[i], x)) continue;
      std::vector<std::size_t> seed = queue[i];
      seed.push_back(x);
      auto h = subgroup_closure(g, seed).elements;
      if (found.insert(h).second) queue.push_back(std::move(h));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(Subgroup{g, e});
  return out;
}

std::vector<Subgroup> normal_subgroups(const GrpObjPtr& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (is_normal(h)) out.push_back(std::move(h));
  return out;
}

}  // namespace mlfact::grp
