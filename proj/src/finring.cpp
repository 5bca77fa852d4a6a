#include "mlfact/finring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mlfact::ring {

namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

FiniteCommRing::FiniteCommRing(std::vector<std::vector<std::size_t>> add,
                               std::vector<std::vector<std::size_t>> mul) {
  order_ = add.size();
  if (order_ == 0) throw validation_error("empty ring tables");
  if (mul.size() != order_)
    throw validation_error("addition and multiplication tables disagree in size");
  auto flatten = [&](std::vector<std::vector<std::size_t>>& t,
                     std::vector<std::size_t>& out, const char* name) {
    out.reserve(order_ * order_);
    for (const auto& row : t) {
      if (row.size() != order_)
        throw validation_error(std::string(name) + " table is not square");
      for (std::size_t x : row) {
        if (x >= order_)
          throw validation_error(std::string(name) + " table index out of range");
        out.push_back(x);
      }
    }
  };
  flatten(add, add_, "addition");
  flatten(mul, mul_, "multiplication");

  for (std::size_t x = 0; x < order_; ++x)
    if (add_[0 * order_ + x] != x || add_[x * order_ + 0] != x)
      throw validation_error("missing additive identity at index 0");
  neg_.assign(order_, order_);
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y)
      if (add_[x * order_ + y] == 0) {
        neg_[x] = y;
        break;
      }
    if (neg_[x] == order_)
      throw validation_error("missing additive inverse for element " +
                             std::to_string(x));
  }
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y) {
      if (this->add(x, y) != this->add(y, x))
        throw validation_error("addition not commutative");
      if (this->mul(x, y) != this->mul(y, x))
        throw validation_error("multiplication not commutative");
    }
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      for (std::size_t z = 0; z < order_; ++z) {
        if (this->add(this->add(x, y), z) != this->add(x, this->add(y, z)))
          throw validation_error("addition not associative");
        if (this->mul(this->mul(x, y), z) != this->mul(x, this->mul(y, z)))
          throw validation_error("multiplication not associative");
        if (this->mul(x, this->add(y, z)) != this->add(this->mul(x, y), this->mul(x, z)))
          throw validation_error("distributivity fails");
      }
}

FiniteCommRing FiniteCommRing::zmod(std::size_t n) {
  if (n == 0) throw validation_error("zmod: order must be positive");
  std::vector<std::vector<std::size_t>> a(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = (i + j) % n;
      m[i][j] = (i * j) % n;
    }
  return FiniteCommRing(std::move(a), std::move(m));
}

FiniteCommRing FiniteCommRing::zero_multiplication(std::size_t n) {
  std::vector<std::vector<std::size_t>> a(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i + j) % n;
  return FiniteCommRing(std::move(a), std::move(m));
}

FiniteCommRing FiniteCommRing::direct_product(const FiniteCommRing& a,
                                              const FiniteCommRing& b) {
  const std::size_t n = a.order(), m = b.order();
  std::vector<std::vector<std::size_t>> ta(n * m, std::vector<std::size_t>(n * m));
  std::vector<std::vector<std::size_t>> tm(n * m, std::vector<std::size_t>(n * m));
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          ta[i1 * m + j1][i2 * m + j2] = a.add(i1, i2) * m + b.add(j1, j2);
          tm[i1 * m + j1][i2 * m + j2] = a.mul(i1, i2) * m + b.mul(j1, j2);
        }
  return FiniteCommRing(std::move(ta), std::move(tm));
}

FiniteCommRing FiniteCommRing::gf4() {
  std::vector<std::vector<std::size_t>> a(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a[i][j] = i ^ j;
  std::vector<std::vector<std::size_t>> m{
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return FiniteCommRing(std::move(a), std::move(m));
}

bool FiniteCommRing::same_tables(const FiniteCommRing& o) const {
  return order_ == o.order_ && add_ == o.add_ && mul_ == o.mul_;
}

bool FiniteCommRing::is_nilpotent_element(std::size_t i) const {
  std::size_t x = i;
  for (std::size_t k = 0; k < order_; ++k) {
    if (x == 0) return true;
    x = mul(x, i);
  }
  return x == 0;
}

std::string FiniteCommRing::describe() const {
  std::ostringstream os;
  os << "commutative ring of order " << order_;
  return os.str();
}

bool is_ring_hom(const RingHom& f) {
  const auto& a = *f.domain;
  const auto& b = *f.codomain;
  if (f.map.size() != a.order()) return false;
  for (std::size_t x : f.map)
    if (x >= b.order()) return false;
  if (f.map[0] != 0) return false;
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y) {
      if (f.map[a.add(x, y)] != b.add(f.map[x], f.map[y])) return false;
      if (f.map[a.mul(x, y)] != b.mul(f.map[x], f.map[y])) return false;
    }
  return true;
}

void validate(const RingHom& f) {
  if (!is_ring_hom(f))
    throw validation_error("map is not a ring homomorphism");
}

bool hom_equal(const RingHom& f, const RingHom& g) {
  return f.domain->same_tables(*g.domain) &&
         f.codomain->same_tables(*g.codomain) && f.map == g.map;
}

RingHom compose(const RingHom& g, const RingHom& f) {
  if (!f.codomain->same_tables(*g.domain))
    throw validation_error("compose: middle objects differ");
  std::vector<std::size_t> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return RingHom{f.domain, g.codomain, std::move(m)};
}

RingHom identity_hom(const RingObjPtr& r) {
  std::vector<std::size_t> m(r->order());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return RingHom{r, r, std::move(m)};
}

RingHom zero_hom(const RingObjPtr& a, const RingObjPtr& b) {
  return RingHom{a, b, std::vector<std::size_t>(a->order(), 0)};
}

bool is_zero_hom(const RingHom& f) {
  for (std::size_t x : f.map)
    if (x != 0) return false;
  return true;
}

bool is_injective(const RingHom& f) {
  std::set<std::size_t> seen(f.map.begin(), f.map.end());
  return seen.size() == f.map.size();
}

bool is_surjective(const RingHom& f) {
  std::set<std::size_t> seen(f.map.begin(), f.map.end());
  return seen.size() == f.codomain->order();
}

bool is_iso_hom(const RingHom& f) {
  return f.domain->order() == f.codomain->order() && is_injective(f);
}

bool is_subring(const RingObjPtr& r, const std::vector<std::size_t>& elems) {
  if (elems.empty() || !contains(elems, 0)) return false;
  for (std::size_t x : elems) {
    if (!contains(elems, r->neg(x))) return false;
    for (std::size_t y : elems) {
      if (!contains(elems, r->add(x, y))) return false;
      if (!contains(elems, r->mul(x, y))) return false;
    }
  }
  return true;
}

bool is_ideal(const Ideal& i) {
  if (!is_subring(i.ambient, i.elements)) return false;
  for (std::size_t x : i.elements)
    for (std::size_t rr = 0; rr < i.ambient->order(); ++rr)
      if (!contains(i.elements, i.ambient->mul(rr, x))) return false;
  return true;
}

Ideal zero_ideal(const RingObjPtr& r) { return Ideal{r, {0}}; }

Ideal full_ideal(const RingObjPtr& r) {
  std::vector<std::size_t> all(r->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Ideal{r, std::move(all)};
}

Ideal ideal_generated_by(const RingObjPtr& r,
                         const std::vector<std::size_t>& seed) {
  std::set<std::size_t> elems{0};
  std::vector<std::size_t> queue{0};
  for (std::size_t s : seed) {
    if (s >= r->order()) throw validation_error("seed index out of range");
    if (elems.insert(s).second) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t x = queue[i];
    auto push = [&](std::size_t v) {
      if (elems.insert(v).second) queue.push_back(v);
    };
    push(r->neg(x));
    for (std::size_t j = 0; j <= i; ++j) push(r->add(x, queue[j]));
    for (std::size_t a = 0; a < r->order(); ++a) push(r->mul(a, x));
  }
  return Ideal{r, std::vector<std::size_t>(elems.begin(), elems.end())};
}

Ideal nilradical(const RingObjPtr& r) {
  std::vector<std::size_t> nil;
  for (std::size_t x = 0; x < r->order(); ++x)
    if (r->is_nilpotent_element(x)) nil.push_back(x);
  return Ideal{r, std::move(nil)};
}

bool is_reduced(const RingObjPtr& r) {
  return nilradical(r).elements.size() == 1;
}

bool is_nil(const RingObjPtr& r) {
  return nilradical(r).elements.size() == r->order();
}

SubringObject subring_object(const RingObjPtr& r,
                             const std::vector<std::size_t>& elems) {
  if (!is_subring(r, elems))
    throw validation_error("index set is not a subring");
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> a(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = local.at(r->add(elems[i], elems[j]));
      m[i][j] = local.at(r->mul(elems[i], elems[j]));
    }
  auto sub = std::make_shared<FiniteCommRing>(std::move(a), std::move(m));
  return SubringObject{sub, RingHom{sub, r, elems}, elems};
}

RingQuotient quotient_ring(const RingObjPtr& r, const Ideal& i) {
  if (!is_ideal(i)) throw validation_error("quotient_ring: not an ideal");
  const std::size_t ord = r->order();
  std::vector<std::size_t> coset_of(ord, ord);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < ord; ++x) {
    if (coset_of[x] != ord) continue;
    std::size_t c = reps.size();
    reps.push_back(x);
    for (std::size_t h : i.elements) coset_of[r->add(x, h)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<std::vector<std::size_t>> a(q, std::vector<std::size_t>(q));
  std::vector<std::vector<std::size_t>> m(q, std::vector<std::size_t>(q));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      a[x][y] = coset_of[r->add(reps[x], reps[y])];
      m[x][y] = coset_of[r->mul(reps[x], reps[y])];
    }
  auto quo = std::make_shared<FiniteCommRing>(std::move(a), std::move(m));
  return RingQuotient{quo, RingHom{r, quo, std::move(coset_of)}};
}

Ideal kernel_ideal(const RingHom& f) {
  validate(f);
  std::vector<std::size_t> ker;
  for (std::size_t x = 0; x < f.domain->order(); ++x)
    if (f.map[x] == 0) ker.push_back(x);
  return Ideal{f.domain, std::move(ker)};
}

std::vector<std::size_t> image_elements(const RingHom& f) {
  std::set<std::size_t> img(f.map.begin(), f.map.end());
  return std::vector<std::size_t>(img.begin(), img.end());
}

RingQuotient cokernel(const RingHom& f) {
  validate(f);
  return quotient_ring(f.codomain,
                       ideal_generated_by(f.codomain, image_elements(f)));
}

RingPullback pullback(const RingHom& f, const RingHom& g) {
  validate(f);
  validate(g);
  if (!f.codomain->same_tables(*g.codomain))
    throw validation_error("pullback: codomain mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < f.domain->order(); ++a)
    for (std::size_t b = 0; b < g.domain->order(); ++b)
      if (f.map[a] == g.map[b]) {
        index[{a, b}] = pairs.size();
        pairs.emplace_back(a, b);
      }
  const std::size_t n = pairs.size();
  std::vector<std::vector<std::size_t>> ta(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> tm(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ta[i][j] = index.at({f.domain->add(pairs[i].first, pairs[j].first),
                           g.domain->add(pairs[i].second, pairs[j].second)});
      tm[i][j] = index.at({f.domain->mul(pairs[i].first, pairs[j].first),
                           g.domain->mul(pairs[i].second, pairs[j].second)});
    }
  auto p = std::make_shared<FiniteCommRing>(std::move(ta), std::move(tm));
  std::vector<std::size_t> m1(n), m2(n);
  for (std::size_t i = 0; i < n; ++i) {
    m1[i] = pairs[i].first;
    m2[i] = pairs[i].second;
  }
  return RingPullback{p, RingHom{p, f.domain, std::move(m1)},
                      RingHom{p, g.domain, std::move(m2)}, std::move(pairs)};
}

RingHom into_pullback(const RingPullback& pb, const RingHom& u,
                      const RingHom& v) {
  if (!u.domain->same_tables(*v.domain))
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
  return RingHom{u.domain, pb.object, std::move(m)};
}

namespace {

// additive generating set and BFS words, mirroring the group machinery
struct AddWords {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> order;  // discovery order
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
};

AddWords additive_words(const FiniteCommRing& r) {
  AddWords w;
  std::vector<char> seen(r.order(), 0);
  auto close = [&](std::vector<std::size_t>& members) {
    // additive closure of current generators
    members.assign(1, 0);
    std::vector<char> in(r.order(), 0);
    in[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t g : w.gens) {
        std::size_t nx = r.add(members[i], g);
        if (!in[nx]) {
          in[nx] = 1;
          members.push_back(nx);
        }
      }
  };
  std::vector<std::size_t> members{0};
  while (members.size() < r.order()) {
    std::size_t x = 0;
    std::vector<char> in(r.order(), 0);
    for (std::size_t m : members) in[m] = 1;
    while (in[x]) ++x;
    w.gens.push_back(x);
    close(members);
  }
  // BFS provenance
  w.order.push_back(0);
  w.provenance.assign(r.order(), {0, 0});
  seen[0] = 1;
  for (std::size_t i = 0; i < w.order.size(); ++i)
    for (std::size_t k = 0; k < w.gens.size(); ++k) {
      std::size_t nx = r.add(w.order[i], w.gens[k]);
      if (!seen[nx]) {
        seen[nx] = 1;
        w.provenance[nx] = {w.order[i], k};
        w.order.push_back(nx);
      }
    }
  return w;
}

std::size_t additive_order(const FiniteCommRing& r, std::size_t x) {
  std::size_t y = x, k = 1;
  while (y != 0) {
    y = r.add(y, x);
    ++k;
  }
  return k;
}

}  // namespace

std::vector<RingHom> enumerate_ring_homs(const RingObjPtr& a,
                                         const RingObjPtr& b) {
  AddWords words = additive_words(*a);
  std::vector<std::vector<std::size_t>> cand(words.gens.size());
  for (std::size_t k = 0; k < words.gens.size(); ++k) {
    std::size_t d = additive_order(*a, words.gens[k]);
    for (std::size_t y = 0; y < b->order(); ++y)
      if (d % additive_order(*b, y) == 0) cand[k].push_back(y);
  }
  std::vector<RingHom> out;
  std::vector<std::size_t> pick(words.gens.size(), 0);
  while (true) {
    std::vector<std::size_t> map(a->order());
    for (std::size_t i = 1; i < words.order.size(); ++i) {
      std::size_t x = words.order[i];
      auto [p, k] = words.provenance[x];
      map[x] = b->add(map[p], cand[k][pick[k]]);
    }
    RingHom f{a, b, std::move(map)};
    if (is_ring_hom(f)) out.push_back(std::move(f));
    std::size_t k = 0;
    for (; k < words.gens.size(); ++k) {
      if (++pick[k] < cand[k].size()) break;
      pick[k] = 0;
    }
    if (k == words.gens.size()) break;
  }
  return out;
}

std::optional<RingHom> find_isomorphism(const RingObjPtr& a,
                                        const RingObjPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  for (const auto& h : enumerate_ring_homs(a, b))
    if (is_injective(h)) return h;
  return std::nullopt;
}

std::vector<Ideal> all_ideals(const RingObjPtr& r) {
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> queue;
  found.insert({0});
  queue.push_back({0});
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t x = 1; x < r->order(); ++x) {
      if (contains(queue[i], x)) continue;
      std::vector<std::size_t> seed = queue[i];
      seed.push_back(x);
      auto id = ideal_generated_by(r, seed).elements;
      if (found.insert(id).second) queue.push_back(std::move(id));
    }
  }
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(Ideal{r, e});
  return out;
}

}  // namespace mlfact::ring
