#include "mlfact/abgroup.hpp"

#include <algorithm>
#include <sstream>

namespace mlfact::ab {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int pos_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

constexpr unsigned long kEnumerationCap = 1u << 20;

unsigned long order_as_ulong(const PresentedAbGroup& g, const char* what) {
  if (!g.is_finite())
    throw unsupported_error(std::string(what) + ": group is infinite");
  Int n = g.order();
  if (n > kEnumerationCap)
    throw unsupported_error(std::string(what) + ": group too large");
  return n.convert_to<unsigned long>();
}

}  // namespace

PresentedAbGroup::PresentedAbGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators),
      relations_(std::move(relations)),
      snf_(smith_normal_form(relations_)) {
  if (relations_.rows() != generators_)
    throw validation_error("relation matrix must have one row per generator");
  free_rank_ = generators_ - snf_.rank;
  for (std::size_t i = 0; i < snf_.rank; ++i)
    if (snf_.S.at(i, i) >= 2) factors_.push_back(snf_.S.at(i, i));
}

PresentedAbGroup PresentedAbGroup::free_group(std::size_t rank) {
  return PresentedAbGroup(rank, IntMatrix(rank, 0));
}

PresentedAbGroup PresentedAbGroup::cyclic(const Int& n) {
  if (n < 0) throw validation_error("cyclic: order must be >= 0");
  if (n == 0) return free_group(1);
  IntMatrix rel(1, 1);
  rel.at(0, 0) = n;
  return PresentedAbGroup(1, rel);
}

PresentedAbGroup PresentedAbGroup::trivial() {
  return PresentedAbGroup(0, IntMatrix(0, 0));
}

PresentedAbGroup PresentedAbGroup::direct_sum(const PresentedAbGroup& a,
                                              const PresentedAbGroup& b) {
  return PresentedAbGroup(a.generators_ + b.generators_,
                          block_diag(a.relations_, b.relations_));
}

Int PresentedAbGroup::order() const {
  if (!is_finite()) throw unsupported_error("order: group is infinite");
  Int n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

bool PresentedAbGroup::same_presentation(const PresentedAbGroup& o) const {
  return generators_ == o.generators_ && relations_ == o.relations_;
}

bool PresentedAbGroup::isomorphic_to(const PresentedAbGroup& o) const {
  return free_rank_ == o.free_rank_ && factors_ == o.factors_;
}

bool PresentedAbGroup::is_relation(const std::vector<Int>& v) const {
  for (const auto& c : canonical_coords(v))
    if (c != 0) return false;
  return true;
}

std::vector<Int> PresentedAbGroup::canonical_coords(
    const std::vector<Int>& v) const {
  std::vector<Int> w = snf_.U.apply(v);
  for (std::size_t i = 0; i < snf_.rank; ++i)
    w[i] = pos_mod(w[i], snf_.S.at(i, i));
  return w;
}

std::vector<std::vector<Int>> PresentedAbGroup::elements() const {
  unsigned long n = order_as_ulong(*this, "elements");
  // iterate canonical tuples over the nonzero diagonal, pull back through Uinv
  std::vector<Int> diag(generators_);
  for (std::size_t i = 0; i < generators_; ++i) diag[i] = snf_.S.at(i, i);
  std::vector<Int> t(generators_, 0);
  std::vector<std::vector<Int>> out;
  out.reserve(n);
  for (unsigned long c = 0; c < n; ++c) {
    out.push_back(snf_.Uinv.apply(t));
    for (std::size_t i = 0; i < generators_; ++i) {
      t[i] += 1;
      if (t[i] < diag[i]) break;
      t[i] = 0;
    }
  }
  return out;
}

std::string PresentedAbGroup::describe() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) os << " (+) ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool is_well_defined(const AbHom& f) {
  if (f.matrix.rows() != f.codomain->generators() ||
      f.matrix.cols() != f.domain->generators())
    return false;
  IntMatrix mapped = f.matrix * f.domain->relations();
  for (std::size_t j = 0; j < mapped.cols(); ++j)
    if (!f.codomain->is_relation(mapped.col(j))) return false;
  return true;
}

void validate(const AbHom& f) {
  if (!is_well_defined(f))
    throw validation_error(
        "homomorphism does not map the domain relation lattice into the "
        "codomain relation lattice");
}

bool hom_equal(const AbHom& f, const AbHom& g) {
  if (!f.domain->same_presentation(*g.domain) ||
      !f.codomain->same_presentation(*g.codomain))
    return false;
  IntMatrix d = f.matrix - g.matrix;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (!f.codomain->is_relation(d.col(j))) return false;
  return true;
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!f.codomain->same_presentation(*g.domain))
    throw validation_error("compose: middle objects differ");
  return AbHom{f.domain, g.codomain, g.matrix * f.matrix};
}

AbHom identity_hom(const AbObjPtr& a) {
  return AbHom{a, a, IntMatrix::identity(a->generators())};
}

AbHom zero_hom(const AbObjPtr& a, const AbObjPtr& b) {
  return AbHom{a, b, IntMatrix(b->generators(), a->generators())};
}

bool is_zero_hom(const AbHom& f) {
  for (std::size_t j = 0; j < f.matrix.cols(); ++j)
    if (!f.codomain->is_relation(f.matrix.col(j))) return false;
  return true;
}

SubgroupEmbedding subgroup_from_generators(const AbObjPtr& ambient,
                                           const IntMatrix& gens) {
  if (gens.rows() != ambient->generators())
    throw validation_error("subgroup generators: wrong ambient dimension");
  // relations of the subgroup: combinations of the generators that land in
  // the ambient relation lattice
  IntMatrix combos =
      kernel_lattice(hstack(gens, ambient->relations())).row_slice(0, gens.cols());
  auto sub = std::make_shared<PresentedAbGroup>(gens.cols(), combos);
  return SubgroupEmbedding{sub, ambient, AbHom{sub, ambient, gens}};
}

SubgroupEmbedding kernel(const AbHom& f) {
  validate(f);
  // x with f(x) in the codomain relation lattice
  IntMatrix gens =
      kernel_lattice(hstack(f.matrix, f.codomain->relations()))
          .row_slice(0, f.domain->generators());
  return subgroup_from_generators(f.domain, gens);
}

AbCokernel cokernel(const AbHom& f) {
  validate(f);
  auto q = std::make_shared<PresentedAbGroup>(
      f.codomain->generators(), hstack(f.codomain->relations(), f.matrix));
  return AbCokernel{q, AbHom{f.codomain, q,
                             IntMatrix::identity(f.codomain->generators())}};
}

AbImage image(const AbHom& f) {
  validate(f);
  SubgroupEmbedding emb = subgroup_from_generators(f.codomain, f.matrix);
  AbHom onto{f.domain, emb.sub, IntMatrix::identity(f.domain->generators())};
  return AbImage{emb, onto};
}

AbPullback pullback(const AbHom& f, const AbHom& g) {
  validate(f);
  validate(g);
  if (!f.codomain->same_presentation(*g.codomain))
    throw validation_error("pullback: codomain mismatch");
  const std::size_t na = f.domain->generators();
  const std::size_t nb = g.domain->generators();
  IntMatrix h = hstack(f.matrix, -g.matrix);
  IntMatrix rel_d = block_diag(f.domain->relations(), g.domain->relations());
  IntMatrix gens =
      kernel_lattice(hstack(h, f.codomain->relations())).row_slice(0, na + nb);
  IntMatrix combos = kernel_lattice(hstack(gens, rel_d)).row_slice(0, gens.cols());
  auto p = std::make_shared<PresentedAbGroup>(gens.cols(), combos);
  return AbPullback{p, AbHom{p, f.domain, gens.row_slice(0, na)},
                    AbHom{p, g.domain, gens.row_slice(na, na + nb)}};
}

AbHom into_pullback(const AbPullback& pb, const AbHom& u, const AbHom& v) {
  if (!u.domain->same_presentation(*v.domain))
    throw validation_error("into_pullback: domains differ");
  IntMatrix g = vstack(pb.p1.matrix, pb.p2.matrix);
  IntMatrix rel_d =
      block_diag(pb.p1.codomain->relations(), pb.p2.codomain->relations());
  IntMatrix w = vstack(u.matrix, v.matrix);
  IntMatrix phi(pb.object->generators(), u.domain->generators());
  for (std::size_t j = 0; j < w.cols(); ++j) {
    auto x = solve_mod(g, rel_d, w.col(j));
    if (!x)
      throw validation_error("into_pullback: cone does not factor (square "
                             "does not commute)");
    for (std::size_t i = 0; i < phi.rows(); ++i) phi.at(i, j) = (*x)[i];
  }
  AbHom m{u.domain, pb.object, phi};
  validate(m);
  return m;
}

std::optional<AbHom> factor_through_epi(const AbHom& e, const AbHom& f) {
  if (!e.domain->same_presentation(*f.domain))
    throw validation_error("factor_through_epi: domains differ");
  const std::size_t nq = e.codomain->generators();
  const std::size_t nb = f.codomain->generators();
  if (e.matrix.is_identity()) {
    AbHom phi{e.codomain, f.codomain, f.matrix};
    if (!is_well_defined(phi)) return std::nullopt;
    return phi;
  }
  // Solve Phi*E ≡ F and Phi*R_Q ≡ 0 modulo the codomain relations, as one
  // integer system in vec(Phi) (column-major).
  const IntMatrix& rb = f.codomain->relations();
  const IntMatrix& rq = e.codomain->relations();
  IntMatrix inb = IntMatrix::identity(nb);
  IntMatrix top = hstack(
      hstack(kron(e.matrix.transpose(), inb),
             kron(IntMatrix::identity(e.matrix.cols()), rb)),
      IntMatrix(nb * e.matrix.cols(), rq.cols() * rb.cols()));
  IntMatrix bot = hstack(
      hstack(kron(rq.transpose(), inb),
             IntMatrix(nb * rq.cols(), e.matrix.cols() * rb.cols())),
      kron(IntMatrix::identity(rq.cols()), rb));
  IntMatrix sys = vstack(top, bot);
  std::vector<Int> rhs(sys.rows());
  for (std::size_t j = 0; j < f.matrix.cols(); ++j)
    for (std::size_t i = 0; i < nb; ++i) rhs[j * nb + i] = f.matrix.at(i, j);
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  IntMatrix phi(nb, nq);
  for (std::size_t k = 0; k < nq; ++k)
    for (std::size_t i = 0; i < nb; ++i) phi.at(i, k) = (*x)[k * nb + i];
  AbHom out{e.codomain, f.codomain, phi};
  if (!is_well_defined(out) || !hom_equal(compose(out, e), f))
    return std::nullopt;
  return out;
}

std::optional<AbHom> lift_through_mono(const AbHom& m, const AbHom& f) {
  if (!m.codomain->same_presentation(*f.codomain))
    throw validation_error("lift_through_mono: codomains differ");
  IntMatrix phi(m.domain->generators(), f.domain->generators());
  for (std::size_t j = 0; j < f.matrix.cols(); ++j) {
    auto x = solve_mod(m.matrix, m.codomain->relations(), f.matrix.col(j));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < phi.rows(); ++i) phi.at(i, j) = (*x)[i];
  }
  AbHom out{f.domain, m.domain, phi};
  if (!is_well_defined(out) || !hom_equal(compose(m, out), f))
    return std::nullopt;
  return out;
}

bool is_mono(const AbHom& f) { return kernel(f).sub->is_trivial(); }

bool is_epi(const AbHom& f) { return cokernel(f).quotient->is_trivial(); }

bool is_iso(const AbHom& f) { return is_mono(f) && is_epi(f); }

AbCanonicalisation canonicalise(const AbObjPtr& a) {
  const SmithResult& snf = a->relation_snf();
  const std::size_t n = a->generators();
  // keep the coordinates with invariant factor >= 2, then the free ones
  std::vector<std::size_t> keep;
  IntMatrix rel_cols(0, 0);
  std::vector<Int> diag;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.S.at(i, i) >= 2) {
      keep.push_back(i);
      diag.push_back(snf.S.at(i, i));
    }
  for (std::size_t i = snf.rank; i < n; ++i) keep.push_back(i);
  const std::size_t nc = keep.size();
  IntMatrix crel(nc, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) crel.at(i, i) = diag[i];
  auto canon = std::make_shared<PresentedAbGroup>(nc, crel);
  IntMatrix proj(nc, n);  // drop trivial coordinates
  IntMatrix incl(n, nc);
  for (std::size_t i = 0; i < nc; ++i) {
    proj.at(i, keep[i]) = 1;
    incl.at(keep[i], i) = 1;
  }
  AbHom to{a, canon, proj * snf.U};
  AbHom from{canon, a, snf.Uinv * incl};
  return AbCanonicalisation{canon, to, from};
}

std::vector<AbHom> enumerate_homs(const AbObjPtr& a, const AbObjPtr& b) {
  if (!a->is_finite() || !b->is_finite())
    throw unsupported_error("enumerate_homs: both groups must be finite");
  AbCanonicalisation ca = canonicalise(a);
  AbCanonicalisation cb = canonicalise(b);
  const auto& da = ca.canonical->invariant_factors();
  const auto& db = cb.canonical->invariant_factors();
  const std::size_t ga = da.size(), gb = db.size();
  // candidate images of canonical generator i: tuples b with d_i * b = 0
  std::vector<std::vector<std::vector<Int>>> candidates(ga);
  for (std::size_t i = 0; i < ga; ++i) {
    std::vector<std::vector<Int>> tuples{std::vector<Int>(gb, 0)};
    for (std::size_t k = 0; k < gb; ++k) {
      Int g = gcd_int(da[i], db[k]);
      Int step = db[k] / g;
      std::vector<std::vector<Int>> next;
      for (const auto& t : tuples)
        for (Int v = 0; v < g; ++v) {
          auto t2 = t;
          t2[k] = v * step;
          next.push_back(std::move(t2));
        }
      tuples = std::move(next);
    }
    candidates[i] = std::move(tuples);
  }
  std::vector<AbHom> out;
  std::vector<std::size_t> pick(ga, 0);
  while (true) {
    IntMatrix h(gb, ga);
    for (std::size_t i = 0; i < ga; ++i)
      for (std::size_t k = 0; k < gb; ++k)
        h.at(k, i) = candidates[i].empty() ? 0 : candidates[i][pick[i]][k];
    out.push_back(AbHom{a, b,
                        cb.from_canonical.matrix * h * ca.to_canonical.matrix});
    std::size_t i = 0;
    for (; i < ga; ++i) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
    }
    if (i == ga) break;
  }
  return out;
}

}  // namespace mlfact::ab
