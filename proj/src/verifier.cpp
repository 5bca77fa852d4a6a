#include "mlfact/verifier.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace mlfact::ver {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    default:
      return "INCONCLUSIVE";
  }
}

CheckResult& VerificationReport::add(std::string suite, std::string name,
                                     Status status) {
  checks.push_back(CheckResult{std::move(suite), std::move(name), status, {}});
  return checks.back();
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

bool VerificationReport::all_ok() const { return count(Status::Fail) == 0; }

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.suite << '.' << c.name << ' ' << status_name(c.status);
    for (const auto& [k, v] : c.details) os << ' ' << k << '=' << v;
    os << '\n';
  }
  os << "summary pass=" << count(Status::Pass)
     << " fail=" << count(Status::Fail)
     << " inconclusive=" << count(Status::Inconclusive) << '\n';
  return os.str();
}

OrthogonalityReport check_orthogonality(const TorsionContext& c, const Mor& e,
                                        const Mor& m, std::size_t budget) {
  OrthogonalityReport report;
  auto tops = c.enumerate_homs(c.domain(e), c.domain(m), budget);
  auto bottoms = c.enumerate_homs(c.codomain(e), c.codomain(m), budget);
  auto diagonals = c.enumerate_homs(c.codomain(e), c.domain(m), budget);
  if (!tops || !bottoms || !diagonals) return report;  // Inconclusive
  if (tops->size() * bottoms->size() > budget) return report;
  report.homs_top = tops->size();
  report.homs_bottom = bottoms->size();
  report.status = Status::Pass;
  for (const auto& a : *tops)
    for (const auto& b : *bottoms) {
      if (!c.mor_equal(c.compose(m, a), c.compose(b, e))) continue;
      ++report.squares_examined;
      std::size_t found = 0;
      for (const auto& d : *diagonals)
        if (c.mor_equal(c.compose(d, e), a) && c.mor_equal(c.compose(m, d), b))
          ++found;
      if (found != 1) {
        report.status = Status::Fail;
        report.counterexample = OrthogonalitySquare{a, b, found};
        return report;
      }
    }
  return report;
}

VerificationReport check_factorisation_system(const TorsionContext& c,
                                              const std::vector<Obj>& fixtures,
                                              std::size_t sample_size,
                                              std::size_t budget,
                                              std::uint64_t seed) {
  VerificationReport report;
  const std::string suite = "factorisation-system";
  if (fixtures.empty()) {
    report.add(suite, "vacuous", Status::Pass)
        .details.emplace_back("fixtures", "0");
    return report;
  }

  std::vector<Mor> morphisms;
  std::size_t skipped = 0;
  for (const auto& a : fixtures)
    for (const auto& b : fixtures) {
      auto homs = c.enumerate_homs(a, b, budget);
      if (!homs) {
        ++skipped;
        continue;
      }
      for (auto& h : *homs) morphisms.push_back(std::move(h));
    }
  {
    auto& r = report.add(suite, "morphism-corpus",
                         skipped == 0 ? Status::Pass : Status::Inconclusive);
    r.details.emplace_back("morphisms", std::to_string(morphisms.size()));
    r.details.emplace_back("skipped_pairs", std::to_string(skipped));
  }

  std::vector<Mor> ebar_parts, mbar_parts;
  std::size_t totality_failures = 0, membership_failures = 0;
  std::string first_error;
  for (const auto& f : morphisms) {
    try {
      auto fac = eng::ml_factorise(c, f);
      bool q_ok = c.is_normal_epi(fac.q) && c.is_torsion(c.kernel(fac.q).object);
      bool m_ok = c.is_torsion_free(c.kernel(fac.m).object);
      if (!q_ok || !m_ok) {
        ++membership_failures;
        if (first_error.empty())
          first_error = "class membership on " + c.describe_morphism(f);
      }
      ebar_parts.push_back(fac.q);
      mbar_parts.push_back(fac.m);
    } catch (const std::exception& ex) {
      ++totality_failures;
      if (first_error.empty()) first_error = ex.what();
    }
  }
  {
    auto& r = report.add(suite, "totality",
                         totality_failures == 0 ? Status::Pass : Status::Fail);
    r.details.emplace_back("failures", std::to_string(totality_failures));
    if (totality_failures > 0)
      r.details.emplace_back("first", '"' + first_error + '"');
  }
  {
    auto& r = report.add(
        suite, "class-membership",
        membership_failures == 0 ? Status::Pass : Status::Fail);
    r.details.emplace_back("failures", std::to_string(membership_failures));
  }

  // orthogonality over a seeded sample of Ē×M̄ pairs
  std::mt19937_64 rng(seed);
  std::size_t ortho_pass = 0, ortho_fail = 0, ortho_inconclusive = 0;
  if (!ebar_parts.empty() && !mbar_parts.empty()) {
    for (std::size_t i = 0; i < sample_size; ++i) {
      const auto& e = ebar_parts[rng() % ebar_parts.size()];
      const auto& m = mbar_parts[rng() % mbar_parts.size()];
      auto o = check_orthogonality(c, e, m, budget);
      if (o.status == Status::Pass)
        ++ortho_pass;
      else if (o.status == Status::Fail)
        ++ortho_fail;
      else
        ++ortho_inconclusive;
    }
  }
  {
    Status s = ortho_fail > 0 ? Status::Fail
               : ortho_pass > 0 ? Status::Pass
                                : Status::Inconclusive;
    auto& r = report.add(suite, "orthogonality", s);
    r.details.emplace_back("pass", std::to_string(ortho_pass));
    r.details.emplace_back("fail", std::to_string(ortho_fail));
    r.details.emplace_back("inconclusive", std::to_string(ortho_inconclusive));
    r.details.emplace_back("seed", std::to_string(seed));
  }

  // pullback stability of both classes over sampled squares
  if (c.supports_pullback()) {
    std::size_t stability_checked = 0, stability_failures = 0;
    auto stable_in = [&](const std::vector<Mor>& parts, bool ebar) {
      for (std::size_t i = 0; i < sample_size && !parts.empty(); ++i) {
        const auto& f = parts[rng() % parts.size()];
        auto homs = c.enumerate_homs(fixtures[rng() % fixtures.size()],
                                     c.codomain(f), budget);
        if (!homs || homs->empty()) continue;
        const auto& g = (*homs)[rng() % homs->size()];
        auto pb = c.pullback(f, g);
        auto k = c.kernel(pb.p2);
        bool ok = ebar ? (c.is_normal_epi(pb.p2) && c.is_torsion(k.object))
                       : c.is_torsion_free(k.object);
        ++stability_checked;
        if (!ok) ++stability_failures;
      }
    };
    stable_in(ebar_parts, true);
    stable_in(mbar_parts, false);
    auto& r = report.add(
        suite, "pullback-stability",
        stability_failures == 0
            ? (stability_checked > 0 ? Status::Pass : Status::Inconclusive)
            : Status::Fail);
    r.details.emplace_back("checked", std::to_string(stability_checked));
    r.details.emplace_back("failures", std::to_string(stability_failures));
  } else {
    report.add(suite, "pullback-stability", Status::Inconclusive)
        .details.emplace_back("reason", "no-pullbacks");
  }
  return report;
}

VerificationReport check_condition_N(const TorsionContext& c, const Obj& a) {
  VerificationReport report;
  const std::string suite = "condition-n";
  std::vector<Mor> subs;
  try {
    subs = c.normal_subobject_embeddings(a);
  } catch (const ctx::unsupported_error& ex) {
    report.add(suite, "subobjects", Status::Inconclusive)
        .details.emplace_back("reason", '"' + std::string(ex.what()) + '"');
    return report;
  }
  std::size_t failures = 0;
  std::string witness;
  for (const auto& k : subs) {
    auto rad = c.radical(c.domain(k));
    auto n = c.compose(k, rad.counit);
    if (!c.is_normal_mono(n)) {
      ++failures;
      if (witness.empty()) witness = c.describe_object(rad.torsion);
    }
  }
  auto& r = report.add(suite, "torsion-of-normal-subobjects",
                       failures == 0 ? Status::Pass : Status::Fail);
  r.details.emplace_back("subobjects", std::to_string(subs.size()));
  r.details.emplace_back("failures", std::to_string(failures));
  if (failures > 0) r.details.emplace_back("violator", '"' + witness + '"');
  return report;
}

VerificationReport check_torsion_theory(const TorsionContext& c,
                                        const std::vector<Obj>& torsion_fixtures,
                                        const std::vector<Obj>& free_fixtures,
                                        std::size_t budget) {
  VerificationReport report;
  const std::string suite = "torsion-axioms";

  std::size_t vanish_pass = 0, vanish_fail = 0, vanish_inconclusive = 0;
  std::string counterexample;
  for (const auto& y : torsion_fixtures)
    for (const auto& x : free_fixtures) {
      try {
        auto r = ctx::check_hom_vanishing(c, y, x, budget);
        if (r.pass)
          ++vanish_pass;
        else {
          ++vanish_fail;
          if (counterexample.empty() && r.counterexample)
            counterexample = c.describe_morphism(*r.counterexample);
        }
      } catch (const ctx::unsupported_error&) {
        ++vanish_inconclusive;
      }
    }
  {
    Status s = vanish_fail > 0 ? Status::Fail
               : vanish_inconclusive > 0 ? Status::Inconclusive
                                         : Status::Pass;
    auto& r = report.add(suite, "hom-vanishing", s);
    r.details.emplace_back("pairs", std::to_string(torsion_fixtures.size() *
                                                   free_fixtures.size()));
    r.details.emplace_back("fail", std::to_string(vanish_fail));
    if (!counterexample.empty())
      r.details.emplace_back("counterexample", '"' + counterexample + '"');
  }

  // part membership of the declared fixtures
  std::size_t part_failures = 0;
  for (const auto& y : torsion_fixtures)
    if (!c.is_torsion(y)) ++part_failures;
  for (const auto& x : free_fixtures)
    if (!c.is_torsion_free(x)) ++part_failures;
  report
      .add(suite, "fixture-part-membership",
           part_failures == 0 ? Status::Pass : Status::Fail)
      .details.emplace_back("failures", std::to_string(part_failures));

  // radical sequence 0 → T(A) → A → I(A) → 0 for every fixture
  std::size_t seq_failures = 0;
  std::vector<Obj> all = torsion_fixtures;
  all.insert(all.end(), free_fixtures.begin(), free_fixtures.end());
  for (const auto& a : all) {
    auto rad = c.radical(a);
    bool ok = c.is_normal_mono(rad.counit) && c.is_normal_epi(rad.unit) &&
              c.is_zero(c.compose(rad.unit, rad.counit)) &&
              c.find_iso(c.kernel(rad.unit).object, rad.torsion).has_value() &&
              c.is_torsion(rad.torsion) && c.is_torsion_free(rad.reflection);
    if (!ok) ++seq_failures;
  }
  report
      .add(suite, "radical-sequence",
           seq_failures == 0 ? Status::Pass : Status::Fail)
      .details.emplace_back("failures", std::to_string(seq_failures));

  // extension closure over subobject-induced short exact sequences
  std::size_t ext_checked = 0, ext_failures = 0, ext_skipped = 0;
  for (const auto& a : all) {
    std::vector<Mor> subs;
    try {
      subs = c.normal_subobject_embeddings(a);
    } catch (const ctx::unsupported_error&) {
      ++ext_skipped;
      continue;
    }
    for (const auto& k : subs) {
      auto q = c.cokernel(k);
      bool ends_torsion =
          c.is_torsion(c.domain(k)) && c.is_torsion(q.object);
      bool ends_free =
          c.is_torsion_free(c.domain(k)) && c.is_torsion_free(q.object);
      if (ends_torsion) {
        ++ext_checked;
        if (!c.is_torsion(a)) ++ext_failures;
      }
      if (ends_free) {
        ++ext_checked;
        if (!c.is_torsion_free(a)) ++ext_failures;
      }
    }
  }
  {
    Status s = ext_failures > 0 ? Status::Fail
               : ext_checked > 0 ? Status::Pass
                                 : Status::Inconclusive;
    auto& r = report.add(suite, "extension-closure", s);
    r.details.emplace_back("sequences", std::to_string(ext_checked));
    r.details.emplace_back("failures", std::to_string(ext_failures));
    r.details.emplace_back("skipped_objects", std::to_string(ext_skipped));
  }
  return report;
}

VerificationReport check_cover(const TorsionContext& c, const CoverSpec& cover,
                               const Mor& f) {
  if (!c.obj_equal(c.codomain(cover.p), c.codomain(f)))
    throw cover_error("cover codomain differs from the codomain of f");
  if (!c.is_normal_epi(cover.p))
    throw cover_error("cover is not a normal epimorphism");
  if (!c.is_torsion_free(c.domain(cover.p)))
    throw cover_error("cover domain is not torsion-free");

  VerificationReport report;
  const std::string suite = "cover";
  auto pb = c.pullback(f, cover.p);
  auto pulled = pb.p2;  // p*(f)
  auto refl = eng::reflective_factorise(c, pulled);
  report
      .add(suite, "pulled-back-in-M",
           c.is_iso(refl.e) ? Status::Pass : Status::Fail)
      .details.emplace_back("morphism", '"' + c.describe_morphism(pulled) + '"');
  bool kernels_iso =
      c.find_iso(c.kernel(pulled).object, c.kernel(f).object).has_value();
  report.add(suite, "kernel-isomorphism",
             kernels_iso ? Status::Pass : Status::Fail);
  return report;
}

}  // namespace mlfact::ver
