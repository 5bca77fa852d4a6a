#include "CLI11.hpp"

#include "mlfact/engine.hpp"
#include "mlfact/fixtures.hpp"
#include "mlfact/io.hpp"
#include "mlfact/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ctx = mlfact::ctx;
namespace eng = mlfact::eng;
namespace io = mlfact::io;
namespace ver = mlfact::ver;
namespace fs = std::filesystem;

namespace {

// Exit-code contract: 0 success/pass, 1 verification failure, 2 parse error,
// 3 validation error, 4 context mismatch, 5 usage error.
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitContext = 4;
constexpr int kExitUsage = 5;

io::Kind context_kind(const std::string& tag) {
  if (tag == "ab" || tag.rfind("finab", 0) == 0) return io::Kind::Ab;
  if (tag == "fingrp") return io::Kind::Grp;
  if (tag == "finring") return io::Kind::Ring;
  if (tag == "xmod") return io::Kind::XMod;
  throw ctx::context_error("unknown context tag '" + tag + "'");
}

void require_kind(const std::string& tag, io::Kind kind,
                  const std::string& file) {
  if (context_kind(tag) != kind)
    throw ctx::context_error("context '" + tag + "' cannot operate on the " +
                             std::string(io::kind_name(kind)) + " file '" +
                             file + "'");
}

std::string flag_line(eng::Flag f) { return eng::flag_name(f); }

std::string factor_flags(const ctx::TorsionContext& c, const ctx::Mor& f) {
  auto rec = eng::classify(c, f, {});
  std::ostringstream os;
  os << "in_E=" << flag_line(rec.in_E) << " in_Ebar=" << flag_line(rec.in_Ebar)
     << " in_Mbar=" << flag_line(rec.in_Mbar)
     << " in_M=" << flag_line(rec.in_M);
  return os.str();
}

struct FixtureFiles {
  std::vector<std::pair<std::string, io::ParsedObject>> objects;
  std::vector<std::pair<std::string, io::ParsedMorphism>> morphisms;
};

/// Loads every structure/morphism file of the context's kind from a
/// directory, in sorted filename order.
FixtureFiles load_fixture_dir(const std::string& dir, const std::string& tag) {
  if (!fs::is_directory(dir))
    throw io::parse_error(dir, 0, "not a directory");
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  auto kind = context_kind(tag);
  FixtureFiles out;
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::string head;
    in >> head;
    bool is_object = head == "abgroup" || head == "fingroup" ||
                     head == "finring" || head == "xmod";
    bool is_morphism = head == "hom" || head == "ringhom" || head == "xmodhom";
    if (is_object) {
      auto obj = io::read_object_file(p.string());
      if (obj.kind == kind)
        out.objects.emplace_back(p.filename().string(), std::move(obj));
    } else if (is_morphism) {
      auto mor = io::read_morphism_file(p.string());
      if (mor.kind == kind)
        out.morphisms.emplace_back(p.filename().string(), std::move(mor));
    }
    // files of other kinds (or unrelated files) are ignored
  }
  return out;
}

int cmd_factorise(const std::string& tag, const std::string& file,
                  const std::string& mode) {
  auto c = ctx::make_context(tag);
  auto parsed = io::read_morphism_file(file);
  require_kind(tag, parsed.kind, file);

  std::ostringstream os;
  os << "context " << tag << "\n";
  os << "morphism " << c->describe_morphism(parsed.mor) << "\n";
  os << "mode " << mode << "\n";
  if (mode == "ml") {
    auto fac = eng::ml_factorise(*c, parsed.mor);
    os << "middle " << c->describe_object(fac.middle) << "\n";
    os << "q " << c->describe_morphism(fac.q) << "\n";
    os << "q.flags " << factor_flags(*c, fac.q) << "\n";
    os << "m " << c->describe_morphism(fac.m) << "\n";
    os << "m.flags " << factor_flags(*c, fac.m) << "\n";
    os << "kernel_witness " << c->describe_morphism(fac.kernel_witness)
       << "\n";
  } else {
    auto fac = eng::reflective_factorise(*c, parsed.mor);
    os << "middle " << c->describe_object(fac.middle) << "\n";
    os << "e " << c->describe_morphism(fac.e) << "\n";
    os << "e.flags " << factor_flags(*c, fac.e) << "\n";
    os << "m " << c->describe_morphism(fac.m) << "\n";
    os << "m.flags " << factor_flags(*c, fac.m) << "\n";
  }
  std::cout << os.str();
  return kExitOk;
}

int cmd_classify(const std::string& tag, const std::string& file,
                 std::size_t samples, std::uint64_t seed, std::size_t budget,
                 const std::optional<std::string>& cover_file) {
  auto c = ctx::make_context(tag);
  auto parsed = io::read_morphism_file(file);
  require_kind(tag, parsed.kind, file);

  eng::ClassifyOptions options;
  options.pullback_samples = samples;
  options.seed = seed;
  options.hom_budget = budget;
  if (cover_file) {
    auto cover = io::read_morphism_file(*cover_file);
    require_kind(tag, cover.kind, *cover_file);
    options.cover = cover.mor;
  }
  auto rec = eng::classify(*c, parsed.mor, options);

  std::ostringstream os;
  os << "context " << tag << "\n";
  os << "morphism " << c->describe_morphism(parsed.mor) << "\n";
  os << "in_E computed:" << flag_line(rec.in_E) << " (I(f) iso)\n";
  os << "in_Ebar computed:" << flag_line(rec.in_Ebar)
     << " (normal epi with torsion kernel)\n";
  os << "in_Mbar computed:" << flag_line(rec.in_Mbar)
     << " (torsion-free kernel)\n";
  os << "in_M computed:" << flag_line(rec.in_M)
     << " (reflective e-part iso)\n";
  os << "in_Eprime sampled:" << flag_line(rec.in_Eprime_sampled)
     << " samples=" << rec.eprime_samples_run << "\n";
  os << "in_Mstar theorem-conditional:" << flag_line(rec.in_Mstar_assumed)
     << " certified=" << (rec.mstar_certified ? "true" : "false") << "\n";
  std::cout << os.str();
  return kExitOk;
}

int cmd_verify(const std::string& tag, const std::string& suite,
               const std::string& dir, std::size_t budget, std::uint64_t seed,
               const std::optional<std::string>& cover_file) {
  auto c = ctx::make_context(tag);
  auto files = load_fixture_dir(dir, tag);
  std::vector<ctx::Obj> objects;
  for (const auto& [name, obj] : files.objects) objects.push_back(obj.obj);

  ver::VerificationReport report;
  if (suite == "factorisation-system") {
    report = ver::check_factorisation_system(*c, objects, 6, budget, seed);
  } else if (suite == "condition-n") {
    for (const auto& [name, obj] : files.objects)
      report.merge(ver::check_condition_N(*c, obj.obj));
    if (report.checks.empty())
      report.add("condition_n", "vacuous", ver::Status::Pass);
  } else if (suite == "torsion-axioms") {
    std::vector<ctx::Obj> torsion, torsion_free;
    for (const auto& [name, obj] : files.objects) {
      if (c->is_torsion(obj.obj)) torsion.push_back(obj.obj);
      if (c->is_torsion_free(obj.obj)) torsion_free.push_back(obj.obj);
    }
    report = ver::check_torsion_theory(*c, torsion, torsion_free, budget);
  } else if (suite == "orthogonality") {
    std::size_t pairs = 0;
    for (const auto& [ename, e] : files.morphisms) {
      auto erec = eng::classify(*c, e.mor, {});
      if (erec.in_Ebar != eng::Flag::True) continue;
      for (const auto& [mname, m] : files.morphisms) {
        auto mrec = eng::classify(*c, m.mor, {});
        if (mrec.in_Mbar != eng::Flag::True) continue;
        ++pairs;
        auto orth = ver::check_orthogonality(*c, e.mor, m.mor, budget);
        auto& check =
            report.add("orthogonality", ename + "|" + mname, orth.status);
        check.details.emplace_back("squares",
                                   std::to_string(orth.squares_examined));
      }
    }
    if (pairs == 0) report.add("orthogonality", "vacuous", ver::Status::Pass);
  } else if (suite == "cover") {
    if (!cover_file) {
      std::cerr << "mlfact: the cover suite requires --cover\n";
      return kExitUsage;
    }
    auto cover = io::read_morphism_file(*cover_file);
    require_kind(tag, cover.kind, *cover_file);
    for (const auto& [name, m] : files.morphisms)
      report.merge(ver::check_cover(*c, ver::CoverSpec{cover.mor}, m.mor));
    if (report.checks.empty())
      report.add("cover", "vacuous", ver::Status::Pass);
  } else {
    std::cerr << "mlfact: unknown suite '" << suite << "'\n";
    return kExitUsage;
  }

  std::cout << report.to_text();
  return report.all_ok() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion-theory factorisation toolkit"};
  app.require_subcommand(1);

  std::string tag, mode = "ml", file, suite, dir;
  std::size_t budget = 200000, samples = 8;
  std::uint64_t seed = 0;
  std::optional<std::string> cover_file;

  auto* fac = app.add_subcommand("factorise", "Factorise a morphism file");
  fac->add_option("--ctx", tag, "Context tag")->required();
  fac->add_option("--mode", mode, "ml or reflective")
      ->check(CLI::IsMember({"ml", "reflective"}));
  fac->add_option("file", file, "Morphism file")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--ctx", tag, "Context tag")->required();
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("dir", dir, "Fixture directory")->required();
  verify->add_option("--budget", budget, "Enumeration budget");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--cover", cover_file, "Cover morphism file");

  auto* cls = app.add_subcommand("classify", "Classify a morphism file");
  cls->add_option("--ctx", tag, "Context tag")->required();
  cls->add_option("file", file, "Morphism file")->required();
  cls->add_option("--samples", samples, "Pullback samples");
  cls->add_option("--seed", seed, "Sampling seed");
  cls->add_option("--budget", budget, "Enumeration budget");
  cls->add_option("--cover", cover_file, "Cover morphism file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mlfact: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (fac->parsed()) return cmd_factorise(tag, file, mode);
    if (verify->parsed())
      return cmd_verify(tag, suite, dir, budget, seed, cover_file);
    return cmd_classify(tag, file, samples, seed, budget, cover_file);
  } catch (const io::parse_error& e) {
    std::cerr << "mlfact: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mlfact::ab::validation_error& e) {
    std::cerr << "mlfact: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const mlfact::grp::validation_error& e) {
    std::cerr << "mlfact: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const mlfact::ring::validation_error& e) {
    std::cerr << "mlfact: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ctx::context_error& e) {
    std::cerr << "mlfact: context mismatch: " << e.what() << "\n";
    return kExitContext;
  } catch (const ctx::unsupported_error& e) {
    std::cerr << "mlfact: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ver::cover_error& e) {
    std::cerr << "mlfact: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const eng::engine_error& e) {
    std::cerr << "mlfact: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "mlfact: internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
