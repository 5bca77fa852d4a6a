#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlfact/engine.hpp"
#include "mlfact/io.hpp"
#include "mlfact/verifier.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace py = pybind11;
namespace ctx = mlfact::ctx;
namespace eng = mlfact::eng;
namespace io = mlfact::io;
namespace ver = mlfact::ver;

namespace {

struct ObjHandle {
  ctx::Obj obj;
  io::Kind kind;
};

struct MorHandle {
  ctx::Mor mor;
  io::Kind kind;
};

struct CtxHandle {
  ctx::ContextPtr c;

  const ctx::TorsionContext& get() const { return *c; }
};

std::string flag(eng::Flag f) { return eng::flag_name(f); }

py::dict classify_dict(const eng::ClassificationRecord& rec) {
  py::dict d;
  d["in_E"] = flag(rec.in_E);
  d["in_Ebar"] = flag(rec.in_Ebar);
  d["in_Mbar"] = flag(rec.in_Mbar);
  d["in_M"] = flag(rec.in_M);
  d["in_Eprime_sampled"] = flag(rec.in_Eprime_sampled);
  d["in_Mstar_assumed"] = flag(rec.in_Mstar_assumed);
  d["eprime_samples_run"] = rec.eprime_samples_run;
  d["mstar_certified"] = rec.mstar_certified;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Torsion theories and monotone-light factorisation systems";

  py::register_exception<io::parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ctx::context_error>(m, "ContextError",
                                             PyExc_TypeError);
  py::register_exception<ctx::unsupported_error>(m, "UnsupportedError",
                                                 PyExc_ValueError);

  py::class_<ObjHandle>(m, "Object")
      .def_property_readonly(
          "kind", [](const ObjHandle& o) { return io::kind_name(o.kind); })
      .def("text",
           [](const ObjHandle& o) {
             return io::print_object({o.kind, o.obj});
           })
      .def("__repr__", [](const ObjHandle& o) {
        return std::string("<Object kind=") + io::kind_name(o.kind) + ">";
      });

  py::class_<MorHandle>(m, "Morphism")
      .def_property_readonly(
          "kind", [](const MorHandle& f) { return io::kind_name(f.kind); })
      .def("__repr__", [](const MorHandle& f) {
        return std::string("<Morphism kind=") + io::kind_name(f.kind) + ">";
      });

  py::class_<CtxHandle>(m, "Context")
      .def_property_readonly("tag",
                             [](const CtxHandle& c) { return c.get().tag(); })
      .def("describe",
           [](const CtxHandle& c, const ObjHandle& o) {
             return c.get().describe_object(o.obj);
           })
      .def("describe_morphism",
           [](const CtxHandle& c, const MorHandle& f) {
             return c.get().describe_morphism(f.mor);
           })
      .def("order",
           [](const CtxHandle& c, const ObjHandle& o) -> py::object {
             try {
               std::ostringstream os;
               os << c.get().object_order(o.obj);
               return py::int_(py::str(os.str()));
             } catch (const ctx::unsupported_error&) {
               return py::none();
             }
           })
      .def("is_torsion",
           [](const CtxHandle& c, const ObjHandle& o) {
             return c.get().is_torsion(o.obj);
           })
      .def("is_torsion_free",
           [](const CtxHandle& c, const ObjHandle& o) {
             return c.get().is_torsion_free(o.obj);
           })
      .def("radical",
           [](const CtxHandle& c, const ObjHandle& o) {
             auto r = c.get().radical(o.obj);
             py::dict d;
             d["torsion"] = ObjHandle{r.torsion, o.kind};
             d["reflection"] = ObjHandle{r.reflection, o.kind};
             d["counit"] = MorHandle{r.counit, o.kind};
             d["unit"] = MorHandle{r.unit, o.kind};
             return d;
           })
      .def("identity",
           [](const CtxHandle& c, const ObjHandle& o) {
             return MorHandle{c.get().identity(o.obj), o.kind};
           })
      .def("ml_factorise",
           [](const CtxHandle& c, const MorHandle& f) {
             auto fac = eng::ml_factorise(c.get(), f.mor);
             py::dict d;
             d["middle"] = ObjHandle{fac.middle, f.kind};
             d["q"] = MorHandle{fac.q, f.kind};
             d["m"] = MorHandle{fac.m, f.kind};
             d["kernel_witness"] = MorHandle{fac.kernel_witness, f.kind};
             return d;
           })
      .def("reflective_factorise",
           [](const CtxHandle& c, const MorHandle& f) {
             auto fac = eng::reflective_factorise(c.get(), f.mor);
             py::dict d;
             d["middle"] = ObjHandle{fac.middle, f.kind};
             d["e"] = MorHandle{fac.e, f.kind};
             d["m"] = MorHandle{fac.m, f.kind};
             return d;
           })
      .def(
          "classify",
          [](const CtxHandle& c, const MorHandle& f, std::size_t samples,
             std::uint64_t seed) {
            eng::ClassifyOptions options;
            options.pullback_samples = samples;
            options.seed = seed;
            return classify_dict(eng::classify(c.get(), f.mor, options));
          },
          py::arg("morphism"), py::arg("samples") = 8, py::arg("seed") = 0)
      .def(
          "check_orthogonality",
          [](const CtxHandle& c, const MorHandle& e, const MorHandle& m,
             std::size_t budget) {
            auto rep = ver::check_orthogonality(c.get(), e.mor, m.mor, budget);
            py::dict d;
            d["status"] = ver::status_name(rep.status);
            d["squares_examined"] = rep.squares_examined;
            return d;
          },
          py::arg("e"), py::arg("m"), py::arg("budget") = 200000)
      .def("check_condition_n", [](const CtxHandle& c, const ObjHandle& o) {
        return ver::check_condition_N(c.get(), o.obj).to_text();
      });

  m.def("make_context",
        [](const std::string& tag) { return CtxHandle{ctx::make_context(tag)}; });

  m.def("parse_object", [](const std::string& text) {
    auto parsed = io::parse_object(text);
    return ObjHandle{parsed.obj, parsed.kind};
  });
  m.def("read_object", [](const std::string& path) {
    auto parsed = io::read_object_file(path);
    return ObjHandle{parsed.obj, parsed.kind};
  });
  m.def("read_morphism", [](const std::string& path) {
    auto parsed = io::read_morphism_file(path);
    return MorHandle{parsed.mor, parsed.kind};
  });
}
