#include <limits>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stanley/lab.hpp"
#include "stanley/partition_engine.hpp"
#include "stanley/report.hpp"

namespace py = pybind11;
using namespace stanley;

namespace {

py::object depth_value(int d) {
  if (d == kInfiniteDepth) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(d);
}

SquarefreeModuleSpec module_of(const QuotientInstance& inst, const std::string& module) {
  if (module == "i-over-j") return SquarefreeModuleSpec::quotient(inst);
  if (module == "s-over-j") return SquarefreeModuleSpec::ring_over_j(inst);
  if (module == "s-over-i") return SquarefreeModuleSpec::ring_over_i(inst);
  throw ArgumentError("module must be i-over-j, s-over-j or s-over-i");
}

std::vector<std::pair<std::string, std::string>> pairs(const IntervalPartition& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& iv : p.intervals()) out.emplace_back(to_string(iv.lo), to_string(iv.hi));
  return out;
}

std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

SdepthOptions sdepth_options(bool trim) {
  SdepthOptions opt;
  opt.trim = trim;
  return opt;
}

std::string paths_report(const QuotientInstance& inst, const std::string& b_text,
                         const std::optional<std::string>& from) {
  const auto b = parse_monomial(b_text, inst.n);
  const auto dropped = default_dropped_index(inst, b);
  if (!dropped) throw ArgumentError(b_text + " lies in no single (f_i)");
  const auto pb = build_pb(inst, b, *dropped);
  json j{{"b", b}, {"dropped", *dropped}, {"built", pb.has_value()}};
  if (pb) {
    j["decoration"] = *pb;
    if (from) j["tug"] = compute_tug(*pb, parse_monomial(*from, inst.n));
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stanley depth and depth of squarefree monomial quotients";

  py::register_exception<Error>(m, "StanleyError", PyExc_ValueError);

  py::class_<QuotientInstance>(m, "Instance")
      .def_static("parse", &parse_instance, py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_instance(path); }, py::arg("path"))
      .def_readonly("n", &QuotientInstance::n)
      .def_readonly("d", &QuotientInstance::d)
      .def_property_readonly("r", &QuotientInstance::r)
      .def_property_readonly("F", [](const QuotientInstance& i) { return strings(i.F); })
      .def_property_readonly("E", [](const QuotientInstance& i) { return strings(i.E); })
      .def_property_readonly("J", [](const QuotientInstance& i) { return strings(i.J.generators()); })
      .def("to_text", &format_instance)
      .def("__eq__", [](const QuotientInstance& a, const QuotientInstance& b) { return a == b; })
      .def("__repr__", [](const QuotientInstance& i) {
        return "<Instance n=" + std::to_string(i.n) + " d=" + std::to_string(i.d) +
               " r=" + std::to_string(i.r()) + ">";
      });

  m.def("poset_size", [](const QuotientInstance& i) { return build_poset(i).size(); });
  m.def("analyze_json", [](const QuotientInstance& i) { return json(analyze(i)).dump(); });

  m.def(
      "sdepth",
      [](const QuotientInstance& i, bool trim) {
        const auto res = sdepth(i, sdepth_options(trim));
        return py::make_tuple(res.value, pairs(res.witness));
      },
      py::arg("instance"), py::arg("trim") = true,
      "Exact Stanley depth and a witness partition as (lo, hi) pairs.");
  m.def(
      "sdepth_decision",
      [](const QuotientInstance& i, int k, bool trim) -> py::object {
        const auto w = sdepth_decision(build_poset(i), k, sdepth_options(trim));
        if (!w) return py::none();
        return py::cast(pairs(*w));
      },
      py::arg("instance"), py::arg("k"), py::arg("trim") = true);
  m.def(
      "brute_force_sdepth",
      [](const QuotientInstance& i, std::size_t bound) { return brute_force_sdepth(build_poset(i), bound); },
      py::arg("instance"), py::arg("bound") = 14);

  m.def(
      "depth",
      [](const QuotientInstance& i, const std::string& field, const std::string& module) {
        return depth_value(depth(module_of(i, module), parse_field(field)));
      },
      py::arg("instance"), py::arg("field") = "gf2", py::arg("module") = "i-over-j");
  m.def(
      "taylor_depth",
      [](const QuotientInstance& i, const std::string& field) {
        return depth_value(taylor_depth_oracle(SquarefreeModuleSpec::quotient(i), parse_field(field)));
      },
      py::arg("instance"), py::arg("field") = "gf2");
  m.def(
      "koszul_json",
      [](const QuotientInstance& i, const std::string& field, const std::string& module) {
        return json(koszul_homology(module_of(i, module), parse_field(field))).dump();
      },
      py::arg("instance"), py::arg("field") = "gf2", py::arg("module") = "i-over-j");

  m.def(
      "verify_json",
      [](const QuotientInstance& i, const std::string& field, bool cross_check, bool lemma_dep) {
        VerifyOptions opt;
        opt.field = parse_field(field);
        opt.cross_check = cross_check;
        opt.lemma_dep = lemma_dep;
        return json(verify_conjecture_case(i, opt)).dump();
      },
      py::arg("instance"), py::arg("field") = "gf2", py::arg("cross_check") = false,
      py::arg("lemma_dep") = false);
  m.def("paths_json", &paths_report, py::arg("instance"), py::arg("b"), py::arg("start") = py::none());
  m.def("canonical_key", [](const QuotientInstance& i) { return canonical_form(i).key; });

  m.def(
      "generate",
      [](const std::string& config_text) { return generate_instances(parse_campaign_config(config_text)); },
      py::arg("config_text"));
  m.def(
      "campaign_json",
      [](const std::string& config_text, unsigned jobs, bool write_files) {
        const auto config = parse_campaign_config(config_text);
        py::gil_scoped_release release;
        return json(run_campaign(config, jobs, write_files)).dump();
      },
      py::arg("config_text"), py::arg("jobs") = 1, py::arg("write_files") = false);
}
