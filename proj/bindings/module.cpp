// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "concord/compiler.hpp"
#include "concord/explain.hpp"
#include "concord/output.hpp"
#include "concord/parser.hpp"

namespace py = pybind11;

namespace {

using concord::Compiled;
using concord::Extension;
using concord::Scenario;

/// Structured documents cross into Python as plain dicts/lists.
py::object to_py(const nlohmann::ordered_json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Extension as_extension(const std::vector<std::string>& members) {
  Extension e{members};
  std::sort(e.members.begin(), e.members.end());
  return e;
}

std::vector<std::vector<std::string>> extension_list(const std::vector<Extension>& list) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : list) out.push_back(e.members);
  return out;
}

concord::ExplainTarget resolve_target(const Compiled& compiled, const std::string& raw) {
  if (!compiled.structured() || compiled.vf.framework.has_argument(raw)) {
    return concord::ExplainTarget::for_argument(raw);
  }
  return concord::ExplainTarget::for_literal(concord::literal_from_string(raw));
}

}  // namespace

PYBIND11_MODULE(concord, m) {
  m.doc() =
      "Value-driven normative argumentation: scenarios, extension semantics, "
      "agreement selection and explanations.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const concord::IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    } catch (const concord::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const concord::CompileError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const concord::DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Scenario>(m, "Scenario")
      .def_property_readonly("name", [](const Scenario& s) { return s.name; })
      .def_property_readonly(
          "kind", [](const Scenario& s) { return std::string(concord::to_string(s.kind)); })
      .def("summary",
           [](const Scenario& s) { return to_py(concord::scenario_summary_json(s)); },
           "Statement counts, keyed like the check command's summary")
      .def("serialize", [](const Scenario& s) { return concord::serialize_scenario(s); },
           "Canonical scenario text; parsing it back yields an equal scenario")
      .def("__repr__", [](const Scenario& s) {
        return "<Scenario " + s.name + " (" + concord::to_string(s.kind) + ")>";
      });

  py::class_<Compiled>(m, "Compiled")
      .def_property_readonly("structured", &Compiled::structured)
      .def_property_readonly("arguments",
                             [](const Compiled& c) { return c.vf.framework.arguments(); })
      .def_property_readonly("attacks",
                             [](const Compiled& c) { return c.vf.framework.attacks(); })
      .def_property_readonly("practical",
                             [](const Compiled& c) { return c.vf.practical; })
      .def("values_of",
           [](const Compiled& c, const std::string& id) {
             const auto it = c.vf.val.find(id);
             if (it == c.vf.val.end()) return std::set<std::string>{};
             return it->second;
           },
           py::arg("argument"), "Values promoted by a practical argument")
      .def("conclusion_of",
           [](const Compiled& c, const std::string& id) -> py::object {
             const auto* arg = c.find(id);
             if (arg == nullptr) return py::none();
             return py::str(arg->conclusion.str());
           },
           py::arg("argument"),
           "What a constructed argument concludes; None for abstract scenarios")
      .def("extensions",
           [](const Compiled& c, const std::string& semantics) {
             return extension_list(concord::extensions(
                 c.vf.framework, concord::semantics_from_string(semantics)));
           },
           py::arg("semantics") = "preferred")
      .def("extension_values",
           [](const Compiled& c, const std::vector<std::string>& members) {
             return concord::extension_values(c.vf, as_extension(members));
           },
           py::arg("members"))
      .def("acceptance",
           [](const Compiled& c, const std::string& id, const std::string& semantics) {
             return std::string(concord::to_string(concord::acceptance_status(
                 c.vf.framework, concord::semantics_from_string(semantics), id)));
           },
           py::arg("argument"), py::arg("semantics") = "preferred",
           "skeptical, credulous or rejected")
      .def("agree",
           [](const Compiled& c, const std::string& semantics,
              const std::string& principle) {
             const auto winners = concord::maximal_agreement(
                 c.vf, concord::semantics_from_string(semantics),
                 concord::principle_from_string(principle));
             py::dict out;
             out["winners"] = extension_list(winners);
             out["winning"] = winners.front().members;
             out["tie"] = winners.size() > 1;
             return out;
           },
           py::arg("semantics") = "preferred", py::arg("principle") = "democratic",
           "Extensions whose value set no other extension strictly outranks")
      .def("explain",
           [](const Compiled& c, const std::string& target, const std::string& semantics,
              const std::string& principle) {
             const auto explanation = concord::explain_decision(
                 c, concord::semantics_from_string(semantics),
                 concord::principle_from_string(principle), resolve_target(c, target));
             return to_py(concord::explanation_json(explanation));
           },
           py::arg("target"), py::arg("semantics") = "preferred",
           py::arg("principle") = "democratic",
           "Full explanation document; key 'text' holds the rendered transcript")
      .def("oracle_check",
           [](const Compiled& c, std::size_t cap) {
             for (const auto semantics :
                  {concord::Semantics::Grounded, concord::Semantics::Complete,
                   concord::Semantics::Preferred}) {
               if (concord::extensions(c.vf.framework, semantics) !=
                   concord::oracle_extensions(c.vf.framework, semantics, cap)) {
                 return false;
               }
             }
             return true;
           },
           py::arg("cap") = std::size_t{16},
           "Cross-checks the solver against the brute-force reference")
      .def("__repr__", [](const Compiled& c) {
        return "<Compiled " + c.scenario.name + ", " +
               std::to_string(c.vf.framework.size()) + " argument(s)>";
      });

  m.def("parse", &concord::parse_scenario, py::arg("text"),
        "Parses scenario text; ValueError carries line:column on rejection");
  m.def("load_scenario", &concord::load_scenario_file, py::arg("path"));
  m.def("serialize", &concord::serialize_scenario, py::arg("scenario"));
  m.def(
      "realize",
      [](const Scenario& s, std::size_t max_arguments) {
        concord::CompileOptions options;
        options.max_arguments = max_arguments;
        return concord::realize(s, options);
      },
      py::arg("scenario"), py::arg("max_arguments") = std::size_t{10000},
      "Abstract scenarios load directly; structured ones compile their norms");
}
