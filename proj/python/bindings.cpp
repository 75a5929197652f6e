#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "closetlab/analysis.hpp"
#include "closetlab/errors.hpp"
#include "closetlab/fixtures.hpp"
#include "closetlab/search.hpp"
#include "closetlab/structure_io.hpp"

namespace py = pybind11;
using namespace closetlab;

namespace {

Subset checked_mask(const ParsedSpace& s, std::uint32_t mask) {
  Subset a(mask);
  if (!s.closet->universe().contains(a)) throw py::value_error("mask has bits outside the universe");
  return a;
}

std::vector<std::pair<std::string, std::string>> way_below_pairs(const ParsedSpace& s) {
  const auto& u = s.closet->universe();
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [x, y] : way_below(*s.closet).pairs()) out.emplace_back(u.name(x), u.name(y));
  return out;
}

}  // namespace

PYBIND11_MODULE(_closetlab, m) {
  m.doc() = "Finite enriched closure spaces";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidStructure>(m, "InvalidStructure", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapError>(m, "CapError", base.ptr());

  py::class_<ParsedSpace>(m, "Space")
      .def_static("from_json", &parse_space_text, py::arg("text"))
      .def_static("from_file", &parse_space_file, py::arg("path"))
      .def_static(
          "fixture", [](const std::string& name) { return parse_space(Json{{"fixture", name}}); }, py::arg("name"))
      .def_readonly("name", &ParsedSpace::name)
      .def_property_readonly("elements", [](const ParsedSpace& s) { return s.closet->universe().names(); })
      .def_property_readonly("map_names",
                             [](const ParsedSpace& s) {
                               std::vector<std::string> out;
                               for (const auto& nm : s.maps) out.push_back(nm.name);
                               return out;
                             })
      .def("__len__", [](const ParsedSpace& s) { return s.closet->size(); })
      .def("bracket",
           [](const ParsedSpace& s, std::uint32_t a) { return s.closet->bracket()(checked_mask(s, a)).bits(); })
      .def("c", [](const ParsedSpace& s, std::uint32_t a) { return s.closet->c()(checked_mask(s, a)).bits(); })
      .def("way_below", &way_below_pairs)
      .def("is_continuous", [](const ParsedSpace& s) { return is_continuous(*s.closet).continuous; })
      .def("is_interpolating", [](const ParsedSpace& s) { return is_interpolating(*s.closet).interpolating; })
      .def("to_json", [](const ParsedSpace& s) { return serialize_space(s).dump(); })
      .def(
          "analyze_json",
          [](const ParsedSpace& s, unsigned galois_cap) {
            AnalysisOptions o;
            o.galois_cap = galois_cap;
            py::gil_scoped_release release;
            return report_json(analyze(s, o)).dump();
          },
          py::arg("galois_cap") = kDefaultGaloisCap)
      .def(
          "check_json",
          [](const ParsedSpace& s, const std::string& name) {
            if (!is_checker_name(name)) throw py::value_error("unknown checker '" + name + "'");
            return report_json(analyze_only(s, name)).dump();
          },
          py::arg("name"));

  m.def("fixture_names", [] {
    auto out = closet_fixture_names();
    for (const auto& n : order_fixture_names()) out.push_back(n);
    return out;
  });
  m.def("checker_names", &checker_names);
  m.def("theorem_checker_names", &theorem_checker_names);
  m.def("operator_kinds", &operator_kinds);
  m.def(
      "search_json",
      [](unsigned min_size, unsigned max_size, std::uint64_t samples, std::uint64_t seed, bool exhaustive,
         std::vector<std::string> kinds, std::vector<std::string> targets, unsigned threads, bool minimize) {
        SearchConfig c;
        c.min_size = min_size;
        c.max_size = max_size;
        c.samples = samples;
        c.seed = seed;
        c.exhaustive = exhaustive;
        c.kinds = std::move(kinds);
        c.targets = std::move(targets);
        c.threads = threads;
        c.minimize = minimize;
        py::gil_scoped_release release;
        return search_json(search(c)).dump();
      },
      py::arg("min_size"), py::arg("max_size"), py::arg("samples") = 100, py::arg("seed") = 0,
      py::arg("exhaustive") = false, py::arg("kinds") = std::vector<std::string>{},
      py::arg("targets") = std::vector<std::string>{}, py::arg("threads") = 0, py::arg("minimize") = true);
}
