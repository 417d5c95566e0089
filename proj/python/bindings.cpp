#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hollowgh/bitab.hpp"
#include "hollowgh/cli.hpp"
#include "hollowgh/errors.hpp"
#include "hollowgh/ghmod.hpp"
#include "hollowgh/symfun.hpp"

namespace py = pybind11;
using namespace hollowgh;

namespace {

py::object to_int(const Integer& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_fraction(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(v.get_str());
}

py::dict series_dict(const SeriesTable& s) {
  py::dict out;
  for (const auto& [k, c] : s.entries()) out[py::make_tuple(k.first, k.second)] = to_int(c);
  return out;
}

HollowGamma gamma_of(const std::string& text) {
  auto g = HollowGamma::parse(text);
  g.validate();
  return g;
}

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for hollow Garsia-Haiman modules";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

  m.def("gamma_n", [](const std::string& g) { return gamma_of(g).n(); }, py::arg("gamma"));
  m.def(
      "hollow_cells",
      [](const std::string& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& c : hollow_cells(gamma_of(g))) out.emplace_back(c.a, c.b);
        return out;
      },
      py::arg("gamma"));
  m.def(
      "delta", [](const std::string& g, int cap_n) { return delta(hollow_cells(gamma_of(g)), cap_n).to_string(); },
      py::arg("gamma"), py::arg("cap_n") = 7);
  m.def("hilbert_closed", [](const std::string& g) { return series_dict(hilbert_closed(gamma_of(g))); },
        py::arg("gamma"));
  m.def(
      "harmonic_series",
      [](const std::string& g, int cap_n) { return series_dict(harmonic_series(gamma_of(g), Caps{cap_n, 2000})); },
      py::arg("gamma"), py::arg("cap_n") = 6);
  m.def("expected_total", [](const std::string& g) { return to_int(expected_total(gamma_of(g))); }, py::arg("gamma"));
  m.def(
      "verify_independence",
      [](const std::string& g, int cap_n, std::size_t cap_basis) {
        return json_loads(verify_independence(gamma_of(g), Caps{cap_n, cap_basis}).to_json());
      },
      py::arg("gamma"), py::arg("cap_n") = 6, py::arg("cap_basis") = 2000);
  m.def(
      "annihilation_check",
      [](const std::string& g) { return json_loads(annihilation_check(gamma_of(g)).to_json()); }, py::arg("gamma"));
  m.def(
      "straighten",
      [](const std::string& kind, const std::string& left, const std::string& right) {
        if (kind != "det" && kind != "per") throw ParseError(0, "kind must be det or per");
        const auto r = straighten(kind == "det" ? BitabKind::det : BitabKind::per, parse_tableau(left),
                                  parse_afilling(right));
        py::list terms;
        for (const auto& t : r.terms) terms.append(py::make_tuple(to_string(t.t), to_string(t.v), to_fraction(t.coefficient)));
        return terms;
      },
      py::arg("kind"), py::arg("left"), py::arg("right"));
  m.def(
      "bitableau",
      [](const std::string& kind, const std::string& left, const std::string& right) {
        if (kind != "det" && kind != "per") throw ParseError(0, "kind must be det or per");
        return build_bitableau(kind == "det" ? BitabKind::det : BitabKind::per, parse_tableau(left),
                               parse_afilling(right))
            .to_string();
      },
      py::arg("kind"), py::arg("left"), py::arg("right"));
  m.def(
      "domino_count",
      [](const std::vector<int>& lam, const std::vector<int>& mu) { return to_int(domino_count(Partition(lam), Partition(mu))); },
      py::arg("lam"), py::arg("mu"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
