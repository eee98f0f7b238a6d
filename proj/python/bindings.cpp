#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ebs/continuity.hpp"
#include "ebs/json_io.hpp"
#include "ebs/oracle.hpp"
#include "ebs/semigroup.hpp"
#include "ebs/topology.hpp"
#include "ebs/verify.hpp"

namespace py = pybind11;
using namespace ebs;
using json_io::json;

namespace {

// Elements cross the boundary as 0 or an (a, b) tuple; structured values
// as JSON text, decoded on the Python side.
Element to_element(const py::object& o) {
  if (py::isinstance<py::int_>(o)) {
    if (o.cast<Int>() != 0) throw ParseError("the only integer element is 0");
    return Element::zero();
  }
  const auto t = o.cast<std::vector<Int>>();
  if (t.size() != 2) throw ParseError("an element is 0 or a pair (a, b)");
  return Element{t[0], t[1]};
}

Pair to_pair(const py::object& o) {
  const Element e = to_element(o);
  if (e.is_zero()) throw DomainError("expected a pair, got 0");
  return e.pair();
}

py::object from_element(const Element& x) {
  if (x.is_zero()) return py::int_(0);
  return py::make_tuple(x.a(), x.b());
}

py::list from_elements(const std::vector<Element>& xs) {
  py::list out;
  for (const Element& x : xs) out.append(from_element(x));
  return out;
}

TopologySpec topology(const std::string& text) { return json_io::topology_from_json(json_io::parse(text)); }

NbhdDescriptor nbhd(const TopologySpec& spec, const std::string& text) {
  return json_io::nbhd_from_json(spec, json_io::parse(text));
}

Side side(const std::string& s) { return parse_side(s); }

}  // namespace

PYBIND11_MODULE(_ebs, m) {
  m.doc() = "Extended bicyclic semigroup with adjoined zero";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "ArithmeticOverflow", PyExc_OverflowError);

  m.def("multiply", [](const py::object& x, const py::object& y) {
    return from_element(multiply(to_element(x), to_element(y)));
  });
  m.def("invert", [](const py::object& x) { return from_element(invert(to_element(x))); });
  m.def("leq", [](const py::object& x, const py::object& y) { return leq(to_element(x), to_element(y)); });
  m.def("is_idempotent", [](const py::object& x) { return is_idempotent(to_element(x)); });
  m.def("parse_element", [](const std::string& s) { return from_element(parse_element(s)); });
  m.def("difference_hom", [](const py::object& x) { return difference_hom(to_element(x)); });
  m.def("quotient_mod", [](Int mod, const py::object& x) { return quotient_mod(mod, to_element(x)); });

  m.def("solve_left", [](const py::object& f, const py::object& t) {
    return json_io::to_json(solve_left(to_pair(f), to_pair(t))).dump();
  });
  m.def("solve_right", [](const py::object& f, const py::object& t) {
    return json_io::to_json(solve_right(to_pair(f), to_pair(t))).dump();
  });

  m.def("d_member", [](const std::string& topo, const py::object& x) {
    return d_member(topology(topo).d_set(), to_element(x));
  });
  m.def("upset_minus_d", [](const std::string& topo, const py::object& apex) {
    return from_elements(upset_minus_d(topology(topo).d_set(), UpSet{to_pair(apex)}));
  });
  m.def("nbhd_member", [](const std::string& topo, const std::string& u, const py::object& x) {
    const TopologySpec spec = topology(topo);
    return nbhd_member(nbhd(spec, u), to_element(x));
  });
  m.def("nbhd_difference", [](const std::string& topo, const std::string& u, const std::string& v) {
    const TopologySpec spec = topology(topo);
    return from_elements(nbhd_difference(nbhd(spec, u), nbhd(spec, v)));
  });
  m.def("corner_tail", [](const std::string& topo, const std::string& u, Int n) {
    const TopologySpec spec = topology(topo);
    return json_io::to_json(corner_tail(nbhd(spec, u), n)).dump();
  });
  m.def("corner_complement", [](const std::string& topo, const std::string& u, Int n) {
    const TopologySpec spec = topology(topo);
    return json_io::to_json(corner_complement(nbhd(spec, u), n)).dump();
  });
  m.def("shift_witness",
        [](const std::string& topo, const py::object& element, const std::string& s, const std::string& u,
           std::optional<Int> window) {
          const TopologySpec spec = topology(topo);
          ShiftWitness w = shift_witness(spec, to_pair(element), side(s), nbhd(spec, u));
          if (window) {
            if (auto bad = oracle::witness_counterexample(w, oracle::Window{*window})) {
              throw DomainError("witness fails at " + to_string(*bad));
            }
            w.verified_window = *window;
          }
          return json_io::to_json(w).dump();
        },
        py::arg("topology"), py::arg("element"), py::arg("side"), py::arg("nbhd"), py::arg("window") = py::none());
  m.def("compare_at_zero", [](const std::string& coarse, const std::string& fine, const std::string& probe, Int window) {
    const TopologySpec c = topology(coarse);
    return json_io::to_json(compare_at_zero(c, topology(fine), nbhd(c, probe), window)).dump();
  });
  m.def("distinctness_certificate", [](const std::string& s1, const std::string& s2, Int window) -> py::object {
    const auto p = distinctness_certificate(json_io::sequence_pair_from_json(json_io::parse(s1)),
                                            json_io::sequence_pair_from_json(json_io::parse(s2)), window);
    if (!p) return py::none();
    return from_element(*p);
  });
  m.def("run_verification", [](Int window) {
    py::list out;
    for (const auto& r : run_verification(window)) out.append(py::make_tuple(r.name, r.passed, r.detail));
    return out;
  });
}
