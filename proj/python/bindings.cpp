#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bincollatz/analysis.hpp"
#include "bincollatz/cli.hpp"
#include "bincollatz/errors.hpp"
#include "bincollatz/harness.hpp"
#include "bincollatz/maps.hpp"

namespace py = pybind11;
using namespace bincollatz;

namespace {

// Python ints cross the boundary as decimal text.
BigInt to_big(py::handle value) {
  if (!PyLong_Check(value.ptr())) throw py::type_error("expected an int");
  auto text = py::reinterpret_steal<py::object>(PyObject_Str(value.ptr()));
  if (!text) throw py::error_already_set();
  return BigInt(text.cast<std::string>(), 10);
}

py::int_ to_py(const BigInt& value) {
  const auto text = value.get_str(10);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::object to_fraction(const ExactRational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.num()), to_py(r.den()));
}

// Accepts int and fractions.Fraction (anything with numerator/denominator).
ExactRational from_fraction(const py::handle& value) {
  return {to_big(py::object(value.attr("numerator"))), to_big(py::object(value.attr("denominator")))};
}

py::dict trajectory_dict(const TrajectoryRecord& rec) {
  py::list values;
  for (const auto& v : rec.values) values.append(to_py(v));
  py::dict d;
  d["map"] = std::string(to_string(rec.map_kind));
  d["values"] = values;
  d["lengths"] = rec.lengths;
  d["stopping_time"] = rec.stopping_time;
  d["hailstone_index"] = rec.hailstone_index;
  d["max_length"] = rec.max_length;
  d["max_length_count"] = rec.max_length_count();
  d["odd_steps"] = rec.odd_steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bincollatz, m) {
  m.doc() = "Exact binary-fraction Collatz dynamics";

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<BinaryFraction>(m, "BinaryFraction")
      .def(py::init([](const std::string& bits) { return BinaryFraction::from_bits(bits); }), py::arg("bits"))
      .def_property_readonly("numerator", [](const BinaryFraction& y) { return to_py(y.numerator()); })
      .def_property_readonly("length", &BinaryFraction::length)
      .def_property_readonly("bits", &BinaryFraction::to_bits)
      .def("value", [](const BinaryFraction& y) { return to_fraction(y.value()); })
      .def("is_ground_state", &BinaryFraction::is_ground_state)
      .def("__eq__", [](const BinaryFraction& a, const BinaryFraction& b) { return a == b; })
      .def("__hash__", [](const BinaryFraction& y) { return py::hash(py::str(y.to_bits())); })
      .def("__repr__", [](const BinaryFraction& y) { return "BinaryFraction('" + y.to_bits() + "')"; });

  m.def("collatz_step", [](const py::int_& x) { return to_py(collatz_step(to_big(x))); });
  m.def("reduced_step", [](const py::int_& x) { return to_py(reduced_step(to_big(x))); });
  m.def("embed", [](const py::int_& x) { return embed(to_big(x)); });
  m.def("two_adic_valuation", [](const py::int_& x) { return two_adic_valuation(to_big(x)); });
  m.def("is_predecessor", &is_predecessor);
  m.def("classify_branch", [](const BinaryFraction& y) { return std::string(to_string(classify_branch(y))); });
  m.def("binary_step", py::overload_cast<const BinaryFraction&>(&binary_step));
  m.def("circle_step", [](const py::object& y) { return to_fraction(circle_step(from_fraction(y))); });
  m.def("circle_iterate",
        [](const py::object& y, std::size_t k) { return to_fraction(circle_iterate(from_fraction(y), k)); });
  m.def("circle_preimage", [](const py::object& y) { return to_fraction(circle_preimage(from_fraction(y))); });
  m.def("mu", &mu);
  m.def("critical_point", [](std::size_t k) { return to_fraction(critical_point(k)); });
  m.def("to_decimal", [](const py::object& r, std::size_t digits) { return to_decimal(from_fraction(r), digits); });
  m.def("family_member", [](const std::string& kind, std::size_t k) {
    return family_member({parse_family_tag(kind), k});
  });

  m.def(
      "run_trajectory",
      [](const py::object& start, const std::string& map, std::size_t max_steps) {
        const auto kind = parse_map_kind(map);
        if (py::isinstance<BinaryFraction>(start)) {
          const auto& y = start.cast<const BinaryFraction&>();
          return trajectory_dict(kind == MapKind::Binary ? run_trajectory(y, max_steps)
                                                         : run_trajectory(y.numerator(), kind, max_steps));
        }
        return trajectory_dict(run_trajectory(to_big(start), kind, max_steps));
      },
      py::arg("start"), py::arg("map") = "b", py::arg("max_steps") = 1'000'000);

  m.def("head_tail_classify", [](const BinaryFraction& y) {
    const auto r = head_tail_classify(y);
    py::dict d;
    d["head"] = r.head;
    d["tail"] = r.tail;
    d["predicted_min"] = r.predicted_min;
    d["predicted_max"] = r.predicted_max;
    d["observed_delta"] = r.observed_delta;
    d["branch"] = std::string(to_string(r.branch));
    return d;
  });

  m.def(
      "audit_length_deltas",
      [](std::size_t samples, std::size_t ell, std::uint64_t seed, std::size_t workers) {
        AuditSummary s;
        {
          py::gil_scoped_release release;
          s = audit_length_deltas(samples, ell, seed, workers);
        }
        py::dict d;
        d["samples"] = s.samples;
        d["violations"] = s.violations;
        d["decomposition_failures"] = s.decomposition_failures;
        d["first_witness"] = s.first_witness;
        return d;
      },
      py::arg("samples"), py::arg("ell"), py::arg("seed") = 0, py::arg("workers") = 0);

  m.def("epsilon_bound", [](std::size_t k, std::size_t ell) { return to_fraction(epsilon_bound(k, ell)); });
  m.def(
      "kstar_scan",
      [](std::size_t ell, std::size_t k_max) {
        const auto r = kstar_scan(ell, k_max);
        py::dict d;
        d["ell"] = r.ell;
        d["k_star"] = r.k_star;
        d["c"] = r.c_at_kstar ? to_fraction(*r.c_at_kstar) : py::none();
        d["epsilon"] = r.epsilon_at_kstar ? to_fraction(*r.epsilon_at_kstar) : py::none();
        return d;
      },
      py::arg("ell"), py::arg("k_max") = 1000);

  m.def(
      "verify_range",
      [](std::size_t ell, std::size_t workers, std::uint64_t step_cap) {
        RangeOptions options;
        options.workers = workers;
        options.step_cap = step_cap;
        RangeVerification r;
        {
          py::gil_scoped_release release;
          r = verify_range(ell, options);
        }
        py::dict d;
        d["ell"] = r.ell;
        d["verified_count"] = r.verified_count;
        d["max_stopping_time"] = r.max_stopping_time;
        d["worst_start"] = r.worst_start;
        d["counterexample"] = r.counterexample;
        return d;
      },
      py::arg("ell"), py::arg("workers") = 0, py::arg("step_cap") = 1'000'000);

  m.def(
      "run_cell",
      [](std::size_t ell, std::size_t samples, std::size_t runs, std::uint64_t seed, std::size_t step_cap,
         std::size_t workers) {
        CellSummary c;
        {
          py::gil_scoped_release release;
          c = run_cell(ell, samples, runs, seed, step_cap, workers);
        }
        py::dict d;
        d["length"] = c.length;
        d["samples"] = c.samples;
        d["runs"] = c.runs;
        d["max_length_delta"] = c.max_length_delta;
        d["max_stop_time"] = c.max_stop_time;
        d["capped_count"] = c.capped_count;
        return d;
      },
      py::arg("ell"), py::arg("samples") = 500, py::arg("runs") = 10, py::arg("seed") = 0,
      py::arg("step_cap") = 2'000'000, py::arg("workers") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
