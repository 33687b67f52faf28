#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "regsys/error.hpp"
#include "regsys/fixtures.hpp"
#include "regsys/fuzz.hpp"
#include "regsys/io.hpp"
#include "regsys/orbit.hpp"
#include "regsys/serial.hpp"

namespace py = pybind11;
using namespace regsys;

namespace {

Rational rational_from(const py::handle& obj) {
  if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  if (py::isinstance<py::bool_>(obj)) throw py::type_error("booleans are not time values");
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return Rational(obj.attr("numerator").cast<std::int64_t>(), obj.attr("denominator").cast<std::int64_t>());
  }
  throw py::type_error("expected int, str 'p/q', fractions.Fraction or Rational");
}

BoolVec bits_from(const py::handle& obj) {
  if (py::isinstance<BoolVec>(obj)) return obj.cast<BoolVec>();
  return BoolVec::parse(obj.cast<std::string>());
}

template <typename T>
T from_json_text(const std::string& text, T (*convert)(const io::json&)) {
  io::json j;
  try {
    j = io::json::parse(text);
  } catch (const io::json::exception& e) {
    throw ParseError(e.what());
  }
  return convert(j);
}

std::vector<Signal> members(const SignalSet& s) { return s.members(); }

std::string csv(const Signal& x, const py::handle& horizon) {
  std::ostringstream out;
  io::write_csv(out, x, rational_from(horizon));
  return out.str();
}

py::dict report_dict(const VerificationReport& report) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(io::to_json(report).dump());
}

py::dict sweep_dict(const fuzz::SweepOutcome& o) {
  py::dict d;
  d["checked"] = o.checked;
  d["failed"] = o.failed;
  d["passed"] = o.passed();
  d["first_failure"] = o.first_failure ? py::cast(*o.first_failure) : py::none();
  d["first_failure_summary"] = o.first_failure_report ? py::cast(summarize(*o.first_failure_report)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_regsys, m) {
  m.doc() = "Regular asynchronous Boolean systems: orbits and serial connection";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", error);
  py::register_exception<OrderingError>(m, "OrderingError", error);
  py::register_exception<NotProgressiveError>(m, "NotProgressiveError", error);
  py::register_exception<CoverageError>(m, "CoverageError", error);
  py::register_exception<UnknownInputError>(m, "UnknownInputError", error);
  py::register_exception<CompositionError>(m, "CompositionError", error);
  py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<OverflowError>(m, "OverflowError", error);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::object& v) { return rational_from(v); }), py::arg("value"))
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("fraction",
           [](const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.num(), r.den()); })
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__eq__", [](const Rational& a, const py::object& b) { return a == rational_from(b); })
      .def("__lt__", [](const Rational& a, const py::object& b) { return a < rational_from(b); })
      .def("__hash__", [](const Rational& r) { return py::hash(py::make_tuple(r.num(), r.den())); });
  py::implicitly_convertible<py::int_, Rational>();
  py::implicitly_convertible<py::str, Rational>();

  py::class_<BoolVec>(m, "BoolVec")
      .def(py::init([](const std::string& bits) { return BoolVec::parse(bits); }), py::arg("bits"))
      .def_property_readonly("width", &BoolVec::width)
      .def_property_readonly("code", &BoolVec::code)
      .def("__getitem__",
           [](const BoolVec& v, std::size_t i) {
             if (i >= v.width()) throw py::index_error();
             return v[i];
           })
      .def("__len__", &BoolVec::width)
      .def("__str__", &BoolVec::str)
      .def("__repr__", [](const BoolVec& v) { return "BoolVec('" + v.str() + "')"; })
      .def("__eq__", [](const BoolVec& a, const py::object& b) { return a == bits_from(b); })
      .def("__hash__", [](const BoolVec& v) { return py::hash(py::make_tuple(v.width(), v.code())); });

  py::class_<GeneratorFn>(m, "GeneratorFn")
      .def(py::init<std::size_t, std::size_t, std::vector<std::uint32_t>>(), py::arg("state_width"),
           py::arg("input_width"), py::arg("table"))
      .def_static("identity", &GeneratorFn::identity, py::arg("state_width"), py::arg("input_width"))
      .def_static("enumerate", &GeneratorFn::enumerate, py::arg("state_width"), py::arg("input_width"),
                  py::arg("k"))
      .def_static("generator_count", &GeneratorFn::generator_count)
      .def_property_readonly("state_width", &GeneratorFn::state_width)
      .def_property_readonly("input_width", &GeneratorFn::input_width)
      .def_property_readonly("table", &GeneratorFn::table)
      .def_property_readonly("is_serial", &GeneratorFn::is_serial)
      .def("__call__", [](const GeneratorFn& g, const py::object& mu, const py::object& lambda) {
        return g.eval(bits_from(mu), bits_from(lambda));
      })
      .def("__eq__", [](const GeneratorFn& a, const GeneratorFn& b) { return a == b; });

  py::class_<Signal>(m, "Signal")
      .def_static("constant", [](const py::object& v) { return Signal::constant(bits_from(v)); })
      .def_static("from_json", [](const std::string& text) { return from_json_text(text, io::signal_from_json); })
      .def_property_readonly("width", &Signal::width)
      .def_property_readonly("initial", &Signal::initial)
      .def_property_readonly("is_periodic", [](const Signal& x) { return x.periodic() != nullptr; })
      .def("__call__", [](const Signal& x, const py::object& t) { return x.at(rational_from(t)); })
      .def("to_json", [](const Signal& x) { return io::to_json(x).dump(); })
      .def("csv", &csv, py::arg("horizon"))
      .def("__str__", [](const Signal& x) { return to_string(x); })
      .def("__repr__", [](const Signal& x) { return "Signal('" + to_string(x) + "')"; })
      .def("__eq__", [](const Signal& a, const Signal& b) { return signals_equal(a, b); });

  py::class_<ProgressiveFn>(m, "ProgressiveFn")
      .def_static("from_json",
                  [](const std::string& text) { return from_json_text(text, io::progressive_from_json); })
      .def_property_readonly("width", &ProgressiveFn::width)
      .def("__call__", [](const ProgressiveFn& p, const py::object& t) { return p.at(rational_from(t)); })
      .def("to_json", [](const ProgressiveFn& p) { return io::to_json(p).dump(); })
      .def("__eq__", [](const ProgressiveFn& a, const ProgressiveFn& b) { return progressive_equal(a, b); });

  py::class_<RegularSystem>(m, "RegularSystem")
      .def_property_readonly("generator", &RegularSystem::generator)
      .def_property_readonly("inputs", &RegularSystem::inputs)
      .def_property_readonly("state_width", &RegularSystem::state_width)
      .def_property_readonly("input_width", &RegularSystem::input_width)
      .def("initial_states", &RegularSystem::initial_states, py::arg("input_index"))
      .def(
          "computations",
          [](const RegularSystem& f, const py::object& mu, std::size_t k) { return f.computations(bits_from(mu), k); },
          py::arg("mu"), py::arg("input_index"))
      .def("to_json", [](const RegularSystem& f) { return io::to_json(f).dump(); });

  m.def("load_generator", &io::load_generator, py::arg("path"));
  m.def("load_signal", &io::load_signal, py::arg("path"));
  m.def("load_progressive", &io::load_progressive, py::arg("path"));
  m.def("load_system", &io::load_system, py::arg("path"));

  m.def(
      "masked_update",
      [](const GeneratorFn& g, const py::object& nu, const py::object& mu, const py::object& lambda) {
        return g.masked_update(bits_from(nu), bits_from(mu), bits_from(lambda));
      },
      py::arg("g"), py::arg("nu"), py::arg("mu"), py::arg("lambda_"));
  m.def("compose_serial", &compose_serial, py::arg("upstream"), py::arg("downstream"));
  m.def("canonicalize", [](const Signal& x) { return canonicalize(x); });
  m.def("signals_equal", &signals_equal);
  m.def("product_signal", &product_signal);
  m.def("product_progressive", &product_progressive);
  m.def(
      "orbit",
      [](const GeneratorFn& g, const ProgressiveFn& rho, const py::object& mu, const Signal& u) {
        return orbit(g, rho, bits_from(mu), u);
      },
      py::arg("g"), py::arg("rho"), py::arg("mu"), py::arg("u"));
  m.def(
      "orbit_trace",
      [](const GeneratorFn& g, const ProgressiveFn& rho, const py::object& mu, const Signal& u, std::size_t count) {
        auto trace = orbit_trace(g, rho, bits_from(mu), u, count);
        py::list events;
        for (const auto& e : trace.events) {
          events.append(py::make_tuple(e.t, e.rho_value, e.input_value, e.state_after));
        }
        return py::make_tuple(events, trace.result);
      },
      py::arg("g"), py::arg("rho"), py::arg("mu"), py::arg("u"), py::arg("count"));

  m.def(
      "evaluate_system", [](const RegularSystem& f, std::size_t k) { return members(evaluate_system(f, k)); },
      py::arg("f"), py::arg("input_index"));
  m.def(
      "serial_set_oracle",
      [](const RegularSystem& f, const RegularSystem& h, std::size_t k) { return members(serial_set_oracle(f, h, k)); },
      py::arg("f"), py::arg("h"), py::arg("input_index"));
  m.def(
      "serial_regular",
      [](const RegularSystem& f, const RegularSystem& h, std::size_t k, const std::string& variant) {
        return members(serial_regular(f, h, k, serial_variant_from_string(variant)));
      },
      py::arg("f"), py::arg("h"), py::arg("input_index"), py::arg("variant") = "faithful");
  m.def("check_lemma6",
        [](const GeneratorFn& phi, const GeneratorFn& psi, const py::object& mu, const py::object& delta,
           const ProgressiveFn& rho, const ProgressiveFn& rho2,
           const Signal& u) { return check_lemma6(phi, psi, bits_from(mu), bits_from(delta), rho, rho2, u); });
  m.def(
      "verify_serial_theorem",
      [](const RegularSystem& f, const RegularSystem& h, const std::string& variant) {
        return report_dict(verify_serial_theorem(f, h, serial_variant_from_string(variant)));
      },
      py::arg("f"), py::arg("h"), py::arg("variant") = "faithful");
  m.def(
      "fuzz_serial",
      [](std::size_t n, std::size_t m_, std::size_t p, std::size_t count, std::uint64_t seed,
         const std::string& variant) {
        return sweep_dict(fuzz::fuzz_serial(n, m_, p, count, seed, serial_variant_from_string(variant)));
      },
      py::arg("n"), py::arg("m"), py::arg("p"), py::arg("count"), py::arg("seed"), py::arg("variant") = "faithful");
  m.def(
      "exhaustive_serial",
      [](std::size_t n, std::size_t m_, std::size_t p, const std::string& variant) {
        return sweep_dict(fuzz::exhaustive_serial(n, m_, p, serial_variant_from_string(variant)));
      },
      py::arg("n") = 1, py::arg("m") = 1, py::arg("p") = 1, py::arg("variant") = "faithful");

  py::module_ fx = m.def_submodule("fixtures", "Small deterministic schedules and systems");
  fx.def("integer_ticks", &fixtures::integer_ticks, py::arg("width"));
  fx.def("even_ticks", &fixtures::even_ticks, py::arg("width"));
  fx.def("odd_ticks", &fixtures::odd_ticks, py::arg("width"));
  fx.def("third_ticks", &fixtures::third_ticks, py::arg("width"));
  fx.def("standard_inputs", &fixtures::standard_inputs, py::arg("width"));
  fx.def("standard_upstream", &fixtures::standard_upstream, py::arg("phi"));
  fx.def("standard_downstream", &fixtures::standard_downstream, py::arg("f"), py::arg("psi"));
}
