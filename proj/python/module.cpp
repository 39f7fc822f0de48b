#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcval/cli.hpp"
#include "pcval/seq_io.hpp"
#include "pcval/topology.hpp"

namespace py = pybind11;
using namespace pcval;

namespace {

Backend make_backend(const std::string& spec) {
  if (spec == "q") return Backend::q();
  if (spec.rfind("fp:", 0) == 0) return Backend::fp(std::stol(spec.substr(3)));
  throw parse_error("backend must be \"q\" or \"fp:<p>\"", 0);
}

// A sequence argument is a fixture name, an @path, or inline JSON.
PCSeq resolve(const std::string& spec, const Backend& b, long max_index) {
  if (!spec.empty() && spec.front() == '{') return parse_sequence_spec(spec, "seq", b, max_index);
  if (!spec.empty() && spec.front() == '@') return load_sequence_spec(spec.substr(1), b, max_index);
  return PCSeq::fixture(spec, b, max_index);
}

cli::SessionConfig config_of(const std::string& backend, long max_index, long depth) {
  cli::SessionConfig cfg;
  cfg.backend = make_backend(backend);
  cfg.max_index = max_index;
  cfg.depth = depth;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Valuations attached to pseudo-convergent sequences over Q(t^Q) and F_p(t^Q)";
  m.attr("__version__") = "0.1.0";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<pole_error>(m, "PoleError", PyExc_ArithmeticError);

  py::class_<cli::RunResult>(m, "RunResult")
      .def_readonly("status", &cli::RunResult::status)
      .def_readonly("out", &cli::RunResult::out)
      .def_readonly("err", &cli::RunResult::err)
      .def("__repr__", [](const cli::RunResult& r) {
        return "RunResult(status=" + std::to_string(r.status) + ")";
      });

  m.def(
      "run",
      [](const std::string& command, const std::vector<std::string>& args,
         const std::string& backend, long max_index, long depth) {
        return cli::run(command, args, config_of(backend, max_index, depth));
      },
      py::arg("command"), py::arg("args") = std::vector<std::string>{}, py::arg("backend") = "q",
      py::arg("max_index") = 64, py::arg("depth") = 40,
      "Run a command as the pcval binary would and capture status and output");

  m.def("commands", [] { return cli::command_names(); });

  m.def(
      "val",
      [](const std::string& expr, const std::string& backend) {
        return FieldElem::parse(expr, make_backend(backend)).val().to_string();
      },
      py::arg("expr"), py::arg("backend") = "q", "Least exponent of a ground-field element");

  m.def(
      "we",
      [](const std::string& seq, const std::string& fn, const std::string& backend,
         long max_index) {
        Backend b = make_backend(backend);
        return w_e(RationalFunction::parse(fn, b), resolve(seq, b, max_index)).to_string();
      },
      py::arg("seq"), py::arg("fn"), py::arg("backend") = "q", py::arg("max_index") = 64,
      "Limit valuation of a rational function along the sequence");

  m.def(
      "ve",
      [](const std::string& seq, const std::string& fn, const std::string& backend,
         long max_index) {
        Backend b = make_backend(backend);
        return v_e(RationalFunction::parse(fn, b), resolve(seq, b, max_index)).to_string();
      },
      py::arg("seq"), py::arg("fn"), py::arg("backend") = "q", py::arg("max_index") = 64,
      "Refined sequence valuation of a rational function");

  m.def(
      "member",
      [](const std::string& seq, const std::string& fn, const std::string& ring,
         const std::string& backend, long max_index) {
        Backend b = make_backend(backend);
        RingSide side = ring == "w" ? RingSide::W : RingSide::V;
        if (ring != "v" && ring != "w") throw parse_error("ring must be \"v\" or \"w\"", 0);
        return member(RationalFunction::parse(fn, b), resolve(seq, b, max_index), side).value;
      },
      py::arg("seq"), py::arg("fn"), py::arg("ring") = "v", py::arg("backend") = "q",
      py::arg("max_index") = 64, "Membership of a rational function in V_E or W_E");

  m.def(
      "rank",
      [](const std::string& seq, const std::string& backend, long max_index) {
        return rank_report(resolve(seq, make_backend(backend), max_index)).to_string();
      },
      py::arg("seq"), py::arg("backend") = "q", py::arg("max_index") = 64,
      "Rank of the sequence valuation with its certificate");

  m.def(
      "equivalent",
      [](const std::string& seq, const std::string& other, const std::string& backend,
         long max_index, long depth) {
        Backend b = make_backend(backend);
        return equivalent(resolve(seq, b, max_index), resolve(other, b, max_index), depth).value;
      },
      py::arg("seq"), py::arg("other"), py::arg("backend") = "q", py::arg("max_index") = 64,
      py::arg("depth") = 24, "Whether two sequences induce the same valuation");

  m.def(
      "profile",
      [](const std::string& seq, const std::string& fn, const std::string& backend,
         long max_index) {
        Backend b = make_backend(backend);
        ValueProfile p = value_profile(RationalFunction::parse(fn, b), resolve(seq, b, max_index));
        py::dict d;
        d["lambda"] = p.lambda;
        d["gamma"] = format_rational(p.gamma);
        d["from_index"] = p.from_index;
        d["certified"] = p.certified;
        if (!p.certified) d["detail"] = p.detail;
        return d;
      },
      py::arg("seq"), py::arg("fn"), py::arg("backend") = "q", py::arg("max_index") = 64,
      "Linear law val(phi(s_n)) = lambda*delta_n + gamma with its certification index");

  m.def("fixtures", [] { return PCSeq::fixture_catalog(); },
        "Names and summaries of the built-in sequences");

  m.def(
      "sequence_spec",
      [](const std::string& seq, const std::string& backend, long max_index) {
        return sequence_spec_text(resolve(seq, make_backend(backend), max_index));
      },
      py::arg("seq"), py::arg("backend") = "q", py::arg("max_index") = 64,
      "Serialized spec of a sequence, suitable for files and the @path form");
}
