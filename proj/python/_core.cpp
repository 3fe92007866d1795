#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <sstream>

#include "clusterdenom/cli.hpp"
#include "clusterdenom/errors.hpp"
#include "clusterdenom/report.hpp"

namespace py = pybind11;
using namespace clusterdenom;

namespace {

using Rows = std::vector<std::vector<ExchangeMatrix::Entry>>;

ExchangeMatrix input_matrix(const py::object& input) {
  if (py::isinstance<py::str>(input)) return standard_matrix(input.cast<std::string>());
  return ExchangeMatrix::from_rows(input.cast<Rows>());
}

std::string verify_json(const py::object& input, bool extended, unsigned jobs, std::optional<double> max_seconds) {
  const ExchangeMatrix b = input_matrix(input);
  VerifyOptions opts;
  opts.engine = extended ? Engine::Recurrence : Engine::Laurent;
  opts.jobs = jobs;
  if (max_seconds) {
    opts.time_limit =
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*max_seconds));
  }
  Json j = [&] {
    py::gil_scoped_release release;
    return to_json(verify(b, opts));
  }();
  if (py::isinstance<py::str>(input)) j["input"] = input.cast<std::string>();
  return j.dump();
}

std::string enumerate_json(const py::object& input, bool extended) {
  const ExchangeMatrix b = input_matrix(input);
  const ClusterPattern p = explore(b, {extended ? Engine::Recurrence : Engine::Laurent});
  return to_json(p, py::isinstance<py::str>(input) ? input.cast<std::string>() : std::string()).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of the denominator conjecture for finite-type cluster algebras";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidMatrix>(m, "InvalidMatrix", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  m.def("version", &version_string);
  m.def("standard_matrix", [](const std::string& type) { return standard_matrix(type).rows(); }, py::arg("type"));
  m.def("symmetrizer", [](const Rows& rows) {
    const auto b = ExchangeMatrix::from_rows(rows);
    const auto d = b.symmetrizer();
    return std::vector<ExchangeMatrix::Entry>(d.begin(), d.end());
  });
  m.def("mutate", [](const Rows& rows, int k) { return ExchangeMatrix::from_rows(rows).mutate(k).rows(); },
        py::arg("matrix"), py::arg("k"));
  m.def("is_finite_type", [](const py::object& input) { return is_finite_type(input_matrix(input)); });
  m.def(
      "mutation_classes",
      [](const py::object& input) {
        std::vector<Rows> out;
        for (const auto& b : mutation_classes(input_matrix(input)).representatives) out.push_back(b.rows());
        return out;
      },
      py::arg("matrix"));
  m.def("enumerate_json", &enumerate_json, py::arg("matrix"), py::arg("extended") = false);
  m.def("verify_json", &verify_json, py::arg("matrix"), py::arg("extended") = false, py::arg("jobs") = 1u,
        py::arg("max_seconds") = py::none());

  m.def(
      "tagged_arcs_json",
      [](int n) {
        Json out = Json::array();
        for (const auto& a : disc::all_tagged_arcs(n)) out.push_back(disc::to_json(a));
        return out.dump();
      },
      py::arg("n"));
  m.def("triangulation_count", [](int n) { return disc::tagged_triangulations(n).size(); }, py::arg("n"));
  m.def(
      "injectivity_json",
      [](int n, int bound, std::optional<std::size_t> sample, std::uint64_t seed) {
        return to_json(reconstruct::injectivity_check(n, bound, sample, seed)).dump();
      },
      py::arg("n"), py::arg("bound"), py::arg("sample") = py::none(), py::arg("seed") = 0x5eed);
  m.def(
      "crosscheck_json", [](int n, int bound) { return to_json(reconstruct::fst_crosscheck(n, bound)).dump(); },
      py::arg("n"), py::arg("bound") = 2);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
