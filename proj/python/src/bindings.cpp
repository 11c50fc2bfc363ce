// Thin layer: every result crosses as the JSON used by the CLI, and the
// Python package turns "num/den" strings into Fractions.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nestsub/cli.hpp"
#include "nestsub/error.hpp"
#include "nestsub/families.hpp"
#include "nestsub/parse.hpp"
#include "nestsub/prs.hpp"
#include "nestsub/report.hpp"
#include "nestsub/subres_classic.hpp"
#include "nestsub/subres_nested.hpp"
#include "nestsub/subres_recursive.hpp"
#include "nestsub/subres_reduced.hpp"
#include "nestsub/sqfree.hpp"
#include "nestsub/verify.hpp"

namespace py = pybind11;
using namespace nestsub;

namespace {

Instance instance(const std::string& f, const std::string& g) {
  return make_instance(parse_poly(f), parse_poly(g));
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

std::string subresultant(const std::string& family, const std::string& fs, const std::string& gs,
                         int k, int j) {
  const Instance in = instance(fs, gs);
  if (family == "classic") return dump(to_json(subresultant_poly(in.f, in.g, j)));
  if (family == "recursive") return dump(to_json(rec_subresultant(in.f, in.g, in.chain, k, j)));
  if (family == "nested") return dump(to_json(nested_subresultant(in.f, in.g, in.chain, k, j)));
  if (family == "reduced") return dump(to_json(reduced_subresultant(in.f, in.g, in.chain, k, j)));
  throw py::value_error("unknown family: " + family);
}

std::string matrix(const std::string& family, const std::string& fs, const std::string& gs, int k, int j) {
  const Instance in = instance(fs, gs);
  if (family == "sylvester") return dump(to_json(sylvester_matrix(in.f, in.g)));
  if (family == "classic") return dump(to_json(subres_matrix(in.f, in.g, j)));
  if (family == "recursive") return dump(to_json(rec_subres_matrix(in.f, in.g, in.chain, k, j)));
  if (family == "nested") return dump(to_json(nested_matrix(in.f, in.g, in.chain, k, j)));
  if (family == "reduced") return dump(to_json(reduced_matrix(in.f, in.g, in.chain, k, j)));
  if (family == "h") return dump(to_json(ReducedSubresultants(in.f, in.g, in.chain).h_matrix(k, j)));
  throw py::value_error("unknown family: " + family);
}

std::string verify(const std::string& fs, const std::string& gs, int theorem, int k, int j) {
  const Instance in = instance(fs, gs);
  VerifyReport r;
  switch (theorem) {
    case kProportionality: r = proportionality_check(in); break;
    case kTheoremRecursiveNested: r = verify_thm1(in, k, j); break;
    case kTheoremNestedReduced: r = verify_thm2(in, k, j); break;
    default: throw py::value_error("theorem must be 0, 1 or 2");
  }
  r.f = render(in.f);
  r.g = render(in.g);
  return dump(to_json(r, true));
}

py::tuple dims(const std::string& fs, const std::string& gs, int k, int j) {
  const Instance in = instance(fs, gs);
  const Dims rec = rec_dims(in.chain, k, j);
  const Dims red = reduced_dims(in.chain.m(), in.chain.n(), k, j);
  return py::make_tuple(py::make_tuple(rec.rows, rec.cols), py::make_tuple(red.rows, red.cols));
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_nestsub, m) {
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("parse", [](const std::string& p) { return dump(to_json(parse_poly(p))); });
  m.def("render", [](const std::string& p) { return render(parse_poly(p)); });
  m.def("chain", [](const std::string& f, const std::string& g) {
    return recursive_prs(parse_poly(f), parse_poly(g)).chain;
  });
  m.def("prs", [](const std::string& f, const std::string& g, const std::string& rule) {
    return dump(to_json(prs(parse_poly(f), parse_poly(g), parse_division_rule(rule))));
  });
  m.def("recursive_prs", [](const std::string& f, const std::string& g, const std::string& rule) {
    return dump(to_json(recursive_prs(parse_poly(f), parse_poly(g), parse_division_rule(rule))));
  });
  m.def("subresultant", &subresultant);
  m.def("matrix", &matrix);
  m.def("verify", &verify);
  m.def("sqfree", [](const std::string& p) { return dump(to_json(sqfree(parse_poly(p)))); });
  m.def("dims", &dims);
  m.def("cli", &cli);
}
