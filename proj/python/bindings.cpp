#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "nilcube/certificates.hpp"
#include "nilcube/composition.hpp"
#include "nilcube/elements.hpp"
#include "nilcube/invariants.hpp"
#include "nilcube/linalg.hpp"
#include "nilcube/nilpotency.hpp"
#include "nilcube/tables.hpp"

namespace py = pybind11;
using namespace nilcube;

namespace {

using IntWord = std::vector<int>;
using Terms = std::vector<std::pair<IntWord, std::string>>;

std::vector<IntWord> to_ints(const std::vector<Word>& ws) {
  std::vector<IntWord> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.to_ints());
  return out;
}

Element from_terms(unsigned p, const Terms& terms) {
  const FieldSpec f(p);
  Element g(f);
  for (const auto& [w, c] : terms) g.add_term(Word::from_ints(w), Scalar::parse(f, c));
  return g;
}

Terms to_terms(const Element& g) {
  Terms out;
  for (const auto& [w, c] : g.terms()) out.emplace_back(w.to_ints(), c.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_nilcube, m) {
  m.doc() = "Exact computations in the relatively free algebra with x^3 = 0";

  py::register_exception<std::invalid_argument>(m, "InvalidArgument",
                                                 PyExc_ValueError);

  m.def("word_count", [](const std::vector<unsigned>& mdeg) {
    return word_count(Multidegree(mdeg));
  });
  m.def("dim", [](unsigned p, const std::vector<unsigned>& mdeg) {
    return dim_component(p, Multidegree(mdeg));
  }, py::arg("p"), py::arg("mdeg"));
  m.def("minimal_basis", [](unsigned p, const std::vector<unsigned>& mdeg) {
    return to_ints(echelonize_S(Multidegree(mdeg), FieldSpec(p)).minimal_basis());
  }, py::arg("p"), py::arg("mdeg"));
  m.def("membership", [](unsigned p, const Terms& terms) {
    const Element g = from_terms(p, terms);
    if (g.is_zero()) return true;
    return echelonize_S(g.mdeg(), FieldSpec(p)).membership(g);
  }, py::arg("p"), py::arg("terms"));
  m.def("canonicalize", [](unsigned p, const Terms& terms) {
    return to_terms(canonicalize(from_terms(p, terms)));
  }, py::arg("p"), py::arg("terms"));
  m.def("table", [](unsigned p, const std::vector<unsigned>& mdeg) {
    const auto t = table(p, Multidegree(mdeg));
    return py::dict(py::arg("source") = to_string(t.source),
                    py::arg("words") = to_ints(t.words));
  }, py::arg("p"), py::arg("mdeg"));
  m.def("B1d", [](unsigned p, std::size_t d) { return to_ints(B1d(p, d).words); },
        py::arg("p"), py::arg("d"));
  m.def("composition_basis", [](unsigned p, std::size_t d) {
    return to_ints(B_of(build_Md_rows(p, d)));
  }, py::arg("p"), py::arg("d"));
  m.def("certify", [](unsigned p, std::size_t d) {
    const auto r = certify_independence(B1d(p, d));
    return py::dict(py::arg("independent") = r.independent,
                    py::arg("method") = to_string(r.method),
                    py::arg("candidate_size") = r.candidate_size);
  }, py::arg("p"), py::arg("d"));
  m.def("C_formula", &C_formula, py::arg("p"), py::arg("d"));
  m.def("nilpotency", [](unsigned p, std::size_t d, std::size_t max_words) {
    const auto r = C_compute(p, d, max_words);
    return py::dict(py::arg("C") = r.C, py::arg("witness") = r.witness.to_ints(),
                    py::arg("method") = to_string(r.method));
  }, py::arg("p"), py::arg("d"), py::arg("max_words_gauss") = 5000);
  m.def("generators", [](unsigned p, std::size_t d) {
    std::vector<std::string> out;
    for (const auto& [mdeg, gs] : full_system(p, d).groups) {
      for (const auto& g : gs) out.push_back(g.to_string());
    }
    return out;
  }, py::arg("p"), py::arg("d"));
}
