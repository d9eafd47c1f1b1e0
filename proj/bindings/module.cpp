#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rslist/decoder.hpp"
#include "rslist/oracle.hpp"
#include "rslist/rootfind.hpp"

namespace py = pybind11;
using namespace rslist;

namespace {

py::list rows_to_list(const BiPoly& q) {
  py::list rows;
  for (int j = 0; j <= q.ydeg(); ++j) rows.append(q.row(j).coeffs());
  return rows;
}

py::dict decode_result_to_dict(const DecodeResult& res) {
  py::dict d;
  d["m"] = res.params.m;
  d["l"] = res.params.l;
  d["w"] = res.w;
  d["radius"] = res.guarantee_radius;
  d["q"] = rows_to_list(res.q);
  py::list cands;
  for (const Candidate& c : res.candidates) {
    py::dict cd;
    cd["message"] = c.message.coeffs();
    cd["codeword"] = c.codeword;
    cd["distance"] = c.distance;
    cands.append(cd);
  }
  d["candidates"] = cands;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reed-Solomon list decoding via module Groebner bases";

  py::class_<Field>(m, "Field",
                    "Arithmetic context for GF(p^m), q = p^m <= 2^16.  Elements are "
                    "canonical integers in [0, q).")
      .def(py::init<uint32_t, uint32_t, std::optional<std::vector<uint32_t>>>(),
           py::arg("p"), py::arg("m") = 1, py::arg("modulus") = std::nullopt)
      .def_property_readonly("p", &Field::characteristic)
      .def_property_readonly("m", &Field::extension_degree)
      .def_property_readonly("q", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add, py::arg("a"), py::arg("b"))
      .def("sub", &Field::sub, py::arg("a"), py::arg("b"))
      .def("neg", &Field::neg, py::arg("a"))
      .def("mul", &Field::mul, py::arg("a"), py::arg("b"))
      .def("inv", &Field::inv, py::arg("a"))
      .def("div", &Field::div, py::arg("a"), py::arg("b"))
      .def("pow", &Field::pow, py::arg("a"), py::arg("e"))
      .def_property_readonly("mult_count", &Field::mult_count)
      .def_property_readonly("inv_count", &Field::inv_count)
      .def("reset_counters", &Field::reset_counters);

  py::class_<RSCode>(m, "RSCode",
                     "Evaluation-style Reed-Solomon code over a Field; keeps the field "
                     "alive for its own lifetime.")
      .def(py::init<const Field&, int, int, std::optional<std::vector<uint32_t>>>(),
           py::arg("field"), py::arg("n"), py::arg("k"), py::arg("alphas") = std::nullopt,
           py::keep_alive<1, 2>())
      .def_property_readonly("n", &RSCode::n)
      .def_property_readonly("k", &RSCode::k)
      .def_property_readonly("alphas", &RSCode::alphas)
      .def_property_readonly("unique_radius", &RSCode::unique_radius)
      .def(
          "encode",
          [](const RSCode& code, const std::vector<uint32_t>& msg) { return code.encode(msg); },
          py::arg("message"), "Evaluate a message (coefficients lowest first) at every point.")
      .def(
          "interpolate_word",
          [](const RSCode& code, const std::vector<uint32_t>& word) {
            return code.interpolate_word(word).coeffs();
          },
          py::arg("word"),
          "Coefficients of the unique polynomial of degree < n through the word.");

  m.def(
      "unique_decode",
      [](const RSCode& code, const std::vector<uint32_t>& word)
          -> std::optional<std::vector<uint32_t>> {
        std::optional<UniPoly> h = unique_decode(code, word);
        if (!h) return std::nullopt;
        return h->coeffs();
      },
      py::arg("code"), py::arg("word"),
      "Half-distance decoding; returns the message coefficients or None.");

  m.def(
      "list_decode",
      [](const RSCode& code, const std::vector<uint32_t>& word, int mult,
         std::optional<int> list_size) {
        return decode_result_to_dict(list_decode(code, word, mult, list_size));
      },
      py::arg("code"), py::arg("word"), py::arg("mult") = 2, py::arg("list_size") = std::nullopt,
      "List decoding with the given multiplicity; returns a dict with the "
      "interpolating polynomial and every candidate.");

  m.def(
      "interpolate",
      [](const RSCode& code, const std::vector<uint32_t>& word, int mult,
         std::optional<int> list_size) {
        Interpolation interp = interpolate_q(code, word, mult, list_size);
        py::dict d;
        d["q"] = rows_to_list(interp.q);
        d["l"] = interp.params.l;
        d["N"] = interp.params.N;
        d["w"] = wdeg(interp.basis.order, interp.q);
        return d;
      },
      py::arg("code"), py::arg("word"), py::arg("mult") = 2, py::arg("list_size") = std::nullopt,
      "Minimal polynomial vanishing with the given multiplicity at every "
      "point (alpha_i, word_i), as rows of y-powers.");

  m.def(
      "y_roots",
      [](const Field& f, const std::vector<std::vector<uint32_t>>& rows, int k) {
        std::vector<UniPoly> polys;
        polys.reserve(rows.size());
        for (const auto& r : rows) polys.emplace_back(f, r);
        std::vector<std::vector<uint32_t>> out;
        for (const UniPoly& h : y_roots(BiPoly(f, std::move(polys)), k)) out.push_back(h.coeffs());
        return out;
      },
      py::arg("field"), py::arg("rows"), py::arg("k"),
      "All univariate y-roots of degree < k of the bivariate polynomial "
      "given as rows of y-powers.");

  m.def(
      "oracle_nearest",
      [](const RSCode& code, const std::vector<uint32_t>& word) {
        return oracle_nearest(code, word);
      },
      py::arg("code"), py::arg("word"),
      "Exhaustive nearest-codeword search (small instances only).");
}
