#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walkmat/family.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/resultant.hpp"
#include "walkmat/spectral.hpp"

namespace py = pybind11;
using namespace walkmat;

namespace {

// Big integers cross the boundary as decimal text.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& v) {
  if (!py::isinstance<py::int_>(v)) throw py::type_error("expected an int");
  return from_decimal(py::str(v).cast<std::string>());
}

py::list coeffs_to_py(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

IntPolynomial coeffs_from_py(const py::sequence& seq) {
  std::vector<BigInt> c;
  for (const auto& v : seq) c.push_back(from_py(v));
  return IntPolynomial(std::move(c));
}

IntMatrix matrix_from_py(const py::sequence& rows) {
  const std::size_t n = rows.size();
  IntMatrix m(n, n == 0 ? 0 : py::len(rows[0]));
  for (std::size_t i = 0; i < n; ++i) {
    const py::sequence row = rows[i];
    if (row.size() != m.cols()) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::object optional_int(const std::optional<int>& v) { return v ? py::object(py::int_(*v)) : py::object(py::none()); }

py::dict report_to_py(const VerificationReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["graph6"] = r.graph6.empty() ? py::object(py::none()) : py::object(py::str(r.graph6));
  d["m"] = optional_int(r.m);
  d["ell"] = optional_int(r.ell);
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["sign"] = optional_int(r.sign);
  d["status"] = std::string(to_string(r.status));
  d["detail"] = r.detail;
  return d;
}

py::dict membership_to_py(const FMembership& f) {
  py::dict d;
  d["graph6"] = f.graph6;
  d["n"] = f.n;
  d["detA"] = to_py(f.det_a);
  d["detW"] = to_py(f.det_w);
  d["member"] = f.member;
  return d;
}

}  // namespace

PYBIND11_MODULE(_walkmat, m) {
  m.doc() = "Exact walk-matrix determinants of rooted products with paths";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "decode",
      [](const std::string& g6) {
        const Graph g = graph6_decode(g6);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
        return py::make_tuple(g.order(), edges);
      },
      py::arg("graph6"), "(n, edges) with 1-based endpoints");
  m.def(
      "encode",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        std::vector<Edge> es;
        for (const auto& [u, v] : edges) es.push_back({u, v});
        return graph6_encode(graph_from_edges(n, es));
      },
      py::arg("n"), py::arg("edges"), "graph6 string for n vertices and 1-based edges");
  m.def(
      "rooted_product",
      [](const std::string& g6, int path, int ell) {
        return graph6_encode(rooted_product_path(graph6_decode(g6), RootedProductSpec(path, ell)));
      },
      py::arg("graph6"), py::arg("m"), py::arg("ell"));

  m.def("det", [](const py::sequence& rows) { return to_py(det_bareiss(matrix_from_py(rows))); }, py::arg("matrix"),
        "exact determinant of a square integer matrix");
  m.def(
      "walk_matrix",
      [](const std::string& g6) {
        const IntMatrix w = walk_matrix(graph6_decode(g6));
        py::list rows;
        for (std::size_t i = 0; i < w.rows(); ++i) {
          py::list row;
          for (std::size_t j = 0; j < w.cols(); ++j) row.append(to_py(w(i, j)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("graph6"));
  m.def("walk_det", [](const std::string& g6) { return to_py(walk_det(graph6_decode(g6))); }, py::arg("graph6"));
  m.def("adjacency_det", [](const std::string& g6) { return to_py(adjacency_det(graph6_decode(g6))); },
        py::arg("graph6"));
  m.def("charpoly", [](const std::string& g6) { return coeffs_to_py(characteristic_polynomial(graph6_decode(g6))); },
        py::arg("graph6"), "coefficients of det(xI - A), constant term first");

  m.def("s_poly", [](int k) { return coeffs_to_py(s_poly(k)); }, py::arg("k"));
  m.def(
      "resultant",
      [](const py::sequence& f, const py::sequence& g) {
        return to_py(resultant_int(coeffs_from_py(f), coeffs_from_py(g)));
      },
      py::arg("f"), py::arg("g"), "Sylvester resultant; coefficients constant term first");

  m.def(
      "verify_main",
      [](const std::string& g6, int path, int ell) { return report_to_py(verify_main(graph6_decode(g6), path, ell)); },
      py::arg("graph6"), py::arg("m"), py::arg("ell"));
  m.def(
      "verify_charpoly",
      [](const std::string& g6, int path, int ell) {
        return report_to_py(verify_charpoly_factorization(graph6_decode(g6), path, ell));
      },
      py::arg("graph6"), py::arg("m"), py::arg("ell"));
  m.def(
      "verify_simple_spectrum",
      [](const std::string& g6, int path, int ell) {
        return report_to_py(verify_simple_spectrum_iff(graph6_decode(g6), path, ell));
      },
      py::arg("graph6"), py::arg("m"), py::arg("ell"));
  m.def("verify_res1", [](int path, int ell) { return report_to_py(verify_res1(path, ell)); }, py::arg("m"),
        py::arg("ell"));
  m.def("verify_res2", [](int path, int ell) { return report_to_py(verify_res2(path, ell)); }, py::arg("m"),
        py::arg("ell"));

  m.def("f_member", [](const std::string& g6) { return membership_to_py(f_member(graph6_decode(g6))); },
        py::arg("graph6"));
  m.def(
      "build_family",
      [](const std::string& g6, const std::vector<std::pair<int, int>>& steps, std::size_t budget) {
        std::vector<FamilyStep> fs;
        for (const auto& [mm, ell] : steps) fs.emplace_back(mm, ell);
        const FamilyChain chain = build_family(graph6_decode(g6), fs, budget);
        py::list levels;
        for (const auto& level : chain.levels) levels.append(membership_to_py(level.certificate));
        return levels;
      },
      py::arg("graph6"), py::arg("steps"), py::arg("budget") = kDefaultVertexBudget,
      "membership certificates of the chain, seed first");
  m.def(
      "search_f",
      [](std::size_t n, unsigned workers) {
        std::vector<FMembership> found;
        {
          py::gil_scoped_release release;
          found = search_f(n, workers);
        }
        py::list out;
        for (const auto& f : found) out.append(membership_to_py(f));
        return out;
      },
      py::arg("n"), py::arg("workers") = 1);
}
