#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gorkit/cayley.hpp"
#include "gorkit/io.hpp"
#include "gorkit/nef.hpp"
#include "gorkit/stringy.hpp"

namespace py = pybind11;
using namespace gorkit;

namespace {

Int int_from(py::handle h) { return Int(py::str(h).cast<std::string>(), 10); }

py::object int_to(const Int& x) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Vec vec_from(py::handle seq) {
  Vec v;
  for (py::handle c : py::iter(seq)) v.push_back(int_from(c));
  return v;
}

py::list vec_to(const Vec& v) {
  py::list out;
  for (const auto& c : v) out.append(int_to(c));
  return out;
}

py::list vertices_to(const LatticePolytope& p) {
  py::list out;
  for (const auto& v : p.vertices()) out.append(vec_to(v));
  return out;
}

LatticePolytope polytope_from(py::iterable points) {
  std::vector<Vec> pts;
  for (py::handle row : points) pts.push_back(vec_from(row));
  return build_polytope(pts);
}

py::list unipoly_to(const UniPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(int_to(c));
  return out;
}

py::list laurent2_to(const LaurentPoly2& p) {
  py::list out;
  for (const auto& [key, c] : p.terms())
    out.append(py::make_tuple(key.first, key.second, int_to(c)));
  return out;
}

NefPartition centered_from(const std::vector<LatticePolytope>& parts, long cap) {
  auto np = detect_nef(parts, cap);
  if (!np) throw std::invalid_argument("the parts do not form a nef-partition");
  return center_and_properize(*np).np;
}

}  // namespace

PYBIND11_MODULE(_gorkit, m) {
  m.doc() = "exact lattice-polytope computations: Gorenstein duality, Cayley and "
            "nef-partition structure, stringy E-polynomials";

  py::class_<LatticePolytope>(m, "Polytope")
      .def(py::init(&polytope_from), py::arg("points"),
           "convex hull of integer points, given as an iterable of coordinate rows")
      .def_property_readonly("dim", &LatticePolytope::dim)
      .def_property_readonly("ambient_dim", &LatticePolytope::ambient_dim)
      .def_property_readonly("vertices", &vertices_to)
      .def("contains", [](const LatticePolytope& p, py::handle x) { return p.contains(vec_from(x)); })
      .def("__eq__", [](const LatticePolytope& a, const LatticePolytope& b) { return a == b; })
      .def("__repr__", [](const LatticePolytope& p) {
        std::ostringstream out;
        out << "Polytope(dim=" << p.dim() << ", vertices=" << p.n_vertices() << ")";
        return out.str();
      });

  m.def("read_polytope", &read_polytope_file, py::arg("path"));
  m.def("read_nef", &read_nef_file, py::arg("path"));

  m.def("is_reflexive", &is_reflexive, py::arg("p"));
  m.def("gorenstein_index", [](const LatticePolytope& p) -> py::object {
    auto d = gorenstein_data(p);
    return d ? int_to(d->r) : py::none().cast<py::object>();
  }, py::arg("p"), "Gorenstein index, or None when the polytope is not Gorenstein");

  m.def("dual", [](const LatticePolytope& p) { return dual_gorenstein(p).p_dual; },
        py::arg("p"), "the dual Gorenstein polytope");

  m.def("hstar", [](const LatticePolytope& p, long cap) { return unipoly_to(hstar(p, cap)); },
        py::arg("p"), py::arg("cap") = kDefaultCap);
  m.def("stilde", [](const LatticePolytope& p, long cap) { return unipoly_to(stilde(p, cap)); },
        py::arg("p"), py::arg("cap") = kDefaultCap);

  m.def("est", [](const LatticePolytope& p, long cap) {
    EstResult res = est(p, cap);
    py::dict out;
    out["terms"] = laurent2_to(res.e);
    out["r"] = int_to(res.r);
    out["cy_dim"] = res.cy_dim;
    out["polynomial"] = res.polynomial;
    return out;
  }, py::arg("p"), py::arg("cap") = kDefaultCap);
  m.def("est_at", [](const LatticePolytope& p, py::handle u, py::handle v, long cap) {
    return int_to(est(p, cap).e.eval_int(int_from(u), int_from(v)));
  }, py::arg("p"), py::arg("u"), py::arg("v"), py::arg("cap") = kDefaultCap);

  m.def("conjecture_check", [](const LatticePolytope& p, long cap) {
    ConjectureReport cd = conjecture_diagnostics(p, cap);
    py::dict out;
    out["cy_dim"] = cd.cy_dim;
    out["e_at_11"] = int_to(cd.e_at_11);
    out["polynomial"] = cd.polynomial;
    out["degree_bound"] = cd.degree_bound;
    out["symmetric"] = cd.symmetric;
    out["poincare"] = cd.poincare;
    out["reciprocity"] = cd.reciprocity;
    out["edge_symmetry"] = cd.edge_symmetry;
    out["second_derivative"] = cd.second_derivative;
    out["div24"] = cd.div24;
    return out;
  }, py::arg("p"), py::arg("cap") = kDefaultCap);

  m.def("special_simplices", [](const LatticePolytope& p, long cap) {
    py::list out;
    for (const auto& s : special_simplices(p, cap)) {
      py::list pts;
      for (const auto& v : s.points) pts.append(vec_to(v));
      out.append(pts);
    }
    return out;
  }, py::arg("p"), py::arg("cap") = kDefaultCap);

  m.def("cayley", &cayley_polytope, py::arg("parts"));

  m.def("nef_dual", [](const std::vector<LatticePolytope>& parts, long cap) {
    return dual_nef(centered_from(parts, cap)).parts;
  }, py::arg("parts"), py::arg("cap") = kDefaultCap,
     "the dual nef-partition of the centered partition detected on the parts");

  m.def("nef_decompose", [](const std::vector<LatticePolytope>& parts, long cap) {
    NefDecomposition dec = decompose_irreducible(centered_from(parts, cap));
    py::dict out;
    out["blocks"] = dec.blocks;
    out["direct_sum"] = dec.direct_sum;
    out["length_bound"] = dec.length_bound;
    return out;
  }, py::arg("parts"), py::arg("cap") = kDefaultCap);

  m.def("cancel_check", [](const LatticePolytope& p, const LatticePolytope& q, long cap) {
    CancelReport rep = cancel_check(p, q, cap);
    py::dict out;
    out["sum_reflexive"] = rep.sum_reflexive;
    out["p_has_interior_point"] = rep.p_has_interior_point;
    out["applies"] = rep.applies;
    out["p_reflexive"] = rep.p_reflexive;
    out["q_reflexive"] = rep.q_reflexive;
    return out;
  }, py::arg("p"), py::arg("q"), py::arg("cap") = kDefaultCap);

  m.def("weighted_simplex", [](py::handle w, py::iterable weights, long cap) {
    WeightSystem ws;
    ws.w = int_from(w);
    for (py::handle x : weights) ws.weights.push_back(int_from(x));
    WeightedReport rep = weighted_simplex(ws, cap);
    py::dict out;
    out["simplex"] = rep.simplex;
    out["k"] = vec_to(rep.k);
    out["gorenstein"] = rep.gorenstein;
    out["index"] = int_to(rep.r);
    out["cy_dim"] = rep.cy_dim;
    out["pyramid"] = rep.pyramid;
    out["est_zero"] = rep.est_zero;
    return out;
  }, py::arg("w"), py::arg("weights"), py::arg("cap") = kDefaultCap);
}
