#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "morrey/constants.hpp"
#include "morrey/error.hpp"
#include "morrey/io.hpp"
#include "morrey/lattice.hpp"
#include "morrey/norm.hpp"
#include "morrey/search.hpp"
#include "morrey/witness.hpp"

namespace py = pybind11;
using namespace morrey;

namespace {

using PointTuple = std::vector<Coord>;

SparseSequence sequence_from_dict(std::size_t dim, const std::map<PointTuple, double>& entries) {
  SparseSequence::Map m;
  for (const auto& [k, v] : entries) m.emplace(LatticePoint(k), v);
  return SparseSequence(dim, std::move(m));
}

py::dict sequence_to_dict(const SparseSequence& x) {
  py::dict out;
  for (const auto& [k, v] : x.entries()) out[py::tuple(py::cast(PointTuple(k.coords().begin(), k.coords().end())))] = v;
  return out;
}

py::dict norms_dict(const PairNorms& n) {
  py::dict d;
  d["x"] = n.x;
  d["y"] = n.y;
  d["x_plus_y"] = n.sum;
  d["x_minus_y"] = n.diff;
  return d;
}

ConstantKind make_kind(const std::string& name, double s) { return ConstantKind(parse_constant(name), s); }

}  // namespace

PYBIND11_MODULE(_morrey, m) {
  m.doc() = "Exact discrete Morrey norms and geometric constants";

  auto base = py::register_exception<Error>(m, "MorreyError", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<SpaceParams>(m, "SpaceParams")
      .def(py::init<double, double, std::size_t>(), py::arg("p"), py::arg("q"), py::arg("d"))
      .def_property_readonly("p", &SpaceParams::p)
      .def_property_readonly("q", &SpaceParams::q)
      .def_property_readonly("d", &SpaceParams::d)
      .def("__repr__", [](const SpaceParams& sp) {
        return "SpaceParams(p=" + format_real(sp.p()) + ", q=" + format_real(sp.q()) +
               ", d=" + std::to_string(sp.d()) + ")";
      });

  py::class_<SparseSequence>(m, "SparseSequence")
      .def(py::init(&sequence_from_dict), py::arg("dim"), py::arg("entries") = std::map<PointTuple, double>{})
      .def_property_readonly("dim", &SparseSequence::dim)
      .def_property_readonly("support_size", &SparseSequence::support_size)
      .def("is_zero", &SparseSequence::is_zero)
      .def("entries", &sequence_to_dict)
      .def("__add__", [](const SparseSequence& a, const SparseSequence& b) { return combine(a, b, +1); })
      .def("__sub__", [](const SparseSequence& a, const SparseSequence& b) { return combine(a, b, -1); })
      .def("__mul__", [](const SparseSequence& a, double lambda) { return scale(a, lambda); })
      .def("__rmul__", [](const SparseSequence& a, double lambda) { return scale(a, lambda); })
      .def("__eq__", [](const SparseSequence& a, const SparseSequence& b) { return a == b; })
      .def("__repr__", [](const SparseSequence& x) {
        return "SparseSequence(dim=" + std::to_string(x.dim()) +
               ", support_size=" + std::to_string(x.support_size()) + ")";
      });

  py::class_<NormResult>(m, "NormResult")
      .def_readonly("norm", &NormResult::norm)
      .def_property_readonly("center",
                             [](const NormResult& r) {
                               const auto c = r.argmax.window.center.coords();
                               return PointTuple(c.begin(), c.end());
                             })
      .def_property_readonly("radius", [](const NormResult& r) { return r.argmax.window.radius; })
      .def_property_readonly("value", [](const NormResult& r) { return r.argmax.value; })
      .def_property_readonly("engine", [](const NormResult& r) { return std::string(engine_name(r.engine)); });

  m.def(
      "norm",
      [](const SparseSequence& x, const SpaceParams& sp, const std::string& engine, unsigned threads) {
        NormOptions options;
        options.engine = parse_engine(engine);
        options.threads = threads;
        py::gil_scoped_release release;
        return norm(x, sp, options);
      },
      py::arg("x"), py::arg("space"), py::arg("engine") = "auto", py::arg("threads") = 1,
      "Exact l^p_q norm with the argmax window.");
  m.def(
      "window_value",
      [](const SparseSequence& x, const PointTuple& center, Coord radius, const SpaceParams& sp) {
        return window_value(x, Window{LatticePoint(center), radius}, sp);
      },
      py::arg("x"), py::arg("center"), py::arg("radius"), py::arg("space"));
  m.def("n_max", &n_max, py::arg("x"));
  m.def(
      "cardinality", [](Coord radius, std::size_t dim) { return cardinality(radius, dim); }, py::arg("radius"),
      py::arg("dim"));

  m.def(
      "quotient",
      [](const std::string& name, const SparseSequence& x, const SparseSequence& y, const SpaceParams& sp, double s,
         bool auto_normalize) {
        QuotientOptions options;
        options.auto_normalize = auto_normalize;
        options.norm.threads = 1;
        const QuotientReport r = quotient(make_kind(name, s), x, y, sp, options);
        py::dict out;
        out["constant"] = std::string(r.kind.name());
        out["s"] = r.kind.s();
        out["value"] = r.value;
        out["norms"] = norms_dict(r.norms);
        return out;
      },
      py::arg("name"), py::arg("x"), py::arg("y"), py::arg("space"), py::arg("s") = 2.0,
      py::arg("auto_normalize") = false);
  m.def(
      "analytic_bounds",
      [](const std::string& name, double s) {
        const Interval b = analytic_bounds(make_kind(name, s));
        return std::make_pair(b.lower, b.upper);
      },
      py::arg("name"), py::arg("s") = 2.0);
  m.def(
      "constant_names",
      [] {
        std::vector<std::string> names;
        for (Constant c : kAllConstants) names.emplace_back(constant_name(c));
        return names;
      });

  m.def("witness_threshold", &witness_threshold, py::arg("space"));
  m.def("minimal_even_n", &minimal_even_n, py::arg("space"));
  m.def(
      "build_witness",
      [](const SpaceParams& sp, std::optional<Coord> n) {
        WitnessPair w = build_witness(sp, n);
        return py::make_tuple(w.n, w.x, w.y);
      },
      py::arg("space"), py::arg("n") = py::none());
  m.def(
      "verify_theorem",
      [](const SpaceParams& sp, const std::vector<double>& s_list, double tol) {
        const TheoremReport r = verify_theorem(sp, s_list, tol);
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["constant"] = std::string(row.kind.name());
          d["s"] = row.kind.s();
          d["reported"] = row.reported;
          d["witness_quotient"] = row.witness_quotient;
          d["pass"] = row.pass;
          rows.append(d);
        }
        py::dict out;
        out["n"] = r.witness.n;
        out["threshold"] = r.threshold;
        out["norms"] = norms_dict(r.norms);
        out["rows"] = rows;
        return out;
      },
      py::arg("space"), py::arg("s_list") = std::vector<double>{1.0, 2.0, 3.0}, py::arg("tol") = 1e-9);

  m.def(
      "maximize_quotient",
      [](const std::string& name, const SpaceParams& sp, double s, Coord radius, unsigned restarts,
         unsigned iters, std::uint64_t seed, unsigned threads) {
        SearchConfig cfg;
        cfg.radius = radius;
        cfg.restarts = restarts;
        cfg.max_iters = iters;
        cfg.seed = seed;
        cfg.threads = threads;
        const ConstantKind kind = make_kind(name, s);
        LowerBoundCertificate cert = [&] {
          py::gil_scoped_release release;
          return maximize_quotient(kind, sp, cfg);
        }();
        py::dict out;
        out["constant"] = std::string(kind.name());
        out["s"] = kind.s();
        out["value"] = cert.value;
        out["x"] = cert.x;
        out["y"] = cert.y;
        out["norms"] = norms_dict(cert.norms);
        out["restart"] = cert.restart;
        return out;
      },
      py::arg("name"), py::arg("space"), py::arg("s") = 2.0, py::arg("radius") = 2, py::arg("restarts") = 8,
      py::arg("iters") = 200, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def("parse_sequence", &parse_sequence, py::arg("text"));
  m.def("serialize_sequence", &serialize_sequence, py::arg("x"));
}
