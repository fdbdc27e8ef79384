#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "desitter/causal.hpp"
#include "desitter/figure.hpp"
#include "desitter/quotient.hpp"

namespace py = pybind11;
using namespace desitter;

namespace pybind11::detail {

// Vector <-> sequence of floats
template <>
struct type_caster<Vector> {
  static constexpr auto name = const_name("list[float]");
  template <typename T>
  using cast_op_type = movable_cast_op_type<T>;

  operator Vector*() { return &*value; }
  operator Vector&() { return *value; }
  operator Vector&&() && { return std::move(*value); }

  bool load(handle src, bool convert) {
    if (!isinstance<sequence>(src) || isinstance<str>(src)) return false;
    std::vector<double> coords;
    for (handle item : reinterpret_borrow<sequence>(src)) {
      make_caster<double> c;
      if (!c.load(item, convert)) return false;
      coords.push_back(cast_op<double>(c));
    }
    if (coords.size() < 3) return false;
    value.emplace(std::move(coords));
    return true;
  }

  static handle cast(const Vector& v, return_value_policy, handle) {
    list out;
    for (double c : v.coords()) out.append(c);
    return out.release();
  }
  static handle cast(const Vector* v, return_value_policy p, handle parent) {
    return v ? cast(*v, p, parent) : none().release();
  }

 private:
  std::optional<Vector> value;
};

}  // namespace pybind11::detail

namespace {

std::vector<std::vector<double>> rows(const Matrix& m) {
  std::vector<std::vector<double>> out(m.dim(), std::vector<double>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m(r, c);
  return out;
}

Matrix from_rows(const std::vector<std::vector<double>>& data) {
  Matrix m(data.size());
  for (std::size_t r = 0; r < data.size(); ++r) {
    if (data[r].size() != data.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < data.size(); ++c) m(r, c) = data[r][c];
  }
  return m;
}

SceneOptions scene_options(const std::string& kind, double t_max, std::size_t resolution,
                           std::vector<double> psi_list, bool annotate_throat,
                           bool both_halves) {
  SceneOptions opt;
  opt.kind = parse_figure_kind(kind);
  opt.t_max = t_max;
  opt.resolution = resolution;
  opt.psi_list = std::move(psi_list);
  opt.annotate_throat = annotate_throat;
  opt.include_past_half = both_halves;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "de Sitter causal structure";

  py::class_<SpacetimeContext>(m, "SpacetimeContext")
      .def(py::init([](double radius, std::size_t n, double tol) {
             SpacetimeContext ctx{radius, n, tol};
             ctx.validate();
             return ctx;
           }),
           py::arg("radius") = 1.0, py::arg("n") = 2, py::arg("tol") = kFormEpsilon)
      .def_readonly("radius", &SpacetimeContext::radius)
      .def_readonly("n", &SpacetimeContext::n)
      .def_readonly("tol", &SpacetimeContext::tol)
      .def("__repr__", [](const SpacetimeContext& c) {
        std::ostringstream out;
        out << "SpacetimeContext(radius=" << c.radius << ", n=" << c.n << ", tol=" << c.tol << ")";
        return out.str();
      });

  py::class_<Sampler>(m, "Sampler")
      .def(py::init<std::uint64_t>(), py::arg("seed") = Sampler::kDefaultSeed);

  m.def("inner", &inner);
  m.def("classify", [](const Vector& v) { return std::string(to_string(classify(v))); });
  m.def("time_direction",
        [](const Vector& v) { return std::string(to_string(time_direction(v))); });

  py::class_<Isometry>(m, "Isometry")
      .def(py::init([](const std::vector<std::vector<double>>& data) {
        return Isometry(from_rows(data));
      }))
      .def_property_readonly("matrix", [](const Isometry& i) { return rows(i.matrix()); })
      .def_property_readonly("preserves_time", &Isometry::preserves_time)
      .def("inverse", &Isometry::inverse)
      .def("__call__", &Isometry::apply)
      .def("__matmul__", [](const Isometry& a, const Isometry& b) { return a * b; });
  m.def("boost", &boost, py::arg("psi"), py::arg("n"));
  m.def("central_symmetry", &central_symmetry, py::arg("n"));
  m.def("spatial_rotation", &spatial_rotation, py::arg("axis_a"), py::arg("axis_b"),
        py::arg("angle"), py::arg("n"));
  m.def("verify_isometry", py::overload_cast<const Isometry&>(&verify_isometry));

  py::class_<Event>(m, "Event")
      .def(py::init<Vector, const SpacetimeContext&>(), py::arg("point"), py::arg("ctx"))
      .def_property_readonly("point", &Event::point)
      .def_property_readonly("context", &Event::context)
      .def_property_readonly("time", &Event::time)
      .def("apply", [](const Event& e, const Isometry& iso) { return apply(iso, e); })
      .def("__getitem__", [](const Event& e, std::size_t i) {
        if (i >= e.point().size()) throw py::index_error();
        return e[i];
      })
      .def(py::self == py::self)
      .def("__repr__", [](const Event& e) {
        std::ostringstream out;
        out << "Event(" << py::repr(py::cast(e.point())).cast<std::string>() << ")";
        return out.str();
      });
  m.def("on_hyperboloid", &on_hyperboloid);
  m.def("random_event", &random_event, py::arg("ctx"), py::arg("sampler"),
        py::arg("psi_max") = 3.0);
  m.def("orientation_Y", py::overload_cast<const Event&>(&orientation_Y));

  py::class_<WorldLine>(m, "WorldLine")
      .def(py::init<Event, Vector>(), py::arg("base"), py::arg("tangent"))
      .def_property_readonly("base", &WorldLine::base)
      .def_property_readonly("tangent", &WorldLine::tangent)
      .def("at", &WorldLine::at)
      .def("velocity", &WorldLine::velocity)
      .def("rebased", &WorldLine::rebased);
  m.def("canonical_worldline", &canonical_worldline);
  m.def("canonicalize", py::overload_cast<const WorldLine&>(&desitter::canonicalize));

  py::class_<NullRay>(m, "NullRay")
      .def_property_readonly("base", &NullRay::base)
      .def_property_readonly("direction", &NullRay::direction)
      .def("at", &NullRay::at);
  m.def("null_ray", &null_ray, py::arg("base"), py::arg("direction"));

  py::enum_<Verdict>(m, "Verdict")
      .value("Inside", Verdict::Inside)
      .value("Boundary", Verdict::Boundary)
      .value("Outside", Verdict::Outside);
  py::enum_<Side>(m, "Side").value("Past", Side::Past).value("Future", Side::Future);

  py::class_<CausalVerdict>(m, "CausalVerdict")
      .def_readonly("verdict", &CausalVerdict::verdict)
      .def_readonly("margin", &CausalVerdict::margin);

  py::class_<HalfSpaceSet>(m, "HalfSpaceSet")
      .def_property_readonly("name", &HalfSpaceSet::name)
      .def_property_readonly("covector", &HalfSpaceSet::covector)
      .def_property_readonly("threshold", &HalfSpaceSet::threshold)
      .def("margin", &HalfSpaceSet::margin)
      .def("evaluate", &HalfSpaceSet::evaluate)
      .def("__contains__", &HalfSpaceSet::contains)
      .def("contains", &HalfSpaceSet::contains);
  m.def("light_cone_on_worldline", &light_cone_on_worldline);
  m.def("observer_causal_past", &observer_causal_past);
  m.def("observer_causal_future", &observer_causal_future);
  m.def("antipodal_causal_future", &antipodal_causal_future);
  m.def("antipodal_causal_past", &antipodal_causal_past);
  m.def("past_event_horizon", &past_event_horizon);
  m.def("future_event_horizon", &future_event_horizon);
  m.def("observer_sets", [](const WorldLine& line) {
    const ObserverSets s = observer_sets(line);
    py::dict out;
    out["causal_past"] = s.causal_past;
    out["causal_future"] = s.causal_future;
    out["antipodal_causal_future"] = s.antipodal_causal_future;
    out["antipodal_causal_past"] = s.antipodal_causal_past;
    out["past_horizon"] = s.past_horizon;
    out["future_horizon"] = s.future_horizon;
    return out;
  });

  m.def("causal_past_of_event", &causal_past_of_event, py::arg("q"), py::arg("p"));
  m.def("causal_future_of_event", &causal_future_of_event, py::arg("q"), py::arg("p"));
  m.def("chord_oracle", &chord_oracle, py::arg("p"), py::arg("q"), py::arg("side"));

  py::class_<NestingReport>(m, "NestingReport")
      .def_readonly("samples", &NestingReport::samples)
      .def_readonly("violations", &NestingReport::violations)
      .def_readonly("worst_margin", &NestingReport::worst_margin)
      .def_readonly("apex", &NestingReport::apex);
  m.def("nesting_check", &nesting_check, py::arg("ctx"), py::arg("psi1"), py::arg("psi2"),
        py::arg("samples"), py::arg("sampler"));
  m.def("horizon_limit_check",
        [](const SpacetimeContext& ctx, const Event& q, const std::vector<double>& psis) {
          return horizon_limit_check(ctx, q, psis);
        });
  m.def("observation_witness", &observation_witness);
  m.def("throat_distance", &throat_distance);

  py::class_<ThroatIntersection>(m, "ThroatIntersection")
      .def_readonly("center", &ThroatIntersection::center)
      .def_readonly("points", &ThroatIntersection::points)
      .def_readonly("distances", &ThroatIntersection::distances)
      .def_readonly("max_distance_error", &ThroatIntersection::max_distance_error);
  m.def("throat_intersection", &throat_intersection, py::arg("line"), py::arg("samples"),
        py::arg("sampler"));

  m.def("antipode", &antipode);
  py::class_<QuotientPoint>(m, "QuotientPoint")
      .def_property_readonly("representative", &QuotientPoint::representative)
      .def(py::self == py::self);
  m.def("quotient_rep", &quotient_rep);

  py::class_<SymmetryReport>(m, "SymmetryReport")
      .def_readonly("samples", &SymmetryReport::samples)
      .def_readonly("violations", &SymmetryReport::violations);
  m.def("injectivity_check", &injectivity_check, py::arg("region"), py::arg("samples"),
        py::arg("sampler"));
  m.def("horizon_symmetry_check", &horizon_symmetry_check, py::arg("ctx"), py::arg("samples"),
        py::arg("sampler"));

  py::enum_<FigureKind>(m, "FigureKind")
      .value("Bounded", FigureKind::Bounded)
      .value("Compactified", FigureKind::Compactified)
      .value("Cones", FigureKind::Cones);

  py::class_<Polyline>(m, "Polyline")
      .def_readonly("label", &Polyline::label)
      .def_readonly("points", &Polyline::points)
      .def_readonly("closed", &Polyline::closed);
  py::class_<FigureScene>(m, "FigureScene")
      .def_readonly("polylines", &FigureScene::polylines)
      .def_readonly("throat_markers", &FigureScene::throat_markers);

  m.def("build_scene", [](const SpacetimeContext& ctx, const std::string& kind, double t_max,
                          std::size_t resolution, std::vector<double> psi_list,
                          bool annotate_throat, bool both_halves) {
          return build_scene(ctx, scene_options(kind, t_max, resolution, std::move(psi_list),
                                                annotate_throat, both_halves));
        },
        py::arg("ctx"), py::arg("kind") = "fig2", py::arg("t_max") = 2.0,
        py::arg("resolution") = 48, py::arg("psi_list") = std::vector<double>{0.0, 1.0},
        py::arg("annotate_throat") = false, py::arg("both_halves") = false);
  m.def("render_svg", [](const FigureScene& scene) {
    std::ostringstream out;
    write_svg(scene, out);
    return out.str();
  });
  m.def("render_csv", [](const FigureScene& scene) {
    std::ostringstream out;
    write_csv(scene, out);
    return out.str();
  });
}
