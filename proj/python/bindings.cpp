#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nvgroups/axioms.hpp"
#include "nvgroups/coset.hpp"
#include "nvgroups/errors.hpp"
#include "nvgroups/serialize.hpp"
#include "nvgroups/topology.hpp"

namespace py = pybind11;
using namespace nvgroups;

namespace {

// nlohmann -> python objects via the json module; payloads are small.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

UnitQuaternion unit_from(const py::object& obj) {
  if (py::isinstance<UnitQuaternion>(obj)) return obj.cast<UnitQuaternion>();
  if (py::isinstance<Quaternion>(obj)) return UnitQuaternion(obj.cast<Quaternion>());
  const auto c = obj.cast<std::vector<double>>();
  if (c.size() != 4) throw std::invalid_argument("expected 4 coordinates w, x, y, z");
  return UnitQuaternion(Quaternion{c[0], c[1], c[2], c[3]});
}

std::string quat_repr(const char* name, const Quaternion& q) {
  std::ostringstream s;
  s << name << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
  return s.str();
}

}  // namespace

PYBIND11_MODULE(nvgroups, m) {
  m.doc() = "Coset n-valued groups Sp(1)/G and SO(3)/G for finite G in SO(3)";

  py::register_exception<ClosureFailure>(m, "ClosureFailure", PyExc_RuntimeError);
  py::register_exception<ConsistencyFailure>(m, "ConsistencyFailure", PyExc_RuntimeError);

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<>())
      .def(py::init([](double x, double y, double z) { return Vec3{x, y, z}; }))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z)
      .def("norm", &Vec3::norm)
      .def("normalized", &Vec3::normalized)
      .def("tolist", [](const Vec3& v) { return std::vector<double>{v.x, v.y, v.z}; })
      .def("__repr__", [](const Vec3& v) {
        std::ostringstream s;
        s << "Vec3(" << v.x << ", " << v.y << ", " << v.z << ")";
        return s.str();
      });

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init([](double w, double x, double y, double z) { return Quaternion{w, x, y, z}; }),
           py::arg("w"), py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0)
      .def_readwrite("w", &Quaternion::w)
      .def_readwrite("x", &Quaternion::x)
      .def_readwrite("y", &Quaternion::y)
      .def_readwrite("z", &Quaternion::z)
      .def_static("one", &Quaternion::one)
      .def_static("i", &Quaternion::i)
      .def_static("j", &Quaternion::j)
      .def_static("k", &Quaternion::k)
      .def("norm", &Quaternion::norm)
      .def("conj", [](const Quaternion& q) { return conj(q); })
      .def("tolist", [](const Quaternion& q) { return q.coords(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * double())
      .def(py::self == py::self)
      .def("__mul__", [](const Quaternion& a, const Quaternion& b) { return a * b; }, py::is_operator())
      .def("__repr__", [](const Quaternion& q) { return quat_repr("Quaternion", q); });

  py::class_<UnitQuaternion>(m, "UnitQuaternion")
      .def(py::init<>())
      .def(py::init<const Quaternion&>())
      .def(py::init([](double w, double x, double y, double z) { return UnitQuaternion(Quaternion{w, x, y, z}); }))
      .def_static("from_axis_angle", &UnitQuaternion::from_axis_angle)
      .def_property_readonly("w", &UnitQuaternion::w)
      .def_property_readonly("x", &UnitQuaternion::x)
      .def_property_readonly("y", &UnitQuaternion::y)
      .def_property_readonly("z", &UnitQuaternion::z)
      .def("value", &UnitQuaternion::value)
      .def("tolist", [](const UnitQuaternion& q) { return q.value().coords(); })
      .def("inverse", [](const UnitQuaternion& q) { return inverse(q); })
      .def(-py::self)
      .def("__mul__", [](const UnitQuaternion& a, const UnitQuaternion& b) { return (a * b).renormalized(); },
           py::is_operator())
      .def("__repr__", [](const UnitQuaternion& q) { return quat_repr("UnitQuaternion", q.value()); });
  py::implicitly_convertible<Quaternion, UnitQuaternion>();

  m.def("qmul", &qmul);
  m.def("distance", py::overload_cast<const Quaternion&, const Quaternion&>(&distance));
  m.def("conj_action", [](const py::object& q, const Vec3& v) { return conj_action(unit_from(q), v); });
  m.def("rotation_of", [](const py::object& q) {
    const AxisAngle r = rotation_of(unit_from(q));
    return py::make_tuple(r.axis ? py::cast(*r.axis) : py::none(), r.angle);
  });

  py::enum_<Family>(m, "Family")
      .value("Cyclic", Family::Cyclic)
      .value("Dihedral", Family::Dihedral)
      .value("Tetrahedral", Family::Tetrahedral)
      .value("Octahedral", Family::Octahedral)
      .value("Icosahedral", Family::Icosahedral);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def_static("cyclic", &GroupSpec::cyclic)
      .def_static("dihedral", &GroupSpec::dihedral)
      .def_static("tetrahedral", &GroupSpec::tetrahedral)
      .def_static("octahedral", &GroupSpec::octahedral)
      .def_static("icosahedral", &GroupSpec::icosahedral)
      .def_static("parse", [](const std::string& s) { return GroupSpec::parse(s); })
      .def_readonly("family", &GroupSpec::family)
      .def_readonly("param", &GroupSpec::param)
      .def_property_readonly("name", &GroupSpec::name)
      .def("order", &GroupSpec::order)
      .def(py::self == py::self)
      .def("__repr__", [](const GroupSpec& s) { return "GroupSpec('" + s.name() + "')"; });
  m.def("catalog", &catalog);

  py::class_<RotationGroup>(m, "RotationGroup")
      .def_property_readonly("spec", &RotationGroup::spec)
      .def("order", &RotationGroup::order)
      .def("__len__", &RotationGroup::order)
      .def("elements", [](const RotationGroup& g) {
        std::vector<UnitQuaternion> out;
        for (const auto& e : g.elements()) out.push_back(e.rep());
        return out;
      })
      .def("cover", &RotationGroup::cover)
      .def_property_readonly("identity_index", &RotationGroup::identity_index);

  m.def("build_group", [](const py::object& spec) {
    if (py::isinstance<py::str>(spec)) return build_group(GroupSpec::parse(spec.cast<std::string>()));
    return build_group(spec.cast<GroupSpec>());
  });
  m.def("binary_cover", &binary_cover);
  m.def("has_half_turn", &has_half_turn);
  m.def("element_order", [](const py::object& g, const RotationGroup& group) {
    return element_order(ProjPoint(unit_from(g)), group);
  });
  m.def("perturb_element", &perturb_element, py::arg("group"), py::arg("index"), py::arg("axis"),
        py::arg("angle"));

  py::enum_<Base>(m, "Base").value("Sp1", Base::Sp1).value("SO3", Base::SO3);

  py::class_<Orbit>(m, "Orbit")
      .def_readonly("rep", &Orbit::rep)
      .def_readonly("tie", &Orbit::tie)
      .def("__repr__", [](const Orbit& o) { return quat_repr("Orbit", o.rep.value()); });

  py::class_<OrbitMultiset>(m, "OrbitMultiset")
      .def_readonly("items", &OrbitMultiset::items)
      .def("__len__", &OrbitMultiset::size)
      .def("tie_warnings", &OrbitMultiset::tie_warnings);

  py::class_<CosetSpace>(m, "CosetSpace")
      .def(py::init([](const py::object& base, const RotationGroup& group) {
             const Base b = py::isinstance<py::str>(base) ? parse_base(base.cast<std::string>()) : base.cast<Base>();
             return CosetSpace(b, group);
           }),
           py::arg("base"), py::arg("group"))
      .def_property_readonly("base", &CosetSpace::base)
      .def_property_readonly("group", &CosetSpace::group)
      .def_property_readonly("n", &CosetSpace::n)
      .def("descriptor", &CosetSpace::descriptor)
      .def("project", [](const CosetSpace& s, const py::object& w) { return s.project(unit_from(w)); })
      .def("identity", &CosetSpace::identity)
      .def("images", [](const CosetSpace& s, const py::object& w) { return s.images(unit_from(w)); })
      .def("mu", &CosetSpace::mu)
      .def("mu_points",
           [](const CosetSpace& s, const py::object& a, const py::object& b) {
             return s.mu_points(unit_from(a), unit_from(b));
           })
      .def("inv", &CosetSpace::inv)
      .def("mu_left", &CosetSpace::mu_left)
      .def("mu_right", &CosetSpace::mu_right)
      .def("orbit_distance", &CosetSpace::orbit_distance)
      .def("is_generic", [](const CosetSpace& s, const py::object& w) { return s.is_generic(unit_from(w)); })
      .def("multiset_equal", &CosetSpace::multiset_equal, py::arg("a"), py::arg("b"),
           py::arg("tol") = kAxiomTolerance);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("space", &AxiomReport::space)
      .def_readonly("axiom", &AxiomReport::axiom)
      .def_readonly("trials", &AxiomReport::trials)
      .def_readonly("failures", &AxiomReport::failures)
      .def_readonly("max_deviation", &AxiomReport::max_deviation)
      .def_readonly("warnings", &AxiomReport::warnings)
      .def_readonly("tolerance", &AxiomReport::tolerance)
      .def_property_readonly("passed", &AxiomReport::passed);

  m.def("check_identity", &check_identity, py::arg("space"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("tol") = kAxiomTolerance);
  m.def("check_inverse", &check_inverse, py::arg("space"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("tol") = kAxiomTolerance);
  m.def("check_assoc", &check_assoc, py::arg("space"), py::arg("triples"), py::arg("seed") = 0,
        py::arg("tol") = kAxiomTolerance);
  m.def("check_well_defined", &check_well_defined, py::arg("space"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("tol") = kAxiomTolerance);
  m.def(
      "run_suite",
      [](const CosetSpace& s, std::uint64_t seed, double tol) {
        return run_suite(s, default_counts(s.group().spec()), seed, tol);
      },
      py::arg("space"), py::arg("seed") = 0, py::arg("tol") = kAxiomTolerance);

  py::enum_<Space3>(m, "Space3").value("S3", Space3::S3).value("RP3", Space3::RP3);

  py::class_<AntipodalSolutions>(m, "AntipodalSolutions")
      .def_readonly("solvable", &AntipodalSolutions::solvable)
      .def_readonly("axis", &AntipodalSolutions::axis)
      .def("sample_circle", &AntipodalSolutions::sample_circle);
  m.def("solve_antipodal", [](const py::object& q) { return solve_antipodal(unit_from(q)); });
  m.def("tau_has_fixed_points", &tau_has_fixed_points);
  m.def("singular_signature", [](const RotationGroup& g) { return singular_orbits(g).signature(); });
  m.def("riemann_hurwitz_check", &riemann_hurwitz_check);

  py::class_<ClassificationReport>(m, "ClassificationReport")
      .def_readonly("base", &ClassificationReport::base)
      .def_readonly("spec", &ClassificationReport::spec)
      .def_readonly("n", &ClassificationReport::n)
      .def_readonly("tau_fixed_points", &ClassificationReport::tau_fixed_points)
      .def_readonly("has_half_turn", &ClassificationReport::has_half_turn)
      .def_readonly("predicted", &ClassificationReport::predicted)
      .def_readonly("parity_consistent", &ClassificationReport::parity_consistent)
      .def_property_readonly("suspension", [](const ClassificationReport& r) { return r.suspension.passed; })
      .def_property_readonly("riemann_hurwitz",
                             [](const ClassificationReport& r) { return r.riemann_hurwitz.holds; });

  m.def("classify", [](const py::object& base, const py::object& spec) {
    const Base b = py::isinstance<py::str>(base) ? parse_base(base.cast<std::string>()) : base.cast<Base>();
    if (py::isinstance<py::str>(spec)) return classify(b, GroupSpec::parse(spec.cast<std::string>()));
    if (py::isinstance<RotationGroup>(spec)) return classify(b, spec.cast<RotationGroup>());
    return classify(b, spec.cast<GroupSpec>());
  });

  m.def("group_json", [](const RotationGroup& g) { return to_python(group_json(g)); });
  m.def("orbit_json", [](const CosetSpace& s, const Orbit& o) { return to_python(orbit_json(s, o)); });
  m.def("multiset_json", [](const CosetSpace& s, const OrbitMultiset& ms) { return to_python(multiset_json(s, ms)); });
  m.def("report_json", [](const AxiomReport& r) { return to_python(report_json(r)); });
  m.def("classification_json", [](const ClassificationReport& r) { return to_python(report_json(r)); });
}
