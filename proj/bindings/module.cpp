// Python bindings for the main operations: causal order, covering surfaces,
// the set library, the compactness classifier, and the lattice wave kit.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "causalkit/classifier.hpp"
#include "causalkit/wave.hpp"

namespace py = pybind11;
using namespace causalkit;

namespace {

std::string status_str(VerdictEntry::Status s) {
    switch (s) {
        case VerdictEntry::Status::Certificate: return "certificate";
        case VerdictEntry::Status::Refutation: return "refutation";
        case VerdictEntry::Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_causalkit, m) {
    m.doc() = "causal structure toolkit: cone arithmetic, covering surfaces, "
              "compactness certificates, and a 1+1 lattice wave operator";

    py::class_<Point>(m, "Point")
        .def_readonly("t", &Point::t)
        .def_readonly("dim", &Point::dim)
        .def_property_readonly("x", [](const Point& p) -> py::tuple {
            if (p.dim == 1) return py::make_tuple(p.x[0]);
            return py::make_tuple(p.x[0], p.x[1]);
        })
        .def("__repr__", [](const Point& p) {
            std::ostringstream os;
            os << "Point(t=" << p.t << ", x=" << p.x[0];
            if (p.dim == 2) os << ", " << p.x[1];
            os << ")";
            return os.str();
        });
    m.def("point", [](double t, double x0) { return make_point(t, x0); });
    m.def("point", [](double t, double x0, double x1) { return make_point(t, x0, x1); });

    py::class_<Spacetime>(m, "Spacetime")
        .def_static("minkowski", &Spacetime::minkowski, py::arg("dim") = 1)
        .def_static("future_cone", &Spacetime::future_cone, py::arg("dim") = 1)
        .def_readonly("dim", &Spacetime::dim)
        .def("contains", &Spacetime::contains);

    m.def("causally_precedes", &causally_precedes);
    m.def("chronologically_precedes", &chronologically_precedes);

    py::class_<CompactCloud>(m, "CompactCloud")
        .def_readonly("points", &CompactCloud::points);
    m.def("cloud", [](const std::vector<std::pair<double, double>>& pts) {
        std::vector<Point> v;
        for (const auto& [t, x] : pts) v.push_back(make_point(t, x));
        return make_cloud(v, Spacetime::minkowski(1));
    });

    py::enum_<Direction>(m, "Direction")
        .value("future", Direction::Future)
        .value("past", Direction::Past)
        .value("both", Direction::Both);
    m.def("in_causal_set", &in_causal_set);

    py::class_<SurfaceGraph>(m, "SurfaceGraph")
        .def_readonly("label", &SurfaceGraph::label)
        .def_readonly("lipschitz_bound", &SurfaceGraph::lipschitz_bound)
        .def("cauchy_certifiable", &SurfaceGraph::cauchy_certifiable)
        .def("value", [](const SurfaceGraph& s, double x) { return s.value(x); })
        .def("value", [](const SurfaceGraph& s, double x0, double x1) {
            return s.value(Spatial{x0, x1});
        });
    m.def("flat_leaf", &flat_leaf, py::arg("s"), py::arg("dim") = 1);
    m.def("construct_sigma_minus", &construct_sigma_minus);
    m.def("construct_sigma_plus", &construct_sigma_plus);
    m.def("gaussian_surface", &gaussian_surface, py::arg("dim") = 1);

    py::class_<AnalyticSet>(m, "AnalyticSet")
        .def_readonly("label", &AnalyticSet::label)
        .def("member", [](const AnalyticSet& a, const Point& p) { return a.member(p); })
        .def("sample", [](const AnalyticSet& a, double radius, int count,
                          std::uint64_t seed) { return a.sample(radius, count, seed); },
             py::arg("radius") = 6.0, py::arg("count") = 200, py::arg("seed") = 1);
    m.def("gaussian_band", &gaussian_band, py::arg("dim") = 1);
    m.def("hyperbola_band", &hyperbola_band, py::arg("dim") = 1);
    m.def("causal_region", &causal_region, py::arg("cloud"),
          py::arg("direction") = Direction::Both);
    m.def("finite_set", &finite_set);
    m.def("boost_plane_set", [](double v) { return boost_plane(v, 1).set; });

    py::class_<VerdictEntry>(m, "VerdictEntry")
        .def_property_readonly("status",
                               [](const VerdictEntry& e) { return status_str(e.status); })
        .def_readonly("detail", &VerdictEntry::detail)
        .def_readonly("refuting_surface", &VerdictEntry::refuting_surface)
        .def_property_readonly("refuting_point", [](const VerdictEntry& e) {
            return e.refuting_point ? py::cast(*e.refuting_point) : py::none().cast<py::object>();
        });
    py::class_<Verdict>(m, "Verdict")
        .def_readonly("sc", &Verdict::sc)
        .def_readonly("fc", &Verdict::fc)
        .def_readonly("pc", &Verdict::pc)
        .def_readonly("tc", &Verdict::tc)
        .def_readonly("fsc", &Verdict::fsc)
        .def_readonly("psc", &Verdict::psc);
    m.def("classify", [](const AnalyticSet& a) { return classify(a, SearchBudget{}); });

    py::class_<Grid>(m, "Grid")
        .def_readonly("dt", &Grid::dt)
        .def_readonly("dx", &Grid::dx)
        .def_readonly("nt", &Grid::nt)
        .def_readonly("jhalf", &Grid::jhalf)
        .def_property_readonly("lam", &Grid::lambda);
    m.def("make_grid", &make_grid);

    py::class_<LatticeField>(m, "LatticeField")
        .def_readonly("grid", &LatticeField::grid)
        .def_property_readonly("support_class", [](const LatticeField& f) {
            return to_string(f.support_class);
        })
        .def("at", [](const LatticeField& f, int n, int j) { return f.at(n, j); })
        .def("set", [](LatticeField& f, int n, int j, double v) { f.at(n, j) = v; })
        .def_static("zeros", [](const Grid& g, const std::string& cls) {
            const auto c = support_class_from_string(cls);
            if (!c) throw std::invalid_argument("unknown support class " + cls);
            return LatticeField::zeros(g, *c);
        }, py::arg("grid"), py::arg("support_class") = "compact")
        .def_static("impulse", [](const Grid& g, int n, int j, double amplitude) {
            return LatticeField::impulse(g, n, j, amplitude);
        }, py::arg("grid"), py::arg("n"), py::arg("j"), py::arg("amplitude") = 1.0);

    m.def("green_retarded", &green_retarded);
    m.def("green_advanced", &green_advanced);
    m.def("apply_wave_operator", &apply_wave_operator);
    m.def("solve_cauchy", &solve_cauchy, py::arg("u0"), py::arg("u1"), py::arg("steps"),
          py::arg("dt") = 1.0, py::arg("dx") = 1.0);
    m.def("pairing", &pairing);
    m.def("leapfrog_energy", &leapfrog_energy);
    m.def("dual_class", [](const std::string& cls) {
        const auto c = support_class_from_string(cls);
        if (!c) throw std::invalid_argument("unknown support class " + cls);
        return to_string(PairingGuard::dual(*c));
    });
}
