#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ptrans/presets.hpp"
#include "ptrans/report.hpp"
#include "ptrans/resonance.hpp"
#include "ptrans/scan.hpp"

namespace py = pybind11;
using namespace ptrans;

PYBIND11_MODULE(_core, m) {
    m.doc() = "transmission and resonances for parity-invariant point interactions on a line";
    m.attr("__version__") = kToolVersion;

    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<SingularPeak>(m, "SingularPeakError", PyExc_ArithmeticError);
    py::register_exception<NotApplicableError>(m, "NotApplicableError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ConfigParseError", PyExc_ValueError);

    py::class_<ExtendedLength>(m, "ExtendedLength")
        .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
        .def_static("from_value", &ExtendedLength::from_value, py::arg("value"))
        .def_static("infinite", &ExtendedLength::infinite)
        .def_property_readonly("p", &ExtendedLength::p)
        .def_property_readonly("q", &ExtendedLength::q)
        .def_property_readonly("value", &ExtendedLength::value)
        .def_property_readonly("is_finite", &ExtendedLength::is_finite)
        .def("negated", &ExtendedLength::negated)
        .def("almost_equal", &ExtendedLength::almost_equal, py::arg("other"),
             py::arg("tol") = 1e-12)
        .def("__repr__", [](const ExtendedLength& l) {
            return l.is_finite() ? "ExtendedLength(" + format_double(l.value()) + ")"
                                 : std::string("ExtendedLength(inf)");
        });

    py::class_<Junction>(m, "Junction")
        .def_static("from_angles", &Junction::from_angles, py::arg("theta_plus"),
                    py::arg("theta_minus"), py::arg("l0") = 1.0)
        .def_static("from_lengths",
                    py::overload_cast<double, double, double>(&Junction::from_lengths),
                    py::arg("l_plus"), py::arg("l_minus"), py::arg("l0") = 1.0)
        .def_static("from_extended_lengths",
                    py::overload_cast<ExtendedLength, ExtendedLength, double>(
                        &Junction::from_lengths),
                    py::arg("l_plus"), py::arg("l_minus"), py::arg("l0") = 1.0)
        .def_property_readonly("theta_plus", &Junction::theta_plus)
        .def_property_readonly("theta_minus", &Junction::theta_minus)
        .def_property_readonly("l0", &Junction::l0)
        .def_property_readonly("l_plus", &Junction::l_plus)
        .def_property_readonly("l_minus", &Junction::l_minus)
        .def_property_readonly("xi", &Junction::xi)
        .def_property_readonly("zeta", &Junction::zeta)
        .def("negated", &Junction::negated)
        .def("swapped", &Junction::swapped);

    py::enum_<BoundaryTag>(m, "BoundaryTag")
        .value("Decoupling", BoundaryTag::Decoupling)
        .value("Neumann", BoundaryTag::Neumann)
        .value("Dirichlet", BoundaryTag::Dirichlet)
        .value("Free", BoundaryTag::Free)
        .value("PhaseInversion", BoundaryTag::PhaseInversion)
        .value("DiracDelta", BoundaryTag::DiracDelta)
        .value("Generic", BoundaryTag::Generic);

    py::class_<BoundaryClass>(m, "BoundaryClass")
        .def_readonly("tag", &BoundaryClass::tag)
        .def_readonly("length", &BoundaryClass::length)
        .def("__repr__", [](const BoundaryClass& c) {
            return std::string("BoundaryClass(") + to_string(c.tag) + ")";
        });

    m.def("classify_junction", &classify_junction, py::arg("junction"), py::arg("tol") = 1e-12);

    py::enum_<IncidentSide>(m, "IncidentSide")
        .value("Left", IncidentSide::Left)
        .value("Right", IncidentSide::Right);

    py::class_<SingleSolution>(m, "SingleSolution")
        .def_readonly("k", &SingleSolution::k)
        .def_readonly("reflection", &SingleSolution::reflection)
        .def_readonly("transmission", &SingleSolution::transmission)
        .def_readonly("t1", &SingleSolution::t1)
        .def_readonly("r1", &SingleSolution::r1)
        .def_readonly("from_singular_system", &SingleSolution::from_singular_system);

    m.def("single_amplitudes", &single_amplitudes, py::arg("junction"), py::arg("k"));
    m.def("t1", &t1, py::arg("junction"), py::arg("k"));
    m.def("single_oracle", &single_oracle, py::arg("junction"), py::arg("k"),
          py::arg("side") = IncidentSide::Left);

    py::class_<DoubleBarrier>(m, "DoubleBarrier")
        .def(py::init<Junction, Junction, double>(), py::arg("left"), py::arg("right"),
             py::arg("separation"))
        .def_readonly("left", &DoubleBarrier::left)
        .def_readonly("right", &DoubleBarrier::right)
        .def_readonly("separation", &DoubleBarrier::separation);

    py::class_<DoubleSolution>(m, "DoubleSolution")
        .def_readonly("k", &DoubleSolution::k)
        .def_readonly("reflection", &DoubleSolution::reflection)
        .def_readonly("mid_right", &DoubleSolution::mid_right)
        .def_readonly("mid_left", &DoubleSolution::mid_left)
        .def_readonly("transmission", &DoubleSolution::transmission)
        .def_readonly("delta", &DoubleSolution::delta)
        .def_readonly("t2", &DoubleSolution::t2)
        .def_readonly("r2", &DoubleSolution::r2);

    m.def("double_amplitudes", &double_amplitudes, py::arg("config"), py::arg("k"));
    m.def("t2", &t2, py::arg("config"), py::arg("k"));
    m.def("double_oracle", &double_oracle, py::arg("config"), py::arg("k"));

    py::class_<TransferCheck>(m, "TransferCheck")
        .def_readonly("applicable", &TransferCheck::applicable)
        .def_readonly("t2_transfer", &TransferCheck::t2_transfer)
        .def_readonly("t2_closed", &TransferCheck::t2_closed)
        .def_readonly("deviation", &TransferCheck::deviation);

    m.def("transfer_compose_check", &transfer_compose_check, py::arg("config"), py::arg("k"));

    py::class_<ResonanceMatrix>(m, "ResonanceMatrix")
        .def_readonly("m11", &ResonanceMatrix::m11)
        .def_readonly("m12", &ResonanceMatrix::m12)
        .def_readonly("m21", &ResonanceMatrix::m21)
        .def_readonly("m22", &ResonanceMatrix::m22)
        .def("max_abs", &ResonanceMatrix::max_abs);

    m.def("resonance_matrix", &resonance_matrix, py::arg("config"), py::arg("k"));
    m.def("resonance_residuals", &resonance_residuals, py::arg("config"), py::arg("k"));
    m.def("resonance_residuals_normalized", &resonance_residuals_normalized, py::arg("config"),
          py::arg("k"));
    m.def("resonance_determinant", &resonance_determinant, py::arg("config"), py::arg("k"));

    py::class_<QuarticCoefficients>(m, "QuarticCoefficients")
        .def_readonly("alpha", &QuarticCoefficients::alpha)
        .def_readonly("beta", &QuarticCoefficients::beta)
        .def_readonly("gamma", &QuarticCoefficients::gamma);

    m.def("quartic_coefficients", &quartic_coefficients, py::arg("config"));

    py::enum_<Relation>(m, "Relation")
        .value("SymmetricSame", Relation::SymmetricSame)
        .value("SymmetricSwapped", Relation::SymmetricSwapped)
        .value("AntiSame", Relation::AntiSame)
        .value("AntiSwapped", Relation::AntiSwapped)
        .value("NoRelation", Relation::None);

    m.def("classify_relation", &classify_relation, py::arg("config"), py::arg("tol") = 1e-12);

    py::enum_<RootKind>(m, "RootKind")
        .value("TanCondition", RootKind::TanCondition)
        .value("SinCondition", RootKind::SinCondition)
        .value("InverseSqrt", RootKind::InverseSqrt)
        .value("Incidental", RootKind::Incidental);

    py::class_<ResonanceRoot>(m, "ResonanceRoot")
        .def_readonly("k", &ResonanceRoot::k)
        .def_readonly("kind", &ResonanceRoot::kind)
        .def_readonly("residual", &ResonanceRoot::residual)
        .def_readonly("tangency", &ResonanceRoot::tangency)
        .def("__repr__", [](const ResonanceRoot& r) {
            return "ResonanceRoot(k=" + format_double(r.k) + ", kind=" + to_string(r.kind) + ")";
        });

    m.def("resonance_roots_symmetric", &resonance_roots_symmetric, py::arg("j1"), py::arg("a"),
          py::arg("k_max"));
    m.def("resonance_roots_antisymmetric", &resonance_roots_antisymmetric, py::arg("j1"),
          py::arg("a"), py::arg("k_max"));
    m.def("resonance_roots", &resonance_roots, py::arg("config"), py::arg("k_max"));
    m.def("resonance_rhs_f", &resonance_rhs_f, py::arg("j1"), py::arg("k"));

    py::enum_<IncidentalStatus>(m, "IncidentalStatus")
        .value("Candidates", IncidentalStatus::Candidates)
        .value("NoCandidate", IncidentalStatus::NoCandidate)
        .value("NotApplicable", IncidentalStatus::NotApplicable);

    py::class_<IncidentalCandidate>(m, "IncidentalCandidate")
        .def_readonly("k", &IncidentalCandidate::k)
        .def_readonly("verified", &IncidentalCandidate::verified)
        .def_readonly("t2_value", &IncidentalCandidate::t2_value);

    py::class_<IncidentalResult>(m, "IncidentalResult")
        .def_readonly("status", &IncidentalResult::status)
        .def_readonly("candidates", &IncidentalResult::candidates);

    m.def("incidental_resonance", &incidental_resonance, py::arg("config"));

    py::class_<PeakWidth>(m, "PeakWidth")
        .def_readonly("k_n", &PeakWidth::k_n)
        .def_readonly("width", &PeakWidth::width);

    m.def("peak_width", &peak_width, py::arg("j1"), py::arg("a"), py::arg("n"));

    py::class_<ResonanceSummary>(m, "ResonanceSummary")
        .def_readonly("relation", &ResonanceSummary::relation)
        .def_readonly("quartic", &ResonanceSummary::quartic)
        .def_readonly("roots", &ResonanceSummary::roots)
        .def_readonly("incidental", &ResonanceSummary::incidental);

    m.def("resonance_summary", &resonance_summary, py::arg("config"), py::arg("k_max"));

    py::enum_<ScanMode>(m, "ScanMode")
        .value("Single", ScanMode::Single)
        .value("Double", ScanMode::Double);

    py::class_<KRange>(m, "KRange")
        .def_readonly("k_min", &KRange::k_min)
        .def_readonly("k_max", &KRange::k_max)
        .def_readonly("samples", &KRange::samples);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("mode", &Scenario::mode)
        .def_readonly("j1", &Scenario::j1)
        .def_readonly("j2", &Scenario::j2)
        .def_readonly("separation", &Scenario::separation)
        .def_readonly("k_range", &Scenario::k_range);

    m.def("parse_scenario",
          [](const std::string& text) { return parse_scenario(text); }, py::arg("text"));

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("k", &ScanRow::k)
        .def_readonly("t", &ScanRow::t)
        .def_readonly("r1", &ScanRow::r1)
        .def_readonly("r2", &ScanRow::r2);

    py::class_<ScanTable>(m, "ScanTable")
        .def_readonly("meta", &ScanTable::meta)
        .def_readonly("rows", &ScanTable::rows)
        .def_readonly("has_residuals", &ScanTable::has_residuals);

    m.def("run_scan", &run_scan, py::arg("scenario"));
    m.def("to_csv", &to_csv, py::arg("table"));
    m.def("emit_report", &emit_report, py::arg("scenario"));
    m.def("preset_names", &preset_names);
    m.def("run_preset", &run_preset, py::arg("name"), py::arg("out_dir"));
}
