#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "esdlab/experiments.hpp"
#include "esdlab/scenario.hpp"

namespace py = pybind11;
using namespace esdlab;

namespace {

Matrix matrix_from_numpy(const py::array_t<cplx, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() == 1) {
        Matrix m(static_cast<std::size_t>(arr.shape(0)), 1);
        for (py::ssize_t i = 0; i < arr.shape(0); ++i) m(static_cast<std::size_t>(i), 0) = arr.at(i);
        return m;
    }
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 1-d or 2-d complex array");
    Matrix m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
    for (py::ssize_t i = 0; i < arr.shape(0); ++i)
        for (py::ssize_t j = 0; j < arr.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = arr.at(i, j);
    return m;
}

py::array_t<cplx> matrix_to_numpy(const Matrix& m) {
    py::array_t<cplx> out({m.rows(), m.cols()});
    auto buf = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            buf(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
    return out;
}

ScenarioConfig build_config(const std::string& state, const std::vector<std::size_t>& decohere,
                            const std::vector<std::size_t>& filter_qubits,
                            const std::vector<std::string>& measures, double p) {
    ScenarioConfig cfg;
    cfg.state = StateId::parse(state);
    cfg.decohere.insert(decohere.begin(), decohere.end());
    cfg.filter_qubits = filter_qubits;
    cfg.p = p;
    for (const auto& m : measures)
        cfg.measures.push_back(MeasureDescriptor::parse(m, cfg.state.n_qubits));
    cfg.validate();
    return cfg;
}

BipartitionSpec build_partition(const std::vector<std::size_t>& side_a,
                                const std::vector<std::size_t>& side_b,
                                const std::vector<std::size_t>& discarded) {
    BipartitionSpec part;
    part.side_a = side_a;
    part.side_b = side_b;
    part.discarded = discarded;
    return part;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Density-matrix toolkit: damping channels, concurrence measures and "
              "filtering-retrieval experiments on small qubit registers";

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("gamma", &SweepRecord::gamma)
        .def_readonly("kappa", &SweepRecord::kappa)
        .def_readonly("success_prob", &SweepRecord::success_prob)
        .def_readonly("values", &SweepRecord::values)
        .def("__repr__", [](const SweepRecord& r) {
            return "SweepRecord(gamma=" + format_number(r.gamma) +
                   ", prob=" + format_number(r.success_prob) + ")";
        });

    py::class_<WScalingRow>(m, "WScalingRow")
        .def_readonly("n", &WScalingRow::n)
        .def_readonly("k", &WScalingRow::k)
        .def_readonly("gamma_star", &WScalingRow::gamma_star)
        .def_readonly("kappa_star", &WScalingRow::kappa_star)
        .def_readonly("retrieved", &WScalingRow::retrieved)
        .def_readonly("success_prob", &WScalingRow::success_prob)
        .def_readonly("preserved_pairwise", &WScalingRow::preserved_pairwise);

    py::class_<GhzCheckResult>(m, "GhzCheckResult")
        .def_readonly("gamma_star", &GhzCheckResult::gamma_star)
        .def_readonly("gamma_eval", &GhzCheckResult::gamma_eval)
        .def_readonly("applicable", &GhzCheckResult::applicable)
        .def_readonly("no_retrieval", &GhzCheckResult::no_retrieval);

    py::class_<PriceEntry>(m, "PriceEntry")
        .def_readonly("measure", &PriceEntry::measure)
        .def_readonly("before", &PriceEntry::before)
        .def_readonly("after", &PriceEntry::after)
        .def_readonly("delta", &PriceEntry::delta);

    m.def(
        "make_pure",
        [](const std::string& id) { return matrix_to_numpy(make_pure(StateId::parse(id))); },
        py::arg("state"), "Unit-norm state vector for 'w:N', 'ghz:N' or 'cluster4'.");

    m.def(
        "density_from_pure",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& psi) {
            return matrix_to_numpy(density_from_pure(matrix_from_numpy(psi)));
        },
        py::arg("psi"));

    m.def(
        "gad_kraus",
        [](double gamma, double p) {
            std::vector<py::array_t<cplx>> out;
            for (const auto& op : gad_channel(GadParams(gamma, p)).operators)
                out.push_back(matrix_to_numpy(op));
            return out;
        },
        py::arg("gamma"), py::arg("p") = 0.5, "The four damping Kraus operators.");

    m.def(
        "filter_operator",
        [](double kappa) {
            return matrix_to_numpy(filter_channel(FilterParams(kappa)).operators.front());
        },
        py::arg("kappa"));

    m.def(
        "apply_gad",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho,
           const std::vector<std::size_t>& qubits, double gamma, double p) {
            Matrix state = matrix_from_numpy(rho);
            std::size_t n = 0;
            while ((std::size_t{1} << n) < state.rows()) ++n;
            QubitRegister reg(n);
            std::map<std::size_t, KrausChannel> assignment;
            for (std::size_t q : qubits) assignment.emplace(q, gad_channel(GadParams(gamma, p)));
            auto result = apply_channels(state, reg, assignment);
            return py::make_tuple(matrix_to_numpy(result.rho), result.success_prob);
        },
        py::arg("rho"), py::arg("qubits"), py::arg("gamma"), py::arg("p") = 0.5,
        "Returns (unnormalized rho, trace).");

    m.def(
        "apply_filter",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho,
           const std::vector<std::size_t>& qubits, double kappa) {
            Matrix state = matrix_from_numpy(rho);
            std::size_t n = 0;
            while ((std::size_t{1} << n) < state.rows()) ++n;
            QubitRegister reg(n);
            std::map<std::size_t, KrausChannel> assignment;
            for (std::size_t q : qubits) assignment.emplace(q, filter_channel(FilterParams(kappa)));
            auto result = apply_channels(state, reg, assignment);
            return py::make_tuple(matrix_to_numpy(result.rho), result.success_prob);
        },
        py::arg("rho"), py::arg("qubits"), py::arg("kappa"),
        "Returns (unnormalized rho, success probability).");

    m.def(
        "wootters_concurrence",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho) {
            return wootters_concurrence(matrix_from_numpy(rho));
        },
        py::arg("rho"));

    m.def(
        "pairwise_concurrence",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho, std::size_t i,
           std::size_t j) {
            Matrix state = matrix_from_numpy(rho);
            std::size_t n = 0;
            while ((std::size_t{1} << n) < state.rows()) ++n;
            return pairwise_concurrence(state, QubitRegister(n), i, j);
        },
        py::arg("rho"), py::arg("i"), py::arg("j"));

    m.def(
        "bipartite_concurrence",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho,
           const std::vector<std::size_t>& side_a, const std::vector<std::size_t>& side_b,
           const std::vector<std::size_t>& discarded) {
            Matrix state = matrix_from_numpy(rho);
            std::size_t n = 0;
            while ((std::size_t{1} << n) < state.rows()) ++n;
            return bipartite_concurrence(state, QubitRegister(n),
                                         build_partition(side_a, side_b, discarded));
        },
        py::arg("rho"), py::arg("side_a"), py::arg("side_b"),
        py::arg("discarded") = std::vector<std::size_t>{});

    m.def(
        "i_concurrence_pure",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& psi,
           const std::vector<std::size_t>& side_a, const std::vector<std::size_t>& side_b) {
            return i_concurrence_pure(matrix_from_numpy(psi), build_partition(side_a, side_b, {}));
        },
        py::arg("psi"), py::arg("side_a"), py::arg("side_b"));

    m.def(
        "run_point",
        [](const std::string& state, const std::vector<std::size_t>& decohere,
           const std::vector<std::size_t>& filter_qubits, const std::vector<std::string>& measures,
           double gamma, std::optional<double> kappa, double p) {
            return run_point(build_config(state, decohere, filter_qubits, measures, p), gamma,
                             kappa);
        },
        py::arg("state"), py::arg("decohere"), py::arg("filter_qubits"), py::arg("measures"),
        py::arg("gamma"), py::arg("kappa") = std::nullopt, py::arg("p") = 0.5);

    m.def(
        "sweep_gamma",
        [](const std::string& state, const std::vector<std::size_t>& decohere,
           const std::vector<std::size_t>& filter_qubits, const std::vector<std::string>& measures,
           const std::vector<double>& grid, std::optional<double> kappa, double p) {
            return sweep_gamma(build_config(state, decohere, filter_qubits, measures, p), grid,
                               kappa);
        },
        py::arg("state"), py::arg("decohere"), py::arg("filter_qubits"), py::arg("measures"),
        py::arg("grid"), py::arg("kappa") = std::nullopt, py::arg("p") = 0.5);

    m.def(
        "find_esd_threshold",
        [](const std::string& state, const std::vector<std::size_t>& decohere,
           const std::string& measure, double p) {
            ScenarioConfig cfg = build_config(state, decohere, {}, {}, p);
            return find_esd_threshold(cfg,
                                      MeasureDescriptor::parse(measure, cfg.state.n_qubits));
        },
        py::arg("state"), py::arg("decohere"), py::arg("measure"), py::arg("p") = 0.5,
        "Smallest gamma where the measure dies, or None.");

    m.def(
        "solve_equal_kappa",
        [](const std::string& state, const std::vector<std::size_t>& decohere,
           const std::vector<std::size_t>& filter_qubits, double gamma, const std::string& lhs,
           const std::string& rhs, double p) {
            ScenarioConfig cfg = build_config(state, decohere, filter_qubits, {}, p);
            const std::size_t n = cfg.state.n_qubits;
            return solve_equal_kappa(cfg, gamma, MeasureDescriptor::parse(lhs, n),
                                     MeasureDescriptor::parse(rhs, n));
        },
        py::arg("state"), py::arg("decohere"), py::arg("filter_qubits"), py::arg("gamma"),
        py::arg("lhs"), py::arg("rhs"), py::arg("p") = 0.5);

    m.def("w_scaling_row", &w_scaling_row, py::arg("n"), py::arg("k"));
    m.def("w_scaling_study", &w_scaling_study, py::arg("n_max"), py::arg("k_max"));
    m.def("ghz_retrieval_check", &ghz_retrieval_check, py::arg("n"),
          py::arg("gamma") = std::nullopt);
    m.def("cluster_price_report", &cluster_price_report, py::arg("gamma"), py::arg("kappa"));
}
