#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmew/applications.hpp"
#include "gmew/eval.hpp"
#include "gmew/graphstate.hpp"
#include "gmew/io.hpp"
#include "gmew/lift.hpp"
#include "gmew/reproduce.hpp"
#include "gmew/tensor.hpp"
#include "gmew/verify.hpp"

namespace py = pybind11;
using namespace gmew;

namespace {

py::array_t<std::complex<double>> vec_to_numpy(const Vec& v) {
  py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(v.size()));
  auto buf = out.mutable_unchecked<1>();
  for (Eigen::Index i = 0; i < v.size(); ++i) buf(i) = v[i];
  return out;
}

py::array_t<std::complex<double>> mat_to_numpy(const Mat& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto buf = out.mutable_unchecked<2>();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) buf(r, c) = m(r, c);
  return out;
}

Vec numpy_to_vec(const py::array_t<std::complex<double>>& a) {
  const auto buf = a.unchecked<1>();
  Vec v(buf.shape(0));
  for (py::ssize_t i = 0; i < buf.shape(0); ++i) v[i] = buf(i);
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GME witness construction toolkit (C++ core)";

  py::class_<PureState>(m, "PureState")
      .def(py::init([](std::vector<int> dims, py::array_t<std::complex<double>> amps) {
             return PureState(std::move(dims), numpy_to_vec(amps));
           }),
           py::arg("dims"), py::arg("amps"))
      .def_property_readonly("dims", &PureState::dims)
      .def_property_readonly("dim", &PureState::dim)
      .def_property_readonly("amps",
                             [](const PureState& s) { return vec_to_numpy(s.amps()); })
      .def("to_json", &state_to_json)
      .def("__repr__", [](const PureState& s) {
        return "<PureState dim=" + std::to_string(s.dim()) + ">";
      });

  m.def("make_state", &make_state, py::arg("descriptor"), py::arg("dense_limit") = 4096,
        "Build a family state from a descriptor like 'w:n=4' or 'ghz:d=3,n=3'.");

  m.def(
      "schmidt_values",
      [](const PureState& state, std::uint32_t mask) {
        const auto sd = schmidt(state, Bipartition(mask, state.parties()));
        std::vector<double> lambdas;
        for (int i = 0; i < sd.rank; ++i) lambdas.push_back(sd.lambda(i));
        return lambdas;
      },
      py::arg("state"), py::arg("cut_mask"),
      "Schmidt spectrum (descending lambda_i) across the cut given as a bitmask.");

  m.def(
      "bipartitions",
      [](int parties) {
        std::vector<std::uint32_t> masks;
        for (const Bipartition& c : enumerate_bipartitions(parties))
          masks.push_back(c.mask());
        return masks;
      },
      py::arg("parties"));

  py::class_<ConstructedWitness>(m, "Witness")
      .def_property_readonly("descriptor",
                             [](const ConstructedWitness& w) { return w.descriptor; })
      .def_property_readonly("method",
                             [](const ConstructedWitness& w) { return w.method; })
      .def_property_readonly("dim", &ConstructedWitness::dim)
      .def_property_readonly("blocks", &ConstructedWitness::block_count)
      .def_property_readonly("trace", &ConstructedWitness::trace)
      .def_property_readonly("target_expectation",
                             &ConstructedWitness::target_expectation)
      .def_property_readonly("noise_tolerance", &ConstructedWitness::noise_tolerance)
      .def("dense",
           [](const ConstructedWitness& w, std::int64_t limit) {
             return mat_to_numpy(w.dense(limit));
           },
           py::arg("dense_limit") = 4096)
      .def("to_json", [](const ConstructedWitness& w) { return witness_to_json(w); })
      .def("__repr__", [](const ConstructedWitness& w) {
        return "<Witness " + w.descriptor + " (" + w.method + ")>";
      });

  m.def("construct", &make_witness, py::arg("descriptor"),
        py::arg("method") = "analytic", py::arg("dense_limit") = 4096,
        "Construct a GME witness (closed form, or the generic lift).");

  m.def(
      "expectation",
      [](const ConstructedWitness& w, double p) {
        if (const auto* lw = std::get_if<LiftedWitness>(&w.witness))
          return expectation(*lw, NoisyStateModel{lw->target, p});
        return expectation(std::get<DiagonalGraphWitness>(w.witness), p);
      },
      py::arg("witness"), py::arg("p"),
      "Expectation value on rho(p) = p I/D + (1-p)|psi><psi|.");

  m.def("white_noise_tolerance",
        [](const ConstructedWitness& w) { return w.noise_tolerance(); });

  m.def("cluster_noise_tolerance", &cluster_noise_tolerance, py::arg("n"));

  m.def(
      "vk_class",
      [](const std::string& bits) {
        std::uint32_t label = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
          if (bits[i] == '1') label |= 1u << i;
        return vk_class(label, static_cast<int>(bits.size()));
      },
      py::arg("bits"), "V_k class of a graph-basis label given as a 0/1 string.");

  m.def(
      "certify",
      [](const std::string& descriptor) {
        const PureState psi = make_state(descriptor);
        const auto cuts = enumerate_bipartitions(psi.parties());
        const auto bews = optimal_bew_family(psi, cuts);
        const TaggedVectorSet s = harvest(psi, cuts);
        const LiftedWitness lifted = assemble(psi, s, group(s));
        const CertificateReport rep = certify(psi, lifted, bews);
        std::vector<std::pair<std::string, double>> out;
        for (const CutMargin& cm : rep.margins)
          out.emplace_back(cm.cut.to_string(), cm.margin);
        return out;
      },
      py::arg("descriptor"),
      "Domination certificate margins min eig(W_hat - W_cut) per bipartition.");

  m.def(
      "biseparable_min",
      [](const ConstructedWitness& w, int restarts, int iters, std::uint64_t seed) {
        const auto* lw = std::get_if<LiftedWitness>(&w.witness);
        if (!lw) throw std::invalid_argument("dense see-saw needs a lifted witness");
        return biseparable_min_all_cuts(lw->dense(), lw->target.dims(), restarts,
                                        iters, seed);
      },
      py::arg("witness"), py::arg("restarts") = 64, py::arg("iters") = 200,
      py::arg("seed") = 42);

  // Unfaithfulness and measure-bound applications.
  m.def("pf", [](std::vector<double> l) { return pf(SchmidtSpectrum(std::move(l))); });
  m.def("po", [](std::vector<double> l) { return po(SchmidtSpectrum(std::move(l))); });
  m.def("pe", [](std::vector<double> l) { return pe(SchmidtSpectrum(std::move(l))); });
  m.def("fidelity_tolerance_bound", &fidelity_tolerance_bound, py::arg("d"),
        py::arg("n"));
  m.def(
      "ld_maximize",
      [](int d, int starts, std::uint64_t seed) {
        const LdResult r = ld_maximize(d, starts, 4000, seed);
        return py::make_tuple(r.value, r.lambdas);
      },
      py::arg("d"), py::arg("starts") = 200, py::arg("seed") = 42);
  m.def(
      "unfaithful_average",
      [](int d, std::int64_t samples, std::uint64_t seed) {
        const UnfaithfulAverages a = unfaithful_average(d, samples, seed);
        return py::make_tuple(a.gap, a.window, a.ratio);
      },
      py::arg("d"), py::arg("samples") = 100000, py::arg("seed") = 42);
  m.def("gamma_bound", &gamma_bound, py::arg("d"), py::arg("n"), py::arg("p"),
        py::arg("printed_form") = false);
  m.def("ehat_closed", &ehat_closed, py::arg("d"), py::arg("r"));
  m.def(
      "eps_o",
      [](int d, int n, double p) {
        const MeasureBoundResult r = eps_o(d, n, p);
        return py::make_tuple(r.eps_o, r.eps_f, r.r_star);
      },
      py::arg("d"), py::arg("n"), py::arg("p"),
      "Geometric-measure lower bounds (eps_o, eps_f, r_star) for noisy GHZ.");

  m.def(
      "reproduce",
      [](const std::string& figure, std::uint64_t seed, std::int64_t samples,
         int starts) {
        ReproduceOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        opt.starts = starts;
        return reproduce(figure, opt);
      },
      py::arg("figure"), py::arg("seed") = 42, py::arg("samples") = 100000,
      py::arg("starts") = 200, "CSV text for fig1|fig2|fig3|tableA1|tableA2.");

  m.def(
      "verify",
      [](bool fast, int restarts) {
        VerifyOptions opt;
        opt.fast = fast;
        opt.restarts = restarts;
        const VerifyReport rep = run_verification(opt);
        return py::make_tuple(rep.all_pass, rep.to_text());
      },
      py::arg("fast") = true, py::arg("restarts") = 16);

  m.attr("__version__") = "0.1.0";
}
