#include "gmew/verify.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "gmew/eval.hpp"
#include "gmew/families.hpp"
#include "gmew/graphstate.hpp"
#include "gmew/tensor.hpp"

namespace gmew {

namespace {

CorpusEntry make_entry(std::string name, const PureState& state) {
  const auto cuts = enumerate_bipartitions(state.parties());
  CorpusEntry e{std::move(name), state, optimal_bew_family(state, cuts),
                {state, {}, true, ""}, false};
  const TaggedVectorSet s = harvest(state, cuts);
  e.lifted = assemble(state, s, group(s));
  return e;
}

CorpusEntry make_graph_entry(std::string name, int n) {
  const Graph g = cluster_graph(n);
  const PureState state = graph_state_dense(g);
  CorpusEntry e{std::move(name), state, graph_bew_family(g), {state, {}, true, ""},
                true};
  const TaggedVectorSet s = harvest(state, e.bews);
  e.lifted = assemble(state, s, group(s));
  return e;
}

}  // namespace

std::vector<CorpusEntry> build_corpus(bool fast) {
  std::vector<CorpusEntry> corpus;
  if (fast) {
    corpus.push_back(make_entry("w:n=3", w_state(3)));
    corpus.push_back(make_entry("ghz:d=3,n=3", ghz_state(3, 3)));
    corpus.push_back(make_graph_entry("cluster:n=4", 4));
    corpus.push_back(make_entry("singlet4:a=0.6", singlet4_state(singlet_params(0.6, M_PI_2))));
    return corpus;
  }
  for (int n = 3; n <= 5; ++n)
    corpus.push_back(make_entry("w:n=" + std::to_string(n), w_state(n)));
  for (int d = 2; d <= 4; ++d)
    for (int n = 3; n <= 4; ++n)
      corpus.push_back(make_entry(
          "ghz:d=" + std::to_string(d) + ",n=" + std::to_string(n), ghz_state(d, n)));
  for (int n = 4; n <= 6; ++n)
    corpus.push_back(make_graph_entry("cluster:n=" + std::to_string(n), n));
  for (double a : {0.3, 0.6, 0.9})
    for (double theta : {M_PI / 4, M_PI / 2, 3 * M_PI / 4}) {
      std::ostringstream name;
      name << "singlet4:a=" << a << ",theta=" << theta;
      corpus.push_back(make_entry(name.str(), singlet4_state(singlet_params(a, theta))));
    }
  corpus.push_back(make_entry("singlet6", singlet6_state()));
  return corpus;
}

void VerifyReport::add(std::string name, bool pass, std::string detail) {
  all_pass = all_pass && pass;
  checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks)
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name
       << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  os << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

LiftedWitness corrupt_witness(const LiftedWitness& w) {
  LiftedWitness out = w;
  for (WitnessBlock& blk : out.blocks) blk.coeff *= 0.5;
  out.tag = "corrupted";
  return out;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Dense form of the closed-form witness matching the entry, when one exists.
bool analytic_dense(const CorpusEntry& e, Mat& out) {
  const std::string& name = e.name;
  if (name.rfind("w:n=", 0) == 0) {
    out = w_witness(std::stoi(name.substr(4))).dense();
    return true;
  }
  if (name.rfind("ghz:", 0) == 0) {
    const int d = e.state.dims()[0];
    out = schmidt_witness(std::vector<double>(d, 1.0 / d), e.state.parties()).dense();
    return true;
  }
  if (name.rfind("cluster:n=", 0) == 0) {
    out = cluster_witness(e.state.parties()).dense();
    return true;
  }
  if (name == "singlet6") {
    out = singlet6_witness().dense();
    return true;
  }
  return false;
}

VerifyReport verify_entry(const CorpusEntry& e, const VerifyOptions& opt) {
  VerifyReport report;
  const Mat wd = e.lifted.dense();

  const double wpsi = e.lifted.target_expectation();
  report.add(e.name + ": detects target", wpsi < 0.0, "w_psi=" + fmt(wpsi));

  const CertificateReport cert = certify(e.state, e.lifted, e.bews);
  report.add(e.name + ": domination certificate", cert.pass,
             "min margin=" + fmt(cert.min_margin));

  const double bmin = biseparable_min_all_cuts(wd, e.state.dims(), opt.restarts,
                                               opt.iters, opt.seed);
  report.add(e.name + ": biseparable min", bmin >= -1e-7, "min=" + fmt(bmin));

  Mat analytic;
  if (analytic_dense(e, analytic)) {
    const double dev = (wd - analytic).cwiseAbs().maxCoeff();
    report.add(e.name + ": matches closed form", dev <= 1e-10, "max dev=" + fmt(dev));
  }

  // Fidelity domination. The graph-basis family is normalized to target
  // expectation -1, so the fidelity witness is compared in the same scaling.
  const FidelityWitness wf = fidelity_gme_witness(e.state);
  const Mat wf_dense =
      e.graph_family ? Mat(wf.dense() / (1.0 - wf.lambda)) : wf.dense();
  const double dom = min_eigenvalue(Mat(wf_dense - wd));
  report.add(e.name + ": dominates fidelity witness", dom >= -1e-9,
             "min eig=" + fmt(dom));
  return report;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opt) {
  const std::vector<CorpusEntry> corpus = build_corpus(opt.fast);
  VerifyReport report;

  std::vector<std::future<VerifyReport>> futures;
  const int threads = std::max(1, opt.threads);
  std::vector<VerifyReport> partial(corpus.size());
  if (threads == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      partial[i] = verify_entry(corpus[i], opt);
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      futures.push_back(std::async(std::launch::async,
                                   [&, i] { return verify_entry(corpus[i], opt); }));
    for (std::size_t i = 0; i < corpus.size(); ++i) partial[i] = futures[i].get();
  }
  for (const VerifyReport& p : partial)
    for (const CheckResult& c : p.checks) report.add(c.name, c.pass, c.detail);

  // Optimality span certificates for a representative bipartite sample.
  {
    const PureState ghz = ghz_state(3, 3);
    const auto cuts = enumerate_bipartitions(3);
    const auto span = optimality_span_check(optimal_bew(ghz, cuts[0]), 1000, opt.seed);
    report.add("span certificate ghz:d=3,n=3 cut " + cuts[0].to_string(), span.pass,
               "rank=" + std::to_string(span.span_rank) + "/" +
                   std::to_string(span.full_rank));
  }

  if (opt.corrupt) {
    // Control: the halved-coefficient witness runs through the same checks
    // and is expected to FAIL them (nonzero exit).
    const CorpusEntry control = build_corpus(true).front();
    const LiftedWitness bad = corrupt_witness(control.lifted);
    const CertificateReport cert = certify(control.state, bad, control.bews);
    report.add("corrupt control: domination certificate", cert.pass,
               "min margin=" + fmt(cert.min_margin));
    const double bmin = biseparable_min_all_cuts(bad.dense(), control.state.dims(),
                                                 opt.restarts, opt.iters, opt.seed);
    report.add("corrupt control: biseparable min", bmin >= -1e-7, "min=" + fmt(bmin));
  }
  return report;
}

VerifyReport verify_state(const PureState& state, const VerifyOptions&) {
  VerifyReport report;
  const auto cuts = enumerate_bipartitions(state.parties());
  const auto bews = optimal_bew_family(state, cuts);
  const TaggedVectorSet s = harvest(state, cuts);
  const LiftedWitness lifted = assemble(state, s, group(s));
  if (!lifted.gme)
    report.add("state: GME construction", false,
               "tag=" + lifted.tag + " (not a GME witness)");
  const CertificateReport cert = certify(state, lifted, bews);
  for (const CutMargin& m : cert.margins)
    report.add("cut " + m.cut.to_string(), m.margin >= -kCertTol,
               "margin=" + fmt(m.margin));
  const double wpsi = lifted.target_expectation();
  report.add("target expectation negative", wpsi < 0.0, "w_psi=" + fmt(wpsi));
  return report;
}

}  // namespace gmew
