#include "gmew/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gmew/applications.hpp"
#include "gmew/families.hpp"
#include "gmew/graphstate.hpp"

namespace gmew {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string header(const std::string& command, const std::string& config) {
  std::ostringstream os;
  os << "# gmew " << kVersion << "\n";
  os << "# command: reproduce " << command << "\n";
  if (!config.empty()) os << "# " << config << "\n";
  return os.str();
}

}  // namespace

std::string reproduce_fig1() {
  std::ostringstream os;
  os << header("fig1", "columns: n, p_ours, p_fidelity; closed form, seed-free");
  os << "n,p_ours,p_fidelity\n";
  for (int n = 4; n <= 20; ++n) {
    const double p_fid = 0.5 / (1.0 - std::pow(2.0, -n));
    os << n << "," << num(cluster_noise_tolerance(n)) << "," << num(p_fid) << "\n";
  }
  return os.str();
}

std::string reproduce_fig2() {
  std::ostringstream os;
  os << header("fig2", "columns: d, n, p_ours, p_fidelity; closed form, seed-free");
  os << "d,n,p_ours,p_fidelity\n";
  for (int d = 3; d <= 6; ++d) {
    const std::vector<double> uniform(d, 1.0 / d);
    for (int n = 3; n <= 10; ++n)
      os << d << "," << n << "," << num(schmidt_witness_tolerance(uniform, n)) << ","
         << num(schmidt_fidelity_tolerance(uniform, n)) << "\n";
  }
  return os.str();
}

std::string reproduce_fig3(const ReproduceOptions& opt) {
  std::ostringstream os;
  os << header("fig3", std::string("columns: n, p, eps_o, eps_f; d=3; gamma_form=") +
                           (opt.gamma_printed ? "printed" : "corrected") +
                           "; deterministic, seed-free");
  os << "n,p,eps_o,eps_f\n";
  for (int n : {3, 5, 7, 9}) {
    const MeasureBound mb(3, n);
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      const MeasureBoundResult r = mb.at(p);
      const double eps_f = opt.gamma_printed ? gamma_bound(3, n, p, true) : r.eps_f;
      os << n << "," << num(p) << "," << num(r.eps_o) << "," << num(eps_f) << "\n";
    }
  }
  return os.str();
}

std::string reproduce_table_a1(const ReproduceOptions& opt) {
  std::ostringstream os;
  std::ostringstream cfg;
  cfg << "columns: d, l_d, argmax_lambdas; starts=" << opt.starts
      << " seed=" << opt.seed;
  os << header("tableA1", cfg.str());
  os << "d,l_d,argmax_lambdas\n";
  for (int d = 3; d <= 7; ++d) {
    const LdResult r = ld_maximize(d, opt.starts, 4000, opt.seed);
    os << d << "," << num(r.value) << ",";
    for (std::size_t i = 0; i < r.lambdas.size(); ++i)
      os << (i ? ";" : "") << num(r.lambdas[i]);
    os << "\n";
  }
  return os.str();
}

std::string reproduce_table_a2(const ReproduceOptions& opt) {
  std::ostringstream os;
  std::ostringstream cfg;
  cfg << "columns: d, avg_gap, avg_window, avg_ratio, samples, seed; samples="
      << opt.samples << " seed=" << opt.seed;
  os << header("tableA2", cfg.str());
  os << "d,avg_gap,avg_window,avg_ratio,samples,seed\n";
  for (int d = 3; d <= 7; ++d) {
    const UnfaithfulAverages avg = unfaithful_average(d, opt.samples, opt.seed);
    os << d << "," << num(avg.gap) << "," << num(avg.window) << "," << num(avg.ratio)
       << "," << avg.samples << "," << avg.seed << "\n";
  }
  return os.str();
}

std::string reproduce(const std::string& figure, const ReproduceOptions& opt) {
  if (figure == "fig1") return reproduce_fig1();
  if (figure == "fig2") return reproduce_fig2();
  if (figure == "fig3") return reproduce_fig3(opt);
  if (figure == "tableA1") return reproduce_table_a1(opt);
  if (figure == "tableA2") return reproduce_table_a2(opt);
  throw std::invalid_argument("reproduce: unknown figure '" + figure +
                              "' (expected fig1|fig2|fig3|tableA1|tableA2)");
}

}  // namespace gmew
