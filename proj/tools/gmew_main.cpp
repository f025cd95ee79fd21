#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gmew/applications.hpp"
#include "gmew/eval.hpp"
#include "gmew/io.hpp"
#include "gmew/reproduce.hpp"
#include "gmew/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    gmew::save_text(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GME witness construction and evaluation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::uint64_t seed = 42;
  std::int64_t samples = 100000;
  int starts = 200;
  int threads = 1;
  std::int64_t dense_limit = 4096;
  bool gamma_printed = false;
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--seed", seed, "RNG seed for Monte-Carlo and multi-start runs");
  app.add_option("--samples", samples, "Monte-Carlo sample count");
  app.add_option("--starts", starts, "multi-start count for optimizers");
  app.add_option("--threads", threads, "parallelism degree for verification");
  app.add_option("--dense-limit", dense_limit,
                 "largest total dimension for dense operations");
  app.add_flag("--gamma-printed", gamma_printed,
               "use the literal printed gamma(S) normalization in fig3");

  auto* construct = app.add_subcommand("construct", "build a witness for a target");
  std::string c_descriptor, c_method = "analytic", c_state_file;
  construct->add_option("descriptor", c_descriptor,
                        "family descriptor, e.g. w:n=4, ghz:d=3,n=3, cluster:n=10");
  construct->add_option("--method", c_method, "analytic (closed form) or lift");
  construct->add_option("--state", c_state_file, "lift a state loaded from JSON");

  auto* evaluate = app.add_subcommand("evaluate", "expectation value on rho(p)");
  std::string e_descriptor, e_method = "analytic", e_state_file;
  double e_noise = 0.0;
  evaluate->add_option("descriptor", e_descriptor)->required();
  evaluate->add_option("--method", e_method, "analytic or lift");
  evaluate->add_option("--p", e_noise, "white-noise weight p of rho(p)");
  evaluate->add_option("--state", e_state_file,
                       "evaluate against a pure state loaded from JSON instead");

  auto* tolerance = app.add_subcommand("tolerance", "white-noise tolerance of a witness");
  std::string t_descriptor, t_method = "analytic";
  tolerance->add_option("descriptor", t_descriptor)->required();
  tolerance->add_option("--method", t_method, "analytic or lift");

  auto* reproduce = app.add_subcommand("reproduce", "figure/table CSV reproduction");
  std::string figure;
  reproduce->add_option("figure", figure, "fig1|fig2|fig3|tableA1|tableA2")->required();

  auto* verify = app.add_subcommand("verify", "run the verification corpus");
  bool v_corrupt = false, v_fast = false;
  std::string v_state_file, v_cuts = "all";
  verify->add_flag("--corrupt", v_corrupt, "inject a corrupted-witness control");
  verify->add_flag("--fast", v_fast, "small corpus for quick runs");
  verify->add_option("--state", v_state_file, "verify a user state from JSON");
  verify->add_option("--cuts", v_cuts, "cut selection for --state (only: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      if (c_descriptor.empty() == c_state_file.empty())
        throw gmew::ParseError("construct: give exactly one of <descriptor> or --state");
      gmew::ConstructedWitness w = [&] {
        if (!c_state_file.empty()) {
          const gmew::PureState psi = gmew::load_state(c_state_file);
          if (psi.dim() > dense_limit)
            throw std::length_error("construct: state exceeds --dense-limit");
          return gmew::ConstructedWitness{"state:" + c_state_file, "lift",
                                          gmew::lift_state(psi)};
        }
        return gmew::make_witness(c_descriptor, c_method, dense_limit);
      }();
      emit(gmew::witness_to_json(w, dense_limit), out_path);
      std::cerr << gmew::witness_summary(w);
      return kExitOk;
    }

    if (evaluate->parsed()) {
      const gmew::ConstructedWitness w =
          gmew::make_witness(e_descriptor, e_method, dense_limit);
      if (e_noise < 0.0 || e_noise > 1.0)
        throw gmew::ParseError("evaluate: --p must lie in [0, 1]");
      double value = 0.0;
      if (!e_state_file.empty()) {
        const gmew::PureState phi = gmew::load_state(e_state_file);
        if (const auto* lw = std::get_if<gmew::LiftedWitness>(&w.witness))
          value = lw->expectation_pure(phi.amps());
        else
          value = gmew::expectation(w.dense(dense_limit), phi.projector());
      } else if (const auto* lw = std::get_if<gmew::LiftedWitness>(&w.witness)) {
        value = gmew::expectation(*lw, gmew::NoisyStateModel{lw->target, e_noise});
      } else {
        value = gmew::expectation(std::get<gmew::DiagonalGraphWitness>(w.witness), e_noise);
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g\n", value);
      emit(buf, out_path);
      return kExitOk;
    }

    if (tolerance->parsed()) {
      const gmew::ConstructedWitness w =
          gmew::make_witness(t_descriptor, t_method, dense_limit);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g\n", w.noise_tolerance());
      emit(buf, out_path);
      return kExitOk;
    }

    if (reproduce->parsed()) {
      gmew::ReproduceOptions opt;
      opt.seed = seed;
      opt.samples = samples;
      opt.starts = starts;
      opt.gamma_printed = gamma_printed;
      emit(gmew::reproduce(figure, opt), out_path);
      return kExitOk;
    }

    if (verify->parsed()) {
      gmew::VerifyReport report;
      if (!v_state_file.empty()) {
        if (v_cuts != "all")
          throw gmew::ParseError("verify: only --cuts all is supported");
        report = gmew::verify_state(gmew::load_state(v_state_file));
      } else {
        gmew::VerifyOptions opt;
        opt.fast = v_fast;
        opt.corrupt = v_corrupt;
        opt.seed = seed;
        opt.threads = threads;
        report = gmew::run_verification(opt);
      }
      emit(report.to_text(), out_path);
      return report.all_pass ? kExitOk : kExitVerificationFailure;
    }
  } catch (const gmew::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
