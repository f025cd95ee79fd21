#ifndef GMEW_VERIFY_HPP
#define GMEW_VERIFY_HPP

#include <string>
#include <vector>

#include "gmew/bipartite.hpp"
#include "gmew/lift.hpp"
#include "gmew/types.hpp"

namespace gmew {

/// One target state of the verification corpus together with the bipartite
/// family that feeds its lift and the lifted witness itself.
struct CorpusEntry {
  std::string name;
  PureState state;
  std::vector<BipartiteWitness> bews;
  LiftedWitness lifted;
  bool graph_family = false;  // lifted from graph-basis (normalized) witnesses
};

/// W_3..W_5, GHZ(d<=4, n<=4), Cl_4..Cl_6, singlet4 on a 3x3 (a, theta) grid,
/// singlet6. `fast` trims to one representative per family.
std::vector<CorpusEntry> build_corpus(bool fast = false);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyOptions {
  bool fast = false;
  bool corrupt = false;  // inject a halved c_k control; the run must FAIL
  int restarts = 64;
  int iters = 200;
  std::uint64_t seed = 42;
  int threads = 1;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass = true;

  void add(std::string name, bool pass, std::string detail);
  std::string to_text() const;
};

/// Corpus-wide verification: domination certificates, biseparable see-saw
/// minima, analytic-equality checks, fidelity domination, span certificates.
VerifyReport run_verification(const VerifyOptions& opt = {});

/// Certificate margins for a user-provided state across all cuts.
VerifyReport verify_state(const PureState& state, const VerifyOptions& opt = {});

/// The corrupted-witness control: every c_k halved.
LiftedWitness corrupt_witness(const LiftedWitness& w);

}  // namespace gmew

#endif
