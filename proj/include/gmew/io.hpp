#ifndef GMEW_IO_HPP
#define GMEW_IO_HPP

#include <string>
#include <variant>

#include "gmew/eval.hpp"
#include "gmew/families.hpp"
#include "gmew/graphstate.hpp"
#include "gmew/lift.hpp"
#include "gmew/types.hpp"

namespace gmew {

/// Thrown for malformed descriptors and files; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Family descriptors: "w:n=5", "ghz:d=3,n=4",
/// "schmidt:n=3,lambdas=0.5,0.3,0.2", "singlet4:a=0.6,theta=1.5708",
/// "singlet6", "cluster:n=10", "graph:1-2,2-3,3-4" (1-based edge list).
PureState make_state(const std::string& descriptor, std::int64_t dense_limit = 4096);

struct ConstructedWitness {
  std::string descriptor;
  std::string method;  // "analytic" or "lift"
  std::variant<LiftedWitness, DiagonalGraphWitness> witness;

  double trace() const;
  double target_expectation() const;
  double noise_tolerance() const;
  std::int64_t dim() const;
  std::size_t block_count() const;
  Mat dense(std::int64_t dense_limit = 4096) const;
};

/// Build the witness for a descriptor. method "analytic" uses the closed
/// forms where they exist; "lift" runs the generic pipeline (graph targets
/// always lift from the graph-basis bipartite family).
ConstructedWitness make_witness(const std::string& descriptor,
                                const std::string& method = "analytic",
                                std::int64_t dense_limit = 4096);

// State JSON: {"dims":[d0,...],"amps":[[re,im],...]} in big-endian order.
std::string state_to_json(const PureState& state);
PureState state_from_json_text(const std::string& text);
PureState load_state(const std::string& path);
void save_text(const std::string& path, const std::string& text);

/// Witness JSON; block bases are included only when the dimension stays
/// within `serialize_limit` (diagonal graph witnesses always summarize).
std::string witness_to_json(const ConstructedWitness& w,
                            std::int64_t serialize_limit = 4096);

/// Human-readable construction summary (m, block dims, c_k, trace, w_psi, p*).
std::string witness_summary(const ConstructedWitness& w);

}  // namespace gmew

#endif
