#ifndef GMEW_REPRODUCE_HPP
#define GMEW_REPRODUCE_HPP

#include <cstdint>
#include <string>

namespace gmew {

/// CSV builders for the figure and table reproductions. All outputs carry a
/// '#'-prefixed metadata header and are byte-identical across runs for a
/// fixed seed.
struct ReproduceOptions {
  std::uint64_t seed = 42;
  std::int64_t samples = 100000;  // tableA2
  int starts = 200;               // tableA1
  bool gamma_printed = false;     // fig3: use the literal printed gamma form
};

std::string reproduce_fig1();
std::string reproduce_fig2();
std::string reproduce_fig3(const ReproduceOptions& opt = {});
std::string reproduce_table_a1(const ReproduceOptions& opt = {});
std::string reproduce_table_a2(const ReproduceOptions& opt = {});

/// Dispatch by name: fig1, fig2, fig3, tableA1, tableA2.
std::string reproduce(const std::string& figure, const ReproduceOptions& opt = {});

}  // namespace gmew

#endif
