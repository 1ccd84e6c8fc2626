#ifndef BANDHARVEST_SWEEP_HPP
#define BANDHARVEST_SWEEP_HPP

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

// Parameter-sweep grids, tabular results and serialization shared by
// the CLI subcommands.

namespace bandharvest::sweep {

struct SweepGrid {
  std::string variable;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  enum class Scale { Linear, Log } scale = Scale::Linear;

  void validate() const;
  std::vector<double> values() const;
};

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> metadata;
};

/// CSV with '#'-prefixed key=value metadata header lines.
void write_csv(std::ostream &os, const SweepResult &r);

/// Single JSON document (metadata object + columns + rows).
void write_structured(std::ostream &os, const SweepResult &r);

/// Parse the CSV emitted by write_csv back into a SweepResult.
SweepResult read_csv(std::istream &is);

/// Evaluate fn over [0, n) with a worker pool; result order is by
/// index regardless of scheduling.  Worker count is capped by the
/// BANDHARVEST_THREADS environment variable (0/unset = hardware).
std::vector<std::vector<double>>
parallel_map(std::size_t n,
             const std::function<std::vector<double>(std::size_t)> &fn);

} // namespace bandharvest::sweep

#endif
