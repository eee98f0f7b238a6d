#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebs/topology.hpp"

namespace ebs {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Sequence pairs used when no topology is supplied: x != y, x = y, and a
/// pair with irregular prefixes.
std::vector<SequencePair> default_sequence_pairs();

/// Oracle/symbolic agreement suite on the given window. Set-level checks use
/// the sequences of `topology` when it is lcshift, otherwise the defaults.
std::vector<CheckResult> run_verification(Int window,
                                          const std::optional<TopologySpec>& topology = {});

}  // namespace ebs
