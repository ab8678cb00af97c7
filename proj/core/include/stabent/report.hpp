#pragma once

// Full entanglement analysis of one code: both bounds, the persistency search,
// and the product-state iteration when the bounds disagree.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stabent/bounds.hpp"
#include "stabent/code.hpp"
#include "stabent/graph_state.hpp"
#include "stabent/iteration.hpp"
#include "stabent/measurement.hpp"

namespace stabent {

struct ReportOptions {
  /// Run persistency and exhaustive bipartitions regardless of size.
  bool exact = false;
  /// nullopt: run persistency when n <= persistency_auto_limit.
  std::optional<bool> persistency;
  std::size_t persistency_auto_limit = 20;
  std::size_t persistency_max_nodes = 2'000'000;
  std::optional<std::size_t> budget;
  IterationOptions iteration;
  std::size_t dense_limit = kDefaultDenseLimit;
  std::size_t exhaustive_limit = 24;
  /// Permit exhaustive enumeration above exhaustive_limit when exact is set.
  bool allow_over_limit = false;
  std::size_t random_samples = 10000;
  bool include_graph = true;
  unsigned threads = 0;
};

struct EntanglementReport {
  StabilizerCode code;

  std::size_t upper = 0;
  std::string upper_method;  ///< "non-z-generators" or "persistency"
  std::size_t nonz_bound = 0;
  std::optional<PersistencyResult> persistency;

  LowerBoundResult lower;

  double value = 0.0;
  bool exact = false;
  std::optional<IterationResult> iteration;
  /// -log2 |<0|Phi>|^2 of the iteration's product state, from the dense codeword.
  std::optional<double> oracle_value;

  std::optional<GraphStateForm> graph;
  std::optional<GraphBounds> graph_bounds;

  std::vector<std::string> warnings;
};

/// Throws ValidationError for invalid codes, ResourceLimitError when a forced
/// computation exceeds its limit, and std::logic_error if the estimate falls
/// outside [E_l, E_u + tol].
EntanglementReport entanglement_report(const StabilizerCode& code, const ReportOptions& options = {});

}  // namespace stabent
