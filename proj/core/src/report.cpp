#include "stabent/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "stabent/dense.hpp"
#include "stabent/errors.hpp"

namespace stabent {

namespace {

bool is_css(const StabilizerCode& code) {
  return std::all_of(code.generators.begin(), code.generators.end(),
                     [](const PauliOperator& g) { return g.is_x_type() || g.is_z_type(); });
}

}  // namespace

EntanglementReport entanglement_report(const StabilizerCode& code, const ReportOptions& options) {
  require_valid(code);
  EntanglementReport rep;
  rep.code = code;
  const std::size_t n = code.n;

  rep.nonz_bound = upper_bound_nonz(code);
  rep.upper = rep.nonz_bound;
  rep.upper_method = "non-z-generators";

  LowerBoundOptions lb;
  lb.exhaustive_limit = options.exhaustive_limit;
  lb.allow_over_limit = options.exact && options.allow_over_limit;
  lb.samples = options.random_samples;
  lb.seed = options.iteration.seed;
  lb.threads = options.threads;
  lb.strategy = (options.exact || n <= options.exhaustive_limit) ? LowerBoundStrategy::Exhaustive
                                                                  : LowerBoundStrategy::Random;
  rep.lower = lower_bound(code, lb);
  if (rep.lower.skipped > 0) {
    rep.warnings.push_back(std::to_string(rep.lower.skipped) +
                           " bipartitions could not be scored (neither side aligned, dense oracle disabled)");
  }

  const bool run_persistency =
      options.exact || options.persistency.value_or(n <= options.persistency_auto_limit);
  if (run_persistency && rep.upper > rep.lower.value) {
    PersistencyOptions po;
    po.budget = options.budget;
    po.max_nodes = options.persistency_max_nodes;
    if (!rep.lower.witness.subset.empty()) po.bound_cuts.push_back(rep.lower.witness.subset);
    rep.persistency = persistency(code, po);
    if (!rep.persistency->minimal) {
      rep.warnings.push_back("persistency search stopped early; its count is an upper bound only");
    }
    if (rep.persistency->count < rep.upper) {
      rep.upper = rep.persistency->count;
      rep.upper_method = "persistency";
    }
  }

  if (rep.upper == rep.lower.value) {
    rep.value = static_cast<double>(rep.upper);
    rep.exact = true;
  } else {
    IterationOptions it = options.iteration;
    if (rep.persistency) {
      it.anchors.insert(it.anchors.begin(), leaf_product_state(code, rep.persistency->sequence).params);
    }
    if (it.threads == 0) it.threads = std::max(1U, std::thread::hardware_concurrency());
    rep.iteration = iterate_closest_product(code, it);
    rep.value = rep.iteration->E_estimate;
    if (!rep.iteration->converged) {
      rep.warnings.push_back("iteration reached max_iter before converging");
    }
    if (!rep.iteration->monotone) {
      throw std::logic_error("iteration lowered the overlap during a sweep");
    }
    if (n <= options.dense_limit) {
      const DenseState codeword = build_codeword(code, options.dense_limit);
      const DenseState product = product_state_vector(rep.iteration->params, options.dense_limit);
      rep.oracle_value = -std::log2(std::norm(inner_product(codeword, product)));
      if (std::abs(*rep.oracle_value - rep.value) > 1e-6) {
        throw std::logic_error("iteration overlap disagrees with the dense codeword");
      }
    }
  }

  const double tol = std::max(options.iteration.tol, 1e-9);
  if (rep.value < static_cast<double>(rep.lower.value) - tol || rep.value > static_cast<double>(rep.upper) + tol) {
    throw std::logic_error("entanglement estimate lies outside [E_l, E_u]");
  }

  if (options.include_graph && is_css(code)) {
    rep.graph = css_to_graph(css_spec_from_code(code));
    rep.graph_bounds = graph_bounds(*rep.graph);
  }
  return rep;
}

}  // namespace stabent
