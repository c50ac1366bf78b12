#pragma once

#include <stdexcept>
#include <string>

namespace kmat {

// Bad user-facing input: unknown pair string, bad weight, unsupported rank.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Weight-system / tensor-product size above the configured cap.
struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Branching has a node with multiplicity > 1: the scalar-per-node ansatz
// does not apply.
struct multiplicity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-self-conjugate representation with self-conjugate branching: the
// reflection matrix conjugates the multiplet instead of preserving it.
struct conjugating_k_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The Casimir scaling-factor formula needs all components of k under a
// given h-factor to share one Casimir value.
struct formula_inapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Boundary graph is disconnected: eigenvalue ratios under-determined.
struct disconnected_graph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cycle in the boundary graph whose bracket product is not 1. Carries a
// human-readable diagnostic naming the cycle; no silent pruning is done.
struct inconsistent_cycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The numeric intertwining system has solution-space dimension != 1.
struct degenerate_solution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kmat
