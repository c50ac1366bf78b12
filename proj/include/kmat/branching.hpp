#pragma once

#include <optional>
#include <vector>

#include "kmat/irrep.hpp"
#include "kmat/rat.hpp"

namespace kmat {

/// Exact linear map from g-weights (Dynkin labels) to concatenated Dynkin
/// labels of the h-factors, plus an optional abelian-charge row.
struct ProjectionMap {
  AlgebraId g;
  std::vector<AlgebraId> factors;
  std::vector<std::vector<Rat>> rows;       // (sum of factor ranks) x rank(g)
  std::optional<std::vector<Rat>> charge_row;

  int out_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }
  /// Apply to a g-weight; returns per-factor label vectors.
  std::vector<Labels> apply(const Labels& w) const;
  Rat charge_of(const Labels& w) const;
};

struct BranchEntry {
  std::vector<Irrep> factors;  // one per simple h-factor
  Rat charge;                  // 0 when h is semisimple
  long multiplicity;

  long dim() const;
};

/// Restrict an irrep of g through the projection and decompose into
/// h-factor irreps with abelian charges. Total dimension is preserved.
std::vector<BranchEntry> branch(const Irrep& rep, const ProjectionMap& proj,
                                long cap = kDefaultWeightCap);

}  // namespace kmat
