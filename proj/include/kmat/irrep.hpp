#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kmat/algebra.hpp"
#include "kmat/rat.hpp"

namespace kmat {

/// Finite-dimensional irrep of a simple classical algebra, named by its
/// dominant highest weight. Dimension and quadratic Casimir are computed at
/// construction (Weyl formula, <w, w+2rho>).
struct Irrep {
  AlgebraId algebra;
  Labels highest_weight;
  Int dim;
  Rat casimir;

  static Irrep make(AlgebraId alg, Labels hw);
  static Irrep trivial(AlgebraId alg);

  bool is_trivial() const;
  Irrep dual() const;

  bool operator==(const Irrep& o) const {
    return algebra == o.algebra && highest_weight == o.highest_weight;
  }
  bool operator<(const Irrep& o) const {
    if (algebra != o.algebra) return algebra < o.algebra;
    return highest_weight < o.highest_weight;
  }
};

struct IrrepMultiset {
  std::vector<std::pair<Irrep, long>> entries;  // (irrep, multiplicity)
  Int total_dim() const;
};

struct LabelsHash {
  size_t operator()(const Labels& w) const {
    size_t h = 1469598103934665603ull;
    for (long x : w) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using WeightMultiset = std::unordered_map<Labels, long, LabelsHash>;

inline constexpr long kDefaultWeightCap = 1000000;

Int weyl_dim(AlgebraId alg, const Labels& hw);
Rat casimir_value(AlgebraId alg, const Labels& hw);

/// Casimir of the adjoint representation (2 * dual Coxeter number in the
/// long-root normalization).
Rat c_adjoint(AlgebraId alg);

/// Full weight multiset of the irrep (Freudenthal multiplicities on the
/// dominant cone, Weyl orbit images elsewhere). Throws resource_limit if
/// the weight count would exceed cap.
WeightMultiset weight_system(const Irrep& rep, long cap = kDefaultWeightCap);

/// Tensor-product decomposition by the Racah-Speiser reflection rule
/// applied to the weight system of the smaller factor.
IrrepMultiset tensor_decompose(const Irrep& a, const Irrep& b,
                               long cap = kDefaultWeightCap);

/// True iff c appears in a (x) b.
bool tensor_contains(const Irrep& a, const Irrep& b, const Irrep& c,
                     long cap = kDefaultWeightCap);

}  // namespace kmat
