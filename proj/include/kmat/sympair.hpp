#pragma once

#include <string>
#include <vector>

#include "kmat/branching.hpp"
#include "kmat/coords.hpp"
#include "kmat/irrep.hpp"

namespace kmat {

// Cartan classes of the classical symmetric pairs.
enum class PairClass { AI, AII, AIII, BDI, DIII, CI, CII };

std::string pair_class_name(PairClass c);

/// The isotropy representation of h on k. For several classes k is a
/// complex irrep plus its conjugate (one real irrep); then conjugate_pair
/// is set and dim() counts both halves.
struct KDatum {
  std::vector<Irrep> factors;  // one per simple h-factor
  Rat charge;                  // abelian charge of the stored half (0 if none)
  bool conjugate_pair;

  long dim() const;
};

/// One h-irrep (with abelian charge) appearing in a branching.
struct HIrrepNode {
  std::vector<Irrep> factors;
  Rat charge;
  long multiplicity = 1;
  Rat casimir{0};  // C(W) in the scale of g; filled by casimir_on_node

  long dim() const;
  HIrrepNode conjugate() const;
  bool same_content(const HIrrepNode& o) const;
  bool is_scalar() const;
};

struct SymmetricPair {
  PairClass cls;
  ClassicalName g_classical;  // e.g. so7
  int split_m = 0;            // m for AIII/BDI/CII, 0 otherwise
  AlgebraId g;
  std::vector<AlgebraId> h_factors;
  bool has_abelian = false;
  ProjectionMap proj;
  KDatum k_rep;
  long dim_k = 0;
  std::string name;  // e.g. "BDI:so7|so3xso4"

  Rat c_adjoint() const;  // Casimir of the adjoint of g (= 2 h-dual)
  long dim_h() const;
};

/// Construct one pair; n, m are the classical parameters (m ignored where
/// the class has none). Validates the family constraints.
SymmetricPair make_pair(PairClass cls, int n, int m = 0);

/// Parse "AI:su4", "AIII:su5|m2", "BDI:so7|so3xso4", ... (grammar used by
/// the command line).
SymmetricPair parse_pair(const std::string& name);

/// All classical symmetric pairs with rank(g) <= max_rank (max 8).
std::vector<SymmetricPair> catalog(int max_rank);

/// Casimir scaling factors c_i relating the h-factor Casimirs to the
/// embedding metric of g: simple factors first, abelian factor (if any)
/// last.
std::vector<Rat> scaling_factors(const SymmetricPair& pair);

/// C(W) = sum_i c_i C2_hi(W_i) + c_0 q^2.
Rat casimir_on_node(const SymmetricPair& pair, const HIrrepNode& node);
HIrrepNode make_node(const SymmetricPair& pair, std::vector<Irrep> factors,
                     Rat charge, long mult = 1);
HIrrepNode k_node(const SymmetricPair& pair, bool conjugate_half = false);

/// Raw embedding datum: enough numbers to evaluate the weighted-Casimir
/// sum for any candidate subalgebra, including non-symmetric ones.
struct SubalgebraDatum {
  std::string name;
  struct Factor {
    Rat dim_h;
    Rat c2_adjoint;                    // h_i-Casimir of the adjoint of h_i
    std::vector<Rat> c2_k_components;  // h_i-Casimirs of the pieces of k
  };
  std::vector<Factor> factors;
  bool has_abelian = false;
  Rat dim_k{0};
};

SubalgebraDatum datum_from_pair(const SymmetricPair& pair);

/// Weighted-Casimir sum sum_i (C2(h_i)/C2_hi(k) + dim k / dim h_i)^{-1}
/// (abelian factor contributes 1/dim k). Equals 1/2 exactly if and only if
/// the embedding is a symmetric pair. Throws formula_inapplicable when the
/// k-components under some factor have distinct Casimirs.
Rat sst_check(const SubalgebraDatum& datum);
Rat sst_check(const SymmetricPair& pair);

/// Shipped non-symmetric embeddings used as negative controls:
/// g2 in so(7) (sum 2/5) and the adjoint embedding of su(3) in so(8)
/// (sum 1/3).
std::vector<SubalgebraDatum> negative_controls();

}  // namespace kmat
