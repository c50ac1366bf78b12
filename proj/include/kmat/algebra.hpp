#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kmat/rat.hpp"

namespace kmat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

using Labels = std::vector<long>;  // Dynkin labels (fundamental-weight basis)

/// Identifier of a simple classical Lie algebra. Construction canonicalizes
/// the low-rank coincidences B1 ~ A1, C1 ~ A1, D3 ~ A3 and rejects the
/// non-simple D1, D2.
struct AlgebraId {
  Family family;
  int rank;

  static AlgebraId make(Family f, int r);

  long dim() const;           // dimension of the algebra
  long dual_coxeter() const;  // h-dual
  std::string name() const;   // e.g. "A3"

  auto operator<=>(const AlgebraId&) const = default;
};

/// Root-system data in the normalization where long roots have squared
/// length 2. Weights are handled in Dynkin labels throughout; the metric on
/// the weight lattice is the symmetrized inverse Cartan matrix.
class RootData {
 public:
  explicit RootData(AlgebraId alg);

  const AlgebraId& algebra() const { return alg_; }
  int rank() const { return alg_.rank; }

  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  // Positive roots, Dynkin labels (row i of the Cartan matrix is alpha_i).
  const std::vector<Labels>& positive_roots() const { return pos_roots_; }
  // Metric G_ij = <w_i, w_j> on fundamental weights.
  const std::vector<std::vector<Rat>>& quadratic_form() const { return qform_; }

  Rat inner(const Labels& a, const Labels& b) const;
  Labels rho() const { return Labels(static_cast<size_t>(rank()), 1); }

  bool is_dominant(const Labels& w) const;
  // Reflect w in the i-th simple root: w -> w - w_i * alpha_i.
  Labels simple_reflection(const Labels& w, int i) const;
  // Dominant Weyl-chamber representative of w.
  Labels dominantize(Labels w) const;

 private:
  AlgebraId alg_;
  std::vector<std::vector<long>> cartan_;
  std::vector<Rat> half_lengths_;  // d_i = <alpha_i,alpha_i>/2
  std::vector<Labels> pos_roots_;
  std::vector<std::vector<Rat>> qform_;

  void build_cartan();
  void build_positive_roots();
  void build_qform();
};

/// Highest weight of the adjoint representation.
Labels adjoint_highest_weight(AlgebraId alg);

/// Highest weight of the dual (conjugate) of the irrep with highest
/// weight w: -w0(w).
Labels dual_highest_weight(AlgebraId alg, const Labels& w);

std::string labels_str(const Labels& w);

}  // namespace kmat
