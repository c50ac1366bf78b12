#pragma once

#include <string>
#include <vector>

#include "kmat/algebra.hpp"
#include "kmat/rat.hpp"

namespace kmat {

enum class Series : char { SU = 'u', SO = 'o', SP = 'p' };

/// Classical group label su(n) / so(n) / sp(n) (n even for sp). Kept
/// alongside the canonical AlgebraId because the low-rank coincidences
/// (so3 ~ A1, so4 ~ A1+A1, so6 ~ A3, sp2 ~ A1) change the label basis.
struct ClassicalName {
  Series series;
  int n;

  std::string str() const;
  static ClassicalName parse(const std::string& s);

  bool operator==(const ClassicalName&) const = default;
};

/// Number of epsilon coordinates: n for su (the L-basis, defined up to a
/// common shift), floor(n/2) for so, n/2 for sp.
int eps_dim(ClassicalName g);

/// Canonical simple factors (empty for su1/so1/so2; two A1 for so4).
std::vector<AlgebraId> simple_factors(ClassicalName g);

/// True only for so(2), whose "weight" is a single abelian charge.
bool is_abelian(ClassicalName g);

long group_dim(ClassicalName g);

/// Concatenated canonical Dynkin labels of an eps-coordinate weight.
/// so(2) yields no labels (its charge is read off directly as eps[0]).
std::vector<Rat> labels_from_eps(ClassicalName g, const std::vector<Rat>& eps);

/// Inverse of labels_from_eps on the weight lattice (used on the g side
/// where canonical labels are the primary representation).
std::vector<Rat> eps_from_labels(ClassicalName g, const std::vector<Rat>& lab);

/// Highest weight, in canonical labels, of a few named representations.
/// Names: su: defining, adjoint; so: vector, spinor, spinor+, spinor-,
/// adjoint; sp: defining, adjoint.
Labels named_rep_labels(ClassicalName g, const std::string& name);

}  // namespace kmat
