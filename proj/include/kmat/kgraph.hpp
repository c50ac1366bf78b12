#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "kmat/sympair.hpp"

namespace kmat {

/// Product of elementary factors [A] = (i*pi*A/c_A + theta)/(i*pi*A/c_A - theta)
/// with integer exponents, times an overall sign. Canonical form keeps only
/// A > 0 ([0] = -1 folds into the sign, [-A] = [A]^{-1}).
class Bracket {
 public:
  Bracket() = default;
  static Bracket one(const Rat& c_adj);
  static Bracket elementary(const Rat& c_adj, const Rat& A);

  const Rat& c_adjoint() const { return c_adj_; }
  const std::map<Rat, long>& factors() const { return factors_; }
  int sign() const { return sign_; }

  Bracket operator*(const Bracket& o) const;
  Bracket inverse() const;
  Bracket at_minus_theta() const;  // substitutes theta -> -theta
  bool operator==(const Bracket& o) const;
  bool is_one() const;

  std::complex<double> eval(const ComplexTheta& theta) const;
  std::string str() const;

 private:
  Rat c_adj_{1};
  std::map<Rat, long> factors_;
  int sign_ = 1;
};

struct PoleZero {
  Rat location_im_pi;  // location = i*pi * this
  long order;
  bool is_pole;  // false: zero
};
std::vector<PoleZero> poles_and_zeros(const Bracket& f);

/// Nodes are the h-irreps in the branching of V; a directed edge src->dst
/// marks dst within K (x) src, labelled by delta = C(src) - C(dst).
struct BoundaryGraph {
  SymmetricPair pair;
  Irrep rep;
  Rat c_adj;
  std::vector<HIrrepNode> nodes;
  struct Edge {
    int src, dst;
    Rat delta;
  };
  std::vector<Edge> edges;
  int base_node = 0;
};

BoundaryGraph build_graph(const SymmetricPair& pair, const Irrep& V,
                          long cap = kDefaultWeightCap);

/// Eigenvalue ratio tau_W / tau_base for every node, as bracket products
/// along graph paths (walking src->dst multiplies by [delta]). Path
/// independence is verified on every non-tree edge.
std::vector<Bracket> tau_ratios(const BoundaryGraph& graph);

/// Full spectral data of the reflection matrix on V, up to one overall
/// scalar (the base node's eigenvalue).
struct SpectralDecomposition {
  BoundaryGraph graph;
  std::vector<Bracket> tau;  // indexed like graph.nodes
};
SpectralDecomposition k_matrix_spectral(const SymmetricPair& pair,
                                        const Irrep& V,
                                        long cap = kDefaultWeightCap);

/// At theta = i*pi/2 the reflection matrix must project onto the scalar
/// h-irrep; graph-side this needs the scalar node's neighbours to be
/// exactly the K node(s) with Casimir difference c_A/2.
struct CrossingReport {
  bool applicable = false;
  bool pass = false;
  int scalar_node = -1;
  std::vector<int> k_neighbors;
  Rat delta{0};        // C(K) - C(scalar)
  Rat pole_im_pi{0};   // delta / c_A; must be 1/2
  std::string message;
};
CrossingReport crossing_unitarity_check(const SymmetricPair& pair,
                                        const Irrep& V,
                                        long cap = kDefaultWeightCap);

/// Resolve a representation name ("vector", "defining", "spinor", "fund2",
/// "[1,0,1]", "adjoint") against the pair's classical group.
Irrep rep_by_name(const SymmetricPair& pair, const std::string& name);

}  // namespace kmat
