#include "kmat/kgraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "kmat/errors.hpp"

namespace kmat {

Bracket Bracket::one(const Rat& c_adj) {
  Bracket b;
  b.c_adj_ = c_adj;
  return b;
}

Bracket Bracket::elementary(const Rat& c_adj, const Rat& A) {
  Bracket b;
  b.c_adj_ = c_adj;
  if (A == 0) {
    b.sign_ = -1;  // [0] = (theta)/(-theta)
  } else if (A > 0) {
    b.factors_[A] = 1;
  } else {
    b.factors_[-A] = -1;  // [-A] = [A]^{-1}
  }
  return b;
}

Bracket Bracket::operator*(const Bracket& o) const {
  if (c_adj_ != o.c_adj_)
    throw invalid_input("bracket product across different c_A values");
  Bracket out = *this;
  out.sign_ *= o.sign_;
  for (const auto& [a, e] : o.factors_) {
    long& v = out.factors_[a];
    v += e;
    if (v == 0) out.factors_.erase(a);
  }
  return out;
}

Bracket Bracket::inverse() const {
  Bracket out = *this;
  for (auto& [a, e] : out.factors_) e = -e;
  return out;  // sign is its own inverse
}

Bracket Bracket::at_minus_theta() const {
  // [A](-theta) = [A](theta)^{-1}, the sign factor is theta-independent.
  return inverse();
}

bool Bracket::operator==(const Bracket& o) const {
  return c_adj_ == o.c_adj_ && sign_ == o.sign_ && factors_ == o.factors_;
}

bool Bracket::is_one() const { return sign_ == 1 && factors_.empty(); }

std::complex<double> Bracket::eval(const ComplexTheta& theta) const {
  const double pi = 3.14159265358979323846;
  std::complex<double> th = theta.value();
  std::complex<double> out(sign_, 0);
  for (const auto& [a, e] : factors_) {
    std::complex<double> x(0, pi * to_double(a) / to_double(c_adj_));
    std::complex<double> f = (x + th) / (x - th);
    for (long k = 0; k < std::abs(e); ++k) out *= (e > 0) ? f : 1.0 / f;
  }
  return out;
}

namespace {
std::string rat_display(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}
}  // namespace

std::string Bracket::str() const {
  std::ostringstream os;
  if (sign_ < 0) os << "-";
  if (factors_.empty()) {
    os << "1";
    return os.str();
  }
  for (const auto& [a, e] : factors_) {
    os << "[" << rat_display(a) << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::vector<PoleZero> poles_and_zeros(const Bracket& f) {
  std::map<Rat, long> locs;  // location (units of i*pi) -> signed order
  for (const auto& [a, e] : f.factors()) {
    Rat loc = a / f.c_adjoint();
    locs[loc] += e;    // pole of order e at +i*pi*a/c_A ...
    locs[-loc] -= e;   // ... zero of order e at the mirror point
  }
  std::vector<PoleZero> out;
  for (const auto& [loc, ord] : locs) {
    if (ord == 0) continue;
    out.push_back({loc, std::abs(ord), ord > 0});
  }
  return out;
}

Irrep rep_by_name(const SymmetricPair& pair, const std::string& name) {
  if (!name.empty() && name.front() == '[') {
    if (name.back() != ']') throw invalid_input("bad label list: " + name);
    Labels w;
    std::string body = name.substr(1, name.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) w.push_back(std::stol(tok));
    return Irrep::make(pair.g, w);
  }
  return Irrep::make(pair.g, named_rep_labels(pair.g_classical, name));
}

namespace {

// Halves of the isotropy representation K as branching nodes (without
// Casimir labels; content only).
std::vector<HIrrepNode> k_halves(const SymmetricPair& pair) {
  HIrrepNode plus{pair.k_rep.factors, pair.k_rep.charge, 1, Rat(0)};
  if (!pair.k_rep.conjugate_pair) return {plus};
  return {plus, plus.conjugate()};
}

bool edge_exists(const SymmetricPair& pair,
                 const std::vector<HIrrepNode>& halves,
                 const HIrrepNode& src, const HIrrepNode& dst, long cap) {
  for (const auto& half : halves) {
    if (dst.charge != src.charge + half.charge) continue;
    bool ok = true;
    for (size_t i = 0; i < src.factors.size() && ok; ++i)
      ok = tensor_contains(half.factors[i], src.factors[i], dst.factors[i], cap);
    if (ok) return true;
  }
  return false;
}

}  // namespace

BoundaryGraph build_graph(const SymmetricPair& pair, const Irrep& V, long cap) {
  if (V.algebra != pair.g)
    throw invalid_input("representation is not of " + pair.g.name());
  BoundaryGraph g;
  g.pair = pair;
  g.rep = V;
  g.c_adj = pair.c_adjoint();

  auto entries = branch(V, pair.proj, cap);
  for (const auto& e : entries) {
    if (e.multiplicity > 1)
      throw multiplicity_error(
          "branching of " + labels_str(V.highest_weight) + " under " +
          pair.name + " has multiplicity " + std::to_string(e.multiplicity) +
          ": beyond the scalar-per-node regime");
    g.nodes.push_back(make_node(pair, e.factors, e.charge));
  }

  // A non-self-conjugate multiplet with self-conjugate branching is
  // reflected onto its conjugate; that case is rejected, not modelled.
  bool v_self_conj = (dual_highest_weight(V.algebra, V.highest_weight) ==
                      V.highest_weight);
  if (!v_self_conj) {
    bool branching_self_conj = true;
    for (const auto& n : g.nodes) {
      HIrrepNode c = n.conjugate();
      bool found = false;
      for (const auto& o : g.nodes)
        if (o.same_content(c)) { found = true; break; }
      if (!found) { branching_self_conj = false; break; }
    }
    if (branching_self_conj)
      throw conjugating_k_error(
          labels_str(V.highest_weight) + " under " + pair.name +
          " is not self-conjugate but branches self-conjugately: the "
          "reflection matrix conjugates the multiplet (case rejected)");
  }

  // Candidate edges from the tensor condition dst within K (x) src.
  // Self-loops are omitted: a diagonal reduced matrix element would force
  // tau_W = -tau_W, impossible for an invertible reflection matrix, so it
  // must vanish.
  auto halves = k_halves(pair);
  int n = static_cast<int>(g.nodes.size());
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < n; ++d) {
      if (s == d) continue;
      if (edge_exists(pair, halves, g.nodes[s], g.nodes[d], cap))
        g.edges.push_back({s, d, g.nodes[s].casimir - g.nodes[d].casimir});
    }

  // Base node: largest dimension, ties by lexicographically greatest
  // highest weight, then by charge.
  g.base_node = 0;
  auto better = [&](const HIrrepNode& a, const HIrrepNode& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    for (size_t i = 0; i < a.factors.size(); ++i)
      if (a.factors[i].highest_weight != b.factors[i].highest_weight)
        return a.factors[i].highest_weight > b.factors[i].highest_weight;
    return a.charge > b.charge;
  };
  for (int i = 1; i < n; ++i)
    if (better(g.nodes[i], g.nodes[g.base_node])) g.base_node = i;
  return g;
}

std::vector<Bracket> tau_ratios(const BoundaryGraph& graph) {
  int n = static_cast<int>(graph.nodes.size());
  std::vector<std::vector<std::pair<int, Rat>>> adj(n);
  for (const auto& e : graph.edges) adj[e.src].push_back({e.dst, e.delta});

  std::vector<Bracket> ratio(n, Bracket::one(graph.c_adj));
  std::vector<int> parent(n, -2);
  parent[graph.base_node] = -1;
  std::queue<int> bfs;
  bfs.push(graph.base_node);
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop();
    for (const auto& [d, delta] : adj[s]) {
      if (parent[d] != -2) continue;
      parent[d] = s;
      ratio[d] = ratio[s] * Bracket::elementary(graph.c_adj, delta);
      bfs.push(d);
    }
  }
  for (int i = 0; i < n; ++i)
    if (parent[i] == -2)
      throw disconnected_graph(
          "boundary graph of " + graph.pair.name +
          " is disconnected: eigenvalue ratios under-determined");

  // Path independence: every edge must reproduce the tree ratios.
  for (const auto& e : graph.edges) {
    Bracket expect = ratio[e.src] * Bracket::elementary(graph.c_adj, e.delta);
    if (!(expect == ratio[e.dst])) {
      std::ostringstream os;
      os << "inconsistent cycle in the boundary graph of " << graph.pair.name
         << " on " << labels_str(graph.rep.highest_weight) << ": edge " << e.src
         << "->" << e.dst << " carries [" << rat_display(e.delta)
         << "] but tree paths give " << (ratio[e.dst] * expect.inverse()).str()
         << " around the loop; some reduced matrix element on this cycle must "
            "vanish (the tensor edge condition is necessary, not sufficient); "
            "nothing was pruned";
      throw inconsistent_cycle(os.str());
    }
  }
  return ratio;
}

SpectralDecomposition k_matrix_spectral(const SymmetricPair& pair,
                                        const Irrep& V, long cap) {
  SpectralDecomposition out{build_graph(pair, V, cap), {}};
  out.tau = tau_ratios(out.graph);
  return out;
}

CrossingReport crossing_unitarity_check(const SymmetricPair& pair,
                                        const Irrep& V, long cap) {
  CrossingReport rep;
  BoundaryGraph g = build_graph(pair, V, cap);
  int scalar = -1;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].is_scalar()) { scalar = static_cast<int>(i); break; }
  if (scalar < 0) {
    rep.applicable = false;
    rep.message = "not applicable: no scalar node in the branching";
    return rep;
  }
  rep.applicable = true;
  rep.scalar_node = scalar;

  std::vector<HIrrepNode> halves;
  halves.push_back(k_node(pair, false));
  if (pair.k_rep.conjugate_pair) halves.push_back(k_node(pair, true));

  std::vector<int> neighbors;
  for (const auto& e : g.edges)
    if (e.src == scalar &&
        std::find(neighbors.begin(), neighbors.end(), e.dst) == neighbors.end())
      neighbors.push_back(e.dst);
  std::sort(neighbors.begin(), neighbors.end());

  bool all_k = !neighbors.empty();
  for (int d : neighbors) {
    bool is_k = false;
    for (const auto& half : halves)
      if (g.nodes[d].same_content(half)) is_k = true;
    if (!is_k) all_k = false;
  }
  rep.k_neighbors = neighbors;

  Rat ck = halves.front().casimir;
  rep.delta = ck;  // C(K) - C(scalar), scalar Casimir is 0
  rep.pole_im_pi = ck / g.c_adj;
  bool half_ok = (rep.pole_im_pi == rat(1, 2));
  bool labels_ok = true;
  for (const auto& e : g.edges)
    if (e.dst == scalar && e.delta != ck) labels_ok = false;

  rep.pass = all_k && half_ok && labels_ok;
  std::ostringstream os;
  if (!all_k)
    os << "scalar node has a neighbour that is not the K node; ";
  if (!half_ok)
    os << "C(K)/c_A = " << rat_display(rep.pole_im_pi) << " instead of 1/2; ";
  if (rep.pass)
    os << "scalar<->K bracket is [" << rat_display(ck) << "] with pole at i*pi*"
       << rat_display(rep.pole_im_pi);
  rep.message = os.str();
  return rep;
}

}  // namespace kmat
