#include "kmat/irrep.hpp"

#include <algorithm>
#include <map>

#include "kmat/errors.hpp"

namespace kmat {

Irrep Irrep::make(AlgebraId alg, Labels hw) {
  if (static_cast<int>(hw.size()) != alg.rank)
    throw invalid_input("highest weight length does not match rank of " +
                        alg.name());
  for (long x : hw)
    if (x < 0)
      throw invalid_input("highest weight must be dominant: " +
                          labels_str(hw));
  Irrep r{alg, std::move(hw), 0, Rat(0)};
  r.dim = weyl_dim(alg, r.highest_weight);
  r.casimir = casimir_value(alg, r.highest_weight);
  return r;
}

Irrep Irrep::trivial(AlgebraId alg) {
  return make(alg, Labels(static_cast<size_t>(alg.rank), 0));
}

bool Irrep::is_trivial() const {
  return std::all_of(highest_weight.begin(), highest_weight.end(),
                     [](long x) { return x == 0; });
}

Irrep Irrep::dual() const {
  return make(algebra, dual_highest_weight(algebra, highest_weight));
}

Int IrrepMultiset::total_dim() const {
  Int t = 0;
  for (const auto& [rep, mult] : entries) t += rep.dim * mult;
  return t;
}

namespace {
void require_dominant(AlgebraId alg, const Labels& hw) {
  if (static_cast<int>(hw.size()) != alg.rank)
    throw invalid_input("weight length does not match rank of " + alg.name());
  for (long x : hw)
    if (x < 0)
      throw invalid_input("weight must be dominant: " + labels_str(hw));
}
}  // namespace

Int weyl_dim(AlgebraId alg, const Labels& hw) {
  require_dominant(alg, hw);
  RootData rd(alg);
  Labels lam_rho = hw;
  for (auto& x : lam_rho) x += 1;
  Labels rho = rd.rho();
  Rat num(1), den(1);
  for (const auto& alpha : rd.positive_roots()) {
    num *= rd.inner(lam_rho, alpha);
    den *= rd.inner(rho, alpha);
  }
  Rat d = num / den;
  d.canonicalize();
  if (d.get_den() != 1)
    throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num();
}

Rat casimir_value(AlgebraId alg, const Labels& hw) {
  require_dominant(alg, hw);
  RootData rd(alg);
  Labels shifted = hw;
  for (auto& x : shifted) x += 2;  // hw + 2*rho
  return rd.inner(hw, shifted);
}

Rat c_adjoint(AlgebraId alg) {
  return casimir_value(alg, adjoint_highest_weight(alg));
}

namespace {

// All weights of the irrep, without multiplicities: saturate downward
// along simple-root strings starting from the highest weight.
std::vector<Labels> weight_support(const RootData& rd, const Labels& hw,
                                   long cap) {
  std::unordered_map<Labels, bool, LabelsHash> seen;
  std::vector<Labels> queue{hw};
  seen[hw] = true;
  const auto& cartan = rd.cartan();
  int r = rd.rank();
  for (size_t head = 0; head < queue.size(); ++head) {
    Labels w = queue[head];
    for (int i = 0; i < r; ++i) {
      long m = w[i];
      Labels cur = w;
      for (long k = 1; k <= m; ++k) {
        for (int j = 0; j < r; ++j) cur[j] -= cartan[i][j];
        if (seen.emplace(cur, true).second) {
          queue.push_back(cur);
          if (static_cast<long>(queue.size()) > cap)
            throw resource_limit("weight system larger than cap");
        }
      }
    }
  }
  return queue;
}

}  // namespace

WeightMultiset weight_system(const Irrep& rep, long cap) {
  RootData rd(rep.algebra);
  if (rep.dim > cap)
    throw resource_limit("weight system larger than cap: dim " +
                         rep.dim.get_str());
  auto support = weight_support(rd, rep.highest_weight, cap);

  // Freudenthal recursion on dominant weights, highest first:
  // (|l+rho|^2 - |m+rho|^2) mult(m) = 2 sum_{a>0} sum_k mult(m+ka) <m+ka, a>
  std::vector<Labels> dominant;
  for (const auto& w : support)
    if (rd.is_dominant(w)) dominant.push_back(w);

  Labels rho = rd.rho();
  auto shifted_norm = [&](const Labels& w) {
    Labels s = w;
    for (size_t i = 0; i < s.size(); ++i) s[i] += rho[i];
    return rd.inner(s, s);
  };
  Rat top_norm = shifted_norm(rep.highest_weight);
  std::stable_sort(dominant.begin(), dominant.end(),
                   [&](const Labels& a, const Labels& b) {
                     Rat na = shifted_norm(a), nb = shifted_norm(b);
                     if (na != nb) return na > nb;
                     return a > b;
                   });

  std::unordered_map<Labels, bool, LabelsHash> in_support;
  for (const auto& w : support) in_support[w] = true;
  WeightMultiset dom_mult;
  for (const auto& mu : dominant) {
    if (mu == rep.highest_weight) {
      dom_mult[mu] = 1;
      continue;
    }
    Rat acc(0);
    for (const auto& alpha : rd.positive_roots()) {
      Labels cur = mu;
      while (true) {
        for (size_t j = 0; j < cur.size(); ++j) cur[j] += alpha[j];
        if (!in_support.count(cur)) break;
        Labels dom = rd.dominantize(cur);
        auto it = dom_mult.find(dom);
        if (it == dom_mult.end())
          throw std::logic_error("Freudenthal order violated");
        acc += Rat(it->second) * rd.inner(cur, alpha);
      }
    }
    Rat denom = top_norm - shifted_norm(mu);
    Rat m = 2 * acc / denom;
    m.canonicalize();
    if (m.get_den() != 1 || m <= 0)
      throw std::logic_error("Freudenthal multiplicity not a positive integer");
    dom_mult[mu] = m.get_num().get_si();
  }

  WeightMultiset out;
  out.reserve(support.size());
  for (const auto& w : support) out[w] = dom_mult[rd.dominantize(w)];
  return out;
}

IrrepMultiset tensor_decompose(const Irrep& a, const Irrep& b, long cap) {
  if (a.algebra != b.algebra)
    throw invalid_input("tensor factors live in different algebras");
  if (a.dim * b.dim > cap)
    throw resource_limit("tensor product larger than cap");
  const Irrep& big = (a.dim >= b.dim) ? a : b;
  const Irrep& small = (a.dim >= b.dim) ? b : a;

  RootData rd(a.algebra);
  int r = rd.rank();
  auto weights = weight_system(small, cap);

  // Racah-Speiser: reflect hw(big) + rho + nu into the dominant chamber,
  // tracking the sign; points on a wall contribute nothing.
  std::map<Labels, long> mult;
  for (const auto& [nu, m] : weights) {
    Labels xi(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) xi[i] = big.highest_weight[i] + nu[i] + 1;
    long sign = 1;
    bool wall = false;
    while (true) {
      int neg = -1;
      for (int i = 0; i < r; ++i) {
        if (xi[i] == 0) { wall = true; break; }
        if (xi[i] < 0 && neg < 0) neg = i;
      }
      if (wall || neg < 0) break;
      xi = rd.simple_reflection(xi, neg);
      sign = -sign;
    }
    if (wall) continue;
    for (int i = 0; i < r; ++i) xi[i] -= 1;
    mult[xi] += sign * m;
  }

  IrrepMultiset out;
  for (const auto& [hw, m] : mult) {
    if (m == 0) continue;
    if (m < 0) throw std::logic_error("negative tensor multiplicity");
    out.entries.emplace_back(Irrep::make(a.algebra, hw), m);
  }
  return out;
}

bool tensor_contains(const Irrep& a, const Irrep& b, const Irrep& c,
                     long cap) {
  auto dec = tensor_decompose(a, b, cap);
  for (const auto& [rep, mult] : dec.entries)
    if (rep == c) return true;
  return false;
}

}  // namespace kmat
