#include "kmat/branching.hpp"

#include <algorithm>
#include <map>

#include "kmat/errors.hpp"

namespace kmat {

std::vector<Labels> ProjectionMap::apply(const Labels& w) const {
  if (static_cast<int>(w.size()) != g.rank)
    throw invalid_input("projection rank mismatch");
  std::vector<Rat> img(static_cast<size_t>(out_rank()), Rat(0));
  for (size_t r = 0; r < img.size(); ++r)
    for (int j = 0; j < g.rank; ++j)
      if (w[j] != 0) img[r] += rows[r][j] * w[j];
  std::vector<Labels> out;
  size_t pos = 0;
  for (const auto& f : factors) {
    Labels lab;
    for (int i = 0; i < f.rank; ++i) {
      Rat v = img[pos++];
      v.canonicalize();
      if (v.get_den() != 1)
        throw std::logic_error("projected weight is not integral");
      lab.push_back(v.get_num().get_si());
    }
    out.push_back(std::move(lab));
  }
  return out;
}

Rat ProjectionMap::charge_of(const Labels& w) const {
  if (!charge_row) return Rat(0);
  Rat q(0);
  for (int j = 0; j < g.rank; ++j)
    if (w[j] != 0) q += (*charge_row)[j] * w[j];
  return q;
}

long BranchEntry::dim() const {
  Int d = multiplicity;
  for (const auto& f : factors) d *= f.dim;
  return d.get_si();
}

namespace {

struct ConcatHash {
  size_t operator()(const std::vector<long>& w) const {
    return LabelsHash{}(w);
  }
};

using ConcatWeight = std::vector<long>;  // concatenated factor labels

ConcatWeight concat(const std::vector<Labels>& parts) {
  ConcatWeight out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Weight multiset of a product of factor irreps, as concatenated labels.
std::unordered_map<ConcatWeight, long, ConcatHash> product_weights(
    const std::vector<Irrep>& factors, long cap) {
  std::unordered_map<ConcatWeight, long, ConcatHash> acc;
  acc[{}] = 1;
  for (const auto& f : factors) {
    auto ws = weight_system(f, cap);
    std::unordered_map<ConcatWeight, long, ConcatHash> next;
    next.reserve(acc.size() * ws.size());
    for (const auto& [base, m0] : acc)
      for (const auto& [w, m1] : ws) {
        ConcatWeight cw = base;
        cw.insert(cw.end(), w.begin(), w.end());
        next[cw] += m0 * m1;
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<BranchEntry> branch(const Irrep& rep, const ProjectionMap& proj,
                                long cap) {
  if (rep.algebra != proj.g)
    throw invalid_input("projection is for " + proj.g.name() +
                        ", representation is of " + rep.algebra.name());
  auto weights = weight_system(rep, cap);

  std::vector<RootData> roots;
  roots.reserve(proj.factors.size());
  for (const auto& f : proj.factors) roots.emplace_back(f);

  // Group the projected weight multiset by abelian charge; each charge
  // sector is a genuine character of the semisimple part.
  std::map<Rat, std::unordered_map<ConcatWeight, long, ConcatHash>> sectors;
  for (const auto& [w, m] : weights) {
    auto parts = proj.apply(w);
    sectors[proj.charge_of(w)][concat(parts)] += m;
  }

  // Height functional sum_f <w_f, rho_f>; strictly positive on positive
  // roots, so its maximizer over a character's support is a highest weight.
  auto height = [&](const ConcatWeight& cw) {
    Rat h(0);
    size_t pos = 0;
    for (size_t fi = 0; fi < proj.factors.size(); ++fi) {
      int r = proj.factors[fi].rank;
      Labels part(cw.begin() + pos, cw.begin() + pos + r);
      pos += r;
      h += roots[fi].inner(part, roots[fi].rho());
    }
    return h;
  };

  std::vector<BranchEntry> out;
  for (auto& [charge, sector] : sectors) {
    while (!sector.empty()) {
      const ConcatWeight* best = nullptr;
      Rat best_h;
      for (const auto& [cw, m] : sector) {
        if (m == 0) continue;
        Rat h = height(cw);
        if (!best || h > best_h || (h == best_h && cw > *best)) {
          best = &cw;
          best_h = h;
        }
      }
      if (!best) break;
      ConcatWeight top = *best;
      long mult = sector[top];
      if (mult < 0)
        throw std::logic_error("negative multiplicity while peeling branch");

      std::vector<Irrep> factor_reps;
      size_t pos = 0;
      for (size_t fi = 0; fi < proj.factors.size(); ++fi) {
        int r = proj.factors[fi].rank;
        Labels part(top.begin() + pos, top.begin() + pos + r);
        pos += r;
        if (!roots[fi].is_dominant(part))
          throw std::logic_error("branch maximizer is not dominant");
        factor_reps.push_back(Irrep::make(proj.factors[fi], part));
      }
      auto prod = product_weights(factor_reps, cap);
      for (const auto& [cw, m] : prod) {
        auto it = sector.find(cw);
        if (it == sector.end() || it->second < mult * m)
          throw std::logic_error("branch peeling underflow");
        it->second -= mult * m;
        if (it->second == 0) sector.erase(it);
      }
      out.push_back({std::move(factor_reps), charge, mult});
    }
  }

  // Deterministic order: by charge, then by factor labels.
  std::sort(out.begin(), out.end(), [](const BranchEntry& a, const BranchEntry& b) {
    if (a.charge != b.charge) return a.charge < b.charge;
    for (size_t i = 0; i < std::min(a.factors.size(), b.factors.size()); ++i)
      if (!(a.factors[i] == b.factors[i]))
        return a.factors[i] < b.factors[i];
    return false;
  });

  Int total = 0;
  for (const auto& e : out) {
    Int d = e.multiplicity;
    for (const auto& f : e.factors) d *= f.dim;
    total += d;
  }
  if (total != rep.dim)
    throw std::logic_error("branching does not preserve dimension");
  return out;
}

}  // namespace kmat
