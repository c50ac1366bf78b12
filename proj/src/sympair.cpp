#include "kmat/sympair.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "kmat/errors.hpp"

namespace kmat {

std::string pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::AI: return "AI";
    case PairClass::AII: return "AII";
    case PairClass::AIII: return "AIII";
    case PairClass::BDI: return "BDI";
    case PairClass::DIII: return "DIII";
    case PairClass::CI: return "CI";
    case PairClass::CII: return "CII";
  }
  return "?";
}

long KDatum::dim() const {
  Int d = 1;
  for (const auto& f : factors) d *= f.dim;
  if (conjugate_pair) d *= 2;
  return d.get_si();
}

long HIrrepNode::dim() const {
  Int d = multiplicity;
  for (const auto& f : factors) d *= f.dim;
  return d.get_si();
}

HIrrepNode HIrrepNode::conjugate() const {
  HIrrepNode out = *this;
  for (auto& f : out.factors) f = f.dual();
  out.charge = -charge;
  return out;
}

bool HIrrepNode::same_content(const HIrrepNode& o) const {
  if (charge != o.charge || factors.size() != o.factors.size()) return false;
  for (size_t i = 0; i < factors.size(); ++i)
    if (!(factors[i] == o.factors[i])) return false;
  return true;
}

bool HIrrepNode::is_scalar() const {
  if (charge != 0) return false;
  for (const auto& f : factors)
    if (!f.is_trivial()) return false;
  return true;
}

Rat SymmetricPair::c_adjoint() const {
  return casimir_value(g, adjoint_highest_weight(g));
}

long SymmetricPair::dim_h() const {
  long d = has_abelian ? 1 : 0;
  for (const auto& f : h_factors) d += f.dim();
  return d;
}

namespace {

using RatVec = std::vector<Rat>;

RatVec slice(const RatVec& v, size_t from, size_t len) {
  return RatVec(v.begin() + from, v.begin() + from + len);
}

template <typename T>
void append(std::vector<T>& dst, const std::vector<T>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Image of a g-weight (Dynkin labels, exact) under the restriction to h:
// concatenated factor labels plus abelian charge.
using WeightImage = std::function<std::pair<RatVec, Rat>(const RatVec&)>;

ProjectionMap projection_from_images(AlgebraId g,
                                     std::vector<AlgebraId> factors,
                                     bool has_charge, const WeightImage& img) {
  ProjectionMap proj;
  proj.g = g;
  proj.factors = std::move(factors);
  int out = proj.out_rank();
  proj.rows.assign(static_cast<size_t>(out), RatVec(static_cast<size_t>(g.rank), Rat(0)));
  if (has_charge) proj.charge_row = RatVec(static_cast<size_t>(g.rank), Rat(0));
  for (int j = 0; j < g.rank; ++j) {
    RatVec unit(static_cast<size_t>(g.rank), Rat(0));
    unit[j] = 1;
    auto [labels, charge] = img(unit);
    if (static_cast<int>(labels.size()) != out)
      throw std::logic_error("projection image has wrong length");
    for (int r = 0; r < out; ++r) proj.rows[r][j] = labels[r];
    if (has_charge) (*proj.charge_row)[j] = charge;
  }
  return proj;
}

Irrep factor_irrep(AlgebraId alg, const RatVec& lab) {
  Labels w;
  for (const auto& v : lab) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("non-integral factor label");
    w.push_back(c.get_num().get_si());
  }
  return Irrep::make(alg, w);
}

// Split concatenated labels into per-factor irreps.
std::vector<Irrep> split_irreps(const std::vector<AlgebraId>& factors,
                                const RatVec& labels) {
  std::vector<Irrep> out;
  size_t pos = 0;
  for (const auto& f : factors) {
    out.push_back(factor_irrep(f, slice(labels, pos, f.rank)));
    pos += f.rank;
  }
  return out;
}

RatVec unit_eps(int len, int i, const Rat& v = Rat(1)) {
  RatVec e(static_cast<size_t>(len), Rat(0));
  e[i] = v;
  return e;
}

}  // namespace

SymmetricPair make_pair(PairClass cls, int n, int m) {
  SymmetricPair p;
  p.cls = cls;
  p.split_m = 0;

  auto finish = [&](ClassicalName gname, std::vector<AlgebraId> hf,
                    bool abelian, const WeightImage& img, KDatum k,
                    const std::string& hspec) {
    auto gf = simple_factors(gname);
    if (gf.size() != 1) throw invalid_input(gname.str() + " is not simple");
    p.g_classical = gname;
    p.g = gf[0];
    if (p.g.rank > 8)
      throw invalid_input("rank of " + gname.str() + " above supported range");
    p.h_factors = hf;
    p.has_abelian = abelian;
    p.proj = projection_from_images(p.g, hf, abelian, img);
    p.k_rep = std::move(k);
    long dh = p.dim_h();
    p.dim_k = group_dim(gname) - dh;
    if (p.dim_k != p.k_rep.dim())
      throw std::logic_error("k dimension mismatch for " + gname.str());
    p.name = pair_class_name(cls) + ":" + gname.str() +
             (hspec.empty() ? "" : "|" + hspec);
    return p;
  };

  switch (cls) {
    case PairClass::AI: {
      // su(n) / so(n), n >= 3 (n = 2 coincides with AIII su2|m1)
      if (n < 3) throw invalid_input("AI needs su(n), n >= 3");
      ClassicalName g{Series::SU, n}, h{Series::SO, n};
      int k = n / 2;
      auto img = [=](const RatVec& dyn) -> std::pair<RatVec, Rat> {
        RatVec y = eps_from_labels(g, dyn);
        RatVec x(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) x[j] = y[2 * j] - y[2 * j + 1];
        return {labels_from_eps(h, x), Rat(0)};
      };
      KDatum kd{split_irreps(simple_factors(h),
                             labels_from_eps(h, unit_eps(k, 0, Rat(2)))),
                Rat(0), false};
      return finish(g, simple_factors(h), false, img, kd, "");
    }
    case PairClass::AII: {
      // su(2N) / sp(2N), N >= 2
      if (n < 4 || n % 2 != 0) throw invalid_input("AII needs su(2N), N >= 2");
      ClassicalName g{Series::SU, n}, h{Series::SP, n};
      int k = n / 2;
      auto img = [=](const RatVec& dyn) -> std::pair<RatVec, Rat> {
        RatVec y = eps_from_labels(g, dyn);
        RatVec x(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) x[j] = y[2 * j] - y[2 * j + 1];
        return {labels_from_eps(h, x), Rat(0)};
      };
      RatVec lam2 = unit_eps(k, 0);
      lam2[1] = 1;
      KDatum kd{split_irreps(simple_factors(h), labels_from_eps(h, lam2)),
                Rat(0), false};
      return finish(g, simple_factors(h), false, img, kd, "");
    }
    case PairClass::AIII: {
      // su(n) / s(u(m) x u(n-m)), 1 <= m <= n/2
      if (n < 2 || m < 1 || 2 * m > n)
        throw invalid_input("AIII needs su(n) with 1 <= m <= n/2");
      p.split_m = m;
      ClassicalName g{Series::SU, n};
      ClassicalName h1{Series::SU, m}, h2{Series::SU, n - m};
      long gd = std::gcd(static_cast<long>(m), static_cast<long>(n - m));
      Rat q1 = rat(n - m, gd), q2 = rat(-m, gd);
      auto img = [=](const RatVec& dyn) -> std::pair<RatVec, Rat> {
        RatVec y = eps_from_labels(g, dyn);
        RatVec labels = labels_from_eps(h1, slice(y, 0, m));
        append(labels, labels_from_eps(h2, slice(y, m, n - m)));
        Rat q(0);
        for (int i = 0; i < n; ++i) q += (i < m ? q1 : q2) * y[i];
        return {labels, q};
      };
      std::vector<AlgebraId> hf = simple_factors(h1);
      append(hf, simple_factors(h2));
      std::vector<Irrep> kf;
      if (m >= 2) {
        Labels w(static_cast<size_t>(m - 1), 0);
        w[0] = 1;
        kf.push_back(Irrep::make(AlgebraId::make(Family::A, m - 1), w));
      }
      if (n - m >= 2) {
        Labels w(static_cast<size_t>(n - m - 1), 0);
        w[n - m - 2] = 1;  // conjugate defining
        kf.push_back(Irrep::make(AlgebraId::make(Family::A, n - m - 1), w));
      }
      KDatum kd{kf, rat(n, gd), true};
      return finish(g, hf, true, img, kd, "m" + std::to_string(m));
    }
    case PairClass::BDI: {
      // so(n) / so(m) + so(n-m), n >= 5, 1 <= m <= n/2
      if (n < 5 || m < 1 || 2 * m > n)
        throw invalid_input("BDI needs so(n), n >= 5, 1 <= m <= n/2");
      p.split_m = m;
      ClassicalName g{Series::SO, n};
      ClassicalName h1{Series::SO, m}, h2{Series::SO, n - m};
      int k = n / 2, k1 = m / 2, k2 = (n - m) / 2;
      bool abelian = (m == 2);
      auto img = [=](const RatVec& dyn) -> std::pair<RatVec, Rat> {
        RatVec x = eps_from_labels(g, dyn);
        RatVec labels;
        Rat q(0);
        if (abelian) q = x[0];
        else append(labels, labels_from_eps(h1, slice(x, 0, k1)));
        append(labels, labels_from_eps(h2, slice(x, k1, k2)));
        return {labels, q};
      };
      std::vector<AlgebraId> hf;
      if (!abelian) hf = simple_factors(h1);
      append(hf, simple_factors(h2));
      RatVec kl;
      if (!abelian && m >= 3)
        kl = labels_from_eps(h1, unit_eps(k1, 0));
      append(kl, labels_from_eps(h2, unit_eps(k2, 0)));
      KDatum kd{split_irreps(hf, kl), abelian ? Rat(1) : Rat(0), abelian};
      std::string hspec = "so" + std::to_string(m) + "xso" + std::to_string(n - m);
      return finish(g, hf, abelian, img, kd, hspec);
    }
    case PairClass::DIII: {
      // so(2N) / u(N), N >= 3
      if (n < 6 || n % 2 != 0) throw invalid_input("DIII needs so(2N), N >= 3");
      int N = n / 2;
      ClassicalName g{Series::SO, n}, h{Series::SU, N};
      auto img = [=](const RatVec& dyn) -> std::pair<RatVec, Rat> {
        RatVec x = eps_from_labels(g, dyn);
        Rat q(0);
        for (const auto& v : x) q += v;
        return {labels_from_eps(h, x), q};
      };
      Labels lam(static_cast<size_t>(N - 1), 0);
      lam[1] = 1;  // second fundamental of su(N)
      KDatum kd{{Irrep::make(AlgebraId::make(Family::A, N - 1), lam)}, Rat(2),
                true};
      return finish(g, simple_factors(h), true, img, kd, "");
    }
    case PairClass::CI: {
      // sp(2N) / u(N), N >= 2
      if (n < 4 || n % 2 != 0) throw invalid_input("CI needs sp(2N), N >= 2");
      int N = n / 2;
      ClassicalName g{Series::SP, n}, h{Series::SU, N};
      auto img = [=](const RatVec& dyn) -> std::pair<RatVec, Rat> {
        RatVec x = eps_from_labels(g, dyn);
        Rat q(0);
        for (const auto& v : x) q += v;
        return {labels_from_eps(h, x), q};
      };
      Labels lam(static_cast<size_t>(N - 1), 0);
      lam[0] = 2;  // symmetric square of the defining of su(N)
      KDatum kd{{Irrep::make(AlgebraId::make(Family::A, N - 1), lam)}, Rat(2),
                true};
      return finish(g, simple_factors(h), true, img, kd, "");
    }
    case PairClass::CII: {
      // sp(2N) / sp(2m) + sp(2N-2m), 1 <= m <= N/2
      if (n < 4 || n % 2 != 0) throw invalid_input("CII needs sp(2N)");
      int N = n / 2;
      if (m < 1 || 2 * m > N)
        throw invalid_input("CII needs 1 <= m <= N/2");
      p.split_m = m;
      ClassicalName g{Series::SP, n};
      ClassicalName h1{Series::SP, 2 * m}, h2{Series::SP, 2 * (N - m)};
      auto img = [=](const RatVec& dyn) -> std::pair<RatVec, Rat> {
        RatVec x = eps_from_labels(g, dyn);
        RatVec labels = labels_from_eps(h1, slice(x, 0, m));
        append(labels, labels_from_eps(h2, slice(x, m, N - m)));
        return {labels, Rat(0)};
      };
      std::vector<AlgebraId> hf = simple_factors(h1);
      append(hf, simple_factors(h2));
      RatVec kl = labels_from_eps(h1, unit_eps(m, 0));
      append(kl, labels_from_eps(h2, unit_eps(N - m, 0)));
      KDatum kd{split_irreps(hf, kl), Rat(0), false};
      return finish(g, hf, false, img, kd, "m" + std::to_string(m));
    }
  }
  throw invalid_input("unknown pair class");
}

SymmetricPair parse_pair(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos)
    throw invalid_input("pair name needs the form CLASS:group[|hspec]: " + name);
  std::string cls_s = name.substr(0, colon);
  std::string rest = name.substr(colon + 1);
  std::string gname = rest, hspec;
  auto bar = rest.find('|');
  if (bar != std::string::npos) {
    gname = rest.substr(0, bar);
    hspec = rest.substr(bar + 1);
  }
  ClassicalName g = ClassicalName::parse(gname);

  PairClass cls;
  if (cls_s == "AI") cls = PairClass::AI;
  else if (cls_s == "AII") cls = PairClass::AII;
  else if (cls_s == "AIII") cls = PairClass::AIII;
  else if (cls_s == "BDI") cls = PairClass::BDI;
  else if (cls_s == "DIII") cls = PairClass::DIII;
  else if (cls_s == "CI") cls = PairClass::CI;
  else if (cls_s == "CII") cls = PairClass::CII;
  else throw invalid_input("unknown symmetric-pair class: " + cls_s);

  int m = 0;
  if (cls == PairClass::AIII || cls == PairClass::CII) {
    if (hspec.size() < 2 || hspec[0] != 'm')
      throw invalid_input(cls_s + " needs |m<value>: " + name);
    m = std::stoi(hspec.substr(1));
  } else if (cls == PairClass::BDI) {
    if (hspec.rfind("m", 0) == 0) {
      m = std::stoi(hspec.substr(1));
    } else {
      auto x = hspec.find("xso");
      if (hspec.rfind("so", 0) != 0 || x == std::string::npos)
        throw invalid_input("BDI needs |so<m>xso<n-m> or |m<value>: " + name);
      m = std::stoi(hspec.substr(2, x - 2));
      int m2 = std::stoi(hspec.substr(x + 3));
      if (m + m2 != g.n)
        throw invalid_input("BDI blocks must add up to " + gname + ": " + name);
      if (m > m2) std::swap(m, m2);
    }
  } else if (!hspec.empty()) {
    throw invalid_input(cls_s + " takes no h specifier: " + name);
  }
  return make_pair(cls, g.n, m);
}

std::vector<SymmetricPair> catalog(int max_rank) {
  if (max_rank < 1 || max_rank > 8)
    throw invalid_input("catalog supports max_rank between 1 and 8");
  std::vector<SymmetricPair> out;
  for (int n = 3; n - 1 <= max_rank; ++n) out.push_back(make_pair(PairClass::AI, n));
  for (int n = 4; n - 1 <= max_rank; n += 2) out.push_back(make_pair(PairClass::AII, n));
  for (int n = 2; n - 1 <= max_rank; ++n)
    for (int m = 1; 2 * m <= n; ++m) out.push_back(make_pair(PairClass::AIII, n, m));
  for (int n = 5; n / 2 <= max_rank; ++n)
    for (int m = 1; 2 * m <= n; ++m) out.push_back(make_pair(PairClass::BDI, n, m));
  for (int n = 6; n / 2 <= max_rank; n += 2) out.push_back(make_pair(PairClass::DIII, n));
  for (int n = 4; n / 2 <= max_rank; n += 2) out.push_back(make_pair(PairClass::CI, n));
  for (int n = 4; n / 2 <= max_rank; n += 2)
    for (int m = 1; 2 * m <= n / 2; ++m) out.push_back(make_pair(PairClass::CII, n, m));
  return out;
}

std::vector<Rat> scaling_factors(const SymmetricPair& pair) {
  Rat cA = pair.c_adjoint();
  std::vector<Rat> out;
  for (size_t i = 0; i < pair.h_factors.size(); ++i) {
    Rat c2_adj = casimir_value(pair.h_factors[i],
                               adjoint_highest_weight(pair.h_factors[i]));
    Rat c2_k = pair.k_rep.factors[i].casimir;
    Rat denom = c2_adj + rat(pair.dim_k, pair.h_factors[i].dim()) * c2_k;
    out.push_back(cA / denom);
  }
  if (pair.has_abelian) {
    Rat q = pair.k_rep.charge;
    if (q == 0) throw std::logic_error("abelian factor with zero k charge");
    out.push_back(cA / (Rat(pair.dim_k) * q * q));
  }
  return out;
}

Rat casimir_on_node(const SymmetricPair& pair, const HIrrepNode& node) {
  if (node.factors.size() != pair.h_factors.size())
    throw invalid_input("node factor count does not match pair");
  auto c = scaling_factors(pair);
  Rat total(0);
  for (size_t i = 0; i < node.factors.size(); ++i)
    total += c[i] * node.factors[i].casimir;
  if (pair.has_abelian)
    total += c.back() * node.charge * node.charge;
  else if (node.charge != 0)
    throw invalid_input("charged node on a pair without abelian factor");
  return total;
}

HIrrepNode make_node(const SymmetricPair& pair, std::vector<Irrep> factors,
                     Rat charge, long mult) {
  HIrrepNode node{std::move(factors), std::move(charge), mult, Rat(0)};
  node.casimir = casimir_on_node(pair, node);
  return node;
}

HIrrepNode k_node(const SymmetricPair& pair, bool conjugate_half) {
  std::vector<Irrep> f = pair.k_rep.factors;
  Rat q = pair.k_rep.charge;
  if (conjugate_half) {
    for (auto& x : f) x = x.dual();
    q = -q;
  }
  return make_node(pair, std::move(f), q);
}

SubalgebraDatum datum_from_pair(const SymmetricPair& pair) {
  SubalgebraDatum d;
  d.name = pair.name;
  for (size_t i = 0; i < pair.h_factors.size(); ++i) {
    SubalgebraDatum::Factor f;
    f.dim_h = pair.h_factors[i].dim();
    f.c2_adjoint = casimir_value(pair.h_factors[i],
                                 adjoint_highest_weight(pair.h_factors[i]));
    f.c2_k_components = {pair.k_rep.factors[i].casimir};
    d.factors.push_back(std::move(f));
  }
  d.has_abelian = pair.has_abelian;
  d.dim_k = pair.dim_k;
  return d;
}

Rat sst_check(const SubalgebraDatum& datum) {
  Rat total(0);
  for (const auto& f : datum.factors) {
    if (f.c2_k_components.empty())
      throw formula_inapplicable("factor of " + datum.name + " sees no k");
    for (const auto& c : f.c2_k_components)
      if (c != f.c2_k_components.front())
        throw formula_inapplicable(
            "k-components under a factor of " + datum.name +
            " have distinct Casimirs; scaling-factor formula inapplicable");
    Rat c2k = f.c2_k_components.front();
    if (c2k == 0)
      throw formula_inapplicable("k is invariant under a factor of " + datum.name);
    total += 1 / (f.c2_adjoint / c2k + datum.dim_k / f.dim_h);
  }
  if (datum.has_abelian) total += 1 / datum.dim_k;
  return total;
}

Rat sst_check(const SymmetricPair& pair) { return sst_check(datum_from_pair(pair)); }

std::vector<SubalgebraDatum> negative_controls() {
  // g2 in so(7): k is the 7 of g2 (adjoint Casimir 8, Casimir 4 on the 7).
  SubalgebraDatum g2;
  g2.name = "control:so7-g2";
  g2.factors = {{Rat(14), Rat(8), {Rat(4)}}};
  g2.dim_k = 7;

  // Adjoint embedding of su(3) in so(8): k = 10 + 10bar, Casimir 12 each.
  SubalgebraDatum su3;
  su3.name = "control:so8-su3adj";
  su3.factors = {{Rat(8), Rat(6), {Rat(12), Rat(12)}}};
  su3.dim_k = 20;

  return {g2, su3};
}

}  // namespace kmat
