#include "kmat/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "kmat/errors.hpp"
#include "kmat/kgraph.hpp"

namespace kmat {

namespace {

using Mat = Eigen::MatrixXcd;
constexpr double kPi = 3.14159265358979323846;
const cd kI(0, 1);

Mat unit(int d, int j, int k) {
  Mat m = Mat::Zero(d, d);
  m(j, k) = 1;
  return m;
}

// Anti-Hermitian building blocks.
Mat asym(int d, int j, int k) { return unit(d, j, k) - unit(d, k, j); }
Mat isym(int d, int j, int k) {
  return kI * (unit(d, j, k) + unit(d, k, j));
}

// Spanning set (not yet orthonormal) of su(n) embedded on the index set
// idx inside d x d matrices.
std::vector<Mat> su_span(int d, const std::vector<int>& idx) {
  int n = static_cast<int>(idx.size());
  std::vector<Mat> out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      out.push_back(asym(d, idx[j], idx[k]));
      out.push_back(isym(d, idx[j], idx[k]));
    }
  for (int j = 1; j < n; ++j) {
    Mat m = Mat::Zero(d, d);
    m(idx[0], idx[0]) = kI;
    m(idx[j], idx[j]) = -kI;
    out.push_back(m);
  }
  return out;
}

std::vector<Mat> so_span(int d, const std::vector<int>& idx) {
  int n = static_cast<int>(idx.size());
  std::vector<Mat> out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) out.push_back(asym(d, idx[j], idx[k]));
  return out;
}

// Compact sp(2n) on the index map (local 0..2n-1 -> global), local blocks
// x = 0..n-1, p = n..2n-1: matrices [[A, B], [-conj(B), conj(A)]] with A
// anti-Hermitian and B symmetric.
std::vector<Mat> sp_span(int d, const std::vector<int>& idx) {
  int n2 = static_cast<int>(idx.size());
  int n = n2 / 2;
  std::vector<Mat> out;
  auto put = [&](int lj, int lk, cd v, Mat& m) { m(idx[lj], idx[lk]) += v; };
  // A part: diag(A, conj(A))
  auto a_gen = [&](int j, int k, cd v) {
    Mat m = Mat::Zero(d, d);
    put(j, k, v, m);
    put(k, j, -std::conj(v), m);
    put(n + j, n + k, std::conj(v), m);
    put(n + k, n + j, -v, m);
    return m;
  };
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      out.push_back(a_gen(j, k, cd(1, 0)));
      out.push_back(a_gen(j, k, cd(0, 1)));
    }
  for (int j = 0; j < n; ++j) {
    Mat m = Mat::Zero(d, d);
    put(j, j, kI, m);
    put(n + j, n + j, -kI, m);
    out.push_back(m);
  }
  // B part: [[0, B], [-conj(B), 0]], B symmetric (real and imaginary).
  auto b_gen = [&](int j, int k, cd v) {
    Mat m = Mat::Zero(d, d);
    put(j, n + k, v, m);
    if (j != k) put(k, n + j, v, m);
    put(n + k, j, -std::conj(v), m);
    if (j != k) put(n + j, k, -std::conj(v), m);
    return m;
  };
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      out.push_back(b_gen(j, k, cd(1, 0)));
      out.push_back(b_gen(j, k, cd(0, 1)));
    }
  return out;
}

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

double hs_inner(const Mat& a, const Mat& b) {
  return std::real((a.adjoint() * b).trace());
}

// Modified Gram-Schmidt; keeps input order, drops dependent elements.
std::vector<Mat> orthonormalize(std::vector<Mat> v) {
  std::vector<Mat> out;
  for (auto& m : v) {
    for (const auto& e : out) m -= hs_inner(e, m) * e;
    double n2 = hs_inner(m, m);
    if (n2 < 1e-18) continue;
    out.push_back(m / std::sqrt(n2));
  }
  return out;
}

// The two commuting su(2) ideals of an so(4) block.
std::pair<std::vector<Mat>, std::vector<Mat>> so4_ideals(
    int d, const std::vector<int>& ix) {
  auto r = [&](int a, int b) { return asym(d, ix[a], ix[b]); };
  std::vector<Mat> plus = {r(1, 2) + r(0, 3), r(2, 0) + r(1, 3),
                           r(0, 1) + r(2, 3)};
  std::vector<Mat> minus = {r(1, 2) - r(0, 3), r(2, 0) - r(1, 3),
                            r(0, 1) - r(2, 3)};
  return {plus, minus};
}

// h-generators of an so(m) block with factor tags appended; abelian (so(2))
// generators are returned separately so they can be placed last.
void so_block(int d, const std::vector<int>& ix, int& next_factor,
              std::vector<Mat>& simple, std::vector<int>& tags,
              std::vector<Mat>& abelian) {
  int m = static_cast<int>(ix.size());
  if (m <= 1) return;
  if (m == 2) {
    abelian.push_back(asym(d, ix[0], ix[1]));
    return;
  }
  if (m == 4) {
    auto [plus, minus] = so4_ideals(d, ix);
    for (auto& g : plus) { simple.push_back(g); tags.push_back(next_factor); }
    ++next_factor;
    for (auto& g : minus) { simple.push_back(g); tags.push_back(next_factor); }
    ++next_factor;
    return;
  }
  for (auto& g : so_span(d, ix)) { simple.push_back(g); tags.push_back(next_factor); }
  ++next_factor;
}

struct BasisPlan {
  std::vector<Mat> h;       // simple-factor generators then abelian ones
  std::vector<int> h_tags;  // -1 for abelian
  std::vector<Mat> g_span;  // spanning set of all of g
  std::function<Mat(const Mat&)> sigma;
  int num_factors = 0;
};

Mat block_diag_sign(int d, const std::vector<int>& plus) {
  Mat m = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = -1;
  for (int i : plus) m(i, i) = 1;
  return m;
}

BasisPlan plan_for_pair(const SymmetricPair& pair) {
  BasisPlan plan;
  int n = pair.g_classical.n;
  int m = pair.split_m;
  switch (pair.cls) {
    case PairClass::AI: {
      int d = n;
      plan.g_span = su_span(d, iota_vec(0, d));
      int next = 0;
      std::vector<Mat> ab;
      so_block(d, iota_vec(0, n), next, plan.h, plan.h_tags, ab);
      plan.num_factors = next;
      plan.sigma = [](const Mat& x) { return x.conjugate().eval(); };
      break;
    }
    case PairClass::AII: {
      int d = n;
      plan.g_span = su_span(d, iota_vec(0, d));
      for (auto& g : sp_span(d, iota_vec(0, d))) {
        plan.h.push_back(g);
        plan.h_tags.push_back(0);
      }
      plan.num_factors = 1;
      Mat J = Mat::Zero(d, d);
      for (int i = 0; i < n / 2; ++i) {
        J(i, n / 2 + i) = 1;
        J(n / 2 + i, i) = -1;
      }
      plan.sigma = [J](const Mat& x) {
        return (J * x.conjugate() * (-J)).eval();
      };
      break;
    }
    case PairClass::AIII: {
      int d = n;
      plan.g_span = su_span(d, iota_vec(0, d));
      int next = 0;
      if (m >= 2)
        for (auto& g : su_span(d, iota_vec(0, m))) {
          plan.h.push_back(g);
          plan.h_tags.push_back(next);
        }
      if (m >= 2) ++next;
      if (n - m >= 2) {
        for (auto& g : su_span(d, iota_vec(m, n - m))) {
          plan.h.push_back(g);
          plan.h_tags.push_back(next);
        }
        ++next;
      }
      plan.num_factors = next;
      Mat u1 = Mat::Zero(d, d);
      for (int i = 0; i < d; ++i) u1(i, i) = kI * cd(i < m ? n - m : -m, 0);
      plan.h.push_back(u1);
      plan.h_tags.push_back(-1);
      Mat D = block_diag_sign(d, iota_vec(0, m));
      plan.sigma = [D](const Mat& x) { return (D * x * D).eval(); };
      break;
    }
    case PairClass::BDI: {
      int d = n;
      plan.g_span = so_span(d, iota_vec(0, d));
      int next = 0;
      std::vector<Mat> ab;
      so_block(d, iota_vec(0, m), next, plan.h, plan.h_tags, ab);
      so_block(d, iota_vec(m, n - m), next, plan.h, plan.h_tags, ab);
      plan.num_factors = next;
      for (auto& g : ab) {
        plan.h.push_back(g);
        plan.h_tags.push_back(-1);
      }
      Mat D = block_diag_sign(d, iota_vec(0, m));
      plan.sigma = [D](const Mat& x) { return (D * x * D).eval(); };
      break;
    }
    case PairClass::DIII: {
      int d = n;
      int N = n / 2;
      plan.g_span = so_span(d, iota_vec(0, d));
      // u(N) inside so(2N): A = Are + i*Aim -> [[Are, -Aim], [Aim, Are]]
      auto embed = [&](const Mat& A) {
        Mat out = Mat::Zero(d, d);
        for (int j = 0; j < N; ++j)
          for (int k = 0; k < N; ++k) {
            double re = std::real(A(j, k)), im = std::imag(A(j, k));
            out(j, k) += re;
            out(N + j, N + k) += re;
            out(j, N + k) += -im;
            out(N + j, k) += im;
          }
        return out;
      };
      for (auto& a : su_span(N, iota_vec(0, N))) {
        plan.h.push_back(embed(a));
        plan.h_tags.push_back(0);
      }
      plan.num_factors = 1;
      plan.h.push_back(embed(kI * Mat::Identity(N, N)));
      plan.h_tags.push_back(-1);
      Mat J = embed(kI * Mat::Identity(N, N));
      plan.sigma = [J](const Mat& x) { return (J * x * (-J)).eval(); };
      break;
    }
    case PairClass::CI: {
      int d = n;
      int N = n / 2;
      plan.g_span = sp_span(d, iota_vec(0, d));
      auto embed = [&](const Mat& A) {
        Mat out = Mat::Zero(d, d);
        out.block(0, 0, N, N) = A;
        out.block(N, N, N, N) = A.conjugate();
        return out;
      };
      for (auto& a : su_span(N, iota_vec(0, N))) {
        plan.h.push_back(embed(a));
        plan.h_tags.push_back(0);
      }
      plan.num_factors = 1;
      plan.h.push_back(embed(kI * Mat::Identity(N, N)));
      plan.h_tags.push_back(-1);
      // Conjugation by diag(i 1, -i 1) in Sp(2N); fixes exactly u(N).
      Mat D = block_diag_sign(d, iota_vec(0, N));
      plan.sigma = [D](const Mat& x) { return (D * x * D).eval(); };
      break;
    }
    case PairClass::CII: {
      int d = n;
      int N = n / 2;
      plan.g_span = sp_span(d, iota_vec(0, d));
      std::vector<int> ix1, ix2;
      for (int i = 0; i < m; ++i) ix1.push_back(i);
      for (int i = 0; i < m; ++i) ix1.push_back(N + i);
      for (int i = m; i < N; ++i) ix2.push_back(i);
      for (int i = m; i < N; ++i) ix2.push_back(N + i);
      for (auto& g : sp_span(d, ix1)) {
        plan.h.push_back(g);
        plan.h_tags.push_back(0);
      }
      for (auto& g : sp_span(d, ix2)) {
        plan.h.push_back(g);
        plan.h_tags.push_back(1);
      }
      plan.num_factors = 2;
      std::vector<int> plus = iota_vec(0, m);
      for (int i = 0; i < m; ++i) plus.push_back(N + i);
      Mat D = block_diag_sign(d, plus);
      plan.sigma = [D](const Mat& x) { return (D * x * D).eval(); };
      break;
    }
  }
  return plan;
}

struct AssembledBasis {
  std::vector<Mat> gens;  // Hermitian, h first
  std::vector<int> h_tags;
  int dim_h;
};

AssembledBasis assemble(int d, const BasisPlan& plan, long expected_dim_g) {
  std::vector<Mat> h = orthonormalize(plan.h);
  if (h.size() != plan.h.size())
    throw std::logic_error("h generators are not independent");
  std::vector<Mat> k_span;
  for (const auto& x : plan.g_span) k_span.push_back(x - plan.sigma(x));
  std::vector<Mat> hk = h;
  for (const auto& x : k_span) hk.push_back(x);
  std::vector<Mat> all = orthonormalize(hk);
  if (static_cast<long>(all.size()) != expected_dim_g)
    throw std::logic_error("basis count does not match dim g");
  AssembledBasis out;
  out.dim_h = static_cast<int>(h.size());
  out.h_tags = plan.h_tags;
  for (auto& b : all) out.gens.push_back(kI * b);  // Hermitian charges
  return out;
}

void fill_structure(MatrixRealization& r) {
  int N = r.dim_g();
  r.f.assign(N, std::vector<std::vector<double>>(
                    N, std::vector<double>(N, 0.0)));
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      Mat comm = r.gens[a] * r.gens[b] - r.gens[b] * r.gens[a];
      for (int c = 0; c < N; ++c) {
        // [T^a, T^b] = i f^{abc} T^c with orthonormal T's
        double fabc = std::imag((comm * r.gens[c]).trace());
        r.f[a][b][c] = fabc;
        r.f[b][a][c] = -fabc;
      }
    }
  // Casimir of the adjoint: sum_a (ad T^a)^2 = c_A * id
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c)
      for (int b = 0; b < N; ++b)
        for (int e = 0; e < N; ++e) M(c, b) -= r.f[a][e][c] * r.f[a][b][e];
  r.c_adjoint = M.trace() / N;
}

MatrixRealization finalize(std::string label, ClassicalName gname,
                           AlgebraId alg, int d, AssembledBasis basis,
                           int num_factors) {
  MatrixRealization r;
  r.label = std::move(label);
  r.g_classical = gname;
  r.algebra = alg;
  r.dim_v = d;
  r.dim_h = basis.dim_h;
  r.gens = std::move(basis.gens);
  r.h_factor_of = std::move(basis.h_tags);
  r.num_factors = num_factors;
  fill_structure(r);
  return r;
}

}  // namespace

cd EvaluationRep::scale() const {
  return theta * realization.c_adjoint / (cd(4) * kI * kPi);
}

Mat MatrixRealization::casimir_h() const {
  Mat c = Mat::Zero(dim_v, dim_v);
  for (int i = 0; i < dim_h; ++i) c += gens[i] * gens[i];
  return c;
}

Mat MatrixRealization::twisted_q1(int p, cd theta) const {
  if (p < dim_h || p >= dim_g())
    throw invalid_input("twisted generator index must lie in k");
  Mat c = casimir_h();
  cd z = theta * c_adjoint / (cd(4) * kI * kPi);
  return z * gens[p] + 0.25 * (c * gens[p] - gens[p] * c);
}

MatrixRealization build_realization(const SymmetricPair& pair) {
  int d = pair.g_classical.n;
  if (d > 9)
    throw invalid_input("matrix realizations support defining dimension <= 9");
  BasisPlan plan = plan_for_pair(pair);
  AssembledBasis basis = assemble(d, plan, group_dim(pair.g_classical));
  long expected_h = pair.dim_h();
  if (basis.dim_h != expected_h)
    throw std::logic_error("h dimension mismatch in realization");
  return finalize(pair.name, pair.g_classical, pair.g, d, std::move(basis),
                  plan.num_factors);
}

MatrixRealization build_algebra_realization(ClassicalName g) {
  int d = g.n;
  if (d > 9)
    throw invalid_input("matrix realizations support defining dimension <= 9");
  auto factors = simple_factors(g);
  if (factors.size() != 1) throw invalid_input(g.str() + " is not simple");
  std::vector<Mat> span;
  switch (g.series) {
    case Series::SU: span = su_span(d, iota_vec(0, d)); break;
    case Series::SO: span = so_span(d, iota_vec(0, d)); break;
    case Series::SP: span = sp_span(d, iota_vec(0, d)); break;
  }
  BasisPlan plan;
  plan.h = span;
  plan.h_tags.assign(span.size(), 0);
  plan.g_span = span;
  plan.sigma = [](const Mat& x) { return x; };  // k empty
  plan.num_factors = 1;
  AssembledBasis basis = assemble(d, plan, group_dim(g));
  return finalize(g.str(), g, factors[0], d, std::move(basis), 1);
}

MatrixRealization non_symmetric_control() {
  // su(2) block inside su(3); k = orthogonal complement (5-dimensional).
  // Not a symmetric pair: [k, k] leaks back into k.
  int d = 3;
  BasisPlan plan;
  for (auto& g : su_span(d, iota_vec(0, 2))) {
    plan.h.push_back(g);
    plan.h_tags.push_back(0);
  }
  plan.num_factors = 1;
  plan.g_span = su_span(d, iota_vec(0, d));
  // No involution: take k as the trace-orthogonal complement of h.
  std::vector<Mat> h_on = orthonormalize(plan.h);
  plan.sigma = [h_on](const Mat& x) {
    Mat proj = Mat::Zero(x.rows(), x.cols());
    for (const auto& e : h_on) proj += hs_inner(e, x) * e;
    return (2 * proj - x).eval();  // +1 on h, -1 on complement
  };
  AssembledBasis basis = assemble(d, plan, group_dim({Series::SU, 3}));
  return finalize("control:su3-su2block", {Series::SU, 3},
                  AlgebraId::make(Family::A, 2), d, std::move(basis), 1);
}

RealizationChecks verify_realization(const MatrixRealization& r) {
  int N = r.dim_g();
  RealizationChecks out{0, 0, 0};
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      Mat comm = r.gens[a] * r.gens[b] - r.gens[b] * r.gens[a];
      for (int c = 0; c < N; ++c) comm -= kI * r.f[a][b][c] * r.gens[c];
      out.closure = std::max(out.closure, comm.norm());
    }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        out.antisymmetry =
            std::max(out.antisymmetry, std::abs(r.f[a][b][c] + r.f[b][a][c]));
        out.antisymmetry =
            std::max(out.antisymmetry, std::abs(r.f[a][b][c] + r.f[a][c][b]));
      }
  Mat cas = Mat::Zero(r.dim_v, r.dim_v);
  for (const auto& t : r.gens) cas += t * t;
  cd mean = cas.trace() / cd(r.dim_v);
  out.casimir_scatter = (cas - mean * Mat::Identity(r.dim_v, r.dim_v)).norm();
  return out;
}

SparsityReport check_structure_sparsity(const MatrixRealization& r,
                                        double tol) {
  int N = r.dim_g();
  double worst = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        int nk = (a >= r.dim_h) + (b >= r.dim_h) + (c >= r.dim_h);
        if (nk == 1 || nk == 3)
          worst = std::max(worst, std::abs(r.f[a][b][c]));
      }
  return {worst < tol, worst};
}

SerreReport check_serre(const MatrixRealization& r, cd theta) {
  int N = r.dim_g();
  int d = r.dim_v;
  cd z = theta * r.c_adjoint / (cd(4) * kI * kPi);

  // Left side without the z^2 factor: antisymmetrized f^{dab}[T^c, T^d].
  std::vector<std::vector<Mat>> comm(N, std::vector<Mat>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      comm[a][b] = r.gens[a] * r.gens[b] - r.gens[b] * r.gens[a];

  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const double sgn[6] = {1, 1, 1, -1, -1, -1};

  double lhs0 = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        Mat acc = Mat::Zero(d, d);
        int abc[3] = {a, b, c};
        for (int s = 0; s < 6; ++s) {
          int pa = abc[perms[s][0]], pb = abc[perms[s][1]],
              pc = abc[perms[s][2]];
          for (int dd = 0; dd < N; ++dd) {
            double fd = r.f[dd][pa][pb];
            if (fd != 0.0) acc += (sgn[s] / 6.0) * fd * comm[pc][dd];
          }
        }
        lhs0 = std::max(lhs0, acc.norm());
      }

  // Right side: (i/12) W^{abc}_{pqr} S^{(pqr)} with
  // W = f^{api} f^{bqj} f^{crk} f^{ijk}; theta-independent.
  std::vector<Mat> sym;
  sym.reserve(static_cast<size_t>(N) * N * N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q)
      for (int rr = 0; rr < N; ++rr) {
        Mat s = Mat::Zero(d, d);
        const Mat &tp = r.gens[p], &tq = r.gens[q], &tr = r.gens[rr];
        s += tp * tq * tr + tq * tr * tp + tr * tp * tq;
        s += tp * tr * tq + tr * tq * tp + tq * tp * tr;
        sym.push_back(s / 6.0);
      }

  // g1[p][j][k] = sum_i f^{api} f^{ijk}, per a; then fold in b and c.
  double rhs = 0;
  std::vector<double> g1(static_cast<size_t>(N) * N * N);
  std::vector<double> g2(static_cast<size_t>(N) * N * N);
  for (int a = 0; a < N; ++a) {
    std::fill(g1.begin(), g1.end(), 0.0);
    for (int p = 0; p < N; ++p)
      for (int i = 0; i < N; ++i) {
        double fapi = r.f[a][p][i];
        if (fapi == 0.0) continue;
        for (int j = 0; j < N; ++j)
          for (int k = 0; k < N; ++k)
            g1[(static_cast<size_t>(p) * N + j) * N + k] +=
                fapi * r.f[i][j][k];
      }
    for (int b = 0; b < N; ++b) {
      std::fill(g2.begin(), g2.end(), 0.0);
      for (int q = 0; q < N; ++q)
        for (int j = 0; j < N; ++j) {
          double fbqj = r.f[b][q][j];
          if (fbqj == 0.0) continue;
          for (int p = 0; p < N; ++p)
            for (int k = 0; k < N; ++k)
              g2[(static_cast<size_t>(p) * N + q) * N + k] +=
                  fbqj * g1[(static_cast<size_t>(p) * N + j) * N + k];
        }
      for (int c = 0; c < N; ++c) {
        Mat acc = Mat::Zero(d, d);
        for (int rr = 0; rr < N; ++rr)
          for (int k = 0; k < N; ++k) {
            double fcrk = r.f[c][rr][k];
            if (fcrk == 0.0) continue;
            for (int p = 0; p < N; ++p)
              for (int q = 0; q < N; ++q) {
                double w = fcrk * g2[(static_cast<size_t>(p) * N + q) * N + k];
                if (w != 0.0)
                  acc += w * sym[(static_cast<size_t>(p) * N + q) * N + rr];
              }
          }
        rhs = std::max(rhs, ((kI / 12.0) * acc).norm());
      }
    }
  }

  double lhs = std::norm(z) * lhs0;  // |z|^2 * base
  return {lhs, rhs, std::abs(lhs - rhs)};
}

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Coproduct of the level-1 charge on V^phi (x) V^theta:
// D(Q1^a) = z_phi T^a (x) 1 + 1 (x) z_theta T^a + (i/2) f^a_bc T^b (x) T^c.
Mat coproduct_q1(const MatrixRealization& r, int a, cd z_phi, cd z_theta) {
  int d = r.dim_v;
  Mat id = Mat::Identity(d, d);
  Mat out = z_phi * kron(r.gens[a], id) + z_theta * kron(id, r.gens[a]);
  int N = r.dim_g();
  for (int b = 0; b < N; ++b)
    for (int c = 0; c < N; ++c) {
      double fabc = r.f[a][b][c];
      if (fabc != 0.0) out += (kI / 2.0) * fabc * kron(r.gens[b], r.gens[c]);
    }
  return out;
}

cd eval_z(const MatrixRealization& r, cd theta) {
  return theta * r.c_adjoint / (cd(4) * kI * kPi);
}

}  // namespace

double check_coproduct_hom(const MatrixRealization& r, cd theta, cd phi) {
  int N = r.dim_g();
  int d = r.dim_v;
  Mat id = Mat::Identity(d, d);
  cd z_phi = eval_z(r, phi), z_theta = eval_z(r, theta);
  std::vector<Mat> dq1(N);
  for (int a = 0; a < N; ++a) dq1[a] = coproduct_q1(r, a, z_phi, z_theta);
  double worst = 0;
  for (int a = 0; a < N; ++a) {
    Mat dq0 = kron(r.gens[a], id) + kron(id, r.gens[a]);
    for (int b = 0; b < N; ++b) {
      Mat res = dq0 * dq1[b] - dq1[b] * dq0;
      for (int c = 0; c < N; ++c)
        if (r.f[a][b][c] != 0.0) res -= kI * r.f[a][b][c] * dq1[c];
      worst = std::max(worst, res.norm());
    }
  }
  return worst;
}

CoidealReport check_coideal(const MatrixRealization& r, cd theta, cd phi) {
  int d = r.dim_v;
  Mat id = Mat::Identity(d, d);
  cd z_phi = eval_z(r, phi), z_theta = eval_z(r, theta);
  Mat ch = r.casimir_h();

  Mat dC = Mat::Zero(d * d, d * d);
  for (int i = 0; i < r.dim_h; ++i) {
    Mat dq0 = kron(r.gens[i], id) + kron(id, r.gens[i]);
    dC += dq0 * dq0;
  }
  Mat mixed = dC - kron(ch, id) - kron(id, ch);  // 2 sum_i T^i (x) T^i

  // Hilbert-Schmidt-orthonormal basis of the allowed second slot.
  std::vector<Mat> allowed;
  allowed.push_back(id / std::sqrt(static_cast<double>(d)));
  for (int i = 0; i < r.dim_h; ++i) allowed.push_back(r.gens[i]);

  CoidealReport rep{0, 0};
  for (int p = r.dim_h; p < r.dim_g(); ++p) {
    Mat q1c = coproduct_q1(r, p, z_phi, z_theta);
    Mat dq0 = kron(r.gens[p], id) + kron(id, r.gens[p]);
    Mat lhs = q1c + 0.25 * (dC * dq0 - dq0 * dC);

    Mat qt_phi = z_phi * r.gens[p] + 0.25 * (ch * r.gens[p] - r.gens[p] * ch);
    Mat qt_theta =
        z_theta * r.gens[p] + 0.25 * (ch * r.gens[p] - r.gens[p] * ch);
    Mat tp1 = kron(r.gens[p], id);
    Mat rhs = kron(qt_phi, id) + kron(id, qt_theta) +
              0.5 * (mixed * tp1 - tp1 * mixed);
    rep.identity_residual = std::max(rep.identity_residual, (lhs - rhs).norm());

    // Correction term; its second slot must stay inside span{1, Q0^i}.
    Mat gamma = lhs - kron(qt_phi, id) - kron(id, qt_theta);
    Mat proj = Mat::Zero(d * d, d * d);
    for (const auto& bmat : allowed) {
      Mat coefficient = Mat::Zero(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          cd acc = 0;
          for (int k = 0; k < d; ++k)
            for (int mm = 0; mm < d; ++mm)
              acc += std::conj(bmat(mm, k)) * gamma(i * d + mm, j * d + k);
          coefficient(i, j) = acc;
        }
      proj += kron(coefficient, bmat);
    }
    rep.subspace_residual =
        std::max(rep.subspace_residual, (gamma - proj).norm());
  }
  return rep;
}

IntertwinerResult solve_boundary_intertwiner(const MatrixRealization& r,
                                             cd theta) {
  int d = r.dim_v;
  int N = r.dim_g();
  Mat id = Mat::Identity(d, d);
  std::vector<std::pair<Mat, Mat>> eqs;  // (rho_theta(x), rho_-theta(x))
  for (int i = 0; i < r.dim_h; ++i) eqs.push_back({r.gens[i], r.gens[i]});
  for (int p = r.dim_h; p < N; ++p)
    eqs.push_back({r.twisted_q1(p, theta), r.twisted_q1(p, -theta)});

  Mat big(static_cast<int>(eqs.size()) * d * d, d * d);
  int row = 0;
  for (const auto& [m_th, m_neg] : eqs) {
    big.block(row, 0, d * d, d * d) =
        kron(m_th.transpose(), id) - kron(id, m_neg);
    row += d * d;
  }
  Eigen::JacobiSVD<Mat> svd(big, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  int nullity = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < 1e-9 * smax) ++nullity;
  if (nullity == 0)
    throw degenerate_solution(
        "no boundary intertwiner: smallest singular value " +
        std::to_string(sv(sv.size() - 1) / smax) + " (relative) for " +
        r.label);
  if (nullity > 1)
    throw degenerate_solution("boundary intertwiner space has dimension " +
                              std::to_string(nullity) + " for " + r.label);

  Eigen::VectorXcd v = svd.matrixV().col(d * d - 1);
  Mat K(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) K(i, j) = v(j * d + i);  // column-major

  IntertwinerResult out;
  out.K = K;
  out.nullity = nullity;
  out.residual = sv(sv.size() - 1) / smax;

  Eigen::ComplexEigenSolver<Mat> es(K);
  std::vector<cd> eig(es.eigenvalues().data(),
                      es.eigenvalues().data() + d);
  double scale = 0;
  for (cd e : eig) scale = std::max(scale, std::abs(e));
  std::vector<std::pair<cd, int>> clusters;
  for (cd e : eig) {
    bool placed = false;
    for (auto& [val, mult] : clusters)
      if (std::abs(e - val) < 1e-6 * scale) {
        val = (val * cd(mult, 0) + e) / cd(mult + 1, 0);
        ++mult;
        placed = true;
        break;
      }
    if (!placed) clusters.push_back({e, 1});
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) {
              if (std::real(a.first) != std::real(b.first))
                return std::real(a.first) < std::real(b.first);
              return std::imag(a.first) < std::imag(b.first);
            });
  out.eigenvalues = std::move(clusters);
  return out;
}

TraceScalingResult trace_scaling_factors(const MatrixRealization& r,
                                         const SymmetricPair& pair) {
  int N = r.dim_g();
  // Adjoint action of C_h on g, diagonal entries only.
  std::vector<double> diag(N, 0.0);
  for (int i = 0; i < r.dim_h; ++i)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        diag[b] += r.f[i][b][c] * r.f[i][b][c];

  // The defining-trace metric differs from the weight-lattice one by a
  // global scale; all Casimirs carry it, so divide it out once.
  double kappa = r.c_adjoint / to_double(pair.c_adjoint());

  TraceScalingResult out;
  out.rationalized = true;
  std::vector<Rat> c_exact;
  for (size_t fac = 0; fac < pair.h_factors.size(); ++fac) {
    double sum = 0;
    int count = 0;
    for (int b = 0; b < r.dim_h; ++b)
      if (r.h_factor_of[b] == static_cast<int>(fac)) {
        sum += diag[b];
        ++count;
      }
    if (count != pair.h_factors[fac].dim())
      throw std::logic_error("factor block size mismatch");
    double s = sum / count / kappa;
    Rat c2_adj = casimir_value(pair.h_factors[fac],
                               adjoint_highest_weight(pair.h_factors[fac]));
    double c_raw = s / to_double(c2_adj);
    out.raw.push_back(c_raw);
    auto rat_c = rationalize(c_raw, 10000, 1e-6);
    if (!rat_c) out.rationalized = false;
    c_exact.push_back(rat_c.value_or(Rat(0)));
  }
  if (pair.has_abelian) {
    double sum = 0;
    int count = 0;
    for (int b = r.dim_h; b < N; ++b) {
      sum += diag[b];
      ++count;
    }
    double s_k = sum / count / kappa;
    double rest = 0;
    for (size_t fac = 0; fac < pair.h_factors.size(); ++fac)
      rest += to_double(c_exact[fac] * pair.k_rep.factors[fac].casimir);
    Rat q = pair.k_rep.charge;
    double c0_raw = (s_k - rest) / to_double(q * q);
    out.raw.push_back(c0_raw);
    auto rat_c = rationalize(c0_raw, 10000, 1e-6);
    if (!rat_c) out.rationalized = false;
    c_exact.push_back(rat_c.value_or(Rat(0)));
  }
  out.c = std::move(c_exact);
  return out;
}

OracleComparison compare_intertwiner_with_symbolic(
    const SymmetricPair& pair, const std::vector<ComplexTheta>& thetas,
    double tol) {
  MatrixRealization r = build_realization(pair);
  std::string rep_name =
      pair.g_classical.series == Series::SO ? "vector" : "defining";
  Irrep v = rep_by_name(pair, rep_name);
  if (v.dim != r.dim_v)
    throw std::logic_error("defining representation dimension mismatch");
  SpectralDecomposition spectral = k_matrix_spectral(pair, v);

  OracleComparison out;
  out.pass = true;
  for (const auto& theta : thetas) {
    IntertwinerResult num = solve_boundary_intertwiner(r, theta.value());
    // Predicted eigenvalue pattern relative to the base node. Distinct
    // nodes can share a ratio (conjugate charge pairs); group them, since
    // the numeric spectrum cannot tell them apart.
    std::vector<std::pair<cd, int>> groups;
    int base_group = -1;
    for (size_t i = 0; i < spectral.graph.nodes.size(); ++i) {
      cd v = spectral.tau[i].eval(theta);
      int dim = static_cast<int>(spectral.graph.nodes[i].dim());
      int hit = -1;
      for (size_t gidx = 0; gidx < groups.size(); ++gidx)
        if (std::abs(groups[gidx].first - v) <
            1e-9 * std::max(1.0, std::abs(v)))
          hit = static_cast<int>(gidx);
      if (hit < 0) {
        groups.push_back({v, dim});
        hit = static_cast<int>(groups.size()) - 1;
      } else {
        groups[hit].second += dim;
      }
      if (static_cast<int>(i) == spectral.graph.base_node) base_group = hit;
    }
    if (groups.size() != num.eigenvalues.size()) {
      out.pass = false;
      out.message = "eigenvalue cluster count mismatch for " + pair.name;
      return out;
    }
    // Anchor on a numeric cluster matching the base group's dimension,
    // then match the rest by dimension and closeness.
    int base_dim = groups[static_cast<size_t>(base_group)].second;
    double best = -1;
    for (const auto& [anchor, mult] : num.eigenvalues) {
      if (mult != base_dim) continue;
      std::vector<bool> used(num.eigenvalues.size(), false);
      double worst = 0;
      bool feasible = true;
      for (const auto& [val, dim] : groups) {
        cd target = anchor * val;
        int pick = -1;
        double pick_err = 1e18;
        for (size_t c = 0; c < num.eigenvalues.size(); ++c) {
          if (used[c] || num.eigenvalues[c].second != dim) continue;
          double err = std::abs(num.eigenvalues[c].first - target) /
                       std::max(1e-300, std::abs(target));
          if (err < pick_err) {
            pick_err = err;
            pick = static_cast<int>(c);
          }
        }
        if (pick < 0) {
          feasible = false;
          break;
        }
        used[pick] = true;
        worst = std::max(worst, pick_err);
      }
      if (feasible && (best < 0 || worst < best)) best = worst;
    }
    if (best < 0) {
      out.pass = false;
      out.message = "no dimension-consistent eigenvalue matching for " +
                    pair.name;
      return out;
    }
    out.max_rel_err = std::max(out.max_rel_err, best);
  }
  out.pass = out.max_rel_err < tol;
  if (!out.pass && out.message.empty())
    out.message = "eigenvalue ratios deviate by " +
                  std::to_string(out.max_rel_err) + " for " + pair.name;
  return out;
}

}  // namespace kmat
