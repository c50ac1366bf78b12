#include "kmat/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kmat/errors.hpp"

namespace kmat {

AlgebraId AlgebraId::make(Family f, int r) {
  if (r < 1) throw invalid_input("algebra rank must be positive");
  switch (f) {
    case Family::A:
      return {Family::A, r};
    case Family::B:
      if (r == 1) return {Family::A, 1};
      return {Family::B, r};
    case Family::C:
      if (r == 1) return {Family::A, 1};
      return {Family::C, r};
    case Family::D:
      if (r <= 2) throw invalid_input("D1/D2 are not simple");
      if (r == 3) return {Family::A, 3};
      return {Family::D, r};
  }
  throw invalid_input("unknown family");
}

long AlgebraId::dim() const {
  long r = rank;
  switch (family) {
    case Family::A: return r * (r + 2);
    case Family::B: return r * (2 * r + 1);
    case Family::C: return r * (2 * r + 1);
    case Family::D: return r * (2 * r - 1);
  }
  return 0;
}

long AlgebraId::dual_coxeter() const {
  long r = rank;
  switch (family) {
    case Family::A: return r + 1;
    case Family::B: return 2 * r - 1;
    case Family::C: return r + 1;
    case Family::D: return 2 * r - 2;
  }
  return 0;
}

std::string AlgebraId::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

RootData::RootData(AlgebraId alg) : alg_(alg) {
  build_cartan();
  build_positive_roots();
  build_qform();
}

void RootData::build_cartan() {
  int r = alg_.rank;
  cartan_.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  auto link = [&](int i, int j) { cartan_[i][j] = -1; cartan_[j][i] = -1; };
  switch (alg_.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_r short; A[r-1][r] = -2 in the convention A_ij = <a_i, a_j^v>.
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      cartan_[r - 2][r - 1] = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      cartan_[r - 1][r - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
  }
  half_lengths_.assign(r, Rat(1));
  if (alg_.family == Family::B) half_lengths_[r - 1] = rat(1, 2);
  if (alg_.family == Family::C)
    for (int i = 0; i + 1 < r; ++i) half_lengths_[i] = rat(1, 2);
}

void RootData::build_positive_roots() {
  int r = alg_.rank;
  std::set<Labels> known;
  std::vector<Labels> by_height;
  for (int i = 0; i < r; ++i) {
    Labels a(cartan_[i].begin(), cartan_[i].end());
    known.insert(a);
    by_height.push_back(a);
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^v> >= 1,
  // where p counts how far the string extends backwards.
  size_t head = 0;
  while (head < by_height.size()) {
    Labels beta = by_height[head++];
    for (int i = 0; i < r; ++i) {
      long p = 0;
      Labels probe = beta;
      while (true) {
        for (int j = 0; j < r; ++j) probe[j] -= cartan_[i][j];
        if (known.count(probe)) ++p; else break;
      }
      if (p - beta[i] >= 1) {
        Labels next = beta;
        for (int j = 0; j < r; ++j) next[j] += cartan_[i][j];
        if (known.insert(next).second) by_height.push_back(next);
      }
    }
  }
  pos_roots_ = std::move(by_height);
  std::sort(pos_roots_.begin(), pos_roots_.end());
}

void RootData::build_qform() {
  int r = alg_.rank;
  // Invert the Cartan matrix exactly, then G_ij = (A^-1)_ij d_j.
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(2 * r, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = Rat(cartan_[i][j]);
    m[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (m[row][col] != 0) { piv = row; break; }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(m[col], m[piv]);
    Rat inv = 1 / m[col][col];
    for (int j = 0; j < 2 * r; ++j) m[col][j] *= inv;
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int j = 0; j < 2 * r; ++j) m[row][j] -= f * m[col][j];
    }
  }
  qform_.assign(r, std::vector<Rat>(r, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) qform_[i][j] = m[i][r + j] * half_lengths_[j];
}

Rat RootData::inner(const Labels& a, const Labels& b) const {
  int r = alg_.rank;
  Rat s(0);
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < r; ++j)
      if (b[j] != 0) row += qform_[i][j] * b[j];
    s += Rat(a[i]) * row;
  }
  return s;
}

bool RootData::is_dominant(const Labels& w) const {
  for (long x : w)
    if (x < 0) return false;
  return true;
}

Labels RootData::simple_reflection(const Labels& w, int i) const {
  Labels out = w;
  long wi = w[i];
  for (int j = 0; j < alg_.rank; ++j) out[j] -= wi * cartan_[i][j];
  return out;
}

Labels RootData::dominantize(Labels w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < alg_.rank; ++i) {
      if (w[i] < 0) {
        w = simple_reflection(w, i);
        changed = true;
      }
    }
  }
  return w;
}

Labels adjoint_highest_weight(AlgebraId alg) {
  int r = alg.rank;
  Labels w(static_cast<size_t>(r), 0);
  switch (alg.family) {
    case Family::A:
      if (r == 1) w[0] = 2;
      else { w[0] = 1; w[r - 1] = 1; }
      break;
    case Family::B:
      if (r == 2) w[1] = 2;
      else w[1] = 1;
      break;
    case Family::C:
      w[0] = 2;
      break;
    case Family::D:
      w[1] = 1;
      break;
  }
  return w;
}

Labels dual_highest_weight(AlgebraId alg, const Labels& w) {
  Labels out = w;
  switch (alg.family) {
    case Family::A:
      std::reverse(out.begin(), out.end());
      break;
    case Family::B:
    case Family::C:
      break;
    case Family::D:
      if (alg.rank % 2 == 1) std::swap(out[alg.rank - 2], out[alg.rank - 1]);
      break;
  }
  return out;
}

std::string labels_str(const Labels& w) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << "]";
  return os.str();
}

}  // namespace kmat
