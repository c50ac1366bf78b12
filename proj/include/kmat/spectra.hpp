#pragma once

#include <string>
#include <vector>

#include "kmat/coords.hpp"
#include "kmat/rat.hpp"

namespace kmat {

/// Grassmannian coset family: SU(N)/S(U(M)xU(N-M)), SO(N)/SO(M)xSO(N-M),
/// Sp(N)/Sp(M)xSp(N-M) with M <= N/2 (N, M even for Sp).
struct GrassmannianFamily {
  Series series;
  long N;
  long M;

  static GrassmannianFamily make(Series s, long N, long M);
  std::string str() const;
};

/// (p, h) parameters of the boundary mass rule: SU -> (M+1, N),
/// SO -> (M, N-2), Sp -> (M+2, N+2).
std::pair<long, long> ph_parameters(const GrassmannianFamily& fam);

/// m_a / m = sin(a*pi/h) * sin((p-a)*pi/h), kept as the exact (a, p, h)
/// triple plus its double value.
struct MassEntry {
  long a;
  long p, h;
  double ratio;  // m_a / m
};

struct MassTable {
  long p = 0, h = 0;
  std::vector<MassEntry> masses;  // a = 1 .. p-1
  std::string note;               // set when the table is empty
};

MassTable mass_spectrum(const GrassmannianFamily& fam);

/// Exact large-N limit of m_a/m_1: a(p-a)/(p-1) with p = M+1, M, M+2 for
/// SU, SO, Sp. These equal the a-th fundamental Casimir ratios of gl(M),
/// so(M), sp(M) in the orthogonal-basis normalization a(M+1-a), a(M-a),
/// a(M+2-a).
Rat casimir_ratio_limit(Series series, long M, long a);

struct LimitSample {
  long N;
  double mass_ratio;  // m_a / m_1 at this N
  double deviation;   // |mass_ratio - limit|
};

/// Deviation of m_a/m_1 from the Casimir ratio along increasing N; the
/// sequence falls off as 1/N^2.
std::vector<LimitSample> casimir_limit_check(Series series, long M, long a,
                                             const std::vector<long>& Ns);

}  // namespace kmat
