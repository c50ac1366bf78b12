#include "kmat/spectra.hpp"

#include <cmath>

#include "kmat/errors.hpp"

namespace kmat {

GrassmannianFamily GrassmannianFamily::make(Series s, long N, long M) {
  if (N < 1 || M < 1) throw invalid_input("Grassmannian needs N, M >= 1");
  if (2 * M > N) throw invalid_input("Grassmannian needs M <= N/2");
  if (s == Series::SP && (N % 2 != 0 || M % 2 != 0))
    throw invalid_input("Sp Grassmannian needs N and M even");
  if (s == Series::SO && N - 2 < 1)
    throw invalid_input("SO Grassmannian needs N >= 3");
  return {s, N, M};
}

std::string GrassmannianFamily::str() const {
  switch (series) {
    case Series::SU:
      return "SU(" + std::to_string(N) + ")/S(U(" + std::to_string(M) +
             ")xU(" + std::to_string(N - M) + "))";
    case Series::SO:
      return "SO(" + std::to_string(N) + ")/SO(" + std::to_string(M) +
             ")xSO(" + std::to_string(N - M) + ")";
    case Series::SP:
      return "Sp(" + std::to_string(N) + ")/Sp(" + std::to_string(M) +
             ")xSp(" + std::to_string(N - M) + ")";
  }
  return "?";
}

std::pair<long, long> ph_parameters(const GrassmannianFamily& fam) {
  switch (fam.series) {
    case Series::SU: return {fam.M + 1, fam.N};
    case Series::SO: return {fam.M, fam.N - 2};
    case Series::SP: return {fam.M + 2, fam.N + 2};
  }
  return {0, 0};
}

MassTable mass_spectrum(const GrassmannianFamily& fam) {
  auto [p, h] = ph_parameters(fam);
  MassTable t;
  t.p = p;
  t.h = h;
  if (p <= 1) {
    t.note = "no boundary states: p <= 1";
    return t;
  }
  const double pi = 3.14159265358979323846;
  for (long a = 1; a <= p - 1; ++a) {
    double r = std::sin(a * pi / h) * std::sin((p - a) * pi / h);
    t.masses.push_back({a, p, h, r});
  }
  return t;
}

Rat casimir_ratio_limit(Series series, long M, long a) {
  long p = 0;
  switch (series) {
    case Series::SU: p = M + 1; break;
    case Series::SO: p = M; break;
    case Series::SP: p = M + 2; break;
  }
  if (a < 1 || a > p - 1) throw invalid_input("mass label a out of range");
  return rat(a * (p - a), p - 1);
}

std::vector<LimitSample> casimir_limit_check(Series series, long M, long a,
                                             const std::vector<long>& Ns) {
  double limit = to_double(casimir_ratio_limit(series, M, a));
  std::vector<LimitSample> out;
  for (long N : Ns) {
    auto fam = GrassmannianFamily::make(series, N, M);
    MassTable t = mass_spectrum(fam);
    if (a < 1 || a > t.p - 1) throw invalid_input("mass label a out of range");
    double ratio = t.masses[a - 1].ratio / t.masses[0].ratio;
    out.push_back({N, ratio, std::abs(ratio - limit)});
  }
  return out;
}

}  // namespace kmat
