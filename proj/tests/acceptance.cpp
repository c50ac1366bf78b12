// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include "kmat/cli.hpp"
#include "kmat/emit.hpp"
#include "kmat/errors.hpp"
#include "kmat/kgraph.hpp"
#include "kmat/oracle.hpp"
#include "kmat/spectra.hpp"

using namespace kmat;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& what,
            const std::string& detail = "") {
  if (!pass) ++failures;
  std::cout << "CRITERION " << number << ": " << (pass ? "PASS" : "FAIL")
            << " - " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void criterion_1_sst() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream detail;
  int count = 0;
  for (const auto& pair : catalog(8)) {
    ++count;
    if (sst_check(pair) != rat(1, 2)) {
      pass = false;
      detail << pair.name << " != 1/2; ";
    }
  }
  auto controls = negative_controls();
  if (controls.size() != 2) pass = false;
  for (const auto& c : controls)
    if (sst_check(c) == rat(1, 2)) {
      pass = false;
      detail << c.name << " spuriously 1/2; ";
    }
  double dt = seconds_since(t0);
  if (count < 60) {
    pass = false;
    detail << "only " << count << " pairs; ";
  }
  if (dt >= 10.0) {
    pass = false;
    detail << "too slow; ";
  }
  detail << count << " pairs + 2 controls in " << dt << " s";
  report(1, pass, "symmetric space theorem: sum = 1/2 across the catalog",
         detail.str());
}

void criterion_2_sparsity() {
  bool pass = true;
  std::ostringstream detail;
  int count = 0;
  for (const auto& pair : catalog(4)) {
    auto rep = check_structure_sparsity(build_realization(pair));
    ++count;
    if (!rep.pass) {
      pass = false;
      detail << pair.name << " violates by " << rep.max_violation << "; ";
    }
  }
  auto control = check_structure_sparsity(non_symmetric_control());
  if (control.pass) {
    pass = false;
    detail << "control passed spuriously; ";
  }
  detail << count << " realizations, control violation "
         << control.max_violation;
  report(2, pass, "structure-constant sparsity (f^{pqr} = f^{ijp} = 0)",
         detail.str());
}

void criterion_3_serre() {
  bool pass = true;
  double worst = 0;
  for (const auto& g :
       {ClassicalName{Series::SU, 3}, ClassicalName{Series::SO, 5}}) {
    auto r = build_algebra_realization(g);
    for (double th : {0.0, 0.37, 0.7, -0.5, 1.2}) {
      auto rep = check_serre(r, th);
      worst = std::max({worst, rep.lhs_norm, rep.rhs_norm});
    }
  }
  pass = worst < 1e-10;
  std::ostringstream detail;
  detail << "max side norm " << worst;
  report(3, pass, "Serre identity on su(3)/so(5) evaluation representations",
         detail.str());
}

void criterion_4_coideal() {
  bool pass = true;
  double worst = 0;
  std::vector<std::pair<double, double>> samples{
      {0.0, 0.0}, {0.7, -0.2}, {0.5, 1.3}, {1.0, 2.0}, {0.3, 0.3}};
  for (const auto& name :
       {"AI:su3", "AII:su4", "BDI:so5|so1xso4", "AIII:su4|m2"}) {
    auto r = build_realization(parse_pair(name));
    for (auto [th, ph] : samples) {
      auto rep = check_coideal(r, th, ph);
      worst = std::max({worst, rep.identity_residual, rep.subspace_residual});
    }
  }
  if (worst >= 1e-10) pass = false;
  double control_worst = 0;
  auto control = non_symmetric_control();
  for (auto [th, ph] : samples)
    control_worst =
        std::max(control_worst, check_coideal(control, th, ph).subspace_residual);
  if (control_worst <= 1e-3) pass = false;
  std::ostringstream detail;
  detail << "max residual " << worst << ", control subspace residual "
         << control_worst;
  report(4, pass, "coideal property on four pairs + control failure",
         detail.str());
}

void criterion_5_oracle() {
  bool pass = true;
  double worst = 0;
  std::ostringstream detail;
  for (const auto& name : {"BDI:so5|so1xso4", "BDI:so7|so1xso6",
                           "AIII:su2|m1", "AIII:su4|m1"}) {
    auto cmp =
        compare_intertwiner_with_symbolic(parse_pair(name),
                                          default_theta_samples());
    worst = std::max(worst, cmp.max_rel_err);
    if (!cmp.pass) {
      pass = false;
      detail << name << ": " << cmp.message << "; ";
    }
  }
  detail << "max relative error " << worst;
  report(5, pass, "numeric intertwiner matches symbolic tau ratios",
         detail.str());
}

void criterion_6_crossing() {
  bool pass = true;
  std::ostringstream detail;
  for (int n = 5; n <= 8; ++n) {
    auto pair = parse_pair("BDI:so" + std::to_string(n) + "|so1xso" +
                           std::to_string(n - 1));
    auto rep = crossing_unitarity_check(pair, rep_by_name(pair, "vector"));
    if (!rep.applicable || !rep.pass || rep.pole_im_pi != rat(1, 2) ||
        rep.delta != pair.c_adjoint() / 2) {
      pass = false;
      detail << pair.name << " fails; ";
    }
  }
  detail << "scalar<->K bracket [c_A/2], pole at i*pi/2 for n = 5..8";
  report(6, pass, "crossing-unitarity pole on the sphere series",
         detail.str());
}

void criterion_7_trace_scaling() {
  bool pass = true;
  std::ostringstream detail;
  int count = 0;
  for (const auto& pair : catalog(4)) {
    auto traced = trace_scaling_factors(build_realization(pair), pair);
    auto exact = scaling_factors(pair);
    ++count;
    bool ok = traced.rationalized && traced.c.size() == exact.size();
    if (ok)
      for (size_t i = 0; i < exact.size(); ++i)
        if (traced.c[i] != exact[i]) ok = false;
    if (!ok) {
      pass = false;
      detail << pair.name << " mismatch; ";
    }
  }
  detail << count << " pairs";
  report(7, pass, "trace-of-adjoint scaling factors equal the formula",
         detail.str());
}

void criterion_8_grassmannian() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream detail;
  double worst_dev = 0;
  for (auto series : {Series::SU, Series::SO, Series::SP}) {
    for (long M : {2L, 3L, 4L}) {
      if (series == Series::SP && M % 2 != 0) continue;  // parity-adjusted
      long p = series == Series::SU ? M + 1 : series == Series::SO ? M : M + 2;
      for (long a = 1; a <= p - 1; ++a) {
        auto rows = casimir_limit_check(series, M, a, {1000, 10000});
        worst_dev = std::max(worst_dev, rows[1].deviation);
        if (rows[1].deviation >= 1e-5) pass = false;
        if (rows[1].deviation > 1e-14) {
          double shrink = rows[0].deviation / rows[1].deviation;
          if (shrink < 80.0 || shrink > 120.0) {
            pass = false;
            detail << "shrink " << shrink << " out of range; ";
          }
        }
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) {
    pass = false;
    detail << "too slow; ";
  }
  detail << "max deviation at N=10^4: " << worst_dev << ", " << dt << " s";
  report(8, pass, "Grassmannian mass ratios approach the Casimir ratios",
         detail.str());
}

void criterion_9_unitarity() {
  bool pass = true;
  int emitted = 0, rejected = 0;
  std::ostringstream detail;
  for (const auto& pair : catalog(4)) {
    for (int i = 1; i <= pair.g.rank; ++i) {
      Labels w(static_cast<size_t>(pair.g.rank), 0);
      w[i - 1] = 1;
      try {
        auto spec = k_matrix_spectral(pair, Irrep::make(pair.g, w));
        for (const auto& t : spec.tau)
          if (!(t * t.at_minus_theta()).is_one()) {
            pass = false;
            detail << pair.name << " tau not unitary; ";
          }
        ++emitted;
      } catch (const multiplicity_error&) {
        ++rejected;
      } catch (const conjugating_k_error&) {
        ++rejected;
      }
    }
  }
  detail << emitted << " spectra checked, " << rejected
         << " rejected by contract";
  report(9, pass, "boundary unitarity of every emitted tau ratio",
         detail.str());
}

}  // namespace

int main() {
  try {
    criterion_1_sst();
    criterion_2_sparsity();
    criterion_3_serre();
    criterion_4_coideal();
    criterion_5_oracle();
    criterion_6_crossing();
    criterion_7_trace_scaling();
    criterion_8_grassmannian();
    criterion_9_unitarity();
  } catch (const std::exception& e) {
    std::cout << "unexpected exception: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
