#include <cmath>

#include "doctest.h"
#include "kmat/cli.hpp"
#include "kmat/errors.hpp"
#include "kmat/kgraph.hpp"
#include "kmat/oracle.hpp"

using namespace kmat;

namespace {

const double kPi = 3.14159265358979323846;

std::vector<std::string> rank4_pairs() {
  std::vector<std::string> out;
  for (const auto& pair : catalog(4))
    if (pair.g_classical.n <= 9) out.push_back(pair.name);
  return out;
}

}  // namespace

TEST_CASE("realizations satisfy closure, antisymmetry, scalar Casimir") {
  for (const auto& name : rank4_pairs()) {
    auto pair = parse_pair(name);
    auto r = build_realization(pair);
    CAPTURE(name);
    CHECK(r.dim_g() == group_dim(pair.g_classical));
    CHECK(r.dim_h == pair.dim_h());
    auto checks = verify_realization(r);
    CHECK(checks.closure < 1e-12);
    CHECK(checks.antisymmetry < 1e-12);
    CHECK(checks.casimir_scatter < 1e-12);
  }
}

TEST_CASE("small realizations: frozen shapes") {
  auto su2 = build_realization(parse_pair("AIII:su2|m1"));
  CHECK(su2.dim_g() == 3);
  CHECK(su2.dim_h == 1);

  auto su3 = build_realization(parse_pair("AI:su3"));
  CHECK(su3.dim_g() == 8);
  CHECK(su3.dim_h == 3);  // antisymmetric generators
  CHECK(su3.dim_k() == 5);

  auto so5 = build_realization(parse_pair("BDI:so5|so1xso4"));
  CHECK(so5.dim_g() == 10);
  CHECK(so5.dim_h == 6);
}

TEST_CASE("structure-constant sparsity holds for symmetric pairs only") {
  for (const auto& name : rank4_pairs()) {
    auto r = build_realization(parse_pair(name));
    auto rep = check_structure_sparsity(r);
    CAPTURE(name);
    CHECK(rep.pass);
    CHECK(rep.max_violation < 1e-12);
  }
  auto control = non_symmetric_control();
  auto rep = check_structure_sparsity(control);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_violation > 1e-3);
}

TEST_CASE("sparsity is vacuous when k is empty") {
  auto r = build_algebra_realization({Series::SU, 3});
  CHECK(r.dim_k() == 0);
  CHECK(check_structure_sparsity(r).pass);
}

TEST_CASE("Serre identity: both sides vanish on evaluation representations") {
  for (const auto& gname : {ClassicalName{Series::SU, 3},
                            ClassicalName{Series::SO, 5},
                            ClassicalName{Series::SU, 4},
                            ClassicalName{Series::SP, 4}}) {
    auto r = build_algebra_realization(gname);
    for (const auto& th : std::vector<double>{0.0, 0.37, 0.7, -0.5, 1.2}) {
      auto rep = check_serre(r, th);
      CAPTURE(gname.str());
      CAPTURE(th);
      CHECK(rep.lhs_norm < 1e-10);
      CHECK(rep.rhs_norm < 1e-10);
    }
  }
}

TEST_CASE("Serre left side is exactly zero at theta = 0") {
  auto r = build_algebra_realization({Series::SU, 3});
  auto rep = check_serre(r, 0.0);
  CHECK(rep.lhs_norm == 0.0);
}

TEST_CASE("coproduct homomorphism on two evaluation parameters") {
  auto su2 = build_algebra_realization({Series::SU, 2});
  CHECK(check_coproduct_hom(su2, 0.0, 0.0) < 1e-12);
  auto su3 = build_algebra_realization({Series::SU, 3});
  CHECK(check_coproduct_hom(su3, 0.7, -0.2) < 1e-10);
  auto so5 = build_algebra_realization({Series::SO, 5});
  CHECK(check_coproduct_hom(so5, 1.0, 2.0) < 1e-10);
}

TEST_CASE("coideal property for symmetric pairs, failure for the control") {
  std::vector<std::pair<double, double>> samples{
      {0.0, 0.0}, {0.7, -0.2}, {0.5, 1.3}, {1.0, 2.0}, {0.3, 0.3}};
  for (const auto& name :
       {"AI:su3", "AII:su4", "BDI:so5|so1xso4", "AIII:su4|m2"}) {
    auto r = build_realization(parse_pair(name));
    for (auto [th, ph] : samples) {
      auto rep = check_coideal(r, th, ph);
      CAPTURE(name);
      CHECK(rep.identity_residual < 1e-10);
      CHECK(rep.subspace_residual < 1e-10);
    }
  }
  auto control = non_symmetric_control();
  double worst = 0;
  for (auto [th, ph] : samples) {
    auto rep = check_coideal(control, th, ph);
    worst = std::max(worst, rep.subspace_residual);
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("intertwiner: h-irreducible multiplet gives a scalar matrix") {
  auto r = build_algebra_realization({Series::SU, 3});
  auto res = solve_boundary_intertwiner(r, 0.3);
  CHECK(res.nullity == 1);
  REQUIRE(res.eigenvalues.size() == 1);
  CHECK(res.eigenvalues[0].second == 3);
}

TEST_CASE("intertwiner: (su(2), u(1)) doublet is diag(1, -1) up to scale") {
  auto r = build_realization(parse_pair("AIII:su2|m1"));
  auto res = solve_boundary_intertwiner(r, 0.3);
  REQUIRE(res.eigenvalues.size() == 2);
  cd ratio = res.eigenvalues[0].first / res.eigenvalues[1].first;
  CHECK(std::abs(ratio - cd(-1, 0)) < 1e-8);
}

TEST_CASE("intertwiner: so(5)/so(4) ratio matches the [3] bracket") {
  auto r = build_realization(parse_pair("BDI:so5|so1xso4"));
  double th = 0.8;
  auto res = solve_boundary_intertwiner(r, th);
  REQUIRE(res.eigenvalues.size() == 2);
  // scalar eigenvalue (multiplicity 1), K eigenvalue (multiplicity 4)
  cd scalar_ev, k_ev;
  for (const auto& [val, mult] : res.eigenvalues)
    (mult == 1 ? scalar_ev : k_ev) = val;
  cd x(0, kPi / 2);
  cd expected = (x + th) / (x - th);
  CHECK(std::abs(scalar_ev / k_ev - expected) < 1e-8);
}

TEST_CASE("oracle eigenvalue ratios agree with the symbolic brackets") {
  auto thetas = default_theta_samples();
  for (const auto& name : {"BDI:so5|so1xso4", "BDI:so7|so1xso6",
                           "AIII:su2|m1", "AIII:su4|m1"}) {
    auto cmp = compare_intertwiner_with_symbolic(parse_pair(name), thetas);
    CAPTURE(name);
    CAPTURE(cmp.message);
    CHECK(cmp.pass);
    CHECK(cmp.max_rel_err < 1e-8);
  }
}

TEST_CASE("trace of the adjoint Casimir action reproduces the c_i") {
  for (const auto& name : rank4_pairs()) {
    auto pair = parse_pair(name);
    auto r = build_realization(pair);
    auto traced = trace_scaling_factors(r, pair);
    auto exact = scaling_factors(pair);
    CAPTURE(name);
    CHECK(traced.rationalized);
    REQUIRE(traced.c.size() == exact.size());
    for (size_t i = 0; i < exact.size(); ++i) CHECK(traced.c[i] == exact[i]);
  }
}

TEST_CASE("trace scaling factors: frozen examples") {
  auto check_one = [](const std::string& name, const std::vector<Rat>& want) {
    auto pair = parse_pair(name);
    auto got = trace_scaling_factors(build_realization(pair), pair);
    REQUIRE(got.c.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(got.c[i] == want[i]);
  };
  check_one("AI:su3", {rat(1, 4)});
  check_one("BDI:so5|so1xso4", {Rat(1), Rat(1)});
  check_one("AIII:su2|m1", {rat(1, 2)});
}

TEST_CASE("determinism: rebuilding gives identical structure constants") {
  auto a = build_realization(parse_pair("AII:su4"));
  auto b = build_realization(parse_pair("AII:su4"));
  REQUIRE(a.dim_g() == b.dim_g());
  for (int i = 0; i < a.dim_g(); ++i)
    for (int j = 0; j < a.dim_g(); ++j)
      for (int k = 0; k < a.dim_g(); ++k)
        CHECK(a.f[i][j][k] == b.f[i][j][k]);
}

TEST_CASE("evaluation representation: q1 is an exact multiple of q0") {
  auto r = build_algebra_realization({Series::SO, 5});
  EvaluationRep ev{r, cd(0.7, 0.2)};
  for (int a = 0; a < r.dim_g(); ++a)
    CHECK((ev.q1(a) - ev.scale() * ev.q0(a)).norm() == 0.0);
}

TEST_CASE("conjugating cases have no direct intertwiner") {
  // Where the symbolic side rejects (non-self-conjugate multiplet with
  // self-conjugate branching), the numeric system is solvable only by the
  // conjugated ansatz, so the direct one must come up empty.
  auto pair = parse_pair("AI:su3");
  CHECK_THROWS_AS(build_graph(pair, rep_by_name(pair, "defining")),
                  conjugating_k_error);
  auto r = build_realization(pair);
  CHECK_THROWS_AS(solve_boundary_intertwiner(r, 0.3), degenerate_solution);
}

TEST_CASE("oracle agreement across every solvable rank <= 4 pair") {
  auto thetas = default_theta_samples();
  int compared = 0, rejected = 0;
  for (const auto& pair : catalog(4)) {
    if (pair.g_classical.n > 9) continue;
    try {
      auto cmp = compare_intertwiner_with_symbolic(pair, thetas);
      CAPTURE(pair.name);
      CAPTURE(cmp.message);
      CHECK(cmp.pass);
      ++compared;
    } catch (const conjugating_k_error&) {
      ++rejected;  // AI / AII defining multiplets reflect onto conjugates
    } catch (const multiplicity_error&) {
      ++rejected;
    }
  }
  CHECK(compared >= 30);
  CHECK(rejected >= 4);
}
