#include <set>

#include "doctest.h"
#include "kmat/errors.hpp"
#include "kmat/sympair.hpp"

using namespace kmat;

TEST_CASE("catalog smallest entries") {
  auto c1 = catalog(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].name == "AIII:su2|m1");  // (su(2), u(1))
  CHECK(c1[0].h_factors.empty());
  CHECK(c1[0].has_abelian);
  CHECK(c1[0].dim_k == 2);

  auto c2 = catalog(2);
  std::set<std::string> names;
  for (const auto& p : c2) names.insert(p.name);
  CHECK(names.count("AI:su3"));
  CHECK(names.count("BDI:so5|so1xso4"));
}

TEST_CASE("catalog pairs satisfy the dimension identity") {
  for (const auto& p : catalog(8)) {
    long dh = p.dim_h();
    CHECK(group_dim(p.g_classical) == dh + p.dim_k);
    CHECK(p.k_rep.dim() == p.dim_k);
    CHECK(p.g.rank <= 8);
  }
}

TEST_CASE("catalog size covers the classical families up to rank 8") {
  CHECK(catalog(8).size() >= 60);
}

TEST_CASE("catalog rejects unsupported ranks") {
  CHECK_THROWS_AS(catalog(9), invalid_input);
  CHECK_THROWS_AS(catalog(0), invalid_input);
}

TEST_CASE("pair parsing round and errors") {
  CHECK(parse_pair("BDI:so7|so3xso4").name == "BDI:so7|so3xso4");
  CHECK(parse_pair("BDI:so7|so4xso3").name == "BDI:so7|so3xso4");
  CHECK(parse_pair("BDI:so7|m3").name == "BDI:so7|so3xso4");
  CHECK(parse_pair("AIII:su5|m2").split_m == 2);
  CHECK(parse_pair("DIII:so8").g == AlgebraId::make(Family::D, 4));
  CHECK(parse_pair("BDI:so6|so1xso5").g == AlgebraId::make(Family::A, 3));
  CHECK_THROWS_AS(parse_pair("XX:su3"), invalid_input);
  CHECK_THROWS_AS(parse_pair("AI:su20"), invalid_input);
  CHECK_THROWS_AS(parse_pair("AIII:su4|m3"), invalid_input);
  CHECK_THROWS_AS(parse_pair("BDI:so7|so2xso4"), invalid_input);
  CHECK_THROWS_AS(parse_pair("AI:su2"), invalid_input);  // use AIII:su2|m1
}

TEST_CASE("scaling factors: frozen examples") {
  // su(3)/so(3): c = c_A / (C2(adj so3) + (dim k/dim h) C2(k))
  //            = 6 / (4 + (5/3) * 12) = 1/4
  auto ai = parse_pair("AI:su3");
  auto c_ai = scaling_factors(ai);
  REQUIRE(c_ai.size() == 1);
  CHECK(c_ai[0] == rat(1, 4));

  // so(5)/so(4): each su(2) factor sees two doublets, c_i = 1.
  auto bdi = parse_pair("BDI:so5|so1xso4");
  auto c_bdi = scaling_factors(bdi);
  REQUIRE(c_bdi.size() == 2);
  CHECK(c_bdi[0] == 1);
  CHECK(c_bdi[1] == 1);

  // (su(2), u(1)): k has charge 2, c_0 = 4 / (2 * 4) = 1/2.
  auto aiii = parse_pair("AIII:su2|m1");
  CHECK(aiii.k_rep.charge == 2);
  auto c_u1 = scaling_factors(aiii);
  REQUIRE(c_u1.size() == 1);
  CHECK(c_u1[0] == rat(1, 2));
}

TEST_CASE("Casimir on nodes: frozen examples") {
  auto bdi = parse_pair("BDI:so5|so1xso4");
  auto scalar = make_node(bdi,
                          {Irrep::trivial(bdi.h_factors[0]),
                           Irrep::trivial(bdi.h_factors[1])},
                          Rat(0));
  CHECK(scalar.casimir == 0);

  auto k = k_node(bdi);
  CHECK(k.casimir == 3);
  CHECK(k.casimir == bdi.c_adjoint() / 2);

  auto aiii = parse_pair("AIII:su2|m1");
  auto plus = make_node(aiii, {}, Rat(1));
  CHECK(plus.casimir == rat(1, 2));
  auto minus = make_node(aiii, {}, Rat(-1));
  CHECK(minus.casimir == rat(1, 2));
}

TEST_CASE("symmetric space sum is exactly 1/2 on the whole catalog") {
  for (const auto& p : catalog(8)) {
    CHECK(sst_check(p) == rat(1, 2));
    // Equivalent statement through the node Casimir: C(K) = c_A / 2.
    CHECK(k_node(p).casimir == p.c_adjoint() / 2);
  }
}

TEST_CASE("negative controls violate the symmetric space identity") {
  auto controls = negative_controls();
  REQUIRE(controls.size() == 2);
  CHECK(sst_check(controls[0]) == rat(2, 5));   // g2 in so(7)
  CHECK(sst_check(controls[1]) == rat(1, 3));   // su(3) adjoint in so(8)
  for (const auto& c : controls) CHECK(sst_check(c) != rat(1, 2));
}

TEST_CASE("unequal k-component Casimirs make the formula inapplicable") {
  // su(2) block inside su(3): k = two doublets + a singlet.
  SubalgebraDatum d;
  d.name = "control:su3-su2block";
  d.factors = {{Rat(3), Rat(4), {rat(3, 2), rat(3, 2), Rat(0)}}};
  d.dim_k = 5;
  CHECK_THROWS_AS(sst_check(d), formula_inapplicable);
}

TEST_CASE("scale invariance of the weighted Casimir sum") {
  // Rescaling the metric of any h_i multiplies both Casimirs by the same
  // factor; the sum is unchanged.
  for (const auto& name : {"AI:su4", "BDI:so7|so3xso4", "CII:sp6|m1"}) {
    auto pair = parse_pair(name);
    auto datum = datum_from_pair(pair);
    Rat base = sst_check(datum);
    for (auto& f : datum.factors) {
      Rat lambda = rat(3, 7);
      f.c2_adjoint *= lambda;
      for (auto& c : f.c2_k_components) c *= lambda;
    }
    CHECK(sst_check(datum) == base);
  }
}

TEST_CASE("rescaling the metric of g moves all node Casimirs together") {
  // c_A and C(W) both scale by 1/lambda, so delta / c_A is invariant.
  auto pair = parse_pair("BDI:so5|so1xso4");
  Rat c_a = pair.c_adjoint();
  auto k = k_node(pair);
  Rat lambda = rat(5, 3);
  // Casimir values in the rescaled metric:
  Rat c_a_scaled = c_a / lambda;
  Rat ck_scaled = k.casimir / lambda;
  CHECK(ck_scaled / c_a_scaled == k.casimir / c_a);
}

TEST_CASE("abelian charge rescaling leaves node Casimirs unchanged") {
  auto pair = parse_pair("AIII:su4|m1");
  REQUIRE(pair.has_abelian);
  auto c = scaling_factors(pair);
  Rat c0 = c.back();
  Rat q(3);  // a node charge
  // Under q -> lambda q, the abelian factor c_0 -> c_0 / lambda^2.
  Rat lambda = rat(7, 2);
  Rat q_k = pair.k_rep.charge;
  Rat c0_scaled = pair.c_adjoint() / (Rat(pair.dim_k) * (lambda * q_k) * (lambda * q_k));
  CHECK(c0_scaled * (lambda * q) * (lambda * q) == c0 * q * q);
}

TEST_CASE("class metadata") {
  CHECK(parse_pair("AII:su6").h_factors ==
        std::vector<AlgebraId>{AlgebraId::make(Family::C, 3)});
  auto so8 = parse_pair("BDI:so8|so4xso4");
  CHECK(so8.h_factors.size() == 4);  // two so(4) blocks, four su(2) ideals
  auto diii = parse_pair("DIII:so8");
  CHECK(diii.h_factors.size() == 1);
  CHECK(diii.has_abelian);
  CHECK(diii.dim_k == 12);
}
