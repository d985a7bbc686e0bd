#include "doctest.h"

#include <set>

#include "knot/cohom.hpp"
#include "knot/groupzoo.hpp"

using namespace knot;

TEST_CASE("section-2 generator formulas") {
  // z_0 shifts the j coordinate on column i = 0 only (points i + 3j)
  Perm z0 = gen_z(0, 3);
  CHECK(z0(0) == 3);
  CHECK(z0(3) == 6);
  CHECK(z0(6) == 0);
  CHECK(z0(1) == 1);
  CHECK(z0(5) == 5);

  CHECK(pow(gen_tau(3), 3) == gen_rho1(3));
  CHECK(gen_beta_bar(1, 3) == Perm::identity(9));
  CHECK(gen_beta_tilde(1, 5) == Perm::identity(25));

  CHECK(gen_delta(1, 3) == gen_rho1(3));
  CHECK(gen_delta(3, 3) == gen_z(1, 3));
  CHECK(gen_delta(5, 5) == gen_z(1, 5));
  CHECK(commutator(gen_delta(2, 3), gen_rho2(3)) == gen_delta(1, 3));

  CHECK_THROWS_AS(gen_z(3, 3), BadParameter);
  CHECK_THROWS_AS(gen_gamma(0, 3), BadParameter);
  CHECK_THROWS_AS(gen_gamma(4, 3), BadParameter);
  CHECK_THROWS_AS(gen_beta_bar(3, 3), BadParameter);
}

TEST_CASE("families") {
  std::uint64_t want = 3;  // p^{n+1}
  for (long long n = 1; n <= 3; ++n) {
    want *= 3;
    CHECK(build_P(n, 3).order() == want);
    CHECK(build_Pprime(n, 3).order() == want);
  }
  CHECK(build_P(3, 3).same_elements(build_Pprime(3, 3)));  // P_p = P'_p

  PermGroup e2 = build_E(2, 3);
  CHECK(e2.order() == 9);
  CHECK(is_abelian(e2));
  CHECK(exponent(e2) == 3);
  CHECK(build_E(0, 3).order() == 1);
  CHECK(is_subgroup(e2, build_H(2, 3)));

  // E_n maximal normal, [E_n, P'_n] = E_{n-1}
  for (long long n : {1ll, 2ll}) {
    PermGroup ppn = build_Pprime(n, 3);
    PermGroup en = build_E(n, 3);
    CHECK(is_normal(ppn, en));
    std::vector<Perm> coms;
    for (const Perm& a : en.elements())
      for (const Perm& b : ppn.elements()) coms.push_back(commutator(a, b));
    PermGroup bracket = PermGroup::close(coms, 9);
    CHECK(bracket.same_elements(build_E(n - 1, 3)));
  }

  // P'_n = E_n x| <rho_2>
  for (long long n : {1ll, 2ll, 3ll}) {
    PermGroup ppn = build_Pprime(n, 3);
    PermGroup en = build_E(n, 3);
    PermGroup r2 = PermGroup::close({gen_rho2(3)}, 9);
    CHECK(intersection(en, r2).order() == 1);
    CHECK(en.order() * r2.order() == ppn.order());
    std::set<Perm> prod;
    for (const Perm& e : en.elements())
      for (const Perm& r : r2.elements()) prod.insert(e * r);
    CHECK(prod.size() == ppn.order());
  }
}

TEST_CASE("pi_n surjection") {
  GroupHom pi2 = build_pi(2, 3);
  CHECK(pi2.is_surjective());
  CHECK(pi2.kernel().same_elements(build_E(1, 3)));

  GroupHom pi3 = build_pi(3, 3);
  CHECK(pi3.kernel().order() == 1);

  // preimage of H_2 is H~_2 = <delta_3> E_1
  PermGroup pre = pi2.preimage(build_H(2, 3));
  std::vector<Perm> gens{gen_delta(3, 3)};
  PermGroup e1 = build_E(1, 3);
  for (const Perm& x : e1.generators()) gens.push_back(x);
  PermGroup htilde = PermGroup::close(gens, 9);
  CHECK(pre.same_elements(htilde));

  // q_n rule on the deltas
  CHECK(pi2.apply(gen_delta(3, 3)) == gen_delta(2, 3));
  CHECK(pi2.apply(gen_delta(2, 3)) == gen_delta(1, 3));
  CHECK(pi2.apply(gen_delta(1, 3)).is_identity());

  // multiplicativity over every pair of source elements
  const PermGroup& src = pi2.source();
  for (const Perm& x : src.elements())
    for (const Perm& y : src.elements())
      CHECK(pi2.apply(x * y) == pi2.apply(x) * pi2.apply(y));
}

TEST_CASE("semidirect std") {
  SemidirectStd none = build_semidirect_std(3, {});
  CHECK(none.group.order() == 9);
  CHECK(none.stabilizer.order() == 1);

  SemidirectStd sl2 = build_semidirect_std(
      3, {MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3)});
  CHECK(sl2.group.order() == 216);
  CHECK(sl2.stabilizer.order() == 24);

  SemidirectStd neg = build_semidirect_std(3, {MatGL2::make(-1, 0, 0, -1, 3)});
  CHECK(neg.group.order() == 18);

  CHECK_THROWS_AS(MatGL2::make(1, 1, 2, 2, 3), BadParameter);
}

TEST_CASE("winter lift") {
  long long p = 3;
  MatGL2 id = MatGL2::make(1, 0, 0, 1, p);
  AutMap lid = winter_lift(p, id);
  for (std::size_t i = 0; i < lid.base->order(); ++i)
    CHECK(lid.images[i] == i);

  // -I sends every non-central x to x^{-1} times a central element, and
  // applying it twice gives the identity
  MatGL2 minus = MatGL2::make(-1, 0, 0, -1, p);
  AutMap lm = winter_lift(p, minus);
  CHECK(lm.fixes_center_pointwise());
  PermGroup z = center(*lm.base);
  for (const Perm& x : lm.base->elements()) {
    Perm y = lm.apply(x);
    CHECK(z.contains(y * x));  // y = x^{-1} z
  }
  AutMap twice = lm.then(lm);
  for (std::size_t i = 0; i < twice.images.size(); ++i)
    CHECK(twice.images[i] == i);

  // fixed-coset property: phi(T) fixes the class of rho_2, so the lift
  // fixes rho_2 itself
  MatGL2 t = MatGL2::make(1, 1, 0, 1, p);
  AutMap lt = winter_lift(p, t);
  CHECK(lt.apply(gen_rho2(p)) == gen_rho2(p));

  CHECK_THROWS_AS(winter_lift(p, MatGL2::make(-1, 0, 0, 1, p)), BadParameter);
}

TEST_CASE("winter lift is multiplicative on all of SL2(F3)") {
  long long p = 3;
  std::vector<MatGL2> sl2 = sl2_elements(p);
  REQUIRE(sl2.size() == 24);
  for (const MatGL2& g : sl2)
    for (const MatGL2& h : sl2) {
      AutMap lhs = winter_lift(p, g).then(winter_lift(p, h));
      AutMap rhs = winter_lift(p, g * h);
      CHECK(lhs.images == rhs.images);
    }
}

TEST_CASE("det obstruction: no center-fixing lift off SL2") {
  long long p = 3;
  for (const MatGL2& g : gl2_elements(p)) {
    CHECK(winter_liftable(p, g) == (g.det() == 1));
  }
}

TEST_CASE("heisenberg cover") {
  std::vector<MatGL2> sl2{MatGL2::make(1, 1, 0, 1, 3),
                          MatGL2::make(0, -1, 1, 0, 3)};
  CentralExtension ext = build_heisenberg_cover(3, sl2);
  CHECK(ext.total.order() == 648);
  CHECK(ext.kernel.order() == 3);
  CHECK(ext.flag == GrFlag::ProvedInPaper);
  CHECK(is_subgroup(center(ext.total), ext.kernel));
  CHECK(ext.projection.is_surjective());
  CHECK(ext.projection.kernel().same_elements(ext.kernel));

  // [delta_2-lift, rho_2-lift] is the delta_1-lift: a nontrivial kernel
  // element
  Perm com = commutator(ext.total.generators()[0], ext.total.generators()[1]);
  CHECK(ext.kernel.contains(com));
  CHECK(!com.is_identity());
  CHECK(ext.projection.apply(com).is_identity());

  // section composed with projection is the identity on G-dagger
  SemidirectStd base = build_semidirect_std(3, sl2);
  for (std::size_t i = 0; i < sl2.size(); ++i) {
    Perm lift_gen = ext.total.generators()[2 + i];
    CHECK(ext.projection.apply(lift_gen) == mat_to_perm(sl2[i]));
  }
}

TEST_CASE("heisenberg cover for proper subgroups") {
  // G-dagger = <-I>: order-54 cover over the order-18 base, oracle-verified
  CentralExtension ext =
      build_heisenberg_cover(3, {MatGL2::make(-1, 0, 0, -1, 3)});
  CHECK(ext.total.order() == 54);
  CHECK(ext.flag == GrFlag::Unverified);
  CHECK(verify_generalized_representation(ext));
  CHECK(ext.flag == GrFlag::OracleVerified);

  CHECK_THROWS_AS(build_heisenberg_cover(3, {MatGL2::make(-1, 0, 0, 1, 3)}),
                  BadParameter);
}
