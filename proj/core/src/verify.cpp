#include "knot/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "knot/glattice.hpp"
#include "knot/groupzoo.hpp"
#include "knot/knot.hpp"

namespace knot {

namespace {

std::string inv_str(const AbelianInvariants& inv) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < inv.factors.size(); ++i) {
    if (i) os << ",";
    os << inv.factors[i];
  }
  os << "]";
  return os.str();
}

std::string inv_str(const std::vector<std::uint64_t>& v) {
  AbelianInvariants inv;
  inv.factors = v;
  return inv_str(inv);
}

void check_inv(std::vector<CheckResult>& out, const std::string& name,
               const AbelianInvariants& got,
               const std::vector<std::uint64_t>& want) {
  out.push_back({name, inv_str(want), inv_str(got), got.factors == want});
}

void check_eq(std::vector<CheckResult>& out, const std::string& name,
              std::uint64_t got, std::uint64_t want) {
  out.push_back({name, std::to_string(want), std::to_string(got),
                 got == want});
}

void check_true(std::vector<CheckResult>& out, const std::string& name,
                bool got, const std::string& detail = "") {
  out.push_back({name, "true", got ? "true" : ("false " + detail), got});
}

// the seven subgroups of SL2(F3) from the p = 3 classification, by
// generating matrices
std::vector<std::pair<std::string, std::vector<MatGL2>>> star_subgroups_p3() {
  long long p = 3;
  return {
      {"trivial", {}},
      {"C2=<-I>", {MatGL2::make(-1, 0, 0, -1, p)}},
      {"C3=<T>", {MatGL2::make(1, 1, 0, 1, p)}},
      {"C4=<S>", {MatGL2::make(0, -1, 1, 0, p)}},
      {"C6", {MatGL2::make(-1, -1, 0, -1, p)}},
      {"Q8", {MatGL2::make(0, -1, 1, 0, p), MatGL2::make(-1, -1, -1, 1, p)}},
      {"SL2(F3)",
       {MatGL2::make(1, 1, 0, 1, p), MatGL2::make(0, -1, 1, 0, p)}},
  };
}

PermGroup regular_v4() {
  Perm a({1, 0, 3, 2}), b({2, 3, 0, 1});
  return PermGroup::close({a, b}, 4);
}

PermGroup trivial_subgroup(const PermGroup& g) {
  return PermGroup::close({Perm::identity(g.degree())}, g.degree());
}

std::vector<std::size_t> automorphism_from_mat(const PermGroup& n,
                                               const MatGL2& m) {
  // n = (C_p)^2 of translations on p^2 points; t_v -> t_{(av1+cv2, bv1+cv2)}
  long long p = m.p;
  std::vector<std::size_t> images(n.order());
  for (std::size_t i = 0; i < n.order(); ++i) {
    int img0 = n.element(i)(0);
    long long x = img0 % p, y = img0 / p;
    long long wx = ((m.a * x + m.c * y) % p + p) % p;
    long long wy = ((m.b * x + m.d * y) % p + p) % p;
    // the translation sending 0 to (wx, wy)
    Perm t = pow(gen_rho2(p), wx) * pow(gen_rho1(p), wy);
    images[i] = n.index_of(t);
  }
  return images;
}

}  // namespace

// -- criteria -----------------------------------------------------------------

static std::vector<CheckResult> criterion_star_classification(
    const CohOptions& opts) {
  std::vector<CheckResult> out;
  for (auto& [name, mats] : star_subgroups_p3()) {
    SemidirectStd sd = build_semidirect_std(3, mats);
    CohGroup sha = sha_omega(sd.group, sd.stabilizer, opts);
    check_inv(out, "sha_omega((C3)^2 x| " + name + ", order " +
                        std::to_string(sd.group.order()) + ")",
              sha.invariants, {3});
  }
  return out;
}

static std::vector<CheckResult> criterion_pgroup_dichotomy(
    const CohOptions& opts) {
  std::vector<CheckResult> out;
  long long p = 3;
  {
    PermGroup g = build_Pprime(1, p);
    check_inv(out, "sha_omega(P'1)", sha_omega(g, build_H(1, p), opts).invariants,
              {3});
  }
  {
    PermGroup g = build_Pprime(2, p);
    check_inv(out, "sha_omega(P'2)", sha_omega(g, build_H(2, p), opts).invariants,
              {3});
  }
  {
    PermGroup g = build_P(1, p);  // C9
    check_inv(out, "sha_omega(P1=C9)",
              sha_omega(g, build_H(1, p), opts).invariants, {});
  }
  {
    PermGroup g = build_P(2, p);
    check_inv(out, "sha_omega(P2)", sha_omega(g, build_H(2, p), opts).invariants,
              {});
  }
  {
    PermGroup g = build_P(3, p);  // = P'3, order 81
    check_inv(out, "sha_omega(P3=P'3)",
              sha_omega(g, build_H(3, p), opts).invariants, {});
  }
  return out;
}

static std::vector<CheckResult> criterion_decomposition_dependence(
    const CohOptions& opts) {
  std::vector<CheckResult> out;
  {
    PermGroup g = build_Pprime(1, 3);
    PermGroup h = build_H(1, 3);
    GLattice j = chevalley_lattice(g, h);
    DecompositionSet with_cp2 =
        DecompositionSet::admissible_closure(g, {g});
    check_inv(out, "sha2(P'1, D with (C3)^2)", sha2(j, with_cp2, opts).invariants,
              {});
    check_inv(out, "sha2(P'1, cyclic D)",
              sha2(j, DecompositionSet::all_cyclic(g), opts).invariants, {3});
  }
  {
    SemidirectStd sd = build_semidirect_std(
        3, {MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3)});
    PermGroup transl =
        PermGroup::close({gen_rho1(3), gen_rho2(3)}, 9);
    GLattice j = chevalley_lattice(sd.group, sd.stabilizer);
    DecompositionSet with_cp2 =
        DecompositionSet::admissible_closure(sd.group, {transl});
    check_inv(out, "sha2(order-216, D with (C3)^2)",
              sha2(j, with_cp2, opts).invariants, {});
    check_inv(out, "sha2(order-216, cyclic D)",
              sha2(j, DecompositionSet::all_cyclic(sd.group), opts).invariants,
              {3});
  }
  return out;
}

static std::vector<CheckResult> criterion_non_sl2(const CohOptions& opts) {
  std::vector<CheckResult> out;
  {
    SemidirectStd sd = build_semidirect_std(3, {MatGL2::make(-1, 0, 0, 1, 3)});
    check_inv(out, "sha_omega((C3)^2 x| <diag(-1,1)>, order 18)",
              sha_omega(sd.group, sd.stabilizer, opts).invariants, {});
  }
  {
    SemidirectStd sd = build_semidirect_std(
        3, {MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3),
            MatGL2::make(-1, 0, 0, 1, 3)});
    check_eq(out, "|(C3)^2 x| GL2(F3)|", sd.group.order(), 432);
    check_inv(out, "sha_omega((C3)^2 x| GL2(F3))",
              sha_omega(sd.group, sd.stabilizer, opts).invariants, {});
  }
  return out;
}

static std::vector<CheckResult> criterion_drakokhrust_p3(
    const CohOptions& opts) {
  std::vector<CheckResult> out;
  std::vector<MatGL2> sl2{MatGL2::make(1, 1, 0, 1, 3),
                          MatGL2::make(0, -1, 1, 0, 3)};
  CentralExtension ext = build_heisenberg_cover(3, sl2);
  check_eq(out, "|cover|", ext.total.order(), 648);
  check_eq(out, "|kernel|", ext.kernel.order(), 3);
  check_true(out, "kernel is central",
             is_subgroup(center(ext.total), ext.kernel) ||
                 is_subgroup(ext.kernel, center(ext.total)));
  SemidirectStd sd = build_semidirect_std(3, sl2);
  AbelianInvariants dr = drakokhrust_sha(ext, sd.stabilizer);
  check_inv(out, "drakokhrust(heisenberg cover p=3)", dr, {3});
  CohGroup direct = sha_omega(sd.group, sd.stabilizer, opts);
  check_true(out, "drakokhrust equals direct sha_omega",
             dr.factors == direct.invariants.factors,
             inv_str(dr) + " vs " + inv_str(direct.invariants));
  return out;
}

static std::vector<CheckResult> criterion_s2_values(const CohOptions&) {
  std::vector<CheckResult> out;
  long long p = 3;
  for (long long n = 1; n <= 3; ++n) {
    PermGroup pn = build_P(n, p);
    PermGroup en = build_E(n, p);
    PermGroup hn = build_H(n, p);
    PermGroup en1 = build_E(n - 1, p);
    S2Result s2 =
        s2_character(pn, hn, en, DecompositionSet::all_cyclic(pn));
    std::uint64_t oracle =
        en.order() / intersection(hn, en1).order();
    check_eq(out,
             "|S2_{H" + std::to_string(n) + "}(P" + std::to_string(n) +
                 ", Ind_{E" + std::to_string(n) + "} Z)| (prop 4.10)",
             s2.invariants.order(), oracle);
  }
  // prop 4.11 at p = 3: H~_n <= P_p, |S2| = |E_p / E_{p-n-1}|
  PermGroup pp = build_P(p, p);
  PermGroup ep = build_E(p, p);
  for (long long n = 1; n <= 2; ++n) {
    std::vector<Perm> gens;
    for (long long i = 0; i <= n - 2; ++i)
      gens.push_back(pow(gen_rho2(p), i) * gen_delta(p, p) *
                     pow(gen_rho2(p), -i));
    PermGroup epn = build_E(p - n, p);
    for (const Perm& x : epn.generators()) gens.push_back(x);
    PermGroup htn = PermGroup::close(gens, static_cast<int>(p * p));
    S2Result s2 =
        s2_character(pp, htn, ep, DecompositionSet::all_cyclic(pp));
    std::uint64_t oracle = ep.order() / build_E(p - n - 1, p).order();
    check_eq(out,
             "|S2_{H~" + std::to_string(n) + "}(P3, Ind_{E3} Z)| (prop 4.11)",
             s2.invariants.order(), oracle);
  }
  return out;
}

static std::vector<CheckResult> criterion_oracles(const CohOptions& opts) {
  std::vector<CheckResult> out;

  // lemma 2.5 identity suite at p in {3, 5}
  for (long long p : {3ll, 5ll}) {
    bool ok = true;
    std::string why;
    Perm id = Perm::identity(static_cast<int>(p * p));
    Perm r1 = gen_rho1(p), r2 = gen_rho2(p);
    if (!(pow(gen_tau(p), p) == r1)) { ok = false; why = "tau^p"; }
    if (!(gen_delta(1, p) == r1)) { ok = false; why = "delta1"; }
    if (!(gen_delta(p, p) == gen_z(1, p))) { ok = false; why = "delta_p"; }
    for (long long n = 1; n <= p && ok; ++n)
      for (long long n2 = 1; n2 <= p && ok; ++n2) {
        if (!(commutator(gen_z(n % p, p), gen_z(n2 % p, p)) == id)) ok = false;
        if (!(commutator(gen_z(n % p, p), gen_delta(n2, p)) == id)) ok = false;
        if (!(commutator(gen_delta(n, p), gen_delta(n2, p)) == id)) ok = false;
        if (!ok) why = "commuting z/delta";
      }
    for (long long n = 1; n <= p && ok; ++n) {
      Perm dn1 = n >= 2 ? gen_delta(n - 1, p) : id;
      if (!(commutator(gen_delta(n, p), r2) == dn1)) { ok = false; why = "[dn,r2]"; }
      for (long long i = 0; i < p && ok; ++i)
        if (!(commutator(gen_delta(n, p), gen_z(i, p) * r2) == dn1)) {
          ok = false;
          why = "[dn,zi r2]";
        }
      Perm prod = id;
      for (long long i = 0; i < p; ++i)
        prod = prod * (pow(r2, i) * gen_delta(n, p) * pow(r2, -i));
      if (!(prod == (n == p ? gen_delta(1, p) : id))) { ok = false; why = "product rule"; }
    }
    if (ok) {
      Perm d2 = gen_delta(2, p);
      if (!(d2 * r2 * d2.inverse() == r1.inverse() * r2)) { ok = false; why = "(v)"; }
    }
    for (long long b = 2; b < p && ok; ++b) {
      Perm bb = gen_beta_bar(b, p), bt = gen_beta_tilde(b, p);
      if (!(bb * r1 * bb.inverse() == r1)) ok = false;
      if (!(bb * r2 * bb.inverse() == pow(r2, b))) ok = false;
      if (!(bt * r1 * bt.inverse() == pow(r1, b))) ok = false;
      if (!(bt * r2 * bt.inverse() == r2)) ok = false;
      if (!ok) why = "(vi)";
    }
    check_true(out, "lemma 2.5 identities, p=" + std::to_string(p), ok, why);
  }

  // zoo of (G, H) pairs used by the sweeps below
  struct Pair {
    std::string name;
    PermGroup g, h;
  };
  std::vector<Pair> zoo;
  zoo.push_back({"C9", build_P(1, 3), build_H(1, 3)});
  zoo.push_back({"P'2", build_Pprime(2, 3), build_H(2, 3)});
  zoo.push_back({"P2", build_P(2, 3), build_H(2, 3)});
  {
    SemidirectStd sd = build_semidirect_std(3, {MatGL2::make(-1, 0, 0, -1, 3)});
    zoo.push_back({"order-18", sd.group, sd.stabilizer});
  }
  {
    SemidirectStd sd = build_semidirect_std(
        3, {MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3)});
    zoo.push_back({"order-216", sd.group, sd.stabilizer});
  }

  // tate vs coefficient reduction over all cyclic subgroups, M in {Z, Ind, J}
  for (const Pair& pr : zoo) {
    bool ok = true;
    std::string why;
    std::vector<std::pair<std::string, GLattice>> modules;
    modules.emplace_back("Z", trivial_lattice(pr.g));
    modules.emplace_back("Ind", induced_lattice(pr.g, pr.h));
    modules.emplace_back("J", chevalley_lattice(pr.g, pr.h));
    for (auto& [mname, m] : modules) {
      for (const PermGroup& c : cyclic_subgroups(pr.g)) {
        if (c.order() == 1) continue;
        AbelianInvariants tate = h2_cyclic_tate(c, m);
        GLattice mc = restrict_lattice(m, c);
        CohGroup h2 = h2_lattice(mc);
        if (!(tate == h2.invariants)) {
          ok = false;
          why = pr.name + "/" + mname + "/|C|=" + std::to_string(c.order()) +
                ": " + inv_str(tate) + " vs " + inv_str(h2.invariants);
          break;
        }
      }
      if (!ok) break;
    }
    check_true(out, "tate agreement (" + pr.name + ")", ok, why);
  }

  // annihilation (prop 3.8): invariants of sha_omega divide (G:H)
  for (const Pair& pr : zoo) {
    CohGroup sha = sha_omega(pr.g, pr.h, opts);
    std::uint64_t index = pr.g.order() / pr.h.order();
    bool ok = true;
    for (std::uint64_t d : sha.invariants.factors)
      if (index % d) ok = false;
    check_true(out, "annihilation by (G:H) (" + pr.name + ")", ok,
               inv_str(sha.invariants));
  }

  // prime-index vanishing (prop 3.13) over index-2,3,5 subgroups of the small
  // zoo groups
  {
    bool ok = true;
    std::string why;
    int count = 0;
    for (const Pair& pr : zoo) {
      if (pr.g.order() > 100) continue;
      for (const PermGroup& h : all_subgroups(pr.g)) {
        std::uint64_t index = pr.g.order() / h.order();
        if (index != 2 && index != 3 && index != 5) continue;
        CohGroup sha = sha_omega(pr.g, h, opts);
        ++count;
        if (!sha.invariants.trivial()) {
          ok = false;
          why = pr.name + " index " + std::to_string(index) + ": " +
                inv_str(sha.invariants);
          break;
        }
      }
      if (!ok) break;
    }
    check_true(out,
               "prime-index vanishing over " + std::to_string(count) +
                   " pairs (prop 3.13)",
               ok, why);
  }

  // |H^2(G, Ind_H^G Z)| = |H^ab| (lemma 3.3)
  for (const Pair& pr : zoo) {
    GLattice ind = induced_lattice(pr.g, pr.h);
    CohGroup h2 = h2_lattice(ind);
    std::uint64_t hab = pr.h.order() / derived_subgroup(pr.h).order();
    check_eq(out, "|H^2(G, Ind)| = |H^ab| (" + pr.name + ")", h2.order(), hab);
  }

  // shapiro for sha (lemma 3.7): Sha_w(G, Ind_H^G J_{H/K}) = Sha_w(H, J_{H/K})
  {
    struct Triple {
      std::string name;
      PermGroup g, h, k;
    };
    std::vector<Triple> triples;
    {
      PermGroup g = build_Pprime(2, 3);
      PermGroup e2 = build_E(2, 3);
      triples.push_back({"P'2/E2/1", g, e2, trivial_subgroup(g)});
      triples.push_back({"P'2/E2/<d2>", g, e2,
                         PermGroup::close({gen_delta(2, 3)}, 9)});
    }
    {
      SemidirectStd sd =
          build_semidirect_std(3, {MatGL2::make(-1, 0, 0, -1, 3)});
      PermGroup transl = PermGroup::close({gen_rho1(3), gen_rho2(3)}, 9);
      triples.push_back(
          {"18/(C3)^2/1", sd.group, transl, trivial_subgroup(sd.group)});
    }
    for (const Triple& t : triples) {
      GLattice jh = chevalley_lattice(t.h, t.k);
      GLattice ind = induced_from(t.g, t.h, jh);
      CohGroup left = sha2(ind, DecompositionSet::all_cyclic(t.g), opts);
      CohGroup right = sha2(jh, DecompositionSet::all_cyclic(t.h), opts);
      check_true(out, "shapiro (" + t.name + ")",
                 left.invariants == right.invariants,
                 inv_str(left.invariants) + " vs " + inv_str(right.invariants));
    }
  }

  // inflation along pi_n (prop 3.5)
  for (long long n : {1ll, 2ll}) {
    GroupHom pi = build_pi(n, 3);
    PermGroup quot = build_Pprime(n, 3);
    GLattice j = chevalley_lattice(quot, build_H(n, 3));
    GLattice pulled = inflate_lattice(j, pi);
    CohGroup below = sha2(j, DecompositionSet::all_cyclic(quot), opts);
    CohGroup above =
        sha2(pulled, DecompositionSet::all_cyclic(pi.source()), opts);
    check_true(out, "inflation iso along pi_" + std::to_string(n),
               below.invariants == above.invariants,
               inv_str(below.invariants) + " vs " + inv_str(above.invariants));
  }

  // restriction to a Sylow subgroup is injective on sha (prop 3.12)
  for (const Pair& pr : zoo) {
    if (pr.g.order() % 3) continue;
    PermGroup syl = sylow_p(pr.g, 3);
    PermGroup ph = intersection(syl, pr.h);
    CohGroup big = sha_omega(pr.g, pr.h, opts);
    CohGroup small = sha_omega(syl, ph, opts);
    bool ok = small.order() % std::max<std::uint64_t>(big.order(), 1) == 0;
    check_true(out, "|sha(G)| divides |sha(Sylow)| (" + pr.name + ")", ok,
               inv_str(big.invariants) + " vs " + inv_str(small.invariants));
  }

  // bell vanishing (lemma 5.9)
  {
    std::vector<MatGL2> sl2{MatGL2::make(1, 1, 0, 1, 3),
                            MatGL2::make(0, -1, 1, 0, 3)};
    SemidirectStd sd = build_semidirect_std(3, sl2);
    std::vector<std::array<long long, 4>> arrays;
    for (const MatGL2& m : sl2) arrays.push_back(m.entries());
    FinGModule v = standard_rep_mod_p(sd.stabilizer, arrays, 3);
    FinGModule vd = dual(v);
    check_inv(out, "H^1(SL2(F3), V)", h1_finite(v).invariants, {});
    check_inv(out, "H^2(SL2(F3), V)", h2_finite(v).invariants, {});
    check_inv(out, "H^1(SL2(F3), V*)", h1_finite(vd).invariants, {});
    check_inv(out, "H^2(SL2(F3), V*)", h2_finite(vd).invariants, {});
  }

  // SL2-invariants of the (C_3)^2 multiplier (lemma 5.4)
  {
    PermGroup n = PermGroup::close({gen_rho2(3), gen_rho1(3)}, 9);
    auto mk = [&](std::vector<MatGL2> mats) {
      std::vector<std::vector<std::size_t>> autos;
      for (const MatGL2& m : mats) autos.push_back(automorphism_from_mat(n, m));
      return multiplier_fixed_invariants(n, autos);
    };
    check_inv(out, "multiplier invariants under SL2(F3)",
              mk({MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3)}),
              {3});
    check_inv(out, "multiplier invariants under <-I>",
              mk({MatGL2::make(-1, 0, 0, -1, 3)}), {3});
    check_inv(out, "multiplier invariants under <diag(-1,1)>",
              mk({MatGL2::make(-1, 0, 0, 1, 3)}), {});
    check_inv(out, "multiplier invariants under GL2(F3)",
              mk({MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3),
                  MatGL2::make(-1, 0, 0, 1, 3)}),
              {});
  }

  return out;
}

static std::vector<CheckResult> criterion_p2_sanity(const CohOptions& opts) {
  std::vector<CheckResult> out;
  PermGroup v4 = regular_v4();
  PermGroup triv = trivial_subgroup(v4);
  check_inv(out, "sha_omega(V4, J_{V4})", sha_omega(v4, triv, opts).invariants,
            {2});
  GLattice j = chevalley_lattice(v4, triv);
  DecompositionSet full = DecompositionSet::admissible_closure(v4, {v4});
  check_inv(out, "sha2(V4, D with V4)", sha2(j, full, opts).invariants, {});
  return out;
}

static std::vector<CheckResult> criterion_legacy(const CohOptions&) {
  std::vector<CheckResult> out;
  std::mt19937 rng(20250810);
  int adequate_seen = 0;
  bool all_trivial = true;
  std::string why;
  for (auto& [name, mats] : star_subgroups_p3()) {
    SemidirectStd sd = build_semidirect_std(3, mats);
    const PermGroup& g = sd.group;
    int found = 0;
    for (int attempt = 0; attempt < 400 && found < 15; ++attempt) {
      std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
      std::vector<Perm> gens{g.element(pick(rng)), g.element(pick(rng))};
      PermGroup d = PermGroup::close(gens, g.degree(), g.order() + 1);
      DecompositionSet ds = DecompositionSet::admissible_closure(g, {d});
      if (!adequacy_criterion(g, sd.stabilizer, ds)) continue;
      ++found;
      ++adequate_seen;
      KnotReport rep = decide_hnp(g, sd.stabilizer, ds, Method::Classifier);
      if (rep.decision != Decision::Trivial) {
        all_trivial = false;
        why = name;
      }
    }
  }
  check_true(out,
             "decide_hnp trivial on " + std::to_string(adequate_seen) +
                 " adequate decomposition sets (>= 100)",
             all_trivial && adequate_seen >= 100, why);
  return out;
}

static std::vector<CheckResult> criterion_p5_stretch(const CohOptions&) {
  std::vector<CheckResult> out;
  std::vector<MatGL2> sl2{MatGL2::make(1, 1, 0, 1, 5),
                          MatGL2::make(0, -1, 1, 0, 5)};
  CentralExtension ext = build_heisenberg_cover(5, sl2);
  check_eq(out, "|cover| (p=5)", ext.total.order(), 15000);
  SemidirectStd sd = build_semidirect_std(5, sl2);
  AbelianInvariants dr = drakokhrust_sha(ext, sd.stabilizer);
  check_inv(out, "drakokhrust(heisenberg cover p=5)", dr, {5});
  return out;
}

std::vector<CheckResult> run_criterion(int index, const CohOptions& opts) {
  switch (index) {
    case 1: return criterion_star_classification(opts);
    case 2: return criterion_pgroup_dichotomy(opts);
    case 3: return criterion_decomposition_dependence(opts);
    case 4: return criterion_non_sl2(opts);
    case 5: return criterion_drakokhrust_p3(opts);
    case 6: return criterion_s2_values(opts);
    case 7: return criterion_oracles(opts);
    case 8: return criterion_p2_sanity(opts);
    case 9: return criterion_legacy(opts);
    case 10: return criterion_p5_stretch(opts);
    default: throw BadParameter("criterion index out of range");
  }
}

std::vector<std::string> verify_suite_names() {
  return {"p3-classification", "p3-pgroups", "oracles", "drakokhrust",
          "p5-stretch"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const CohOptions& opts) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  if (suite == "p3-classification") {
    append(run_criterion(1, opts));
    append(criterion_decomposition_dependence(opts));
    append(run_criterion(4, opts));
    append(run_criterion(9, opts));
  } else if (suite == "p3-pgroups") {
    append(run_criterion(2, opts));
    append(run_criterion(6, opts));
    append(run_criterion(8, opts));
  } else if (suite == "oracles") {
    append(run_criterion(7, opts));
  } else if (suite == "drakokhrust") {
    append(run_criterion(5, opts));
  } else if (suite == "p5-stretch") {
    append(run_criterion(10, opts));
  } else {
    throw BadParameter("unknown verify suite: " + suite);
  }
  return out;
}

}  // namespace knot
