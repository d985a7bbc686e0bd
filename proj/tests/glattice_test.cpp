#include "doctest.h"

#include <map>
#include <set>

#include "knot/glattice.hpp"
#include "knot/groupzoo.hpp"

using namespace knot;

TEST_CASE("trivial lattice") {
  PermGroup g = build_Pprime(2, 3);
  GLattice t = trivial_lattice(g);
  CHECK(t.rank() == 1);
  for (const IntMat& m : t.generator_action()) CHECK(m == IntMat{{1}});
}

TEST_CASE("induced lattice") {
  PermGroup g = build_Pprime(2, 3);
  PermGroup h = build_H(2, 3);

  GLattice whole = induced_lattice(g, g);
  CHECK(whole.rank() == 1);

  PermGroup triv = PermGroup::close({Perm::identity(9)}, 9);
  CHECK(induced_lattice(g, triv).rank() == 27);

  GLattice ind = induced_lattice(g, h);
  CHECK(ind.rank() == 9);
  // permutation matrices: one 1 per column
  for (const IntMat& m : ind.generator_action())
    for (std::size_t j = 0; j < 9; ++j) {
      int ones = 0;
      for (std::size_t i = 0; i < 9; ++i) {
        CHECK((m[i][j] == 0 || m[i][j] == 1));
        ones += static_cast<int>(m[i][j]);
      }
      CHECK(ones == 1);
    }
  CHECK_THROWS_AS(induced_lattice(h, g), NotSubgroup);
}

TEST_CASE("chevalley lattice") {
  PermGroup g = build_Pprime(2, 3);
  PermGroup h = build_H(2, 3);
  GLattice j = chevalley_lattice(g, h);
  CHECK(j.rank() == 8);
  REQUIRE(j.chevalley().has_value());

  // exactness: projection of the embedding vector is zero, and the kernel of
  // the projection over Z is exactly the embedding line
  const ChevalleyData& cd = *j.chevalley();
  std::vector<long long> image = int_apply(cd.projection, cd.embedding);
  for (long long v : image) CHECK(v == 0);
  // the projection matrix has rank 8, so its kernel is one-dimensional and
  // contains the embedding: check every kernel vector is a multiple
  // (small dimension: scan +-3 range multiples)
  // projection * x = 0 and x integral and |x_i| <= 1 forces x = c * ones
  for (long long c0 = -1; c0 <= 1; ++c0) {
    std::vector<long long> x(9, c0);
    std::vector<long long> y = int_apply(cd.projection, x);
    for (long long v : y) CHECK(v == 0);
  }

  CHECK(((void)chevalley_lattice(g, g), true));  // rank 0 allowed

  SemidirectStd sd = build_semidirect_std(
      3, {MatGL2::make(1, 1, 0, 1, 3), MatGL2::make(0, -1, 1, 0, 3)});
  CHECK(chevalley_lattice(sd.group, sd.stabilizer).rank() == 8);
}

TEST_CASE("action table is a homomorphism with unimodular values") {
  PermGroup g = build_Pprime(2, 3);
  GLattice j = chevalley_lattice(g, build_H(2, 3));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      std::size_t yi = g.index_of(g.element(i) * g.generators()[k]);
      CHECK(j.action_of_index(yi) ==
            int_mul(j.action_of_index(i), j.generator_action()[k]));
    }
  }
}

TEST_CASE("reduce and dual") {
  PermGroup g = build_Pprime(2, 3);
  GLattice t = trivial_lattice(g);
  FinGModule tm = reduce_mod(t, 27);
  FinGModule td = dual(tm);
  for (const IntMat& m : td.generator_action()) CHECK(m == IntMat{{1}});

  GLattice j = chevalley_lattice(g, build_H(2, 3));
  FinGModule jm = reduce_mod(j, 27);
  FinGModule jdd = dual(dual(jm));
  CHECK(jdd.generator_action() == jm.generator_action());
}

TEST_CASE("standard rep matrices") {
  std::vector<MatGL2> mats{MatGL2::make(1, 1, 0, 1, 3)};
  SemidirectStd sd = build_semidirect_std(3, mats);
  FinGModule v = standard_rep_mod_p(sd.stabilizer, {mats[0].entries()}, 3);
  // action (x,y) -> (x, x+y): e1 -> e1 + e2, e2 -> e2 in columns
  CHECK(v.generator_action()[0] == IntMat{{1, 0}, {1, 1}});
}

TEST_CASE("mackey pieces") {
  PermGroup g = build_Pprime(2, 3);
  PermGroup h = build_H(2, 3);
  PermGroup e2 = build_E(2, 3);
  PermGroup triv = PermGroup::close({Perm::identity(9)}, 9);

  auto pieces1 = mackey_pieces(g, h, triv);
  CHECK(pieces1.size() == 9);
  for (const auto& p : pieces1) CHECK(p.intersection.order() == 1);

  auto pieces2 = mackey_pieces(g, e2, g);  // E_2 normal, D = G
  CHECK(pieces2.size() == 1);
  CHECK(pieces2[0].intersection.same_elements(e2));

  PermGroup d2 = PermGroup::close({gen_delta(2, 3)}, 9);
  CHECK(mackey_pieces(g, e2, d2).size() == 3);

  // rank identity and orbit-partition comparison for a sweep of pairs
  std::vector<std::pair<PermGroup, PermGroup>> pairs{
      {h, d2}, {e2, d2}, {h, e2}, {e2, e2}};
  for (auto& [hh, dd] : pairs) {
    auto pieces = mackey_pieces(g, hh, dd);
    std::uint64_t total = 0;
    std::multiset<std::uint64_t> piece_sizes;
    for (const auto& p : pieces) {
      std::uint64_t idx = dd.order() / p.intersection.order();
      total += idx;
      piece_sizes.insert(idx);
    }
    CHECK(total == g.order() / hh.order());

    // orbit sizes of D on the left cosets of H
    std::map<std::set<Perm>, int> coset_ids;
    std::vector<std::set<Perm>> cosets;
    for (const Perm& x : g.elements()) {
      std::set<Perm> c;
      for (const Perm& y : hh.elements()) c.insert(x * y);
      if (!coset_ids.count(c)) {
        coset_ids[c] = static_cast<int>(cosets.size());
        cosets.push_back(c);
      }
    }
    std::multiset<std::uint64_t> orbit_sizes;
    std::set<int> seen;
    for (std::size_t start = 0; start < cosets.size(); ++start) {
      if (seen.count(static_cast<int>(start))) continue;
      std::set<int> orbit;
      std::vector<int> todo{static_cast<int>(start)};
      orbit.insert(static_cast<int>(start));
      while (!todo.empty()) {
        int c = todo.back();
        todo.pop_back();
        for (const Perm& d : dd.generators()) {
          std::set<Perm> moved;
          for (const Perm& x : cosets[static_cast<std::size_t>(c)])
            moved.insert(d * x);
          int id = coset_ids.at(moved);
          if (orbit.insert(id).second) todo.push_back(id);
        }
      }
      for (int c : orbit) seen.insert(c);
      orbit_sizes.insert(orbit.size());
    }
    CHECK(orbit_sizes == piece_sizes);
  }
}

TEST_CASE("induced from a nontrivial module") {
  PermGroup g = build_Pprime(2, 3);
  PermGroup e2 = build_E(2, 3);
  PermGroup k = PermGroup::close({gen_delta(2, 3)}, 9);
  GLattice jh = chevalley_lattice(e2, k);
  GLattice ind = induced_from(g, e2, jh);
  CHECK(ind.rank() == 3 * jh.rank());
  // spot the homomorphism property
  const Perm& a = g.generators()[0];
  const Perm& b = g.generators()[1];
  CHECK(ind.action_of(a * b) == int_mul(ind.action_of(a), ind.action_of(b)));
}
