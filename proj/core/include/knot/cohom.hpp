#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "knot/glattice.hpp"
#include "knot/groupzoo.hpp"
#include "knot/permgroup.hpp"
#include "knot/zmodlin.hpp"

namespace knot {

struct CohOptions {
  bool stabilizer_reduction = true;  // replace cyclic members by cyclics of H
  bool sylow_reduction = true;       // replace members by their p-Sylows
  bool fast_p_part = false;          // coefficients mod p^{v_p(|G|)}
  int jobs = 1;
};

/// Set of subgroups containing all cyclic subgroups and closed under
/// conjugation. Construction closes arbitrary input and remembers whether
/// anything had to be added.
class DecompositionSet {
 public:
  static DecompositionSet admissible_closure(const PermGroup& g,
                                             std::vector<PermGroup> members);
  static DecompositionSet all_cyclic(const PermGroup& g);

  const std::vector<PermGroup>& members() const { return members_; }
  bool closure_added_members() const { return extended_; }
  std::size_t input_count() const { return input_count_; }

 private:
  std::vector<PermGroup> members_;
  bool extended_ = false;
  std::size_t input_count_ = 0;
};

/// 1-cocycle machinery for a (group, finite-coefficient) pair, in generator
/// coordinates: a cocycle is determined by its values on the generators,
/// u = (f(s_1),...,f(s_k)) in (Z/n)^{k r}, and f(g) = L_g u for the
/// per-element matrices L_g accumulated along a spanning tree of the Cayley
/// graph. The non-tree edges contribute the linear constraints that cut out
/// Z^1; an independent all-pairs validator re-checks representatives.
struct CocycleSpace {
  PermGroup group;
  std::uint64_t n = 2;
  int r = 0;
  int k = 0;
  std::size_t kr = 0;
  std::vector<std::vector<std::uint64_t>> act;  // per element: r x r, row-major
  std::vector<std::vector<std::uint64_t>> lmap; // per element: r x kr, row-major
  HowellBasis z1;                                // cocycle span
  std::vector<ModRow> coboundaries;              // B^1 generators

  ModRow evaluate(const ModRow& u, std::size_t element_index) const;
  ModRow evaluate(const ModRow& u, const Perm& g) const;
  bool is_cocycle_all_pairs(const ModRow& u) const;
};

CocycleSpace build_cocycle_space(const PermGroup& g,
                                 const std::vector<IntMat>& gen_mats,
                                 std::uint64_t n);

/// A computed cohomology group: invariants plus representative cocycles and
/// a membership test, all in the generator coordinates of `space`.
class CohGroup {
 public:
  std::string description;
  std::uint64_t modulus = 2;
  AbelianInvariants invariants;
  HowellBasis numerator;    // cocycles spanning the classes
  HowellBasis denominator;  // cocycles representing zero
  std::shared_ptr<const CocycleSpace> space;
  std::shared_ptr<const GLattice> lattice;  // set when built from a lattice

  std::uint64_t order() const { return invariants.order(); }
  bool trivial() const { return invariants.trivial(); }
  std::vector<ModRow> class_representatives() const;
  bool is_zero_class(const ModRow& u) const { return denominator.contains(u); }
  bool same_class(const ModRow& u, const ModRow& v) const;
  ModRow value_at(const ModRow& u, const Perm& g) const {
    return space->evaluate(u, g);
  }
};

/// H^1(G, A) for a finite module.
CohGroup h1_finite(const FinGModule& a);

/// H^2(G, A) for a finite module, via the shift 0 -> A -> Map(G,A) -> Q -> 0.
CohGroup h2_finite(const FinGModule& a);

/// H^2(G, M) for a lattice via the coefficient sequence 0 -> M -> M -> M/nM,
/// n = |G|: classes live in H^1(G, M/nM) modulo the image of H^1(G, M).
CohGroup h2_lattice(const GLattice& m);
CohGroup h2_lattice_at(const GLattice& m, std::uint64_t n);

/// Tate periodicity oracle for cyclic groups: invariants of M^C / N_C M,
/// computed with exact integer kernels and Smith reduction. Independent of
/// the coefficient-reduction path.
AbelianInvariants h2_cyclic_tate(const PermGroup& c, const GLattice& m);

/// Membership data for H^2(D, M) at the ambient modulus n: a restricted
/// class vanishes iff its generator values fall into `denominator`.
struct SubgroupH2 {
  PermGroup subgroup;
  CocycleSpace space;
  HowellBasis denominator;
};
SubgroupH2 subgroup_h2(const GLattice& m, const PermGroup& d, std::uint64_t n,
                       std::uint64_t fixed_modulus);

/// Restriction of a class of h2 (built by h2_lattice*) to a subgroup:
/// returns the restricted cocycle in D's generator coordinates and whether
/// the restricted class vanishes.
struct RestrictedClass {
  ModRow u;
  bool zero = false;
};
RestrictedClass restrict_class(const CohGroup& h2, const ModRow& u,
                               const SubgroupH2& d);

/// Sha^2_D(G, M) = Ker(H^2(G,M) -> sum over D of H^2(D,M)). When M carries
/// Chevalley data J_{G/H}, the stabilizer reduction (cyclic members replaced
/// by cyclic subgroups of H) and, in the transitive prime-power-degree
/// setting, the Sylow reduction of the member list apply first.
CohGroup sha2(const GLattice& m, const DecompositionSet& ds,
              const CohOptions& opts = {});

/// Sha^2_omega(G, J_{G/H}).
CohGroup sha_omega(const PermGroup& g, const PermGroup& h,
                   const CohOptions& opts = {});

/// Character-level S^2: the subgroup of E^dual cut out by the diagonal-plus-
/// induced condition over the double cosets, for every member of D_(H).
struct S2Result {
  std::uint64_t exponent = 1;
  HowellBasis characters;  // rows over Z/exponent in a fixed basis of E
  AbelianInvariants invariants;
};
S2Result s2_character(const PermGroup& g, const PermGroup& h,
                      const PermGroup& e, const DecompositionSet& ds);

/// Drakokhrust formula on a generalized representation group:
/// invariants of (H~ cap G~der) / Phi^G~(H~). Throws UnverifiedExtension when
/// the extension's flag is Unverified and oracle verification is impossible
/// or fails (pass allow_unverified to get the unchecked value).
AbelianInvariants drakokhrust_sha(const CentralExtension& ext,
                                  const PermGroup& h_in_base,
                                  bool allow_unverified = false);

/// H^2(G, Q/Z) as H^2(G, Z/|G|) modulo the Bockstein image of Hom(G, Z/|G|).
AbelianInvariants schur_multiplier_small(const PermGroup& g,
                                         std::uint64_t cap = 64);

/// Invariants of the fixed subgroup of H^2(N, Q/Z) under a set of
/// automorphisms of N (each given as element-index images).
AbelianInvariants multiplier_fixed_invariants(
    const PermGroup& n, const std::vector<std::vector<std::size_t>>& autos);

/// Upgrade an Unverified extension flag by checking
/// |Z~ cap G~der| = |H^2(G, Q/Z)| with the multiplier oracle.
bool verify_generalized_representation(CentralExtension& ext,
                                       std::uint64_t multiplier_cap = 64);

}  // namespace knot
