#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knot/cohom.hpp"
#include "knot/groupzoo.hpp"
#include "knot/permgroup.hpp"

namespace knot {

/// Witness for condition (*): a normal elementary abelian regular subgroup N
/// avoiding H, with the H-action matrices in a basis of N all of
/// determinant 1.
struct StarWitness {
  PermGroup translation_subgroup;         // N
  std::vector<Perm> basis;                // (n1, n2) with N = <n1> x <n2>
  std::vector<std::array<long long, 4>> matrices;  // per H-generator
  std::vector<long long> determinants;
  bool all_det_one = false;
};

enum class Decision { Trivial, ZmodP };

enum class Method { Classifier, Cohomology, Both };

struct KnotReport {
  std::uint64_t group_order = 0;
  int degree = 0;
  long long p = 0;
  std::optional<StarWitness> star;
  std::optional<AbelianInvariants> sha_invariants;  // set on cohomology runs
  // invariants of the quotient of the all-cyclic obstruction by the
  // D-obstruction; recoverable, no independent computation path
  std::optional<AbelianInvariants> weak_approximation_defect;
  Decision decision = Decision::Trivial;
  Method method = Method::Classifier;
  std::size_t decomposition_input = 0;
  std::size_t decomposition_closed = 0;
  bool decomposition_has_cp2 = false;
};

/// Degree must be p^2 for a prime p; returns p.
long long prime_square_degree(const PermGroup& g);

/// Search for a condition-(*) witness: N normal, elementary abelian of order
/// p^2, regular, N cap H = 1, and H acting on N through SL_2(F_p).
std::optional<StarWitness> check_condition_star(const PermGroup& g,
                                                const PermGroup& h);

bool subgroup_contains_cp2(const PermGroup& d, long long p);

/// Hasse-norm-principle decision from (G, H, D). The classifier follows the
/// star test plus the (C_p)^2-in-D test; the cohomology path computes
/// Sha^2_D(G, J_{G/H}) directly. Running both makes disagreement a hard
/// error.
KnotReport decide_hnp(const PermGroup& g, const PermGroup& h,
                      const DecompositionSet& ds, Method method,
                      const CohOptions& opts = {});

/// H^1(k, Pic Xbar): Z/p iff condition (*) holds, else 0.
KnotReport decide_h1pic(const PermGroup& g, const PermGroup& h,
                        Method method = Method::Classifier,
                        const CohOptions& opts = {});

/// Bartels product condition: some D in ds satisfies P = (P cap D)(P cap H)
/// for P a p-Sylow subgroup of G.
bool adequacy_criterion(const PermGroup& g, const PermGroup& h,
                        const DecompositionSet& ds);

}  // namespace knot
