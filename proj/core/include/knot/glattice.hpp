#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "knot/permgroup.hpp"
#include "knot/zmodlin.hpp"

namespace knot {

using IntMat = std::vector<std::vector<long long>>;

IntMat int_identity(std::size_t r);
IntMat int_mul(const IntMat& a, const IntMat& b);
std::vector<long long> int_apply(const IntMat& a,
                                 const std::vector<long long>& v);

/// Extra structure carried by a Chevalley module J_{G/H}: the quotient map
/// from Ind_H^G Z and the all-ones embedding vector it kills.
struct ChevalleyData {
  std::shared_ptr<const PermGroup> stabilizer;  // H
  IntMat projection;                            // Ind -> J, rank x (rank+1)
  std::vector<long long> embedding;             // image of 1 in Ind
};

/// Free Z-module of finite rank with a G-action by integer matrices
/// (column convention: action(g) * v). The action is generated from the
/// matrices attached to the group's generator list and verified to be a
/// homomorphism over the full element set.
class GLattice {
 public:
  GLattice(PermGroup group, std::vector<IntMat> generator_action);

  const PermGroup& group() const { return *group_; }
  std::shared_ptr<const PermGroup> group_ptr() const { return group_; }
  int rank() const { return rank_; }
  const std::vector<IntMat>& generator_action() const { return gen_action_; }

  /// Exact integer action matrix of an arbitrary element (cached table).
  const IntMat& action_of(const Perm& g) const;
  const IntMat& action_of_index(std::size_t i) const;

  const std::optional<ChevalleyData>& chevalley() const { return chev_; }
  void set_chevalley(ChevalleyData d) { chev_ = std::move(d); }

 private:
  std::shared_ptr<const PermGroup> group_;
  int rank_;
  std::vector<IntMat> gen_action_;
  mutable std::vector<IntMat> table_;  // per element, filled on first use
  std::optional<ChevalleyData> chev_;

  void build_table() const;
};

/// Finite module over Z/n with a G-action by matrices mod n.
class FinGModule {
 public:
  FinGModule(PermGroup group, std::uint64_t modulus,
             std::vector<IntMat> generator_action);

  const PermGroup& group() const { return *group_; }
  std::uint64_t modulus() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<IntMat>& generator_action() const { return gen_action_; }

 private:
  std::shared_ptr<const PermGroup> group_;
  std::uint64_t n_;
  int rank_;
  std::vector<IntMat> gen_action_;  // entries reduced into [0, n)
};

struct MackeyPiece {
  Perm representative;
  PermGroup intersection;  // D cap g H g^-1
};

GLattice trivial_lattice(const PermGroup& g);

/// Ind_H^G Z: rank (G:H), basis indexed by left cosets ordered by their
/// lexicographically least element, action by coset permutation matrices.
GLattice induced_lattice(const PermGroup& g, const PermGroup& h);

/// Ind_H^G M for an H-lattice M (block permutation matrices with M-action).
GLattice induced_from(const PermGroup& g, const PermGroup& h,
                      const GLattice& m_over_h);

/// J_{G/H} = Ind_H^G Z / Z*(1,...,1), rank (G:H)-1; keeps the projection
/// matrix and embedding vector, and remembers H.
GLattice chevalley_lattice(const PermGroup& g, const PermGroup& h);

/// View a lattice over a subgroup (same rank, generator action from the
/// subgroup's own generating set).
GLattice restrict_lattice(const GLattice& m, const PermGroup& d);

/// Pull back along a surjection q: G -> G/N (module for the source).
GLattice inflate_lattice(const GLattice& m_over_quotient, const GroupHom& q);

FinGModule reduce_mod(const GLattice& m, std::uint64_t n);
FinGModule dual(const FinGModule& m);
FinGModule standard_rep_mod_p(const PermGroup& gdagger_matrix_group,
                              const std::vector<std::array<long long, 4>>& mats,
                              std::uint64_t p);

std::vector<MackeyPiece> mackey_pieces(const PermGroup& g, const PermGroup& h,
                                       const PermGroup& d);

}  // namespace knot
