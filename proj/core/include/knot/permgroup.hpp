#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knot/perm.hpp"

namespace knot {

inline constexpr std::uint64_t kDefaultOrderCap = 1000000;

/// Finitely generated permutation group with its full element set
/// materialized. Elements are sorted lexicographically by image sequence,
/// so every "first found" choice downstream is reproducible.
class PermGroup {
 public:
  PermGroup() = default;

  /// Closure of the generators. Throws CapExceeded if the group would be
  /// larger than cap.
  static PermGroup close(std::vector<Perm> generators, int degree,
                         std::uint64_t cap = kDefaultOrderCap);

  /// Wrap an already-closed element set (verified in debug builds only).
  static PermGroup from_elements(std::vector<Perm> elements);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  bool contains(const Perm& g) const;
  /// Index into elements(); throws BadParameter when absent.
  std::size_t index_of(const Perm& g) const;

  bool is_trivial() const { return elements_.size() == 1; }
  bool same_elements(const PermGroup& other) const {
    return elements_ == other.elements_;
  }

  /// Greedy minimal-ish generating set in canonical element order.
  std::vector<Perm> small_generating_set() const;

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted
  std::unordered_map<Perm, std::size_t, PermHash> index_;

  void build_index();
};

/// Homomorphism given by images of a generating set of the source; the
/// constructor extends it to every element by breadth-first products and
/// fails if the extension is inconsistent (not a well-defined hom).
class GroupHom {
 public:
  GroupHom(const PermGroup& source, std::vector<Perm> source_gens,
           std::vector<Perm> images, const PermGroup& target);

  const PermGroup& source() const { return *source_; }
  const PermGroup& target() const { return *target_; }
  Perm apply(const Perm& g) const;
  PermGroup kernel() const;
  PermGroup image() const;
  bool is_surjective() const;
  PermGroup preimage(const PermGroup& sub_of_target) const;

 private:
  std::shared_ptr<const PermGroup> source_;
  std::shared_ptr<const PermGroup> target_;
  std::vector<Perm> image_of_element_;  // aligned with source elements
};

// -- subgroup-level operations ----------------------------------------------

bool is_transitive(const PermGroup& g);
PermGroup point_stabilizer(const PermGroup& g, int point);
PermGroup derived_subgroup(const PermGroup& g);
PermGroup center(const PermGroup& g);
long long exponent(const PermGroup& g);
bool is_abelian(const PermGroup& g);
bool is_subgroup(const PermGroup& g, const PermGroup& h);
bool is_normal(const PermGroup& g, const PermGroup& h);
PermGroup conjugate_subgroup(const PermGroup& h, const Perm& by);
PermGroup intersection(const PermGroup& a, const PermGroup& b);

/// One p-Sylow subgroup, deterministic (first found in canonical order).
PermGroup sylow_p(const PermGroup& g, long long p);

/// Largest normal subgroup of g inside h.
PermGroup normal_core(const PermGroup& g, const PermGroup& h);

/// Lexicographically least representatives of the double cosets D\G/H.
std::vector<Perm> double_coset_reps(const PermGroup& g, const PermGroup& d,
                                    const PermGroup& h);

/// All subgroups isomorphic to (C_p)^rank, deduplicated by element set.
std::vector<PermGroup> subgroups_elementary_abelian(const PermGroup& g,
                                                    long long p, int rank);

/// One entry per distinct cyclic subgroup, including the trivial one.
std::vector<PermGroup> cyclic_subgroups(const PermGroup& g);

/// Every subgroup (small groups only; walks the subgroup lattice).
std::vector<PermGroup> all_subgroups(const PermGroup& g,
                                     std::uint64_t order_limit = 0);

std::vector<Perm> left_coset_reps(const PermGroup& g, const PermGroup& h);

/// Quotient group G/N realized by the action on cosets of N, together with
/// the canonical projection.
std::pair<PermGroup, GroupHom> quotient_group(const PermGroup& g,
                                              const PermGroup& n);

/// Invariant factors d1 | d2 | ... of a finite abelian group given by its
/// element set (multiplication = permutation product).
std::vector<std::uint64_t> abelian_invariants_of_group(const PermGroup& g);

}  // namespace knot
