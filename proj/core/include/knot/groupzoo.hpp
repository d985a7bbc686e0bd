#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "knot/permgroup.hpp"

namespace knot {

/// 2x2 matrix over F_p, entries reduced into [0, p).
struct MatGL2 {
  long long a = 1, b = 0, c = 0, d = 1;
  long long p = 3;

  static MatGL2 make(long long a, long long b, long long c, long long d,
                     long long p);
  MatGL2 operator*(const MatGL2& rhs) const;
  long long det() const;
  bool operator==(const MatGL2& rhs) const {
    return a == rhs.a && b == rhs.b && c == rhs.c && d == rhs.d && p == rhs.p;
  }
  bool operator<(const MatGL2& rhs) const {
    return std::array<long long, 4>{a, b, c, d} <
           std::array<long long, 4>{rhs.a, rhs.b, rhs.c, rhs.d};
  }
  std::array<long long, 4> entries() const { return {a, b, c, d}; }
};

/// Automorphism of a PermGroup, stored as the induced permutation of the
/// sorted element list.
struct AutMap {
  std::shared_ptr<const PermGroup> base;
  std::vector<std::size_t> images;  // element index -> element index

  Perm apply(const Perm& x) const {
    return base->element(images[base->index_of(x)]);
  }
  AutMap then(const AutMap& second) const;  // second(this(x))
  bool is_homomorphism() const;
  bool fixes_center_pointwise() const;
};

enum class GrFlag { ProvedInPaper, OracleVerified, Unverified };

/// Central extension 1 -> kernel -> total -> base -> 1, with the claim that
/// it is a generalized representation group recorded alongside provenance.
struct CentralExtension {
  PermGroup total;
  PermGroup kernel;
  GroupHom projection;
  GrFlag flag = GrFlag::Unverified;
};

// -- section-2 permutations of the p^2 points (i,j), indexed i + p*j --------

Perm gen_z(long long i0, long long p);
Perm gen_rho1(long long p);
Perm gen_rho2(long long p);
Perm gen_tau(long long p);
Perm gen_beta_bar(long long beta, long long p);
Perm gen_beta_tilde(long long beta, long long p);
Perm gen_gamma(long long n, long long p);
Perm gen_delta(long long n, long long p);

PermGroup build_P(long long n, long long p);
PermGroup build_Pprime(long long n, long long p);
PermGroup build_E(long long n, long long p);  // 0 <= n <= p
PermGroup build_H(long long n, long long p);

/// The surjection P_p ->> P'_n with kernel E_{p-n}.
GroupHom build_pi(long long n, long long p);

/// (C_p)^2 x| <matgens> acting on F_p x F_p through the standard
/// representation; returns the group and the stabilizer of (0,0).
struct SemidirectStd {
  PermGroup group;
  PermGroup stabilizer;            // {1} x| G-dagger, generated by the matrix perms
  std::vector<MatGL2> matgens;     // aligned with stabilizer generators
};
SemidirectStd build_semidirect_std(long long p, std::vector<MatGL2> matgens,
                                   std::uint64_t cap = kDefaultOrderCap);

Perm mat_to_perm(const MatGL2& m);

/// Center-fixing automorphism of P'_2 inducing the standard action of g on
/// P'_2 / Z(P'_2); g -> winter_lift(p, g) is a group homomorphism.
AutMap winter_lift(long long p, const MatGL2& g);

/// All of SL_2(F_p) as matrices, sorted.
std::vector<MatGL2> sl2_elements(long long p);
std::vector<MatGL2> gl2_elements(long long p);

/// True iff some center-fixing automorphism of P'_2 induces the standard
/// action of g on the central quotient (exists iff det g = 1).
bool winter_liftable(long long p, const MatGL2& g);

/// The generalized representation group  1 -> Z(P'_2) -> P'_2 x| G' -> G -> 1
/// realized faithfully on the cosets of a core-free subgroup.
CentralExtension build_heisenberg_cover(long long p,
                                        std::vector<MatGL2> matgens,
                                        std::uint64_t cap = kDefaultOrderCap);

}  // namespace knot
