#include "knot/groupzoo.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <set>

#include "knot/zmodlin.hpp"

namespace knot {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod(long long x, long long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

int point(long long i, long long j, long long p) {
  return static_cast<int>(mod(i, p) + p * mod(j, p));
}

template <typename F>
Perm perm_from(long long p, F f) {
  std::vector<int> im(static_cast<std::size_t>(p * p));
  for (long long i = 0; i < p; ++i)
    for (long long j = 0; j < p; ++j) {
      auto [i2, j2] = f(i, j);
      im[static_cast<std::size_t>(point(i, j, p))] = point(i2, j2, p);
    }
  return Perm(std::move(im));
}

void require_prime(long long p) {
  if (!is_prime(p)) throw BadParameter("p must be prime");
}

}  // namespace

MatGL2 MatGL2::make(long long a, long long b, long long c, long long d,
                    long long p) {
  require_prime(p);
  MatGL2 m{mod(a, p), mod(b, p), mod(c, p), mod(d, p), p};
  if (m.det() == 0) throw BadParameter("matrix is singular mod p");
  return m;
}

MatGL2 MatGL2::operator*(const MatGL2& rhs) const {
  if (p != rhs.p) throw BadParameter("matrix modulus mismatch");
  return MatGL2{mod(a * rhs.a + b * rhs.c, p), mod(a * rhs.b + b * rhs.d, p),
                mod(c * rhs.a + d * rhs.c, p), mod(c * rhs.b + d * rhs.d, p),
                p};
}

long long MatGL2::det() const { return mod(a * d - b * c, p); }

AutMap AutMap::then(const AutMap& second) const {
  AutMap out{base, std::vector<std::size_t>(images.size())};
  for (std::size_t i = 0; i < images.size(); ++i)
    out.images[i] = second.images[images[i]];
  return out;
}

bool AutMap::is_homomorphism() const {
  const PermGroup& g = *base;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      Perm lhs = apply(g.element(i) * g.element(j));
      Perm rhs = apply(g.element(i)) * apply(g.element(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool AutMap::fixes_center_pointwise() const {
  PermGroup z = center(*base);
  for (const Perm& x : z.elements())
    if (!(apply(x) == x)) return false;
  return true;
}

Perm gen_z(long long i0, long long p) {
  require_prime(p);
  if (i0 < 0 || i0 >= p) throw BadParameter("gen_z: need 0 <= i0 < p");
  return perm_from(p, [&](long long i, long long j) {
    return i == i0 ? std::pair{i, j + 1} : std::pair{i, j};
  });
}

Perm gen_rho1(long long p) {
  require_prime(p);
  return perm_from(p, [](long long i, long long j) {
    return std::pair{i, j + 1};
  });
}

Perm gen_rho2(long long p) {
  require_prime(p);
  return perm_from(p, [](long long i, long long j) {
    return std::pair{i + 1, j};
  });
}

Perm gen_tau(long long p) { return gen_z(p - 1, p) * gen_rho2(p); }

Perm gen_beta_bar(long long beta, long long p) {
  require_prime(p);
  if (mod(beta, p) == 0) throw BadParameter("beta must be a unit mod p");
  return perm_from(p, [&](long long i, long long j) {
    return std::pair{beta * i, j};
  });
}

Perm gen_beta_tilde(long long beta, long long p) {
  require_prime(p);
  if (mod(beta, p) == 0) throw BadParameter("beta must be a unit mod p");
  return perm_from(p, [&](long long i, long long j) {
    return std::pair{i, beta * j};
  });
}

Perm gen_gamma(long long n, long long p) {
  require_prime(p);
  if (n < 1 || n > p) throw BadParameter("gen_gamma: need 1 <= n <= p");
  // gamma_n = prod_i z_i^{a_{p-n,i}},  a_{i,j} = (-1)^{i-j} C(i,j), exact
  // binomials reduced mod p
  std::vector<long long> exps(static_cast<std::size_t>(p), 0);
  long long i = p - n;
  long long binom = 1;  // C(i, 0)
  for (long long j = 0; j <= i; ++j) {
    long long sign = ((i - j) % 2 == 0) ? 1 : -1;
    exps[static_cast<std::size_t>(j)] = mod(sign * (binom % p), p);
    if (j < i) binom = binom * (i - j) / (j + 1);
  }
  Perm g = Perm::identity(static_cast<int>(p * p));
  for (long long j = 0; j < p; ++j)
    g = g * pow(gen_z(j, p), exps[static_cast<std::size_t>(j)]);
  return g;
}

Perm gen_delta(long long n, long long p) {
  Perm r2 = gen_rho2(p);
  return r2 * gen_gamma(n, p) * r2.inverse();
}

PermGroup build_P(long long n, long long p) {
  require_prime(p);
  if (n < 1 || n > p) throw BadParameter("build_P: need 1 <= n <= p");
  return PermGroup::close({gen_tau(p), gen_gamma(n, p)},
                          static_cast<int>(p * p));
}

PermGroup build_Pprime(long long n, long long p) {
  require_prime(p);
  if (n < 1 || n > p) throw BadParameter("build_Pprime: need 1 <= n <= p");
  return PermGroup::close({gen_rho1(p), gen_rho2(p), gen_gamma(n, p)},
                          static_cast<int>(p * p));
}

PermGroup build_E(long long n, long long p) {
  require_prime(p);
  if (n < 0 || n > p) throw BadParameter("build_E: need 0 <= n <= p");
  std::vector<Perm> gens;
  for (long long i = 1; i <= n; ++i) gens.push_back(gen_delta(i, p));
  if (gens.empty()) gens.push_back(Perm::identity(static_cast<int>(p * p)));
  return PermGroup::close(std::move(gens), static_cast<int>(p * p));
}

PermGroup build_H(long long n, long long p) {
  require_prime(p);
  if (n < 1 || n > p) throw BadParameter("build_H: need 1 <= n <= p");
  std::vector<Perm> gens;
  for (long long i = 2; i <= n; ++i) gens.push_back(gen_delta(i, p));
  if (gens.empty()) gens.push_back(Perm::identity(static_cast<int>(p * p)));
  return PermGroup::close(std::move(gens), static_cast<int>(p * p));
}

GroupHom build_pi(long long n, long long p) {
  require_prime(p);
  if (n < 1 || n > p) throw BadParameter("build_pi: need 1 <= n <= p");
  // generate P_p by delta_1..delta_p and rho_2; q_n kills delta_{n'} for
  // n' <= p-n and shifts the rest down by p-n
  PermGroup pp = build_P(p, p);
  PermGroup pn = build_Pprime(n, p);
  std::vector<Perm> gens, images;
  int deg = static_cast<int>(p * p);
  for (long long i = 1; i <= p; ++i) {
    gens.push_back(gen_delta(i, p));
    images.push_back(i > p - n ? gen_delta(i - (p - n), p)
                               : Perm::identity(deg));
  }
  gens.push_back(gen_rho2(p));
  images.push_back(gen_rho2(p));
  return GroupHom(pp, std::move(gens), std::move(images), pn);
}

Perm mat_to_perm(const MatGL2& m) {
  return perm_from(m.p, [&](long long i, long long j) {
    return std::pair{m.a * i + m.c * j, m.b * i + m.d * j};
  });
}

SemidirectStd build_semidirect_std(long long p, std::vector<MatGL2> matgens,
                                   std::uint64_t cap) {
  require_prime(p);
  for (const MatGL2& m : matgens)
    if (m.p != p) throw BadParameter("matrix modulus mismatch");
  int deg = static_cast<int>(p * p);
  std::vector<Perm> ggens{gen_rho2(p), gen_rho1(p)};  // translations
  std::vector<Perm> hgens;
  for (const MatGL2& m : matgens) {
    Perm mp = mat_to_perm(m);
    ggens.push_back(mp);
    hgens.push_back(mp);
  }
  if (hgens.empty()) hgens.push_back(Perm::identity(deg));
  SemidirectStd out{PermGroup::close(std::move(ggens), deg, cap),
                    PermGroup::close(std::move(hgens), deg, cap),
                    std::move(matgens)};
  return out;
}

std::vector<MatGL2> sl2_elements(long long p) {
  require_prime(p);
  std::vector<MatGL2> out;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 0; c < p; ++c)
        for (long long d = 0; d < p; ++d)
          if (mod(a * d - b * c, p) == 1) out.push_back(MatGL2{a, b, c, d, p});
  return out;
}

std::vector<MatGL2> gl2_elements(long long p) {
  require_prime(p);
  std::vector<MatGL2> out;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 0; c < p; ++c)
        for (long long d = 0; d < p; ++d)
          if (mod(a * d - b * c, p) != 0) out.push_back(MatGL2{a, b, c, d, p});
  return out;
}

// -- winter lift -------------------------------------------------------------

namespace {

// everything about P'_2 needed to search for lifts, cached per prime
struct HeisenbergContext {
  long long p;
  PermGroup group;          // P'_2
  Perm d1, d2, r2;
  std::vector<std::array<long long, 3>> nf;  // per element: (x1, x2, y)
  std::map<std::array<long long, 3>, std::size_t> by_nf;

  explicit HeisenbergContext(long long p_) : p(p_), group(build_Pprime(2, p_)),
      d1(gen_delta(1, p_)), d2(gen_delta(2, p_)), r2(gen_rho2(p_)) {
    nf.resize(group.order());
    for (long long x1 = 0; x1 < p; ++x1)
      for (long long x2 = 0; x2 < p; ++x2)
        for (long long y = 0; y < p; ++y) {
          Perm g = pow(d2, x1) * pow(r2, x2) * pow(d1, y);
          std::size_t idx = group.index_of(g);
          nf[idx] = {x1, x2, y};
          by_nf[{x1, x2, y}] = idx;
        }
  }

  std::size_t from_nf(long long x1, long long x2, long long y) const {
    return by_nf.at({mod(x1, p), mod(x2, p), mod(y, p)});
  }
};

std::mutex g_winter_mutex;

const HeisenbergContext& heisenberg_context_locked(long long p) {
  static std::map<long long, HeisenbergContext> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, HeisenbergContext(p)).first;
  return it->second;
}

const HeisenbergContext& heisenberg_context(long long p) {
  std::lock_guard<std::mutex> lock(g_winter_mutex);
  return heisenberg_context_locked(p);
}

// center-fixing lift of the standard action of g on P'_2/Z, if one exists:
// start from the coset-level assignment and solve a linear system mod p for
// the central correction term
std::optional<AutMap> solve_lift(const HeisenbergContext& hx, const MatGL2& g) {
  const PermGroup& grp = hx.group;
  long long p = hx.p;
  std::size_t order = grp.order();
  // coset-level assignment: d2^x1 r2^x2 d1^y -> d2^(a x1 + c x2) r2^(b x1 + d x2) d1^y
  std::vector<std::size_t> psi0(order);
  for (std::size_t i = 0; i < order; ++i) {
    auto [x1, x2, y] = hx.nf[i];
    psi0[i] = hx.from_nf(g.a * x1 + g.c * x2, g.b * x1 + g.d * x2, y);
  }
  // defect: psi0(x) psi0(y) = psi0(xy) d1^{t(x,y)}; want mu on P/Z with
  // mu(xy) - mu(x) - mu(y) = t(x,y)
  std::size_t pts = static_cast<std::size_t>(p * p);
  auto bar = [&](std::size_t i) {
    return static_cast<std::size_t>(hx.nf[i][0] + p * hx.nf[i][1]);
  };
  ModMatrix sys(static_cast<std::uint64_t>(p), pts + 1);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      Perm prod = grp.element(psi0[i]) * grp.element(psi0[j]);
      std::size_t ij = grp.index_of(grp.element(i) * grp.element(j));
      Perm diff = grp.element(psi0[ij]).inverse() * prod;
      long long t = 0;
      Perm acc = Perm::identity(grp.degree());
      while (!(acc == diff)) {
        acc = acc * hx.d1;
        ++t;
        if (t > p) throw BadParameter("winter: defect not central (internal)");
      }
      ModRow row(pts + 1, 0);
      auto add = [&](std::size_t c, long long v) {
        row[c] = static_cast<std::uint64_t>(
            mod(static_cast<long long>(row[c]) + v, p));
      };
      add(bar(ij), 1);
      add(bar(i), -1);
      add(bar(j), -1);
      add(pts, -t);  // augmented column
      bool nz = false;
      for (auto v : row) nz |= v != 0;
      if (nz) sys.rows.push_back(std::move(row));
    }
  {
    ModRow row(pts + 1, 0);
    row[0] = 1;  // mu(identity coset) = 0
    sys.rows.push_back(std::move(row));
  }
  // solve sys-as-columns: find mu with mu . A = b; transpose formulation:
  // unknown row vector (mu, 1): we search kernel rows of the transposed
  // system whose last coordinate is a unit
  ModMatrix tr(static_cast<std::uint64_t>(p), sys.rows.size());
  tr.rows.assign(pts + 1, ModRow(sys.rows.size(), 0));
  for (std::size_t e = 0; e < sys.rows.size(); ++e)
    for (std::size_t c = 0; c <= pts; ++c) tr.rows[c][e] = sys.rows[e][c];
  HowellBasis ker = kernel(tr);
  for (const ModRow& krow : ker.rows) {
    if (krow[pts] == 0) continue;
    // scale so the last coordinate is 1 (p prime: any nonzero is a unit)
    long long inv = 1;
    while (mod(inv * static_cast<long long>(krow[pts]), p) != 1) ++inv;
    std::vector<long long> mu(pts);
    for (std::size_t c = 0; c < pts; ++c)
      mu[c] = mod(static_cast<long long>(krow[c]) * inv, p);
    // mu solves mu(xy)-mu(x)-mu(y) = t, so psi(x) = psi0(x) d1^{mu(xbar)}
    AutMap m{std::make_shared<PermGroup>(grp), std::vector<std::size_t>(order)};
    for (std::size_t i = 0; i < order; ++i) {
      Perm img = grp.element(psi0[i]) * pow(hx.d1, mu[bar(i)]);
      m.images[i] = grp.index_of(img);
    }
    if (m.is_homomorphism()) return m;
  }
  return std::nullopt;
}

// induced matrix of a center-fixing automorphism on P/Z in the (d2, r2) basis
MatGL2 induced_matrix(const HeisenbergContext& hx, const AutMap& m) {
  auto cls = [&](const Perm& x) {
    auto [x1, x2, y] = hx.nf[hx.group.index_of(x)];
    (void)y;
    return std::pair<long long, long long>{x1, x2};
  };
  auto [a, b] = cls(m.apply(hx.d2));
  auto [c, d] = cls(m.apply(hx.r2));
  return MatGL2::make(a, b, c, d, hx.p);
}

// section of SL_2(F_p) -> Aut(P'_2)^o for the whole group, cached per prime
struct WinterSection {
  std::map<std::array<long long, 4>, AutMap> lift_of;
};

const WinterSection& winter_section(long long p) {
  std::lock_guard<std::mutex> lock(g_winter_mutex);
  static std::map<long long, WinterSection> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;

  const HeisenbergContext& hx = heisenberg_context_locked(p);
  MatGL2 s = MatGL2::make(0, -1, 1, 0, p);
  MatGL2 t = MatGL2::make(1, 1, 0, 1, p);
  auto ls = solve_lift(hx, s);
  auto lt = solve_lift(hx, t);
  if (!ls || !lt) throw NoLiftFound("winter: no lift for SL2 generators");

  // candidates per generator differ by inner automorphisms; pick the pair
  // that closes to a subgroup of order |SL2(F_p)|
  auto ad = [&](std::size_t rep_idx) {
    const Perm& h = hx.group.element(rep_idx);
    AutMap m{ls->base, std::vector<std::size_t>(hx.group.order())};
    for (std::size_t i = 0; i < hx.group.order(); ++i)
      m.images[i] = hx.group.index_of(conjugate(h, hx.group.element(i)));
    return m;
  };
  std::vector<AutMap> cand_s, cand_t;
  for (long long x1 = 0; x1 < p; ++x1)
    for (long long x2 = 0; x2 < p; ++x2) {
      std::size_t rep = hx.from_nf(x1, x2, 0);
      cand_s.push_back(ls->then(ad(rep)));
      cand_t.push_back(lt->then(ad(rep)));
    }
  std::uint64_t sl2_order =
      static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p * p - 1);
  int deg = static_cast<int>(hx.group.order());
  auto as_perm = [&](const AutMap& m) {
    std::vector<int> im(m.images.begin(), m.images.end());
    return Perm(std::move(im));
  };
  for (const AutMap& cs : cand_s)
    for (const AutMap& ct : cand_t) {
      PermGroup sub;
      try {
        sub = PermGroup::close({as_perm(cs), as_perm(ct)}, deg, sl2_order);
      } catch (const CapExceeded&) {
        continue;
      }
      if (sub.order() != sl2_order) continue;
      // the section: each element corresponds to its induced matrix
      WinterSection sec;
      for (const Perm& q : sub.elements()) {
        AutMap m{cs.base, std::vector<std::size_t>(q.images().begin(),
                                                   q.images().end())};
        MatGL2 ind = induced_matrix(hx, m);
        if (ind.det() != 1)
          throw NoLiftFound("winter: section leaked out of SL2 (internal)");
        sec.lift_of.emplace(ind.entries(), std::move(m));
      }
      if (sec.lift_of.size() != sl2_order)
        throw NoLiftFound("winter: section not a bijection (internal)");
      auto it2 = cache.emplace(p, std::move(sec)).first;
      return it2->second;
    }
  throw NoLiftFound("winter: no multiplicative section found");
}

}  // namespace

AutMap winter_lift(long long p, const MatGL2& g) {
  require_prime(p);
  if (p == 2) throw BadParameter("winter_lift needs odd p");
  if (g.det() != 1) throw BadParameter("winter_lift: det(g) must be 1");
  const WinterSection& sec = winter_section(p);
  auto it = sec.lift_of.find(MatGL2::make(g.a, g.b, g.c, g.d, p).entries());
  if (it == sec.lift_of.end())
    throw NoLiftFound("winter_lift: matrix not covered by the section");
  return it->second;
}

bool winter_liftable(long long p, const MatGL2& g) {
  const HeisenbergContext& hx = heisenberg_context(p);
  return solve_lift(hx, g).has_value();
}

CentralExtension build_heisenberg_cover(long long p,
                                        std::vector<MatGL2> matgens,
                                        std::uint64_t cap) {
  require_prime(p);
  if (p == 2) throw BadParameter("heisenberg cover needs odd p");
  for (const MatGL2& m : matgens)
    if (m.det() != 1) throw BadParameter("matgens must lie in SL2(F_p)");
  const HeisenbergContext& hx = heisenberg_context(p);
  const PermGroup& pg = hx.group;
  std::size_t np = pg.order();

  std::vector<AutMap> lifts;
  for (const MatGL2& m : matgens) lifts.push_back(winter_lift(p, m));

  // G-dagger as a matrix group
  std::vector<MatGL2> mat_els;
  {
    std::set<std::array<long long, 4>> seen;
    std::vector<MatGL2> frontier{MatGL2::make(1, 0, 0, 1, p)};
    seen.insert(frontier[0].entries());
    while (!frontier.empty()) {
      std::vector<MatGL2> next;
      for (const MatGL2& x : frontier)
        for (const MatGL2& m : matgens) {
          MatGL2 y = x * m;
          if (seen.insert(y.entries()).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    for (auto& e : seen) mat_els.push_back(MatGL2{e[0], e[1], e[2], e[3], p});
  }

  // candidate core-free subgroups V x| G-dagger with V <= P'_2 lift-stable
  // and V cap Z = 1; larger V means smaller permutation degree. Core-freeness
  // is certified afterwards by the order of the coset action's image.
  PermGroup zp = center(pg);
  std::vector<const PermGroup*> candidates;
  std::vector<PermGroup> subs = all_subgroups(pg);
  for (const PermGroup& v : subs) {
    if (intersection(v, zp).order() != 1) continue;
    bool stable = true;
    for (const AutMap& l : lifts) {
      for (const Perm& x : v.elements())
        if (!v.contains(l.apply(x))) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (stable) candidates.push_back(&v);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const PermGroup* a, const PermGroup* b) {
              if (a->order() != b->order()) return a->order() > b->order();
              return a->elements() < b->elements();
            });

  std::uint64_t expected_order =
      np * static_cast<std::uint64_t>(mat_els.size());
  std::optional<PermGroup> total;
  std::optional<PermGroup> kern;
  std::vector<Perm> total_gens;
  for (const PermGroup* vptr : candidates) {
    const PermGroup& v = *vptr;
    std::uint64_t vorder = v.order();
    std::size_t ncos = np / vorder;
    std::vector<std::size_t> coset_of(np);
    std::vector<std::size_t> coset_rep;
    std::vector<char> used(np, 0);
    for (std::size_t i = 0; i < np; ++i) {
      if (used[i]) continue;
      std::size_t ci = coset_rep.size();
      coset_rep.push_back(i);
      for (const Perm& vv : v.elements()) {
        std::size_t j = pg.index_of(pg.element(i) * vv);
        used[j] = 1;
        coset_of[j] = ci;
      }
    }
    if (coset_rep.size() != ncos) continue;

    int deg = static_cast<int>(ncos);
    auto act_left = [&](const Perm& x) {
      std::vector<int> im(ncos);
      for (std::size_t c = 0; c < ncos; ++c)
        im[c] = static_cast<int>(
            coset_of[pg.index_of(x * pg.element(coset_rep[c]))]);
      return Perm(std::move(im));
    };
    auto act_lift = [&](const AutMap& l) {
      std::vector<int> im(ncos);
      for (std::size_t c = 0; c < ncos; ++c)
        im[c] = static_cast<int>(coset_of[l.images[coset_rep[c]]]);
      return Perm(std::move(im));
    };

    std::vector<Perm> gens;
    gens.push_back(act_left(hx.d2));
    gens.push_back(act_left(hx.r2));
    for (const AutMap& l : lifts) gens.push_back(act_lift(l));
    PermGroup t = PermGroup::close(gens, deg, cap);
    if (t.order() != expected_order) continue;  // action not faithful
    total = std::move(t);
    kern = PermGroup::close({act_left(hx.d1)}, deg);
    total_gens = std::move(gens);
    break;
  }
  if (!total)
    throw BadParameter("heisenberg cover: no faithful coset action found");

  // projection onto the standard semidirect product on p^2 points:
  // d2 -> translation (1,0), r2 -> translation (0,1), lift -> matrix perm
  SemidirectStd base = build_semidirect_std(p, matgens);
  std::vector<Perm> images{gen_rho2(p), gen_rho1(p)};
  for (const MatGL2& m : matgens) images.push_back(mat_to_perm(m));
  GroupHom proj(*total, total_gens, images, base.group);

  GrFlag flag = mat_els.size() ==
                        static_cast<std::size_t>(p) *
                            static_cast<std::size_t>(p * p - 1)
                    ? GrFlag::ProvedInPaper
                    : GrFlag::Unverified;
  return CentralExtension{std::move(*total), std::move(*kern),
                          std::move(proj), flag};
}

}  // namespace knot
