#include "knot/cohom.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

namespace knot {

namespace {

std::uint64_t umod(long long v, std::uint64_t n) {
  long long m = v % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  return static_cast<std::uint64_t>(m);
}

std::vector<std::uint64_t> reduce_flat(const IntMat& a, std::uint64_t n) {
  std::size_t r = a.size();
  std::vector<std::uint64_t> out(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i * r + j] = umod(a[i][j], n);
  return out;
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// run fn(i) for i in [0, count), possibly on several threads
template <typename F>
void parallel_for(std::size_t count, int jobs, F fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(width);
  for (std::size_t t = 0; t < width; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += width) fn(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

// -- cocycle machinery --------------------------------------------------------

CocycleSpace build_cocycle_space(const PermGroup& g,
                                 const std::vector<IntMat>& gen_mats,
                                 std::uint64_t n) {
  CocycleSpace sp;
  sp.group = g;
  sp.n = n;
  sp.k = static_cast<int>(g.generators().size());
  sp.r = gen_mats.empty() ? 0 : static_cast<int>(gen_mats[0].size());
  sp.kr = static_cast<std::size_t>(sp.k) * static_cast<std::size_t>(sp.r);
  std::size_t r = static_cast<std::size_t>(sp.r);
  std::size_t order = g.order();

  std::vector<std::vector<std::uint64_t>> gm;
  for (const IntMat& a : gen_mats) gm.push_back(reduce_flat(a, n));

  sp.act.assign(order, {});
  sp.lmap.assign(order, {});
  std::size_t id = g.index_of(Perm::identity(g.degree()));
  sp.act[id].assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) sp.act[id][i * r + i] = 1 % n;
  sp.lmap[id].assign(r * sp.kr, 0);

  std::vector<ModRow> constraints;
  std::deque<std::size_t> todo{id};
  std::vector<char> seen(order, 0);
  seen[id] = 1;
  while (!todo.empty()) {
    std::size_t xi = todo.front();
    todo.pop_front();
    const auto& ax = sp.act[xi];
    for (int s = 0; s < sp.k; ++s) {
      std::size_t yi = g.index_of(g.element(xi) * g.generators()[s]);
      // candidate L_{xs} = L_x + act(x) E_s  (E_s selects block s)
      std::vector<std::uint64_t> cand(sp.lmap[xi]);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          std::uint64_t v = ax[i * r + j];
          if (v)
            cand[i * sp.kr + static_cast<std::size_t>(s) * r + j] =
                (cand[i * sp.kr + static_cast<std::size_t>(s) * r + j] + v) % n;
        }
      if (!seen[yi]) {
        seen[yi] = 1;
        sp.lmap[yi] = std::move(cand);
        // act(y) = act(x) act(s)
        std::vector<std::uint64_t> ay(r * r, 0);
        const auto& as = gm[static_cast<std::size_t>(s)];
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t t = 0; t < r; ++t) {
            std::uint64_t v = ax[i * r + t];
            if (v)
              for (std::size_t j = 0; j < r; ++j)
                ay[i * r + j] = (ay[i * r + j] + v * as[t * r + j]) % n;
          }
        sp.act[yi] = std::move(ay);
        todo.push_back(yi);
      } else {
        // action consistency on the non-tree edge certifies the module
        const auto& ay = sp.act[yi];
        const auto& as = gm[static_cast<std::size_t>(s)];
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t v = 0;
            for (std::size_t t = 0; t < r; ++t)
              v = (v + ax[i * r + t] * as[t * r + j]) % n;
            if (v != ay[i * r + j])
              throw BadParameter("module action is not a homomorphism");
          }
        for (std::size_t i = 0; i < r; ++i) {
          ModRow row(sp.kr, 0);
          bool nz = false;
          for (std::size_t j = 0; j < sp.kr; ++j) {
            row[j] = (sp.lmap[yi][i * sp.kr + j] + n -
                      cand[i * sp.kr + j]) % n;
            nz |= row[j] != 0;
          }
          if (nz) constraints.push_back(std::move(row));
        }
      }
    }
  }

  // Z^1 = kernel of the constraint pairing
  if (constraints.empty()) {
    HowellBasis full;
    full.n = n;
    full.cols = sp.kr;
    for (std::size_t i = 0; i < sp.kr; ++i) {
      ModRow e(sp.kr, 0);
      e[i] = 1 % n;
      full.rows.push_back(std::move(e));
    }
    sp.z1 = howell_of_rows(n, sp.kr, full.rows);
  } else {
    ModMatrix m(n, constraints.size());
    m.rows.assign(sp.kr, ModRow(constraints.size(), 0));
    for (std::size_t c = 0; c < constraints.size(); ++c)
      for (std::size_t j = 0; j < sp.kr; ++j) m.rows[j][c] = constraints[c][j];
    sp.z1 = kernel(m);
  }

  // coboundaries u_a for a = basis vectors: f_a(s) = act(s) a - a
  for (std::size_t i = 0; i < r; ++i) {
    ModRow row(sp.kr, 0);
    for (int s = 0; s < sp.k; ++s) {
      const auto& as = gm[static_cast<std::size_t>(s)];
      for (std::size_t t = 0; t < r; ++t) {
        std::uint64_t v = as[t * r + i];
        if (t == i) v = (v + n - 1 % n) % n;
        row[static_cast<std::size_t>(s) * r + t] = v;
      }
    }
    sp.coboundaries.push_back(std::move(row));
  }
  return sp;
}

ModRow CocycleSpace::evaluate(const ModRow& u, std::size_t element_index) const {
  std::size_t rr = static_cast<std::size_t>(r);
  ModRow out(rr, 0);
  const auto& lm = lmap[element_index];
  for (std::size_t i = 0; i < rr; ++i) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < kr; ++j) v = (v + lm[i * kr + j] * u[j]) % n;
    out[i] = v;
  }
  return out;
}

ModRow CocycleSpace::evaluate(const ModRow& u, const Perm& g) const {
  return evaluate(u, group.index_of(g));
}

bool CocycleSpace::is_cocycle_all_pairs(const ModRow& u) const {
  std::size_t rr = static_cast<std::size_t>(r);
  std::vector<ModRow> vals(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) vals[i] = evaluate(u, i);
  for (std::size_t i = 0; i < group.order(); ++i)
    for (std::size_t j = 0; j < group.order(); ++j) {
      std::size_t ij = group.index_of(group.element(i) * group.element(j));
      for (std::size_t t = 0; t < rr; ++t) {
        std::uint64_t v = vals[i][t];
        for (std::size_t w = 0; w < rr; ++w)
          v = (v + act[i][t * rr + w] * vals[j][w]) % n;
        if (v != vals[ij][t]) return false;
      }
    }
  return true;
}

std::vector<ModRow> CohGroup::class_representatives() const {
  std::vector<ModRow> out;
  for (const ModRow& u : numerator.rows)
    if (!denominator.contains(u)) out.push_back(u);
  return out;
}

bool CohGroup::same_class(const ModRow& u, const ModRow& v) const {
  ModRow d(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    d[i] = (u[i] + modulus - v[i] % modulus) % modulus;
  return denominator.contains(d);
}

// -- H^1 / H^2 ---------------------------------------------------------------

CohGroup h1_finite(const FinGModule& a) {
  CohGroup out;
  out.description = "H^1(G, A)";
  out.modulus = a.modulus();
  auto sp = std::make_shared<CocycleSpace>(
      build_cocycle_space(a.group(), a.generator_action(), a.modulus()));
  out.numerator = sp->z1;
  out.denominator = howell_of_rows(sp->n, sp->kr, sp->coboundaries);
  out.invariants = quotient_invariants(out.numerator, out.denominator);
  out.space = std::move(sp);
  return out;
}

namespace {

// shift module Q = Map(G, A)/A with A embedded by v -> (x -> x.v);
// coordinates (x, i) for x != 1, and e_{1,i} rewritten through the relation
std::vector<IntMat> shift_module_mats(const PermGroup& g,
                                      const std::vector<IntMat>& gen_mats,
                                      std::uint64_t n,
                                      std::vector<std::size_t>& pos_out,
                                      std::size_t& rq_out) {
  std::size_t order = g.order();
  std::size_t r = gen_mats.empty() ? 1 : gen_mats[0].size();
  // per-element action of A (mod n), needed for the rewrite row
  CocycleSpace tmp = build_cocycle_space(g, gen_mats, n);
  std::size_t id = g.index_of(Perm::identity(g.degree()));
  std::vector<std::size_t> pos(order, static_cast<std::size_t>(-1));
  std::size_t q = 0;
  for (std::size_t i = 0; i < order; ++i)
    if (i != id) pos[i] = q++;
  std::size_t rq = q * r;

  std::vector<IntMat> mats;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    Perm sinv = g.generators()[s].inverse();
    IntMat b(rq, std::vector<long long>(rq, 0));
    for (std::size_t xi = 0; xi < order; ++xi) {
      if (xi == id) continue;
      std::size_t yi = g.index_of(g.element(xi) * sinv);
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t col = pos[xi] * r + i;
        if (yi != id) {
          b[pos[yi] * r + i][col] += 1;
        } else {
          // e_{1,i} = -sum_{z != 1} sum_j act(z)[j][i] e_{z,j}
          for (std::size_t zi = 0; zi < order; ++zi) {
            if (zi == id) continue;
            for (std::size_t j = 0; j < r; ++j) {
              long long v = static_cast<long long>(tmp.act[zi][j * r + i]);
              if (v)
                b[pos[zi] * r + j][col] -= v;
            }
          }
        }
      }
    }
    mats.push_back(std::move(b));
  }
  pos_out = std::move(pos);
  rq_out = rq;
  return mats;
}

}  // namespace

CohGroup h2_finite(const FinGModule& a) {
  const PermGroup& g = a.group();
  std::uint64_t n = a.modulus();
  std::vector<std::size_t> pos;
  std::size_t rq = 0;
  std::vector<IntMat> qmats = shift_module_mats(g, a.generator_action(), n,
                                                pos, rq);
  CohGroup out;
  out.description = "H^2(G, A) via shift";
  out.modulus = n;
  auto sp = std::make_shared<CocycleSpace>(build_cocycle_space(g, qmats, n));
  out.numerator = sp->z1;
  out.denominator = howell_of_rows(sp->n, sp->kr, sp->coboundaries);
  out.invariants = quotient_invariants(out.numerator, out.denominator);
  out.space = std::move(sp);
  return out;
}

namespace {

// generator values of the connecting cocycles coming from (M/fixedM)^D,
// reduced into Z/n_out: lift m, send s -> (act(s) m - m)/fixed
std::vector<ModRow> partial_image_rows(const GLattice& m,
                                       const PermGroup& ambient,
                                       const std::vector<Perm>& gens,
                                       std::uint64_t fixed_modulus,
                                       std::uint64_t n_out) {
  std::size_t r = static_cast<std::size_t>(m.rank());
  // (M/fixedM)^D: kernel of stacked (act(s)^T - I) over Z/fixed
  std::vector<ModRow> cols;
  for (const Perm& s : gens) {
    const IntMat& as = m.action_of(s);
    for (std::size_t i = 0; i < r; ++i) {
      ModRow col(r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        long long v = as[i][j] - (i == j ? 1 : 0);
        col[j] = umod(v, fixed_modulus);
      }
      cols.push_back(std::move(col));
    }
  }
  ModMatrix sys(fixed_modulus, cols.size());
  sys.rows.assign(r, ModRow(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t j = 0; j < r; ++j) sys.rows[j][c] = cols[c][j];
  HowellBasis fixed = kernel(sys);

  std::vector<ModRow> rows;
  for (const ModRow& mbar : fixed.rows) {
    std::vector<long long> lift(mbar.begin(), mbar.end());
    ModRow row(gens.size() * r, 0);
    bool ok = true;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::vector<long long> am = int_apply(m.action_of(gens[s]), lift);
      for (std::size_t i = 0; i < r; ++i) {
        long long diff = am[i] - lift[i];
        if (diff % static_cast<long long>(fixed_modulus)) {
          ok = false;
          break;
        }
        row[s * r + i] =
            umod(diff / static_cast<long long>(fixed_modulus), n_out);
      }
      if (!ok) break;
    }
    if (!ok) throw BadParameter("connecting map: fixed vector did not lift");
    rows.push_back(std::move(row));
  }
  (void)ambient;
  return rows;
}

CohGroup h2_lattice_impl(const GLattice& m, std::uint64_t n_out,
                         std::uint64_t fixed_modulus) {
  const PermGroup& g = m.group();
  CohGroup out;
  out.description = "H^2(G, M) via coefficient reduction";
  out.modulus = n_out;
  auto sp = std::make_shared<CocycleSpace>(
      build_cocycle_space(g, m.generator_action(), n_out));
  std::vector<ModRow> den = sp->coboundaries;
  for (ModRow& row : partial_image_rows(m, g, g.generators(), fixed_modulus,
                                        n_out)) {
    // the connecting cocycles must satisfy the cocycle constraints
    if (!sp->z1.contains(row))
      throw BadParameter("connecting cocycle failed validation");
    den.push_back(std::move(row));
  }
  out.numerator = sp->z1;
  out.denominator = howell_of_rows(n_out, sp->kr, den);
  out.invariants = quotient_invariants(out.numerator, out.denominator);
  out.space = std::move(sp);
  out.lattice = std::make_shared<GLattice>(m);
  return out;
}

}  // namespace

CohGroup h2_lattice(const GLattice& m) {
  std::uint64_t n = m.group().order();
  if (n == 1) {
    CohGroup out;
    out.description = "H^2(trivial group)";
    out.modulus = 1;
    return out;
  }
  return h2_lattice_impl(m, n, n);
}

CohGroup h2_lattice_at(const GLattice& m, std::uint64_t n) {
  if (n % m.group().order())
    throw BadParameter("modulus must be a multiple of |G|");
  return h2_lattice_impl(m, n, n);
}

// -- tate oracle --------------------------------------------------------------

namespace {

// echelon basis of the row lattice, unimodular row operations only
std::vector<std::vector<long long>> int_echelon(
    std::vector<std::vector<long long>> rows, std::size_t cols) {
  std::vector<std::vector<long long>> basis;
  auto insert_row = [&](std::vector<long long> r) {
    for (;;) {
      std::size_t c = 0;
      while (c < cols && r[c] == 0) ++c;
      if (c == cols) return;
      // find existing basis row with this pivot column
      std::size_t bi = basis.size();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t bc = 0;
        while (bc < cols && basis[i][bc] == 0) ++bc;
        if (bc == c) {
          bi = i;
          break;
        }
      }
      if (bi == basis.size()) {
        if (r[c] < 0)
          for (auto& v : r) v = -v;
        basis.push_back(std::move(r));
        return;
      }
      long long a = basis[bi][c], b = r[c];
      if (b % a == 0) {
        long long q = b / a;
        for (std::size_t j = c; j < cols; ++j) r[j] -= q * basis[bi][j];
      } else {
        // gcd combine (unimodular 2x2)
        long long x, y;
        std::function<long long(long long, long long, long long&, long long&)>
            eg = [&](long long aa, long long bb, long long& xx,
                     long long& yy) -> long long {
          if (bb == 0) {
            xx = 1;
            yy = 0;
            return aa;
          }
          long long x1, y1;
          long long gg = eg(bb, aa % bb, x1, y1);
          xx = y1;
          yy = x1 - (aa / bb) * y1;
          return gg;
        };
        long long gg = eg(a, b, x, y);
        std::vector<long long> comb(cols, 0), rest(cols, 0);
        for (std::size_t j = 0; j < cols; ++j) {
          comb[j] = x * basis[bi][j] + y * r[j];
          rest[j] = (a / gg) * r[j] - (b / gg) * basis[bi][j];
        }
        basis[bi] = std::move(comb);
        r = std::move(rest);
      }
    }
  };
  for (auto& r : rows) insert_row(std::move(r));
  std::sort(basis.begin(), basis.end(),
            [&](const std::vector<long long>& a,
                const std::vector<long long>& b) {
              std::size_t ca = 0, cb = 0;
              while (ca < cols && a[ca] == 0) ++ca;
              while (cb < cols && b[cb] == 0) ++cb;
              return ca < cb;
            });
  return basis;
}

// solve alpha . basis = t for an echelon lattice basis; t must lie in the
// lattice
std::optional<std::vector<long long>> int_solve_echelon(
    const std::vector<std::vector<long long>>& basis, std::size_t cols,
    std::vector<long long> t) {
  std::vector<long long> alpha(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t c = 0;
    while (c < cols && basis[i][c] == 0) ++c;
    if (t[c] % basis[i][c]) return std::nullopt;
    long long q = t[c] / basis[i][c];
    alpha[i] = q;
    if (q)
      for (std::size_t j = c; j < cols; ++j) t[j] -= q * basis[i][j];
  }
  for (long long v : t)
    if (v) return std::nullopt;
  return alpha;
}

}  // namespace

AbelianInvariants h2_cyclic_tate(const PermGroup& c, const GLattice& m) {
  // find a generator
  const Perm* gen = nullptr;
  for (const Perm& x : c.elements())
    if (static_cast<std::uint64_t>(perm_order(x)) == c.order()) {
      gen = &x;
      break;
    }
  if (!gen) throw NotCyclic("h2_cyclic_tate: group is not cyclic");
  std::uint64_t ord = c.order();
  if (ord == 1) return {};
  std::size_t r = static_cast<std::size_t>(m.rank());
  const IntMat& a = m.action_of(*gen);

  // M^C = kernel of (A - I) on columns: rows x with x (A - I)^T = 0
  std::vector<std::vector<long long>> ai_t(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      ai_t[j][i] = a[i][j] - (i == j ? 1 : 0);
  // kernel via echelon of [ai_t | I]
  std::vector<std::vector<long long>> aug;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long long> row(2 * r, 0);
    for (std::size_t j = 0; j < r; ++j) row[j] = ai_t[i][j];
    row[r + i] = 1;
    aug.push_back(std::move(row));
  }
  auto ech = int_echelon(std::move(aug), 2 * r);
  std::vector<std::vector<long long>> kbasis;
  for (const auto& row : ech) {
    bool zero = true;
    for (std::size_t j = 0; j < r; ++j)
      if (row[j]) {
        zero = false;
        break;
      }
    if (zero)
      kbasis.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(r),
                          row.end());
  }
  if (kbasis.empty()) return {};
  auto kech = int_echelon(kbasis, r);

  // norm N = sum A^i; its columns generate N_C M
  IntMat npow = int_identity(r);
  IntMat norm(r, std::vector<long long>(r, 0));
  for (std::uint64_t i = 0; i < ord; ++i) {
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) norm[x][y] += npow[x][y];
    npow = int_mul(npow, a);
  }
  std::vector<std::vector<long long>> rel;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<long long> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = norm[i][j];
    auto alpha = int_solve_echelon(kech, r, std::move(col));
    if (!alpha)
      throw BadParameter("tate: norm image escaped the fixed lattice");
    rel.push_back(std::move(*alpha));
  }
  // |C| kills the quotient, so adjoin ord * I
  for (std::size_t i = 0; i < kech.size(); ++i) {
    std::vector<long long> row(kech.size(), 0);
    row[i] = static_cast<long long>(ord);
    rel.push_back(std::move(row));
  }
  AbelianInvariants inv;
  inv.factors = smith_invariants(std::move(rel), kech.size());
  return inv;
}

// -- restrictions and sha -----------------------------------------------------

SubgroupH2 subgroup_h2(const GLattice& m, const PermGroup& d, std::uint64_t n,
                       std::uint64_t fixed_modulus) {
  if (!is_subgroup(m.group(), d))
    throw NotSubgroup("subgroup_h2: D is not a subgroup of G");
  SubgroupH2 out;
  out.subgroup = d;
  std::vector<IntMat> dmats;
  for (const Perm& s : d.generators()) dmats.push_back(m.action_of(s));
  out.space = build_cocycle_space(d, dmats, n);
  std::vector<ModRow> den = out.space.coboundaries;
  for (ModRow& row : partial_image_rows(m, m.group(), d.generators(),
                                        fixed_modulus, n))
    den.push_back(std::move(row));
  out.denominator = howell_of_rows(n, out.space.kr, den);
  return out;
}

RestrictedClass restrict_class(const CohGroup& h2, const ModRow& u,
                               const SubgroupH2& d) {
  if (!h2.space) throw BadParameter("restrict_class: class has no machinery");
  RestrictedClass out;
  out.u.resize(d.space.kr, 0);
  std::size_t r = static_cast<std::size_t>(h2.space->r);
  for (std::size_t s = 0; s < d.subgroup.generators().size(); ++s) {
    ModRow val = h2.space->evaluate(u, d.subgroup.generators()[s]);
    for (std::size_t i = 0; i < r; ++i) out.u[s * r + i] = val[i];
  }
  out.zero = d.denominator.contains(out.u);
  return out;
}

DecompositionSet DecompositionSet::admissible_closure(
    const PermGroup& g, std::vector<PermGroup> members) {
  DecompositionSet out;
  out.input_count_ = members.size();
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> work;
  for (PermGroup& d : members) {
    if (!is_subgroup(g, d))
      throw NotSubgroup("decomposition set member is not a subgroup");
    if (seen.insert(d.elements()).second) work.push_back(std::move(d));
  }
  std::size_t dedup_inputs = work.size();
  // adjoin all cyclic subgroups
  for (PermGroup& c : cyclic_subgroups(g))
    if (seen.insert(c.elements()).second) work.push_back(std::move(c));
  // close under conjugation
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const Perm& x : g.elements()) {
      PermGroup conj = conjugate_subgroup(work[i], x);
      if (seen.insert(conj.elements()).second) work.push_back(std::move(conj));
    }
  out.extended_ = work.size() != dedup_inputs;
  std::sort(work.begin(), work.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  out.members_ = std::move(work);
  return out;
}

DecompositionSet DecompositionSet::all_cyclic(const PermGroup& g) {
  DecompositionSet out;
  out.members_ = cyclic_subgroups(g);
  std::sort(out.members_.begin(), out.members_.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  return out;
}

namespace {

struct FastPlan {
  std::uint64_t n_out;
  std::uint64_t fixed_modulus;
};

FastPlan plan_moduli(const GLattice& m, const CohOptions& opts) {
  std::uint64_t n = m.group().order();
  FastPlan plan{n, n};
  if (!opts.fast_p_part || !m.chevalley()) return plan;
  // index (G:H) must be a prime power p^k; then Sha is p^k-torsion and the
  // whole computation may run mod p^{v_p(n)}
  std::uint64_t index = static_cast<std::uint64_t>(m.rank()) + 1;
  std::uint64_t p = 0;
  for (std::uint64_t q = 2; q * q <= index; ++q)
    if (index % q == 0) {
      p = q;
      break;
    }
  if (p == 0) p = index;
  std::uint64_t t = index;
  while (t % p == 0) t /= p;
  if (t != 1 || index < 2) return plan;
  std::uint64_t np = 1;
  std::uint64_t rest = n;
  while (rest % p == 0) {
    rest /= p;
    np *= p;
  }
  if (np >= 2) plan.n_out = np;
  return plan;
}

}  // namespace

CohGroup sha2(const GLattice& m, const DecompositionSet& ds,
              const CohOptions& opts) {
  const PermGroup& g = m.group();
  std::uint64_t n = g.order();
  if (n == 1) {
    CohGroup out;
    out.description = "Sha^2 (trivial group)";
    out.modulus = 1;
    return out;
  }
  FastPlan plan = plan_moduli(m, opts);

  // assemble the member list, applying the Chevalley-module reductions
  std::vector<PermGroup> members;
  bool is_chev = m.chevalley().has_value();
  if (is_chev && opts.stabilizer_reduction) {
    const PermGroup& h = *m.chevalley()->stabilizer;
    std::set<std::vector<Perm>> seen;
    for (PermGroup& c : cyclic_subgroups(h))
      if (seen.insert(c.elements()).second) members.push_back(std::move(c));
    for (const PermGroup& d : ds.members()) {
      bool cyclic = false;
      for (const Perm& x : d.elements())
        if (static_cast<std::uint64_t>(perm_order(x)) == d.order()) {
          cyclic = true;
          break;
        }
      if (!cyclic && seen.insert(d.elements()).second) members.push_back(d);
    }
  } else {
    members = ds.members();
  }

  if (is_chev && opts.sylow_reduction) {
    // valid for transitive prime-power degree with H a point stabilizer
    std::uint64_t deg = static_cast<std::uint64_t>(g.degree());
    std::uint64_t p = 2;
    while (deg % p) ++p;
    std::uint64_t t = deg;
    while (t % p == 0) t /= p;
    bool applies = t == 1 && is_prime_ll(static_cast<long long>(p)) &&
                   is_transitive(g);
    if (applies) {
      const PermGroup& h = *m.chevalley()->stabilizer;
      bool h_is_stab = false;
      for (int pt = 0; pt < g.degree() && !h_is_stab; ++pt) {
        bool fixes = true;
        for (const Perm& x : h.generators())
          if (x(pt) != pt) {
            fixes = false;
            break;
          }
        if (fixes && point_stabilizer(g, pt).same_elements(h)) h_is_stab = true;
      }
      if (h_is_stab) {
        std::set<std::vector<Perm>> seen;
        std::vector<PermGroup> reduced;
        for (const PermGroup& d : members) {
          PermGroup s = sylow_p(d, static_cast<long long>(p));
          if (seen.insert(s.elements()).second) reduced.push_back(std::move(s));
        }
        members = std::move(reduced);
      }
    }
  }

  // drop trivial members and duplicates
  {
    std::set<std::vector<Perm>> seen;
    std::vector<PermGroup> uniq;
    for (PermGroup& d : members)
      if (d.order() > 1 && seen.insert(d.elements()).second)
        uniq.push_back(std::move(d));
    members = std::move(uniq);
  }

  std::uint64_t n_out = plan.n_out;
  auto sp = std::make_shared<CocycleSpace>(
      build_cocycle_space(g, m.generator_action(), n_out));

  // restriction conditions, one block per member
  std::vector<std::vector<ModRow>> blocks(members.size());
  parallel_for(members.size(), opts.jobs, [&](std::size_t di) {
    const PermGroup& d = members[di];
    SubgroupH2 sub = subgroup_h2(m, d, n_out, plan.fixed_modulus);
    HowellBasis ann = annihilator(sub.denominator);
    std::size_t r = static_cast<std::size_t>(sp->r);
    // T_D: stacked L_t for D's generators; conditions (T_D^T w) . u = 0
    std::vector<const std::vector<std::uint64_t>*> lts;
    for (const Perm& t : d.generators())
      lts.push_back(&sp->lmap[g.index_of(t)]);
    for (const ModRow& w : ann.rows) {
      ModRow cond(sp->kr, 0);
      bool nz = false;
      for (std::size_t s = 0; s < lts.size(); ++s)
        for (std::size_t i = 0; i < r; ++i) {
          std::uint64_t wv = w[s * r + i];
          if (!wv) continue;
          const auto& lm = *lts[s];
          for (std::size_t j = 0; j < sp->kr; ++j) {
            cond[j] = (cond[j] + wv * lm[i * sp->kr + j]) % n_out;
          }
        }
      for (auto v : cond) nz |= v != 0;
      if (nz) blocks[di].push_back(std::move(cond));
    }
  });

  // numerator: cocycles satisfying every restriction condition, found by
  // intersecting inside the Z^1 span
  std::vector<ModRow> conds;
  for (auto& b : blocks)
    for (auto& row : b) conds.push_back(std::move(row));

  HowellBasis numerator;
  if (conds.empty()) {
    numerator = sp->z1;
  } else {
    std::size_t z = sp->z1.rows.size();
    ModMatrix alpha_sys(n_out, conds.size());
    alpha_sys.rows.assign(z, ModRow(conds.size(), 0));
    for (std::size_t a = 0; a < z; ++a)
      for (std::size_t c = 0; c < conds.size(); ++c) {
        std::uint64_t v = 0;
        for (std::size_t j = 0; j < sp->kr; ++j)
          v = (v + sp->z1.rows[a][j] * conds[c][j]) % n_out;
        alpha_sys.rows[a][c] = v;
      }
    HowellBasis alphas = kernel(alpha_sys);
    std::vector<ModRow> rows;
    for (const ModRow& al : alphas.rows) {
      ModRow u(sp->kr, 0);
      for (std::size_t a = 0; a < z; ++a) {
        if (!al[a]) continue;
        for (std::size_t j = 0; j < sp->kr; ++j)
          u[j] = (u[j] + al[a] * sp->z1.rows[a][j]) % n_out;
      }
      rows.push_back(std::move(u));
    }
    numerator = howell_of_rows(n_out, sp->kr, rows);
  }

  std::vector<ModRow> den = sp->coboundaries;
  for (ModRow& row : partial_image_rows(m, g, g.generators(),
                                        plan.fixed_modulus, n_out))
    den.push_back(std::move(row));

  CohGroup out;
  out.description = "Sha^2_D(G, M)";
  out.modulus = n_out;
  out.numerator = std::move(numerator);
  out.denominator = howell_of_rows(n_out, sp->kr, den);
  out.invariants = quotient_invariants(out.numerator, out.denominator);
  out.space = std::move(sp);
  out.lattice = std::make_shared<GLattice>(m);
  return out;
}

CohGroup sha_omega(const PermGroup& g, const PermGroup& h,
                   const CohOptions& opts) {
  GLattice j = chevalley_lattice(g, h);
  return sha2(j, DecompositionSet::all_cyclic(g), opts);
}

// -- S^2 characters ------------------------------------------------------------

S2Result s2_character(const PermGroup& g, const PermGroup& h,
                      const PermGroup& e, const DecompositionSet& ds) {
  if (!is_subgroup(g, e) || !is_subgroup(e, h))
    throw PreconditionViolated("s2_character: need H <= E <= G");
  if (!is_abelian(e))
    throw PreconditionViolated("s2_character: E must be abelian");
  if (!is_normal(g, e))
    throw PreconditionViolated("s2_character: E must be normal in G");

  std::uint64_t ex = static_cast<std::uint64_t>(exponent(e));
  S2Result out;
  out.exponent = ex;
  std::vector<Perm> egens = e.small_generating_set();
  std::size_t kk = egens.size();

  // discrete logs of E in the chosen generators
  std::map<Perm, ModRow> dlog;
  dlog[Perm::identity(e.degree())] = ModRow(kk, 0);
  std::deque<Perm> todo{Perm::identity(e.degree())};
  while (!todo.empty()) {
    Perm x = std::move(todo.front());
    todo.pop_front();
    for (std::size_t gi = 0; gi < kk; ++gi) {
      Perm y = x * egens[gi];
      if (!dlog.count(y)) {
        ModRow v = dlog[x];
        v[gi] = (v[gi] + 1) % ex;
        dlog[y] = std::move(v);
        todo.push_back(std::move(y));
      }
    }
  }
  if (dlog.size() != e.order())
    throw PreconditionViolated("s2_character: dlog table incomplete");

  // rows representing genuine characters must kill the dlog defects
  std::vector<ModRow> constraints;
  for (const Perm& x : e.elements())
    for (const Perm& y : e.elements()) {
      const ModRow& dx = dlog.at(x);
      const ModRow& dy = dlog.at(y);
      const ModRow& dxy = dlog.at(x * y);
      ModRow defect(kk, 0);
      bool nz = false;
      for (std::size_t i = 0; i < kk; ++i) {
        defect[i] = (dx[i] + dy[i] + ex - dxy[i]) % ex;
        nz |= defect[i] != 0;
      }
      if (nz) constraints.push_back(std::move(defect));
    }

  // D_(H) = C_H plus the non-cyclic members of ds
  std::vector<PermGroup> members;
  {
    std::set<std::vector<Perm>> seen;
    for (PermGroup& c : cyclic_subgroups(h))
      if (c.order() > 1 && seen.insert(c.elements()).second)
        members.push_back(std::move(c));
    for (const PermGroup& d : ds.members()) {
      bool cyclic = false;
      for (const Perm& x : d.elements())
        if (static_cast<std::uint64_t>(perm_order(x)) == d.order()) {
          cyclic = true;
          break;
        }
      if (!cyclic && d.order() > 1 && seen.insert(d.elements()).second)
        members.push_back(d);
    }
  }

  for (const PermGroup& d : members) {
    PermGroup de = intersection(d, e);
    if (de.order() == 1) continue;
    std::vector<Perm> degens = de.small_generating_set();
    std::size_t dim = degens.size();
    // dlogs inside D cap E
    std::map<Perm, ModRow> dlog_de;
    dlog_de[Perm::identity(e.degree())] = ModRow(dim, 0);
    std::deque<Perm> bfs{Perm::identity(e.degree())};
    while (!bfs.empty()) {
      Perm x = std::move(bfs.front());
      bfs.pop_front();
      for (std::size_t gi = 0; gi < dim; ++gi) {
        Perm y = x * degens[gi];
        if (!dlog_de.count(y)) {
          ModRow v = dlog_de[x];
          v[gi] = (v[gi] + 1) % ex;
          dlog_de[y] = std::move(v);
          bfs.push_back(std::move(y));
        }
      }
    }
    // defects of the D cap E parametrization, so only genuine characters
    // survive the vanishing systems
    std::vector<ModRow> de_defects;
    for (const Perm& x : de.elements())
      for (const Perm& y : de.elements()) {
        const ModRow& dx = dlog_de.at(x);
        const ModRow& dy = dlog_de.at(y);
        const ModRow& dxy = dlog_de.at(x * y);
        ModRow defect(dim, 0);
        bool nz = false;
        for (std::size_t i = 0; i < dim; ++i) {
          defect[i] = (dx[i] + dy[i] + ex - dxy[i]) % ex;
          nz |= defect[i] != 0;
        }
        if (nz) de_defects.push_back(std::move(defect));
      }
    auto chars_vanishing_on = [&](const std::vector<Perm>& sub) {
      std::vector<ModRow> cols;
      for (const Perm& s : sub) cols.push_back(dlog_de.at(s));
      for (const ModRow& d2 : de_defects) cols.push_back(d2);
      ModMatrix sys(ex, cols.size());
      sys.rows.assign(dim, ModRow(cols.size(), 0));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < dim; ++i) sys.rows[i][c] = cols[c][i];
      return kernel(sys);
    };

    std::vector<Perm> reps = double_coset_reps(g, d, e);
    std::size_t nrep = reps.size();
    std::size_t width = dim * nrep;

    // span rows of Delta_D + I_D
    std::vector<ModRow> span_rows;
    PermGroup dder = derived_subgroup(d);
    std::vector<Perm> dder_e;
    for (const Perm& x : dder.elements())
      if (e.contains(x)) dder_e.push_back(x);
    for (const ModRow& psi : chars_vanishing_on(dder_e).rows) {
      ModRow row(width, 0);
      for (std::size_t ri = 0; ri < nrep; ++ri)
        for (std::size_t i = 0; i < dim; ++i) row[ri * dim + i] = psi[i];
      span_rows.push_back(std::move(row));
    }
    for (std::size_t ri = 0; ri < nrep; ++ri) {
      std::vector<Perm> sub;
      for (const Perm& hh : h.elements()) {
        Perm y = conjugate(reps[ri], hh);
        if (de.contains(y)) sub.push_back(y);
      }
      for (const ModRow& psi : chars_vanishing_on(sub).rows) {
        ModRow row(width, 0);
        for (std::size_t i = 0; i < dim; ++i) row[ri * dim + i] = psi[i];
        span_rows.push_back(std::move(row));
      }
    }
    HowellBasis span = howell_of_rows(ex, width, span_rows);
    HowellBasis ann = annihilator(span);

    // f -> ((f o Ad(g^-1))|_{D cap E})_g: entry (g, t) is f(g^-1 t g)
    std::vector<ModRow> lmap(width);
    for (std::size_t ri = 0; ri < nrep; ++ri) {
      Perm gi = reps[ri].inverse();
      for (std::size_t t = 0; t < dim; ++t)
        lmap[ri * dim + t] = dlog.at(gi * degens[t] * reps[ri]);
    }
    for (const ModRow& w : ann.rows) {
      ModRow cond(kk, 0);
      bool nz = false;
      for (std::size_t i = 0; i < width; ++i) {
        if (!w[i]) continue;
        for (std::size_t j = 0; j < kk; ++j)
          cond[j] = (cond[j] + w[i] * lmap[i][j]) % ex;
      }
      for (auto v : cond) nz |= v != 0;
      if (nz) constraints.push_back(std::move(cond));
    }
  }

  if (constraints.empty()) {
    std::vector<ModRow> full;
    for (std::size_t i = 0; i < kk; ++i) {
      ModRow row(kk, 0);
      row[i] = 1 % ex;
      full.push_back(std::move(row));
    }
    out.characters = howell_of_rows(ex, kk, full);
  } else {
    ModMatrix sys(ex, constraints.size());
    sys.rows.assign(kk, ModRow(constraints.size(), 0));
    for (std::size_t c = 0; c < constraints.size(); ++c)
      for (std::size_t j = 0; j < kk; ++j) sys.rows[j][c] = constraints[c][j];
    out.characters = kernel(sys);
  }
  HowellBasis zero;
  zero.n = ex;
  zero.cols = kk;
  out.invariants = quotient_invariants(out.characters, zero);
  return out;
}

// -- drakokhrust ----------------------------------------------------------------

AbelianInvariants drakokhrust_sha(const CentralExtension& ext,
                                  const PermGroup& h_in_base,
                                  bool allow_unverified) {
  if (ext.flag == GrFlag::Unverified && !allow_unverified) {
    CentralExtension copy = ext;
    if (!verify_generalized_representation(copy))
      throw UnverifiedExtension(
          "extension is not a verified generalized representation group");
    return drakokhrust_sha(copy, h_in_base, false);
  }
  const PermGroup& total = ext.total;
  PermGroup htilde = ext.projection.preimage(h_in_base);
  PermGroup gder = derived_subgroup(total);
  PermGroup hcap = intersection(htilde, gder);

  // Phi = <[h, g] : g in total, h in H~ cap g^-1 H~ g>; both h and g only
  // matter modulo the central kernel
  std::set<Perm> reps_g, reps_h;
  {
    std::set<Perm> covered;
    for (const Perm& x : total.elements()) {
      if (covered.count(x)) continue;
      reps_g.insert(x);
      for (const Perm& z : ext.kernel.elements()) covered.insert(x * z);
    }
    covered.clear();
    for (const Perm& x : htilde.elements()) {
      if (covered.count(x)) continue;
      reps_h.insert(x);
      for (const Perm& z : ext.kernel.elements()) covered.insert(x * z);
    }
  }
  std::set<Perm> commutators;
  for (const Perm& g : reps_g) {
    Perm ginv = g.inverse();
    for (const Perm& h : reps_h) {
      Perm conj = g * h * ginv;
      if (!htilde.contains(conj)) continue;
      commutators.insert(h.inverse() * conj);
    }
  }
  PermGroup phi = PermGroup::close(
      std::vector<Perm>(commutators.begin(), commutators.end()),
      total.degree(), total.order() + 1);
  if (!is_subgroup(hcap, phi))
    throw BadParameter("drakokhrust: Phi escaped H~ cap G~der (internal)");
  auto [quot, pi] = quotient_group(hcap, phi);
  AbelianInvariants inv;
  inv.factors = abelian_invariants_of_group(quot);
  return inv;
}

// -- schur multiplier -----------------------------------------------------------

namespace {

struct MultiplierData {
  std::shared_ptr<CocycleSpace> space;  // of the shift module Q
  std::vector<std::size_t> pos;         // element -> Q block position
  HowellBasis numerator;
  HowellBasis denominator;
};

// bockstein rows: for each hom phi: G -> Z/n the shifted 2-cocycle
// c(x, s) = (a_x + a_s - a_{xs})/n
MultiplierData multiplier_data(const PermGroup& g) {
  std::uint64_t n = g.order();
  std::vector<IntMat> triv(g.generators().size(), IntMat{{1}});
  std::vector<std::size_t> pos;
  std::size_t rq = 0;
  std::vector<IntMat> qmats = shift_module_mats(g, triv, n, pos, rq);
  MultiplierData out;
  out.pos = pos;
  out.space =
      std::make_shared<CocycleSpace>(build_cocycle_space(g, qmats, n));
  std::vector<ModRow> den = out.space->coboundaries;

  CocycleSpace homs = build_cocycle_space(g, triv, n);
  std::size_t id = g.index_of(Perm::identity(g.degree()));
  for (const ModRow& hrow : homs.z1.rows) {
    std::vector<std::uint64_t> a(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) a[i] = homs.evaluate(hrow, i)[0];
    ModRow row(out.space->kr, 0);
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      for (std::size_t xi = 0; xi < g.order(); ++xi) {
        if (xi == id) continue;
        std::size_t xs = g.index_of(g.element(xi) * g.generators()[s]);
        std::uint64_t carry = (a[xi] + a[g.index_of(g.generators()[s])] -
                               a[xs] + 2 * n) %
                              (2 * n);
        // a_x + a_s - a_{xs} is 0 or n; the bockstein value is the carry bit
        row[s * rq + pos[xi]] = (carry / n) % n;
      }
    }
    den.push_back(std::move(row));
  }
  out.numerator = out.space->z1;
  out.denominator = howell_of_rows(n, out.space->kr, den);
  return out;
}

}  // namespace

AbelianInvariants schur_multiplier_small(const PermGroup& g,
                                         std::uint64_t cap) {
  if (g.order() > cap) throw CapExceeded("schur_multiplier_small: group too big");
  if (g.order() == 1) return {};
  MultiplierData md = multiplier_data(g);
  return quotient_invariants(md.numerator, md.denominator);
}

AbelianInvariants multiplier_fixed_invariants(
    const PermGroup& g, const std::vector<std::vector<std::size_t>>& autos) {
  if (g.order() == 1) return {};
  std::uint64_t n = g.order();
  MultiplierData md = multiplier_data(g);
  const CocycleSpace& sp = *md.space;
  std::size_t id = g.index_of(Perm::identity(g.degree()));
  std::size_t rq = static_cast<std::size_t>(sp.r);

  // pullback of a class along an automorphism, through the 2-cocycle picture
  auto pullback = [&](const ModRow& u, const std::vector<std::size_t>& al) {
    // full Map(G, Z/n) lift: coordinate of f(xi) at position pos[z], with the
    // identity coordinate set to zero
    std::vector<ModRow> fv(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) fv[i] = sp.evaluate(u, i);
    auto ftilde = [&](std::size_t gi, std::size_t at) -> std::uint64_t {
      if (at == id) return 0;
      return fv[gi][md.pos[at]];
    };
    // c(x, y) = f~(x)(e) + f~(y)(x) - f~(xy)(e)
    auto c2 = [&](std::size_t xi, std::size_t yi) -> std::uint64_t {
      std::size_t xy = g.index_of(g.element(xi) * g.element(yi));
      return (ftilde(xi, id) + ftilde(yi, xi) + 2 * n - ftilde(xy, id)) % n;
    };
    ModRow out(sp.kr, 0);
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      std::size_t si = g.index_of(g.generators()[s]);
      for (std::size_t xi = 0; xi < g.order(); ++xi) {
        if (xi == id) continue;
        out[s * rq + md.pos[xi]] = c2(al[xi], al[si]);
      }
    }
    return out;
  };

  HowellBasis ann = annihilator(md.denominator);
  std::size_t z = md.numerator.rows.size();
  std::vector<ModRow> conds;  // in alpha space
  for (const auto& al : autos) {
    for (std::size_t a = 0; a < z; ++a) {
      ModRow pb = pullback(md.numerator.rows[a], al);
      if (!sp.z1.contains(pb))
        throw BadParameter("multiplier pullback left the cocycle span");
      ModRow diff(sp.kr);
      for (std::size_t j = 0; j < sp.kr; ++j)
        diff[j] = (pb[j] + n - md.numerator.rows[a][j]) % n;
      ModRow cond(ann.rows.size(), 0);
      for (std::size_t w = 0; w < ann.rows.size(); ++w) {
        std::uint64_t v = 0;
        for (std::size_t j = 0; j < sp.kr; ++j)
          v = (v + diff[j] * ann.rows[w][j]) % n;
        cond[w] = v;
      }
      conds.push_back(std::move(cond));
    }
  }
  HowellBasis fixed;
  if (conds.empty()) {
    fixed = md.numerator;
  } else {
    // alpha rows with sum_a alpha_a conds[a + block] = 0 for every block
    std::size_t nblocks = autos.size();
    std::size_t width = conds[0].size();
    ModMatrix sys(n, nblocks * width);
    sys.rows.assign(z, ModRow(nblocks * width, 0));
    for (std::size_t b = 0; b < nblocks; ++b)
      for (std::size_t a = 0; a < z; ++a)
        for (std::size_t w = 0; w < width; ++w)
          sys.rows[a][b * width + w] = conds[b * z + a][w];
    HowellBasis alphas = kernel(sys);
    std::vector<ModRow> rows;
    for (const ModRow& al : alphas.rows) {
      ModRow u(sp.kr, 0);
      for (std::size_t a = 0; a < z; ++a) {
        if (!al[a]) continue;
        for (std::size_t j = 0; j < sp.kr; ++j)
          u[j] = (u[j] + al[a] * md.numerator.rows[a][j]) % n;
      }
      rows.push_back(std::move(u));
    }
    fixed = howell_of_rows(n, sp.kr, rows);
  }
  return quotient_invariants(fixed, md.denominator);
}

bool verify_generalized_representation(CentralExtension& ext,
                                       std::uint64_t multiplier_cap) {
  if (ext.flag != GrFlag::Unverified) return true;
  const PermGroup& base = ext.projection.target();
  if (base.order() > multiplier_cap) return false;
  // transgression is surjective iff |Z~ cap G~der| = |H^2(G, Q/Z)|
  PermGroup gder = derived_subgroup(ext.total);
  std::uint64_t lhs = intersection(ext.kernel, gder).order();
  AbelianInvariants mult = schur_multiplier_small(base, multiplier_cap);
  if (lhs == mult.order()) {
    ext.flag = GrFlag::OracleVerified;
    return true;
  }
  return false;
}

}  // namespace knot
