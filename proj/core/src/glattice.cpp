#include "knot/glattice.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace knot {

IntMat int_identity(std::size_t r) {
  IntMat m(r, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  std::size_t n1 = a.size(), n2 = b.size(), n3 = b.empty() ? 0 : b[0].size();
  IntMat c(n1, std::vector<long long>(n3, 0));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = 0; k < n2; ++k) {
      long long v = a[i][k];
      if (!v) continue;
      for (std::size_t j = 0; j < n3; ++j) c[i][j] += v * b[k][j];
    }
  return c;
}

std::vector<long long> int_apply(const IntMat& a,
                                 const std::vector<long long>& v) {
  std::vector<long long> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

namespace {

long long int_det(IntMat m) {
  // fraction-free elimination; fine for the small unimodular-ish matrices here
  std::size_t n = m.size();
  long long det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      while (m[i][c] != 0) {
        if (std::abs(m[i][c]) < std::abs(m[c][c])) {
          std::swap(m[i], m[c]);
          det = -det;
        }
        long long q = m[i][c] / m[c][c];
        for (std::size_t j = c; j < n; ++j) m[i][j] -= q * m[c][j];
      }
    }
    det *= m[c][c];
  }
  return det;
}

IntMat mod_reduce(const IntMat& a, std::uint64_t n) {
  IntMat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].resize(a[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      long long v = a[i][j] % static_cast<long long>(n);
      if (v < 0) v += static_cast<long long>(n);
      out[i][j] = v;
    }
  }
  return out;
}

IntMat mod_inverse_matrix(const IntMat& a, std::uint64_t n) {
  std::size_t r = a.size();
  ModMatrix m(n, r);
  for (std::size_t i = 0; i < r; ++i) {
    ModRow row(r);
    for (std::size_t j = 0; j < r; ++j) {
      long long v = a[i][j] % static_cast<long long>(n);
      if (v < 0) v += static_cast<long long>(n);
      row[j] = static_cast<std::uint64_t>(v);
    }
    m.rows.push_back(std::move(row));
  }
  IntMat inv(r, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    ModRow e(r, 0);
    e[i] = 1 % n;
    auto x = solve(m, e);  // x * a = e_i
    if (!x) throw BadParameter("matrix not invertible mod n");
    for (std::size_t j = 0; j < r; ++j)
      inv[i][j] = static_cast<long long>((*x)[j]);
  }
  return inv;
}

}  // namespace

GLattice::GLattice(PermGroup group, std::vector<IntMat> generator_action)
    : group_(std::make_shared<PermGroup>(std::move(group))),
      gen_action_(std::move(generator_action)) {
  if (gen_action_.size() != group_->generators().size())
    throw BadParameter("one action matrix per group generator required");
  rank_ = gen_action_.empty() ? 0 : static_cast<int>(gen_action_[0].size());
  for (const IntMat& m : gen_action_) {
    if (m.size() != static_cast<std::size_t>(rank_))
      throw BadParameter("action matrices must share the rank");
    long long d = int_det(m);
    if (d != 1 && d != -1)
      throw BadParameter("lattice action matrix must have det +-1");
  }
}

void GLattice::build_table() const {
  if (!table_.empty()) return;
  const PermGroup& g = *group_;
  table_.assign(g.order(), IntMat{});
  std::size_t idp = g.index_of(Perm::identity(g.degree()));
  table_[idp] = int_identity(static_cast<std::size_t>(rank_));
  std::deque<std::size_t> todo{idp};
  std::vector<char> seen(g.order(), 0);
  seen[idp] = 1;
  while (!todo.empty()) {
    std::size_t xi = todo.front();
    todo.pop_front();
    const Perm& x = g.element(xi);
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      std::size_t yi = g.index_of(x * g.generators()[k]);
      if (!seen[yi]) {
        seen[yi] = 1;
        table_[yi] = int_mul(table_[xi], gen_action_[k]);
        todo.push_back(yi);
      }
    }
  }
#ifndef NDEBUG
  // homomorphism property over the element set against each generator
  for (std::size_t xi = 0; xi < g.order(); ++xi)
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      std::size_t yi = g.index_of(g.element(xi) * g.generators()[k]);
      assert(table_[yi] == int_mul(table_[xi], gen_action_[k]));
    }
#endif
}

const IntMat& GLattice::action_of(const Perm& g) const {
  build_table();
  return table_[group_->index_of(g)];
}

const IntMat& GLattice::action_of_index(std::size_t i) const {
  build_table();
  return table_[i];
}

FinGModule::FinGModule(PermGroup group, std::uint64_t modulus,
                       std::vector<IntMat> generator_action)
    : group_(std::make_shared<PermGroup>(std::move(group))), n_(modulus) {
  if (generator_action.size() != group_->generators().size())
    throw BadParameter("one action matrix per group generator required");
  gen_action_.reserve(generator_action.size());
  for (const IntMat& m : generator_action) gen_action_.push_back(mod_reduce(m, n_));
  rank_ = gen_action_.empty() ? 0 : static_cast<int>(gen_action_[0].size());
}

GLattice trivial_lattice(const PermGroup& g) {
  std::vector<IntMat> mats(g.generators().size(), IntMat{{1}});
  return GLattice(g, std::move(mats));
}

static std::vector<std::vector<Perm>> sorted_left_cosets(const PermGroup& g,
                                                         const PermGroup& h) {
  if (!is_subgroup(g, h)) throw NotSubgroup("induced: H not a subgroup of G");
  std::vector<char> used(g.order(), 0);
  std::vector<std::vector<Perm>> cosets;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    const Perm& x = g.element(i);
    std::vector<Perm> cos;
    for (const Perm& hh : h.elements()) {
      Perm y = x * hh;
      used[g.index_of(y)] = 1;
      cos.push_back(std::move(y));
    }
    std::sort(cos.begin(), cos.end());
    cosets.push_back(std::move(cos));
  }
  // element scan order already yields cosets ordered by least element
  return cosets;
}

GLattice induced_lattice(const PermGroup& g, const PermGroup& h) {
  auto cosets = sorted_left_cosets(g, h);
  std::size_t r = cosets.size();
  std::map<Perm, std::size_t> coset_of;
  for (std::size_t i = 0; i < r; ++i)
    for (const Perm& x : cosets[i]) coset_of[x] = i;
  std::vector<IntMat> mats;
  for (const Perm& s : g.generators()) {
    IntMat a(r, std::vector<long long>(r, 0));
    for (std::size_t j = 0; j < r; ++j)
      a[coset_of[s * cosets[j][0]]][j] = 1;
    mats.push_back(std::move(a));
  }
  return GLattice(g, std::move(mats));
}

GLattice induced_from(const PermGroup& g, const PermGroup& h,
                      const GLattice& m_over_h) {
  auto cosets = sorted_left_cosets(g, h);
  std::size_t k = cosets.size();
  std::size_t rm = static_cast<std::size_t>(m_over_h.rank());
  std::map<Perm, std::size_t> coset_of;
  for (std::size_t i = 0; i < k; ++i)
    for (const Perm& x : cosets[i]) coset_of[x] = i;
  std::vector<Perm> reps;
  for (auto& c : cosets) reps.push_back(c[0]);
  // basis e_{i,t} = rep_i tensor b_t ; s * (rep_i tensor b_t):
  // s rep_i = rep_j h  =>  e_{j, action(h) b_t}
  std::vector<IntMat> mats;
  for (const Perm& s : g.generators()) {
    IntMat a(k * rm, std::vector<long long>(k * rm, 0));
    for (std::size_t i = 0; i < k; ++i) {
      Perm si = s * reps[i];
      std::size_t j = coset_of[si];
      Perm hh = reps[j].inverse() * si;
      const IntMat& ah = m_over_h.action_of(hh);
      for (std::size_t t = 0; t < rm; ++t)
        for (std::size_t u = 0; u < rm; ++u)
          a[j * rm + u][i * rm + t] = ah[u][t];
    }
    mats.push_back(std::move(a));
  }
  return GLattice(g, std::move(mats));
}

GLattice chevalley_lattice(const PermGroup& g, const PermGroup& h) {
  GLattice ind = induced_lattice(g, h);
  std::size_t r = static_cast<std::size_t>(ind.rank());
  if (r < 1) throw BadParameter("chevalley: empty coset space");
  std::size_t rj = r - 1;
  // J basis = first r-1 coset coordinates; class of e_{r-1} = -sum of them
  std::vector<IntMat> mats;
  for (const IntMat& a : ind.generator_action()) {
    IntMat b(rj, std::vector<long long>(rj, 0));
    for (std::size_t j = 0; j < rj; ++j) {
      std::size_t im = 0;
      while (a[im][j] == 0) ++im;
      if (im < rj)
        b[im][j] += 1;
      else
        for (std::size_t i = 0; i < rj; ++i) b[i][j] -= 1;
    }
    mats.push_back(std::move(b));
  }
  GLattice jlat(g, std::move(mats));
  ChevalleyData cd;
  cd.stabilizer = std::make_shared<PermGroup>(h);
  cd.embedding.assign(r, 1);
  cd.projection.assign(rj, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < rj; ++i) {
    cd.projection[i][i] = 1;
    cd.projection[i][r - 1] = -1;
  }
  jlat.set_chevalley(std::move(cd));
  return jlat;
}

GLattice restrict_lattice(const GLattice& m, const PermGroup& d) {
  if (!is_subgroup(m.group(), d))
    throw NotSubgroup("restrict_lattice: D not a subgroup");
  std::vector<IntMat> mats;
  for (const Perm& s : d.generators()) mats.push_back(m.action_of(s));
  return GLattice(d, std::move(mats));
}

GLattice inflate_lattice(const GLattice& m_over_quotient, const GroupHom& q) {
  const PermGroup& src = q.source();
  std::vector<IntMat> mats;
  for (const Perm& s : src.generators())
    mats.push_back(m_over_quotient.action_of(q.apply(s)));
  return GLattice(src, std::move(mats));
}

FinGModule reduce_mod(const GLattice& m, std::uint64_t n) {
  if (n < 2) throw BadParameter("modulus must be >= 2");
  std::vector<IntMat> mats;
  for (const IntMat& a : m.generator_action()) mats.push_back(a);
  return FinGModule(m.group(), n, std::move(mats));
}

FinGModule dual(const FinGModule& m) {
  std::vector<IntMat> mats;
  for (const IntMat& a : m.generator_action()) {
    IntMat inv = mod_inverse_matrix(a, m.modulus());
    std::size_t r = inv.size();
    IntMat t(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) t[i][j] = inv[j][i];
    mats.push_back(std::move(t));
  }
  return FinGModule(m.group(), m.modulus(), std::move(mats));
}

FinGModule standard_rep_mod_p(const PermGroup& gdagger,
                              const std::vector<std::array<long long, 4>>& mats,
                              std::uint64_t p) {
  if (mats.size() != gdagger.generators().size())
    throw BadParameter("one matrix per generator required");
  std::vector<IntMat> action;
  for (const auto& m : mats) {
    // (x,y) -> (ax+cy, bx+dy): columns of the action matrix
    IntMat a{{m[0], m[2]}, {m[1], m[3]}};
    action.push_back(std::move(a));
  }
  return FinGModule(gdagger, p, std::move(action));
}

std::vector<MackeyPiece> mackey_pieces(const PermGroup& g, const PermGroup& h,
                                       const PermGroup& d) {
  std::vector<Perm> reps = double_coset_reps(g, d, h);
  std::vector<MackeyPiece> pieces;
  pieces.reserve(reps.size());
  for (const Perm& x : reps) {
    PermGroup conj = conjugate_subgroup(h, x);
    pieces.push_back(MackeyPiece{x, intersection(d, conj)});
  }
  return pieces;
}

}  // namespace knot
