#include "knot/permgroup.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace knot {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw BadParameter("image sequence is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  Perm p;
  p.img_ = std::move(im);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  assert(degree() == rhs.degree());
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[i] = img_[static_cast<std::size_t>(rhs.img_[i])];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int perm_order(const Perm& g) {
  int ord = 1;
  Perm x = g;
  while (!x.is_identity()) {
    x = x * g;
    ++ord;
  }
  return ord;
}

PermGroup PermGroup::close(std::vector<Perm> generators, int degree,
                           std::uint64_t cap) {
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw BadParameter("generator degree mismatch");
  if (generators.empty()) generators.push_back(Perm::identity(degree));

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm x = std::move(todo.front());
    todo.pop_front();
    for (const Perm& s : generators) {
      Perm y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeds order cap");
        todo.push_back(std::move(y));
      }
    }
  }

  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_.assign(seen.begin(), seen.end());
  std::sort(g.elements_.begin(), g.elements_.end());
  g.build_index();
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) throw BadParameter("empty element set");
  PermGroup g;
  g.degree_ = elements.front().degree();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  g.elements_ = std::move(elements);
  g.build_index();
  g.generators_ = g.small_generating_set();
#ifndef NDEBUG
  for (const Perm& a : g.elements_)
    assert(g.contains(a.inverse()));
#endif
  return g;
}

void PermGroup::build_index() {
  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
}

bool PermGroup::contains(const Perm& g) const {
  return index_.find(g) != index_.end();
}

std::size_t PermGroup::index_of(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw BadParameter("element not in group");
  return it->second;
}

std::vector<Perm> PermGroup::small_generating_set() const {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> have;
  have.insert(Perm::identity(degree_));
  for (const Perm& g : elements_) {
    if (have.count(g)) continue;
    gens.push_back(g);
    // re-close with the enlarged generating set
    std::deque<Perm> todo(have.begin(), have.end());
    while (!todo.empty()) {
      Perm x = std::move(todo.front());
      todo.pop_front();
      for (const Perm& s : gens) {
        Perm y = x * s;
        if (have.insert(y).second) todo.push_back(std::move(y));
      }
    }
    if (have.size() == elements_.size()) break;
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree_));
  return gens;
}

GroupHom::GroupHom(const PermGroup& source, std::vector<Perm> source_gens,
                   std::vector<Perm> images, const PermGroup& target)
    : source_(std::make_shared<PermGroup>(source)),
      target_(std::make_shared<PermGroup>(target)) {
  if (source_gens.size() != images.size())
    throw BadParameter("generator/image count mismatch");
  // images of all elements by BFS over words in the given generators; a
  // collision with a different image means the map is not well defined.
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> img(source.order(), none);
  Perm id_t = Perm::identity(target.degree());
  std::size_t id_idx = source.index_of(Perm::identity(source.degree()));
  img[id_idx] = target.index_of(id_t);
  std::deque<std::size_t> todo{id_idx};
  std::size_t assigned = 1;
  while (!todo.empty()) {
    std::size_t xi = todo.front();
    todo.pop_front();
    const Perm& x = source.element(xi);
    const Perm& fx = target.element(img[xi]);
    for (std::size_t k = 0; k < source_gens.size(); ++k) {
      Perm y = x * source_gens[k];
      std::size_t yi = source.index_of(y);
      Perm fy = fx * images[k];
      std::size_t fyi = target.index_of(fy);
      if (img[yi] == none) {
        img[yi] = fyi;
        ++assigned;
        todo.push_back(yi);
      } else if (img[yi] != fyi) {
        throw BadParameter("generator images do not define a homomorphism");
      }
    }
  }
  if (assigned != source.order())
    throw BadParameter("source generators do not generate the source group");
  image_of_element_.reserve(img.size());
  for (std::size_t i : img) image_of_element_.push_back(target.element(i));
}

Perm GroupHom::apply(const Perm& g) const {
  return image_of_element_[source_->index_of(g)];
}

PermGroup GroupHom::kernel() const {
  std::vector<Perm> ker;
  for (std::size_t i = 0; i < source_->order(); ++i)
    if (image_of_element_[i].is_identity()) ker.push_back(source_->element(i));
  return PermGroup::from_elements(std::move(ker));
}

PermGroup GroupHom::image() const {
  std::vector<Perm> im(image_of_element_);
  return PermGroup::from_elements(std::move(im));
}

bool GroupHom::is_surjective() const { return image().order() == target_->order(); }

PermGroup GroupHom::preimage(const PermGroup& sub_of_target) const {
  std::vector<Perm> pre;
  for (std::size_t i = 0; i < source_->order(); ++i)
    if (sub_of_target.contains(image_of_element_[i]))
      pre.push_back(source_->element(i));
  return PermGroup::from_elements(std::move(pre));
}

// ---------------------------------------------------------------------------

bool is_transitive(const PermGroup& g) {
  std::vector<char> hit(static_cast<std::size_t>(g.degree()), 0);
  hit[0] = 1;
  std::size_t count = 1;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (const Perm& s : g.generators()) {
      int y = s(x);
      if (!hit[static_cast<std::size_t>(y)]) {
        hit[static_cast<std::size_t>(y)] = 1;
        ++count;
        todo.push_back(y);
      }
    }
  }
  return count == static_cast<std::size_t>(g.degree());
}

PermGroup point_stabilizer(const PermGroup& g, int point) {
  if (point < 0 || point >= g.degree()) throw BadParameter("point out of range");
  std::vector<Perm> stab;
  for (const Perm& x : g.elements())
    if (x(point) == point) stab.push_back(x);
  return PermGroup::from_elements(std::move(stab));
}

PermGroup derived_subgroup(const PermGroup& g) {
  // normal closure of the commutators of a generating set
  std::vector<Perm> seeds;
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators()) seeds.push_back(commutator(a, b));
  PermGroup d = PermGroup::close(seeds, g.degree(), g.order() + 1);
  for (;;) {
    std::vector<Perm> extra;
    for (const Perm& s : g.generators())
      for (const Perm& x : d.elements()) {
        Perm y = conjugate(s, x);
        if (!d.contains(y)) extra.push_back(y);
      }
    if (extra.empty()) break;
    std::vector<Perm> gens = d.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    d = PermGroup::close(gens, g.degree(), g.order() + 1);
  }
  return d;
}

PermGroup center(const PermGroup& g) {
  std::vector<Perm> z;
  for (const Perm& x : g.elements()) {
    bool central = true;
    for (const Perm& s : g.generators())
      if (!(x * s == s * x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return PermGroup::from_elements(std::move(z));
}

long long exponent(const PermGroup& g) {
  long long e = 1;
  for (const Perm& x : g.elements()) e = std::lcm(e, (long long)perm_order(x));
  return e;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  if (h.order() > g.order() || h.degree() != g.degree()) return false;
  for (const Perm& x : h.elements())
    if (!g.contains(x)) return false;
  return true;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  // conjugation by each generator must map h into (hence onto) itself
  for (const Perm& s : g.generators())
    for (const Perm& x : h.elements())
      if (!h.contains(conjugate(s, x))) return false;
  return true;
}

PermGroup conjugate_subgroup(const PermGroup& h, const Perm& by) {
  std::vector<Perm> els;
  els.reserve(h.order());
  for (const Perm& x : h.elements()) els.push_back(conjugate(by, x));
  return PermGroup::from_elements(std::move(els));
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& big = a.order() <= b.order() ? b : a;
  std::vector<Perm> els;
  for (const Perm& x : small.elements())
    if (big.contains(x)) els.push_back(x);
  return PermGroup::from_elements(std::move(els));
}

static std::uint64_t p_part(std::uint64_t m, std::uint64_t p) {
  std::uint64_t r = 1;
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

static PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  std::vector<Perm> els;
  for (const Perm& x : g.elements()) {
    bool ok = true;
    for (const Perm& s : h.generators())
      if (!h.contains(conjugate(x, s))) {
        ok = false;
        break;
      }
    if (ok) els.push_back(x);
  }
  return PermGroup::from_elements(std::move(els));
}

static bool is_power_of(std::uint64_t m, std::uint64_t p) {
  while (m > 1) {
    if (m % p) return false;
    m /= p;
  }
  return true;
}

PermGroup sylow_p(const PermGroup& g, long long p) {
  if (p < 2) throw BadParameter("p must be prime");
  std::uint64_t target = p_part(g.order(), static_cast<std::uint64_t>(p));
  PermGroup cur = PermGroup::close({Perm::identity(g.degree())}, g.degree());
  while (cur.order() < target) {
    // a proper p-subgroup grows inside its normalizer
    PermGroup nor = normalizer(g, cur);
    bool grown = false;
    for (const Perm& x : nor.elements()) {
      if (cur.contains(x)) continue;
      if (!is_power_of(static_cast<std::uint64_t>(perm_order(x)),
                       static_cast<std::uint64_t>(p)))
        continue;
      std::vector<Perm> gens = cur.generators();
      gens.push_back(x);
      PermGroup bigger = PermGroup::close(gens, g.degree(), g.order() + 1);
      if (is_power_of(bigger.order(), static_cast<std::uint64_t>(p))) {
        cur = std::move(bigger);
        grown = true;
        break;
      }
    }
    if (!grown) throw BadParameter("sylow search stalled (internal)");
  }
  return cur;
}

PermGroup normal_core(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) throw NotSubgroup("normal_core: H not a subgroup of G");
  std::unordered_set<Perm, PermHash> cur(h.elements().begin(),
                                         h.elements().end());
  for (;;) {
    std::vector<Perm> keep;
    keep.reserve(cur.size());
    for (const Perm& x : h.elements()) {
      if (!cur.count(x)) continue;
      bool stays = true;
      for (const Perm& s : g.generators())
        if (!cur.count(conjugate(s, x))) {
          stays = false;
          break;
        }
      if (stays) keep.push_back(x);
    }
    if (keep.size() == cur.size()) break;
    cur.clear();
    cur.insert(keep.begin(), keep.end());
  }
  return PermGroup::from_elements(std::vector<Perm>(cur.begin(), cur.end()));
}

std::vector<Perm> double_coset_reps(const PermGroup& g, const PermGroup& d,
                                    const PermGroup& h) {
  if (!is_subgroup(g, d)) throw NotSubgroup("double_coset_reps: D not in G");
  if (!is_subgroup(g, h)) throw NotSubgroup("double_coset_reps: H not in G");
  std::vector<char> used(g.order(), 0);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    const Perm& x = g.element(i);
    reps.push_back(x);
    for (const Perm& dd : d.elements()) {
      Perm dx = dd * x;
      for (const Perm& hh : h.elements()) used[g.index_of(dx * hh)] = 1;
    }
  }
  return reps;
}

std::vector<PermGroup> subgroups_elementary_abelian(const PermGroup& g,
                                                    long long p, int rank) {
  if (p < 2 || rank < 1) throw BadParameter("need p prime, rank >= 1");
  std::vector<Perm> order_p;
  for (const Perm& x : g.elements())
    if (perm_order(x) == p) order_p.push_back(x);

  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  std::uint64_t want = 1;
  for (int i = 0; i < rank; ++i) want *= static_cast<std::uint64_t>(p);

  // grow elementary abelian subgroups one commuting generator at a time
  std::vector<PermGroup> layer{PermGroup::close({Perm::identity(g.degree())},
                                                g.degree())};
  for (int step = 0; step < rank; ++step) {
    std::set<std::vector<Perm>> next_seen;
    std::vector<PermGroup> next;
    for (const PermGroup& sub : layer) {
      for (const Perm& x : order_p) {
        if (sub.contains(x)) continue;
        bool commutes = true;
        for (const Perm& s : sub.generators())
          if (!(s * x == x * s)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        std::vector<Perm> gens = sub.generators();
        gens.push_back(x);
        PermGroup bigger = PermGroup::close(gens, g.degree(), g.order() + 1);
        if (bigger.order() != sub.order() * static_cast<std::uint64_t>(p))
          continue;
        if (next_seen.insert(bigger.elements()).second)
          next.push_back(std::move(bigger));
      }
    }
    layer = std::move(next);
  }
  for (PermGroup& sub : layer)
    if (sub.order() == want && seen.insert(sub.elements()).second)
      out.push_back(std::move(sub));
  return out;
}

std::vector<PermGroup> cyclic_subgroups(const PermGroup& g) {
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  for (const Perm& x : g.elements()) {
    PermGroup c = PermGroup::close({x}, g.degree(), g.order() + 1);
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g,
                                     std::uint64_t order_limit) {
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  std::deque<PermGroup> todo;
  PermGroup triv = PermGroup::close({Perm::identity(g.degree())}, g.degree());
  seen.insert(triv.elements());
  out.push_back(triv);
  todo.push_back(std::move(triv));
  while (!todo.empty()) {
    PermGroup sub = std::move(todo.front());
    todo.pop_front();
    for (const Perm& x : g.elements()) {
      if (sub.contains(x)) continue;
      std::vector<Perm> gens = sub.generators();
      gens.push_back(x);
      PermGroup bigger = PermGroup::close(gens, g.degree(), g.order() + 1);
      if (order_limit && bigger.order() > order_limit) continue;
      if (seen.insert(bigger.elements()).second) {
        out.push_back(bigger);
        todo.push_back(std::move(bigger));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  return out;
}

std::vector<Perm> left_coset_reps(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) throw NotSubgroup("left_coset_reps: H not in G");
  std::vector<char> used(g.order(), 0);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    const Perm& x = g.element(i);
    reps.push_back(x);
    for (const Perm& hh : h.elements()) used[g.index_of(x * hh)] = 1;
  }
  return reps;
}

std::pair<PermGroup, GroupHom> quotient_group(const PermGroup& g,
                                              const PermGroup& n) {
  if (!is_normal(g, n)) throw NotSubgroup("quotient_group: N not normal in G");
  std::vector<Perm> reps = left_coset_reps(g, n);
  std::size_t k = reps.size();
  // coset index lookup
  std::unordered_map<Perm, int, PermHash> coset_of;
  for (std::size_t i = 0; i < k; ++i)
    for (const Perm& hh : n.elements()) coset_of[reps[i] * hh] = (int)i;
  auto act = [&](const Perm& s) {
    std::vector<int> im(k);
    for (std::size_t i = 0; i < k; ++i) im[i] = coset_of[s * reps[i]];
    return Perm(std::move(im));
  };
  std::vector<Perm> qgens;
  for (const Perm& s : g.generators()) qgens.push_back(act(s));
  PermGroup q = PermGroup::close(qgens, (int)k);
  GroupHom pi(g, g.generators(), qgens, q);
  return {std::move(q), std::move(pi)};
}

std::vector<std::uint64_t> abelian_invariants_of_group(const PermGroup& g) {
  if (!is_abelian(g)) throw PreconditionViolated("group is not abelian");
  std::uint64_t n = g.order();
  if (n == 1) return {};
  // primary decomposition from element-order counts
  std::vector<std::uint64_t> primes;
  {
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
  }
  std::vector<std::uint64_t> orders;
  orders.reserve(n);
  for (const Perm& x : g.elements())
    orders.push_back(static_cast<std::uint64_t>(perm_order(x)));

  // collect primary cyclic factors q^e with multiplicity, recovered from the
  // counts N_j = #{x : x^(q^j) = 1} = q^{sum_i min(e_i, j)}
  std::vector<std::pair<std::uint64_t, int>> primary;  // (q, e) repeated
  for (std::uint64_t q : primes) {
    std::vector<int> logN{0};
    for (int j = 1;; ++j) {
      std::uint64_t qj = 1;
      for (int t = 0; t < j; ++t) qj *= q;
      std::uint64_t cnt = 0;
      for (std::uint64_t o : orders)
        if (p_part(o, q) <= qj) ++cnt;
      // cnt = q^{sum_i min(e_i,j)} * (coprime part), so take the q-valuation
      int lg = 0;
      for (std::uint64_t c = cnt; c % q == 0; c /= q) ++lg;
      logN.push_back(lg);
      if (cnt == n || logN[j] == logN[j - 1]) break;
    }
    for (std::size_t j = 1; j < logN.size(); ++j) {
      int with_ge_j = logN[j] - logN[j - 1];
      int with_ge_j1 =
          j + 1 < logN.size() ? logN[j + 1] - logN[j] : 0;
      for (int t = 0; t < with_ge_j - with_ge_j1; ++t)
        primary.push_back({q, static_cast<int>(j)});
    }
  }
  // merge primary parts into invariant factor chain
  std::vector<std::uint64_t> factors;
  for (;;) {
    std::uint64_t d = 1;
    for (std::uint64_t q : primes) {
      // largest remaining exponent for q
      int best = -1;
      std::size_t best_i = 0;
      for (std::size_t i = 0; i < primary.size(); ++i)
        if (primary[i].first == q && primary[i].second > best) {
          best = primary[i].second;
          best_i = i;
        }
      if (best > 0) {
        std::uint64_t qe = 1;
        for (int t = 0; t < best; ++t) qe *= q;
        d *= qe;
        primary.erase(primary.begin() + static_cast<std::ptrdiff_t>(best_i));
      }
    }
    if (d == 1) break;
    factors.push_back(d);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace knot
