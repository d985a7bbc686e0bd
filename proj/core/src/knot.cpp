#include "knot/knot.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace knot {

namespace {

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

long long prime_square_degree(const PermGroup& g) {
  long long d = g.degree();
  long long p = 1;
  while (p * p < d) ++p;
  if (p * p != d || !is_prime_ll(p))
    throw BadParameter("degree is not the square of a prime");
  return p;
}

std::optional<StarWitness> check_condition_star(const PermGroup& g,
                                                const PermGroup& h) {
  long long p = prime_square_degree(g);
  if (!is_transitive(g)) throw NotTransitive("G must be transitive");
  // H must be a point stabilizer
  bool stab_ok = false;
  for (int pt = 0; pt < g.degree() && !stab_ok; ++pt) {
    bool fixes = true;
    for (const Perm& x : h.generators())
      if (x(pt) != pt) {
        fixes = false;
        break;
      }
    if (fixes && point_stabilizer(g, pt).same_elements(h)) stab_ok = true;
  }
  if (!stab_ok) throw NotStabilizer("H must be a point stabilizer of G");

  std::vector<PermGroup> cand = subgroups_elementary_abelian(g, p, 2);
  std::sort(cand.begin(), cand.end(),
            [](const PermGroup& a, const PermGroup& b) {
              return a.elements() < b.elements();
            });
  for (const PermGroup& n : cand) {
    if (!is_normal(g, n)) continue;
    if (intersection(n, h).order() != 1) continue;
    if (!is_transitive(n)) continue;  // order p^2 + transitive = regular
    // basis of N and discrete logs
    std::vector<Perm> basis = n.small_generating_set();
    if (basis.size() != 2) continue;
    std::map<Perm, std::pair<long long, long long>> dlog;
    for (long long a = 0; a < p; ++a)
      for (long long b = 0; b < p; ++b)
        dlog[pow(basis[0], a) * pow(basis[1], b)] = {a, b};
    StarWitness w;
    w.translation_subgroup = n;
    w.basis = basis;
    w.all_det_one = true;
    for (const Perm& s : h.generators()) {
      auto [a, b] = dlog.at(conjugate(s, basis[0]));
      auto [c, d] = dlog.at(conjugate(s, basis[1]));
      w.matrices.push_back({a, b, c, d});
      long long det = ((a * d - b * c) % p + p) % p;
      w.determinants.push_back(det);
      if (det != 1) w.all_det_one = false;
    }
    if (w.all_det_one) return w;
  }
  return std::nullopt;
}

bool subgroup_contains_cp2(const PermGroup& d, long long p) {
  if (d.order() % static_cast<std::uint64_t>(p * p)) return false;
  return !subgroups_elementary_abelian(d, p, 2).empty();
}

KnotReport decide_hnp(const PermGroup& g, const PermGroup& h,
                      const DecompositionSet& ds, Method method,
                      const CohOptions& opts) {
  long long p = prime_square_degree(g);
  KnotReport rep;
  rep.group_order = g.order();
  rep.degree = g.degree();
  rep.p = p;
  rep.method = method;
  rep.decomposition_input = ds.input_count();
  rep.decomposition_closed = ds.members().size();

  rep.star = check_condition_star(g, h);
  for (const PermGroup& d : ds.members())
    if (subgroup_contains_cp2(d, p)) {
      rep.decomposition_has_cp2 = true;
      break;
    }

  std::optional<Decision> classifier;
  if (method == Method::Classifier || method == Method::Both) {
    if (!rep.star)
      classifier = Decision::Trivial;
    else
      classifier = rep.decomposition_has_cp2 ? Decision::Trivial
                                             : Decision::ZmodP;
  }
  std::optional<Decision> cohomology;
  if (method == Method::Cohomology || method == Method::Both) {
    GLattice j = chevalley_lattice(g, h);
    CohGroup sha = sha2(j, ds, opts);
    rep.sha_invariants = sha.invariants;
    // the report compares invariants, which match those of the dual group
    cohomology = sha.invariants.trivial() ? Decision::Trivial
                                          : Decision::ZmodP;
    if (!sha.invariants.trivial() &&
        !(sha.invariants.factors ==
          std::vector<std::uint64_t>{static_cast<std::uint64_t>(p)}))
      throw BadParameter("sha invariants outside {1, Z/p} (internal)");
    // defect of weak approximation: quotient of the all-cyclic obstruction
    // by the D-obstruction (orders divide, both are 1 or p here)
    CohGroup omega = sha2(j, DecompositionSet::all_cyclic(g), opts);
    if (omega.order() % sha.order())
      throw BadParameter("defect quotient not integral (internal)");
    AbelianInvariants defect;
    if (omega.order() / sha.order() > 1)
      defect.factors.push_back(omega.order() / sha.order());
    rep.weak_approximation_defect = defect;
  }
  if (classifier && cohomology && *classifier != *cohomology)
    throw BadParameter(
        "classifier and cohomology disagree: implementation bug");
  rep.decision = classifier ? *classifier : *cohomology;
  return rep;
}

KnotReport decide_h1pic(const PermGroup& g, const PermGroup& h, Method method,
                        const CohOptions& opts) {
  long long p = prime_square_degree(g);
  KnotReport rep;
  rep.group_order = g.order();
  rep.degree = g.degree();
  rep.p = p;
  rep.method = method;
  rep.star = check_condition_star(g, h);
  rep.decision = rep.star ? Decision::ZmodP : Decision::Trivial;
  if (method == Method::Cohomology || method == Method::Both) {
    CohGroup sha = sha_omega(g, h, opts);
    rep.sha_invariants = sha.invariants;
    Decision coh =
        sha.invariants.trivial() ? Decision::Trivial : Decision::ZmodP;
    if (method == Method::Both && coh != rep.decision)
      throw BadParameter("h1pic: star test and sha_omega disagree");
    if (method == Method::Cohomology) rep.decision = coh;
  }
  return rep;
}

bool adequacy_criterion(const PermGroup& g, const PermGroup& h,
                        const DecompositionSet& ds) {
  long long p = prime_square_degree(g);
  PermGroup syl = sylow_p(g, p);
  PermGroup ph = intersection(syl, h);
  std::set<Perm> target(syl.elements().begin(), syl.elements().end());
  for (const PermGroup& d : ds.members()) {
    PermGroup pd = intersection(syl, d);
    if (pd.order() * ph.order() < syl.order()) continue;
    std::set<Perm> prod;
    for (const Perm& x : pd.elements())
      for (const Perm& y : ph.elements()) prod.insert(x * y);
    if (prod == target) return true;
  }
  return false;
}

}  // namespace knot
