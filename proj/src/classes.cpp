#include "classdist/classes.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "classdist/arith.hpp"
#include "classdist/errors.hpp"

namespace classdist {

namespace {

// Orbit of `start` under conjugation by the given generators.
std::vector<Permutation> conjugation_orbit(const Permutation& start,
                                           const std::vector<Permutation>& generators) {
  std::set<Permutation> orbit = {start};
  std::deque<Permutation> frontier = {start};
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Permutation conjugate = s.inverse() * current * s;
      if (orbit.insert(conjugate).second) frontier.push_back(std::move(conjugate));
    }
  }
  return {orbit.begin(), orbit.end()};
}

}  // namespace

long long ClassTable::count(long long d, long long c) const {
  auto it = counts.find({d, c});
  return it == counts.end() ? 0 : it->second;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjugacyClass> classes;
  std::vector<bool> assigned(g.order(), false);
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    if (assigned[idx]) continue;
    ConjugacyClass cls;
    cls.members = conjugation_orbit(g.element(idx), g.generators());
    cls.representative = cls.members.front();  // orbit is sorted (set order)
    for (const auto& m : cls.members) assigned[g.index_of(m)] = true;
    classes.push_back(std::move(cls));
  }
  // Representatives are canonical minima and classes partition G, so the
  // scan order above already yields classes sorted by representative.
  return classes;
}

FiniteGroup centralizer(const FiniteGroup& g, const Permutation& elem) {
  if (!g.contains(elem)) throw DomainError("element not in group");
  std::vector<Permutation> commuting;
  for (const auto& h : g.elements())
    if (h * elem == elem * h) commuting.push_back(h);
  return FiniteGroup::from_elements(g.degree(), std::move(commuting));
}

long long centralizing_index(const CosetStructure& cs, const Permutation& elem) {
  if (!cs.group.contains(elem)) throw DomainError("element not in group");
  long long c = 1;
  for (const auto& h : cs.group.elements())
    if (h * elem == elem * h) c = lcm_ll(c, cs.coset_order_of(h));
  return c;
}

ClassTable build_class_table(const CosetStructure& cs) {
  ClassTable table;
  table.cs = cs;
  table.classes = conjugacy_classes(cs.group);

  const long long n = cs.n;
  for (auto& cls : table.classes) {
    long long exponent = cs.coset_of(cls.representative);
    cls.coset_order = cs.coset_order_of_exponent(exponent);
    cls.centralizing_index = centralizing_index(cs, cls.representative);
    for (const auto& m : cls.members) {
      if (cs.coset_of(m) != exponent)
        throw Error("internal: conjugacy class spread over several cosets");
      if (centralizing_index(cs, m) != cls.centralizing_index)
        throw Error("internal: centralizing index not constant on a class");
    }
    if (cls.centralizing_index % cls.coset_order != 0)
      throw Error("internal: coset order does not divide centralizing index");
  }

  for (long long d : divisor_set(n).divisors) {
    const long long gamma_exponent = (n / d) % n;
    long long in_gamma = 0;
    for (const auto& cls : table.classes) {
      if (cs.coset_of(cls.representative) == gamma_exponent) {
        ++in_gamma;
        ++table.counts[{d, cls.centralizing_index}];
      }
    }
    table.coset_totals[d] = in_gamma;

    const long long stride = n / d;
    long long in_subgroup = 0;
    for (const auto& cls : table.classes)
      if (cs.coset_of(cls.representative) % stride == 0) ++in_subgroup;
    table.subgroup_totals[d] = in_subgroup;

    table.own_counts[d] = subgroup_class_count(intermediate_subgroup(cs, d));
  }
  return table;
}

long long split_count(const CosetStructure& cs, const ConjugacyClass& cls, long long j) {
  if (j <= 0 || cs.n % j != 0) throw DomainError("j must divide n");
  if (j % cls.coset_order != 0)
    throw DomainError("class does not lie in the order-j intermediate subgroup");
  FiniteGroup k = intermediate_subgroup(cs, j);
  std::set<Permutation> remaining(cls.members.begin(), cls.members.end());
  long long orbits = 0;
  while (!remaining.empty()) {
    auto part = conjugation_orbit(*remaining.begin(), k.generators());
    for (const auto& m : part) remaining.erase(m);
    ++orbits;
  }
  return orbits;
}

long long subgroup_class_count(const FiniteGroup& k) {
  return static_cast<long long>(conjugacy_classes(k).size());
}

long long unsplit_class_count(const FiniteGroup& g, const FiniteGroup& h,
                              const std::vector<Permutation>& region) {
  for (const auto& gen : g.generators()) {
    Permutation gen_inv = gen.inverse();
    for (const auto& hh : h.elements())
      if (!h.contains(gen_inv * hh * gen)) throw HypothesisError("H is not normal in G");
  }
  std::set<Permutation> region_set(region.begin(), region.end());
  long long unsplit = 0;
  std::set<Permutation> visited;
  for (const auto& start : region_set) {
    if (visited.count(start)) continue;
    auto cls = conjugation_orbit(start, g.generators());
    for (const auto& m : cls) {
      if (!region_set.count(m))
        throw DomainError("region is not a union of conjugacy classes");
      visited.insert(m);
    }
    auto h_orbit = conjugation_orbit(cls.front(), h.generators());
    if (h_orbit.size() == cls.size()) ++unsplit;
  }
  return unsplit;
}

}  // namespace classdist
