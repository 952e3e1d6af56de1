#include "classdist/coset.hpp"

#include <algorithm>
#include <numeric>

#include "classdist/arith.hpp"
#include "classdist/errors.hpp"

namespace classdist {

long long CosetStructure::coset_of(const Permutation& g) const {
  return coset_exponent[group.index_of(g)];
}

long long CosetStructure::coset_order_of_exponent(long long e) const {
  return n / gcd_ll(n, e);
}

long long CosetStructure::coset_order_of(const Permutation& g) const {
  return coset_order_of_exponent(coset_of(g));
}

CosetStructure build_coset_structure(const FiniteGroup& g, const FiniteGroup& h) {
  if (!h.is_subgroup_of(g)) throw HypothesisError("H is not a subgroup of G");
  if (g.order() % h.order() != 0)
    throw HypothesisError("subgroup order does not divide group order");

  for (const auto& gen : g.generators()) {
    Permutation gen_inv = gen.inverse();
    for (const auto& hh : h.elements()) {
      if (!h.contains(gen_inv * hh * gen))
        throw HypothesisError("H is not normal in G");
    }
  }

  const long long n = static_cast<long long>(g.order() / h.order());

  // Canonical representative (minimum of Hg) per element.
  const std::size_t order = g.order();
  std::vector<std::size_t> coset_rep(order);
  {
    std::vector<bool> done(order, false);
    for (std::size_t idx = 0; idx < order; ++idx) {
      if (done[idx]) continue;
      std::vector<std::size_t> members;
      for (const auto& hh : h.elements())
        members.push_back(g.index_of(hh * g.element(idx)));
      std::size_t rep = *std::min_element(members.begin(), members.end());
      for (std::size_t m : members) {
        coset_rep[m] = rep;
        done[m] = true;
      }
    }
  }

  // Quotient order of each coset: least m >= 1 with g^m in H.
  auto quotient_order = [&](std::size_t idx) {
    Permutation power = g.element(idx);
    long long m = 1;
    while (!h.contains(power)) {
      power = power * g.element(idx);
      ++m;
    }
    return m;
  };

  // Generator coset: earliest element in canonical order with full order.
  std::size_t generator_index = order;
  for (std::size_t idx = 0; idx < order; ++idx) {
    if (quotient_order(idx) == n) {
      generator_index = idx;
      break;
    }
  }
  if (generator_index == order) throw HypothesisError("quotient G/H is not cyclic");

  CosetStructure cs;
  cs.group = g;
  cs.subgroup = h;
  cs.n = n;
  cs.generator_index = generator_index;
  cs.coset_exponent.assign(order, -1);

  // Label cosets by powers of the generator coset.
  std::vector<long long> exponent_of_rep(order, -1);
  Permutation x = g.element(generator_index);
  Permutation power = g.identity();
  for (long long e = 0; e < n; ++e) {
    exponent_of_rep[coset_rep[g.index_of(power)]] = e;
    power = power * x;
  }
  for (std::size_t idx = 0; idx < order; ++idx) {
    cs.coset_exponent[idx] = exponent_of_rep[coset_rep[idx]];
    if (cs.coset_exponent[idx] < 0) throw HypothesisError("quotient G/H is not cyclic");
  }
  return cs;
}

std::vector<std::size_t> power_map(const FiniteGroup& g, long long a) {
  if (std::gcd(a, static_cast<long long>(g.order())) != 1)
    throw DomainError("exponent not coprime to the group order");
  std::vector<std::size_t> map(g.order());
  for (std::size_t idx = 0; idx < g.order(); ++idx)
    map[idx] = g.index_of(g.element(idx).pow(a));
  return map;
}

FiniteGroup intermediate_subgroup(const CosetStructure& cs, long long d) {
  if (d <= 0 || cs.n % d != 0) throw DomainError("d must divide n");
  const long long stride = cs.n / d;
  std::vector<Permutation> members;
  for (std::size_t idx = 0; idx < cs.group.order(); ++idx)
    if (cs.coset_exponent[idx] % stride == 0) members.push_back(cs.group.element(idx));
  FiniteGroup k = FiniteGroup::from_elements(cs.group.degree(), std::move(members));
  if (k.order() != cs.subgroup.order() * static_cast<std::size_t>(d))
    throw Error("internal: intermediate subgroup has wrong order");
  return k;
}

std::vector<Permutation> representative_coset(const CosetStructure& cs, long long d) {
  if (d <= 0 || cs.n % d != 0) throw DomainError("d must divide n");
  const long long e = (cs.n / d) % cs.n;
  std::vector<Permutation> members;
  for (std::size_t idx = 0; idx < cs.group.order(); ++idx)
    if (cs.coset_exponent[idx] == e) members.push_back(cs.group.element(idx));
  return members;
}

}  // namespace classdist
