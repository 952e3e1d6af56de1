#pragma once

#include <string>
#include <vector>

#include "classdist/group.hpp"

namespace classdist {

/// A pair (G, H) with H normal in G and G/H cyclic of order n, together
/// with the exponent labeling of the cosets: each element lies in (Hx)^e
/// for a fixed generator coset Hx and a unique e in {0, ..., n-1}.
struct CosetStructure {
  FiniteGroup group;
  FiniteGroup subgroup;
  long long n = 1;
  /// Exponent e per element of `group` (indexed in canonical order).
  std::vector<long long> coset_exponent;
  /// Canonical index (into group.elements()) of the chosen generator x.
  std::size_t generator_index = 0;
  /// Optional display label, carried into verification reports.
  std::string label;

  long long coset_of(const Permutation& g) const;
  long long coset_order_of(const Permutation& g) const;
  long long coset_order_of_exponent(long long e) const;
};

/// Verifies H <= G, normality, and cyclicity of G/H; fixes the generator
/// coset as the coset of the earliest element (canonical order) whose
/// coset has full order in the quotient.  Throws HypothesisError when a
/// structural hypothesis fails.
CosetStructure build_coset_structure(const FiniteGroup& g, const FiniteGroup& h);

/// The bijection g -> g^a on element indices; requires gcd(a, |G|) = 1.
std::vector<std::size_t> power_map(const FiniteGroup& g, long long a);

/// The unique subgroup containing H with index d over it (d | n): the
/// union of the cosets (Hx)^e with e = 0 mod n/d.
FiniteGroup intermediate_subgroup(const CosetStructure& cs, long long d);

/// The canonical coset of quotient-order d: (Hx)^(n/d).  Sorted element list.
std::vector<Permutation> representative_coset(const CosetStructure& cs, long long d);

}  // namespace classdist
