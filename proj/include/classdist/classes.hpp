#pragma once

#include <map>
#include <utility>
#include <vector>

#include "classdist/coset.hpp"
#include "classdist/group.hpp"

namespace classdist {

/// One conjugacy class of G, annotated (once a coset structure is known)
/// with the quotient-order d of its coset and the divisor c identifying
/// its centralizing subgroup K_c = H*C_G(g).
struct ConjugacyClass {
  Permutation representative;  // canonical minimum of the class
  std::vector<Permutation> members;  // sorted
  long long coset_order = 0;        // d
  long long centralizing_index = 0;  // c; d | c always
  std::size_t size() const { return members.size(); }
};

/// Counting data for one coset structure: per-class annotations plus the
/// aggregated tables.
///
///   counts[(d,c)]        classes in the representative order-d coset whose
///                        centralizing subgroup is K_c
///   coset_totals[d]      classes in the representative order-d coset
///   subgroup_totals[d]   classes of G contained in K_d
///   own_counts[d]        conjugacy classes of K_d under its own action
struct ClassTable {
  CosetStructure cs;
  std::vector<ConjugacyClass> classes;
  std::map<std::pair<long long, long long>, long long> counts;
  std::map<long long, long long> coset_totals;
  std::map<long long, long long> subgroup_totals;
  std::map<long long, long long> own_counts;

  long long count(long long d, long long c) const;
};

/// Conjugation orbits of G on itself; classes sorted by representative,
/// coset annotations left at zero.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// {h in G : hg = gh} as a subgroup (brute-force scan).
FiniteGroup centralizer(const FiniteGroup& g, const Permutation& elem);

/// The divisor c with H*C_G(g) = K_c, computed as the lcm of the coset
/// orders over the centralizer of g (no product set is materialized).
long long centralizing_index(const CosetStructure& cs, const Permutation& elem);

/// Full class table for a coset structure.
ClassTable build_class_table(const CosetStructure& cs);

/// Number of orbits the class splits into under conjugation by K_j,
/// computed by direct orbit refinement.  Requires the class to lie in K_j.
long long split_count(const CosetStructure& cs, const ConjugacyClass& cls, long long j);

/// Conjugacy classes of K under its own action.
long long subgroup_class_count(const FiniteGroup& k);

/// Number of G-classes inside `region` that stay single classes when the
/// conjugation action is restricted to H.  `region` must be a union of
/// G-classes and H must be normal in G.
long long unsplit_class_count(const FiniteGroup& g, const FiniteGroup& h,
                              const std::vector<Permutation>& region);

}  // namespace classdist
