#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "classdist/permutation.hpp"

namespace classdist {

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// A finite permutation group with its full element list.
///
/// Elements are kept sorted lexicographically on image arrays; this fixes
/// a canonical order used for representatives and deterministic output.
/// Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Closure of the generators under multiplication (breadth-first).
  /// Throws LimitError if the order exceeds order_cap.
  static FiniteGroup from_generators(uint32_t degree, std::vector<Permutation> generators,
                                     std::size_t order_cap = kDefaultOrderCap);

  /// Wrap an already-closed element set (deduplicated here); used for
  /// subgroups carved out of an enumerated group.
  static FiniteGroup from_elements(uint32_t degree, std::vector<Permutation> elements);

  uint32_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(std::size_t idx) const { return elements_[idx]; }

  bool contains(const Permutation& p) const;

  /// Position of p in the canonical element order; throws DomainError if absent.
  std::size_t index_of(const Permutation& p) const;

  /// elements()[0]; the identity is always the lexicographic minimum.
  const Permutation& identity() const { return elements_.front(); }

  bool is_subgroup_of(const FiniteGroup& other) const;

 private:
  uint32_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Breadth-first closure; canonical wrapper around FiniteGroup::from_generators.
FiniteGroup enumerate_elements(uint32_t degree, const std::vector<Permutation>& generators,
                               std::size_t order_cap = kDefaultOrderCap);

/// A small generating set for a closed element list, chosen greedily in
/// canonical order (deterministic).
std::vector<Permutation> minimal_generators(uint32_t degree,
                                            const std::vector<Permutation>& elements);

/// Parsed form of the group-spec document; see docs/README for the format.
struct GroupSpecDocument {
  uint32_t degree = 0;
  std::vector<std::string> group_generators;
  std::vector<std::string> subgroup_generators;
};

GroupSpecDocument parse_group_spec_document(const std::string& text);

/// Parse and enumerate a (G, H) pair from a group-spec document.
/// H's generators must all lie in G.
std::pair<FiniteGroup, FiniteGroup> parse_group_spec(const std::string& text,
                                                     std::size_t order_cap = kDefaultOrderCap);

}  // namespace classdist
