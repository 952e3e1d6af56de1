#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace classdist {

/// A permutation of {0, ..., degree-1}, stored as its image array.
/// Points are 0-based internally; cycle notation uses 1-based points.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(uint32_t degree);

  /// Build from an image array; validates bijectivity.
  explicit Permutation(std::vector<uint32_t> images);

  /// Parse cycle notation, e.g. "(1 2)(3 4)"; "()" is the identity.
  /// Cycles are composed left to right, so non-disjoint cycles are
  /// accepted as a product.
  static Permutation parse_cycles(uint32_t degree, const std::string& text);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t apply(uint32_t point) const { return images_[point]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Composition: (a * b) applies a first, then b.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  Permutation pow(long long e) const;

  /// Order as a group element (lcm of cycle lengths).
  long long order() const;

  /// Disjoint-cycle string with 1-based points; identity prints "()".
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<uint32_t> images_;
};

}  // namespace classdist
