#include "classdist/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "classdist/arith.hpp"
#include "classdist/errors.hpp"

namespace classdist {

Permutation Permutation::identity(uint32_t degree) {
  std::vector<uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw DomainError("image array is not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::parse_cycles(uint32_t degree, const std::string& text) {
  std::vector<uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  if (pos == text.size()) throw ParseError("empty permutation; the identity is written '()'");
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<uint32_t> cycle;
    while (true) {
      skip_space();
      if (pos == text.size()) throw ParseError("unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character in cycle: " + text);
      unsigned long point = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        point = point * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (point > 1000000) throw ParseError("point out of range: " + text);
        ++pos;
      }
      if (point == 0) throw ParseError("points are 1-based; 0 is not a point");
      if (point > degree)
        throw ParseError("point " + std::to_string(point) + " exceeds degree " +
                         std::to_string(degree));
      uint32_t zero_based = static_cast<uint32_t>(point - 1);
      if (std::find(cycle.begin(), cycle.end(), zero_based) != cycle.end())
        throw ParseError("repeated point within a cycle: " + text);
      cycle.push_back(zero_based);
    }
    any_cycle = true;
    if (cycle.size() >= 2) {
      // Compose this cycle after what has been read so far.
      std::vector<uint32_t> step(degree);
      std::iota(step.begin(), step.end(), 0u);
      for (std::size_t k = 0; k < cycle.size(); ++k)
        step[cycle[k]] = cycle[(k + 1) % cycle.size()];
      for (uint32_t x = 0; x < degree; ++x) images[x] = step[images[x]];
    }
    skip_space();
  }
  if (!any_cycle) throw ParseError("no cycles found: " + text);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (uint32_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> inv(images_.size());
  for (uint32_t x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in composition");
  std::vector<uint32_t> images(a.degree());
  for (uint32_t x = 0; x < a.degree(); ++x) images[x] = b.images_[a.images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::pow(long long e) const {
  long long ord = order();
  long long r = e % ord;
  if (r < 0) r += ord;
  Permutation result = identity(degree());
  Permutation base = *this;
  while (r > 0) {
    if (r & 1) result = result * base;
    base = base * base;
    r >>= 1;
  }
  return result;
}

long long Permutation::order() const {
  long long ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    long long len = 0;
    uint32_t x = start;
    do {
      seen[x] = true;
      x = images_[x];
      ++len;
    } while (x != start);
    ord = lcm_ll(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    uint32_t x = start;
    bool first = true;
    do {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace classdist
