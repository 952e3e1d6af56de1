#include "classdist/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "classdist/errors.hpp"

namespace classdist {

FiniteGroup FiniteGroup::from_generators(uint32_t degree, std::vector<Permutation> generators,
                                         std::size_t order_cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw DomainError("generator degree mismatch");

  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = current * g;
      if (seen.insert(next).second) {
        if (seen.size() > order_cap)
          throw LimitError("group too large: order exceeds cap of " +
                           std::to_string(order_cap));
        frontier.push_back(std::move(next));
      }
    }
  }

  FiniteGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_.assign(seen.begin(), seen.end());
  return group;
}

FiniteGroup FiniteGroup::from_elements(uint32_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw DomainError("element list must contain the identity");
  FiniteGroup group;
  group.degree_ = degree;
  group.elements_ = std::move(elements);
  group.generators_ = minimal_generators(degree, group.elements_);
  return group;
}

bool FiniteGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw DomainError("element not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

FiniteGroup enumerate_elements(uint32_t degree, const std::vector<Permutation>& generators,
                               std::size_t order_cap) {
  return FiniteGroup::from_generators(degree, generators, order_cap);
}

std::vector<Permutation> minimal_generators(uint32_t degree,
                                            const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::set<Permutation> closure = {Permutation::identity(degree)};
  for (const auto& candidate : elements) {
    if (closure.count(candidate)) continue;
    gens.push_back(candidate);
    // Re-close with the new generator.
    std::deque<Permutation> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      Permutation current = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& g : gens) {
        Permutation next = current * g;
        if (closure.insert(next).second) frontier.push_back(std::move(next));
      }
    }
    if (closure.size() == elements.size()) break;
  }
  return gens;
}

namespace {

std::string strip(const std::string& line) {
  std::string out = line;
  if (auto hash = out.find('#'); hash != std::string::npos) out.erase(hash);
  auto is_space = [](unsigned char c) { return std::isspace(c); };
  while (!out.empty() && is_space(out.back())) out.pop_back();
  std::size_t start = 0;
  while (start < out.size() && is_space(out[start])) ++start;
  return out.substr(start);
}

}  // namespace

GroupSpecDocument parse_group_spec_document(const std::string& text) {
  GroupSpecDocument doc;
  enum class Section { None, Generators, Subgroup };
  Section section = Section::None;
  bool have_degree = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    if (line.rfind("degree:", 0) == 0) {
      if (have_degree) fail("duplicate degree");
      long long value = 0;
      try {
        value = std::stoll(strip(line.substr(7)));
      } catch (const std::exception&) {
        fail("invalid degree value");
      }
      if (value <= 0 || value > 100000) fail("degree must be a positive integer");
      doc.degree = static_cast<uint32_t>(value);
      have_degree = true;
    } else if (line == "generators:") {
      section = Section::Generators;
    } else if (line == "subgroup:") {
      section = Section::Subgroup;
    } else if (line[0] == '(') {
      if (!have_degree) fail("degree must come before any permutation");
      if (section == Section::None) fail("permutation outside a section");
      if (section == Section::Generators)
        doc.group_generators.push_back(line);
      else
        doc.subgroup_generators.push_back(line);
    } else {
      fail("unrecognized line: " + line);
    }
  }
  if (!have_degree) throw ParseError("missing 'degree:' line");
  return doc;
}

std::pair<FiniteGroup, FiniteGroup> parse_group_spec(const std::string& text,
                                                     std::size_t order_cap) {
  GroupSpecDocument doc = parse_group_spec_document(text);
  std::vector<Permutation> g_gens;
  for (const auto& s : doc.group_generators)
    g_gens.push_back(Permutation::parse_cycles(doc.degree, s));
  std::vector<Permutation> h_gens;
  for (const auto& s : doc.subgroup_generators)
    h_gens.push_back(Permutation::parse_cycles(doc.degree, s));

  FiniteGroup g = FiniteGroup::from_generators(doc.degree, g_gens, order_cap);
  FiniteGroup h = FiniteGroup::from_generators(doc.degree, h_gens, order_cap);
  for (const auto& gen : h_gens)
    if (!g.contains(gen))
      throw ParseError("subgroup generator " + gen.to_cycles() + " is not in the group");
  return {std::move(g), std::move(h)};
}

}  // namespace classdist
