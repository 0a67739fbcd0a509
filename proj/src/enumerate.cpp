#include "semibetti/enumerate.hpp"

#include <algorithm>

namespace semibetti {

namespace {

// Membership flags on [0, bound); everything past bound is in S.
struct Node {
  std::vector<char> member;
  Int frobenius;
};

std::vector<Int> gaps_of(const Node& node) {
  std::vector<Int> gaps;
  for (Int x = 1; x <= node.frobenius; ++x) {
    if (!node.member[static_cast<std::size_t>(x)]) gaps.push_back(x);
  }
  return gaps;
}

bool is_minimal_generator(const Node& node, Int x) {
  if (x == 0 || !node.member[static_cast<std::size_t>(x)]) return false;
  for (Int y = 1; y <= x / 2; ++y) {
    if (node.member[static_cast<std::size_t>(y)] && node.member[static_cast<std::size_t>(x - y)]) return false;
  }
  return true;
}

template <class Visit>
void walk(int max_genus, Visit&& visit) {
  // Gaps of a genus-g semigroup lie below 2g, minimal generators below 3g + 1.
  const auto bound = static_cast<std::size_t>(3 * max_genus + 3);
  std::vector<Node> level{Node{std::vector<char>(bound, 1), -1}};
  for (int genus = 0; genus <= max_genus; ++genus) {
    std::vector<Node> next;
    for (const Node& node : level) {
      visit(node);
      if (genus == max_genus) continue;
      Int multiplicity = 1;
      while (!node.member[static_cast<std::size_t>(multiplicity)]) ++multiplicity;
      for (Int x = node.frobenius + 1; x <= node.frobenius + multiplicity + 1; ++x) {
        if (static_cast<std::size_t>(x) >= bound || !is_minimal_generator(node, x)) continue;
        Node child{node.member, x};
        child.member[static_cast<std::size_t>(x)] = 0;
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
}

}  // namespace

std::vector<NumericalSemigroup> semigroups_up_to_genus(int max_genus,
                                                       const std::function<bool(const NumericalSemigroup&)>& keep) {
  std::vector<NumericalSemigroup> out;
  walk(max_genus, [&](const Node& node) {
    NumericalSemigroup s = semigroup_from_gaps(gaps_of(node));
    if (keep(s)) out.push_back(std::move(s));
  });
  std::stable_sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.genus() != b.genus()) return a.genus() < b.genus();
    return a.generators() < b.generators();
  });
  return out;
}

std::vector<NumericalSemigroup> semigroups_up_to_genus(int max_genus) {
  return semigroups_up_to_genus(max_genus, [](const NumericalSemigroup&) { return true; });
}

std::vector<std::size_t> count_by_genus(int max_genus) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_genus) + 1, 0);
  walk(max_genus, [&](const Node& node) { ++counts[static_cast<std::size_t>(std::ranges::count(
                                              node.member.begin(), node.member.begin() + node.frobenius + 1, 0))]; });
  return counts;
}

}  // namespace semibetti
