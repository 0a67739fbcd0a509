#pragma once

#include <functional>
#include <vector>

#include "semibetti/semigroup.hpp"

namespace semibetti {

/// Every numerical semigroup of genus <= max_genus, walked down the
/// semigroup tree (children of S remove one minimal generator above F(S)).
/// Output is ordered by genus, then by the generator list.
std::vector<NumericalSemigroup> semigroups_up_to_genus(int max_genus);

/// Same walk, keeping only semigroups that satisfy `keep`. The predicate
/// does not prune the tree.
std::vector<NumericalSemigroup> semigroups_up_to_genus(int max_genus,
                                                       const std::function<bool(const NumericalSemigroup&)>& keep);

/// Number of semigroups of each genus 0..max_genus.
std::vector<std::size_t> count_by_genus(int max_genus);

}  // namespace semibetti
