#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "internal.hpp"
#include "semibetti/closed_forms.hpp"

namespace semibetti {

namespace {

// (size, sum) over all subsets of `values`, with multiplicity.
std::vector<std::pair<int, Int>> subset_sums(std::span<const Int> values) {
  std::vector<std::pair<int, Int>> out;
  const std::size_t count = std::size_t{1} << values.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    int size = 0;
    Int sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        ++size;
        sum += values[i];
      }
    }
    out.emplace_back(size, sum);
  }
  return out;
}

bool in_generated_monoid(Int target, std::span<const Int> gens) {
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (Int x = 1; x <= target; ++x) {
    for (Int g : gens) {
      if (g <= x && reach[static_cast<std::size_t>(x - g)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace

std::vector<Int> telescopic_relation_degrees(std::span<const Int> seq) {
  if (!is_telescopic(seq)) {
    throw Error(ErrorKind::NotTelescopic, "(" + detail::join(seq) + ") is not a telescopic sequence");
  }
  std::vector<Int> degrees;
  Int prev_gcd = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const Int cur_gcd = std::gcd(prev_gcd, seq[i]);
    const Int scale = prev_gcd / cur_gcd;
    for (Int& d : degrees) d *= scale;
    degrees.push_back(scale * (seq[i] / cur_gcd));
    prev_gcd = cur_gcd;
  }
  return degrees;
}

std::optional<std::vector<Int>> telescopic_ordering(const NumericalSemigroup& s) {
  const auto& gens = s.generators();
  if (is_telescopic(gens)) return gens;

  // Depth-first over orderings. The condition for the element at position i
  // only involves the prefix, so a failing prefix prunes its whole subtree.
  std::vector<Int> prefix;
  std::vector<char> used(gens.size(), 0);
  std::function<bool(Int)> extend = [&](Int prefix_gcd) -> bool {
    if (prefix.size() == gens.size()) return prefix_gcd == 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (used[i]) continue;
      const Int next = gens[i];
      const Int next_gcd = std::gcd(prefix_gcd, next);
      if (!prefix.empty()) {
        std::vector<Int> scaled;
        for (Int p : prefix) scaled.push_back(p / prefix_gcd);
        if (!in_generated_monoid(next / next_gcd, scaled)) continue;
      }
      used[i] = 1;
      prefix.push_back(next);
      if (extend(next_gcd)) return true;
      prefix.pop_back();
      used[i] = 0;
    }
    return false;
  };
  if (extend(0)) return prefix;
  return std::nullopt;
}

GradedBettiTable ci_graded_betti(std::span<const Int> relation_degrees, std::size_t embedding_dim) {
  if (embedding_dim == 0 || relation_degrees.size() != embedding_dim - 1) {
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(embedding_dim == 0 ? 0 : embedding_dim - 1) +
                                              " relation degrees, got " + std::to_string(relation_degrees.size()));
  }
  GradedBettiTable table;
  for (const auto& [size, sum] : subset_sums(relation_degrees)) table.add(size, sum);
  return table;
}

bool DoublesComparison::consistent() const {
  return std::all_of(entries.begin(), entries.end(), [](const DiffEntry& e) { return e.consistent(); });
}

std::vector<DiffEntry> DoublesComparison::changed() const {
  std::vector<DiffEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [](const DiffEntry& e) { return e.before != e.after; });
  return out;
}

DoublesComparison doubled_telescopic_betti(const NumericalSemigroup& s, Int f) {
  const auto order = telescopic_ordering(s);
  if (!order) throw Error(ErrorKind::NotTelescopic, "<" + detail::join(s.generators()) + "> is not telescopic");
  DoubleSpec first = detail::require_minimal_double(s, f);
  DoubleSpec second = detail::require_minimal_double(s, f + 2);

  const std::vector<Int> base = telescopic_relation_degrees(*order);
  const Int g = s.frobenius();
  const auto table_for = [&](Int ff) {
    std::vector<Int> seq;
    for (Int n : *order) seq.push_back(2 * n);
    seq.push_back(ff - 2 * g);
    const auto degrees = telescopic_relation_degrees(seq);
    return ci_graded_betti(degrees, seq.size());
  };
  GradedBettiTable t1 = table_for(f);
  GradedBettiTable t2 = table_for(f + 2);
  t1.degree_bound = betti_degree_bound(first.result);
  t2.degree_bound = betti_degree_bound(second.result);

  std::vector<Int> doubled_base;
  for (Int d : base) doubled_base.push_back(2 * d);
  const auto sums = subset_sums(doubled_base);
  const Int shift = 2 * (f - 2 * g);

  std::set<GradedBettiTable::Key> keys;
  for (const auto& [key, beta] : t1.entries()) keys.insert(key);
  for (const auto& [key, beta] : t2.entries()) keys.insert(key);

  DoublesComparison cmp{std::move(first), std::move(second), t1, t2, {}};
  for (const auto& [i, j] : keys) {
    Int same = 0, vacated = 0, gained = 0;
    for (const auto& [size, sum] : sums) {
      if (size == i && sum == j) ++same;
      if (size == i - 1 && shift + sum == j) ++vacated;
      if (size == i - 1 && shift + 4 + sum == j) ++gained;
    }
    std::string bucket;
    const auto tag = [&](Int count, const char* name) {
      if (count == 0) return;
      if (!bucket.empty()) bucket += "+";
      bucket += name;
    };
    tag(same, "sum");
    tag(vacated, "vacated");
    tag(gained, "gained");
    if (bucket.empty()) bucket = "unexplained";
    const Int before = t1.at(i, j);
    cmp.entries.push_back({i, j, bucket, before, t2.at(i, j), before - vacated + gained});
  }
  return cmp;
}

}  // namespace semibetti
