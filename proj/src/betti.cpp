#include "semibetti/betti.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace semibetti {

void GradedBettiTable::add(int i, Int j, Int count) {
  if (count == 0) return;
  auto& slot = entries_[{i, j}];
  slot += count;
  if (slot == 0) entries_.erase({i, j});
}

Int GradedBettiTable::at(int i, Int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::map<Int, Int> GradedBettiTable::row(int i) const {
  std::map<Int, Int> out;
  for (const auto& [key, beta] : entries_) {
    if (key.first == i) out.emplace(key.second, beta);
  }
  return out;
}

int GradedBettiTable::max_index() const { return entries_.empty() ? -1 : entries_.rbegin()->first.first; }

std::vector<Int> total_betti(const GradedBettiTable& table) {
  std::vector<Int> totals(static_cast<std::size_t>(table.max_index() + 1), 0);
  for (const auto& [key, beta] : table.entries()) totals[static_cast<std::size_t>(key.first)] += beta;
  return totals;
}

Int betti_degree_bound(const NumericalSemigroup& s) { return s.frobenius() + s.generator_sum(); }

GradedBettiTable graded_betti(const NumericalSemigroup& s, const BettiOptions& options) {
  const Int last = betti_degree_bound(s) + std::max<Int>(options.extra_degrees, 0);
  const unsigned workers = std::max(1u, options.threads);

  struct Entry {
    int i;
    Int j;
    Int beta;
  };
  std::vector<std::vector<Entry>> found(workers);
  const auto work = [&](unsigned worker) {
    for (Int degree = worker; degree <= last; degree += workers) {
      if (!s.contains(degree)) continue;
      const auto dims = reduced_homology_dims(divisor_complex(s, degree), options.field);
      for (std::size_t q = 0; q < dims.size(); ++q) {
        if (dims[q] != 0) found[worker].push_back({static_cast<int>(q), degree, static_cast<Int>(dims[q])});
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  GradedBettiTable table;
  table.degree_bound = betti_degree_bound(s);
  for (const auto& chunk : found) {
    for (const Entry& e : chunk) table.add(e.i, e.j, e.beta);
  }
  return table;
}

HilbertData hilbert_numerator(const NumericalSemigroup& s) {
  const Int bound = betti_degree_bound(s);
  const Int length = bound + 1 + s.generators().back();
  std::vector<Int> series(static_cast<std::size_t>(length), 0);
  for (Int d = 0; d < length; ++d) series[static_cast<std::size_t>(d)] = s.contains(d) ? 1 : 0;
  for (Int n : s.generators()) {
    for (Int d = length - 1; d >= n; --d) {
      series[static_cast<std::size_t>(d)] -= series[static_cast<std::size_t>(d - n)];
    }
  }
  for (Int d = bound + 1; d < length; ++d) {
    if (series[static_cast<std::size_t>(d)] != 0) {
      throw Error(ErrorKind::InternalInconsistency,
                  "Hilbert numerator has a nonzero coefficient at t^" + std::to_string(d) + " past the bound", d);
    }
  }
  series.resize(static_cast<std::size_t>(bound + 1));
  return HilbertData{IntPolynomial(std::move(series)), s.generators()};
}

IntPolynomial euler_polynomial(const GradedBettiTable& table) {
  IntPolynomial p;
  for (const auto& [key, beta] : table.entries()) p.add_term(key.second, key.first % 2 == 0 ? beta : -beta);
  return p;
}

GradedBettiTable infer_beta2(const NumericalSemigroup& s, const GradedBettiTable& partial) {
  if (!partial.row(2).empty()) {
    throw Error(ErrorKind::Inconsistent, "the partial table already has row 2 entries");
  }
  const IntPolynomial residual = hilbert_numerator(s).numerator - euler_polynomial(partial);
  GradedBettiTable completed = partial;
  for (Int d = 0; d <= residual.degree(); ++d) {
    const Int beta = residual.coefficient(d);
    if (beta < 0) {
      throw Error(ErrorKind::Inconsistent,
                  "the given rows force beta_{2," + std::to_string(d) + "} = " + std::to_string(beta), d);
    }
    completed.add(2, d, beta);
  }
  return completed;
}

bool is_complete_intersection(const NumericalSemigroup& s) {
  const auto totals = total_betti(graded_betti(s));
  const Int relations = totals.size() > 1 ? totals[1] : 0;
  return relations == static_cast<Int>(s.embedding_dim()) - 1;
}

std::vector<TableMismatch> table_mismatches(const GradedBettiTable& left, const GradedBettiTable& right) {
  std::vector<TableMismatch> out;
  auto l = left.entries().begin();
  auto r = right.entries().begin();
  const auto lend = left.entries().end();
  const auto rend = right.entries().end();
  while (l != lend || r != rend) {
    if (r == rend || (l != lend && l->first < r->first)) {
      out.push_back({l->first.first, l->first.second, l->second, 0});
      ++l;
    } else if (l == lend || r->first < l->first) {
      out.push_back({r->first.first, r->first.second, 0, r->second});
      ++r;
    } else {
      if (l->second != r->second) out.push_back({l->first.first, l->first.second, l->second, r->second});
      ++l;
      ++r;
    }
  }
  return out;
}

}  // namespace semibetti
