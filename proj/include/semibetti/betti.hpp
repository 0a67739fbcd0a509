#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "semibetti/complex.hpp"
#include "semibetti/polynomial.hpp"
#include "semibetti/semigroup.hpp"

namespace semibetti {

/// Graded Betti numbers as a sparse map (i, j) -> beta_{i,j}, zero entries
/// never stored. Iteration order is by i, then j.
class GradedBettiTable {
 public:
  using Key = std::pair<int, Int>;

  void add(int i, Int j, Int count = 1);
  Int at(int i, Int j) const;
  const std::map<Key, Int>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Degrees of row i with their multiplicities.
  std::map<Int, Int> row(int i) const;
  /// Highest homological index with a nonzero entry, -1 if empty.
  int max_index() const;

  std::optional<Int> degree_bound;

  /// Tables compare by entries only; the recorded bound is metadata.
  friend bool operator==(const GradedBettiTable& a, const GradedBettiTable& b) { return a.entries_ == b.entries_; }

 private:
  std::map<Key, Int> entries_;
};

/// beta_i = sum_j beta_{i,j}, indices 0..max_index.
std::vector<Int> total_betti(const GradedBettiTable& table);

/// F(S) + sum of generators. Above it every divisor complex is a full
/// simplex: if s - sum(all) > F(S) then every subset difference is in S.
Int betti_degree_bound(const NumericalSemigroup& s);

struct BettiOptions {
  CoefficientField field = CoefficientField::rationals();
  /// Also evaluate this many degrees past the bound (they must come out zero).
  Int extra_degrees = 0;
  /// Degrees are independent; >1 spreads them over worker threads.
  unsigned threads = 1;
};

/// beta_{i,s} = dim H~_{i-1}(Delta_s) for every s in S up to the bound.
GradedBettiTable graded_betti(const NumericalSemigroup& s, const BettiOptions& options = {});

struct HilbertData {
  IntPolynomial numerator;
  std::vector<Int> denominator_degrees;
};

/// Numerator N(t) of sum_{s in S} t^s = N(t) / prod (1 - t^{n_i}).
/// Throws InternalInconsistency if the coefficients past the Betti degree
/// bound fail to vanish.
HilbertData hilbert_numerator(const NumericalSemigroup& s);

/// sum_{i,j} (-1)^i beta_{i,j} t^j.
IntPolynomial euler_polynomial(const GradedBettiTable& table);

/// Completes row 2 from the Hilbert numerator, given every other row.
/// Throws Inconsistent (value = degree) if a forced entry would be negative.
GradedBettiTable infer_beta2(const NumericalSemigroup& s, const GradedBettiTable& partial);

/// K[S] is a complete intersection iff beta_1 = embedding dimension - 1.
bool is_complete_intersection(const NumericalSemigroup& s);

struct TableMismatch {
  int i;
  Int j;
  Int left;
  Int right;
  friend bool operator==(const TableMismatch&, const TableMismatch&) = default;
};

/// Every (i, j) where the two tables disagree, sorted.
std::vector<TableMismatch> table_mismatches(const GradedBettiTable& left, const GradedBettiTable& right);

}  // namespace semibetti
