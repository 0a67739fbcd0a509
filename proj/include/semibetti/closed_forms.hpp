#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semibetti/betti.hpp"
#include "semibetti/semigroup.hpp"

namespace semibetti {

// ---------------------------------------------------------------------------
// Three-generated, non-symmetric semigroups
// ---------------------------------------------------------------------------

/// Which pseudo-Frobenius expression equals the Frobenius number g_1.
enum class FrobeniusCase {
  /// g_1 = (c_2 - 1) n_2 + (r_{1,3} - 1) n_3 - n_1; doubles use B_1.
  ViaC2,
  /// g_1 = (c_3 - 1) n_3 + (r_{1,2} - 1) n_2 - n_1; doubles use B_2.
  ViaC3,
};

std::string_view to_string(FrobeniusCase c);

/// c_i is the least positive multiple with c_i n_i in <n_j, n_k>, and
/// c_i n_i = r_{i,j} n_j + r_{i,k} n_k is its unique representation. These
/// are the exponents of the 2x3 matrix
///   ( X^{r31}  Y^{r12}  Z^{r23} )
///   ( Z^{r13}  X^{r21}  Y^{r32} )
/// whose maximal minors generate the defining ideal.
struct HerzogData {
  std::array<Int, 3> n{};
  std::array<Int, 3> c{};
  Int r12 = 0, r13 = 0, r21 = 0, r23 = 0, r31 = 0, r32 = 0;
  FrobeniusCase frobenius_case = FrobeniusCase::ViaC3;
  Int g1 = 0;  // Frobenius number
  Int g2 = 0;  // the other pseudo-Frobenius number

  Int pf_via_c3() const { return (c[2] - 1) * n[2] + (r12 - 1) * n[1] - n[0]; }
  Int pf_via_c2() const { return (c[1] - 1) * n[1] + (r13 - 1) * n[2] - n[0]; }
};

/// Throws NotThreeGenerated, Symmetric, NonUniqueRepresentation; also
/// InternalInconsistency if any identity in herzog_identity_violations fails.
HerzogData herzog_data(const NumericalSemigroup& s);

/// Human-readable list of identities that fail for `h`: the c_i sums of the
/// matrix exponents, the generator formulas in the r's, the pseudo-Frobenius
/// set, and the signed g_1 - g_2 identities of the detected case. Empty when
/// everything holds.
std::vector<std::string> herzog_identity_violations(const HerzogData& h);

/// beta_1 = 1 at n_i c_i, beta_2 = 1 at n_2 c_2 + n_3 r_{1,3} and
/// n_3 c_3 + n_2 r_{1,2}.
GradedBettiTable herzog_betti(const NumericalSemigroup& s);

// ---------------------------------------------------------------------------
// Binomial ideal generators
// ---------------------------------------------------------------------------

/// X^a - X^b over the variables X, Y, Z, U, V with a common degree.
struct BinomialGenerator {
  std::array<int, 5> lhs{};
  std::array<int, 5> rhs{};
  Int degree = 0;

  std::string to_string() const;
  friend bool operator==(const BinomialGenerator&, const BinomialGenerator&) = default;
};

/// Degree of a monomial given the weights of X, Y, Z, U, V.
Int monomial_degree(const std::array<int, 5>& exponents, std::span<const Int> weights);

/// The three 2x2 minors, in the order X^{c1} - Y^{r12} Z^{r13},
/// X^{r31} Y^{r32} - Z^{c3}, Y^{c2} - X^{r21} Z^{r23}.
std::vector<BinomialGenerator> ideal_generators_3gen(const NumericalSemigroup& s);

/// The nine minimal generators of the ideal of the double T = D(S, f) over
/// X, Y, Z (weights 2n_i), U (f - 2g_1), V (f - 2g_2): three pure minors,
/// three U/V column minors oriented by the Frobenius case, and
/// U^2 - m_1, UV - m_2, V^2 - m_3. Each m_i takes the factorization of its
/// degree over (2n_1, 2n_2, 2n_3) with the largest X exponent, then the
/// largest Y exponent.
std::vector<BinomialGenerator> ideal_generators_doubled(const NumericalSemigroup& s, Int f);

// ---------------------------------------------------------------------------
// Telescopic semigroups and complete intersections
// ---------------------------------------------------------------------------

/// Relation degrees of a telescopic sequence taken in the given order:
/// degrees(i) = (d_{i-1}/d_i) degrees(i-1) plus (d_{i-1}/d_i)(n_i/d_i).
/// Throws NotTelescopic.
std::vector<Int> telescopic_relation_degrees(std::span<const Int> seq);

/// Some ordering of the minimal generators that is a telescopic sequence,
/// preferring the ascending one. nullopt if none exists.
std::optional<std::vector<Int>> telescopic_ordering(const NumericalSemigroup& s);

/// beta_{i,j} = number of i-element subsets of the relation degrees summing
/// to j. Throws ArityMismatch unless there are embedding_dim - 1 degrees.
GradedBettiTable ci_graded_betti(std::span<const Int> relation_degrees, std::size_t embedding_dim);

// ---------------------------------------------------------------------------
// Comparing the doubles for f and f + 2
// ---------------------------------------------------------------------------

struct DiffEntry {
  int i;
  Int j;
  std::string bucket;
  Int before;             // beta_{i,j} for the double at f
  Int after;              // beta_{i,j} for the double at f + 2
  Int predicted_after;    // what the closed form says `after` must be
  bool consistent() const { return after == predicted_after; }
};

struct DoublesComparison {
  DoubleSpec first;
  DoubleSpec second;
  GradedBettiTable first_table;
  GradedBettiTable second_table;
  std::vector<DiffEntry> entries;

  bool consistent() const;
  /// Entries whose value changed between the two doubles.
  std::vector<DiffEntry> changed() const;
};

/// Both doubles of a telescopic S via their relation degrees, and every
/// degree of either table labelled by its family: "sum" (sum of i relation
/// degrees of S doubled), "vacated" (2(f - 2g) plus i-1 of them) or "gained"
/// (2(f - 2g) + 4 plus i-1 of them). Throws FEven, FTooSmall, NotTelescopic,
/// DegenerateGenerators.
DoublesComparison doubled_telescopic_betti(const NumericalSemigroup& s, Int f);

// ---------------------------------------------------------------------------
// Doubles of three-generated non-symmetric semigroups
// ---------------------------------------------------------------------------

struct DegreeSets {
  FrobeniusCase frobenius_case;
  Int u = 0;  // f - 2 g_1
  Int v = 0;  // f - 2 g_2
  std::vector<Int> m;  // pure X, Y, Z relations, independent of f
  std::vector<Int> n;  // mixed U/V relations (N_1 or N_2 by case)
  std::vector<Int> p;  // 2u, u + v, 2v
  Int alpha = 0;       // 2(n1+n2+n3) + u + v + f, the top degree
  std::vector<Int> b;  // m, n, p together
};

DegreeSets degree_sets(const HerzogData& h, Int f);

/// Rows 0, 1, 3, 4 of the double T = D(S, f) in closed form: 0 at 0, B in
/// row 1, alpha - B in row 3, alpha in row 4. Row 2 is completed from the
/// Hilbert numerator of T. Throws NotApplicable (S not 3-generated
/// non-symmetric), FEven, FTooSmall, DegenerateGenerators (the doubled
/// generators are not minimal), Inconsistent.
GradedBettiTable doubled_3gen_betti(const NumericalSemigroup& s, Int f);

/// Tables for f and f + 2 and the bucket of every degree in rows 0, 1, 3, 4:
/// "M" keeps its value, "N+2", "P+4" (row 1), "M'+6", "N'+4", "P'+2"
/// (row 3) and "alpha+6" (row 4) carry the shifted families, anything else
/// is "vacated" and must be zero at f + 2.
DoublesComparison compare_doubles_3gen(const NumericalSemigroup& s, Int f);

// ---------------------------------------------------------------------------
// Doubles of four-generated symmetric non complete intersections
// ---------------------------------------------------------------------------

/// Total Betti numbers (1, 6, 10, 6, 1) of the double. Throws NotApplicable
/// unless S is 4-generated, symmetric and not a complete intersection;
/// FEven, FTooSmall, DegenerateGenerators.
std::vector<Int> doubled_4sym_total(const NumericalSemigroup& s, Int f);

// ---------------------------------------------------------------------------
// Multiplicity four
// ---------------------------------------------------------------------------

enum class FourIrreducibleClass { Exceptional1, Exceptional2, Irreducible, NotFourIrreducible };

std::string_view to_string(FourIrreducibleClass c);

struct FourIrreducibleReport {
  FourIrreducibleClass classification;
  GradedBettiTable table;
  /// "oracle", "complete-intersection" or "herzog".
  std::string method;
  std::string note;
};

/// <4,5,6,7>, <4,6,7,9>, irreducible, or neither; with a Betti table from
/// the cheapest route that applies. Throws MultiplicityMismatch.
FourIrreducibleReport classify_4_irreducible(const NumericalSemigroup& s);

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

struct FormulaResult {
  /// "complete-intersection", "herzog", "double-3gen", "double-4sym".
  std::string shape;
  /// Absent when only the totals are known in closed form.
  std::optional<GradedBettiTable> table;
  std::vector<Int> totals;
  /// For the doubled shapes: the half and the f that produce S.
  std::optional<NumericalSemigroup> half;
  std::optional<Int> f;
};

/// Picks the closed form that applies to S. Throws NotApplicable.
FormulaResult formula_betti(const NumericalSemigroup& s);

}  // namespace semibetti
