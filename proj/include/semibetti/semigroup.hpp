#pragma once

#include <optional>
#include <span>
#include <vector>

#include "semibetti/error.hpp"

namespace semibetti {

/// A numerical semigroup held by its minimal generating set, with the
/// invariants that everything downstream keeps asking for computed once at
/// construction. Immutable, so instances can be shared freely across threads.
///
/// The whole monoid N is represented by the generator list {1}; by
/// convention its Frobenius number is -1 and it has no gaps, no
/// pseudo-Frobenius numbers and type 0.
class NumericalSemigroup {
 public:
  const std::vector<Int>& generators() const noexcept { return generators_; }
  Int multiplicity() const noexcept { return generators_.front(); }
  std::size_t embedding_dim() const noexcept { return generators_.size(); }
  Int frobenius() const noexcept { return frobenius_; }
  Int conductor() const noexcept { return frobenius_ + 1; }
  const std::vector<Int>& gaps() const noexcept { return gaps_; }
  std::size_t genus() const noexcept { return gaps_.size(); }
  const std::vector<Int>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }
  std::size_t type() const noexcept { return pseudo_frobenius_.size(); }
  /// Apery set with respect to the multiplicity, indexed by residue.
  const std::vector<Int>& apery() const noexcept { return apery_; }
  bool is_whole_monoid() const noexcept { return frobenius_ < 0; }
  Int generator_sum() const noexcept;

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  explicit NumericalSemigroup(std::vector<Int> minimal_generators);
  friend NumericalSemigroup make_semigroup(std::span<const Int> raw_gens);

  std::vector<Int> generators_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
  std::vector<Int> gaps_;
  std::vector<Int> pseudo_frobenius_;
};

struct ClassificationRecord {
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool irreducible = false;
  bool telescopic = false;
  std::optional<bool> m_irreducible;
};

struct DoubleSpec {
  NumericalSemigroup base;
  Int f;
  /// [2n_1, ..., 2n_k, f - 2g_1, ..., f - 2g_t] before minimalization.
  std::vector<Int> raw_generators;
  NumericalSemigroup result;
  bool generators_were_minimal;
};

/// Builds the semigroup generated by `raw_gens`, reduced to its minimal
/// generating set. Throws EmptyInput, InvalidGenerator (entry < 1) or
/// NonCoprime (value = the gcd); inputs are never rescaled.
NumericalSemigroup make_semigroup(std::span<const Int> raw_gens);
inline NumericalSemigroup make_semigroup(std::initializer_list<Int> raw_gens) {
  return make_semigroup(std::span<const Int>(raw_gens.begin(), raw_gens.size()));
}

/// Builds the semigroup whose complement in N is exactly `gaps`. The gap
/// set must be the complement of a submonoid; InternalInconsistency otherwise.
NumericalSemigroup semigroup_from_gaps(std::span<const Int> gaps);

/// Minimal generating subset of `gens` (sorted, deduplicated). Generators are
/// processed in ascending order and dropped when representable by the ones
/// already kept.
std::vector<Int> minimalize(std::span<const Int> gens);

bool contains(const NumericalSemigroup& s, Int x);

/// Least element of S in each residue class modulo n; n must be a positive
/// element of S (NotAMember otherwise).
std::vector<Int> apery_set(const NumericalSemigroup& s, Int n);

/// x not in S with x + n in S for every generator n. Empty for N.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);

/// Telescopic test of the sequence in the given order: with d_i the running
/// gcd, n_i/d_i must lie in <n_1/d_{i-1}, ..., n_{i-1}/d_{i-1}> for i >= 2.
/// Throws InvalidGenerator if the sequence is empty, has a non-positive entry
/// or is not coprime.
bool is_telescopic(std::span<const Int> seq);

/// Symmetric, pseudo-symmetric, irreducible, telescopic (on the sorted
/// minimal generators). When `m_query` is given it must equal the
/// multiplicity (MultiplicityMismatch otherwise) and m-irreducibility is
/// reported as well.
ClassificationRecord classify(const NumericalSemigroup& s, std::optional<Int> m_query = std::nullopt);

/// {x in N : 2x in S}.
NumericalSemigroup half(const NumericalSemigroup& s);

/// Smallest odd f with f >= 3 g(S) + 1.
Int smallest_double_f(const NumericalSemigroup& s);

/// The symmetric semigroup <2n_1, ..., 2n_k, f - 2g_1, ..., f - 2g_t> over the
/// pseudo-Frobenius numbers g_i of S. Throws TrivialSemigroup for S = N,
/// FEven, FTooSmall (f < 3g(S) + 1). A raw list that is not minimal is
/// accepted and flagged in `generators_were_minimal`.
DoubleSpec double_semigroup(const NumericalSemigroup& s, Int f);

}  // namespace semibetti
