#include "semibetti/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace semibetti {

namespace {

std::string join(std::span<const Int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Int gcd_of(std::span<const Int> values) {
  Int d = 0;
  for (Int v : values) d = std::gcd(d, v);
  return d;
}

// Whether `target` is a non-negative integer combination of `gens`.
bool representable(Int target, std::span<const Int> gens) {
  if (target < 0) return false;
  if (target == 0) return true;
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

// Shortest path over residues mod `modulus`, one edge per generator.
std::vector<Int> apery_by_dijkstra(std::span<const Int> gens, Int modulus) {
  constexpr Int kUnreached = -1;
  std::vector<Int> dist(static_cast<std::size_t>(modulus), kUnreached);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens) {
      const Int nr = (r + g) % modulus;
      const Int nd = d + g;
      Int& slot = dist[static_cast<std::size_t>(nr)];
      if (slot == kUnreached || nd < slot) {
        slot = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> minimal_generators)
    : generators_(std::move(minimal_generators)) {
  apery_ = apery_by_dijkstra(generators_, multiplicity());
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
  for (Int x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) gaps_.push_back(x);
  }
  for (Int x : gaps_) {
    const bool pseudo = std::all_of(generators_.begin(), generators_.end(),
                                    [&](Int n) { return contains(x + n); });
    if (pseudo) pseudo_frobenius_.push_back(x);
  }
}

Int NumericalSemigroup::generator_sum() const noexcept {
  return std::accumulate(generators_.begin(), generators_.end(), Int{0});
}

std::vector<Int> minimalize(std::span<const Int> gens) {
  std::vector<Int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Int> kept;
  for (Int n : sorted) {
    if (!representable(n, kept)) kept.push_back(n);
  }
  return kept;
}

NumericalSemigroup make_semigroup(std::span<const Int> raw_gens) {
  if (raw_gens.empty()) throw Error(ErrorKind::EmptyInput, "generator list is empty");
  for (Int n : raw_gens) {
    if (n < 1) {
      throw Error(ErrorKind::InvalidGenerator, "generators must be positive, got " + std::to_string(n), n);
    }
  }
  const Int d = gcd_of(raw_gens);
  if (d != 1) {
    throw Error(ErrorKind::NonCoprime,
                "gcd(" + join(raw_gens) + ") = " + std::to_string(d) + "; divide it out first", d);
  }
  return NumericalSemigroup(minimalize(raw_gens));
}

NumericalSemigroup semigroup_from_gaps(std::span<const Int> gaps) {
  std::vector<Int> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  const Int frobenius = sorted.empty() ? -1 : sorted.back();
  std::vector<char> in_s(static_cast<std::size_t>(frobenius + 2), 1);
  for (Int g : sorted) {
    if (g < 1) throw Error(ErrorKind::InternalInconsistency, "gap " + std::to_string(g) + " is not positive");
    in_s[static_cast<std::size_t>(g)] = 0;
  }
  const auto member = [&](Int x) { return x > frobenius || in_s[static_cast<std::size_t>(x)] != 0; };

  Int multiplicity = 1;
  while (!member(multiplicity)) ++multiplicity;
  // Minimal generators lie below conductor + multiplicity.
  std::vector<Int> generators;
  for (Int x = multiplicity; x <= frobenius + multiplicity + 1; ++x) {
    if (!member(x)) continue;
    bool decomposes = false;
    for (Int y = multiplicity; y <= x / 2 && !decomposes; ++y) {
      decomposes = member(y) && member(x - y);
    }
    if (!decomposes) generators.push_back(x);
  }
  NumericalSemigroup s = make_semigroup(generators);
  if (!std::equal(s.gaps().begin(), s.gaps().end(), sorted.begin(), sorted.end())) {
    throw Error(ErrorKind::InternalInconsistency, "gap set {" + join(sorted) + "} is not closed under the monoid");
  }
  return s;
}

bool contains(const NumericalSemigroup& s, Int x) { return s.contains(x); }

std::vector<Int> apery_set(const NumericalSemigroup& s, Int n) {
  if (n <= 0 || !s.contains(n)) {
    throw Error(ErrorKind::NotAMember, std::to_string(n) + " is not a positive element of the semigroup", n);
  }
  if (n == s.multiplicity()) return s.apery();
  return apery_by_dijkstra(s.generators(), n);
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) { return s.pseudo_frobenius(); }

bool is_telescopic(std::span<const Int> seq) {
  if (seq.empty()) throw Error(ErrorKind::InvalidGenerator, "empty sequence");
  for (Int n : seq) {
    if (n < 1) throw Error(ErrorKind::InvalidGenerator, "entries must be positive", n);
  }
  if (gcd_of(seq) != 1) throw Error(ErrorKind::InvalidGenerator, "sequence is not coprime");

  Int prev_gcd = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const Int cur_gcd = std::gcd(prev_gcd, seq[i]);
    std::vector<Int> scaled;
    scaled.reserve(i);
    for (std::size_t j = 0; j < i; ++j) scaled.push_back(seq[j] / prev_gcd);
    if (!representable(seq[i] / cur_gcd, scaled)) return false;
    prev_gcd = cur_gcd;
  }
  return true;
}

ClassificationRecord classify(const NumericalSemigroup& s, std::optional<Int> m_query) {
  ClassificationRecord rec;
  const Int f = s.frobenius();
  const auto& pf = s.pseudo_frobenius();
  rec.symmetric = pf.size() == 1 && pf.front() == f;
  rec.pseudo_symmetric = f > 0 && f % 2 == 0 && pf == std::vector<Int>{f / 2, f};
  rec.irreducible = rec.symmetric || rec.pseudo_symmetric;
  // N has type 0 and is not counted as symmetric, so neither is it telescopic.
  rec.telescopic = !s.is_whole_monoid() && is_telescopic(s.generators());

  if (m_query) {
    const Int m = s.multiplicity();
    if (*m_query != m) {
      throw Error(ErrorKind::MultiplicityMismatch,
                  "queried multiplicity " + std::to_string(*m_query) + " but the semigroup has multiplicity " +
                      std::to_string(m),
                  *m_query);
    }
    const auto genus = static_cast<Int>(s.genus());
    const bool ordinary = genus == m - 1;                 // {x >= m} u {0}
    const bool ordinary_but_f = genus == m && f > m;       // {x >= m, x != F} u {0}
    rec.m_irreducible = ordinary || ordinary_but_f || rec.irreducible;
  }
  return rec;
}

NumericalSemigroup half(const NumericalSemigroup& s) {
  std::vector<Int> gaps;
  for (Int x = 1; 2 * x <= s.frobenius(); ++x) {
    if (!s.contains(2 * x)) gaps.push_back(x);
  }
  return semigroup_from_gaps(gaps);
}

Int smallest_double_f(const NumericalSemigroup& s) {
  const Int lower = 3 * s.frobenius() + 1;
  return lower % 2 != 0 ? lower : lower + 1;
}

DoubleSpec double_semigroup(const NumericalSemigroup& s, Int f) {
  if (s.is_whole_monoid()) {
    throw Error(ErrorKind::TrivialSemigroup, "the doubling construction needs a semigroup with a gap");
  }
  if (f % 2 == 0) throw Error(ErrorKind::FEven, "f = " + std::to_string(f) + " must be odd", f);
  if (f < 3 * s.frobenius() + 1) {
    throw Error(ErrorKind::FTooSmall,
                "f = " + std::to_string(f) + " is below 3g(S)+1 = " + std::to_string(3 * s.frobenius() + 1), f);
  }

  std::vector<Int> raw;
  for (Int n : s.generators()) raw.push_back(2 * n);
  const auto& pf = s.pseudo_frobenius();
  for (auto it = pf.rbegin(); it != pf.rend(); ++it) raw.push_back(f - 2 * *it);

  NumericalSemigroup t = make_semigroup(raw);
  std::vector<Int> sorted_raw = raw;
  std::sort(sorted_raw.begin(), sorted_raw.end());
  const bool minimal = sorted_raw == t.generators();

  if (t.frobenius() != f || !classify(t).symmetric || !(half(t) == s)) {
    throw Error(ErrorKind::InternalInconsistency,
                "doubling <" + join(s.generators()) + "> with f = " + std::to_string(f) +
                    " broke symmetry, Frobenius number or half");
  }
  return DoubleSpec{s, f, std::move(raw), std::move(t), minimal};
}

}  // namespace semibetti
