#include <algorithm>
#include <functional>
#include <set>

#include "internal.hpp"
#include "semibetti/closed_forms.hpp"

namespace semibetti {

namespace detail {

std::string join(std::span<const Int> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

DoubleSpec require_minimal_double(const NumericalSemigroup& s, Int f) {
  DoubleSpec d = double_semigroup(s, f);
  if (!d.generators_were_minimal) {
    throw Error(ErrorKind::DegenerateGenerators,
                "doubling <" + join(s.generators()) + "> with f = " + std::to_string(f) + " gives raw generators (" +
                    join(d.raw_generators) + ") that reduce to <" + join(d.result.generators()) +
                    ">; use the homology oracle for this double",
                f);
  }
  return d;
}

}  // namespace detail

namespace {

HerzogData require_3gen_nonsymmetric(const NumericalSemigroup& s) {
  if (s.embedding_dim() != 3 || classify(s).symmetric) {
    throw Error(ErrorKind::NotApplicable, "<" + detail::join(s.generators()) +
                                              "> is not a 3-generated non-symmetric semigroup");
  }
  return herzog_data(s);
}

// Factorization of `degree` over the weights with the largest leading
// exponents first.
std::array<int, 5> factor_over(Int degree, std::span<const Int> weights) {
  std::array<int, 5> e{};
  const std::function<bool(std::size_t, Int)> search = [&](std::size_t idx, Int rest) -> bool {
    if (idx + 1 == weights.size()) {
      if (rest % weights[idx] != 0) return false;
      e[idx] = static_cast<int>(rest / weights[idx]);
      return true;
    }
    for (Int a = rest / weights[idx]; a >= 0; --a) {
      e[idx] = static_cast<int>(a);
      if (search(idx + 1, rest - a * weights[idx])) return true;
    }
    return false;
  };
  if (!search(0, degree)) {
    throw Error(ErrorKind::InternalInconsistency, "degree " + std::to_string(degree) + " has no factorization", degree);
  }
  return e;
}

}  // namespace

DegreeSets degree_sets(const HerzogData& h, Int f) {
  DegreeSets ds;
  const auto [n1, n2, n3] = h.n;
  ds.frobenius_case = h.frobenius_case;
  ds.u = f - 2 * h.g1;
  ds.v = f - 2 * h.g2;
  const Int u = ds.u;
  ds.m = {2 * n2 * h.r12 + 2 * n3 * h.r13, 2 * n1 * h.r31 + 2 * n2 * h.r32, 2 * n1 * h.r21 + 2 * n3 * h.r23};
  if (h.frobenius_case == FrobeniusCase::ViaC2) {
    ds.n = {2 * n3 * h.r13 + u, 2 * n1 * h.r21 + u, 2 * n2 * h.r32 + u};
  } else {
    ds.n = {2 * n3 * h.r23 + u, 2 * n1 * h.r31 + u, 2 * n2 * h.r12 + u};
  }
  ds.p = {2 * ds.u, ds.u + ds.v, 2 * ds.v};
  ds.alpha = 2 * (n1 + n2 + n3) + ds.u + ds.v + f;
  ds.b = ds.m;
  ds.b.insert(ds.b.end(), ds.n.begin(), ds.n.end());
  ds.b.insert(ds.b.end(), ds.p.begin(), ds.p.end());
  return ds;
}

GradedBettiTable doubled_3gen_betti(const NumericalSemigroup& s, Int f) {
  const HerzogData h = require_3gen_nonsymmetric(s);
  const DoubleSpec d = detail::require_minimal_double(s, f);
  const DegreeSets ds = degree_sets(h, f);

  GradedBettiTable partial;
  partial.add(0, 0);
  for (Int b : ds.b) {
    partial.add(1, b);
    partial.add(3, ds.alpha - b);
  }
  partial.add(4, ds.alpha);
  GradedBettiTable table = infer_beta2(d.result, partial);
  table.degree_bound = betti_degree_bound(d.result);
  return table;
}

DoublesComparison compare_doubles_3gen(const NumericalSemigroup& s, Int f) {
  const HerzogData h = require_3gen_nonsymmetric(s);
  DoubleSpec first = detail::require_minimal_double(s, f);
  DoubleSpec second = detail::require_minimal_double(s, f + 2);
  GradedBettiTable t1 = doubled_3gen_betti(s, f);
  GradedBettiTable t2 = doubled_3gen_betti(s, f + 2);
  const DegreeSets ds = degree_sets(h, f);

  struct Family {
    int row;
    const char* name;
    std::vector<Int> degrees;
  };
  const auto shifted = [](const std::vector<Int>& xs, Int by) {
    std::vector<Int> out;
    for (Int x : xs) out.push_back(x + by);
    return out;
  };
  const auto mirrored = [&](const std::vector<Int>& xs, Int by) {
    std::vector<Int> out;
    for (Int x : xs) out.push_back(ds.alpha - x + by);
    return out;
  };
  const std::vector<Family> families{
      {0, "origin", {0}},
      {1, "M", ds.m},
      {1, "N+2", shifted(ds.n, 2)},
      {1, "P+4", shifted(ds.p, 4)},
      {3, "M'+6", mirrored(ds.m, 6)},
      {3, "N'+4", mirrored(ds.n, 4)},
      {3, "P'+2", mirrored(ds.p, 2)},
      {4, "alpha+6", {ds.alpha + 6}},
  };

  std::set<GradedBettiTable::Key> keys;
  for (const auto* t : {&t1, &t2}) {
    for (const auto& [key, beta] : t->entries()) {
      if (key.first != 2) keys.insert(key);
    }
  }
  DoublesComparison cmp{std::move(first), std::move(second), t1, t2, {}};
  for (const auto& [i, j] : keys) {
    Int predicted = 0;
    std::string bucket;
    for (const Family& fam : families) {
      if (fam.row != i) continue;
      const auto hits = std::count(fam.degrees.begin(), fam.degrees.end(), j);
      if (hits == 0) continue;
      predicted += hits;
      if (!bucket.empty()) bucket += "+";
      bucket += fam.name;
    }
    if (bucket.empty()) bucket = "vacated";
    cmp.entries.push_back({i, j, bucket, t1.at(i, j), t2.at(i, j), predicted});
  }
  return cmp;
}

std::vector<BinomialGenerator> ideal_generators_doubled(const NumericalSemigroup& s, Int f) {
  const HerzogData h = require_3gen_nonsymmetric(s);
  detail::require_minimal_double(s, f);
  const DegreeSets ds = degree_sets(h, f);
  const std::array<Int, 5> weights{2 * h.n[0], 2 * h.n[1], 2 * h.n[2], ds.u, ds.v};
  const auto e = [](Int x, Int y, Int z, Int u, Int v) {
    return std::array<int, 5>{static_cast<int>(x), static_cast<int>(y), static_cast<int>(z), static_cast<int>(u),
                              static_cast<int>(v)};
  };

  std::vector<BinomialGenerator> out;
  for (const auto& pure : ideal_generators_3gen(s)) out.push_back({pure.lhs, pure.rhs, 0});

  // Column (U, V) appended to the matrix for via-c2, (V, U) for via-c3.
  const bool via_c2 = h.frobenius_case == FrobeniusCase::ViaC2;
  const auto top = [&](Int x, Int y, Int z) { return via_c2 ? e(x, y, z, 0, 1) : e(x, y, z, 1, 0); };
  const auto bottom = [&](Int x, Int y, Int z) { return via_c2 ? e(x, y, z, 1, 0) : e(x, y, z, 0, 1); };
  out.push_back({top(h.r31, 0, 0), bottom(0, 0, h.r13), 0});
  out.push_back({top(0, h.r12, 0), bottom(h.r21, 0, 0), 0});
  out.push_back({top(0, 0, h.r23), bottom(0, h.r32, 0), 0});

  const std::span<const Int> xyz(weights.data(), 3);
  for (const auto& lhs : {e(0, 0, 0, 2, 0), e(0, 0, 0, 1, 1), e(0, 0, 0, 0, 2)}) {
    out.push_back({lhs, factor_over(monomial_degree(lhs, weights), xyz), 0});
  }

  for (auto& b : out) {
    b.degree = monomial_degree(b.lhs, weights);
    if (monomial_degree(b.rhs, weights) != b.degree) {
      throw Error(ErrorKind::InternalInconsistency, "generator " + b.to_string() + " is not homogeneous");
    }
  }
  return out;
}

std::vector<Int> doubled_4sym_total(const NumericalSemigroup& s, Int f) {
  if (s.embedding_dim() != 4 || !classify(s).symmetric || is_complete_intersection(s)) {
    throw Error(ErrorKind::NotApplicable, "<" + detail::join(s.generators()) +
                                              "> is not a 4-generated symmetric non complete intersection");
  }
  detail::require_minimal_double(s, f);
  return {1, 6, 10, 6, 1};
}

FormulaResult formula_betti(const NumericalSemigroup& s) {
  if (const auto order = telescopic_ordering(s)) {
    auto table = ci_graded_betti(telescopic_relation_degrees(*order), s.embedding_dim());
    table.degree_bound = betti_degree_bound(s);
    auto totals = total_betti(table);
    return {"complete-intersection", std::move(table), std::move(totals), std::nullopt, std::nullopt};
  }
  const auto cls = classify(s);
  if (s.embedding_dim() == 3 && !cls.symmetric) {
    auto table = herzog_betti(s);
    table.degree_bound = betti_degree_bound(s);
    auto totals = total_betti(table);
    return {"herzog", std::move(table), std::move(totals), std::nullopt, std::nullopt};
  }
  if (s.embedding_dim() == 5 && cls.symmetric) {
    const NumericalSemigroup h = half(s);
    const Int f = s.frobenius();
    const auto produces_s = [&]() {
      try {
        const DoubleSpec d = double_semigroup(h, f);
        return d.generators_were_minimal && d.result == s;
      } catch (const Error&) {
        return false;
      }
    };
    const auto hcls = classify(h);
    if (h.embedding_dim() == 3 && !hcls.symmetric && produces_s()) {
      auto table = doubled_3gen_betti(h, f);
      auto totals = total_betti(table);
      return {"double-3gen", std::move(table), std::move(totals), h, f};
    }
    if (h.embedding_dim() == 4 && hcls.symmetric && produces_s() && !is_complete_intersection(h)) {
      return {"double-4sym", std::nullopt, doubled_4sym_total(h, f), h, f};
    }
  }
  throw Error(ErrorKind::NotApplicable,
              "no closed form covers <" + detail::join(s.generators()) +
                  ">: it is not telescopic, not 3-generated non-symmetric and not a recognized double");
}

}  // namespace semibetti
