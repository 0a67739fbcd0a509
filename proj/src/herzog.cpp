#include <algorithm>
#include <string>

#include "internal.hpp"
#include "semibetti/closed_forms.hpp"

namespace semibetti {

namespace {

struct Representation {
  Int multiple;
  Int a;  // coefficient of the first other generator
  Int b;  // coefficient of the second
};

// Least c with c*n in <p, q>, and the unique positive representation there.
Representation least_representation(Int n, Int p, Int q) {
  for (Int c = 1;; ++c) {
    const Int target = c * n;
    std::vector<std::pair<Int, Int>> found;
    for (Int a = 0; a * p <= target; ++a) {
      const Int rest = target - a * p;
      if (rest % q == 0) found.emplace_back(a, rest / q);
    }
    if (found.empty()) continue;
    if (found.size() != 1 || found.front().first < 1 || found.front().second < 1) {
      throw Error(ErrorKind::NonUniqueRepresentation,
                  std::to_string(c) + "*" + std::to_string(n) + " has " + std::to_string(found.size()) +
                      " representation(s) over <" + std::to_string(p) + "," + std::to_string(q) +
                      ">, expected exactly one with positive coefficients",
                  target);
    }
    return {c, found.front().first, found.front().second};
  }
}

std::string monomial_string(const std::array<int, 5>& e) {
  static constexpr const char* kNames[] = {"X", "Y", "Z", "U", "V"};
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += kNames[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string_view to_string(FrobeniusCase c) { return c == FrobeniusCase::ViaC2 ? "via-c2" : "via-c3"; }

HerzogData herzog_data(const NumericalSemigroup& s) {
  if (s.embedding_dim() != 3) {
    throw Error(ErrorKind::NotThreeGenerated,
                "embedding dimension is " + std::to_string(s.embedding_dim()) + ", not 3");
  }
  if (classify(s).symmetric) throw Error(ErrorKind::Symmetric, "the 3-generated formulas need a non-symmetric semigroup");

  HerzogData h;
  const auto& g = s.generators();
  h.n = {g[0], g[1], g[2]};
  const auto rep1 = least_representation(g[0], g[1], g[2]);
  const auto rep2 = least_representation(g[1], g[0], g[2]);
  const auto rep3 = least_representation(g[2], g[0], g[1]);
  h.c = {rep1.multiple, rep2.multiple, rep3.multiple};
  h.r12 = rep1.a;
  h.r13 = rep1.b;
  h.r21 = rep2.a;
  h.r23 = rep2.b;
  h.r31 = rep3.a;
  h.r32 = rep3.b;

  h.g1 = s.frobenius();
  const auto& pf = s.pseudo_frobenius();
  if (pf.size() != 2) {
    throw Error(ErrorKind::InternalInconsistency, "a non-symmetric 3-generated semigroup must have type 2");
  }
  h.g2 = pf[0] == h.g1 ? pf[1] : pf[0];
  const bool via_c3 = h.pf_via_c3() == h.g1;
  const bool via_c2 = h.pf_via_c2() == h.g1;
  if (via_c3 == via_c2) {
    throw Error(ErrorKind::InternalInconsistency,
                via_c3 ? "both pseudo-Frobenius expressions equal g(S)" : "neither pseudo-Frobenius expression equals g(S)");
  }
  h.frobenius_case = via_c3 ? FrobeniusCase::ViaC3 : FrobeniusCase::ViaC2;

  if (const auto bad = herzog_identity_violations(h); !bad.empty()) {
    throw Error(ErrorKind::InternalInconsistency, "identity failed for <" + detail::join(g) + ">: " + bad.front());
  }
  return h;
}

std::vector<std::string> herzog_identity_violations(const HerzogData& h) {
  std::vector<std::string> bad;
  const auto [n1, n2, n3] = h.n;
  const auto check = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  check(h.c[0] == h.r21 + h.r31, "c1 = r21 + r31");
  check(h.c[1] == h.r12 + h.r32, "c2 = r12 + r32");
  check(h.c[2] == h.r13 + h.r23, "c3 = r13 + r23");
  check(h.c[0] * n1 == h.r12 * n2 + h.r13 * n3, "c1 n1 = r12 n2 + r13 n3");
  check(h.c[1] * n2 == h.r21 * n1 + h.r23 * n3, "c2 n2 = r21 n1 + r23 n3");
  check(h.c[2] * n3 == h.r31 * n1 + h.r32 * n2, "c3 n3 = r31 n1 + r32 n2");
  check(n1 == h.r12 * h.r13 + h.r12 * h.r23 + h.r13 * h.r32, "n1 = r12 r13 + r12 r23 + r13 r32");
  check(n2 == h.r13 * h.r21 + h.r21 * h.r23 + h.r23 * h.r31, "n2 = r13 r21 + r21 r23 + r23 r31");
  check(n3 == h.r12 * h.r31 + h.r21 * h.r32 + h.r31 * h.r32, "n3 = r12 r31 + r21 r32 + r31 r32");

  const Int e3 = h.pf_via_c3();
  const Int e2 = h.pf_via_c2();
  check(std::min(e2, e3) == std::min(h.g1, h.g2) && std::max(e2, e3) == std::max(h.g1, h.g2),
        "pseudo-Frobenius set = {(c3-1)n3+(r12-1)n2-n1, (c2-1)n2+(r13-1)n3-n1}");

  const Int diff = h.g1 - h.g2;
  const Int forward = h.r12 * h.r23 * h.r31;
  const Int backward = h.r13 * h.r21 * h.r32;
  // Case via-c2 has every sign below flipped relative to via-c3.
  const Int sign = h.frobenius_case == FrobeniusCase::ViaC3 ? 1 : -1;
  check(diff == sign * (forward - backward), "g1 - g2 = +-(r12 r23 r31 - r13 r21 r32)");
  check(diff == sign * (h.r31 * n1 - h.r13 * n3), "g1 - g2 = +-(r31 n1 - r13 n3)");
  check(diff == sign * (h.r12 * n2 - h.r21 * n1), "g1 - g2 = +-(r12 n2 - r21 n1)");
  check(diff == sign * (h.r23 * n3 - h.r32 * n2), "g1 - g2 = +-(r23 n3 - r32 n2)");
  return bad;
}

GradedBettiTable herzog_betti(const NumericalSemigroup& s) {
  const HerzogData h = herzog_data(s);
  GradedBettiTable table;
  table.add(0, 0);
  for (std::size_t i = 0; i < 3; ++i) table.add(1, h.n[i] * h.c[i]);
  table.add(2, h.n[1] * h.c[1] + h.n[2] * h.r13);
  table.add(2, h.n[2] * h.c[2] + h.n[1] * h.r12);
  return table;
}

Int monomial_degree(const std::array<int, 5>& exponents, std::span<const Int> weights) {
  Int d = 0;
  for (std::size_t i = 0; i < weights.size() && i < exponents.size(); ++i) d += exponents[i] * weights[i];
  return d;
}

std::string BinomialGenerator::to_string() const { return monomial_string(lhs) + " - " + monomial_string(rhs); }

std::vector<BinomialGenerator> ideal_generators_3gen(const NumericalSemigroup& s) {
  const HerzogData h = herzog_data(s);
  const auto e = [](Int x, Int y, Int z) {
    return std::array<int, 5>{static_cast<int>(x), static_cast<int>(y), static_cast<int>(z), 0, 0};
  };
  std::vector<BinomialGenerator> out{
      {e(h.c[0], 0, 0), e(0, h.r12, h.r13), 0},
      {e(h.r31, h.r32, 0), e(0, 0, h.c[2]), 0},
      {e(0, h.c[1], 0), e(h.r21, 0, h.r23), 0},
  };
  for (auto& b : out) {
    b.degree = monomial_degree(b.lhs, h.n);
    if (monomial_degree(b.rhs, h.n) != b.degree) {
      throw Error(ErrorKind::InternalInconsistency, "minor " + b.to_string() + " is not homogeneous");
    }
  }
  return out;
}

}  // namespace semibetti
