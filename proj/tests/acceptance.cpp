// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expected values come from the worked examples or from the
// brute-force helpers in oracles.hpp, never from the closed forms under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semibetti/betti.hpp"
#include "semibetti/closed_forms.hpp"
#include "semibetti/enumerate.hpp"
#include "semibetti/semigroup.hpp"

using namespace semibetti;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
  void check(bool ok, const std::function<std::string()>& why) {
    if (!ok) fail(why());
  }
};

std::string show(std::span<const Int> xs) {
  std::string out = "<";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ">";
}

std::string show(const GradedBettiTable& t) {
  std::ostringstream out;
  for (int i = 0; i <= t.max_index(); ++i) {
    out << "  beta_" << i << ":";
    for (const auto& [j, c] : t.row(i)) {
      out << ' ' << j;
      if (c > 1) out << 'x' << c;
    }
    out << '\n';
  }
  return out.str();
}

GradedBettiTable table_of(std::initializer_list<std::pair<int, std::vector<Int>>> rows) {
  GradedBettiTable t;
  for (const auto& [i, degrees] : rows) {
    for (Int j : degrees) t.add(i, j);
  }
  return t;
}

GradedBettiTable rows_only(const GradedBettiTable& t, const std::set<int>& keep) {
  GradedBettiTable out;
  for (const auto& [key, v] : t.entries()) {
    if (keep.count(key.first)) out.add(key.first, key.second, v);
  }
  return out;
}

// Telescopic in the given order: with d_i = gcd(a_1..a_i), every a_i / d_i
// is a combination of a_1 / d_{i-1}, ..., a_{i-1} / d_{i-1}.
bool telescopic_in_order(const std::vector<Int>& seq) {
  Int d_prev = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const Int d = std::gcd(d_prev, seq[i]);
    std::vector<Int> scaled;
    for (std::size_t j = 0; j < i; ++j) scaled.push_back(seq[j] / d_prev);
    const Int target = seq[i] / d;
    if (!oracle::representable_up_to(scaled, target)[static_cast<std::size_t>(target)]) return false;
    d_prev = d;
  }
  return d_prev == 1;
}

// Smallest odd f >= lower.
Int odd_at_least(Int lower) { return lower % 2 != 0 ? lower : lower + 1; }

Outcome golden(const std::vector<Int>& gens, const GradedBettiTable& expected) {
  Outcome o;
  const auto t = graded_betti(make_semigroup(gens));
  o.check(t == expected, [&] { return "oracle table\n" + show(t) + "expected\n" + show(expected); });
  o.detail = show(gens) + " totals";
  for (Int b : total_betti(t)) o.detail += " " + std::to_string(b);
  return o;
}

Outcome criterion1() {
  return golden({12, 20, 22, 205}, table_of({{0, {0}}, {1, {44, 60, 410}}, {2, {104, 454, 470}}, {3, {514}}}));
}

Outcome criterion2() {
  return golden({12, 20, 22, 207}, table_of({{0, {0}}, {1, {44, 60, 414}}, {2, {104, 458, 474}}, {3, {518}}}));
}

Outcome criterion3() {
  const std::vector<Int> gens{6, 10, 14, 15};
  Outcome o = golden(gens, table_of({{0, {0}}, {1, {20, 24, 28, 30}}, {2, {34, 38, 50, 54, 58}}, {3, {64, 68}}}));
  const auto s = make_semigroup(gens);
  const auto numerator = hilbert_numerator(s).numerator;
  const auto euler = euler_polynomial(graded_betti(s));
  o.check(numerator == euler, [&] { return "numerator " + numerator.to_string() + " != " + euler.to_string(); });
  // The numerator also matches a direct series computation.
  const Int n = betti_degree_bound(s) + 10;
  const oracle::Brute brute(gens);
  std::vector<Int> series(static_cast<std::size_t>(n) + 1, 0);
  for (Int x = 0; x <= n; ++x) series[static_cast<std::size_t>(x)] = brute.in(x);
  for (Int g : gens) {
    for (Int x = n; x >= g; --x) series[static_cast<std::size_t>(x)] -= series[static_cast<std::size_t>(x - g)];
  }
  for (Int d = 0; d <= n; ++d) {
    o.check(numerator.coefficient(d) == series[static_cast<std::size_t>(d)],
            [&] { return "series coefficient mismatch at t^" + std::to_string(d); });
  }
  o.detail += "; numerator " + numerator.to_string();
  return o;
}

// c_i and the r's by direct search: least c with c n_i = a n_j + b n_k.
struct BruteHerzog {
  std::array<Int, 3> c{};
  Int r[3][3]{};
  bool unique = true;
};

BruteHerzog brute_herzog(const std::vector<Int>& n) {
  BruteHerzog h;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    for (Int c = 1;; ++c) {
      std::vector<std::pair<Int, Int>> reps;
      for (Int a = 0; a * n[j] <= c * n[i]; ++a) {
        const Int rest = c * n[i] - a * n[j];
        if (rest % n[k] == 0) reps.emplace_back(a, rest / n[k]);
      }
      if (reps.empty()) continue;
      h.c[i] = c;
      h.unique = h.unique && reps.size() == 1;
      h.r[i][j] = reps.front().first;
      h.r[i][k] = reps.front().second;
      break;
    }
  }
  return h;
}

Outcome criterion4() {
  Outcome o;
  std::size_t instances = 0;
  std::size_t via_c2 = 0;
  for (const auto& gens : oracle::minimal_coprime_sequences(3, 30)) {
    const oracle::Brute brute(gens);
    const auto pf = brute.pseudo_frobenius();
    if (pf.size() == 1) continue;  // symmetric
    ++instances;
    const auto s = make_semigroup(gens);
    const auto label = show(gens);
    try {
      const auto table = herzog_betti(s);
      const auto oracle_table = graded_betti(s);
      o.check(table == oracle_table, [&] { return label + ": closed form differs from oracle"; });

      const auto b = brute_herzog(gens);
      const auto h = herzog_data(s);
      o.check(b.unique, [&] { return label + ": representation not unique"; });
      o.check(h.c == b.c && h.r12 == b.r[0][1] && h.r13 == b.r[0][2] && h.r21 == b.r[1][0] &&
                  h.r23 == b.r[1][2] && h.r31 == b.r[2][0] && h.r32 == b.r[2][1],
              [&] { return label + ": c or r differs from direct search"; });
      const Int n1 = gens[0], n2 = gens[1], n3 = gens[2];
      const Int r12 = b.r[0][1], r13 = b.r[0][2], r21 = b.r[1][0], r23 = b.r[1][2], r31 = b.r[2][0],
                r32 = b.r[2][1];
      const auto& c = b.c;
      // Matrix exponents add up to the c_i.
      o.check(c[0] == r21 + r31 && c[1] == r12 + r32 && c[2] == r13 + r23,
              [&] { return label + ": c_i are not sums of matrix exponents"; });
      // The three relations.
      o.check(c[0] * n1 == r12 * n2 + r13 * n3 && c[1] * n2 == r21 * n1 + r23 * n3 &&
                  c[2] * n3 == r31 * n1 + r32 * n2,
              [&] { return label + ": c_i n_i relations fail"; });
      // Generators as quadratic forms in the r's.
      o.check(n1 == r12 * r13 + r12 * r23 + r13 * r32 && n2 == r13 * r21 + r21 * r23 + r23 * r31 &&
                  n3 == r12 * r31 + r21 * r32 + r31 * r32,
              [&] { return label + ": generator formulas fail"; });
      // Pseudo-Frobenius formula.
      const Int e3 = (c[2] - 1) * n3 + (r12 - 1) * n2 - n1;
      const Int e2 = (c[1] - 1) * n2 + (r13 - 1) * n3 - n1;
      o.check(std::set<Int>{e2, e3} == std::set<Int>(pf.begin(), pf.end()),
              [&] { return label + ": pseudo-Frobenius formula fails"; });
      // Difference identities, signed by which expression is the Frobenius number.
      const Int g1 = brute.frobenius();
      const Int g2 = pf.front() == g1 ? pf.back() : pf.front();
      const Int sign = g1 == e2 ? 1 : -1;
      if (g1 == e2) ++via_c2;
      o.check(sign * (r13 * r21 * r32 - r12 * r23 * r31) == g1 - g2,
              [&] { return label + ": triple-product identity fails"; });
      o.check(sign * (r13 * n3 - r31 * n1) == g1 - g2 && sign * (r21 * n1 - r12 * n2) == g1 - g2 &&
                  sign * (r32 * n2 - r23 * n3) == g1 - g2,
              [&] { return label + ": linear difference identities fail"; });
      o.check(h.g1 == g1 && h.g2 == g2 && (h.frobenius_case == FrobeniusCase::ViaC2) == (g1 == e2),
              [&] { return label + ": case detection differs"; });
    } catch (const Error& e) {
      o.fail(label + ": " + e.what());
    }
  }
  o.check(instances >= 300, [&] { return "only " + std::to_string(instances) + " instances"; });
  o.detail = std::to_string(instances) + " non-symmetric 3-generated semigroups (" + std::to_string(via_c2) +
             " with F from the c_2 expression)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t sequences = 0;
  std::size_t doubles = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    for (const auto& sorted : oracle::minimal_coprime_sequences(k, 40)) {
      std::vector<Int> seq = sorted;
      do {
        if (!telescopic_in_order(seq)) continue;
        ++sequences;
        const auto label = show(seq);
        try {
          const auto s = make_semigroup(seq);
          const auto formula = ci_graded_betti(telescopic_relation_degrees(seq), k);
          o.check(formula == graded_betti(s), [&] { return label + ": relation-degree table differs from oracle"; });

          const Int g = oracle::Brute(seq).frobenius();
          for (Int f : {odd_at_least(3 * g + 1), odd_at_least(3 * g + 7)}) {
            ++doubles;
            std::vector<Int> doubled;
            for (Int n : seq) doubled.push_back(2 * n);
            doubled.push_back(f - 2 * g);
            o.check(telescopic_in_order(doubled), [&] { return label + " f=" + std::to_string(f) + ": double not telescopic"; });
            o.check(double_semigroup(s, f).result == make_semigroup(doubled),
                    [&] { return label + " f=" + std::to_string(f) + ": double differs"; });
          }
        } catch (const Error& e) {
          o.fail(label + ": " + e.what());
        }
      } while (std::next_permutation(seq.begin(), seq.end()));
    }
  }
  o.detail = std::to_string(sequences) + " telescopic orderings (k <= 4, entries <= 40), " + std::to_string(doubles) +
             " doubles checked";
  return o;
}

// First `count` odd f >= 3g+1 whose doubled generators are already minimal.
std::vector<Int> valid_fs(const NumericalSemigroup& s, std::size_t count) {
  std::vector<Int> out;
  for (Int f = smallest_double_f(s); out.size() < count; f += 2) {
    if (double_semigroup(s, f).generators_were_minimal) out.push_back(f);
  }
  return out;
}

std::vector<std::vector<Int>> criterion6_semigroups() {
  std::vector<std::vector<Int>> out{{3, 5, 7}, {4, 5, 11}};
  bool have_c2 = false;
  bool have_c3 = false;
  for (const auto& gens : out) {
    const auto c = herzog_data(make_semigroup(gens)).frobenius_case;
    (c == FrobeniusCase::ViaC2 ? have_c2 : have_c3) = true;
  }
  // Add enumerated ones until both cases have at least two members.
  for (const auto& gens : oracle::minimal_coprime_sequences(3, 12)) {
    if (out.size() >= 6) break;
    if (oracle::Brute(gens).pseudo_frobenius().size() == 1) continue;
    if (std::find(out.begin(), out.end(), gens) != out.end()) continue;
    const auto c = herzog_data(make_semigroup(gens)).frobenius_case;
    if ((c == FrobeniusCase::ViaC2 && have_c2 && out.size() >= 4) || (c == FrobeniusCase::ViaC3 && have_c3 && out.size() >= 4)) continue;
    (c == FrobeniusCase::ViaC2 ? have_c2 : have_c3) = true;
    out.push_back(gens);
  }
  return out;
}

Outcome criterion6() {
  Outcome o;
  std::size_t cases = 0;
  std::set<std::string> frob_cases;
  for (const auto& gens : criterion6_semigroups()) {
    const auto s = make_semigroup(gens);
    const auto h = herzog_data(s);
    frob_cases.insert(std::string(to_string(h.frobenius_case)));
    for (Int f : valid_fs(s, 3)) {
      ++cases;
      const auto label = show(gens) + " f=" + std::to_string(f);
      try {
        const auto t = double_semigroup(s, f).result;
        const auto oracle_table = graded_betti(t);
        const auto d = degree_sets(h, f);
        GradedBettiTable closed;
        closed.add(0, 0);
        for (Int b : d.b) closed.add(1, b);
        for (Int b : d.b) closed.add(3, d.alpha - b);
        closed.add(4, d.alpha);
        o.check(closed == rows_only(oracle_table, {0, 1, 3, 4}),
                [&] { return label + ": rows 0,1,3,4 differ\n" + show(closed) + "oracle\n" + show(oracle_table); });
        o.check(rows_only(doubled_3gen_betti(s, f), {0, 1, 3, 4}) == closed,
                [&] { return label + ": doubled_3gen_betti rows differ from degree sets"; });
        const auto completed = infer_beta2(t, closed);
        o.check(rows_only(completed, {2}) == rows_only(oracle_table, {2}), [&] { return label + ": inferred row 2 differs"; });
        const auto totals = total_betti(oracle_table);
        o.check(totals.size() == 5 && totals[2] == 16 && totals[2] == totals[1] + totals[3] - 2,
                [&] { return label + ": beta_2 total is not 16"; });
      } catch (const Error& e) {
        o.fail(label + ": " + e.what());
      }
    }
  }
  o.check(frob_cases.size() == 2, [] { return "only one Frobenius case covered"; });
  o.detail = std::to_string(cases) + " doubles, both Frobenius cases, totals (1,9,16,9,1)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<NumericalSemigroup> picked;
  for (const auto& s : semigroups_up_to_genus(10)) {
    if (s.embedding_dim() != 4) continue;
    const oracle::Brute brute(s.generators());
    if (brute.pseudo_frobenius().size() != 1) continue;
    const auto totals = total_betti(graded_betti(s));
    if (totals[1] == 3) continue;  // complete intersection
    o.check(totals[1] == 5, [&] { return show(s.generators()) + ": beta_1 = " + std::to_string(totals[1]); });
    picked.push_back(s);
    if (picked.size() == 5) break;
  }
  o.check(picked.size() >= 3, [&] { return "found only " + std::to_string(picked.size()) + " semigroups"; });
  std::string names;
  for (const auto& s : picked) {
    names += " " + show(s.generators());
    const Int f = valid_fs(s, 1).front();
    const auto label = show(s.generators()) + " f=" + std::to_string(f);
    const auto totals = total_betti(graded_betti(double_semigroup(s, f).result));
    o.check(totals == std::vector<Int>{1, 6, 10, 6, 1}, [&] { return label + ": double totals differ"; });
    o.check(doubled_4sym_total(s, f) == totals, [&] { return label + ": closed-form totals differ"; });
  }
  // Contrast: doubles of non-symmetric 3-generated semigroups have beta_1 = 9.
  for (const auto& gens : criterion6_semigroups()) {
    const auto s = make_semigroup(gens);
    const Int f = valid_fs(s, 1).front();
    const auto totals = total_betti(graded_betti(double_semigroup(s, f).result));
    o.check(totals[1] == 9, [&] { return show(gens) + ": 3-generated double has beta_1 " + std::to_string(totals[1]); });
  }
  o.detail = "symmetric non-CI with beta_1 = 5:" + names + "; 3-generated doubles have beta_1 = 9";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& s : semigroups_up_to_genus(10)) {
    if (s.is_whole_monoid()) continue;
    const oracle::Brute half_brute(s.generators());
    const Int g = half_brute.frobenius();
    const Int f0 = odd_at_least(3 * g + 1);
    for (Int f : {f0, f0 + 2, f0 + 100}) {
      ++checks;
      const auto label = show(s.generators()) + " f=" + std::to_string(f);
      try {
        const auto d = double_semigroup(s, f);
        const oracle::Brute t(d.result.generators());
        o.check(t.frobenius() == f, [&] { return label + ": Frobenius " + std::to_string(t.frobenius()); });
        bool symmetric = true;
        for (Int x = 0; x <= f; ++x) symmetric = symmetric && (t.in(x) != t.in(f - x));
        o.check(symmetric, [&] { return label + ": not symmetric"; });
        bool half_ok = true;
        for (Int x = 0; x <= f; ++x) half_ok = half_ok && (t.in(2 * x) == half_brute.in(x));
        o.check(half_ok, [&] { return label + ": half differs"; });
      } catch (const Error& e) {
        o.fail(label + ": " + e.what());
      }
    }
  }
  o.detail = std::to_string(checks) + " doubles over genus <= 10";
  return o;
}

std::vector<NumericalSemigroup> corpus(int max_genus) {
  auto out = semigroups_up_to_genus(max_genus);
  for (const auto& gens : std::vector<std::vector<Int>>{
           {12, 20, 22, 205}, {12, 20, 22, 207}, {6, 10, 14, 15}, {6, 10, 14, 21, 25}, {10, 11, 12, 14, 16}}) {
    out.push_back(make_semigroup(gens));
  }
  return out;
}

Outcome criterion9() {
  Outcome o;
  std::size_t symmetric = 0;
  const auto all = corpus(10);
  for (const auto& s : all) {
    if (s.is_whole_monoid()) continue;
    const auto label = show(s.generators());
    const auto t = graded_betti(s);
    const oracle::Brute brute(s.generators());
    const auto totals = total_betti(t);
    o.check(static_cast<std::size_t>(totals.back()) == brute.pseudo_frobenius().size(),
            [&] { return label + ": last total Betti differs from type"; });
    if (brute.pseudo_frobenius().size() != 1) continue;
    ++symmetric;
    const int top = static_cast<int>(s.embedding_dim()) - 1;
    const auto last = t.row(top);
    o.check(last.size() == 1, [&] { return label + ": top row is not a single degree"; });
    const Int alpha = last.begin()->first;
    for (const auto& [key, v] : t.entries()) {
      o.check(t.at(top - key.first, alpha - key.second) == v,
              [&] { return label + ": duality fails at (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"; });
    }
  }
  o.detail = std::to_string(all.size()) + " semigroups, " + std::to_string(symmetric) + " symmetric";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto four = semigroups_up_to_genus(15, [](const NumericalSemigroup& s) { return s.multiplicity() == 4; });
  const auto exceptional1 = make_semigroup({4, 5, 6, 7});
  const auto exceptional2 = make_semigroup({4, 6, 7, 9});
  std::size_t positive = 0;
  for (const auto& s : four) {
    const auto label = show(s.generators());
    const oracle::Brute brute(s.generators());
    const auto pf = brute.pseudo_frobenius();
    const Int f = brute.frobenius();
    const bool symmetric = pf.size() == 1;
    const bool pseudo_symmetric = pf.size() == 2 && pf[0] * 2 == f && pf[1] == f;
    const auto genus = static_cast<Int>(brute.gaps().size());
    // Membership test by definition: x >= 4 throughout, or all but F.
    const bool ordinary = genus == 3;
    const bool ordinary_but_f = genus == 4 && f > 4 && !brute.in(f) && brute.in(4);
    const bool disjunction = ordinary || ordinary_but_f || symmetric || pseudo_symmetric;
    const bool corollary = s == exceptional1 || s == exceptional2 || oracle::irreducible_by_special_gaps(brute);
    const bool definition = oracle::m_irreducible_by_special_gaps(brute);
    o.check(disjunction == corollary && corollary == definition, [&] { return label + ": characterizations disagree"; });

    const auto report = classify_4_irreducible(s);
    const bool says = report.classification != FourIrreducibleClass::NotFourIrreducible;
    o.check(says == corollary, [&] { return label + ": classified " + std::string(to_string(report.classification)); });
    if (s == exceptional1) o.check(report.classification == FourIrreducibleClass::Exceptional1, [&] { return label; });
    if (s == exceptional2) o.check(report.classification == FourIrreducibleClass::Exceptional2, [&] { return label; });
    if (says) {
      ++positive;
      o.check(report.table == graded_betti(s), [&] { return label + ": table via " + report.method + " differs"; });
    }
  }
  for (const auto& s : {exceptional1, exceptional2}) {
    BettiOptions threaded;
    threaded.threads = 4;
    const auto first = graded_betti(s);
    o.check(first == graded_betti(s) && first == graded_betti(s, threaded),
            [&] { return show(s.generators()) + ": table not stable"; });
    std::printf("  oracle table %s\n%s", show(s.generators()).c_str(), show(first).c_str());
  }
  o.detail = std::to_string(four.size()) + " multiplicity-4 semigroups of genus <= 15, " + std::to_string(positive) +
             " 4-irreducible";
  return o;
}

constexpr int kFieldCorpusGenus = 9;

Outcome criterion11() {
  Outcome o;
  const auto all = corpus(kFieldCorpusGenus);
  std::size_t degrees = 0;
  for (const auto& s : all) {
    const auto label = show(s.generators());
    const auto qq = graded_betti(s);
    BettiOptions gf2;
    gf2.field = CoefficientField::prime(2);
    BettiOptions gf3;
    gf3.field = CoefficientField::prime(3);
    o.check(graded_betti(s, gf2) == qq, [&] { return label + ": GF(2) table differs"; });
    o.check(graded_betti(s, gf3) == qq, [&] { return label + ": GF(3) table differs"; });
    const Int bound = betti_degree_bound(s);
    for (const auto& [key, v] : qq.entries()) {
      o.check(key.second <= bound, [&] { return label + ": entry above the bound"; });
    }
    for (Int d = bound + 1; d <= bound + s.generator_sum(); ++d) {
      ++degrees;
      const auto c = divisor_complex(s, d);
      const auto dims = reduced_homology_dims(c);
      o.check(std::all_of(dims.begin(), dims.end(), [](std::size_t x) { return x == 0; }),
              [&] { return label + ": homology above the bound at " + std::to_string(d); });
      if (s.embedding_dim() <= 6) {
        const auto gf2_dims = oracle::reduced_homology_gf2(c.faces, s.embedding_dim());
        o.check(std::all_of(gf2_dims.begin(), gf2_dims.end(), [](std::size_t x) { return x == 0; }),
                [&] { return label + ": GF(2) homology above the bound at " + std::to_string(d); });
      }
    }
  }
  o.detail = std::to_string(all.size()) + " semigroups over QQ, GF(2), GF(3); " + std::to_string(degrees) +
             " degrees above the bound";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden table for the telescopic double <12,20,22,205>", criterion1},
      {"golden table for the telescopic double <12,20,22,207>", criterion2},
      {"golden table and Hilbert numerator for <6,10,14,15>", criterion3},
      {"3-generated non-symmetric closed form and identities", criterion4},
      {"telescopic relation degrees and telescopic doubles", criterion5},
      {"doubles of 3-generated non-symmetric semigroups", criterion6},
      {"doubles of 4-generated symmetric non complete intersections", criterion7},
      {"doubling contract", criterion8},
      {"Gorenstein duality and type", criterion9},
      {"multiplicity-4 irreducibility", criterion10},
      {"oracle field independence and degree bound", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2zu: %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    for (const auto& why : o.failures) std::printf("         %s\n", why.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
