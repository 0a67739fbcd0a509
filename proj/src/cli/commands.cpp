#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"
#include "semibetti/betti.hpp"
#include "semibetti/cli.hpp"
#include "semibetti/closed_forms.hpp"
#include "semibetti/enumerate.hpp"
#include "semibetti/semigroup.hpp"

namespace semibetti::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Int parse_int(std::string_view text, const char* what) {
  text = trim(text);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidGenerator, std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotApplicable:
    case ErrorKind::DegenerateGenerators:
    case ErrorKind::NotTelescopic:
    case ErrorKind::NotThreeGenerated:
    case ErrorKind::Symmetric:
      return kNotApplicable;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::Inconsistent:
    case ErrorKind::NonUniqueRepresentation:
      return kVerificationFailed;
    default:
      return kInputError;
  }
}

Report error_report(Report report, const Error& e) {
  report.error = e;
  report.exit_code = exit_code_for(e.kind());
  return report;
}

Json classification_json(const ClassificationRecord& c) {
  Json j{{"symmetric", c.symmetric},
         {"pseudo_symmetric", c.pseudo_symmetric},
         {"irreducible", c.irreducible},
         {"telescopic", c.telescopic}};
  if (c.m_irreducible) j["m_irreducible"] = *c.m_irreducible;
  return j;
}

Json invariants_json(const NumericalSemigroup& s) {
  return Json{{"generators", s.generators()},
              {"multiplicity", s.multiplicity()},
              {"embedding_dim", s.embedding_dim()},
              {"frobenius", s.frobenius()},
              {"genus", s.genus()},
              {"pseudo_frobenius", s.pseudo_frobenius()},
              {"type", s.type()}};
}

Json diff_json(const std::vector<TableMismatch>& diff) {
  Json out = Json::array();
  for (const auto& m : diff) out.push_back(Json{{"i", m.i}, {"j", m.j}, {"oracle", m.left}, {"formula", m.right}});
  return out;
}

Json comparison_json(const DoublesComparison& cmp) {
  Json changed = Json::array();
  for (const auto& e : cmp.entries) {
    if (e.before == e.after && e.consistent()) continue;
    changed.push_back(Json{{"i", e.i},
                           {"j", e.j},
                           {"bucket", e.bucket},
                           {"before", e.before},
                           {"after", e.after},
                           {"predicted_after", e.predicted_after},
                           {"consistent", e.consistent()}});
  }
  return Json{{"f", cmp.first.f},
              {"f_next", cmp.second.f},
              {"generators", cmp.first.result.generators()},
              {"generators_next", cmp.second.result.generators()},
              {"consistent", cmp.consistent()},
              {"changes", std::move(changed)}};
}

Report analyze_report(const std::vector<Int>& gens, std::optional<Int> m_query) {
  Report report;
  report.input = Json{{"generators", gens}};
  if (m_query) report.input["m_query"] = *m_query;
  report.method = "invariants";
  try {
    const NumericalSemigroup s = make_semigroup(gens);
    report.result = invariants_json(s);
    report.result["classification"] = classification_json(classify(s, m_query));
    if (m_query && *m_query == 4) {
      const auto four = classify_4_irreducible(s);
      report.result["four_irreducible"] = Json{{"class", std::string(to_string(four.classification))},
                                               {"table_method", four.method}};
      if (!four.note.empty()) report.warnings.push_back(four.note);
      report.tables.push_back({four.method, four.table});
    }
  } catch (const Error& e) {
    return error_report(std::move(report), e);
  }
  return report;
}

// Fills `report` with the Betti computation for `s` by `method`.
void betti_into(Report& report, const NumericalSemigroup& s, const std::string& method, const BettiOptions& options,
                bool degrade_not_applicable) {
  report.method = method;
  if (method == "hilbert") {
    const HilbertData h = hilbert_numerator(s);
    Json terms = Json::array();
    for (Int d = 0; d <= h.numerator.degree(); ++d) {
      if (const Int c = h.numerator.coefficient(d); c != 0) terms.push_back(Json::array({d, c}));
    }
    report.result = Json{{"numerator", h.numerator.to_string()},
                         {"terms", std::move(terms)},
                         {"denominator_degrees", h.denominator_degrees}};
    return;
  }

  std::optional<GradedBettiTable> oracle;
  if (method == "oracle" || method == "both") {
    oracle = graded_betti(s, options);
    report.result["degree_bound"] = betti_degree_bound(s);
    report.result["totals"] = total_betti(*oracle);
    report.tables.push_back({"oracle", *oracle});
  }
  if (method == "oracle") return;

  std::optional<FormulaResult> formula;
  try {
    formula = formula_betti(s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotApplicable || !degrade_not_applicable || !oracle) throw;
    report.warnings.push_back(std::string(e.what()) + "; oracle only");
    return;
  }
  report.result["shape"] = formula->shape;
  if (formula->half) report.result["half"] = formula->half->generators();
  if (formula->f) report.result["f"] = *formula->f;
  report.result[oracle ? "totals_formula" : "totals"] = formula->totals;
  if (formula->table) report.tables.push_back({"formula", *formula->table});
  if (!oracle) return;

  std::vector<TableMismatch> diff;
  if (formula->table) {
    diff = table_mismatches(*oracle, *formula->table);
  } else {
    const auto totals = total_betti(*oracle);
    for (std::size_t i = 0; i < std::max(totals.size(), formula->totals.size()); ++i) {
      const Int a = i < totals.size() ? totals[i] : 0;
      const Int b = i < formula->totals.size() ? formula->totals[i] : 0;
      // Totals-only comparison: j is reported as -1.
      if (a != b) diff.push_back({static_cast<int>(i), -1, a, b});
    }
  }
  report.result["agree"] = diff.empty();
  report.result["diff"] = diff_json(diff);
  if (!diff.empty()) report.exit_code = kVerificationFailed;
}

Report betti_report(const std::vector<Int>& gens, const std::string& method, const BettiOptions& options) {
  Report report;
  report.input = Json{{"generators", gens}};
  report.method = method;
  try {
    betti_into(report, make_semigroup(gens), method, options, false);
  } catch (const Error& e) {
    return error_report(std::move(report), e);
  }
  return report;
}

Report double_report(const std::vector<Int>& gens, std::optional<Int> f_arg, bool compare, bool verify) {
  Report report;
  report.input = Json{{"generators", gens}};
  if (f_arg) report.input["f"] = *f_arg;
  report.method = compare ? "formula" : "construction";
  try {
    const NumericalSemigroup s = make_semigroup(gens);
    const Int f = f_arg ? *f_arg : smallest_double_f(s);
    const DoubleSpec d = double_semigroup(s, f);
    report.result = Json{{"f", f},
                         {"raw_generators", d.raw_generators},
                         {"generators", d.result.generators()},
                         {"generators_were_minimal", d.generators_were_minimal},
                         {"symmetric", classify(d.result).symmetric},
                         {"frobenius", d.result.frobenius()},
                         {"half_matches", half(d.result) == s}};
    if (!d.generators_were_minimal) {
      report.warnings.push_back("DegenerateGenerators: raw generators reduce to a smaller minimal set");
    }
    if (!compare) return report;

    const DoublesComparison cmp = telescopic_ordering(s) ? doubled_telescopic_betti(s, f) : compare_doubles_3gen(s, f);
    report.result["comparison"] = comparison_json(cmp);
    report.tables.push_back({"f=" + std::to_string(cmp.first.f), cmp.first_table});
    report.tables.push_back({"f=" + std::to_string(cmp.second.f), cmp.second_table});
    if (!cmp.consistent()) report.exit_code = kVerificationFailed;
    if (verify) {
      const auto m1 = table_mismatches(graded_betti(cmp.first.result), cmp.first_table);
      const auto m2 = table_mismatches(graded_betti(cmp.second.result), cmp.second_table);
      report.result["oracle_agrees"] = m1.empty() && m2.empty();
      if (!m1.empty() || !m2.empty()) report.exit_code = kVerificationFailed;
    }
  } catch (const Error& e) {
    return error_report(std::move(report), e);
  }
  return report;
}

Report batch_record(const BatchLine& line, const std::string& method, const BettiOptions& options) {
  Report report;
  report.input = Json{{"line", line.line_number}, {"text", line.text}};
  report.method = method;
  if (line.parse_error) {
    return error_report(std::move(report), Error(ErrorKind::InvalidGenerator, *line.parse_error));
  }
  report.input["generators"] = line.generators;
  if (line.f) report.input["f"] = *line.f;
  try {
    NumericalSemigroup s = make_semigroup(line.generators);
    if (line.f) {
      const DoubleSpec d = double_semigroup(s, *line.f);
      report.result["double"] = Json{{"generators", d.result.generators()},
                                     {"generators_were_minimal", d.generators_were_minimal}};
      if (!d.generators_were_minimal) {
        report.warnings.push_back("DegenerateGenerators: raw generators reduce to a smaller minimal set");
      }
      s = d.result;
    }
    report.result["invariants"] = invariants_json(s);
    report.result["classification"] = classification_json(classify(s));
    betti_into(report, s, method, options, method == "both");
  } catch (const Error& e) {
    return error_report(std::move(report), e);
  }
  return report;
}

struct OutputFlags {
  bool json = false;
  bool csv = false;
  std::string format = "human";

  void attach(CLI::App* app) {
    app->add_flag("--json", json, "Emit JSON");
    app->add_flag("--csv", csv, "Emit CSV (header i,j,beta)");
    app->add_option("--format", format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
  }

  Format resolve() const {
    if (json || format == "json") return Format::Json;
    if (csv || format == "csv") return Format::Csv;
    return Format::Human;
  }
};

BettiOptions make_options(const std::string& field, unsigned threads) {
  BettiOptions options;
  if (field == "GF2") options.field = CoefficientField::prime(2);
  if (field == "GF3") options.field = CoefficientField::prime(3);
  options.threads = std::max(1u, threads);
  return options;
}

int emit(const Report& report, Format format, std::ostream& out, std::ostream& err) {
  if (report.error && format == Format::Human) {
    err << "error: " << report.error->what() << '\n';
    return report.exit_code;
  }
  render(report, format, out);
  if (report.error) err << "error: " << report.error->what() << '\n';
  return report.exit_code;
}

int run_batch(const std::string& path, const std::string& method, const BettiOptions& options, unsigned jobs,
              Format format, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return kInputError;
  }
  const std::vector<BatchLine> lines = parse_batch(in);
  std::vector<Report> records(lines.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) records[i] = batch_record(lines[i], method, options);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < std::max(1u, jobs); ++w) pool.emplace_back(worker);
    worker();
  }

  std::size_t failed = 0;
  if (format == Format::Csv) out << "line,i,j,beta\n";
  for (const Report& r : records) {
    if (r.exit_code != kOk) ++failed;
    const auto line_no = r.input["line"].get<std::size_t>();
    switch (format) {
      case Format::Json: out << r.to_json().dump() << '\n'; break;
      case Format::Csv:
        if (!r.tables.empty()) {
          for (const auto& [key, beta] : r.tables.front().table.entries()) {
            out << line_no << ',' << key.first << ',' << key.second << ',' << beta << '\n';
          }
        }
        break;
      case Format::Human: {
        out << "line " << line_no << ": " << r.input["text"].get<std::string>() << " -> ";
        if (r.error) {
          out << "error " << r.error->what();
        } else {
          out << (r.exit_code == kOk ? "ok" : "FAILED");
          const Json& res = r.result;
          if (res.contains("totals")) out << " totals " << res["totals"].dump();
          if (res.contains("agree")) out << " agree " << res["agree"].dump();
        }
        for (const auto& w : r.warnings) out << " [warning: " << w << ']';
        out << '\n';
        break;
      }
    }
  }
  const Json summary{{"lines", records.size()}, {"ok", records.size() - failed}, {"failed", failed}};
  if (format == Format::Json) {
    out << Json{{"summary", summary}}.dump() << '\n';
  } else if (format == Format::Human) {
    out << "summary: lines=" << records.size() << " ok=" << records.size() - failed << " failed=" << failed << '\n';
  } else {
    err << "summary: lines=" << records.size() << " ok=" << records.size() - failed << " failed=" << failed << '\n';
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

std::vector<Int> parse_generators(std::string_view text) {
  std::vector<Int> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const Int value = parse_int(piece, "generator");
    if (value < 1) throw Error(ErrorKind::InvalidGenerator, "generators must be positive, got " + std::to_string(value), value);
    gens.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return gens;
}

std::vector<BatchLine> parse_batch(std::istream& in) {
  std::vector<BatchLine> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view view(raw);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;

    BatchLine line{number, std::string(view), {}, std::nullopt, std::nullopt};
    try {
      std::string_view gens_part = view;
      if (const auto semi = view.find(';'); semi != std::string_view::npos) {
        gens_part = view.substr(0, semi);
        const std::string_view opt = trim(view.substr(semi + 1));
        if (opt.substr(0, 2) != "f=") throw Error(ErrorKind::InvalidGenerator, "expected ';f=N'");
        line.f = parse_int(opt.substr(2), "f");
      }
      line.generators = parse_generators(gens_part);
    } catch (const Error& e) {
      line.parse_error = e.what();
    }
    out.push_back(std::move(line));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup invariants, symmetric doubles and graded Betti numbers", "semibetti"};
  app.require_subcommand(1);

  std::string gens_text;
  OutputFlags flags;

  auto* analyze = app.add_subcommand("analyze", "Invariants and classification of a semigroup");
  std::optional<Int> m_query;
  analyze->add_option("generators", gens_text, "Comma-separated generators, e.g. 6,10,11")->required();
  analyze->add_option("--m-query", m_query, "Report m-irreducibility for this multiplicity");
  flags.attach(analyze);

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers of K[S]");
  std::string method = "oracle";
  std::string field = "QQ";
  unsigned threads = 1;
  betti->add_option("generators", gens_text, "Comma-separated generators")->required();
  betti->add_option("--method", method, "oracle, formula, both or hilbert")
      ->check(CLI::IsMember({"oracle", "formula", "both", "hilbert"}));
  betti->add_option("--field", field, "Coefficient field of the oracle")->check(CLI::IsMember({"QQ", "GF2", "GF3"}));
  betti->add_option("--threads", threads, "Worker threads for the oracle");
  flags.attach(betti);

  auto* dbl = app.add_subcommand("double", "Symmetric double T with T/2 = S");
  std::optional<Int> f;
  bool f_min = false;
  bool compare = false;
  bool verify = false;
  dbl->add_option("generators", gens_text, "Comma-separated generators of S")->required();
  auto* f_opt = dbl->add_option("--f", f, "Odd Frobenius number of T, at least 3g(S)+1");
  auto* f_min_opt = dbl->add_flag("--f-min", f_min, "Use the smallest valid f");
  f_opt->excludes(f_min_opt);
  dbl->add_flag("--compare", compare, "Compare the Betti tables of the doubles at f and f+2");
  dbl->add_flag("--verify", verify, "With --compare, check both tables against the oracle");
  flags.attach(dbl);

  auto* batch = app.add_subcommand("batch", "Process a file of semigroups, one per line");
  std::string path;
  unsigned jobs = 1;
  batch->add_option("path", path, "Input file")->required();
  batch->add_option("--method", method, "oracle, formula or both")
      ->check(CLI::IsMember({"oracle", "formula", "both", "hilbert"}));
  batch->add_option("--jobs", jobs, "Lines processed concurrently");
  flags.attach(batch);

  auto* enumerate = app.add_subcommand("enumerate", "List every semigroup up to a genus, batch-file format");
  int max_genus = 0;
  enumerate->add_option("--max-genus", max_genus, "Largest genus")->required()->check(CLI::Range(0, 25));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (*dbl && !f && !f_min) {
    err << "error: double needs --f N or --f-min\n";
    return kInputError;
  }

  const Format format = flags.resolve();
  std::vector<Int> gens;
  if (*analyze || *betti || *dbl) {
    try {
      gens = parse_generators(gens_text);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  if (*analyze) return emit(analyze_report(gens, m_query), format, out, err);
  if (*betti) return emit(betti_report(gens, method, make_options(field, threads)), format, out, err);
  if (*dbl) return emit(double_report(gens, f, compare, verify), format, out, err);
  if (*batch) return run_batch(path, method, make_options("QQ", 1), jobs, format, out, err);
  if (*enumerate) {
    for (const auto& s : semigroups_up_to_genus(max_genus)) {
      const auto& g = s.generators();
      for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
      out << '\n';
    }
    return kOk;
  }
  return kInputError;
}

}  // namespace semibetti::cli
