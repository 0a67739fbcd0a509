#include "report.hpp"

#include <ostream>

namespace semibetti::cli {

Json table_entries_json(const LabeledTable& t) {
  Json rows = Json::array();
  for (const auto& [key, beta] : t.table.entries()) {
    rows.push_back(Json{{"source", t.source}, {"i", key.first}, {"j", key.second}, {"beta", beta}});
  }
  return rows;
}

Json Report::to_json() const {
  Json j;
  j["input"] = input;
  j["method"] = method;
  j["result"] = result;
  Json rows = Json::array();
  for (const auto& t : tables) {
    for (auto& row : table_entries_json(t)) rows.push_back(std::move(row));
  }
  j["tables"] = std::move(rows);
  j["warnings"] = warnings;
  if (error) {
    j["error"] = Json{{"kind", std::string(to_string(error->kind()))}, {"message", error->what()}};
  }
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += scalar_text(v[i]);
    }
    return out;
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (v.is_object()) return false;
  if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_object() || e.is_array()) return false;
    }
  }
  return true;
}

void human_value(const std::string& key, const Json& v, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_flat(v)) {
    out << pad << key << ": " << scalar_text(v) << '\n';
    return;
  }
  out << pad << key << ":\n";
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) human_value(k, e, indent + 2, out);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) human_value("[" + std::to_string(i) + "]", v[i], indent + 2, out);
  }
}

void flat_csv(const std::string& prefix, const Json& v, std::ostream& out) {
  if (is_flat(v)) {
    const std::string text = scalar_text(v);
    const bool quote = text.find_first_of(",\"") != std::string::npos;
    out << prefix << ',' << (quote ? "\"" + text + "\"" : text) << '\n';
    return;
  }
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flat_csv(prefix.empty() ? k : prefix + "." + k, e, out);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) flat_csv(prefix + "." + std::to_string(i), v[i], out);
  }
}

}  // namespace

void render_human(const Report& report, std::ostream& out) {
  if (!report.input.empty()) {
    for (const auto& [k, v] : report.input.items()) human_value(k, v, 0, out);
  }
  if (!report.method.empty()) out << "method: " << report.method << '\n';
  for (const auto& [k, v] : report.result.items()) human_value(k, v, 0, out);
  for (const auto& t : report.tables) {
    out << "betti table (" << t.source << "):\n";
    int current = -1;
    for (const auto& [key, beta] : t.table.entries()) {
      if (key.first != current) {
        if (current >= 0) out << '\n';
        current = key.first;
        out << "  beta_" << key.first << ":";
      }
      out << ' ' << key.second;
      if (beta != 1) out << 'x' << beta;
    }
    if (current >= 0) out << '\n';
  }
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  if (report.error) out << "error: " << report.error->what() << '\n';
}

void render_csv(const Report& report, std::ostream& out) {
  if (!report.tables.empty()) {
    out << "i,j,beta\n";
    for (const auto& [key, beta] : report.tables.front().table.entries()) {
      out << key.first << ',' << key.second << ',' << beta << '\n';
    }
    return;
  }
  out << "key,value\n";
  flat_csv("", report.input, out);
  flat_csv("", report.result, out);
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: out << report.to_json().dump(2) << '\n'; break;
    case Format::Csv: render_csv(report, out); break;
    case Format::Human: render_human(report, out); break;
  }
}

}  // namespace semibetti::cli
