#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semibetti/betti.hpp"
#include "semibetti/error.hpp"

namespace semibetti::cli {

using Json = nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

struct LabeledTable {
  std::string source;
  GradedBettiTable table;
};

/// Everything one command (or one batch line) reports. Rendering is a pure
/// function of this value, so identical inputs give identical bytes.
struct Report {
  Json input = Json::object();
  std::string method;
  Json result = Json::object();
  std::vector<LabeledTable> tables;
  std::vector<std::string> warnings;
  std::optional<Error> error;
  int exit_code = 0;

  Json to_json() const;
};

Json table_entries_json(const LabeledTable& t);

void render(const Report& report, Format format, std::ostream& out);
void render_human(const Report& report, std::ostream& out);
void render_csv(const Report& report, std::ostream& out);

}  // namespace semibetti::cli
