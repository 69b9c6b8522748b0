#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jobs/config.hpp"

namespace qloop::jobs {

enum class Status { Pass, Fail, Documented, Skipped };

std::string status_name(Status s);

struct Check {
  std::string id;
  /// Catalog id, typo-ledger id or relation family the check belongs to.
  std::string ref;
  Status status = Status::Pass;
  std::string detail;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<Check> checks;
  std::vector<Table> tables;

  /// No check has status Fail.
  bool passed() const;
  std::size_t count(Status s) const;

  void add(std::string id, std::string ref, Status status, std::string detail = {});
};

/// JSON: {"schema", "command", "config", "checks": [{id, ref, status, detail}],
/// "tables": [{name, columns, rows}], "passed"}.
std::string render_json(const Report& r);
/// CSV: a "checks" table (header id,ref,status,detail), then each table
/// preceded by a line "# table: <name>". RFC 4180 quoting.
std::string render_csv(const Report& r);
/// Human-readable; one line per check with a check mark or a cross.
std::string render_text(const Report& r);
std::string render(const Report& r, Format f);

}  // namespace qloop::jobs
