#include "jobs/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace qloop::jobs {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Documented:
      return "documented-discrepancy";
    default:
      return "skipped";
  }
}

bool Report::passed() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

void Report::add(std::string id, std::string ref, Status status, std::string detail) {
  checks.push_back({std::move(id), std::move(ref), status, std::move(detail)});
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = Report::kSchemaVersion;
  j["command"] = r.command;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"ref", c.ref}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["checks"] = checks;
  nlohmann::ordered_json tables = nlohmann::ordered_json::array();
  for (const auto& t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["tables"] = tables;
  j["passed"] = r.passed();
  return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << "\n";
}

}  // namespace

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "# schema: " << Report::kSchemaVersion << "\n# command: " << r.command << "\n";
  for (const auto& [k, v] : r.config) out << "# " << k << ": " << v << "\n";
  out << "# table: checks\n";
  csv_row(out, {"id", "ref", "status", "detail"});
  for (const auto& c : r.checks) csv_row(out, {c.id, c.ref, status_name(c.status), c.detail});
  for (const auto& t : r.tables) {
    out << "# table: " << t.name << "\n";
    csv_row(out, t.columns);
    for (const auto& row : t.rows) csv_row(out, row);
  }
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command;
  for (const auto& [k, v] : r.config) out << " " << k << "=" << v;
  out << "\n";
  for (const auto& c : r.checks) {
    const char* mark = c.status == Status::Pass ? "✓" : c.status == Status::Fail ? "✗" : c.status == Status::Documented ? "!" : "-";
    out << mark << " " << c.ref;
    if (c.id != c.ref) out << " " << c.id;
    if (c.status == Status::Documented) out << " (documented discrepancy)";
    if (c.status == Status::Skipped) out << " (skipped)";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& t : r.tables) {
    out << "\n[" << t.name << "]\n";
    std::vector<std::size_t> width(t.columns.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    measure(t.columns);
    for (const auto& row : t.rows) measure(row);
    auto line = [&](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += row[i];
        if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << s << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  out << "\n" << r.checks.size() << " checks: " << r.count(Status::Pass) << " passed, " << r.count(Status::Fail)
      << " failed, " << r.count(Status::Documented) << " documented, " << r.count(Status::Skipped) << " skipped\n";
  return out.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json:
      return render_json(r);
    case Format::Csv:
      return render_csv(r);
    default:
      return render_text(r);
  }
}

}  // namespace qloop::jobs
