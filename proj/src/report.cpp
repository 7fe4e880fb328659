// Copyright 2026 The ffdioph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffdioph/report.hpp"

#include <string>
#include <vector>

#include "ffdioph/errors.hpp"
#include "ffdioph/version.hpp"

namespace ffdioph {

Json MakeReport(const std::string& experiment, Json config) {
  Json report;
  report["tool"] = "ffdioph";
  report["version"] = kVersion;
  report["schema_version"] = kReportSchemaVersion;
  report["experiment"] = experiment;
  report["config"] = std::move(config);
  report["results"] = Json::object();
  report["checks"] = Json::array();
  return report;
}

void AddCheck(Json* report, const std::string& name, bool pass,
              const std::string& detail) {
  Json entry;
  entry["name"] = name;
  entry["pass"] = pass;
  entry["detail"] = detail;
  (*report)["checks"].push_back(std::move(entry));
}

bool AllChecksPass(const Json& report) {
  if (!report.contains("checks")) return true;
  for (const auto& entry : report["checks"]) {
    if (!entry.value("pass", false)) return false;
  }
  return true;
}

void AddTable(Json* report, const std::string& name,
              const std::vector<std::string>& columns, Json rows) {
  Json table;
  table["name"] = name;
  table["columns"] = columns;
  table["rows"] = std::move(rows);
  auto& results = (*report)["results"];
  if (!results.contains("tables")) results["tables"] = Json::array();
  results["tables"].push_back(std::move(table));
}

std::string RenderJson(const Json& report) { return report.dump(2) + "\n"; }

std::string FormatDouble(double value) { return Json(value).dump(); }

namespace {

// Renders one scalar JSON value as a CSV cell.  Strings keep their content
// verbatim and are quoted only when needed; other scalars reuse the JSON
// serialization so numeric formatting matches the JSON report exactly.
std::string CsvCell(const Json& value) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else {
    text = value.dump();
  }
  bool needs_quotes = text.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::string RenderCsv(const Json& report) {
  std::string out;
  out += "# tool=ffdioph version=" + report["version"].get<std::string>() +
         " schema_version=" + report["schema_version"].get<std::string>() +
         " experiment=" + report["experiment"].get<std::string>() + "\n";
  if (report.contains("config")) {
    out += "# config:";
    for (auto it = report["config"].begin(); it != report["config"].end();
         ++it) {
      out += " " + it.key() + "=" + CsvCell(it.value());
    }
    out += "\n";
  }
  const auto& results = report["results"];
  if (results.contains("tables")) {
    for (const auto& table : results["tables"]) {
      out += "# table " + table["name"].get<std::string>() + "\n";
      std::string header;
      for (const auto& col : table["columns"]) {
        if (!header.empty()) header += ",";
        header += CsvCell(col);
      }
      out += header + "\n";
      for (const auto& row : table["rows"]) {
        std::string line;
        bool first = true;
        for (const auto& cell : row) {
          if (!first) line += ",";
          first = false;
          line += CsvCell(cell);
        }
        out += line + "\n";
      }
    }
  }
  if (report.contains("checks")) {
    out += "# table checks\n";
    out += "name,pass,detail\n";
    for (const auto& entry : report["checks"]) {
      out += CsvCell(entry["name"]) + "," + CsvCell(entry["pass"]) + "," +
             CsvCell(entry["detail"]) + "\n";
    }
  }
  return out;
}

}  // namespace ffdioph
