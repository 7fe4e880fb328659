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

#ifndef FFDIOPH_REPORT_HPP_
#define FFDIOPH_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace ffdioph {

using Json = nlohmann::ordered_json;

// Creates the common report envelope shared by every experiment:
//   { tool, version, schema_version, experiment, config, results, checks }
// `config` must not contain anything that varies between equivalent runs
// (worker counts, file paths, wall-clock data); reports for the same
// configuration and seed are byte-identical by construction.
Json MakeReport(const std::string& experiment, Json config);

// Appends a named pass/fail entry to report["checks"].
void AddCheck(Json* report, const std::string& name, bool pass,
              const std::string& detail);

// True when every entry of report["checks"] passed.
bool AllChecksPass(const Json& report);

// Adds a table to report["results"]["tables"]; `rows` is an array of
// arrays aligned with `columns`.
void AddTable(Json* report, const std::string& name,
              const std::vector<std::string>& columns, Json rows);

// Serializes the report as pretty-printed JSON with a trailing newline.
std::string RenderJson(const Json& report);

// Serializes the report as CSV: `#`-prefixed envelope comments, then each
// table as a comment header line, a column row, and one line per row.
// Scalar cells are rendered with the same formatting as the JSON output
// (strings unquoted unless they contain a comma, quote, or newline).
std::string RenderCsv(const Json& report);

// Formats a double the way the JSON serializer does (shortest round-trip).
std::string FormatDouble(double value);

}  // namespace ffdioph

#endif  // FFDIOPH_REPORT_HPP_
