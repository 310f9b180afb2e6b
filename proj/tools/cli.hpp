// Copyright 2026 The relspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace relspin::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPropertyFailure = 1,
    kUsageError = 2,
    kDomainError = 3,
};

using Cell = std::variant<double, long long, bool, std::string>;

/// Fixed columns per subcommand; every row has one cell per column.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest form that carries 17 significant digits ("%.17g").
std::string format_real(double x);

/// RFC-4180 style, header row first.
void write_csv(const Table& table, std::ostream& out);

/// Array of row objects keyed by column name.
void write_json(const Table& table, std::ostream& out);

/// Parses `args` (without the program name), runs one subcommand and writes
/// the table to `out` or to --output. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relspin::cli
