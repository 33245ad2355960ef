// Copyright 2026 The qdistill developers.
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

#pragma once

#include <string>
#include <vector>

namespace qdistill {

/// 12 significant digits, period decimal separator. Numbers are rendered
/// once, deterministically, so golden-file comparisons are byte-stable.
std::string format_number(double v);

/// A rectangular table. Numeric cells are pre-rendered with format_number;
/// label cells (outcome names, verdicts) are stored as-is. Header names are
/// stable public API.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma-separated, every row (header included) newline-terminated.
std::string to_csv(const CsvTable& table);

}  // namespace qdistill
