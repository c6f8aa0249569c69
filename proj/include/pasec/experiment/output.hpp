// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "pasec/experiment/sweep.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pasec::experiment
{

class OutputError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Header `axis,method,value,error`, one row per SweepRow, LF endings.
/// value and error carry 17 significant digits; failed rows print `nan`.
void write_csv(const SweepResult &result, std::ostream &out);
void emit_csv(const SweepResult &result, const std::string &path);

struct CsvRecord
{
    double axis;
    std::string method;
    double value;
    double error;
};

/// Reads what write_csv produces.
std::vector<CsvRecord> read_csv(std::istream &in);

/// Line chart of every (series, method) curve; mc rows are drawn as markers.
void write_svg(const SweepResult &result, std::ostream &out);
void emit_svg(const SweepResult &result, const std::string &path);

} // namespace pasec::experiment
