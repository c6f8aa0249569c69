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

#include "pasec/experiment/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pasec::experiment
{
namespace
{

std::string shortest(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, r.ptr};
}

std::string full_precision(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return {buf, r.ptr};
}

double parse_double(const std::string &s)
{
    if (s == "nan")
        return std::nan("");
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size())
        throw OutputError("csv: bad number '" + s + "'");
    return v;
}

} // namespace

void write_csv(const SweepResult &result, std::ostream &out)
{
    out << "axis,method,value,error\n";
    for (const auto &row : result.rows)
        out << shortest(row.axis_value) << ',' << result.label(row) << ','
            << full_precision(row.ok ? row.value : std::nan("")) << ',' << full_precision(row.error) << '\n';
}

void emit_csv(const SweepResult &result, const std::string &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw OutputError("cannot open '" + path + "' for writing");
    write_csv(result, out);
    out.flush();
    if (!out)
        throw OutputError("write to '" + path + "' failed");
}

std::vector<CsvRecord> read_csv(std::istream &in)
{
    std::vector<CsvRecord> records;
    std::string line;
    if (!std::getline(in, line) || line != "axis,method,value,error")
        throw OutputError("csv: missing header");
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string axis, method, value, error;
        if (!std::getline(fields, axis, ',') || !std::getline(fields, method, ',') ||
            !std::getline(fields, value, ',') || !std::getline(fields, error))
            throw OutputError("csv: malformed row '" + line + "'");
        records.push_back({parse_double(axis), method, parse_double(value), parse_double(error)});
    }
    return records;
}

} // namespace pasec::experiment
