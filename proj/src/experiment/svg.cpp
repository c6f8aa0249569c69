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

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

namespace pasec::experiment
{
namespace
{

std::string fixed(double v, int digits = 2)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    return {buf, r.ptr};
}

std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

constexpr std::array<const char *, 6> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

} // namespace

void write_svg(const SweepResult &result, std::ostream &out)
{
    constexpr double width = 640.0;
    constexpr double height = 420.0;
    constexpr double left = 70.0;
    constexpr double right = 180.0;
    constexpr double top = 40.0;
    constexpr double bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    // Curves in first-appearance order.
    std::vector<std::string> labels;
    std::map<std::string, std::vector<const SweepRow *>> curves;
    double x_min = INFINITY, x_max = -INFINITY, y_max = 0.0;
    for (const auto &row : result.rows)
    {
        const auto label = result.label(row);
        if (!curves.count(label))
            labels.push_back(label);
        curves[label].push_back(&row);
        x_min = std::min(x_min, row.axis_value);
        x_max = std::max(x_max, row.axis_value);
        if (row.ok && std::isfinite(row.value))
            y_max = std::max(y_max, row.value);
    }
    if (!(x_max > x_min))
    {
        x_min -= 0.5;
        x_max += 0.5;
    }
    const double y_top = result.metric == Metric::asc ? std::max(1.0, std::ceil(y_max * 1.05)) : 1.0;

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + (1.0 - y / y_top) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0) << "\" height=\""
        << fixed(height, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!result.title.empty())
        out << "<text x=\"" << fixed(left) << "\" y=\"24\" font-size=\"14\">" << escape(result.title) << "</text>\n";
    out << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(plot_w)
        << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i)
    {
        const double xv = x_min + (x_max - x_min) * i / 5.0;
        const double yv = y_top * i / 5.0;
        out << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << fixed(top + plot_h + 18)
            << "\" text-anchor=\"middle\">" << fixed(xv, 1) << "</text>\n";
        out << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(py(yv) + 4) << "\" text-anchor=\"end\">"
            << fixed(yv, 2) << "</text>\n";
        out << "<line x1=\"" << fixed(left) << "\" x2=\"" << fixed(left + plot_w) << "\" y1=\"" << fixed(py(yv))
            << "\" y2=\"" << fixed(py(yv)) << "\" stroke=\"#ddd\"/>\n";
    }
    out << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(height - 10) << "\" text-anchor=\"middle\">"
        << to_string(result.axis) << ' ' << unit_of(result.axis) << "</text>\n";
    out << "<text x=\"16\" y=\"" << fixed(top + plot_h / 2) << "\" transform=\"rotate(-90 16 "
        << fixed(top + plot_h / 2) << ")\" text-anchor=\"middle\">" << to_string(result.metric) << "</text>\n";

    for (std::size_t c = 0; c < labels.size(); ++c)
    {
        const auto &rows = curves[labels[c]];
        const char *color = palette[c % palette.size()];
        const bool markers = !rows.empty() && rows.front()->method == Method::mc;
        if (markers)
        {
            for (const auto *r : rows)
                if (r->ok && std::isfinite(r->value))
                    out << "<circle cx=\"" << fixed(px(r->axis_value)) << "\" cy=\"" << fixed(py(r->value))
                        << "\" r=\"3\" fill=\"none\" stroke=\"" << color << "\"/>\n";
        }
        else
        {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            bool first = true;
            for (const auto *r : rows)
            {
                if (!r->ok || !std::isfinite(r->value))
                    continue;
                out << (first ? "" : " ") << fixed(px(r->axis_value)) << ',' << fixed(py(r->value));
                first = false;
            }
            out << "\"/>\n";
        }
        const double ly = top + 14.0 + 18.0 * static_cast<double>(c);
        out << "<text x=\"" << fixed(left + plot_w + 12) << "\" y=\"" << fixed(ly) << "\" fill=\"" << color << "\">"
            << escape(labels[c]) << "</text>\n";
    }
    out << "</svg>\n";
}

void emit_svg(const SweepResult &result, const std::string &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw OutputError("cannot open '" + path + "' for writing");
    write_svg(result, out);
    out.flush();
    if (!out)
        throw OutputError("write to '" + path + "' failed");
}

} // namespace pasec::experiment
