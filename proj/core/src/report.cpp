/*
 * Copyright 2026 The lcasched Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>

#include "lcasched/errors.hpp"
#include "lcasched/experiment.hpp"

namespace lcasched {

const CellStats* Aggregate::cell(SchedulerKind kind, std::size_t n_tasks) const {
  for (const CellStats& c : cells) {
    if (c.scheduler == kind && c.n_tasks == n_tasks) return &c;
  }
  return nullptr;
}

const SchedulerSummary* Aggregate::scheduler(SchedulerKind kind) const {
  for (const SchedulerSummary& s : summary) {
    if (s.scheduler == kind) return &s;
  }
  return nullptr;
}

std::vector<std::size_t> Aggregate::task_counts() const {
  std::vector<std::size_t> counts;
  for (const CellStats& c : cells) counts.push_back(c.n_tasks);
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  return counts;
}

Aggregate aggregate(std::span<const ExperimentRecord> records) {
  if (records.empty()) {
    throw EmptyInput("aggregate needs at least one record");
  }

  std::map<std::tuple<std::uint64_t, std::size_t>, std::vector<double>> by_cell;
  std::map<std::uint64_t, std::pair<double, std::size_t>> by_scheduler;
  for (const ExperimentRecord& r : records) {
    by_cell[{code(r.scheduler), r.n_tasks}].push_back(r.makespan_s);
    auto& [sum, count] = by_scheduler[code(r.scheduler)];
    sum += r.makespan_s;
    ++count;
  }

  Aggregate out;
  for (const auto& [key, values] : by_cell) {
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    const double stddev = std::sqrt(sq / static_cast<double>(values.size()));
    out.cells.push_back({static_cast<SchedulerKind>(std::get<0>(key)), std::get<1>(key),
                         values.size(), mean, stddev});
  }
  for (const auto& [kind, acc] : by_scheduler) {
    out.summary.push_back({static_cast<SchedulerKind>(kind), acc.second,
                           acc.first / static_cast<double>(acc.second)});
  }
  return out;
}

std::size_t emit_csv(std::span<const ExperimentRecord> records, std::ostream& sink) {
  std::vector<ExperimentRecord> sorted(records.begin(), records.end());
  sort_canonical(sorted);

  std::string text(kCsvHeader);
  text += '\n';
  char number[64];
  for (const ExperimentRecord& r : sorted) {
    std::snprintf(number, sizeof number, "%.6f", r.makespan_s);
    text += to_string(r.scheduler);
    text += ',' + std::to_string(r.n_tasks);
    text += ',' + std::to_string(r.rep);
    text += ',' + std::to_string(r.cell_seed);
    text += ',';
    text += number;
    text += ',' + std::to_string(r.fitness_evaluations);
    text += ',' + std::to_string(r.wall_time_ms);
    text += '\n';
  }
  sink.write(text.data(), static_cast<std::streamsize>(text.size()));
  sink.flush();
  if (!sink) {
    throw IoError("failed writing CSV");
  }
  return text.size();
}

namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line, const char* name) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("bad ") + name + " field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<ExperimentRecord> parse_csv(std::istream& in) {
  std::vector<ExperimentRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw ParseError(line_no, "unexpected CSV header");
      header_seen = true;
      continue;
    }

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 7) throw ParseError(line_no, "expected 7 fields");

    auto kind = parse_scheduler(fields[0]);
    if (!kind) throw ParseError(line_no, "unknown scheduler '" + std::string(fields[0]) + "'");
    ExperimentRecord r;
    r.scheduler = *kind;
    r.n_tasks = parse_field<std::size_t>(fields[1], line_no, "n_tasks");
    r.rep = parse_field<std::size_t>(fields[2], line_no, "rep");
    r.cell_seed = parse_field<std::uint64_t>(fields[3], line_no, "seed");
    r.makespan_s = parse_field<double>(fields[4], line_no, "makespan_s");
    r.fitness_evaluations = parse_field<std::uint64_t>(fields[5], line_no, "evals");
    r.wall_time_ms = parse_field<std::uint64_t>(fields[6], line_no, "wall_ms");
    records.push_back(r);
  }
  if (!header_seen) throw ParseError(0, "CSV is empty");
  return records;
}

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 460.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

std::string_view colour(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::FCFS: return "#d62728";
    case SchedulerKind::LJF: return "#1f77b4";
    case SchedulerKind::BEF: return "#ff7f0e";
    case SchedulerKind::LCA: return "#2ca02c";
  }
  return "#000000";
}

std::string upper(std::string_view name) {
  std::string out(name);
  for (char& c : out) c = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
  return out;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

std::size_t emit_svg_chart(const Aggregate& agg, std::ostream& sink) {
  if (agg.summary.empty()) {
    throw EmptyInput("chart needs at least one scheduler");
  }
  const std::vector<std::size_t> counts = agg.task_counts();
  const double x_min = static_cast<double>(counts.front());
  const double x_max = static_cast<double>(counts.back());
  double y_max = 0.0;
  for (const CellStats& c : agg.cells) y_max = std::max(y_max, c.mean_s);
  y_max = y_max > 0.0 ? y_max * 1.1 : 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double n) {
    if (x_max == x_min) return kLeft + plot_w / 2.0;
    return kLeft + (n - x_min) / (x_max - x_min) * plot_w;
  };
  auto py = [&](double s) { return kTop + plot_h - s / y_max * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // Axes
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n"
      << "</g>\n";
  for (std::size_t n : counts) {
    const double x = px(static_cast<double>(n));
    svg << "<line x1=\"" << fixed(x, 2) << "\" y1=\"" << kTop + plot_h << "\" x2=\""
        << fixed(x, 2) << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fixed(x, 2) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << n << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double s = y_max * i / 5.0;
    const double y = py(s);
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed(y, 2) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fixed(y, 2) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed(y + 4, 2)
        << "\" text-anchor=\"end\">" << fixed(s, 3) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">Number of tasks</text>\n"
      << "<text x=\"20\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << kTop + plot_h / 2 << ")\">Mean makespan (s)</text>\n";

  // Series
  for (const SchedulerSummary& s : agg.summary) {
    svg << "<polyline fill=\"none\" stroke=\"" << colour(s.scheduler)
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const CellStats& c : agg.cells) {
      if (c.scheduler != s.scheduler) continue;
      svg << (first ? "" : " ") << fixed(px(static_cast<double>(c.n_tasks)), 2) << ','
          << fixed(py(c.mean_s), 2);
      first = false;
    }
    svg << "\"/>\n";
    for (const CellStats& c : agg.cells) {
      if (c.scheduler != s.scheduler) continue;
      svg << "<circle cx=\"" << fixed(px(static_cast<double>(c.n_tasks)), 2) << "\" cy=\""
          << fixed(py(c.mean_s), 2) << "\" r=\"3\" fill=\"" << colour(s.scheduler) << "\"/>\n";
    }
  }

  // Legend, with the grand mean per scheduler
  const double lx = kLeft + plot_w + 20;
  double ly = kTop + 10;
  svg << "<g>\n";
  for (const SchedulerSummary& s : agg.summary) {
    svg << "<rect x=\"" << lx << "\" y=\"" << ly - 9 << "\" width=\"14\" height=\"10\" fill=\""
        << colour(s.scheduler) << "\"/>\n"
        << "<text x=\"" << lx + 20 << "\" y=\"" << ly << "\">" << upper(to_string(s.scheduler))
        << " (avg " << fixed(s.grand_mean_s, 3) << " s)</text>\n";
    ly += 20;
  }
  svg << "</g>\n</svg>\n";

  const std::string text = svg.str();
  sink.write(text.data(), static_cast<std::streamsize>(text.size()));
  sink.flush();
  if (!sink) {
    throw IoError("failed writing SVG");
  }
  return text.size();
}

}  // namespace lcasched
