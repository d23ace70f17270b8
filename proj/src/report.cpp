#include "morrey/report.hpp"

#include <algorithm>
#include <sstream>

#include "morrey/error.hpp"
#include "morrey/io.hpp"

namespace morrey {

using nlohmann::ordered_json;

namespace {

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_real(v.get<double>());
  return v.dump();
}

std::string cell_text(const ordered_json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += scalar_text(v[i]);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json space_json(const SpaceParams& sp) {
  return ordered_json{{"p", sp.p()}, {"q", sp.q()}, {"d", sp.d()}};
}

std::vector<std::string> columns(const RunReport& report) {
  std::vector<std::string> cols;
  if (!report.results.empty()) {
    for (const auto& item : report.results.front().items()) cols.push_back(item.key());
  }
  return cols;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::table;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw ArgumentError("unknown format '" + std::string(name) + "' (expected table|json|csv)");
}

std::string to_json(const RunReport& report, bool include_timing) {
  ordered_json doc;
  doc["command"] = report.command;
  doc["argv"] = report.argv;
  doc["space"] = report.space ? space_json(*report.space) : ordered_json(nullptr);
  doc["tolerances"] = report.tolerances;
  doc["summary"] = report.summary;
  doc["results"] = report.results;
  if (include_timing) doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc.dump(2) + "\n";
}

std::string to_csv(const RunReport& report, bool include_timing) {
  std::ostringstream out;
  out << "# command," << csv_escape(report.command) << '\n';
  if (report.space) {
    out << "# p," << format_real(report.space->p()) << '\n';
    out << "# q," << format_real(report.space->q()) << '\n';
    out << "# d," << report.space->d() << '\n';
  }
  for (const auto& item : report.tolerances.items()) {
    out << "# tolerance." << item.key() << ',' << csv_escape(cell_text(item.value())) << '\n';
  }
  for (const auto& item : report.summary.items()) {
    out << "# " << item.key() << ',' << csv_escape(cell_text(item.value())) << '\n';
  }
  if (include_timing) out << "# elapsed_seconds," << format_real(report.elapsed_seconds) << '\n';
  const auto cols = columns(report);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cols[i]);
  if (!cols.empty()) out << '\n';
  for (const auto& row : report.results) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row.at(cols[i])));
    out << '\n';
  }
  return out.str();
}

std::string to_table(const RunReport& report) {
  std::ostringstream out;
  out << report.command;
  if (report.space) {
    out << "  (p=" << format_real(report.space->p()) << ", q=" << format_real(report.space->q())
        << ", d=" << report.space->d() << ")";
  }
  out << '\n';
  std::size_t key_width = 0;
  for (const auto& item : report.summary.items()) key_width = std::max(key_width, item.key().size());
  for (const auto& item : report.summary.items()) {
    out << "  " << item.key() << std::string(key_width - item.key().size(), ' ') << " : "
        << cell_text(item.value()) << '\n';
  }
  const auto cols = columns(report);
  if (!cols.empty()) {
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      width[i] = cols[i].size();
      for (const auto& row : report.results) width[i] = std::max(width[i], cell_text(row.at(cols[i])).size());
    }
    auto emit = [&](auto&& text_of) {
      out << ' ';
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string t = text_of(i);
        out << ' ' << t << std::string(width[i] - t.size(), ' ');
      }
      out << '\n';
    };
    out << '\n';
    emit([&](std::size_t i) { return cols[i]; });
    for (const auto& row : report.results) emit([&](std::size_t i) { return cell_text(row.at(cols[i])); });
  }
  for (const auto& note : report.notes) out << note << '\n';
  if (!report.tolerances.empty()) {
    out << "tolerances:";
    for (const auto& item : report.tolerances.items()) out << ' ' << item.key() << '=' << cell_text(item.value());
    out << '\n';
  }
  out << "elapsed: " << format_real(report.elapsed_seconds) << " s\n";
  return out.str();
}

std::string render(const RunReport& report, ReportFormat format, bool include_timing) {
  switch (format) {
    case ReportFormat::table: return to_table(report);
    case ReportFormat::json: return to_json(report, include_timing);
    case ReportFormat::csv: return to_csv(report, include_timing);
  }
  return {};
}

}  // namespace morrey
