#include "catsize/report.hpp"

#include <algorithm>
#include <cstdio>

namespace catsize::cli {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string space(width - s.size(), ' ');
  return right ? space + s : s + space;
}

}  // namespace

RenderFormat parse_format(const std::string& name) {
  if (name == "table") return RenderFormat::Table;
  if (name == "json") return RenderFormat::Json;
  throw InvalidValue("format", "must be 'table' or 'json'");
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["scenario"] = report.scenario;
  doc["mode"] = report.mode;
  doc["species"] = nlohmann::ordered_json::array();
  for (const SpeciesRow& row : report.species) {
    doc["species"].push_back({{"name", row.name},
                              {"count", row.count},
                              {"shift_velocity", row.shift_velocity},
                              {"characteristic_velocity", row.characteristic_velocity},
                              {"w_particles", row.w_particles}});
  }
  doc["total_w_particles"] = report.total_w_particles;
  doc["total_w_raw"] = report.total_w_raw;
  if (report.w_cp) {
    doc["w_cp"] = {{"n_pairs", report.w_cp->n_pairs},
                   {"overlap_k", report.w_cp->overlap_k},
                   {"w_cp", report.w_cp->w_cp}};
  }
  doc["classification"] = report.classification;
  if (report.required_magnification) {
    doc["required_magnification"] = *report.required_magnification;
  }
  if (report.w_natural) doc["w_natural"] = *report.w_natural;
  if (report.overlap_abs) doc["overlap_abs"] = *report.overlap_abs;
  doc["notes"] = report.notes;
  doc["warnings"] = report.warnings;
  return doc;
}

Report report_from_json(const nlohmann::ordered_json& doc) {
  Report report;
  report.scenario = doc.at("scenario").get<std::string>();
  report.mode = doc.at("mode").get<std::string>();
  for (const auto& row : doc.at("species")) {
    report.species.push_back({row.at("name").get<std::string>(),
                              row.at("count").get<double>(),
                              row.at("shift_velocity").get<double>(),
                              row.at("characteristic_velocity").get<double>(),
                              row.at("w_particles").get<double>()});
  }
  report.total_w_particles = doc.at("total_w_particles").get<double>();
  report.total_w_raw = doc.at("total_w_raw").get<double>();
  if (doc.contains("w_cp")) {
    const auto& pair = doc.at("w_cp");
    report.w_cp = comp::PairReport{pair.at("n_pairs").get<double>(),
                                   pair.at("overlap_k").get<double>(),
                                   pair.at("w_cp").get<double>()};
  }
  report.classification = doc.at("classification").get<std::string>();
  if (doc.contains("required_magnification")) {
    report.required_magnification = doc.at("required_magnification").get<double>();
  }
  if (doc.contains("w_natural")) report.w_natural = doc.at("w_natural").get<double>();
  if (doc.contains("overlap_abs")) report.overlap_abs = doc.at("overlap_abs").get<double>();
  report.notes = doc.at("notes").get<std::vector<std::string>>();
  report.warnings = doc.at("warnings").get<std::vector<std::string>>();
  return report;
}

namespace {

std::string render_table(const Report& report) {
  std::string out;
  out += "scenario " + report.scenario + "\n";
  out += "mode " + report.mode + "\n";

  const std::vector<std::string> headers = {"species", "N", "v (cm/s)", "v0 (cm/s)",
                                            "W_particles"};
  std::vector<std::vector<std::string>> rows;
  for (const SpeciesRow& row : report.species) {
    rows.push_back({row.name, fmt(row.count), fmt(row.shift_velocity),
                    fmt(row.characteristic_velocity), fmt(row.w_particles)});
  }
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < headers.size(); ++c) {
    std::size_t w = headers[c].size();
    for (const auto& row : rows) w = std::max(w, row[c].size());
    widths.push_back(w);
  }
  auto emit_row = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) line += "  ";
      line += pad(cells[c], widths[c], c > 0);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit_row(headers);
  for (const auto& row : rows) emit_row(row);

  out += "total " + fmt(report.total_w_particles) + " shifted particles (W_raw " +
         fmt(report.total_w_raw) + ")\n";
  if (report.w_cp) {
    out += "pairs " + fmt(report.w_cp->n_pairs) + "  overlap K " + fmt(report.w_cp->overlap_k) +
           "  W_CP " + fmt(report.w_cp->w_cp) + "\n";
  }
  out += "classification " + report.classification;
  if (report.required_magnification) {
    out += " (requires magnification " + fmt(*report.required_magnification) + ")";
  }
  out += "\n";
  if (report.w_natural) out += "w_natural " + fmt(*report.w_natural) + "\n";
  if (report.overlap_abs) out += "overlap |<A|B>| " + fmt(*report.overlap_abs) + "\n";
  for (const std::string& note : report.notes) out += "note: " + note + "\n";
  for (const std::string& warning : report.warnings) out += "warning: " + warning + "\n";
  while (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

}  // namespace

std::string render(const Report& report, RenderFormat format) {
  if (format == RenderFormat::Json) return to_json(report).dump(2);
  return render_table(report);
}

std::string render_many(const std::vector<Report>& reports, RenderFormat format) {
  if (format == RenderFormat::Json) {
    if (reports.size() == 1) return to_json(reports.front()).dump(2);
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Report& report : reports) doc.push_back(to_json(report));
    return doc.dump(2);
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += "\n" + std::string(64, '-') + "\n";
    out += render_table(reports[i]);
  }
  return out;
}

Report flatten(const est::CatSizeReport& result, std::string scenario_name, std::string mode) {
  Report report;
  report.scenario = std::move(scenario_name);
  report.mode = std::move(mode);
  for (const est::SpeciesContribution& entry : result.per_species) {
    report.species.push_back({entry.species.name, entry.species.count,
                              entry.species.shift_velocity,
                              entry.species.characteristic_velocity, entry.w_particles});
  }
  report.total_w_particles = result.total_w_particles;
  report.total_w_raw = result.total_w_raw;
  if (result.classification) {
    report.classification = to_string(result.classification->category);
    if (result.classification->category == DistinctnessCategory::Mesoscopic) {
      report.required_magnification = result.classification->required_magnification;
    }
  }
  report.notes = result.notes;
  report.warnings = result.warnings;
  return report;
}

}  // namespace catsize::cli
