#include "pebhub/report_io.h"

#include <sstream>
#include <stdexcept>
#include <variant>

#include "json.hpp"

namespace pebhub {
namespace {

using nlohmann::ordered_json;

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvRow(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += CsvField(fields[i]);
  }
  out += '\n';
  return out;
}

ordered_json ValueJson(const std::optional<CaseValue>& v) {
  if (!v) return nullptr;
  return std::visit([](auto x) { return ordered_json(x); }, *v);
}

std::string ValueText(const std::optional<CaseValue>& v) {
  if (!v) return "";
  if (const bool* b = std::get_if<bool>(&*v)) return *b ? "true" : "false";
  return std::to_string(std::get<int64_t>(*v));
}

ordered_json LabelList(const Graph& graph, VertexSet set) {
  ordered_json out = ordered_json::array();
  set.ForEach([&](int v) { out.push_back(graph.VertexLabel(v)); });
  return out;
}

int LabelIndex(const Graph& graph, const ordered_json& j) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v < 0 || v >= graph.num_vertices()) {
      throw std::invalid_argument("vertex index out of range");
    }
    return v;
  }
  if (!j.is_string()) throw std::invalid_argument("vertex must be a label or index");
  const int v = graph.VertexIndex(j.get<std::string>());
  if (v < 0) throw std::invalid_argument("unknown vertex " + j.get<std::string>());
  return v;
}

VertexSet TargetFromJson(const Graph& graph, const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("target must be an array");
  VertexSet out;
  for (const auto& e : j) out.insert(LabelIndex(graph, e));
  return out;
}

ordered_json Parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  return std::nullopt;
}

std::string FormatNumberReport(const Graph& graph, const NumberReport& report,
                               ReportFormat format, bool include_timing) {
  const std::string witness = report.witness ? FormatConfig(graph, *report.witness) : "";
  switch (format) {
    case ReportFormat::kJson: {
      ordered_json j;
      j["graph"] = report.graph;
      j["family"] = report.family;
      j["value"] = report.value;
      j["exact"] = report.exact;
      j["witness"] = report.witness ? ordered_json(witness) : ordered_json(nullptr);
      j["configs_examined"] = report.configs_examined;
      j["configs_skipped_by_symmetry"] = report.configs_skipped_by_symmetry;
      j["levels_scanned"] = report.levels_scanned;
      j["group_order"] = report.group_order;
      if (!report.note.empty()) j["note"] = report.note;
      if (include_timing) j["elapsed_ms"] = report.elapsed.count();
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::vector<std::string> header = {"graph", "family", "value", "exact", "witness",
                                         "configs_examined"};
      std::vector<std::string> row = {report.graph,
                                      report.family,
                                      std::to_string(report.value),
                                      report.exact ? "true" : "false",
                                      witness,
                                      std::to_string(report.configs_examined)};
      if (include_timing) {
        header.push_back("elapsed_ms");
        row.push_back(std::to_string(report.elapsed.count()));
      }
      return CsvRow(header) + CsvRow(row);
    }
    case ReportFormat::kText: {
      std::ostringstream out;
      out << report.family << " number of " << report.graph << ": " << report.value
          << (report.exact ? "" : " (lower bound)") << "\n";
      if (report.witness) out << "  witness (" << report.witness->total() << "): "
                              << witness << "\n";
      out << "  configurations examined: " << report.configs_examined
          << ", skipped by symmetry: " << report.configs_skipped_by_symmetry
          << ", group order: " << report.group_order << "\n";
      if (!report.note.empty()) out << "  note: " << report.note << "\n";
      if (include_timing) out << "  elapsed: " << report.elapsed.count() << " ms\n";
      return out.str();
    }
  }
  return {};
}

std::string FormatCases(const std::vector<VerificationCase>& cases, ReportFormat format,
                        bool include_timing) {
  switch (format) {
    case ReportFormat::kJson: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : cases) {
        ordered_json j;
        j["name"] = c.name;
        j["graph"] = c.graph;
        j["expected"] = ValueJson(c.expected);
        j["computed"] = ValueJson(c.computed);
        j["status"] = CaseStatusName(c.status);
        j["detail"] = c.detail;
        if (include_timing) j["elapsed_ms"] = c.elapsed.count();
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::vector<std::string> header = {"name", "graph", "expected", "computed", "status",
                                         "detail"};
      if (include_timing) header.push_back("elapsed_ms");
      std::string out = CsvRow(header);
      for (const auto& c : cases) {
        std::vector<std::string> row = {c.name, c.graph, ValueText(c.expected),
                                        ValueText(c.computed),
                                        std::string(CaseStatusName(c.status)), c.detail};
        if (include_timing) row.push_back(std::to_string(c.elapsed.count()));
        out += CsvRow(row);
      }
      return out;
    }
    case ReportFormat::kText: {
      std::ostringstream out;
      for (const auto& c : cases) {
        out << CaseStatusName(c.status) << "  " << c.name;
        if (c.expected || c.computed) {
          out << "  expected=" << ValueText(c.expected) << " computed=" << ValueText(c.computed);
        }
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        if (include_timing) out << "  " << c.elapsed.count() << "ms";
        out << "\n";
      }
      return out.str();
    }
  }
  return {};
}

std::string FormatConjectureRows(const std::vector<ConjectureRow>& rows, ReportFormat format,
                                 bool include_timing) {
  switch (format) {
    case ReportFormat::kJson: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["conjectured"] = r.conjectured;
        j["computed"] = r.computed ? ordered_json(*r.computed) : ordered_json(nullptr);
        j["exact"] = r.exact;
        j["agreement"] = r.agreement;
        j["witness_unsolvable"] = r.witness_unsolvable;
        j["status"] = CaseStatusName(r.status);
        j["detail"] = r.detail;
        if (include_timing) j["elapsed_ms"] = r.elapsed.count();
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::vector<std::string> header = {"n", "k", "conjectured", "computed", "exact",
                                         "agreement", "witness_unsolvable", "status",
                                         "detail"};
      if (include_timing) header.push_back("elapsed_ms");
      std::string out = CsvRow(header);
      for (const auto& r : rows) {
        std::vector<std::string> row = {
            std::to_string(r.n),
            std::to_string(r.k),
            std::to_string(r.conjectured),
            r.computed ? std::to_string(*r.computed) : "",
            r.exact ? "true" : "false",
            r.agreement ? "true" : "false",
            r.witness_unsolvable ? "true" : "false",
            std::string(CaseStatusName(r.status)),
            r.detail};
        if (include_timing) row.push_back(std::to_string(r.elapsed.count()));
        out += CsvRow(row);
      }
      return out;
    }
    case ReportFormat::kText: {
      std::ostringstream out;
      for (const auto& r : rows) {
        out << CaseStatusName(r.status) << "  cycle:" << r.n << "  conjectured="
            << r.conjectured << " computed="
            << (r.computed ? std::to_string(*r.computed) : "?")
            << (r.agreement ? "  agrees" : "  differs")
            << "  stacked witness " << (r.witness_unsolvable ? "unsolvable" : "not proven");
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        if (include_timing) out << "  " << r.elapsed.count() << "ms";
        out << "\n";
      }
      return out.str();
    }
  }
  return {};
}

std::string MoveCertificateToJson(const Graph& graph, const MoveCertificate& certificate) {
  ordered_json j;
  ordered_json moves = ordered_json::array();
  for (const Move& m : certificate.moves) {
    moves.push_back({graph.VertexLabel(m.from), graph.VertexLabel(m.to)});
  }
  j["moves"] = std::move(moves);
  j["target"] = LabelList(graph, certificate.final_target);
  return j.dump();
}

MoveCertificate MoveCertificateFromJson(const Graph& graph, std::string_view text) {
  const ordered_json j = Parse(text);
  if (!j.is_object() || !j.contains("moves") || !j.contains("target")) {
    throw std::invalid_argument("certificate needs \"moves\" and \"target\"");
  }
  MoveCertificate out;
  for (const auto& m : j.at("moves")) {
    if (!m.is_array() || m.size() != 2) throw std::invalid_argument("move must be a pair");
    out.moves.push_back({LabelIndex(graph, m[0]), LabelIndex(graph, m[1])});
  }
  out.final_target = TargetFromJson(graph, j.at("target"));
  return out;
}

std::string FlowCertificateToJson(const Graph& graph, const FlowCertificate& certificate) {
  ordered_json j;
  ordered_json edges = ordered_json::array();
  for (const FlowEdge& e : certificate.edges) {
    edges.push_back({graph.VertexLabel(e.from), graph.VertexLabel(e.to), e.multiplicity});
  }
  j["edges"] = std::move(edges);
  j["target"] = LabelList(graph, certificate.final_target);
  return j.dump();
}

FlowCertificate FlowCertificateFromJson(const Graph& graph, std::string_view text) {
  const ordered_json j = Parse(text);
  if (!j.is_object() || !j.contains("edges") || !j.contains("target")) {
    throw std::invalid_argument("flow certificate needs \"edges\" and \"target\"");
  }
  FlowCertificate out;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number_unsigned()) {
      throw std::invalid_argument("flow edge must be [from, to, multiplicity]");
    }
    out.edges.push_back(
        {LabelIndex(graph, e[0]), LabelIndex(graph, e[1]), e[2].get<uint32_t>()});
  }
  out.final_target = TargetFromJson(graph, j.at("target"));
  return out;
}

std::string VertexSetToJson(VertexSet set) {
  return ordered_json(set.ToVector()).dump();
}

}  // namespace pebhub
