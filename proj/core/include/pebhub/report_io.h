#ifndef PEBHUB_REPORT_IO_H_
#define PEBHUB_REPORT_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pebhub/certificate.h"
#include "pebhub/graph.h"
#include "pebhub/numbers.h"
#include "pebhub/verify.h"

namespace pebhub {

enum class ReportFormat { kJson, kCsv, kText };
std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// Field order is fixed. With `include_timing` false the elapsed_ms fields
// are dropped, which makes output byte-identical across runs.
std::string FormatNumberReport(const Graph& graph, const NumberReport& report,
                               ReportFormat format, bool include_timing = true);
std::string FormatCases(const std::vector<VerificationCase>& cases, ReportFormat format,
                        bool include_timing = true);
std::string FormatConjectureRows(const std::vector<ConjectureRow>& rows, ReportFormat format,
                                 bool include_timing = true);

// {"moves": [["v1","v2"], ...], "target": ["v2","v3"]}, labels per graph.
std::string MoveCertificateToJson(const Graph& graph, const MoveCertificate& certificate);
// Inverse of MoveCertificateToJson. Throws std::invalid_argument on bad input.
MoveCertificate MoveCertificateFromJson(const Graph& graph, std::string_view text);

// {"edges": [["v1","v2",3], ...], "target": [...]}
std::string FlowCertificateToJson(const Graph& graph, const FlowCertificate& certificate);
FlowCertificate FlowCertificateFromJson(const Graph& graph, std::string_view text);

// Sorted vertex index list, e.g. [1,2].
std::string VertexSetToJson(VertexSet set);

}  // namespace pebhub

#endif  // PEBHUB_REPORT_IO_H_
