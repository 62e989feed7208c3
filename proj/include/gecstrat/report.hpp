#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecstrat/corpus_stats.hpp"
#include "gecstrat/scoring.hpp"
#include "json.hpp"

namespace gecstrat {

inline constexpr int kReportSchemaVersion = 1;

// Half-up rounding of the shortest round-trip decimal form, trailing zeros
// dropped: 0.41925 -> "0.4193", 0.525 -> "0.525", 1.0 -> "1".
std::string format_rounded(double value, int decimals = 4);

// Shortest decimal form of a beta: 0.5 -> "0.5", 2 -> "2".
std::string format_beta(double beta);

// Left-aligned first column, right-aligned others, two-space gutters.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

/// {schema_version, strata: [{key, tp, fp, fn, precision, recall,
/// f: {"0.5": ...}}], config_snapshot}. Strata appear in key order and values
/// keep full precision.
nlohmann::json report_to_json(const StratifiedReport& report, const nlohmann::json& config_snapshot);

// Pretty-printed JSON with a trailing newline; byte-stable for equal input.
std::string dump_report_json(const nlohmann::json& report);

// Header plus one stratum per row, full precision.
std::string report_to_tsv(const StratifiedReport& report);

// Level rows then "all", values rounded for display. Each selector adds a
// label-by-label table over every level and "all".
std::string report_to_text(const StratifiedReport& report, std::span<const std::string> label_selectors = {});

struct ReportRow {
  std::string key;
  EvalCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  std::map<std::string, double> f;  // formatted beta -> F
};

struct LoadedReport {
  int schema_version = 0;
  std::vector<ReportRow> strata;
  nlohmann::json config_snapshot;

  const ReportRow* find(std::string_view key) const;
};

// Throws ParseError (with the byte offset for malformed JSON) or Error for a
// document that does not follow the report schema.
LoadedReport parse_report(std::string_view text, const std::string& source = {});

struct ReportDelta {
  std::string key;
  ReportRow left;
  ReportRow right;
  double d_precision = 0.0;
  double d_recall = 0.0;
  std::map<std::string, double> d_f;  // right - left per shared beta
};

// Deltas (right - left) over strata present in both, in left's order. Throws
// Error when the schema versions differ.
std::vector<ReportDelta> compare_reports(const LoadedReport& left, const LoadedReport& right);

std::string deltas_to_text(std::span<const ReportDelta> deltas);
std::string deltas_to_tsv(std::span<const ReportDelta> deltas);
nlohmann::json deltas_to_json(std::span<const ReportDelta> deltas);

// Corpus statistics output.
nlohmann::json summaries_to_json(std::span<const CorpusSummary> summaries, int top_k,
                                 AnnotatorPolicy policy);
// Overview rows per level, then a rank-by-level table of the top k types.
std::string summaries_to_text(std::span<const CorpusSummary> summaries, int top_k);
std::string summaries_to_tsv(std::span<const CorpusSummary> summaries, int top_k);

}  // namespace gecstrat
