#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecstrat/m2.hpp"

namespace gecstrat {

struct EvalCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  EvalCounts& operator+=(const EvalCounts& o) noexcept {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend EvalCounts operator+(EvalCounts a, const EvalCounts& b) noexcept { return a += b; }
  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

// tp/(tp+fp), or 1 when nothing was proposed.
double precision(const EvalCounts& c) noexcept;
// tp/(tp+fn), or 1 when there was nothing to find.
double recall(const EvalCounts& c) noexcept;

// (1+b^2)pr / (b^2 p + r); 0 when the denominator is 0. Throws Error for
// beta <= 0 or p, r outside [0, 1].
double f_beta(double p, double r, double beta);

struct ScoreRow {
  EvalCounts counts;
  double precision = 1.0;
  double recall = 1.0;
  std::map<double, double> f;  // beta -> F

  double f_at(double beta) const;
};

ScoreRow score_row(const EvalCounts& counts, std::span<const double> betas);

enum class MatchMode : std::uint8_t { Correction, Detection };

// Error-type string -> counts.
using TypedCounts = std::map<std::string, EvalCounts>;

struct SentenceComparison {
  EvalCounts counts;
  int annotator = 0;
  // TP edits carry the reference type; FP edits the hypothesis type; FN the
  // reference type.
  std::vector<Edit> true_positives;
  std::vector<Edit> false_positives;
  std::vector<Edit> false_negatives;

  TypedCounts by_type() const;
};

/// Scores hypothesis edits against every annotator of `ref` and keeps the
/// annotator with the best sentence-level F0.5 (ties: fewer FP, fewer FN,
/// lower id). In correction mode an edit matches on (start, end,
/// replacement); in detection mode on (start, end). Error types never take
/// part in matching. A sentence without annotations counts as one annotator
/// (id 0) with no edits.
SentenceComparison compare_sentence(std::span<const Edit> hypothesis, const M2Sentence& ref,
                                    MatchMode mode = MatchMode::Correction);

struct SentenceResult {
  EvalCounts counts;
  ProficiencyLevel level = ProficiencyLevel::A;
  TypedCounts by_type;
};

SentenceResult make_result(const SentenceComparison& cmp, ProficiencyLevel level);

// Stratum key helpers. Keys look like "all", "B", "B|R:PREP", "all|M:*".
inline constexpr std::string_view kAllKey = "all";
std::string level_key(std::optional<ProficiencyLevel> level);
std::string stratum_key(std::optional<ProficiencyLevel> level, std::string_view label);

// Corpus-level (micro) report: counts are summed per stratum, then scored.
class StratifiedReport {
 public:
  const std::vector<double>& betas() const noexcept { return betas_; }
  const std::map<std::string, ScoreRow>& rows() const noexcept { return rows_; }
  const std::vector<ProficiencyLevel>& levels() const noexcept { return levels_; }

  bool contains(std::string_view key) const { return rows_.count(std::string(key)) > 0; }
  // Throws Error for an unknown key.
  const ScoreRow& at(std::string_view key) const;

  // Labels ("R:PREP", "M:*") populated in the stratum of `level`.
  std::vector<std::string> labels(std::optional<ProficiencyLevel> level) const;

  // Throws Error if level rows do not sum to "all" or typed rows do not sum
  // to their stratum.
  void check_partition() const;

 private:
  friend StratifiedReport aggregate(std::span<const SentenceResult>, std::span<const double>);
  std::vector<double> betas_;
  std::vector<ProficiencyLevel> levels_;
  std::map<std::string, ScoreRow> rows_;
};

// Throws Error on empty input or invalid betas. `betas` is sorted and
// deduplicated in the report.
StratifiedReport aggregate(std::span<const SentenceResult> sentences,
                           std::span<const double> betas = std::vector<double>{0.5});

struct LabelRow {
  std::string label;
  ScoreRow row;
};

/// Rows of one stratum selected by an exact type ("R:DET"), an operation
/// wildcard ("M:*", the sum over all types with that operation) or "*"
/// (every populated type). Ordered by descending TP, then label.
std::vector<LabelRow> label_breakdown(const StratifiedReport& report,
                                      std::optional<ProficiencyLevel> level,
                                      std::string_view selector);

// Throws Error if the selector is not "*", "<op>:*" or a type label.
void validate_selector(std::string_view selector);

}  // namespace gecstrat
