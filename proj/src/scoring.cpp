#include "gecstrat/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gecstrat/error.hpp"

namespace gecstrat {
namespace {

constexpr double kSelectionBeta = 0.5;

bool same_edit(const Edit& hyp, const Edit& ref, MatchMode mode) {
  if (hyp.start != ref.start || hyp.end != ref.end) return false;
  return mode == MatchMode::Detection || hyp.replacement == ref.replacement;
}

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error("beta must be a positive finite number, got " + std::to_string(beta));
  }
}

constexpr std::string_view kOpWildcardSuffix = ":*";

bool is_op_label(std::string_view label) {
  return label.size() == 3 && label.substr(1) == kOpWildcardSuffix;
}

}  // namespace

double precision(const EvalCounts& c) noexcept {
  return c.tp + c.fp > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 1.0;
}

double recall(const EvalCounts& c) noexcept {
  return c.tp + c.fn > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 1.0;
}

double f_beta(double p, double r, double beta) {
  check_beta(beta);
  if (!(p >= 0.0 && p <= 1.0) || !(r >= 0.0 && r <= 1.0)) {
    throw Error("precision and recall must lie in [0, 1]");
  }
  const double b2 = beta * beta;
  const double denom = b2 * p + r;
  if (denom == 0.0) return 0.0;
  return (1.0 + b2) * p * r / denom;
}

double ScoreRow::f_at(double beta) const {
  auto it = f.find(beta);
  if (it != f.end()) return it->second;
  return f_beta(precision, recall, beta);
}

ScoreRow score_row(const EvalCounts& counts, std::span<const double> betas) {
  ScoreRow row;
  row.counts = counts;
  row.precision = gecstrat::precision(counts);
  row.recall = gecstrat::recall(counts);
  for (double beta : betas) row.f[beta] = f_beta(row.precision, row.recall, beta);
  return row;
}

TypedCounts SentenceComparison::by_type() const {
  TypedCounts out;
  for (const auto& e : true_positives) ++out[e.type.to_string()].tp;
  for (const auto& e : false_positives) ++out[e.type.to_string()].fp;
  for (const auto& e : false_negatives) ++out[e.type.to_string()].fn;
  return out;
}

SentenceComparison compare_sentence(std::span<const Edit> hypothesis, const M2Sentence& ref,
                                    MatchMode mode) {
  const auto n = static_cast<int>(ref.source.size());
  std::vector<const Edit*> hyp;
  for (const auto& e : hypothesis) {
    if (e.is_noop()) continue;
    if (e.start < 0 || e.start > e.end || e.end > n) {
      throw Error("hypothesis edit span " + std::to_string(e.start) + " " + std::to_string(e.end) +
                  " lies outside a sentence of " + std::to_string(n) + " tokens");
    }
    hyp.push_back(&e);
  }

  static const std::vector<Edit> kNoEdits;
  std::map<int, const std::vector<Edit>*> annotators;
  for (const auto& [id, edits] : ref.annotations) annotators[id] = &edits;
  if (annotators.empty()) annotators[0] = &kNoEdits;

  std::optional<SentenceComparison> best;
  double best_f = -1.0;
  for (const auto& [id, edits] : annotators) {
    SentenceComparison cmp;
    cmp.annotator = id;
    std::vector<const Edit*> refs;
    for (const auto& e : *edits) {
      if (!e.is_noop()) refs.push_back(&e);
    }
    std::vector<bool> used(refs.size(), false);
    for (const Edit* h : hyp) {
      bool matched = false;
      for (std::size_t r = 0; r < refs.size(); ++r) {
        if (!used[r] && same_edit(*h, *refs[r], mode)) {
          used[r] = true;
          Edit tp = *h;
          tp.type = refs[r]->type;
          cmp.true_positives.push_back(std::move(tp));
          matched = true;
          break;
        }
      }
      if (!matched) cmp.false_positives.push_back(*h);
    }
    for (std::size_t r = 0; r < refs.size(); ++r) {
      if (!used[r]) cmp.false_negatives.push_back(*refs[r]);
    }
    cmp.counts = {static_cast<std::int64_t>(cmp.true_positives.size()),
                  static_cast<std::int64_t>(cmp.false_positives.size()),
                  static_cast<std::int64_t>(cmp.false_negatives.size())};

    const double f = f_beta(precision(cmp.counts), recall(cmp.counts), kSelectionBeta);
    bool better = !best || f > best_f ||
                  (f == best_f && (cmp.counts.fp < best->counts.fp ||
                                   (cmp.counts.fp == best->counts.fp && cmp.counts.fn < best->counts.fn)));
    if (better) {
      best_f = f;
      best = std::move(cmp);
    }
  }
  return std::move(*best);
}

SentenceResult make_result(const SentenceComparison& cmp, ProficiencyLevel level) {
  return SentenceResult{cmp.counts, level, cmp.by_type()};
}

std::string level_key(std::optional<ProficiencyLevel> level) {
  return level ? std::string(1, level_letter(*level)) : std::string(kAllKey);
}

std::string stratum_key(std::optional<ProficiencyLevel> level, std::string_view label) {
  auto key = level_key(level);
  if (!label.empty()) {
    key += '|';
    key += label;
  }
  return key;
}

const ScoreRow& StratifiedReport::at(std::string_view key) const {
  auto it = rows_.find(std::string(key));
  if (it == rows_.end()) throw Error("report has no stratum '" + std::string(key) + "'");
  return it->second;
}

std::vector<std::string> StratifiedReport::labels(std::optional<ProficiencyLevel> level) const {
  const auto prefix = level_key(level) + "|";
  std::vector<std::string> out;
  for (auto it = rows_.lower_bound(prefix); it != rows_.end() && it->first.starts_with(prefix); ++it) {
    out.push_back(it->first.substr(prefix.size()));
  }
  return out;
}

void StratifiedReport::check_partition() const {
  EvalCounts level_sum;
  for (auto level : levels_) level_sum += at(level_key(level)).counts;
  if (!levels_.empty() && !(level_sum == at(kAllKey).counts)) {
    throw Error("per-level counts do not sum to the 'all' stratum");
  }
  std::vector<std::optional<ProficiencyLevel>> strata{std::nullopt};
  for (auto level : levels_) strata.emplace_back(level);
  for (const auto& level : strata) {
    EvalCounts typed;
    for (const auto& label : labels(level)) {
      if (!is_op_label(label)) typed += at(stratum_key(level, label)).counts;
    }
    if (!(typed == at(level_key(level)).counts)) {
      throw Error("typed counts do not sum to stratum '" + level_key(level) + "'");
    }
  }
}

StratifiedReport aggregate(std::span<const SentenceResult> sentences, std::span<const double> betas) {
  if (sentences.empty()) throw Error("cannot aggregate an empty set of sentences");
  if (betas.empty()) throw Error("at least one beta is required");
  StratifiedReport report;
  for (double b : betas) check_beta(b);
  report.betas_.assign(betas.begin(), betas.end());
  std::sort(report.betas_.begin(), report.betas_.end());
  report.betas_.erase(std::unique(report.betas_.begin(), report.betas_.end()), report.betas_.end());

  std::map<std::string, EvalCounts> sums;
  std::set<ProficiencyLevel> levels;
  for (const auto& s : sentences) {
    levels.insert(s.level);
    for (const std::optional<ProficiencyLevel> lvl : {std::optional<ProficiencyLevel>{s.level},
                                                      std::optional<ProficiencyLevel>{}}) {
      sums[level_key(lvl)] += s.counts;
      for (const auto& [label, counts] : s.by_type) {
        sums[stratum_key(lvl, label)] += counts;
        if (auto op = ErrorType::parse(label).op()) {
          sums[stratum_key(lvl, std::string(1, op_letter(*op)) + std::string(kOpWildcardSuffix))] +=
              counts;
        }
      }
    }
  }
  report.levels_.assign(levels.begin(), levels.end());
  for (const auto& [key, counts] : sums) report.rows_[key] = score_row(counts, report.betas_);
  report.check_partition();
  return report;
}

void validate_selector(std::string_view selector) {
  auto bad = [&](const char* why) {
    throw Error("malformed label selector '" + std::string(selector) + "': " + why);
  };
  if (selector.empty()) bad("empty");
  for (char c : selector) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '|') bad("contains whitespace or '|'");
  }
  if (selector == "*") return;
  if (selector.find('*') != std::string_view::npos) {
    if (!is_op_label(selector) || !op_from_letter(selector[0])) bad("wildcard must be '*' or 'M:*', 'R:*', 'U:*'");
    return;
  }
  if (selector.back() == ':' || selector.front() == ':') bad("empty label component");
}

std::vector<LabelRow> label_breakdown(const StratifiedReport& report,
                                      std::optional<ProficiencyLevel> level,
                                      std::string_view selector) {
  validate_selector(selector);
  std::vector<LabelRow> out;
  if (selector == "*") {
    for (const auto& label : report.labels(level)) {
      if (!is_op_label(label)) out.push_back({label, report.at(stratum_key(level, label))});
    }
  } else {
    auto key = stratum_key(level, selector);
    if (report.contains(key)) out.push_back({std::string(selector), report.at(key)});
  }
  std::stable_sort(out.begin(), out.end(), [](const LabelRow& a, const LabelRow& b) {
    if (a.row.counts.tp != b.row.counts.tp) return a.row.counts.tp > b.row.counts.tp;
    return a.label < b.label;
  });
  return out;
}

}  // namespace gecstrat
