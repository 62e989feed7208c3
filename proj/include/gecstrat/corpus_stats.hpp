#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gecstrat/m2.hpp"

namespace gecstrat {

// Which annotators feed distribution statistics.
enum class AnnotatorPolicy : std::uint8_t { First, All };

std::optional<AnnotatorPolicy> parse_annotator_policy(std::string_view text) noexcept;
std::string_view annotator_policy_name(AnnotatorPolicy policy) noexcept;

struct CorpusSummary {
  ProficiencyLevel proficiency = ProficiencyLevel::A;
  std::int64_t sentences = 0;
  std::int64_t tokens = 0;
  double avg_tokens_per_sentence = 0.0;
  std::int64_t edits = 0;
  std::map<std::string, std::int64_t> type_counts;
  // type_counts / edits; empty when edits == 0.
  std::map<std::string, double> type_ratios;
};

// Throws Error on an empty corpus. Noop edits are never counted.
CorpusSummary summarize(std::span<const M2Sentence> corpus, ProficiencyLevel proficiency,
                        AnnotatorPolicy policy = AnnotatorPolicy::First);

// Descending ratio, ties by type string; at most k entries. Throws Error if k < 1.
std::vector<std::pair<std::string, double>> top_k_errors(const CorpusSummary& summary, int k);

// fnmatch-style glob over a file name mapped to a level.
struct LevelRule {
  std::string glob;
  ProficiencyLevel level = ProficiencyLevel::A;
};

// "A.*" and "*.A.*" for each of A, B, C, N.
std::vector<LevelRule> default_level_rules();

// First rule whose glob matches the file name (not the directory part).
std::optional<ProficiencyLevel> infer_level(const std::filesystem::path& file,
                                            std::span<const LevelRule> rules);

struct CorpusFile {
  std::filesystem::path path;
  ProficiencyLevel level = ProficiencyLevel::A;
};

/// Resolves a file or a directory (non-recursive, file names matching
/// `name_glob`) into level-tagged M2 files sorted by path. A forced level
/// applies to every file; otherwise each level comes from `rules`.
/// Throws IoError for a missing path or an empty selection and ConfigError
/// when a level cannot be inferred.
std::vector<CorpusFile> discover_corpus(const std::filesystem::path& root,
                                        std::span<const LevelRule> rules,
                                        std::optional<ProficiencyLevel> forced_level = std::nullopt,
                                        std::string_view name_glob = "*.m2");

}  // namespace gecstrat
