#include "gecstrat/corpus_stats.hpp"

#include <fnmatch.h>

#include <algorithm>

#include "gecstrat/error.hpp"

namespace gecstrat {

namespace fs = std::filesystem;

std::optional<AnnotatorPolicy> parse_annotator_policy(std::string_view text) noexcept {
  if (text == "first") return AnnotatorPolicy::First;
  if (text == "all") return AnnotatorPolicy::All;
  return std::nullopt;
}

std::string_view annotator_policy_name(AnnotatorPolicy policy) noexcept {
  return policy == AnnotatorPolicy::First ? "first" : "all";
}

CorpusSummary summarize(std::span<const M2Sentence> corpus, ProficiencyLevel proficiency,
                        AnnotatorPolicy policy) {
  if (corpus.empty()) throw Error("cannot summarize an empty corpus");
  CorpusSummary s;
  s.proficiency = proficiency;
  for (const auto& sentence : corpus) {
    ++s.sentences;
    s.tokens += static_cast<std::int64_t>(sentence.source.size());
    for (const auto& [id, edits] : sentence.annotations) {
      for (const auto& e : edits) {
        if (e.is_noop()) continue;
        ++s.type_counts[e.type.to_string()];
        ++s.edits;
      }
      if (policy == AnnotatorPolicy::First) break;
    }
  }
  s.avg_tokens_per_sentence = static_cast<double>(s.tokens) / static_cast<double>(s.sentences);
  for (const auto& [type, count] : s.type_counts) {
    s.type_ratios[type] = static_cast<double>(count) / static_cast<double>(s.edits);
  }
  return s;
}

std::vector<std::pair<std::string, double>> top_k_errors(const CorpusSummary& summary, int k) {
  if (k < 1) throw Error("top-k needs k >= 1, got " + std::to_string(k));
  std::vector<std::pair<std::string, double>> out(summary.type_ratios.begin(),
                                                  summary.type_ratios.end());
  // Ratios share a denominator, so ordering by count is exact.
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return summary.type_counts.at(a.first) > summary.type_counts.at(b.first);
  });
  if (out.size() > static_cast<std::size_t>(k)) out.resize(static_cast<std::size_t>(k));
  return out;
}

std::vector<LevelRule> default_level_rules() {
  std::vector<LevelRule> rules;
  for (auto level : kAllLevels) {
    const std::string letter(1, level_letter(level));
    rules.push_back({letter + ".*", level});
    rules.push_back({"*." + letter + ".*", level});
  }
  return rules;
}

std::optional<ProficiencyLevel> infer_level(const fs::path& file, std::span<const LevelRule> rules) {
  const auto name = file.filename().string();
  for (const auto& rule : rules) {
    if (::fnmatch(rule.glob.c_str(), name.c_str(), 0) == 0) return rule.level;
  }
  return std::nullopt;
}

std::vector<CorpusFile> discover_corpus(const fs::path& root, std::span<const LevelRule> rules,
                                        std::optional<ProficiencyLevel> forced_level,
                                        std::string_view name_glob) {
  std::error_code ec;
  if (!fs::exists(root, ec)) throw IoError("no such file or directory: " + root.string());

  std::vector<fs::path> paths;
  if (fs::is_directory(root, ec)) {
    const std::string glob(name_glob);
    for (const auto& entry : fs::directory_iterator(root, ec)) {
      if (!entry.is_regular_file()) continue;
      if (::fnmatch(glob.c_str(), entry.path().filename().string().c_str(), 0) == 0) {
        paths.push_back(entry.path());
      }
    }
    if (ec) throw IoError("cannot list directory " + root.string() + ": " + ec.message());
    if (paths.empty()) {
      throw IoError("no files matching '" + glob + "' in " + root.string());
    }
  } else {
    paths.push_back(root);
  }
  std::sort(paths.begin(), paths.end());

  std::vector<CorpusFile> out;
  for (auto& p : paths) {
    auto level = forced_level ? forced_level : infer_level(p, rules);
    if (!level) {
      throw ConfigError("cannot infer the proficiency level of " + p.string() +
                        " from its name; pass --level or add a level glob");
    }
    out.push_back({std::move(p), *level});
  }
  return out;
}

}  // namespace gecstrat
