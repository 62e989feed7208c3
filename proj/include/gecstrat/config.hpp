#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gecstrat/alignment.hpp"
#include "gecstrat/corpus_stats.hpp"
#include "gecstrat/http_corrector.hpp"
#include "gecstrat/prompt.hpp"
#include "gecstrat/scoring.hpp"
#include "json.hpp"

namespace gecstrat {

/// Fully resolved settings for one invocation.
///
/// Layers, lowest first: built-in defaults, the TOML config file
/// (`--config`, else $GECSTRAT_CONFIG), GECSTRAT_* environment variables,
/// command-line flags. Each layer overwrites only what it sets.
struct RunConfig {
  // [edit_extraction]
  CostConfig costs;
  // [error_classification]
  std::optional<std::filesystem::path> lexicon_path;
  // [scoring]
  std::vector<double> betas{0.5};
  MatchMode mode = MatchMode::Correction;
  // [corpus_stats]
  AnnotatorPolicy annotator_policy = AnnotatorPolicy::First;
  int top_k = 5;
  std::string file_glob = "*.m2";
  std::vector<LevelRule> level_rules = default_level_rules();
  std::optional<std::filesystem::path> data_dir;
  // [prompt_harness]
  PromptConfig prompt;
  EndpointConfig endpoint;
};

/// Overlays a parsed config document. Unknown sections or keys and
/// ill-typed values throw ConfigError naming the key. Relative paths resolve
/// against `base_dir`.
void apply_config_document(RunConfig& cfg, const nlohmann::json& doc,
                           const std::filesystem::path& base_dir = {});

// GECSTRAT_DATA_DIR, GECSTRAT_ENDPOINT, GECSTRAT_MODEL.
void apply_environment(RunConfig& cfg, const EnvLookup& env);

// Defaults, then the config file, then the environment.
RunConfig load_run_config(const std::optional<std::filesystem::path>& config_file,
                          const EnvLookup& env = process_env);

// "0.5,1,2" -> {0.5, 1, 2}. Throws ConfigError on junk or beta <= 0.
std::vector<double> parse_betas(std::string_view text);

MatchMode parse_match_mode(std::string_view text);
std::string_view match_mode_name(MatchMode mode) noexcept;

}  // namespace gecstrat
