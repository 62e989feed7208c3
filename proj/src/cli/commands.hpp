#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gecstrat/config.hpp"
#include "gecstrat/evaluate.hpp"
#include "gecstrat/http_corrector.hpp"
#include "json.hpp"

namespace gecstrat::cli {

enum class OutputFormat { Text, Tsv, Json };

OutputFormat parse_format(const std::string& text);

struct Selection {
  std::optional<std::filesystem::path> data;
  std::optional<std::string> level;
  std::optional<std::string> glob;
};

struct Output {
  std::string format = "text";
  std::optional<std::filesystem::path> file;
};

struct StatsOptions {
  Selection selection;
  Output output;
  std::optional<int> top;
  std::optional<std::string> policy;
};

struct ScoringOptions {
  std::optional<std::string> betas;
  std::vector<std::string> labels;
  std::optional<std::string> mode;
  std::optional<std::filesystem::path> lexicon;
};

struct EvaluateOptions {
  Selection selection;
  Output output;
  ScoringOptions scoring;
  std::filesystem::path hypothesis;
  std::string hypothesis_format = "auto";
};

struct CorrectOptions {
  Selection selection;
  Output output;
  ScoringOptions scoring;
  std::optional<std::string> mock;
  std::optional<std::filesystem::path> replay;
  std::optional<std::filesystem::path> record;
  std::optional<int> shots;
  std::optional<std::string> endpoint;
  std::optional<std::string> model;
  std::optional<int> max_in_flight;
  std::filesystem::path out_dir = "gecstrat-run";
  std::optional<std::filesystem::path> checkpoint;
  bool no_checkpoint = false;
  bool evaluate = false;
};

struct ReportOptions {
  std::filesystem::path left;
  std::filesystem::path right;
  Output output;
};

int cmd_stats(const StatsOptions& opts, RunConfig cfg, std::ostream& out);
int cmd_evaluate(const EvaluateOptions& opts, RunConfig cfg, std::ostream& out);
int cmd_correct(const CorrectOptions& opts, RunConfig cfg, const EnvLookup& env, std::ostream& out);
int cmd_report(const ReportOptions& opts, std::ostream& out);

// Shared helpers.
std::vector<CorpusFile> select_corpus(const Selection& sel, const RunConfig& cfg);
void apply_scoring_flags(const ScoringOptions& flags, RunConfig& cfg);
nlohmann::json scoring_snapshot(const RunConfig& cfg);
nlohmann::json inputs_snapshot(const std::vector<CorpusFile>& files);
// Writes to the output file if one is set, else to `out`.
void emit(const Output& output, const std::string& text, std::ostream& out);
void write_file(const std::filesystem::path& path, const std::string& text);
// Evaluates and renders in the requested format.
std::string render_report(const StratifiedReport& report, const nlohmann::json& snapshot,
                          const ScoringOptions& flags, OutputFormat format);

}  // namespace gecstrat::cli
