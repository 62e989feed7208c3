#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecstrat/tokens.hpp"

namespace gecstrat {

struct Exemplar {
  std::string ungrammatical;
  std::string grammatical;

  friend bool operator==(const Exemplar&, const Exemplar&) = default;
};

// The four ungrammatical/grammatical pairs of the default bank, in shot order.
const std::vector<Exemplar>& default_exemplars();

inline constexpr std::string_view kDefaultInstruction =
    "Correct the grammatical errors in the following sentence:";

inline constexpr int kMaxShots = 4;
inline constexpr int kZeroShotBudget = 256;
inline constexpr int kFewShotBudget = 512;

// Passed through to the completion endpoint untouched.
struct SamplingParams {
  double temperature = 0.0;
  int max_tokens = 128;
};

struct PromptConfig {
  std::string instruction = std::string(kDefaultInstruction);
  std::vector<Exemplar> exemplars = default_exemplars();
  int n_shots = 0;
  std::string delimiter_left = "{";
  std::string delimiter_right = "}";
  // Overrides the shot-derived budget when set.
  std::optional<int> max_model_token_length;
  SamplingParams sampling;

  // Throws ConfigError on a shot count outside the bank or 0..4, empty or
  // equal delimiters, or a non-positive budget.
  void validate() const;

  // 256 for zero-shot, 512 otherwise, unless overridden.
  int token_budget() const;
};

struct Prompt {
  std::string text;
  int shots_used = 0;
  // Whitespace-token count of `text`.
  int token_count = 0;
  // Exemplars were dropped to fit the budget.
  bool truncated = false;
  // Still above budget with every droppable exemplar gone.
  bool over_budget = false;
};

/// Renders
///
///   <instruction>
///   {<ungrammatical 1>} => {<grammatical 1>}
///   ...
///   {<input>} =>
///
/// with the configured delimiters and no trailing newline. Exemplars are
/// dropped from the highest-numbered down while the whitespace-token count
/// exceeds the budget.
Prompt render_prompt(const PromptConfig& cfg, std::span<const std::string> input);

std::string build_prompt(const PromptConfig& cfg, std::span<const std::string> input);

enum class RecordStatus : std::uint8_t { Ok, Empty, Failed };

std::string_view record_status_name(RecordStatus status) noexcept;
std::optional<RecordStatus> parse_record_status(std::string_view text) noexcept;

struct ParsedCompletion {
  Tokens tokens;
  RecordStatus status = RecordStatus::Ok;
};

// Content of the first balanced delimiter pair, else the first nonempty line.
// Empty content yields status Empty with no tokens; the caller substitutes
// the source.
ParsedCompletion parse_completion(std::string_view raw, const PromptConfig& cfg);

}  // namespace gecstrat
