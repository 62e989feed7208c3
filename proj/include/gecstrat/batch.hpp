#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gecstrat/correctors.hpp"
#include "gecstrat/m2.hpp"
#include "gecstrat/prompt.hpp"

namespace gecstrat {

struct BatchOptions {
  std::string model;
  int max_in_flight = 1;
  int max_attempts = 3;
  // Delay before retry n (1-based) is base * 2^(n-1), scaled by a jitter
  // factor in [0.5, 1) drawn from (jitter_seed, sentence index).
  double backoff_base_seconds = 0.5;
  double backoff_max_seconds = 30.0;
  std::uint64_t jitter_seed = 0;
  // JSONL file of finished records; existing ok/empty records are reused.
  std::optional<std::filesystem::path> checkpoint;
  // Test hook; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::duration<double>)> sleep;

  void validate() const;
};

struct CorrectionRecord {
  std::size_t index = 0;
  Tokens source;
  std::string prompt;
  std::string raw_completion;
  // The source itself for failed and empty records.
  Tokens hypothesis;
  RecordStatus status = RecordStatus::Ok;
  int attempts = 0;
  bool prompt_truncated = false;
  std::string error;

  friend bool operator==(const CorrectionRecord&, const CorrectionRecord&) = default;
};

struct CorrectionRun {
  // One per input sentence, in input order.
  std::vector<CorrectionRecord> records;
  std::size_t resumed = 0;
  double elapsed_seconds = 0.0;

  std::size_t count(RecordStatus status) const;
};

/// Corrects every sentence once with at most `max_in_flight` calls
/// outstanding. Retryable failures back off and retry up to `max_attempts`;
/// sentences that still fail keep their source with status failed. Any
/// exception that is not a CorrectorError stops the workers and is rethrown
/// after the finished records have been checkpointed. Configuration is
/// validated before the first call.
CorrectionRun run_batch(std::span<const M2Sentence> corpus, Corrector& corrector,
                        const PromptConfig& cfg, const BatchOptions& options);

// Checkpoint line codec, exposed for tests.
std::string checkpoint_line(const CorrectionRecord& record);
CorrectionRecord parse_checkpoint_line(std::string_view line);

}  // namespace gecstrat
