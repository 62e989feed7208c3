#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gecstrat/error.hpp"
#include "gecstrat/m2.hpp"

namespace gecstrat {

// Body of one completion call; also the identity of a recorded exchange.
struct CompletionRequest {
  std::string model;
  std::string prompt;
  int max_tokens = 128;
  double temperature = 0.0;
};

// Canonical JSON of the request (sorted keys, compact).
std::string canonical_request_json(const CompletionRequest& request);
// 16 lowercase hex digits of the FNV-1a 64 hash of the canonical JSON.
std::string request_hash(const CompletionRequest& request);

struct CorrectionRequest {
  std::size_t index = 0;
  const M2Sentence* sentence = nullptr;
  CompletionRequest completion;
  std::string delimiter_left = "{";
  std::string delimiter_right = "}";
};

// Corrector failure that retrying cannot fix (bad request, auth, bad body).
class CorrectorError : public Error {
 public:
  using Error::Error;
};

// Transient failure: network error, HTTP 429 or 5xx.
class RetryableError : public CorrectorError {
 public:
  using CorrectorError::CorrectorError;
};

/// Produces the raw completion text for one sentence.
///
/// Implementations must be safe to call from several threads at once.
/// CorrectorError marks the sentence failed; RetryableError is retried by the
/// batch runner; any other exception aborts the run.
class Corrector {
 public:
  virtual ~Corrector() = default;
  virtual std::string name() const = 0;
  virtual std::string complete(const CorrectionRequest& request) = 0;
};

// Returns the source sentence.
class IdentityCorrector final : public Corrector {
 public:
  std::string name() const override { return "identity"; }
  std::string complete(const CorrectionRequest& request) override;
};

// Returns the source corrected by the lowest-numbered annotator.
class EchoReferenceCorrector final : public Corrector {
 public:
  std::string name() const override { return "echo_reference"; }
  std::string complete(const CorrectionRequest& request) override;
};

// Deletes one token per nonempty sentence at a position fixed by (seed, index).
class DropTokenCorrector final : public Corrector {
 public:
  explicit DropTokenCorrector(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "drop_token:" + std::to_string(seed_); }
  std::string complete(const CorrectionRequest& request) override;

  // Index of the dropped token for a sentence of `length` > 0 tokens.
  std::size_t position(std::size_t index, std::size_t length) const noexcept;

 private:
  std::uint64_t seed_;
};

// "identity", "echo_reference", "drop_token" or "drop_token:<seed>".
// Throws ConfigError for anything else.
std::unique_ptr<Corrector> make_mock_corrector(std::string_view spec);

struct TranscriptEntry {
  std::string request_hash;
  std::string prompt;
  std::string response_text;
};

/// Answers from a JSONL transcript of {request_hash, prompt, response_text}
/// records. Lookup is by request hash, then by exact prompt. A request with
/// no recorded answer throws Error, aborting the run, since a replay that
/// silently diverges is worse than none.
class ReplayCorrector final : public Corrector {
 public:
  explicit ReplayCorrector(const std::filesystem::path& transcript);

  std::string name() const override { return "replay"; }
  std::string complete(const CorrectionRequest& request) override;
  std::size_t size() const noexcept { return by_hash_.size(); }

 private:
  std::unordered_map<std::string, std::string> by_hash_;
  std::unordered_map<std::string, std::string> by_prompt_;
};

// Forwards to `inner` and appends each successful exchange to a transcript.
class RecordingCorrector final : public Corrector {
 public:
  RecordingCorrector(Corrector& inner, const std::filesystem::path& transcript);

  std::string name() const override { return inner_.name(); }
  std::string complete(const CorrectionRequest& request) override;

 private:
  Corrector& inner_;
  std::mutex mu_;
  std::ofstream out_;
};

std::string transcript_line(const TranscriptEntry& entry);

}  // namespace gecstrat
