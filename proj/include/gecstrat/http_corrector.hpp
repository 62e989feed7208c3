#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "gecstrat/correctors.hpp"

namespace gecstrat {

inline constexpr std::string_view kDefaultApiKeyEnv = "GECSTRAT_API_KEY";

struct EndpointConfig {
  // e.g. "http://localhost:8080/v1"; requests go to <base_url>/completions.
  std::string base_url;
  std::string model;
  std::string api_key_env = std::string(kDefaultApiKeyEnv);
  double timeout_seconds = 60.0;
  int max_in_flight = 4;
  int max_attempts = 4;
  double backoff_base_seconds = 1.0;

  // Throws ConfigError on an unusable URL, empty model, bounds below 1 or
  // non-positive timings.
  void validate() const;
};

struct EndpointUrl {
  std::string scheme_host_port;
  std::string path_prefix;  // no trailing slash
};

// Accepts http:// and https:// (the latter only with TLS support built in).
EndpointUrl parse_endpoint_url(std::string_view url);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_env(const std::string& name);

/// POSTs {model, prompt, max_tokens, temperature} to <base>/completions with
/// a Bearer token and returns choices[0].text. Network failures, 429 and 5xx
/// raise RetryableError; other non-2xx statuses and malformed bodies raise
/// CorrectorError. The token is read once at construction; an unset or empty
/// variable is a ConfigError, so nothing is sent without credentials.
class HttpCorrector final : public Corrector {
 public:
  explicit HttpCorrector(EndpointConfig cfg, const EnvLookup& env = process_env);

  std::string name() const override { return "http"; }
  std::string complete(const CorrectionRequest& request) override;

  const EndpointConfig& config() const noexcept { return cfg_; }

 private:
  EndpointConfig cfg_;
  EndpointUrl url_;
  std::string token_;
};

}  // namespace gecstrat
