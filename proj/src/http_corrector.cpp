#include "gecstrat/http_corrector.hpp"

#include <cmath>
#include <cstdlib>

#include "httplib.h"
#include "json.hpp"

namespace gecstrat {

using json = nlohmann::json;

EndpointUrl parse_endpoint_url(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw ConfigError("endpoint URL '" + std::string(url) + "' has no scheme");
  }
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("endpoint URL scheme must be http or https, got '" + std::string(scheme) + "'");
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw ConfigError("this build has no TLS support for https endpoints");
#endif
  const auto host_begin = scheme_end + 3;
  const auto path_begin = url.find('/', host_begin);
  EndpointUrl out;
  out.scheme_host_port = std::string(url.substr(0, path_begin));
  if (out.scheme_host_port.size() == host_begin) {
    throw ConfigError("endpoint URL '" + std::string(url) + "' has no host");
  }
  if (path_begin != std::string_view::npos) {
    out.path_prefix = std::string(url.substr(path_begin));
    while (!out.path_prefix.empty() && out.path_prefix.back() == '/') out.path_prefix.pop_back();
  }
  return out;
}

void EndpointConfig::validate() const {
  if (base_url.empty()) throw ConfigError("no completion endpoint configured");
  parse_endpoint_url(base_url);
  if (model.empty()) throw ConfigError("no model configured for the completion endpoint");
  if (api_key_env.empty()) throw ConfigError("api_key_env must name an environment variable");
  if (max_in_flight < 1) throw ConfigError("max_in_flight must be >= 1");
  if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
  if (!(timeout_seconds > 0.0)) throw ConfigError("timeout_seconds must be positive");
  if (!(backoff_base_seconds >= 0.0)) throw ConfigError("backoff_base_seconds must be >= 0");
}

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

HttpCorrector::HttpCorrector(EndpointConfig cfg, const EnvLookup& env) : cfg_(std::move(cfg)) {
  cfg_.validate();
  url_ = parse_endpoint_url(cfg_.base_url);
  auto token = env(cfg_.api_key_env);
  if (!token || token->empty()) {
    throw ConfigError("environment variable " + cfg_.api_key_env +
                      " is not set; it must hold the endpoint's API token");
  }
  token_ = std::move(*token);
}

std::string HttpCorrector::complete(const CorrectionRequest& request) {
  httplib::Client client(url_.scheme_host_port);
  const auto secs = static_cast<time_t>(cfg_.timeout_seconds);
  const auto usecs = static_cast<time_t>((cfg_.timeout_seconds - std::floor(cfg_.timeout_seconds)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  const httplib::Headers headers{{"Authorization", "Bearer " + token_}};
  auto res = client.Post(url_.path_prefix + "/completions", headers,
                         canonical_request_json(request.completion), "application/json");
  if (!res) throw RetryableError("request failed: " + httplib::to_string(res.error()));
  const int status = res->status;
  if (status == 429 || status >= 500) {
    throw RetryableError("endpoint returned HTTP " + std::to_string(status));
  }
  if (status < 200 || status >= 300) {
    throw CorrectorError("endpoint returned HTTP " + std::to_string(status) + ": " +
                         res->body.substr(0, 200));
  }
  try {
    return json::parse(res->body).at("choices").at(0).at("text").get<std::string>();
  } catch (const json::exception& e) {
    throw CorrectorError(std::string("malformed completion response: ") + e.what());
  }
}

}  // namespace gecstrat
