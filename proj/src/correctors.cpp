#include "gecstrat/correctors.hpp"

#include <charconv>
#include <cstdio>

#include "json.hpp"

namespace gecstrat {

using json = nlohmann::json;

std::string canonical_request_json(const CompletionRequest& request) {
  json body = {
      {"model", request.model},
      {"prompt", request.prompt},
      {"max_tokens", request.max_tokens},
      {"temperature", request.temperature},
  };
  return body.dump();
}

std::string request_hash(const CompletionRequest& request) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_request_json(request)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string wrap(const CorrectionRequest& request, std::span<const std::string> tokens) {
  return request.delimiter_left + join_tokens(tokens) + request.delimiter_right;
}

const M2Sentence& sentence_of(const CorrectionRequest& request) {
  if (request.sentence == nullptr) throw Error("mock corrector needs the source sentence");
  return *request.sentence;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::string IdentityCorrector::complete(const CorrectionRequest& request) {
  return wrap(request, sentence_of(request).source);
}

std::string EchoReferenceCorrector::complete(const CorrectionRequest& request) {
  const auto& s = sentence_of(request);
  if (auto first = s.first_annotator()) {
    return wrap(request, apply_edits(s.source, s.annotations.at(*first)));
  }
  return wrap(request, s.source);
}

std::size_t DropTokenCorrector::position(std::size_t index, std::size_t length) const noexcept {
  return static_cast<std::size_t>(splitmix64(seed_ ^ splitmix64(index)) % length);
}

std::string DropTokenCorrector::complete(const CorrectionRequest& request) {
  auto tokens = sentence_of(request).source;
  if (!tokens.empty()) {
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(position(request.index, tokens.size())));
  }
  return wrap(request, tokens);
}

std::unique_ptr<Corrector> make_mock_corrector(std::string_view spec) {
  if (spec == "identity") return std::make_unique<IdentityCorrector>();
  if (spec == "echo_reference") return std::make_unique<EchoReferenceCorrector>();
  constexpr std::string_view kDrop = "drop_token";
  if (spec.starts_with(kDrop)) {
    auto rest = spec.substr(kDrop.size());
    std::uint64_t seed = 0;
    if (rest.empty()) return std::make_unique<DropTokenCorrector>(seed);
    if (rest.front() == ':') {
      rest.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
      if (ec == std::errc{} && ptr == rest.data() + rest.size() && !rest.empty()) {
        return std::make_unique<DropTokenCorrector>(seed);
      }
    }
  }
  throw ConfigError("unknown mock corrector '" + std::string(spec) +
                    "' (expected identity, echo_reference or drop_token[:SEED])");
}

std::string transcript_line(const TranscriptEntry& entry) {
  json j = {
      {"request_hash", entry.request_hash},
      {"prompt", entry.prompt},
      {"response_text", entry.response_text},
  };
  return j.dump();
}

ReplayCorrector::ReplayCorrector(const std::filesystem::path& transcript) {
  const auto text = read_text_file(transcript);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto line = trim(std::string_view(text).substr(pos, nl == std::string::npos ? text.npos : nl - pos));
    pos = nl == std::string::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty()) continue;
    try {
      auto j = json::parse(line);
      auto hash = j.at("request_hash").get<std::string>();
      auto prompt = j.at("prompt").get<std::string>();
      auto response = j.at("response_text").get<std::string>();
      by_hash_.emplace(std::move(hash), response);
      by_prompt_.emplace(std::move(prompt), std::move(response));
    } catch (const json::exception& e) {
      throw ParseError(line_no, std::string("bad transcript record: ") + e.what(), transcript.string());
    }
  }
}

std::string ReplayCorrector::complete(const CorrectionRequest& request) {
  if (auto it = by_hash_.find(request_hash(request.completion)); it != by_hash_.end()) return it->second;
  if (auto it = by_prompt_.find(request.completion.prompt); it != by_prompt_.end()) return it->second;
  throw Error("replay transcript has no response for sentence " + std::to_string(request.index) +
              " (request hash " + request_hash(request.completion) + ")");
}

RecordingCorrector::RecordingCorrector(Corrector& inner, const std::filesystem::path& transcript)
    : inner_(inner), out_(transcript, std::ios::app) {
  if (!out_) throw IoError("cannot open transcript for writing: " + transcript.string());
}

std::string RecordingCorrector::complete(const CorrectionRequest& request) {
  auto text = inner_.complete(request);
  std::lock_guard lock(mu_);
  out_ << transcript_line({request_hash(request.completion), request.completion.prompt, text}) << '\n';
  out_.flush();
  return text;
}

}  // namespace gecstrat
