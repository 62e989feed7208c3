#include "gecstrat/prompt.hpp"

#include "gecstrat/error.hpp"

namespace gecstrat {

const std::vector<Exemplar>& default_exemplars() {
  static const std::vector<Exemplar> bank{
      {"This is important thing.", "This is an important thing."},
      {"Water is needed for alive.", "Water is necessary to live."},
      {"And young people spend time more ther lifestile.",
       "And young people spend more time on their lifestyles."},
      {"Both of these men have dealed with situations in an unconventional manner and the results "
       "are with everyone to see.",
       "Both of these men have dealt with situations in an unconventional manner and the results "
       "are plain to see."},
  };
  return bank;
}

void PromptConfig::validate() const {
  if (n_shots < 0 || n_shots > static_cast<int>(exemplars.size())) {
    throw ConfigError("n_shots " + std::to_string(n_shots) + " is out of range: exemplar bank has " +
                      std::to_string(exemplars.size()) + " entries");
  }
  if (n_shots > kMaxShots) {
    throw ConfigError("n_shots must be between 0 and " + std::to_string(kMaxShots));
  }
  if (delimiter_left.empty() || delimiter_right.empty()) {
    throw ConfigError("prompt delimiters must be nonempty");
  }
  if (delimiter_left == delimiter_right) {
    throw ConfigError("left and right prompt delimiters must differ");
  }
  if (max_model_token_length && *max_model_token_length <= 0) {
    throw ConfigError("max_model_token_length must be positive");
  }
  if (sampling.max_tokens <= 0) throw ConfigError("max_tokens must be positive");
  if (!(sampling.temperature >= 0.0)) throw ConfigError("temperature must be >= 0");
}

int PromptConfig::token_budget() const {
  if (max_model_token_length) return *max_model_token_length;
  return n_shots == 0 ? kZeroShotBudget : kFewShotBudget;
}

namespace {

std::string render(const PromptConfig& cfg, std::span<const std::string> input, int shots) {
  const auto& l = cfg.delimiter_left;
  const auto& r = cfg.delimiter_right;
  std::string out;
  if (!cfg.instruction.empty()) {
    out += cfg.instruction;
    out += '\n';
  }
  for (int i = 0; i < shots; ++i) {
    const auto& ex = cfg.exemplars[static_cast<std::size_t>(i)];
    out += l + ex.ungrammatical + r + " => " + l + ex.grammatical + r + '\n';
  }
  out += l + join_tokens(input) + r + " =>";
  return out;
}

}  // namespace

Prompt render_prompt(const PromptConfig& cfg, std::span<const std::string> input) {
  cfg.validate();
  const int budget = cfg.token_budget();
  Prompt p;
  for (int shots = cfg.n_shots; shots >= 0; --shots) {
    p.text = render(cfg, input, shots);
    p.shots_used = shots;
    p.token_count = static_cast<int>(split_tokens(p.text).size());
    if (p.token_count <= budget) break;
  }
  p.truncated = p.shots_used < cfg.n_shots;
  p.over_budget = p.token_count > budget;
  return p;
}

std::string build_prompt(const PromptConfig& cfg, std::span<const std::string> input) {
  return render_prompt(cfg, input).text;
}

std::string_view record_status_name(RecordStatus status) noexcept {
  switch (status) {
    case RecordStatus::Ok:
      return "ok";
    case RecordStatus::Empty:
      return "empty";
    case RecordStatus::Failed:
      return "failed";
  }
  return "failed";
}

std::optional<RecordStatus> parse_record_status(std::string_view text) noexcept {
  for (auto s : {RecordStatus::Ok, RecordStatus::Empty, RecordStatus::Failed}) {
    if (record_status_name(s) == text) return s;
  }
  return std::nullopt;
}

namespace {

// Content between the first left delimiter and its balancing right one.
std::optional<std::string_view> first_balanced(std::string_view raw, std::string_view l,
                                               std::string_view r) {
  const auto open = raw.find(l);
  if (open == std::string_view::npos) return std::nullopt;
  std::size_t depth = 1;
  std::size_t pos = open + l.size();
  while (pos < raw.size()) {
    if (raw.substr(pos).starts_with(r)) {
      if (--depth == 0) return raw.substr(open + l.size(), pos - open - l.size());
      pos += r.size();
    } else if (raw.substr(pos).starts_with(l)) {
      ++depth;
      pos += l.size();
    } else {
      ++pos;
    }
  }
  return std::nullopt;
}

}  // namespace

ParsedCompletion parse_completion(std::string_view raw, const PromptConfig& cfg) {
  ParsedCompletion out;
  if (auto inner = first_balanced(raw, cfg.delimiter_left, cfg.delimiter_right)) {
    out.tokens = split_tokens(*inner);
  } else {
    std::size_t pos = 0;
    while (pos <= raw.size()) {
      auto nl = raw.find('\n', pos);
      auto line = trim(raw.substr(pos, nl == std::string_view::npos ? raw.npos : nl - pos));
      if (!line.empty()) {
        out.tokens = split_tokens(line);
        break;
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (out.tokens.empty()) out.status = RecordStatus::Empty;
  return out;
}

}  // namespace gecstrat
