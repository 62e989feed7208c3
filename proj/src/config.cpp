#include "gecstrat/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>

#include "gecstrat/error.hpp"
#include "gecstrat/toml.hpp"

namespace gecstrat {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
  throw ConfigError("config key " + key + " " + what);
}

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) bad_key(key, "must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) bad_key(key, "must be an integer");
  const auto i = v.get<std::int64_t>();
  if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max()) {
    bad_key(key, "is out of range");
  }
  return static_cast<int>(i);
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) bad_key(key, "must be a string");
  return v.get<std::string>();
}

fs::path as_path(const json& v, const std::string& key, const fs::path& base) {
  fs::path p = as_string(v, key);
  return p.is_relative() && !base.empty() ? base / p : p;
}

using Setter = std::function<void(const json&, const std::string&)>;

void apply_section(const json& section, const std::string& name,
                   const std::map<std::string, Setter>& setters) {
  if (!section.is_object()) bad_key(name, "must be a table");
  for (const auto& [key, value] : section.items()) {
    const auto full = name + "." + key;
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key " + full);
    it->second(value, full);
  }
}

}  // namespace

std::vector<double> parse_betas(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto part = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    double v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || !(v > 0) ||
        !std::isfinite(v)) {
      throw ConfigError("invalid beta list '" + std::string(text) + "': each beta must be a positive number");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

MatchMode parse_match_mode(std::string_view text) {
  if (text == "correction") return MatchMode::Correction;
  if (text == "detection") return MatchMode::Detection;
  throw ConfigError("match mode must be correction or detection, got '" + std::string(text) + "'");
}

std::string_view match_mode_name(MatchMode mode) noexcept {
  return mode == MatchMode::Correction ? "correction" : "detection";
}

void apply_config_document(RunConfig& cfg, const json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("config document must be a table");

  const std::map<std::string, Setter> extraction{
      {"substitute_base", [&](const json& v, const std::string& k) { cfg.costs.substitute_base = as_number(v, k); }},
      {"insert", [&](const json& v, const std::string& k) { cfg.costs.insert = as_number(v, k); }},
      {"delete", [&](const json& v, const std::string& k) { cfg.costs.deletion = as_number(v, k); }},
      {"case_only_substitute",
       [&](const json& v, const std::string& k) { cfg.costs.case_only_substitute = as_number(v, k); }},
      {"transpose_per_token",
       [&](const json& v, const std::string& k) { cfg.costs.transpose_per_token = as_number(v, k); }},
  };
  const std::map<std::string, Setter> classification{
      {"lexicon", [&](const json& v, const std::string& k) { cfg.lexicon_path = as_path(v, k, base_dir); }},
  };
  const std::map<std::string, Setter> scoring{
      {"betas",
       [&](const json& v, const std::string& k) {
         if (!v.is_array() || v.empty()) bad_key(k, "must be a nonempty array of numbers");
         std::vector<double> betas;
         for (const auto& b : v) {
           const double x = as_number(b, k);
           if (!(x > 0) || !std::isfinite(x)) bad_key(k, "must hold positive betas");
           betas.push_back(x);
         }
         cfg.betas = std::move(betas);
       }},
      {"mode", [&](const json& v, const std::string& k) { cfg.mode = parse_match_mode(as_string(v, k)); }},
  };
  const std::map<std::string, Setter> stats{
      {"annotator_policy",
       [&](const json& v, const std::string& k) {
         auto p = parse_annotator_policy(as_string(v, k));
         if (!p) bad_key(k, "must be first or all");
         cfg.annotator_policy = *p;
       }},
      {"top_k",
       [&](const json& v, const std::string& k) {
         cfg.top_k = as_int(v, k);
         if (cfg.top_k < 1) bad_key(k, "must be >= 1");
       }},
      {"file_glob", [&](const json& v, const std::string& k) { cfg.file_glob = as_string(v, k); }},
      {"data_dir", [&](const json& v, const std::string& k) { cfg.data_dir = as_path(v, k, base_dir); }},
      {"level_globs",
       [&](const json& v, const std::string& k) {
         if (!v.is_object()) bad_key(k, "must be a table of level = [globs]");
         std::vector<LevelRule> rules;
         for (const auto& [letter, globs] : v.items()) {
           auto level = parse_level(letter);
           if (!level) bad_key(k + "." + letter, "is not a proficiency level");
           if (!globs.is_array()) bad_key(k + "." + letter, "must be an array of globs");
           for (const auto& g : globs) rules.push_back({as_string(g, k + "." + letter), *level});
         }
         cfg.level_rules = std::move(rules);
       }},
  };
  const std::map<std::string, Setter> harness{
      {"instruction", [&](const json& v, const std::string& k) { cfg.prompt.instruction = as_string(v, k); }},
      {"n_shots", [&](const json& v, const std::string& k) { cfg.prompt.n_shots = as_int(v, k); }},
      {"delimiter_left", [&](const json& v, const std::string& k) { cfg.prompt.delimiter_left = as_string(v, k); }},
      {"delimiter_right",
       [&](const json& v, const std::string& k) { cfg.prompt.delimiter_right = as_string(v, k); }},
      {"max_model_token_length",
       [&](const json& v, const std::string& k) { cfg.prompt.max_model_token_length = as_int(v, k); }},
      {"temperature",
       [&](const json& v, const std::string& k) { cfg.prompt.sampling.temperature = as_number(v, k); }},
      {"max_tokens", [&](const json& v, const std::string& k) { cfg.prompt.sampling.max_tokens = as_int(v, k); }},
      {"exemplars",
       [&](const json& v, const std::string& k) {
         if (!v.is_array()) bad_key(k, "must be an array of [ungrammatical, grammatical] pairs");
         std::vector<Exemplar> bank;
         for (const auto& pair : v) {
           if (!pair.is_array() || pair.size() != 2) {
             bad_key(k, "must be an array of [ungrammatical, grammatical] pairs");
           }
           bank.push_back({as_string(pair[0], k), as_string(pair[1], k)});
         }
         cfg.prompt.exemplars = std::move(bank);
       }},
      {"endpoint", [&](const json& v, const std::string& k) { cfg.endpoint.base_url = as_string(v, k); }},
      {"model", [&](const json& v, const std::string& k) { cfg.endpoint.model = as_string(v, k); }},
      {"api_key_env", [&](const json& v, const std::string& k) { cfg.endpoint.api_key_env = as_string(v, k); }},
      {"timeout_seconds",
       [&](const json& v, const std::string& k) { cfg.endpoint.timeout_seconds = as_number(v, k); }},
      {"max_in_flight", [&](const json& v, const std::string& k) { cfg.endpoint.max_in_flight = as_int(v, k); }},
      {"max_attempts", [&](const json& v, const std::string& k) { cfg.endpoint.max_attempts = as_int(v, k); }},
      {"backoff_base_seconds",
       [&](const json& v, const std::string& k) { cfg.endpoint.backoff_base_seconds = as_number(v, k); }},
  };

  const std::map<std::string, const std::map<std::string, Setter>*> sections{
      {"edit_extraction", &extraction},
      {"error_classification", &classification},
      {"scoring", &scoring},
      {"corpus_stats", &stats},
      {"prompt_harness", &harness},
  };
  for (const auto& [name, section] : doc.items()) {
    auto it = sections.find(name);
    if (it == sections.end()) throw ConfigError("unknown config section [" + name + "]");
    apply_section(section, name, *it->second);
  }
  cfg.costs.validate();
}

void apply_environment(RunConfig& cfg, const EnvLookup& env) {
  if (auto v = env("GECSTRAT_DATA_DIR"); v && !v->empty()) cfg.data_dir = fs::path(*v);
  if (auto v = env("GECSTRAT_ENDPOINT"); v && !v->empty()) cfg.endpoint.base_url = *v;
  if (auto v = env("GECSTRAT_MODEL"); v && !v->empty()) cfg.endpoint.model = *v;
}

RunConfig load_run_config(const std::optional<fs::path>& config_file, const EnvLookup& env) {
  RunConfig cfg;
  std::optional<fs::path> path = config_file;
  if (!path) {
    if (auto v = env("GECSTRAT_CONFIG"); v && !v->empty()) path = fs::path(*v);
  }
  if (path) {
    std::string text;
    try {
      text = read_text_file(*path);
    } catch (const IoError& e) {
      throw ConfigError(std::string("cannot read config file: ") + e.what());
    }
    json doc;
    try {
      doc = parse_toml(text, path->string());
    } catch (const ParseError& e) {
      throw ConfigError(e.what());
    }
    apply_config_document(cfg, doc, path->parent_path());
  }
  apply_environment(cfg, env);
  return cfg;
}

}  // namespace gecstrat
