#include "gecstrat/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <thread>

#include "json.hpp"

namespace gecstrat {

namespace fs = std::filesystem;
using json = nlohmann::json;

void BatchOptions::validate() const {
  if (max_in_flight < 1) throw ConfigError("max_in_flight must be >= 1");
  if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
  if (!(backoff_base_seconds >= 0.0) || !(backoff_max_seconds >= 0.0)) {
    throw ConfigError("backoff delays must be >= 0");
  }
}

std::size_t CorrectionRun::count(RecordStatus status) const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [&](const auto& r) { return r.status == status; }));
}

std::string checkpoint_line(const CorrectionRecord& r) {
  json j = {
      {"index", r.index},
      {"source", r.source},
      {"prompt", r.prompt},
      {"raw_completion", r.raw_completion},
      {"hypothesis", r.hypothesis},
      {"status", record_status_name(r.status)},
      {"attempts", r.attempts},
      {"prompt_truncated", r.prompt_truncated},
  };
  return j.dump();
}

CorrectionRecord parse_checkpoint_line(std::string_view line) {
  auto j = json::parse(line);
  CorrectionRecord r;
  r.index = j.at("index").get<std::size_t>();
  r.source = j.at("source").get<Tokens>();
  r.prompt = j.at("prompt").get<std::string>();
  r.raw_completion = j.at("raw_completion").get<std::string>();
  r.hypothesis = j.at("hypothesis").get<Tokens>();
  auto status = parse_record_status(j.at("status").get<std::string>());
  if (!status) throw Error("unknown record status");
  r.status = *status;
  r.attempts = j.at("attempts").get<int>();
  r.prompt_truncated = j.at("prompt_truncated").get<bool>();
  return r;
}

namespace {

// Valid records of an existing checkpoint. A final line without a newline is
// a torn write from an interrupted run and is dropped.
std::vector<CorrectionRecord> load_checkpoint(const fs::path& path,
                                              std::span<const M2Sentence> corpus) {
  std::vector<CorrectionRecord> out;
  std::error_code ec;
  if (!fs::exists(path, ec)) return out;
  const auto text = read_text_file(path);
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const bool torn = nl == std::string::npos;
    const auto line = std::string_view(text).substr(pos, torn ? text.npos : nl - pos);
    pos = torn ? text.size() : nl + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    CorrectionRecord r;
    try {
      r = parse_checkpoint_line(line);
    } catch (const std::exception& e) {
      if (torn) break;
      throw ParseError(line_no, std::string("bad checkpoint record: ") + e.what(), path.string());
    }
    if (r.status == RecordStatus::Failed) continue;
    if (r.index >= corpus.size() || r.source != corpus[r.index].source) {
      throw Error("checkpoint " + path.string() + " does not match the corpus at record " +
                  std::to_string(line_no));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::chrono::duration<double> backoff_delay(const BatchOptions& o, std::size_t index, int attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(o.jitter_seed), static_cast<std::uint32_t>(o.jitter_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> jitter(0.5, 1.0);
  const double raw = o.backoff_base_seconds * std::ldexp(1.0, attempt - 1);
  return std::chrono::duration<double>(std::min(raw, o.backoff_max_seconds) * jitter(rng));
}

}  // namespace

CorrectionRun run_batch(std::span<const M2Sentence> corpus, Corrector& corrector,
                        const PromptConfig& cfg, const BatchOptions& options) {
  cfg.validate();
  options.validate();
  const auto started = std::chrono::steady_clock::now();
  auto sleep = options.sleep ? options.sleep : [](std::chrono::duration<double> d) {
    std::this_thread::sleep_for(d);
  };

  std::vector<std::optional<CorrectionRecord>> slots(corpus.size());
  CorrectionRun run;
  std::ofstream checkpoint;
  if (options.checkpoint) {
    auto resumed = load_checkpoint(*options.checkpoint, corpus);
    // Rewrite without torn or failed lines so appends start on a clean line.
    const auto tmp = fs::path(options.checkpoint->string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw IoError("cannot write checkpoint " + tmp.string());
      for (const auto& r : resumed) out << checkpoint_line(r) << '\n';
    }
    fs::rename(tmp, *options.checkpoint);
    for (auto& r : resumed) {
      if (!slots[r.index]) ++run.resumed;
      slots[r.index] = std::move(r);
    }
    checkpoint.open(*options.checkpoint, std::ios::app);
    if (!checkpoint) throw IoError("cannot append to checkpoint " + options.checkpoint->string());
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!slots[i]) pending.push_back(i);
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex mu;
  std::exception_ptr failure;

  auto process = [&](std::size_t index) {
    const auto& sentence = corpus[index];
    const auto prompt = render_prompt(cfg, sentence.source);
    CorrectionRequest request{index,
                              &sentence,
                              {options.model, prompt.text, cfg.sampling.max_tokens, cfg.sampling.temperature},
                              cfg.delimiter_left,
                              cfg.delimiter_right};
    CorrectionRecord r;
    r.index = index;
    r.source = sentence.source;
    r.prompt = prompt.text;
    r.prompt_truncated = prompt.truncated;
    r.status = RecordStatus::Failed;
    for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
      r.attempts = attempt;
      try {
        r.raw_completion = corrector.complete(request);
        auto parsed = parse_completion(r.raw_completion, cfg);
        r.status = parsed.status;
        r.hypothesis = std::move(parsed.tokens);
        r.error.clear();
        break;
      } catch (const RetryableError& e) {
        r.error = e.what();
        if (attempt < options.max_attempts) sleep(backoff_delay(options, index, attempt));
      } catch (const CorrectorError& e) {
        r.error = e.what();
        break;
      }
    }
    if (r.status != RecordStatus::Ok) r.hypothesis = r.source;

    std::lock_guard lock(mu);
    if (checkpoint.is_open() && r.status != RecordStatus::Failed) {
      checkpoint << checkpoint_line(r) << '\n';
      checkpoint.flush();
    }
    slots[index] = std::move(r);
  };

  auto worker = [&] {
    while (!abort.load()) {
      const auto k = next.fetch_add(1);
      if (k >= pending.size()) return;
      try {
        process(pending[k]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        abort.store(true);
      }
    }
  };

  const auto n_workers = std::min<std::size_t>(static_cast<std::size_t>(options.max_in_flight), pending.size());
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; ++t) workers.emplace_back(worker);
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);

  run.records.reserve(slots.size());
  for (auto& slot : slots) run.records.push_back(std::move(*slot));
  run.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return run;
}

}  // namespace gecstrat
