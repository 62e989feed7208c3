#include "gecstrat/m2.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gecstrat/error.hpp"

namespace gecstrat {
namespace {

constexpr std::string_view kFieldSep = "|||";

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(kFieldSep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + kFieldSep.size();
  }
}

bool span_less(const Edit& a, const Edit& b) {
  return a.start != b.start ? a.start < b.start : a.end < b.end;
}

// Edits of one annotator, in file order, with their source lines.
struct PendingEdit {
  Edit edit;
  std::size_t line;
};

struct BlockBuilder {
  M2Sentence sentence;
  std::map<int, std::vector<PendingEdit>> pending;

  M2Sentence finish() {
    for (auto& [annotator, edits] : pending) {
      std::stable_sort(edits.begin(), edits.end(), [](const PendingEdit& a, const PendingEdit& b) {
        return span_less(a.edit, b.edit);
      });
      bool has_noop = std::any_of(edits.begin(), edits.end(),
                                  [](const PendingEdit& p) { return p.edit.is_noop(); });
      if (has_noop && edits.size() > 1) {
        throw ParseError(edits.back().line, "annotator " + std::to_string(annotator) +
                                                " mixes a noop with other edits");
      }
      for (std::size_t i = 1; i < edits.size(); ++i) {
        if (edits[i].edit.start < edits[i - 1].edit.end) {
          throw ParseError(std::max(edits[i].line, edits[i - 1].line),
                           "overlapping edits for annotator " + std::to_string(annotator));
        }
      }
      auto& out = sentence.annotations[annotator];
      for (auto& p : edits) out.push_back(std::move(p.edit));
    }
    return std::move(sentence);
  }
};

Edit parse_a_line(std::string_view body, std::size_t line, std::size_t n_tokens) {
  auto fields = split_fields(body);
  if (fields.size() != 6) {
    throw ParseError(line, "expected 6 '|||'-separated fields, got " +
                               std::to_string(fields.size()) + ": A " + std::string(body));
  }
  auto span_text = fields[0];
  auto space = span_text.find(' ');
  if (space == std::string_view::npos) {
    throw ParseError(line, "malformed span '" + std::string(span_text) + "'");
  }
  auto start = parse_int(span_text.substr(0, space));
  auto end = parse_int(span_text.substr(space + 1));
  if (!start || !end) {
    throw ParseError(line, "malformed span '" + std::string(span_text) + "'");
  }
  auto annotator = parse_int(fields[5]);
  if (!annotator || *annotator < 0) {
    throw ParseError(line, "annotator id is not a non-negative integer: '" +
                               std::string(fields[5]) + "'");
  }

  Edit e;
  e.start = *start;
  e.end = *end;
  e.type = ErrorType::parse(fields[1]);
  e.replacement = fields[2] == kNoneToken ? std::string() : join_tokens(split_tokens(fields[2]));
  e.required = std::string(fields[3]);
  e.comment = std::string(fields[4]);
  e.annotator = *annotator;

  bool sentinel_span = e.start == -1 && e.end == -1;
  if (sentinel_span != e.is_noop()) {
    throw ParseError(line, "span (-1, -1) must be used exactly by noop annotations");
  }
  if (!sentinel_span &&
      (e.start < 0 || e.start > e.end || static_cast<std::size_t>(e.end) > n_tokens)) {
    throw ParseError(line, "span " + std::to_string(e.start) + " " + std::to_string(e.end) +
                               " out of range for " + std::to_string(n_tokens) + " tokens");
  }
  return e;
}

bool has_field_breaker(std::string_view s) {
  return s.find(kFieldSep) != std::string_view::npos || s.find('\n') != std::string_view::npos;
}

}  // namespace

std::optional<ProficiencyLevel> parse_level(std::string_view text) noexcept {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'A':
    case 'a':
      return ProficiencyLevel::A;
    case 'B':
    case 'b':
      return ProficiencyLevel::B;
    case 'C':
    case 'c':
      return ProficiencyLevel::C;
    case 'N':
    case 'n':
      return ProficiencyLevel::N;
    default:
      return std::nullopt;
  }
}

char level_letter(ProficiencyLevel level) noexcept {
  switch (level) {
    case ProficiencyLevel::A:
      return 'A';
    case ProficiencyLevel::B:
      return 'B';
    case ProficiencyLevel::C:
      return 'C';
    case ProficiencyLevel::N:
      return 'N';
  }
  return '?';
}

Edit make_noop_edit(int annotator) {
  Edit e;
  e.start = -1;
  e.end = -1;
  e.type = ErrorType::noop();
  e.annotator = annotator;
  return e;
}

std::optional<int> M2Sentence::first_annotator() const {
  if (annotations.empty()) return std::nullopt;
  return annotations.begin()->first;
}

void validate_sentence(const M2Sentence& s) {
  for (const auto& tok : s.source) {
    if (tok.empty() || split_tokens(tok).size() != 1) {
      throw Error("source token '" + tok + "' is empty or contains whitespace");
    }
  }
  const auto n = static_cast<int>(s.source.size());
  for (const auto& [annotator, edits] : s.annotations) {
    const std::string who = "annotator " + std::to_string(annotator);
    if (annotator < 0) throw Error(who + ": negative annotator id");
    if (edits.empty()) throw Error(who + ": empty edit list");
    bool has_noop = false;
    for (const auto& e : edits) {
      if (e.annotator != annotator) throw Error(who + ": edit carries annotator " +
                                                std::to_string(e.annotator));
      if (e.is_noop()) {
        has_noop = true;
        if (e.start != -1 || e.end != -1) throw Error(who + ": noop must use span (-1, -1)");
      } else if (e.start < 0 || e.start > e.end || e.end > n) {
        throw Error(who + ": span " + std::to_string(e.start) + " " + std::to_string(e.end) +
                    " out of range");
      }
      if (e.replacement != join_tokens(split_tokens(e.replacement)) || e.replacement == kNoneToken) {
        throw Error(who + ": replacement '" + e.replacement + "' cannot be represented");
      }
      if (has_field_breaker(e.replacement) || has_field_breaker(e.required) ||
          has_field_breaker(e.comment) || has_field_breaker(e.type.to_string())) {
        throw Error(who + ": field contains '|||' or a newline");
      }
    }
    if (has_noop && edits.size() != 1) throw Error(who + ": noop mixed with other edits");
    for (std::size_t i = 1; i < edits.size(); ++i) {
      if (span_less(edits[i], edits[i - 1])) throw Error(who + ": edits not sorted by span");
      if (edits[i].start < edits[i - 1].end) throw Error(who + ": overlapping edits");
    }
  }
}

std::vector<M2Sentence> parse_m2(std::string_view text) {
  std::vector<M2Sentence> out;
  std::optional<BlockBuilder> block;
  auto flush = [&] {
    if (block) {
      out.push_back(block->finish());
      block.reset();
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (trim(line).empty()) {
      flush();
      continue;
    }
    if (line[0] == 'S' && (line.size() == 1 || line[1] == ' ')) {
      flush();
      block.emplace();
      block->sentence.source = split_tokens(line.substr(1));
      block->sentence.origin_line = line_no;
      continue;
    }
    if (line.size() >= 2 && line[0] == 'A' && line[1] == ' ') {
      if (!block) throw ParseError(line_no, "A line outside a sentence block: " + std::string(line));
      Edit e = parse_a_line(line.substr(2), line_no, block->sentence.source.size());
      block->pending[e.annotator].push_back({std::move(e), line_no});
      continue;
    }
    throw ParseError(line_no, "unrecognized line: " + std::string(line));
  }
  flush();
  return out;
}

std::string serialize_m2(std::span<const M2Sentence> sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    try {
      validate_sentence(s);
    } catch (const Error& e) {
      throw Error("sentence " + std::to_string(i) + ": " + e.what());
    }
    if (i > 0) out += '\n';
    out += 'S';
    if (!s.source.empty()) {
      out += ' ';
      out += join_tokens(s.source);
    }
    out += '\n';
    for (const auto& [annotator, edits] : s.annotations) {
      for (const auto& e : edits) {
        out += "A ";
        out += std::to_string(e.start);
        out += ' ';
        out += std::to_string(e.end);
        out += kFieldSep;
        out += e.type.to_string();
        out += kFieldSep;
        out += e.replacement.empty() ? std::string(kNoneToken) : e.replacement;
        out += kFieldSep;
        out += e.required;
        out += kFieldSep;
        out += e.comment;
        out += kFieldSep;
        out += std::to_string(annotator);
        out += '\n';
      }
    }
  }
  return out;
}

Tokens apply_edits(std::span<const std::string> source, std::span<const Edit> edits) {
  Tokens out;
  out.reserve(source.size() + edits.size());
  std::size_t cursor = 0;
  const Edit* prev = nullptr;
  for (const auto& e : edits) {
    if (e.is_noop()) continue;
    if (e.start < 0 || e.start > e.end || static_cast<std::size_t>(e.end) > source.size()) {
      throw Error("edit span " + std::to_string(e.start) + " " + std::to_string(e.end) +
                  " exceeds " + std::to_string(source.size()) + " tokens");
    }
    if (prev && (span_less(e, *prev) || e.start < prev->end)) {
      throw Error("overlapping or unsorted edits at span " + std::to_string(e.start) + " " +
                  std::to_string(e.end));
    }
    for (; cursor < static_cast<std::size_t>(e.start); ++cursor) out.push_back(source[cursor]);
    for (auto& tok : split_tokens(e.replacement)) out.push_back(std::move(tok));
    cursor = std::max(cursor, static_cast<std::size_t>(e.end));
    prev = &e;
  }
  for (; cursor < source.size(); ++cursor) out.push_back(source[cursor]);
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw IoError("expected a file but found a directory: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<M2Sentence> read_m2_file(const std::filesystem::path& path) {
  auto text = read_text_file(path);
  try {
    return parse_m2(text);
  } catch (const ParseError& e) {
    throw e.in_source(path.string());
  }
}

}  // namespace gecstrat
