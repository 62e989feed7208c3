#include "gecstrat/toml.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "gecstrat/error.hpp"

namespace gecstrat {
namespace {

using json = nlohmann::json;

bool is_bare_key_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-';
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::string_view text, const std::string& source) : text_(text), source_(source) {}

  json parse() {
    json root = json::object();
    json* table = &root;
    for (;;) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        table = &open_table(root);
      } else {
        auto key = parse_key();
        skip_spaces();
        if (peek() == '.') fail("dotted keys are not supported; use a [table] header");
        expect('=');
        skip_spaces();
        auto value = parse_value();
        if (table->contains(key)) fail("duplicate key '" + key + "'");
        (*table)[key] = std::move(value);
      }
      end_of_line();
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message, source_); }

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char take() {
    const char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }
  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) take();
  }
  void skip_comment() {
    if (peek() == '#') {
      while (!eof() && peek() != '\n') take();
    }
  }
  void skip_blank_lines() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (!eof() && (peek() == '\n' || peek() == '\r')) {
        take();
      } else {
        return;
      }
    }
  }
  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (peek() == '\r') take();
    if (eof()) return;
    if (peek() != '\n') fail("unexpected text after value");
    take();
  }

  json& open_table(json& root) {
    take();
    if (peek() == '[') fail("arrays of tables are not supported");
    std::vector<std::string> path;
    for (;;) {
      skip_spaces();
      path.push_back(parse_key());
      skip_spaces();
      if (peek() == '.') {
        take();
        continue;
      }
      expect(']');
      break;
    }
    std::string joined;
    json* node = &root;
    for (const auto& part : path) {
      joined += (joined.empty() ? "" : ".") + part;
      if (!node->contains(part)) (*node)[part] = json::object();
      node = &(*node)[part];
      if (!node->is_object()) fail("'" + joined + "' is already a value, not a table");
    }
    if (!defined_.insert(joined).second) fail("table [" + joined + "] defined twice");
    return *node;
  }

  std::string parse_key() {
    if (peek() == '"') return parse_basic_string();
    if (peek() == '\'') return parse_literal_string();
    std::string key;
    while (!eof() && is_bare_key_char(peek())) key += take();
    if (key.empty()) fail("expected a key");
    return key;
  }

  std::string parse_basic_string() {
    take();
    if (peek() == '"' && peek(1) == '"') fail("multi-line strings are not supported");
    std::string out;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = take();
      if (c == '"') return out;
      if (c != '\\') {
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t') fail("control character in string");
        out += c;
        continue;
      }
      if (eof()) fail("unterminated string");
      switch (const char e = take()) {
        case 'b': out += '\b'; break;
        case 't': out += '\t'; break;
        case 'n': out += '\n'; break;
        case 'f': out += '\f'; break;
        case 'r': out += '\r'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'u':
        case 'U': {
          const std::size_t n = e == 'u' ? 4 : 8;
          if (pos_ + n > text_.size()) fail("truncated unicode escape");
          std::uint32_t cp = 0;
          auto digits = text_.substr(pos_, n);
          auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + n, cp, 16);
          if (ec != std::errc{} || ptr != digits.data() + n || cp > 0x10FFFF ||
              (cp >= 0xD800 && cp <= 0xDFFF)) {
            fail("invalid unicode escape");
          }
          pos_ += n;
          append_utf8(out, cp);
          break;
        }
        default:
          fail(std::string("invalid escape '\\") + e + "'");
      }
    }
  }

  std::string parse_literal_string() {
    take();
    if (peek() == '\'' && peek(1) == '\'') fail("multi-line strings are not supported");
    std::string out;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = take();
      if (c == '\'') return out;
      out += c;
    }
  }

  json parse_value() {
    if (eof()) fail("expected a value");
    switch (peek()) {
      case '"':
        return parse_basic_string();
      case '\'':
        return parse_literal_string();
      case '[':
        return parse_array();
      case '{':
        return parse_inline_table();
      default:
        return parse_scalar();
    }
  }

  void skip_array_gap() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (!eof() && (peek() == '\n' || peek() == '\r')) {
        take();
      } else {
        return;
      }
    }
  }

  json parse_array() {
    take();
    json out = json::array();
    for (;;) {
      skip_array_gap();
      if (eof()) fail("unterminated array");
      if (peek() == ']') {
        take();
        return out;
      }
      out.push_back(parse_value());
      skip_array_gap();
      if (peek() == ',') {
        take();
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array");
      }
    }
  }

  json parse_inline_table() {
    take();
    json out = json::object();
    skip_spaces();
    if (peek() == '}') {
      take();
      return out;
    }
    for (;;) {
      skip_spaces();
      auto key = parse_key();
      skip_spaces();
      expect('=');
      skip_spaces();
      if (out.contains(key)) fail("duplicate key '" + key + "'");
      out[key] = parse_value();
      skip_spaces();
      if (peek() == ',') {
        take();
        continue;
      }
      expect('}');
      return out;
    }
  }

  json parse_scalar() {
    std::string token;
    while (!eof() && (is_bare_key_char(peek()) || peek() == '+' || peek() == '.')) token += take();
    if (token == "true") return true;
    if (token == "false") return false;
    if (token.empty()) fail("expected a value");
    for (std::string_view special : {"inf", "+inf", "-inf", "nan", "+nan", "-nan"}) {
      if (token == special) {
        const double v = token.ends_with("inf") ? std::numeric_limits<double>::infinity()
                                                : std::numeric_limits<double>::quiet_NaN();
        return token.front() == '-' ? -v : v;
      }
    }
    if (token.front() == '_' || token.back() == '_' || token.find("__") != std::string::npos) {
      fail("misplaced '_' in number '" + token + "'");
    }
    std::string digits;
    for (char c : token) {
      if (c != '_') digits += c;
    }
    std::string_view body = digits;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    const bool is_float = body.find_first_of(".eE") != std::string_view::npos;
    if (is_float) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc{} || ptr != body.data() + body.size()) fail("invalid number '" + token + "'");
      return v;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc{} || ptr != body.data() + body.size()) fail("invalid value '" + token + "'");
    return v;
  }

  std::string_view text_;
  const std::string& source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::set<std::string> defined_;
};

}  // namespace

nlohmann::json parse_toml(std::string_view text, const std::string& source) {
  return Parser(text, source).parse();
}

}  // namespace gecstrat
