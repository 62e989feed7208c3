#include "gecstrat/error.hpp"

namespace gecstrat {

namespace {

std::string render(std::size_t line, const std::string& message, const std::string& source) {
  if (source.empty()) {
    return line == 0 ? message : "line " + std::to_string(line) + ": " + message;
  }
  return line == 0 ? source + ": " + message
                   : source + ":" + std::to_string(line) + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message, const std::string& source)
    : Error(render(line, message, source)), line_(line), detail_(message) {}

}  // namespace gecstrat
