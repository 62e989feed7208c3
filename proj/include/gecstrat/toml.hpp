#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace gecstrat {

/// Parses the TOML subset used by gecstrat config files into a JSON object.
///
/// Supported: comments, [table] and [dotted.table] headers, bare and quoted
/// keys, basic and literal strings, integers, floats, booleans, arrays
/// (multi-line, trailing comma) and inline tables. Not supported: dotted
/// keys on the left of '=', arrays of tables, multi-line strings, dates.
/// Errors are ParseError with a 1-based line number.
nlohmann::json parse_toml(std::string_view text, const std::string& source = {});

}  // namespace gecstrat
