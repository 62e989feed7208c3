#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gecstrat {

using Tokens = std::vector<std::string>;

// Splits on runs of ASCII whitespace; never produces empty tokens.
Tokens split_tokens(std::string_view text);

std::string join_tokens(std::span<const std::string> tokens, std::string_view sep = " ");

// ASCII lowercase; bytes outside ASCII are left untouched.
std::string fold_case(std::string_view s);

bool iequals(std::string_view a, std::string_view b) noexcept;

std::string_view trim(std::string_view s) noexcept;

bool is_valid_utf8(std::string_view s) noexcept;

}  // namespace gecstrat
