#pragma once

// UTF-8 helpers and the handful of character classes the text filters need.
// Character properties come from ICU.

#include <string>
#include <string_view>
#include <vector>

namespace forge::unicode {

bool is_valid_utf8(std::string_view text);

/// Decodes strictly; throws Error(InvalidUtf8) on malformed input.
std::u32string decode(std::string_view text);

/// Decodes leniently; malformed sequences become U+FFFD.
std::u32string decode_lenient(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

/// Splits into per-codepoint UTF-8 substrings (strict).
std::vector<std::string> split_chars(std::string_view text);

bool is_control(char32_t cp);      // general category Cc
bool is_format(char32_t cp);       // general category Cf
bool is_whitespace(char32_t cp);
bool is_letter(char32_t cp);       // L* or M*
bool is_digit(char32_t cp);        // Nd
bool is_punct_or_symbol(char32_t cp);  // P* or S*

/// NFC normalization followed by full lowercasing.
std::string nfc_lower(std::string_view text);

}  // namespace forge::unicode
