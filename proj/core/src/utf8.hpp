#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace uzlem::utf8 {

struct DecodedChar {
  char32_t cp;
  std::size_t begin;  // byte offsets into the source
  std::size_t end;
};

// Throws EncodingError on malformed input (overlongs, surrogates, truncation).
std::vector<DecodedChar> decode(std::string_view text);

void append(std::string& out, char32_t cp);

std::string encode(const std::vector<char32_t>& cps);

// Code-point count of an already-valid UTF-8 string.
std::size_t length(std::string_view text) noexcept;

}  // namespace uzlem::utf8
