#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace uzlem {

/// Canonical modifier for o‘ and g‘ (MODIFIER LETTER TURNED COMMA).
inline constexpr char32_t kTurnedComma = U'ʻ';
/// Canonical word-internal apostrophe, tutuq belgisi (MODIFIER LETTER APOSTROPHE).
inline constexpr char32_t kTutuq = U'ʼ';

enum class TokenKind { Word, Punctuation, Number };

std::string_view to_string(TokenKind kind) noexcept;

/// Half-open byte range [begin, end).
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct Token {
  std::string surface;     // exact slice of the text the token came from
  std::string normalized;  // case-folded, canonical apostrophes
  ByteSpan span;
  TokenKind kind = TokenKind::Word;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Maps apostrophe look-alikes to U+02BB (after o/g) or U+02BC (elsewhere)
/// and lowercases letters. Every substitution is one code point for one code
/// point. Throws EncodingError on malformed UTF-8.
std::string normalize_text(std::string_view raw);

/// Splits already-normalized text. Surfaces are slices of `text` and spans
/// index into it.
std::vector<Token> tokenize(std::string_view text);

/// Normalizes and tokenizes in one pass. Surfaces and spans refer to `raw`;
/// `normalized` holds the canonical form of each token.
std::vector<Token> tokenize_raw(std::string_view raw);

/// Keeps Word tokens only, in order.
std::vector<Token> filter_tokens(std::vector<Token> tokens);

/// True if `word` is non-empty, normalized, and would tokenize as a single
/// Word token. Used by the data-file loaders.
bool is_normalized_word(std::string_view word);

}  // namespace uzlem
