#include "uzlem/text_normalizer.hpp"

#include <algorithm>
#include <iterator>

#include "utf8.hpp"

namespace uzlem {

namespace {

// Apostrophe look-alikes that become U+02BB when they follow o/g.
bool is_okina_candidate(char32_t cp) {
  switch (cp) {
    case U'’':
    case U'‘':
    case U'\'':
    case U'`':
    case U'ʻ':
      return true;
    default:
      return false;
  }
}

bool is_apostrophe_like(char32_t cp) {
  if (is_okina_candidate(cp)) return true;
  switch (cp) {
    case U'ʼ':  // modifier letter apostrophe
    case U'´':  // acute accent
    case U'′':  // prime
    case U'ʹ':  // modifier letter prime
    case U'ʾ':  // modifier letter right half ring
    case U'＇':  // fullwidth apostrophe
      return true;
    default:
      return false;
  }
}

// Simple one-to-one lowercase mapping for Latin, Greek and Cyrillic.
char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 32;
  if (cp >= 0x100 && cp <= 0x17F) {
    if (cp == 0x130) return U'i';
    if (cp == 0x178) return 0xFF;
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
      return (cp % 2 == 1) ? cp + 1 : cp;
    }
    if (cp == 0x131 || cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
    case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_letter(char32_t cp) { return cp >= U'a' && cp <= U'z'; }
bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

struct Unit {
  char32_t cp;  // normalized code point
  std::size_t begin;
  std::size_t end;
};

std::vector<Unit> normalize_units(std::string_view raw) {
  const auto decoded = utf8::decode(raw);
  std::vector<Unit> units;
  units.reserve(decoded.size());
  char32_t prev = 0;
  for (const auto& d : decoded) {
    char32_t cp = fold_case(d.cp);
    if (is_apostrophe_like(d.cp)) {
      cp = ((prev == U'o' || prev == U'g') && is_okina_candidate(d.cp))
               ? kTurnedComma
               : kTutuq;
    }
    units.push_back({cp, d.begin, d.end});
    prev = cp;
  }
  return units;
}

std::vector<Unit> plain_units(std::string_view text) {
  const auto decoded = utf8::decode(text);
  std::vector<Unit> units;
  units.reserve(decoded.size());
  for (const auto& d : decoded) units.push_back({d.cp, d.begin, d.end});
  return units;
}

enum class CharClass { Space, Letter, Digit, Other };

CharClass classify(char32_t cp) {
  if (is_space(cp)) return CharClass::Space;
  if (is_letter(cp)) return CharClass::Letter;
  if (is_digit(cp)) return CharClass::Digit;
  return CharClass::Other;
}

// Index one past the end of the word starting at `i`.
std::size_t scan_word(const std::vector<Unit>& u, std::size_t i) {
  while (i < u.size()) {
    const char32_t cp = u[i].cp;
    if (is_letter(cp)) {
      ++i;
    } else if (cp == kTurnedComma && i > 0 &&
               (u[i - 1].cp == U'o' || u[i - 1].cp == U'g')) {
      ++i;
    } else if (cp == kTutuq && i + 1 < u.size() && is_letter(u[i + 1].cp)) {
      // A tutuq joins only between letters; the caller guarantees a letter
      // precedes it because runs start on a letter.
      ++i;
    } else {
      break;
    }
  }
  return i;
}

std::size_t scan_number(const std::vector<Unit>& u, std::size_t i) {
  while (i < u.size()) {
    if (is_digit(u[i].cp)) {
      ++i;
    } else if ((u[i].cp == U'.' || u[i].cp == U',') && i + 1 < u.size() &&
               is_digit(u[i + 1].cp)) {
      ++i;
    } else {
      break;
    }
  }
  return i;
}

std::size_t scan_other(const std::vector<Unit>& u, std::size_t i) {
  while (i < u.size() && classify(u[i].cp) == CharClass::Other) ++i;
  return i;
}

std::vector<Token> tokenize_units(const std::vector<Unit>& u,
                                  std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < u.size()) {
    const CharClass cls = classify(u[i].cp);
    if (cls == CharClass::Space) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    TokenKind kind = TokenKind::Word;
    switch (cls) {
      case CharClass::Letter:
        j = scan_word(u, i);
        kind = TokenKind::Word;
        break;
      case CharClass::Digit:
        j = scan_number(u, i);
        kind = TokenKind::Number;
        break;
      default:
        j = scan_other(u, i);
        kind = TokenKind::Punctuation;
        break;
    }
    Token tok;
    tok.span = {u[i].begin, u[j - 1].end};
    tok.surface = std::string(source.substr(tok.span.begin, tok.span.size()));
    for (std::size_t k = i; k < j; ++k) utf8::append(tok.normalized, u[k].cp);
    tok.kind = kind;
    tokens.push_back(std::move(tok));
    i = j;
  }
  return tokens;
}

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word:
      return "word";
    case TokenKind::Punctuation:
      return "punctuation";
    case TokenKind::Number:
      return "number";
  }
  return "?";
}

std::string normalize_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (const auto& unit : normalize_units(raw)) utf8::append(out, unit.cp);
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  return tokenize_units(plain_units(text), text);
}

std::vector<Token> tokenize_raw(std::string_view raw) {
  return tokenize_units(normalize_units(raw), raw);
}

std::vector<Token> filter_tokens(std::vector<Token> tokens) {
  std::erase_if(tokens,
                [](const Token& t) { return t.kind != TokenKind::Word; });
  return tokens;
}

bool is_normalized_word(std::string_view word) {
  if (word.empty()) return false;
  try {
    if (normalize_text(word) != word) return false;
    const auto tokens = tokenize(word);
    return tokens.size() == 1 && tokens.front().kind == TokenKind::Word &&
           tokens.front().normalized == word;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace uzlem
