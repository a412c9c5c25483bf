#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "uzlem/affix_store.hpp"
#include "uzlem/fsm_engine.hpp"
#include "uzlem/lexicon.hpp"
#include "uzlem/text_normalizer.hpp"

namespace uzlem {

struct LemmaResult {
  Token token;
  Analysis analysis;

  friend bool operator==(const LemmaResult&, const LemmaResult&) = default;
};

/// Direct lexicon hit first, otherwise the stripping machine. Throws
/// std::invalid_argument for non-Word tokens.
LemmaResult lemmatize_token(const Token& token, const Lexicon& lex,
                            const AffixStore& store);

/// normalize -> tokenize -> keep words -> lemmatize each, in input order.
/// Throws EncodingError for malformed UTF-8.
std::vector<LemmaResult> lemmatize_text(std::string_view raw,
                                        const Lexicon& lex,
                                        const AffixStore& store);

/// Same result as lemmatize_text, with tokens split across `threads` workers.
std::vector<LemmaResult> lemmatize_text_parallel(std::string_view raw,
                                                 const Lexicon& lex,
                                                 const AffixStore& store,
                                                 unsigned threads);

/// Owns a loaded pair of stores.
class Lemmatizer {
 public:
  Lemmatizer(Lexicon lex, AffixStore store)
      : lex_(std::move(lex)), store_(std::move(store)) {}

  static Lemmatizer from_files(const std::filesystem::path& words,
                               const std::filesystem::path& affixes);

  std::vector<LemmaResult> lemmatize(std::string_view raw) const {
    return lemmatize_text(raw, lex_, store_);
  }

  const Lexicon& lexicon() const noexcept { return lex_; }
  const AffixStore& affixes() const noexcept { return store_; }

 private:
  Lexicon lex_;
  AffixStore store_;
};

}  // namespace uzlem
