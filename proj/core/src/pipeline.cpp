#include "uzlem/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace uzlem {

LemmaResult lemmatize_token(const Token& token, const Lexicon& lex,
                            const AffixStore& store) {
  if (token.kind != TokenKind::Word) {
    throw std::invalid_argument("lemmatize_token: '" + token.surface +
                                "' is a " + std::string(to_string(token.kind)) +
                                " token, not a word");
  }
  LemmaResult result{token, {}};
  const auto entries = lex.lookup(token.normalized);
  if (!entries.empty()) {
    result.analysis.lemma = token.normalized;
    result.analysis.stem = token.normalized;
    for (const auto& e : entries) result.analysis.pos_candidates.push_back(e.pos);
    result.analysis.status = ResolutionStatus::Resolved;
    return result;
  }
  result.analysis = run_fsm(token.normalized, store, lex);
  return result;
}

std::vector<LemmaResult> lemmatize_text(std::string_view raw,
                                        const Lexicon& lex,
                                        const AffixStore& store) {
  std::vector<LemmaResult> out;
  for (const auto& tok : filter_tokens(tokenize_raw(raw))) {
    out.push_back(lemmatize_token(tok, lex, store));
  }
  return out;
}

std::vector<LemmaResult> lemmatize_text_parallel(std::string_view raw,
                                                 const Lexicon& lex,
                                                 const AffixStore& store,
                                                 unsigned threads) {
  const auto tokens = filter_tokens(tokenize_raw(raw));
  std::vector<LemmaResult> out(tokens.size());
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(tokens.size())));
  if (tokens.empty()) return out;

  const std::size_t chunk = (tokens.size() + threads - 1) / threads;
  std::vector<std::jthread> workers;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(tokens.size(), (w + 1) * chunk);
        for (std::size_t i = w * chunk; i < end; ++i) {
          out[i] = lemmatize_token(tokens[i], lex, store);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Lemmatizer Lemmatizer::from_files(const std::filesystem::path& words,
                                  const std::filesystem::path& affixes) {
  return Lemmatizer(Lexicon::load_file(words), AffixStore::load_file(affixes));
}

}  // namespace uzlem
