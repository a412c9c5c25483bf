#pragma once

#include <filesystem>
#include <sstream>
#include <string>

#include "uzlem/affix_store.hpp"
#include "uzlem/lexicon.hpp"

namespace uzlem::testing {

inline std::filesystem::path data_dir() { return UZLEM_TEST_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return UZLEM_TEST_FIXTURE_DIR; }

inline const Lexicon& seed_lexicon() {
  static const Lexicon lex = Lexicon::load_file(data_dir() / "words.tsv");
  return lex;
}

inline const AffixStore& seed_affixes() {
  static const AffixStore store =
      AffixStore::load_file(data_dir() / "affixes.tsv");
  return store;
}

inline Lexicon lexicon_from(const std::string& text) {
  std::istringstream in(text);
  return Lexicon::load(in, "test");
}

inline AffixStore affixes_from(const std::string& text) {
  std::istringstream in(text);
  return AffixStore::load(in, "test");
}

}  // namespace uzlem::testing
