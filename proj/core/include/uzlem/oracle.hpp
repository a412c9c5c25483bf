#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "uzlem/affix_store.hpp"
#include "uzlem/lexicon.hpp"

namespace uzlem {

/// Longest word the oracle accepts, in code points.
inline constexpr std::size_t kOracleMaxLength = 40;

/// Reference lemmatizer for differential testing. Shares no code with the
/// stripping machine: it tries every strippable suffix allomorph in any
/// class order, breadth-first by number of removals, and at each stem
/// checks the lexicon for the stem itself and its -moq infinitive (verbs
/// only). Entries reached after a removal must allow affixes. The first
/// depth with a hit wins; within it the best POS priority, then the smaller
/// lemma. Throws std::invalid_argument for words longer than
/// kOracleMaxLength.
std::optional<std::string> oracle_lemmatize(std::string_view word,
                                            const Lexicon& lex,
                                            const AffixStore& store);

}  // namespace uzlem
