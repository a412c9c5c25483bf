#include "uzlem/oracle.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "utf8.hpp"

namespace uzlem {

namespace {

struct Candidate {
  int rank;
  std::string lemma;

  bool operator<(const Candidate& o) const {
    return rank != o.rank ? rank < o.rank : lemma < o.lemma;
  }
};

void collect(std::string_view stem, bool after_removal, const Lexicon& lex,
             std::set<Candidate>& hits) {
  for (const auto& e : lex.lookup(stem)) {
    if (after_removal && !e.takes_affixes) continue;
    hits.insert({pos_priority(e.pos), e.lemma});
  }
  if (stem.size() >= 3 && stem.substr(stem.size() - 3) == "moq") return;
  const std::string infinitive = std::string(stem) + "moq";
  for (const auto& e : lex.lookup(infinitive)) {
    if (e.pos != PosTag::Verb) continue;
    if (after_removal && !e.takes_affixes) continue;
    hits.insert({pos_priority(e.pos), e.lemma});
  }
}

}  // namespace

std::optional<std::string> oracle_lemmatize(std::string_view word,
                                            const Lexicon& lex,
                                            const AffixStore& store) {
  if (utf8::length(word) > kOracleMaxLength) {
    throw std::invalid_argument("oracle_lemmatize: word longer than " +
                                std::to_string(kOracleMaxLength));
  }

  std::set<std::string> seen{std::string(word)};
  std::vector<std::string> frontier{std::string(word)};
  for (bool after_removal = false; !frontier.empty(); after_removal = true) {
    std::set<Candidate> hits;
    for (const auto& stem : frontier) collect(stem, after_removal, lex, hits);
    if (!hits.empty()) return hits.begin()->lemma;

    std::vector<std::string> next;
    for (const auto& stem : frontier) {
      for (const auto& entry : store.entries()) {
        if (!entry.strip || entry.position != AffixPosition::Suffix) continue;
        for (const auto& form : entry.surface_forms) {
          if (form.size() >= stem.size() || !stem.ends_with(form)) continue;
          std::string shorter = stem.substr(0, stem.size() - form.size());
          if (utf8::length(shorter) < kMinStemLength) continue;
          if (seen.insert(shorter).second) next.push_back(std::move(shorter));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace uzlem
