#include "uzlem/pos.hpp"

namespace uzlem {

namespace {

struct PosInfo {
  PosTag tag;
  std::string_view code;
  WordClass cls;
  int priority;
};

constexpr std::array<PosInfo, kPosTagCount> kPosTable = {{
    {PosTag::Verb, "VERB", WordClass::Open, 1},
    {PosTag::Pronoun, "PRON", WordClass::Open, 5},
    {PosTag::Noun, "NOUN", WordClass::Open, 0},
    {PosTag::Adverb, "ADV", WordClass::Open, 4},
    {PosTag::Adjective, "ADJ", WordClass::Open, 2},
    {PosTag::Numeral, "NUM", WordClass::Open, 3},
    {PosTag::Conjunction, "CONJ", WordClass::Closed, 6},
    {PosTag::Auxiliary, "AUX", WordClass::Closed, 7},
    {PosTag::Particle, "PART", WordClass::Closed, 8},
    {PosTag::Modal, "MODAL", WordClass::Intermediate, 9},
    {PosTag::Imitation, "IMIT", WordClass::Intermediate, 10},
    {PosTag::Interjection, "INTJ", WordClass::Intermediate, 11},
}};

const PosInfo& info(PosTag tag) {
  return kPosTable[static_cast<std::size_t>(tag)];
}

}  // namespace

WordClass word_class(PosTag tag) noexcept { return info(tag).cls; }

std::string_view pos_code(PosTag tag) noexcept { return info(tag).code; }

std::optional<PosTag> parse_pos_code(std::string_view code) noexcept {
  for (const auto& row : kPosTable) {
    if (row.code == code) return row.tag;
  }
  return std::nullopt;
}

int pos_priority(PosTag tag) noexcept { return info(tag).priority; }

std::vector<PosTag> PosSet::tags() const {
  std::vector<PosTag> out;
  for (PosTag t : kAllPosTags) {
    if (contains(t)) out.push_back(t);
  }
  return out;
}

}  // namespace uzlem
