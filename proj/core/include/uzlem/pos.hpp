#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace uzlem {

enum class PosTag : std::uint8_t {
  // open (lexical)
  Verb,
  Pronoun,
  Noun,
  Adverb,
  Adjective,
  Numeral,
  // closed (grammatical)
  Conjunction,
  Auxiliary,
  Particle,
  // intermediate
  Modal,
  Imitation,
  Interjection,
};

inline constexpr std::size_t kPosTagCount = 12;

inline constexpr std::array<PosTag, kPosTagCount> kAllPosTags = {
    PosTag::Verb,        PosTag::Pronoun,   PosTag::Noun,
    PosTag::Adverb,      PosTag::Adjective, PosTag::Numeral,
    PosTag::Conjunction, PosTag::Auxiliary, PosTag::Particle,
    PosTag::Modal,       PosTag::Imitation, PosTag::Interjection,
};

enum class WordClass { Open, Closed, Intermediate };

WordClass word_class(PosTag tag) noexcept;

/// File code: VERB, PRON, NOUN, ADV, ADJ, NUM, CONJ, AUX, PART, MODAL, IMIT,
/// INTJ.
std::string_view pos_code(PosTag tag) noexcept;
std::optional<PosTag> parse_pos_code(std::string_view code) noexcept;

/// Rank used to order homonyms; lower wins. Noun > Verb > Adjective >
/// Numeral > Adverb > Pronoun > closed > intermediate.
int pos_priority(PosTag tag) noexcept;

/// Small bit set over PosTag.
class PosSet {
 public:
  constexpr PosSet() = default;
  constexpr PosSet(std::initializer_list<PosTag> tags) {
    for (PosTag t : tags) insert(t);
  }

  static constexpr PosSet open_classes() {
    return {PosTag::Verb,   PosTag::Pronoun,   PosTag::Noun,
            PosTag::Adverb, PosTag::Adjective, PosTag::Numeral};
  }

  constexpr void insert(PosTag t) { bits_ |= bit(t); }
  constexpr bool contains(PosTag t) const { return (bits_ & bit(t)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool intersects(PosSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(PosSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr std::uint16_t bits() const { return bits_; }

  friend constexpr PosSet operator&(PosSet a, PosSet b) {
    PosSet r;
    r.bits_ = a.bits_ & b.bits_;
    return r;
  }
  friend constexpr bool operator==(PosSet, PosSet) = default;

  /// Members in declaration order.
  std::vector<PosTag> tags() const;

 private:
  static constexpr std::uint16_t bit(PosTag t) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(t));
  }
  std::uint16_t bits_ = 0;
};

}  // namespace uzlem
