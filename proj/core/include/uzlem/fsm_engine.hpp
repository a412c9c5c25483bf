#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uzlem/affix_store.hpp"
#include "uzlem/lexicon.hpp"
#include "uzlem/pos.hpp"

namespace uzlem {

enum class Stage {
  Start,
  GrammaticalDone,
  LexicalStripping,
  DerivationalStripping,
  Accept,
};

std::string_view to_string(Stage stage) noexcept;

struct FsmState {
  int id = 0;
  Stage stage = Stage::Start;
};

enum class TransitionKind {
  MultiAffix,   // removes one or more suffixes of its class
  SingleAffix,  // removes exactly one suffix
  Epsilon,      // removes nothing
};

struct Transition {
  int from = 0;
  int to = 0;
  TransitionKind kind = TransitionKind::Epsilon;
  AffixClass affix_class = AffixClass::Grammatical;  // unused for Epsilon
};

/// States plus class-labelled transitions. The constructor rejects tables
/// where a transition goes back to an earlier stage, a MultiAffix label uses
/// a class other than Grammatical, or ids are dangling.
class StrippingFsm {
 public:
  StrippingFsm(std::vector<FsmState> states,
               std::vector<Transition> transitions, int start);

  /// Start -GRAM*-> GrammaticalDone -> LEX* -> DER* -> Accept, with an
  /// epsilon edge out of each stage for when its class is absent.
  static const StrippingFsm& standard();

  std::span<const FsmState> states() const noexcept { return states_; }
  std::span<const Transition> transitions() const noexcept {
    return transitions_;
  }
  int start() const noexcept { return start_; }
  const FsmState& state(int id) const { return states_.at(index_of(id)); }

  /// Indices into transitions() leaving `state_id`, declaration order.
  std::vector<std::size_t> outgoing(int state_id) const;

  /// `state_id` followed by everything reachable through epsilon edges,
  /// breadth-first.
  std::vector<int> epsilon_closure(int state_id) const;

 private:
  std::size_t index_of(int id) const;

  std::vector<FsmState> states_;
  std::vector<Transition> transitions_;
  int start_;
};

struct StripStep {
  std::string removed;
  std::string affix_id;
  AffixClass affix_class = AffixClass::Grammatical;
  std::string stem_after;

  friend bool operator==(const StripStep&, const StripStep&) = default;
};

enum class ResolutionStatus { Resolved, Unresolved };

std::string_view to_string(ResolutionStatus status) noexcept;

/// Outcome of stripping one word.
struct Analysis {
  std::string lemma;
  std::string stem;  // after the last removal, before -moq restoration
  std::vector<PosTag> pos_candidates;  // priority order; empty if Unresolved
  std::vector<StripStep> trace;        // removal order, rightmost first
  ResolutionStatus status = ResolutionStatus::Unresolved;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

/// Intersection of the two sets, or all open classes when it is empty.
PosSet narrow_hint(PosSet hint, PosSet applies_to) noexcept;

/// Repeatedly removes the longest grammatical suffix until none matches.
/// When a hint is given it is narrowed after every removal.
std::pair<std::string, std::vector<StripStep>> strip_grammatical(
    std::string_view word, const AffixStore& store,
    std::optional<PosSet> pos_hint = std::nullopt);

/// Removes the single longest suffix of `cls` (Lexical or Derivational).
/// Throws std::invalid_argument for Grammatical.
std::optional<std::pair<std::string, StripStep>> strip_one(
    std::string_view word, const AffixStore& store, AffixClass cls,
    std::optional<PosSet> pos_hint = std::nullopt);

/// stem + "moq", unless stem already ends in "moq".
std::string restore_infinitive(std::string_view stem);

/// Strips `word` through the machine, consulting the lexicon at the start
/// and after every removal. Alternative suffix choices are explored
/// breadth-first, so the first lexicon hit uses the fewest removals; among
/// hits at that depth the best POS priority wins, then the smaller lemma.
/// A candidate reached by removing affixes must allow affixes; a -moq
/// restored candidate must be a verb.
///
/// When nothing is found the result is Unresolved and follows the greedy
/// path (longest suffix at every transition).
Analysis run_fsm(std::string_view word, const AffixStore& store,
                 const Lexicon& lex,
                 const StrippingFsm& fsm = StrippingFsm::standard());

}  // namespace uzlem
