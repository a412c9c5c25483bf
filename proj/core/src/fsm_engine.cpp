#include "uzlem/fsm_engine.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace uzlem {

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::Start:
      return "start";
    case Stage::GrammaticalDone:
      return "grammatical-done";
    case Stage::LexicalStripping:
      return "lexical-stripping";
    case Stage::DerivationalStripping:
      return "derivational-stripping";
    case Stage::Accept:
      return "accept";
  }
  return "?";
}

std::string_view to_string(ResolutionStatus status) noexcept {
  return status == ResolutionStatus::Resolved ? "resolved" : "unresolved";
}

// ---------------------------------------------------------------------------
// StrippingFsm

StrippingFsm::StrippingFsm(std::vector<FsmState> states,
                           std::vector<Transition> transitions, int start)
    : states_(std::move(states)),
      transitions_(std::move(transitions)),
      start_(start) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = i + 1; j < states_.size(); ++j) {
      if (states_[i].id == states_[j].id) {
        throw std::invalid_argument("duplicate FSM state id " +
                                    std::to_string(states_[i].id));
      }
    }
  }
  if (state(start_).stage != Stage::Start) {
    throw std::invalid_argument("FSM start state must be in the Start stage");
  }
  for (const auto& t : transitions_) {
    const Stage from = state(t.from).stage;
    const Stage to = state(t.to).stage;
    if (to < from) {
      throw std::invalid_argument("FSM transition " + std::to_string(t.from) +
                                  "->" + std::to_string(t.to) +
                                  " returns to an earlier stage");
    }
    if (t.kind == TransitionKind::MultiAffix &&
        t.affix_class != AffixClass::Grammatical) {
      throw std::invalid_argument(
          "multi-affix transitions are only defined for grammatical suffixes");
    }
    if (t.kind == TransitionKind::Epsilon && t.from == t.to) {
      throw std::invalid_argument("epsilon self-loop on state " +
                                  std::to_string(t.from));
    }
  }
}

const StrippingFsm& StrippingFsm::standard() {
  static const StrippingFsm fsm(
      {
          {0, Stage::Start},
          {1, Stage::GrammaticalDone},
          {2, Stage::LexicalStripping},
          {3, Stage::DerivationalStripping},
          {4, Stage::Accept},
      },
      {
          {0, 1, TransitionKind::MultiAffix, AffixClass::Grammatical},
          {0, 1, TransitionKind::Epsilon},
          {1, 2, TransitionKind::Epsilon},
          {2, 2, TransitionKind::SingleAffix, AffixClass::Lexical},
          {2, 3, TransitionKind::Epsilon},
          {3, 3, TransitionKind::SingleAffix, AffixClass::Derivational},
          {3, 4, TransitionKind::Epsilon},
      },
      0);
  return fsm;
}

std::size_t StrippingFsm::index_of(int id) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].id == id) return i;
  }
  throw std::invalid_argument("unknown FSM state id " + std::to_string(id));
}

std::vector<std::size_t> StrippingFsm::outgoing(int state_id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    if (transitions_[i].from == state_id) out.push_back(i);
  }
  return out;
}

std::vector<int> StrippingFsm::epsilon_closure(int state_id) const {
  std::vector<int> closure{state_id};
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (std::size_t t : outgoing(closure[i])) {
      const auto& tr = transitions_[t];
      if (tr.kind != TransitionKind::Epsilon) continue;
      if (std::find(closure.begin(), closure.end(), tr.to) == closure.end()) {
        closure.push_back(tr.to);
      }
    }
  }
  return closure;
}

// ---------------------------------------------------------------------------
// Primitive operations

PosSet narrow_hint(PosSet hint, PosSet applies_to) noexcept {
  const PosSet narrowed = hint & applies_to;
  return narrowed.empty() ? PosSet::open_classes() : narrowed;
}

namespace {

StripStep make_step(std::string_view word, const SuffixMatch& m) {
  return {std::string(m.allomorph), m.entry->id, m.entry->affix_class,
          std::string(word.substr(0, word.size() - m.allomorph.size()))};
}

}  // namespace

std::pair<std::string, std::vector<StripStep>> strip_grammatical(
    std::string_view word, const AffixStore& store,
    std::optional<PosSet> pos_hint) {
  std::string stem(word);
  std::vector<StripStep> steps;
  while (true) {
    const auto matches =
        store.match_suffixes(stem, AffixClass::Grammatical, pos_hint);
    if (matches.empty()) break;
    steps.push_back(make_step(stem, matches.front()));
    if (pos_hint) *pos_hint = narrow_hint(*pos_hint, matches.front().entry->applies_to);
    stem = steps.back().stem_after;
  }
  return {std::move(stem), std::move(steps)};
}

std::optional<std::pair<std::string, StripStep>> strip_one(
    std::string_view word, const AffixStore& store, AffixClass cls,
    std::optional<PosSet> pos_hint) {
  if (cls == AffixClass::Grammatical) {
    throw std::invalid_argument(
        "strip_one handles lexical and derivational suffixes only");
  }
  const auto matches = store.match_suffixes(word, cls, pos_hint);
  if (matches.empty()) return std::nullopt;
  StripStep step = make_step(word, matches.front());
  std::string stem = step.stem_after;
  return std::make_pair(std::move(stem), std::move(step));
}

std::string restore_infinitive(std::string_view stem) {
  std::string out(stem);
  if (!out.ends_with("moq")) out += "moq";
  return out;
}

// ---------------------------------------------------------------------------
// run_fsm

namespace {

struct Hit {
  std::string lemma;
  std::vector<PosTag> pos;
  int rank = 0;  // best POS priority

  bool better_than(const Hit& o) const {
    return std::tie(rank, lemma) < std::tie(o.rank, o.lemma);
  }
};

// Lexicon check at one point of the walk. `after_removal` gates out entries
// that never take affixes.
std::optional<Hit> lookup_point(std::string_view stem, bool after_removal,
                                const Lexicon& lex) {
  auto collect = [&](std::string_view form, bool verbs_only) {
    std::optional<Hit> hit;
    for (const auto& e : lex.lookup(form)) {
      if (after_removal && !e.takes_affixes) continue;
      if (verbs_only && e.pos != PosTag::Verb) continue;
      if (!hit) hit = Hit{std::string(form), {}, pos_priority(e.pos)};
      hit->pos.push_back(e.pos);
    }
    return hit;
  };
  std::optional<Hit> best = collect(stem, false);
  const std::string restored = restore_infinitive(stem);
  if (restored != stem) {
    if (auto r = collect(restored, true); r && (!best || r->better_than(*best))) {
      best = std::move(r);
    }
  }
  return best;
}

struct Config {
  int state;
  std::string stem;
  PosSet hint;
  int multi;   // active MultiAffix transition index, -1 if none
  int parent;  // index into the arena, -1 for the root
  StripStep step;
};

using ConfigKey = std::tuple<int, std::string, std::uint16_t, int>;

struct KeyHash {
  std::size_t operator()(const ConfigKey& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(std::get<1>(k));
    h ^= static_cast<std::size_t>(std::get<0>(k)) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::size_t>(std::get<2>(k)) << 7;
    h ^= static_cast<std::size_t>(std::get<3>(k) + 1) << 23;
    return h;
  }
};

std::vector<StripStep> trace_of(const std::vector<Config>& arena, int idx) {
  std::vector<StripStep> trace;
  for (int i = idx; arena[i].parent >= 0; i = arena[i].parent) {
    trace.push_back(arena[i].step);
  }
  std::reverse(trace.begin(), trace.end());
  return trace;
}

// Longest suffix at every transition; used for the Unresolved fallback.
Analysis greedy_walk(std::string_view word, const AffixStore& store,
                     const StrippingFsm& fsm) {
  Analysis out;
  std::string stem(word);
  PosSet hint = PosSet::open_classes();
  int state = fsm.start();
  while (fsm.state(state).stage != Stage::Accept) {
    std::optional<int> epsilon_to;
    bool moved = false;
    for (std::size_t t : fsm.outgoing(state)) {
      const auto& tr = fsm.transitions()[t];
      if (tr.kind == TransitionKind::Epsilon) {
        if (!epsilon_to) epsilon_to = tr.to;
        continue;
      }
      if (tr.kind == TransitionKind::MultiAffix) {
        auto [next, steps] = strip_grammatical(stem, store, hint);
        if (steps.empty()) continue;
        for (const auto& s : steps) {
          hint = narrow_hint(hint, store.find(s.affix_id)->applies_to);
        }
        out.trace.insert(out.trace.end(), steps.begin(), steps.end());
        stem = std::move(next);
      } else {
        const auto matches = store.match_suffixes(stem, tr.affix_class, hint);
        if (matches.empty()) continue;
        out.trace.push_back(make_step(stem, matches.front()));
        hint = narrow_hint(hint, matches.front().entry->applies_to);
        stem = out.trace.back().stem_after;
      }
      state = tr.to;
      moved = true;
      break;
    }
    if (!moved) {
      if (!epsilon_to) break;
      state = *epsilon_to;
    }
  }
  out.stem = stem;
  out.lemma = stem;
  out.status = ResolutionStatus::Unresolved;
  return out;
}

}  // namespace

Analysis run_fsm(std::string_view word, const AffixStore& store,
                 const Lexicon& lex, const StrippingFsm& fsm) {
  auto resolved = [](std::string stem, Hit hit, std::vector<StripStep> trace) {
    Analysis a;
    a.lemma = std::move(hit.lemma);
    a.stem = std::move(stem);
    a.pos_candidates = std::move(hit.pos);
    a.trace = std::move(trace);
    a.status = ResolutionStatus::Resolved;
    return a;
  };

  if (auto hit = lookup_point(word, false, lex)) {
    return resolved(std::string(word), std::move(*hit), {});
  }

  std::vector<Config> arena;
  std::unordered_set<ConfigKey, KeyHash> seen;
  arena.push_back(
      {fsm.start(), std::string(word), PosSet::open_classes(), -1, -1, {}});
  seen.insert({fsm.start(), std::string(word),
               PosSet::open_classes().bits(), -1});
  std::vector<int> level{0};

  const auto transitions = fsm.transitions();
  while (!level.empty()) {
    std::vector<int> next_level;
    auto expand = [&](int parent, std::size_t t_idx) {
      const Transition& tr = transitions[t_idx];
      // Copy: arena may reallocate while we push children.
      const std::string stem = arena[parent].stem;
      const PosSet hint = arena[parent].hint;
      for (const auto& m : store.match_suffixes(stem, tr.affix_class, hint)) {
        Config c{tr.to,
                 std::string(stem.substr(0, stem.size() - m.allomorph.size())),
                 narrow_hint(hint, m.entry->applies_to),
                 tr.kind == TransitionKind::MultiAffix
                     ? static_cast<int>(t_idx)
                     : -1,
                 parent,
                 make_step(stem, m)};
        if (!seen.insert({c.state, c.stem, c.hint.bits(), c.multi}).second) {
          continue;
        }
        arena.push_back(std::move(c));
        next_level.push_back(static_cast<int>(arena.size() - 1));
      }
    };

    for (int idx : level) {
      if (arena[idx].multi >= 0) {
        expand(idx, static_cast<std::size_t>(arena[idx].multi));
      }
      for (int s : fsm.epsilon_closure(arena[idx].state)) {
        for (std::size_t t : fsm.outgoing(s)) {
          if (transitions[t].kind != TransitionKind::Epsilon) expand(idx, t);
        }
      }
    }

    std::optional<Hit> best;
    int best_idx = -1;
    for (int idx : next_level) {
      auto hit = lookup_point(arena[idx].stem, true, lex);
      if (hit && (!best || hit->better_than(*best))) {
        best = std::move(hit);
        best_idx = idx;
      }
    }
    if (best) {
      return resolved(arena[best_idx].stem, std::move(*best),
                      trace_of(arena, best_idx));
    }
    level = std::move(next_level);
  }

  return greedy_walk(word, store, fsm);
}

}  // namespace uzlem
