#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uzlem/pos.hpp"

namespace uzlem {

struct LexiconEntry {
  std::string lemma;
  PosTag pos = PosTag::Noun;
  bool takes_affixes = false;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// The Words store: lemma -> entries, immutable once loaded.
///
/// File format is UTF-8 TSV, `lemma<TAB>POS<TAB>takes_affixes(0|1)`, with
/// `#` comment lines. Loading rejects:
///  - rows without exactly three columns, unknown POS codes, flags other
///    than 0/1;
///  - lemmas that are not a single normalized word;
///  - closed-class rows with takes_affixes=1;
///  - verbs whose lemma does not end in "moq".
/// Duplicate (lemma, POS) rows collapse to the first occurrence.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon load(std::istream& in, std::string source_name = {});
  static Lexicon load_file(const std::filesystem::path& path);

  /// Entries for `form`, ordered by POS priority; empty when absent.
  std::span<const LexiconEntry> lookup(std::string_view form) const;

  bool contains(std::string_view form) const { return !lookup(form).empty(); }

  std::size_t size() const noexcept { return size_; }
  std::size_t count(PosTag pos) const noexcept {
    return per_pos_[static_cast<std::size_t>(pos)];
  }

  /// All entries sorted by (lemma, priority).
  std::vector<LexiconEntry> entries() const;

  /// Writes the store back in the file format.
  void dump(std::ostream& out) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::unordered_map<std::string, std::vector<LexiconEntry>, Hash,
                     std::equal_to<>>
      by_lemma_;
  std::size_t size_ = 0;
  std::array<std::size_t, kPosTagCount> per_pos_{};
};

}  // namespace uzlem
