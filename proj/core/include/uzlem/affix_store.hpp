#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uzlem/pos.hpp"

namespace uzlem {

enum class AffixClass : std::uint8_t { Derivational, Lexical, Grammatical };

inline constexpr std::array<AffixClass, 3> kAllAffixClasses = {
    AffixClass::Derivational, AffixClass::Lexical, AffixClass::Grammatical};

/// DER, LEX, GRAM.
std::string_view affix_class_code(AffixClass cls) noexcept;
std::optional<AffixClass> parse_affix_class(std::string_view code) noexcept;

/// Position in the stripping order: grammatical suffixes sit rightmost and
/// are removed first, then lexical, then derivational.
int strip_rank(AffixClass cls) noexcept;

enum class AffixPosition : std::uint8_t { Suffix, Prefix };

/// Stems never shrink below this many code points.
inline constexpr std::size_t kMinStemLength = 2;

struct AffixEntry {
  std::string id;
  std::vector<std::string> surface_forms;  // allomorphs, file order
  AffixClass affix_class = AffixClass::Grammatical;
  AffixPosition position = AffixPosition::Suffix;
  PosSet applies_to;
  bool strip = true;

  friend bool operator==(const AffixEntry&, const AffixEntry&) = default;
};

/// One allomorph of one entry found at the end of a word. Points into the
/// AffixStore that produced it.
struct SuffixMatch {
  const AffixEntry* entry = nullptr;
  std::string_view allomorph;
};

struct CellCounts {
  std::size_t suffixes = 0;
  std::size_t allomorphs = 0;

  friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

using CountCell = std::pair<PosTag, AffixClass>;
using CountTable = std::map<CountCell, CellCounts>;

/// The Affixes store.
///
/// File format: UTF-8 TSV, one allomorph per line,
/// `id<TAB>allomorph<TAB>DER|LEX|GRAM<TAB>SUF|PRE<TAB>POS,POS,...<TAB>0|1`.
/// Lines sharing an id form one entry and must agree on every column but the
/// allomorph.
class AffixStore {
 public:
  AffixStore() = default;

  static AffixStore load(std::istream& in, std::string source_name = {});
  static AffixStore load_file(const std::filesystem::path& path);

  /// Sorted by id.
  std::span<const AffixEntry> entries() const noexcept { return entries_; }
  const AffixEntry* find(std::string_view id) const;

  /// Strippable suffix allomorphs of class `cls` that end `word` and leave a
  /// stem of at least kMinStemLength code points. With a hint, only entries
  /// whose applies_to intersects it. Longest allomorph first, then entry id,
  /// then allomorph text.
  std::vector<SuffixMatch> match_suffixes(
      std::string_view word, AffixClass cls,
      std::optional<PosSet> pos_hint = std::nullopt) const;

  /// Suffix entries (and their allomorphs) applicable to `pos` in `cls`.
  /// Prefixes are not counted.
  CellCounts counts(PosTag pos, AffixClass cls) const;

  /// Every non-empty cell.
  CountTable count_table() const;

  void dump(std::ostream& out) const;

 private:
  // Reverse trie over the bytes of strippable suffix allomorphs.
  struct TrieNode {
    std::vector<std::pair<unsigned char, std::uint32_t>> children;  // sorted
    std::vector<std::uint32_t> entries;  // indices into entries_
  };

  void build_index();
  std::uint32_t child(std::uint32_t node, unsigned char byte) const;

  std::vector<AffixEntry> entries_;
  std::vector<TrieNode> trie_;
};

/// Expected per-cell counts, e.g. the published per-class affix totals.
/// File format: `POS<TAB>DER|LEX|GRAM<TAB>suffix_count<TAB>allomorph_count`.
struct AffixManifest {
  CountTable expected;

  static AffixManifest load(std::istream& in, std::string source_name = {});
  static AffixManifest load_file(const std::filesystem::path& path);
};

struct ManifestCell {
  PosTag pos;
  AffixClass affix_class;
  CellCounts expected;
  CellCounts actual;
  bool pass;
};

struct ManifestReport {
  std::vector<ManifestCell> cells;  // ordered by (POS, class)
  bool passed = true;
};

/// Compares every cell named by the manifest or populated in the store; a
/// cell missing from the manifest expects (0, 0).
ManifestReport validate_manifest(const AffixStore& store,
                                 const AffixManifest& manifest);

/// One line per cell: `POS<TAB>CLASS<TAB>expected N (M)<TAB>actual N (M)<TAB>ok|FAIL`.
void print_report(std::ostream& out, const ManifestReport& report);

}  // namespace uzlem
