#include "uzlem/affix_store.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "tsv.hpp"
#include "utf8.hpp"
#include "uzlem/errors.hpp"
#include "uzlem/text_normalizer.hpp"

namespace uzlem {

std::string_view affix_class_code(AffixClass cls) noexcept {
  switch (cls) {
    case AffixClass::Derivational:
      return "DER";
    case AffixClass::Lexical:
      return "LEX";
    case AffixClass::Grammatical:
      return "GRAM";
  }
  return "?";
}

std::optional<AffixClass> parse_affix_class(std::string_view code) noexcept {
  for (AffixClass c : kAllAffixClasses) {
    if (affix_class_code(c) == code) return c;
  }
  return std::nullopt;
}

int strip_rank(AffixClass cls) noexcept {
  switch (cls) {
    case AffixClass::Grammatical:
      return 0;
    case AffixClass::Lexical:
      return 1;
    case AffixClass::Derivational:
      return 2;
  }
  return 3;
}

namespace {

std::string_view position_code(AffixPosition p) {
  return p == AffixPosition::Prefix ? "PRE" : "SUF";
}

}  // namespace

AffixStore AffixStore::load(std::istream& in, std::string source_name) {
  AffixStore store;
  std::map<std::string, AffixEntry, std::less<>> by_id;

  tsv::for_each_row(in, [&](std::size_t line,
                            const std::vector<std::string>& f) {
    auto fail = [&](const std::string& msg) {
      throw LoadError(source_name, line, msg);
    };
    if (f.size() != 6) {
      fail("expected 6 columns (id, allomorph, class, position, pos_list, "
           "strip), got " +
           std::to_string(f.size()));
    }
    const std::string& id = f[0];
    const std::string& form = f[1];
    if (id.empty()) fail("empty affix id");
    if (form.empty()) fail("affix '" + id + "' has an empty allomorph");
    if (!is_normalized_word(form)) {
      fail("allomorph '" + form + "' is not a normalized letter string");
    }

    AffixEntry row;
    row.id = id;
    const auto cls = parse_affix_class(f[2]);
    if (!cls) fail("unknown affix class '" + f[2] + "'");
    row.affix_class = *cls;

    if (f[3] == "SUF") {
      row.position = AffixPosition::Suffix;
    } else if (f[3] == "PRE") {
      row.position = AffixPosition::Prefix;
    } else {
      fail("unknown position '" + f[3] + "' (expected SUF or PRE)");
    }

    if (f[4].empty()) fail("affix '" + id + "' applies to no POS");
    for (const auto& code : tsv::split(f[4], ',')) {
      const auto pos = parse_pos_code(code);
      if (!pos) fail("unknown POS tag '" + code + "'");
      if (word_class(*pos) != WordClass::Open) {
        fail("affix '" + id + "' lists " + code +
             "; only open word classes take affixes");
      }
      row.applies_to.insert(*pos);
    }

    if (f[5] != "0" && f[5] != "1") {
      fail("strip must be 0 or 1, got '" + f[5] + "'");
    }
    row.strip = f[5] == "1";
    if (row.position == AffixPosition::Prefix && row.strip) {
      fail("prefix '" + id + "' marked strippable; prefixes stay in the lemma");
    }

    auto [it, inserted] = by_id.try_emplace(id, row);
    AffixEntry& entry = it->second;
    if (!inserted &&
        (entry.affix_class != row.affix_class ||
         entry.position != row.position || entry.applies_to != row.applies_to ||
         entry.strip != row.strip)) {
      fail("row for affix '" + id + "' disagrees with its earlier rows");
    }
    if (std::find(entry.surface_forms.begin(), entry.surface_forms.end(),
                  form) == entry.surface_forms.end()) {
      entry.surface_forms.push_back(form);
    }
  });

  store.entries_.reserve(by_id.size());
  for (auto& [id, entry] : by_id) store.entries_.push_back(std::move(entry));
  store.build_index();
  return store;
}

AffixStore AffixStore::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), 0, "cannot open affixes file");
  return load(in, path.string());
}

void AffixStore::build_index() {
  trie_.assign(1, TrieNode{});
  for (std::uint32_t idx = 0; idx < entries_.size(); ++idx) {
    const auto& e = entries_[idx];
    if (!e.strip || e.position != AffixPosition::Suffix) continue;
    for (const auto& form : e.surface_forms) {
      std::uint32_t node = 0;
      for (auto it = form.rbegin(); it != form.rend(); ++it) {
        const auto byte = static_cast<unsigned char>(*it);
        std::uint32_t next = child(node, byte);
        if (next == 0) {
          next = static_cast<std::uint32_t>(trie_.size());
          trie_.emplace_back();
          auto& kids = trie_[node].children;
          kids.insert(std::upper_bound(kids.begin(), kids.end(),
                                       std::make_pair(byte, std::uint32_t{0})),
                      {byte, next});
        }
        node = next;
      }
      auto& ids = trie_[node].entries;
      if (std::find(ids.begin(), ids.end(), idx) == ids.end()) {
        ids.push_back(idx);
      }
    }
  }
}

std::uint32_t AffixStore::child(std::uint32_t node, unsigned char byte) const {
  const auto& kids = trie_[node].children;
  const auto it = std::lower_bound(
      kids.begin(), kids.end(), byte,
      [](const auto& kid, unsigned char b) { return kid.first < b; });
  return (it != kids.end() && it->first == byte) ? it->second : 0;
}

const AffixEntry* AffixStore::find(std::string_view id) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const AffixEntry& e, std::string_view key) { return e.id < key; });
  return (it != entries_.end() && it->id == id) ? &*it : nullptr;
}

std::vector<SuffixMatch> AffixStore::match_suffixes(
    std::string_view word, AffixClass cls,
    std::optional<PosSet> pos_hint) const {
  std::vector<SuffixMatch> out;
  if (trie_.empty() || word.empty()) return out;

  std::uint32_t node = 0;
  for (std::size_t depth = 1; depth <= word.size(); ++depth) {
    node = child(node, static_cast<unsigned char>(word[word.size() - depth]));
    if (node == 0) break;
    if (trie_[node].entries.empty()) continue;
    const std::string_view stem = word.substr(0, word.size() - depth);
    if (utf8::length(stem) < kMinStemLength) break;
    const std::string_view allomorph = word.substr(word.size() - depth);
    for (std::uint32_t idx : trie_[node].entries) {
      const AffixEntry& e = entries_[idx];
      if (e.affix_class != cls) continue;
      if (pos_hint && !e.applies_to.intersects(*pos_hint)) continue;
      out.push_back({&e, allomorph});
    }
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto la = utf8::length(a.allomorph);
    const auto lb = utf8::length(b.allomorph);
    if (la != lb) return la > lb;
    if (a.entry->id != b.entry->id) return a.entry->id < b.entry->id;
    return a.allomorph < b.allomorph;
  });
  return out;
}

CellCounts AffixStore::counts(PosTag pos, AffixClass cls) const {
  CellCounts c;
  for (const auto& e : entries_) {
    if (e.position != AffixPosition::Suffix) continue;
    if (e.affix_class != cls || !e.applies_to.contains(pos)) continue;
    ++c.suffixes;
    c.allomorphs += e.surface_forms.size();
  }
  return c;
}

CountTable AffixStore::count_table() const {
  CountTable table;
  for (PosTag pos : kAllPosTags) {
    for (AffixClass cls : kAllAffixClasses) {
      const auto c = counts(pos, cls);
      if (c.suffixes > 0) table[{pos, cls}] = c;
    }
  }
  return table;
}

void AffixStore::dump(std::ostream& out) const {
  for (const auto& e : entries_) {
    std::string pos_list;
    for (PosTag t : e.applies_to.tags()) {
      if (!pos_list.empty()) pos_list += ',';
      pos_list += pos_code(t);
    }
    for (const auto& form : e.surface_forms) {
      out << e.id << '\t' << form << '\t' << affix_class_code(e.affix_class)
          << '\t' << position_code(e.position) << '\t' << pos_list << '\t'
          << (e.strip ? '1' : '0') << '\n';
    }
  }
}

AffixManifest AffixManifest::load(std::istream& in, std::string source_name) {
  AffixManifest manifest;
  tsv::for_each_row(in, [&](std::size_t line,
                            const std::vector<std::string>& f) {
    auto fail = [&](const std::string& msg) {
      throw LoadError(source_name, line, msg);
    };
    if (f.size() != 4) {
      fail("expected 4 columns (pos, class, suffix_count, allomorph_count)");
    }
    const auto pos = parse_pos_code(f[0]);
    if (!pos) fail("unknown POS tag '" + f[0] + "'");
    const auto cls = parse_affix_class(f[1]);
    if (!cls) fail("unknown affix class '" + f[1] + "'");
    auto parse_count = [&](const std::string& s) -> std::size_t {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        fail("count '" + s + "' is not a non-negative integer");
      }
      return std::stoul(s);
    };
    const CellCounts counts{parse_count(f[2]), parse_count(f[3])};
    if (!manifest.expected.emplace(CountCell{*pos, *cls}, counts).second) {
      fail("duplicate manifest cell " + f[0] + "/" + f[1]);
    }
  });
  return manifest;
}

AffixManifest AffixManifest::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), 0, "cannot open manifest file");
  return load(in, path.string());
}

ManifestReport validate_manifest(const AffixStore& store,
                                 const AffixManifest& manifest) {
  CountTable cells = manifest.expected;
  for (const auto& [cell, counts] : store.count_table()) {
    cells.try_emplace(cell, CellCounts{});
  }
  ManifestReport report;
  for (const auto& [cell, _] : cells) {
    const auto it = manifest.expected.find(cell);
    const CellCounts expected =
        it == manifest.expected.end() ? CellCounts{} : it->second;
    const CellCounts actual = store.counts(cell.first, cell.second);
    const bool pass = expected == actual;
    report.cells.push_back({cell.first, cell.second, expected, actual, pass});
    report.passed = report.passed && pass;
  }
  return report;
}

void print_report(std::ostream& out, const ManifestReport& report) {
  for (const auto& c : report.cells) {
    out << pos_code(c.pos) << '\t' << affix_class_code(c.affix_class)
        << "\texpected " << c.expected.suffixes << " ("
        << c.expected.allomorphs << ")\tactual " << c.actual.suffixes << " ("
        << c.actual.allomorphs << ")\t" << (c.pass ? "ok" : "FAIL") << '\n';
  }
  out << (report.passed ? "manifest: pass" : "manifest: FAIL") << '\n';
}

}  // namespace uzlem
