#include "uzlem/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "tsv.hpp"
#include "uzlem/errors.hpp"
#include "uzlem/text_normalizer.hpp"

namespace uzlem {

namespace {

bool by_priority(const LexiconEntry& a, const LexiconEntry& b) {
  return pos_priority(a.pos) < pos_priority(b.pos);
}

}  // namespace

Lexicon Lexicon::load(std::istream& in, std::string source_name) {
  Lexicon lex;
  tsv::for_each_row(in, [&](std::size_t line,
                            const std::vector<std::string>& f) {
    auto fail = [&](const std::string& msg) {
      throw LoadError(source_name, line, msg);
    };
    if (f.size() != 3) {
      fail("expected 3 columns (lemma, POS, takes_affixes), got " +
           std::to_string(f.size()));
    }
    const std::string& lemma = f[0];
    if (!is_normalized_word(lemma)) {
      fail("lemma '" + lemma + "' is not a single normalized word");
    }
    const auto pos = parse_pos_code(f[1]);
    if (!pos) fail("unknown POS tag '" + f[1] + "'");
    if (f[2] != "0" && f[2] != "1") {
      fail("takes_affixes must be 0 or 1, got '" + f[2] + "'");
    }
    const bool takes_affixes = f[2] == "1";
    if (takes_affixes && word_class(*pos) == WordClass::Closed) {
      fail("closed-class word '" + lemma + "' (" + f[1] +
           ") marked as taking affixes; closed word classes never get affix");
    }
    if (*pos == PosTag::Verb && !lemma.ends_with("moq")) {
      fail("verb lemma '" + lemma + "' must be in -moq infinitive form");
    }

    auto& bucket = lex.by_lemma_[lemma];
    const bool dup = std::any_of(bucket.begin(), bucket.end(),
                                 [&](const auto& e) { return e.pos == *pos; });
    if (dup) return;
    bucket.push_back({lemma, *pos, takes_affixes});
    std::stable_sort(bucket.begin(), bucket.end(), by_priority);
    ++lex.size_;
    ++lex.per_pos_[static_cast<std::size_t>(*pos)];
  });
  return lex;
}

Lexicon Lexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), 0, "cannot open words file");
  return load(in, path.string());
}

std::span<const LexiconEntry> Lexicon::lookup(std::string_view form) const {
  const auto it = by_lemma_.find(form);
  if (it == by_lemma_.end()) return {};
  return it->second;
}

std::vector<LexiconEntry> Lexicon::entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(size_);
  for (const auto& [lemma, bucket] : by_lemma_) {
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.lemma != b.lemma) return a.lemma < b.lemma;
    return by_priority(a, b);
  });
  return out;
}

void Lexicon::dump(std::ostream& out) const {
  for (const auto& e : entries()) {
    out << e.lemma << '\t' << pos_code(e.pos) << '\t'
        << (e.takes_affixes ? '1' : '0') << '\n';
  }
}

}  // namespace uzlem
