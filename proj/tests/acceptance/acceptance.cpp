// Acceptance checks for the lemmatizer. Prints one PASS/FAIL line per
// criterion and exits non-zero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uzlem/oracle.hpp"
#include "uzlem/pipeline.hpp"
#include "uzlem/records.hpp"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;
using namespace uzlem;
using uzlem::testing::data_dir;
using uzlem::testing::fixture_dir;
using uzlem::testing::seed_affixes;
using uzlem::testing::seed_lexicon;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Appends a failure note, keeping the line readable.
void fail(Outcome& o, const std::string& why) {
  if (o.ok || o.detail.size() < 4000) {
    o.detail += (o.detail.empty() ? "" : "; ") + why;
  }
  o.ok = false;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path d = [] {
    auto p = fs::temp_directory_path() /
             ("uzlem_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

Run run_cli(const std::string& args) {
#ifdef UZLEM_CLI_PATH
  const auto out = scratch() / "out.txt";
  const std::string cmd = quote(UZLEM_CLI_PATH) + " " + args + " > " +
                          quote(out) + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
#else
  (void)args;
  return {};
#endif
}

std::string seed_flags() {
  return "--words " + quote(data_dir() / "words.tsv") + " --affixes " +
         quote(data_dir() / "affixes.tsv");
}

// ---------------------------------------------------------------------------

Outcome reference_examples() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto lz = Lemmatizer::from_files(data_dir() / "words.tsv",
                                         data_dir() / "affixes.tsv");
  auto one = [&](const std::string& text) -> std::optional<LemmaResult> {
    auto rs = lz.lemmatize(text);
    if (rs.size() != 1) return std::nullopt;
    return rs[0];
  };
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"o‘qigan", "oʻqimoq"},         {"kitobimning", "kitob"},
      {"kitoblardagina", "kitob"},    {"tillar", "til"},
      {"paxtakorlarga", "paxtakor"},
  };
  for (const auto& [word, lemma] : cases) {
    const auto r = one(word);
    if (!r || r->analysis.status != ResolutionStatus::Resolved ||
        r->analysis.lemma != lemma) {
      fail(o, word + " -> " + (r ? r->analysis.lemma : "<none>"));
    }
  }
  if (const auto r = one("kitobimning")) {
    const auto& tr = r->analysis.trace;
    if (tr.size() != 2 || tr[0].affix_class != AffixClass::Grammatical ||
        tr[1].affix_class != AffixClass::Grammatical) {
      fail(o, "kitobimning not stripped in the grammatical stage");
    }
  }
  for (const std::string w : {"va", "ham", "uchun"}) {
    const auto r = one(w);
    if (!r || r->analysis.lemma != w || !r->analysis.trace.empty() ||
        r->analysis.status != ResolutionStatus::Resolved) {
      fail(o, w + " not resolved by lookup");
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 1.0) fail(o, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "11 cases, " + std::to_string(secs) + " s";
  return o;
}

Outcome idempotence() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& e : seed_lexicon().entries()) {
    ++n;
    const auto a = run_fsm(e.lemma, seed_affixes(), seed_lexicon());
    if (a.status != ResolutionStatus::Resolved || a.lemma != e.lemma) {
      fail(o, e.lemma + " -> " + a.lemma);
    }
  }
  if (o.ok) o.detail = std::to_string(n) + "/" + std::to_string(n) + " lemmas";
  return o;
}

// lemma (verbs without -moq) + optional derivational + optional lexical +
// up to two distinct grammatical suffixes, inner to outer, every allomorph.
std::vector<std::string> generated_forms() {
  const auto& store = seed_affixes();
  std::set<std::string> forms;
  for (const auto& lemma : seed_lexicon().entries()) {
    if (!lemma.takes_affixes) continue;
    std::string base = lemma.lemma;
    if (lemma.pos == PosTag::Verb) base.resize(base.size() - 3);

    std::vector<const AffixEntry*> der, lex, gram;
    for (const auto& a : store.entries()) {
      if (!a.strip || a.position != AffixPosition::Suffix ||
          !a.applies_to.contains(lemma.pos)) {
        continue;
      }
      auto& bucket = a.affix_class == AffixClass::Derivational ? der
                     : a.affix_class == AffixClass::Lexical    ? lex
                                                               : gram;
      bucket.push_back(&a);
    }
    auto forms_of = [](const std::vector<const AffixEntry*>& bucket) {
      std::vector<std::string> out{""};
      for (const auto* a : bucket) {
        out.insert(out.end(), a->surface_forms.begin(), a->surface_forms.end());
      }
      return out;
    };
    std::vector<std::string> gram_tails{""};
    for (const auto* a : gram) {
      for (const auto& f : a->surface_forms) {
        gram_tails.push_back(f);
        for (const auto* b : gram) {
          if (b == a) continue;
          for (const auto& g : b->surface_forms) gram_tails.push_back(f + g);
        }
      }
    }
    for (const auto& d : forms_of(der)) {
      for (const auto& l : forms_of(lex)) {
        for (const auto& g : gram_tails) forms.insert(base + d + l + g);
      }
    }
  }
  return {forms.begin(), forms.end()};
}

Outcome oracle_equivalence(const std::vector<std::string>& forms) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t agree = 0;
  for (const auto& w : forms) {
    const auto a = run_fsm(w, seed_affixes(), seed_lexicon());
    const auto want = oracle_lemmatize(w, seed_lexicon(), seed_affixes());
    const bool same = a.status == ResolutionStatus::Resolved
                          ? want == a.lemma
                          : !want.has_value();
    if (same) {
      ++agree;
    } else {
      fail(o, w + ": fsm " +
                  (a.status == ResolutionStatus::Resolved ? a.lemma : "<none>") +
                  ", oracle " + want.value_or("<none>"));
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 60.0) fail(o, "took " + std::to_string(secs) + " s");
  const std::string tally = std::to_string(agree) + "/" +
                            std::to_string(forms.size()) + " forms agree, " +
                            std::to_string(secs) + " s";
  o.detail = o.ok ? tally : tally + "; " + o.detail;
  return o;
}

bool reconstructs(const std::string& normalized, const Analysis& a) {
  std::string s = a.stem;
  for (auto it = a.trace.rbegin(); it != a.trace.rend(); ++it) s += it->removed;
  return s == normalized;
}

Outcome trace_reconstruction(const std::vector<std::string>& forms) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& w : forms) {
    ++n;
    if (!reconstructs(w, run_fsm(w, seed_affixes(), seed_lexicon()))) {
      fail(o, w);
    }
  }
  for (const auto& r : lemmatize_text(slurp(fixture_dir() / "corpus_1000.txt"),
                                      seed_lexicon(), seed_affixes())) {
    ++n;
    if (!reconstructs(r.token.normalized, r.analysis)) {
      fail(o, r.token.surface);
    }
  }
  if (o.ok) o.detail = std::to_string(n) + "/" + std::to_string(n) + " results";
  return o;
}

Outcome tokenizer_contract() {
  Outcome o;
  const auto text = slurp(fixture_dir() / "tokenizer_punct_numbers.txt");
  const auto rs = lemmatize_text(text, seed_lexicon(), seed_affixes());
  std::size_t non_word = 0;
  for (const auto& r : rs) {
    if (r.token.kind != TokenKind::Word || !is_normalized_word(r.token.normalized)) {
      ++non_word;
      fail(o, "record for '" + r.token.surface + "'");
    }
  }
  // Same through the CLI.
  const auto cli = run_cli("lemmatize --input " +
                           quote(fixture_dir() / "tokenizer_punct_numbers.txt") +
                           " " + seed_flags());
  if (cli.code != 0) fail(o, "cli exit " + std::to_string(cli.code));
  std::istringstream lines(cli.out);
  std::size_t cli_rows = 0;
  for (std::string line; std::getline(lines, line); ++cli_rows) {
    const auto tok = line.substr(0, line.find('\t'));
    for (const char* bad : {".", ",", "!", "12", "2022", "12,5", ".,!"}) {
      if (tok == bad) fail(o, "cli record for '" + tok + "'");
    }
  }
  if (cli_rows != rs.size()) fail(o, "cli row count differs");
  if (o.ok) {
    o.detail = std::to_string(rs.size()) + " word records, " +
               std::to_string(non_word) + " non-word";
  }
  return o;
}

// A store whose cell counts equal the manifest exactly.
std::string synthetic_store(const AffixManifest& manifest) {
  std::ostringstream out;
  int serial = 0;
  auto fresh = [&serial] {
    std::string s;
    for (int n = serial++; ; n /= 26) {
      s += static_cast<char>('a' + n % 26);
      if (n < 26) break;
    }
    return "q" + s;
  };
  for (const auto& [cell, counts] : manifest.expected) {
    const auto pos = pos_code(cell.first);
    const auto cls = affix_class_code(cell.second);
    std::size_t extra = counts.allomorphs - counts.suffixes;
    for (std::size_t i = 0; i < counts.suffixes; ++i) {
      const std::string id = "syn_" + std::string(pos) + "_" +
                             std::string(cls) + "_" + std::to_string(i);
      std::size_t forms = 1;
      if (i + 1 == counts.suffixes) forms += extra;
      for (std::size_t k = 0; k < forms; ++k) {
        out << id << '\t' << fresh() << '\t' << cls << "\tSUF\t" << pos
            << "\t1\n";
      }
    }
  }
  return out.str();
}

Outcome manifest_validation() {
  Outcome o;
  const auto manifest_path = data_dir() / "affix_manifest.tsv";
  const auto r = run_cli("validate " + seed_flags() + " --manifest " +
                         quote(manifest_path));
  const std::vector<std::string> expected = {
      "VERB\tDER\texpected 26 (33)",  "VERB\tLEX\texpected 36 (64)",
      "VERB\tGRAM\texpected 35 (47)", "NOUN\tDER\texpected 90 (103)",
      "NOUN\tLEX\texpected 21 (26)",  "NOUN\tGRAM\texpected 14 (21)",
      "ADV\tDER\texpected 18 (22)",   "ADJ\tDER\texpected 58 (75)",
      "ADJ\tLEX\texpected 4 (5)",     "NUM\tLEX\texpected 13 (14)",
  };
  for (const auto& cell : expected) {
    if (r.out.find(cell) == std::string::npos) fail(o, "missing '" + cell + "'");
  }
  if (r.code != 4) fail(o, "seed store exit " + std::to_string(r.code));

  const auto synth = scratch() / "synthetic_affixes.tsv";
  std::ofstream(synth) << synthetic_store(
      AffixManifest::load_file(manifest_path));
  const auto s = run_cli("validate --words " + quote(data_dir() / "words.tsv") +
                         " --affixes " + quote(synth) + " --manifest " +
                         quote(manifest_path));
  if (s.code != 0) fail(o, "synthetic store exit " + std::to_string(s.code));
  if (o.ok) o.detail = "10 cells verbatim, seed exit 4, synthetic exit 0";
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto corpus = fixture_dir() / "corpus_1000.txt";
  std::size_t words = lemmatize_text(slurp(corpus), seed_lexicon(),
                                     seed_affixes()).size();
  if (words < 1000) fail(o, "fixture has " + std::to_string(words) + " words");
  for (const std::string fmt : {"tsv", "json"}) {
    const std::string args = "lemmatize --trace --format " + fmt + " --input " +
                             quote(corpus) + " " + seed_flags();
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    if (a.code != 0 || b.code != 0) fail(o, fmt + " run failed");
    if (a.out != b.out) fail(o, fmt + " output differs between runs");
    if (a.out.empty()) fail(o, fmt + " output empty");
  }
  const auto seq = lemmatize_text(slurp(corpus), seed_lexicon(), seed_affixes());
  if (lemmatize_text_parallel(slurp(corpus), seed_lexicon(), seed_affixes(),
                              4) != seq) {
    fail(o, "parallel run differs");
  }
  if (o.ok) o.detail = std::to_string(words) + " tokens, tsv and json identical";
  return o;
}

}  // namespace

int main() {
  const auto forms = generated_forms();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"reference-examples", reference_examples},
      {"idempotence", idempotence},
      {"oracle-equivalence", [&] { return oracle_equivalence(forms); }},
      {"trace-reconstruction", [&] { return trace_reconstruction(forms); }},
      {"tokenizer-contract", tokenizer_contract},
      {"manifest-validation", manifest_validation},
      {"determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : checks) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail
              << std::endl;
  }
  std::error_code ec;
  fs::remove_all(scratch(), ec);
  return failures == 0 ? 0 : 1;
}
