// uzlem: batch lemmatizer for Uzbek (Latin script).
//
//   uzlem lemmatize --words W --affixes A [--input F] [--format tsv|json] [--trace]
//   uzlem validate  --words W --affixes A [--manifest M]
//
// Exit codes: 0 ok, 1 data-file load error, 2 bad flags, 3 input encoding
// error, 4 manifest mismatch.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "uzlem/affix_store.hpp"
#include "uzlem/errors.hpp"
#include "uzlem/lexicon.hpp"
#include "uzlem/pipeline.hpp"
#include "uzlem/records.hpp"

namespace {

constexpr int kExitLoad = 1;
constexpr int kExitFlags = 2;
constexpr int kExitEncoding = 3;
constexpr int kExitManifest = 4;

struct Options {
  std::string words;
  std::string affixes;
  std::string input;
  std::string format = "tsv";
  bool trace = false;
  std::string manifest;
};

int run_lemmatize(const Options& opt) {
  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
      std::cerr << "uzlem: cannot open input file " << opt.input << '\n';
      return kExitFlags;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  const auto lemmatizer = uzlem::Lemmatizer::from_files(opt.words, opt.affixes);
  std::vector<uzlem::LemmaResult> results;
  try {
    results = lemmatizer.lemmatize(text);
  } catch (const uzlem::EncodingError& e) {
    std::cerr << "uzlem: " << (opt.input.empty() ? "<stdin>" : opt.input)
              << ": " << e.what() << '\n';
    return kExitEncoding;
  }

  const auto records = uzlem::to_records(results, opt.trace);
  if (opt.format == "json") {
    uzlem::write_json(std::cout, records);
  } else {
    uzlem::write_tsv(std::cout, records);
  }

  std::size_t resolved = 0;
  for (const auto& r : results) {
    if (r.analysis.status == uzlem::ResolutionStatus::Resolved) ++resolved;
  }
  std::cerr << "tokens: " << results.size() << ", resolved: " << resolved
            << '\n';
  return 0;
}

int run_validate(const Options& opt) {
  const auto lex = uzlem::Lexicon::load_file(opt.words);
  const auto store = uzlem::AffixStore::load_file(opt.affixes);

  std::cout << "words\t" << lex.size() << '\n';
  for (auto pos : uzlem::kAllPosTags) {
    if (lex.count(pos) > 0) {
      std::cout << "words\t" << uzlem::pos_code(pos) << '\t' << lex.count(pos)
                << '\n';
    }
  }
  std::cout << "affixes\t" << store.entries().size() << '\n';
  for (const auto& [cell, counts] : store.count_table()) {
    std::cout << "affixes\t" << uzlem::pos_code(cell.first) << '\t'
              << uzlem::affix_class_code(cell.second) << '\t'
              << counts.suffixes << " (" << counts.allomorphs << ")\n";
  }

  if (opt.manifest.empty()) return 0;
  const auto manifest = uzlem::AffixManifest::load_file(opt.manifest);
  const auto report = uzlem::validate_manifest(store, manifest);
  uzlem::print_report(std::cout, report);
  return report.passed ? 0 : kExitManifest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based lemmatizer for Uzbek"};
  app.require_subcommand(1);
  Options opt;

  auto* lem = app.add_subcommand("lemmatize", "Lemmatize text");
  lem->add_option("--words", opt.words, "Words (lexicon) TSV")->required();
  lem->add_option("--affixes", opt.affixes, "Affixes TSV")->required();
  lem->add_option("--input", opt.input, "Input text file (default: stdin)");
  lem->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  lem->add_flag("--trace", opt.trace, "Include stripped-affix traces");

  auto* val = app.add_subcommand("validate", "Check data files");
  val->add_option("--words", opt.words, "Words (lexicon) TSV")->required();
  val->add_option("--affixes", opt.affixes, "Affixes TSV")->required();
  val->add_option("--manifest", opt.manifest, "Expected per-cell affix counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFlags;
  }

  try {
    if (*lem) return run_lemmatize(opt);
    return run_validate(opt);
  } catch (const uzlem::LoadError& e) {
    std::cerr << "uzlem: " << e.what() << '\n';
    return kExitLoad;
  }
}
