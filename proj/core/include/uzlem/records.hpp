#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "uzlem/pipeline.hpp"

namespace uzlem {

/// Flat, serializable view of a LemmaResult (byte spans dropped).
struct OutputRecord {
  std::string token;   // surface as written in the input
  std::string lemma;
  std::string pos;     // first candidate's code, or "-"
  std::string status;  // "resolved" | "unresolved"
  std::vector<std::string> trace;  // "allomorph/CLASS", removal order

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord to_record(const LemmaResult& result, bool with_trace);

std::vector<OutputRecord> to_records(std::span<const LemmaResult> results,
                                     bool with_trace);

/// One line per record: token, lemma, pos, status, trace (items joined by
/// ';', empty when absent). Always five tab-separated fields.
void write_tsv(std::ostream& out, std::span<const OutputRecord> records);

/// `[{"token":..,"lemma":..,"pos":..,"status":..,"trace":[..]}, ...]`,
/// compact, UTF-8 unescaped, newline-terminated.
void write_json(std::ostream& out, std::span<const OutputRecord> records);

}  // namespace uzlem
