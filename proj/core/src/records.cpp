#include "uzlem/records.hpp"

#include <ostream>

#include "json.hpp"

namespace uzlem {

OutputRecord to_record(const LemmaResult& result, bool with_trace) {
  const Analysis& a = result.analysis;
  OutputRecord rec;
  rec.token = result.token.surface;
  rec.lemma = a.lemma;
  rec.pos = a.pos_candidates.empty() ? "-"
                                     : std::string(pos_code(a.pos_candidates.front()));
  rec.status = std::string(to_string(a.status));
  if (with_trace) {
    for (const auto& step : a.trace) {
      rec.trace.push_back(step.removed + "/" +
                          std::string(affix_class_code(step.affix_class)));
    }
  }
  return rec;
}

std::vector<OutputRecord> to_records(std::span<const LemmaResult> results,
                                     bool with_trace) {
  std::vector<OutputRecord> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(to_record(r, with_trace));
  return out;
}

void write_tsv(std::ostream& out, std::span<const OutputRecord> records) {
  for (const auto& r : records) {
    out << r.token << '\t' << r.lemma << '\t' << r.pos << '\t' << r.status
        << '\t';
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      if (i > 0) out << ';';
      out << r.trace[i];
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, std::span<const OutputRecord> records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["token"] = r.token;
    obj["lemma"] = r.lemma;
    obj["pos"] = r.pos;
    obj["status"] = r.status;
    obj["trace"] = r.trace;
    arr.push_back(std::move(obj));
  }
  out << arr.dump() << '\n';
}

}  // namespace uzlem
