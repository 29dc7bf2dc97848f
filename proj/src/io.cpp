#include "mmdd/io.hpp"

#include <istream>
#include <limits>
#include <unordered_set>

#include <json.hpp>

#include "mmdd/errors.hpp"

namespace mmdd {

using nlohmann::json;
using nlohmann::ordered_json;

InputFormat parse_format(const std::string& name) {
  if (name == "counts-jsonl") return InputFormat::counts_jsonl;
  if (name == "tokens-jsonl") return InputFormat::tokens_jsonl;
  throw Error("invalid-format", "unknown input format '" + name + "'");
}

std::string format_name(InputFormat fmt) {
  return fmt == InputFormat::counts_jsonl ? "counts-jsonl" : "tokens-jsonl";
}

namespace {

std::string at_line(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

Count count_value(const json& v, const std::string& attr, std::size_t line_no) {
  if (!v.is_number_integer() || v.is_number_float()) {
    throw Error("invalid-count",
                at_line(line_no, "count for '" + attr + "' is not an integer"));
  }
  const std::int64_t n = v.get<std::int64_t>();
  if (n <= 0 || n > std::numeric_limits<Count>::max()) {
    throw Error("invalid-count",
                at_line(line_no, "count for '" + attr + "' is out of range"));
  }
  return static_cast<Count>(n);
}

}  // namespace

Record parse_record_line(const std::string& line, InputFormat fmt,
                         std::size_t line_no) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error("parse", at_line(line_no, e.what()));
  }
  if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string()) {
    throw Error("parse", at_line(line_no, "record needs a string \"id\""));
  }

  Record rec;
  rec.id = doc["id"].get<std::string>();

  if (fmt == InputFormat::counts_jsonl) {
    if (!doc.contains("attrs") || !doc["attrs"].is_object()) {
      throw Error("parse", at_line(line_no, "record needs an \"attrs\" object"));
    }
    std::vector<Multiset::Entry> entries;
    for (const auto& [attr, v] : doc["attrs"].items()) {
      entries.emplace_back(attr, count_value(v, attr, line_no));
    }
    rec.attrs = Multiset::from_pairs(std::move(entries));
  } else {
    if (!doc.contains("tokens") || !doc["tokens"].is_array()) {
      throw Error("parse", at_line(line_no, "record needs a \"tokens\" array"));
    }
    std::vector<std::string> tokens;
    for (const auto& t : doc["tokens"]) {
      if (!t.is_string()) {
        throw Error("parse", at_line(line_no, "tokens must be strings"));
      }
      tokens.push_back(t.get<std::string>());
    }
    rec.attrs = Multiset::from_tokens(tokens);
  }
  return rec;
}

std::vector<Record> read_records(std::istream& in, InputFormat fmt) {
  std::vector<Record> records;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Record rec = parse_record_line(line, fmt, line_no);
    if (!seen.insert(rec.id).second) {
      throw Error("id-collision",
                  at_line(line_no, "duplicate record id '" + rec.id + "'"));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string to_counts_jsonl(const Record& rec) {
  ordered_json doc;
  doc["id"] = rec.id;
  ordered_json attrs = ordered_json::object();
  for (const auto& [attr, c] : rec.attrs.entries()) attrs[attr] = c;
  doc["attrs"] = std::move(attrs);
  return doc.dump();
}

std::string pair_to_jsonl(const DuplicatePair& p) {
  ordered_json doc;
  doc["left"] = p.left;
  doc["right"] = p.right;
  doc["delta_value"] = p.delta.value;
  doc["delta_mult"] = p.delta.mult;
  return doc.dump();
}

std::string verdict_to_jsonl(const StreamVerdict& v) {
  ordered_json doc;
  doc["id"] = v.id;
  doc["status"] = v.duplicate ? "duplicate" : "distinct";
  ordered_json matches = ordered_json::array();
  for (const StreamMatch& m : v.matches) {
    ordered_json entry;
    entry["id"] = m.id;
    entry["delta_mult"] = m.delta.mult;
    matches.push_back(std::move(entry));
  }
  doc["matches"] = std::move(matches);
  return doc.dump();
}

}  // namespace mmdd
