#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mmdd/dedup.hpp"
#include "mmdd/stream.hpp"

// JSON Lines ingestion and serialization for records, duplicate pairs and
// streaming verdicts.
namespace mmdd {

enum class InputFormat { counts_jsonl, tokens_jsonl };

InputFormat parse_format(const std::string& name);  // counts-jsonl | tokens-jsonl
std::string format_name(InputFormat fmt);

// Parses one input line. counts-jsonl: {"id":..., "attrs":{"tok":count}};
// tokens-jsonl: {"id":..., "tokens":["a","a","b"]} with multiplicities
// aggregated. line_no is 1-based and appears in error messages. Counts must
// be positive integers (Error "invalid-count"); anything structurally wrong
// is Error("parse").
Record parse_record_line(const std::string& line, InputFormat fmt,
                         std::size_t line_no);

// Reads every nonblank line; throws Error("id-collision") on repeated ids.
std::vector<Record> read_records(std::istream& in, InputFormat fmt);

// Canonical counts-jsonl form; parsing it back yields an equal record.
std::string to_counts_jsonl(const Record& rec);

std::string pair_to_jsonl(const DuplicatePair& p);
std::string verdict_to_jsonl(const StreamVerdict& v);

}  // namespace mmdd
