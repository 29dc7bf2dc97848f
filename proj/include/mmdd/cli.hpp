#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mmdd/io.hpp"
#include "mmdd/multireal.hpp"

// Command orchestration shared by the mmdedup binary and the tests. run()
// does all the work against abstract streams so it can be exercised without
// spawning a process.
namespace mmdd::cli {

enum class Mode { batch, stream, verify_algebra, verify_topology };

struct Config {
  Mode mode = Mode::batch;

  std::string input;  // file path; empty or "-" reads the provided stream
  InputFormat format = InputFormat::counts_jsonl;
  std::string metric = "counts";  // counts | discrete | lifted
  std::string imbalance = "abs";  // abs | capped:<c>
  MultiReal epsilon{0.0, 2};
  std::string block = "card:1";  // card:<width> | support | none
  std::string out;               // file path; empty writes the provided stream
  unsigned threads = 1;
  std::string kernel = "auto";  // auto | scalar | avx2
  bool force = false;           // accept epsilon.value > 0 under counts

  std::size_t window = 0;       // stream mode
  bool drop_duplicates = false;

  std::uint64_t trials = 10000;  // verify-algebra
  std::uint64_t seed = 1;

  std::string mset_text;          // verify-topology space, "{2/a, 1/b}" form
  std::uint64_t limit = 100000;   // verify-topology enumeration cap
};

// "<value>:<mult>" or bare "<mult>" (value defaults to 0).
MultiReal parse_epsilon(const std::string& text);

// Exit status: 0 ok, 1 I/O or data error, 2 bad configuration,
// 3 verification failure.
int run(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mmdd::cli
