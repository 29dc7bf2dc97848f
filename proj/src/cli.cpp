#include "mmdd/cli.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>

#include "mmdd/dedup.hpp"
#include "mmdd/errors.hpp"
#include "mmdd/l1_kernel.hpp"
#include "mmdd/multimetric.hpp"
#include "mmdd/stream.hpp"
#include "mmdd/topology.hpp"
#include "mmdd/verify.hpp"

namespace mmdd::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kConfigError = 2;
constexpr int kVerifyFailed = 3;

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error("invalid-epsilon", std::string("bad ") + what + " in epsilon");
  }
  return v;
}

// Opens cfg-selected input/output, falling back to the provided streams.
struct IoStreams {
  std::ifstream in_file;
  std::ofstream out_file;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;

  // Returns false (with a message on err) when a path cannot be opened.
  bool open(const Config& cfg, std::istream& in_default, std::ostream& out_default,
            std::ostream& err) {
    in = &in_default;
    if (!cfg.input.empty() && cfg.input != "-") {
      in_file.open(cfg.input);
      if (!in_file) {
        err << "error: cannot open input '" << cfg.input << "'\n";
        return false;
      }
      in = &in_file;
    }
    out = &out_default;
    if (!cfg.out.empty()) {
      out_file.open(cfg.out);
      if (!out_file) {
        err << "error: cannot open output '" << cfg.out << "'\n";
        return false;
      }
      out = &out_file;
    }
    return true;
  }
};

void print_summary(std::ostream& err, const DetectStats& s) {
  err << "records=" << s.records << " blocks=" << s.blocks
      << " comparisons=" << s.comparisons << " pruned=" << s.pruned
      << " pairs=" << s.pairs << "\n";
}

// Shared batch/stream config checks; returns the threshold or reports and
// yields a config error.
std::optional<Threshold> check_detection_config(const Config& cfg, std::ostream& err) {
  try {
    if (cfg.metric != "counts") {
      throw Error("invalid-metric", "duplicate detection runs on the counts metric; '" +
                                        cfg.metric + "' is only for verify-topology");
    }
    Threshold eps{cfg.epsilon};
    if (cfg.epsilon.value > 0.0 && !cfg.force) {
      throw Error("epsilon-value-positive",
                  "epsilon value > 0 declares every pair a duplicate under the "
                  "counts metric; pass --force if that is intended");
    }
    return eps;
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return std::nullopt;
  }
}

int run_batch(const Config& cfg, std::istream& in, std::ostream& out,
              std::ostream& err) {
  std::optional<Threshold> eps = check_detection_config(cfg, err);
  std::optional<Imbalance> f;
  BlockScheme scheme;
  if (!eps) return kConfigError;
  try {
    f = Imbalance::parse(cfg.imbalance);
    scheme = BlockScheme::parse(cfg.block);
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  if (cfg.epsilon.value > 0.0) {
    err << "warning: epsilon value > 0, every compared pair will match\n";
  }

  IoStreams io;
  if (!io.open(cfg, in, out, err)) return kDataError;

  try {
    const std::vector<Record> records = read_records(*io.in, cfg.format);
    DetectResult res;
    if (scheme.kind == BlockScheme::Kind::none) {
      res = detect_exhaustive(records, *eps, *f);
    } else {
      res = detect_blocked(records, *eps, *f, {scheme, cfg.threads, true});
    }
    for (const DuplicatePair& p : res.pairs) *io.out << pair_to_jsonl(p) << "\n";
    io.out->flush();
    if (!*io.out) {
      err << "error: failed writing output\n";
      return kDataError;
    }
    print_summary(err, res.stats);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

int run_stream(const Config& cfg, std::istream& in, std::ostream& out,
               std::ostream& err) {
  std::optional<Threshold> eps = check_detection_config(cfg, err);
  if (!eps) return kConfigError;
  std::optional<StreamDetector> detector;
  try {
    detector.emplace(cfg.window, *eps, Imbalance::parse(cfg.imbalance),
                     BlockScheme::parse(cfg.block), cfg.drop_duplicates);
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  if (cfg.epsilon.value > 0.0) {
    err << "warning: epsilon value > 0, every compared pair will match\n";
  }

  IoStreams io;
  if (!io.open(cfg, in, out, err)) return kDataError;

  try {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*io.in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      Record rec = parse_record_line(line, cfg.format, line_no);
      *io.out << verdict_to_jsonl(detector->process(std::move(rec))) << "\n";
    }
    io.out->flush();
    if (!*io.out) {
      err << "error: failed writing output\n";
      return kDataError;
    }
    print_summary(err, detector->stats());
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

int run_verify_algebra(const Config& cfg, std::ostream& out, std::ostream& err) {
  const LawReport rep = verify_algebra(cfg.trials, cfg.seed);
  out << "algebra trials=" << rep.trials << " checks=" << rep.checks
      << " failures=" << rep.failures.size() << (rep.ok() ? " ok" : " FAILED")
      << "\n";
  std::size_t shown = 0;
  for (const LawFailure& fail : rep.failures) {
    if (++shown > 10) {
      err << "... " << rep.failures.size() - 10 << " more\n";
      break;
    }
    err << fail.law << ": " << fail.detail << "\n";
  }
  return rep.ok() ? kOk : kVerifyFailed;
}

int run_verify_topology(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::optional<MetricFn> metric;
  Multiset space;
  try {
    if (cfg.metric != "discrete" && cfg.metric != "lifted") {
      throw Error("invalid-metric",
                  "verify-topology needs --metric discrete or lifted");
    }
    metric = make_metric(cfg.metric);
    space = parse_multiset(cfg.mset_text);
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    const TopologyReport rep = verify_topology(space, *metric, cfg.limit);
    out << "submsets=" << rep.submset_count << " open=" << rep.open_count
        << " axioms=" << (rep.axioms_hold ? "hold" : "fail") << "\n";
    if (!rep.axioms_hold) {
      err << "counterexample: " << rep.counterexample << "\n";
      return kVerifyFailed;
    }
    return kOk;
  } catch (const Error& e) {
    // space-too-large or a metric rejecting the supplied attributes: the
    // --mset/--limit flags need adjusting.
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace

MultiReal parse_epsilon(const std::string& text) {
  const auto colon = text.find(':');
  MultiReal eps;
  if (colon == std::string::npos) {
    eps.value = 0.0;
    eps.mult = parse_u64(text, "multiplicity");
    return eps;
  }
  const std::string_view vpart{text.data(), colon};
  auto [ptr, ec] = std::from_chars(vpart.data(), vpart.data() + vpart.size(), eps.value);
  if (ec != std::errc{} || ptr != vpart.data() + vpart.size()) {
    throw Error("invalid-epsilon", "bad value in epsilon '" + text + "'");
  }
  eps.mult = parse_u64(std::string_view(text).substr(colon + 1), "multiplicity");
  return eps;
}

int run(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    kernel::set_backend(kernel::parse_backend(cfg.kernel));
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  switch (cfg.mode) {
    case Mode::batch:
      return run_batch(cfg, in, out, err);
    case Mode::stream:
      return run_stream(cfg, in, out, err);
    case Mode::verify_algebra:
      return run_verify_algebra(cfg, out, err);
    case Mode::verify_topology:
      return run_verify_topology(cfg, out, err);
  }
  return kConfigError;
}

}  // namespace mmdd::cli
