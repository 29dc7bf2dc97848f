#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mmdd/cli.hpp"
#include "mmdd/errors.hpp"

namespace {

// Flags shared by batch and stream.
void add_detection_flags(CLI::App* cmd, mmdd::cli::Config& cfg,
                         std::string& epsilon_text, std::string& format_text) {
  cmd->add_option("-i,--input", cfg.input, "Input path ('-' for standard input)");
  cmd->add_option("--format", format_text, "counts-jsonl | tokens-jsonl")
      ->default_val("counts-jsonl");
  cmd->add_option("--metric", cfg.metric, "counts | discrete | lifted")
      ->default_val("counts");
  cmd->add_option("--imbalance", cfg.imbalance, "abs | capped:<c>")
      ->default_val("abs");
  cmd->add_option("--epsilon", epsilon_text,
                  "Duplicate threshold as <value>:<mult> (e.g. 0:2) or <mult>")
      ->required();
  cmd->add_option("--block", cfg.block, "card:<width> | support | none")
      ->default_val("card:1");
  cmd->add_option("-o,--out", cfg.out, "Output path (default standard output)");
  cmd->add_option("--kernel", cfg.kernel, "auto | scalar | avx2")
      ->default_val("auto");
  cmd->add_flag("--force", cfg.force,
                "Proceed even if epsilon has a positive value part");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency-sensitive duplicate detection over multiset records"};
  app.require_subcommand(1);

  mmdd::cli::Config cfg;
  std::string epsilon_text;
  std::string format_text = "counts-jsonl";
  // verify-topology defaults to a different metric than detection, so the
  // flag binds its own variable instead of sharing cfg.metric
  std::string topo_metric = "discrete";

  CLI::App* batch = app.add_subcommand("batch", "Detect duplicate pairs in a dataset");
  add_detection_flags(batch, cfg, epsilon_text, format_text);
  batch->add_option("--threads", cfg.threads, "Worker threads for pair evaluation")
      ->default_val(1);

  CLI::App* stream = app.add_subcommand("stream", "Flag duplicates over a record stream");
  add_detection_flags(stream, cfg, epsilon_text, format_text);
  stream->add_option("--window", cfg.window, "Sliding window capacity W")->required();
  stream->add_flag("--drop-duplicates", cfg.drop_duplicates,
                   "Do not insert flagged duplicates into the window");

  CLI::App* valg = app.add_subcommand("verify-algebra",
                                      "Check semiring and order laws on random values");
  valg->add_option("--trials", cfg.trials, "Random triples to test")->default_val(10000);
  valg->add_option("--seed", cfg.seed, "Generator seed")->default_val(1);

  CLI::App* vtop = app.add_subcommand("verify-topology",
                                      "Check topology axioms over a small multiset space");
  vtop->add_option("--mset", cfg.mset_text, "Space as '{2/a, 1/b}'")->required();
  vtop->add_option("--metric", topo_metric, "discrete | lifted")->default_val("discrete");
  vtop->add_option("--limit", cfg.limit, "Max submultisets to enumerate")
      ->default_val(100000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help/--version; anything else is bad usage.
    return code == 0 ? 0 : 2;
  }

  if (batch->parsed()) {
    cfg.mode = mmdd::cli::Mode::batch;
  } else if (stream->parsed()) {
    cfg.mode = mmdd::cli::Mode::stream;
  } else if (valg->parsed()) {
    cfg.mode = mmdd::cli::Mode::verify_algebra;
  } else {
    cfg.mode = mmdd::cli::Mode::verify_topology;
    cfg.metric = topo_metric;
  }

  if (batch->parsed() || stream->parsed()) {
    try {
      cfg.epsilon = mmdd::cli::parse_epsilon(epsilon_text);
      cfg.format = mmdd::parse_format(format_text);
    } catch (const mmdd::Error& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }

  return mmdd::cli::run(cfg, std::cin, std::cout, std::cerr);
}
