// Command line driver: replay or generate an update stream, maintain the
// approximate matching, and emit checkpoint statistics.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dynmwm/generators.hpp"
#include "dynmwm/oracle.hpp"
#include "dynmwm/rounding.hpp"
#include "dynmwm/runner.hpp"
#include "dynmwm/stream.hpp"

namespace {

constexpr int kInputError = static_cast<int>(dynmwm::ExitStatus::kInputError);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully dynamic approximate maximum-weight matching"};

  std::optional<double> alpha;
  std::string mode_text = "plain";
  std::optional<double> r;
  std::uint64_t seed = 0;
  std::optional<std::size_t> n;
  std::string input;
  std::string gen_kind;
  std::string dump_path;
  bool verify = false;
  bool oracle = false;
  bool timing = false;
  std::size_t stats_every = 0;
  std::string out_format = "tsv";
  dynmwm::GeneratorParams gen;

  app.add_option("--alpha", alpha, "Level base (default 2.0 plain, 3.512 rounded)")
      ->check(CLI::PositiveNumber);
  app.add_option("--mode", mode_text, "plain | rounded")
      ->check(CLI::IsMember({"plain", "rounded"}));
  app.add_option("--r", r, "Fixed rounding offset in (0,1]; drawn from --seed when omitted");
  app.add_option("--seed", seed, "Seed for the rounding offset and stream generators");
  app.add_option("--n", n, "Vertex count (default: inferred from the stream)");
  auto* input_opt = app.add_option("--input", input, "Update stream file ('-' for stdin)");
  auto* gen_opt = app.add_option("--gen", gen_kind, "Generate a stream: random | sliding-window | adversarial-levels")
                      ->check(CLI::IsMember({"random", "sliding-window", "adversarial-levels"}));
  input_opt->excludes(gen_opt);
  app.add_option("--steps", gen.steps, "Generator: number of steps");
  app.add_option("--wmin", gen.wmin, "Generator: smallest weight");
  app.add_option("--wmax", gen.wmax, "Generator: largest weight");
  app.add_option("--insert-prob", gen.insert_prob, "Generator (random): insert probability");
  app.add_option("--window", gen.window, "Generator (sliding-window): edge lifetime in steps");
  app.add_option("--depth", gen.depth, "Generator (adversarial-levels): levels below the top edge");
  app.add_option("--dump-stream", dump_path, "Write the replayed stream to this file");
  app.add_flag("--verify", verify, "Audit all engine invariants at every checkpoint");
  app.add_flag("--oracle", oracle, "Compare against the exact optimum at every checkpoint (n <= 24)");
  app.add_option("--stats-every", stats_every, "Checkpoint every k updates (0: queries and end only)");
  app.add_option("--out", out_format, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));
  app.add_flag("--timing", timing, "Add wall-clock seconds to every checkpoint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  dynmwm::RoundingConfig cfg;
  cfg.mode = *dynmwm::parse_rounding_mode(mode_text);
  cfg.alpha = alpha.value_or(cfg.rounded() ? 3.512 : 2.0);
  cfg.r = r;
  cfg.seed = seed;

  dynmwm::UpdateStream stream;
  std::size_t vertex_count = 0;
  try {
    if (!gen_kind.empty()) {
      gen.n = n.value_or(gen.n);
      gen.alpha = cfg.alpha;
      gen.seed = seed;
      const auto kind = *dynmwm::parse_stream_kind(gen_kind);
      if (kind == dynmwm::StreamKind::kAdversarialLevels && !n) {
        gen.n = dynmwm::adversarial_vertex_count(gen.depth);
      }
      stream = dynmwm::generate_stream(kind, gen);
      vertex_count = gen.n;
    } else if (!input.empty()) {
      stream = input == "-" ? dynmwm::read_stream(std::cin) : dynmwm::load_stream(input);
      vertex_count = n.value_or(stream.vertex_bound());
    } else {
      std::cerr << "error: one of --input or --gen is required\n";
      return kInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) {
      std::cerr << "error: cannot write '" << dump_path << "'\n";
      return kInputError;
    }
    dynmwm::write_stream(dump, stream);
  }

  dynmwm::RunOptions options;
  options.verify = verify;
  options.oracle = oracle;
  options.stats_every = stats_every;
  options.format = out_format == "json" ? dynmwm::OutputFormat::kJson : dynmwm::OutputFormat::kTsv;
  options.timing = timing;
  options.out = &std::cout;
  options.log = &std::cerr;

  const dynmwm::RunStats stats = dynmwm::run(stream, vertex_count, cfg, options);
  if (stats.failure) {
    std::cerr << (stats.status() == dynmwm::ExitStatus::kInputError ? "input error" : "check failed")
              << " at event " << stats.failure->event << " [" << stats.failure->check
              << "]: " << stats.failure->message << '\n';
  }
  return static_cast<int>(stats.status());
}
