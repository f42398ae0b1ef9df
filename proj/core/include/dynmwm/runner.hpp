#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dynmwm/graph.hpp"
#include "dynmwm/rounding.hpp"
#include "dynmwm/stream.hpp"

namespace dynmwm {

enum class OutputFormat { kTsv, kJson };

/// Process exit status of a run.
enum class ExitStatus : int { kPass = 0, kCheckFailure = 1, kInputError = 2 };

struct RunOptions {
  bool verify = false;          // check_invariants + cascade bound at each checkpoint
  bool oracle = false;          // exact ratio + mapping audit at each checkpoint
  std::size_t stats_every = 0;  // also checkpoint every k updates (0: queries and end only)
  OutputFormat format = OutputFormat::kTsv;
  bool timing = false;          // add wall-clock seconds (breaks byte-identical replay)
  std::ostream* out = nullptr;  // checkpoint records; nullptr disables output
  std::ostream* log = nullptr;  // warnings
};

struct Checkpoint {
  std::size_t step = 0;  // updates applied so far
  std::size_t size = 0;
  Weight weight = 0.0;
  std::optional<Weight> optimum;
  std::optional<double> ratio;
  std::optional<double> bound;
  std::size_t cascade_max = 0;  // deepest cascade since the previous checkpoint
  double wall_seconds = 0.0;
  bool pass = true;
};

struct RunFailure {
  ExitStatus status = ExitStatus::kCheckFailure;
  std::size_t event = 0;  // 1-based event index in the stream
  std::string check;
  std::string message;
};

struct RunStats {
  std::vector<Checkpoint> checkpoints;
  std::size_t updates = 0;
  std::size_t max_cascade_depth = 0;
  std::size_t invariant_checks = 0;
  std::size_t oracle_checks = 0;
  std::optional<Weight> w_min;  // extreme weights inserted during the run
  std::optional<Weight> w_max;
  bool oracle_enabled = false;
  std::optional<RunFailure> failure;

  [[nodiscard]] ExitStatus status() const {
    return failure ? failure->status : ExitStatus::kPass;
  }
};

/// Cascade-depth ceiling floor(log_alpha C) + 2 for weight spread C = w_max / w_min.
[[nodiscard]] std::size_t cascade_depth_limit(double alpha, Weight w_min, Weight w_max);

/// Replays `stream` into a fresh engine on `vertex_count` vertices. Stops at
/// the first rejected update (kInputError) or failed check (kCheckFailure).
/// A final checkpoint is always taken after the last event.
RunStats run(const UpdateStream& stream, std::size_t vertex_count, const RoundingConfig& cfg,
             const RunOptions& options);

}  // namespace dynmwm
