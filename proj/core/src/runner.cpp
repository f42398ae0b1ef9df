#include "dynmwm/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <variant>

#include <json.hpp>

#include "dynmwm/hierarchy.hpp"
#include "dynmwm/oracle.hpp"

namespace dynmwm {

std::size_t cascade_depth_limit(double alpha, Weight w_min, Weight w_max) {
  const double spread = std::floor(std::log(w_max / w_min) / std::log(alpha) + 1e-12);
  return static_cast<std::size_t>(std::max(0.0, spread)) + 2;
}

namespace {

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

class Recorder {
 public:
  Recorder(const RunOptions& options) : options_(options) {}

  void header() {
    if (options_.out == nullptr || options_.format != OutputFormat::kTsv) return;
    *options_.out << "step\tsize\tweight\toptimum\tratio\tbound\tcascade_max\tstatus";
    if (options_.timing) *options_.out << "\twall_s";
    *options_.out << '\n';
  }

  void record(const Checkpoint& c) {
    if (options_.out == nullptr) return;
    std::ostream& out = *options_.out;
    if (options_.format == OutputFormat::kTsv) {
      auto opt = [](const std::optional<double>& x) { return x ? fmt_num(*x) : std::string("-"); };
      out << c.step << '\t' << c.size << '\t' << fmt_num(c.weight) << '\t' << opt(c.optimum)
          << '\t' << opt(c.ratio) << '\t' << opt(c.bound) << '\t' << c.cascade_max << '\t'
          << (c.pass ? "pass" : "fail");
      if (options_.timing) out << '\t' << fmt_num(c.wall_seconds);
      out << '\n';
    } else {
      nlohmann::ordered_json j;
      j["step"] = c.step;
      j["size"] = c.size;
      j["weight"] = c.weight;
      j["optimum"] = c.optimum ? nlohmann::ordered_json(*c.optimum) : nullptr;
      j["ratio"] = c.ratio ? nlohmann::ordered_json(*c.ratio) : nullptr;
      j["bound"] = c.bound ? nlohmann::ordered_json(*c.bound) : nullptr;
      j["cascade_max"] = c.cascade_max;
      j["status"] = c.pass ? "pass" : "fail";
      if (options_.timing) j["wall_s"] = c.wall_seconds;
      out << j.dump() << '\n';
    }
  }

  void summary(const RunStats& stats) {
    if (options_.out == nullptr) return;
    std::ostream& out = *options_.out;
    const char* status = stats.status() == ExitStatus::kPass           ? "pass"
                         : stats.status() == ExitStatus::kCheckFailure ? "check-failure"
                                                                       : "input-error";
    if (options_.format == OutputFormat::kTsv) {
      out << "# updates=" << stats.updates << " checkpoints=" << stats.checkpoints.size()
          << " max_cascade=" << stats.max_cascade_depth
          << " invariant_checks=" << stats.invariant_checks
          << " oracle_checks=" << stats.oracle_checks << " status=" << status << '\n';
      if (stats.failure) {
        out << "# failure event=" << stats.failure->event << " check=" << stats.failure->check
            << " " << stats.failure->message << '\n';
      }
    } else {
      nlohmann::ordered_json j;
      j["updates"] = stats.updates;
      j["checkpoints"] = stats.checkpoints.size();
      j["max_cascade"] = stats.max_cascade_depth;
      j["invariant_checks"] = stats.invariant_checks;
      j["oracle_checks"] = stats.oracle_checks;
      j["status"] = status;
      if (stats.failure) {
        j["failure"] = {{"event", stats.failure->event},
                        {"check", stats.failure->check},
                        {"message", stats.failure->message}};
      }
      out << nlohmann::ordered_json{{"summary", j}}.dump() << '\n';
    }
  }

 private:
  const RunOptions& options_;
};

}  // namespace

RunStats run(const UpdateStream& stream, std::size_t vertex_count, const RoundingConfig& cfg,
             const RunOptions& options) {
  RunStats stats;
  Recorder recorder(options);
  const auto started = std::chrono::steady_clock::now();

  std::optional<DynamicMatching> engine;
  try {
    engine.emplace(vertex_count, cfg);
  } catch (const std::exception& e) {
    stats.failure = RunFailure{ExitStatus::kInputError, 0, "config", e.what()};
    recorder.summary(stats);
    return stats;
  }

  stats.oracle_enabled = options.oracle;
  if (options.oracle && vertex_count > kOracleMaxVertices) {
    stats.oracle_enabled = false;
    if (options.log != nullptr) {
      *options.log << "warning: oracle disabled, n=" << vertex_count << " exceeds "
                   << kOracleMaxVertices << '\n';
    }
  }

  recorder.header();
  std::size_t interval_cascade = 0;
  std::size_t since_checkpoint = 0;

  auto checkpoint = [&](std::size_t event) -> bool {
    Checkpoint c;
    c.step = stats.updates;
    c.size = engine->matching_size();
    c.weight = engine->matching_weight();
    c.cascade_max = interval_cascade;
    interval_cascade = 0;
    since_checkpoint = 0;

    if (options.verify) {
      ++stats.invariant_checks;
      if (const AuditReport audit = engine->check_invariants(); !audit.ok()) {
        c.pass = false;
        stats.failure = RunFailure{ExitStatus::kCheckFailure, event, audit.violation->invariant,
                                   audit.violation->witness};
      } else if (stats.w_min &&
                 stats.max_cascade_depth > cascade_depth_limit(cfg.alpha, *stats.w_min, *stats.w_max)) {
        c.pass = false;
        stats.failure = RunFailure{
            ExitStatus::kCheckFailure, event, "cascade-depth",
            "cascade depth " + std::to_string(stats.max_cascade_depth) + " exceeds limit " +
                std::to_string(cascade_depth_limit(cfg.alpha, *stats.w_min, *stats.w_max))};
      }
    }
    if (stats.oracle_enabled && c.pass) {
      ++stats.oracle_checks;
      const EngineSnapshot snap = engine->snapshot();
      const ExactMwmResult opt = brute_force_mwm(snap);
      const RatioReport ratio = ratio_report(snap, opt);
      c.optimum = opt.weight;
      c.ratio = ratio.ratio;
      c.bound = ratio.bound;
      if (!ratio.pass) {
        c.pass = false;
        stats.failure = RunFailure{ExitStatus::kCheckFailure, event, "ratio",
                                   "ratio " + fmt_num(ratio.ratio) + " exceeds bound " +
                                       fmt_num(ratio.bound)};
      } else if (const MappingAudit audit = audit_mapping(snap, opt); !audit.ok()) {
        c.pass = false;
        stats.failure = RunFailure{ExitStatus::kCheckFailure, event, audit.violation->invariant,
                                   audit.violation->witness};
      }
    }
    c.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    recorder.record(c);
    stats.checkpoints.push_back(c);
    return c.pass;
  };

  std::size_t event_index = 0;
  for (const StreamEvent& event : stream.events) {
    ++event_index;
    if (std::holds_alternative<QueryEvent>(event)) {
      if (!checkpoint(event_index)) break;
      continue;
    }
    try {
      UpdateSummary summary;
      if (const auto* ins = std::get_if<InsertEvent>(&event)) {
        summary = engine->insert_edge(ins->u, ins->v, ins->w);
        stats.w_min = stats.w_min ? std::min(*stats.w_min, ins->w) : ins->w;
        stats.w_max = stats.w_max ? std::max(*stats.w_max, ins->w) : ins->w;
      } else {
        const auto& del = std::get<DeleteEvent>(event);
        summary = engine->delete_edge(del.u, del.v);
      }
      ++stats.updates;
      ++since_checkpoint;
      interval_cascade = std::max(interval_cascade, summary.cascade_depth);
      stats.max_cascade_depth = std::max(stats.max_cascade_depth, summary.cascade_depth);
    } catch (const GraphError& e) {
      stats.failure = RunFailure{ExitStatus::kInputError, event_index, to_string(e.code()),
                                 "event " + std::to_string(event_index) + ": " + e.what()};
      break;
    }
    if (options.stats_every > 0 && since_checkpoint == options.stats_every) {
      if (!checkpoint(event_index)) break;
    }
  }
  if (!stats.failure && (since_checkpoint > 0 || stats.checkpoints.empty()) &&
      !stream.events.empty()) {
    checkpoint(event_index);
  }
  recorder.summary(stats);
  return stats;
}

}  // namespace dynmwm
