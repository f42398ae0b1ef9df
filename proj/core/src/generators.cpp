#include "dynmwm/generators.hpp"

#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "dynmwm/graph.hpp"

namespace dynmwm {

std::string_view to_string(StreamKind kind) {
  switch (kind) {
    case StreamKind::kRandom: return "random";
    case StreamKind::kSlidingWindow: return "sliding-window";
    case StreamKind::kAdversarialLevels: return "adversarial-levels";
  }
  return "unknown";
}

std::optional<StreamKind> parse_stream_kind(std::string_view text) {
  if (text == "random") return StreamKind::kRandom;
  if (text == "sliding-window") return StreamKind::kSlidingWindow;
  if (text == "adversarial-levels") return StreamKind::kAdversarialLevels;
  return std::nullopt;
}

namespace {

// Present edge set with O(1) uniform sampling and removal.
class EdgePool {
 public:
  [[nodiscard]] bool contains(EdgeKey e) const { return index_.contains(e); }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }

  void add(EdgeKey e) {
    index_.emplace(e, edges_.size());
    edges_.push_back(e);
  }

  void remove(EdgeKey e) { remove_at(index_.at(e)); }

  EdgeKey remove_at(std::size_t i) {
    const EdgeKey e = edges_[i];
    index_[edges_.back()] = i;
    edges_[i] = edges_.back();
    edges_.pop_back();
    index_.erase(e);
    return e;
  }

 private:
  std::vector<EdgeKey> edges_;
  std::unordered_map<EdgeKey, std::size_t> index_;
};

void check_common(const GeneratorParams& p) {
  if (p.n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (!(p.wmin > 0.0) || !(p.wmax >= p.wmin) || !std::isfinite(p.wmax)) {
    throw std::invalid_argument("generator needs 0 < wmin <= wmax < inf");
  }
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

EdgeKey fresh_pair(const EdgePool& pool, std::size_t n, std::mt19937_64& gen) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  while (true) {
    const VertexId a = pick(gen);
    const VertexId b = pick(gen);
    if (a == b) continue;
    const EdgeKey e(a, b);
    if (!pool.contains(e)) return e;
  }
}

UpdateStream random_stream(const GeneratorParams& p) {
  check_common(p);
  if (!(p.insert_prob >= 0.0 && p.insert_prob <= 1.0)) {
    throw std::invalid_argument("insert_prob must lie in [0,1]");
  }
  std::mt19937_64 gen(p.seed);
  std::uniform_real_distribution<double> weight(p.wmin, p.wmax);
  std::bernoulli_distribution coin(p.insert_prob);
  const std::size_t max_edges = pair_count(p.n);

  UpdateStream stream;
  stream.events.reserve(p.steps);
  EdgePool pool;
  for (std::size_t s = 0; s < p.steps; ++s) {
    bool insert = pool.size() == 0 || (pool.size() < max_edges && coin(gen));
    if (insert) {
      const EdgeKey e = fresh_pair(pool, p.n, gen);
      pool.add(e);
      stream.events.emplace_back(InsertEvent{e.lo, e.hi, weight(gen)});
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const EdgeKey e = pool.remove_at(pick(gen));
      stream.events.emplace_back(DeleteEvent{e.lo, e.hi});
    }
  }
  return stream;
}

UpdateStream sliding_window_stream(const GeneratorParams& p) {
  check_common(p);
  if (p.window == 0) throw std::invalid_argument("window must be positive");
  if (p.window >= pair_count(p.n)) {
    throw std::invalid_argument("window must be smaller than the number of vertex pairs");
  }
  std::mt19937_64 gen(p.seed);
  std::uniform_real_distribution<double> weight(p.wmin, p.wmax);

  UpdateStream stream;
  EdgePool pool;
  std::deque<EdgeKey> live;
  for (std::size_t s = 0; s < p.steps + p.window; ++s) {
    if (s >= p.window) {
      const EdgeKey old = live.front();
      live.pop_front();
      pool.remove(old);
      stream.events.emplace_back(DeleteEvent{old.lo, old.hi});
    }
    if (s < p.steps) {
      const EdgeKey e = fresh_pair(pool, p.n, gen);
      pool.add(e);
      live.push_back(e);
      stream.events.emplace_back(InsertEvent{e.lo, e.hi, weight(gen)});
    }
  }
  return stream;
}

UpdateStream adversarial_stream(const GeneratorParams& p) {
  if (!(p.alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  if (p.depth == 0) throw std::invalid_argument("depth must be positive");
  if (!(p.margin > 0.0 && p.margin < 1.0 - 1.0 / p.alpha)) {
    throw std::invalid_argument("margin must lie in (0, 1 - 1/alpha)");
  }
  const auto top = static_cast<int>(p.depth);
  auto heavy = [&](int level) { return std::pow(p.alpha, level + 1) * (1.0 - p.margin); };
  auto light = [&](int level) { return std::pow(p.alpha, level); };

  UpdateStream stream;
  stream.events.emplace_back(InsertEvent{0, 1, light(top)});
  stream.events.emplace_back(InsertEvent{0, 2, heavy(top)});
  stream.events.emplace_back(InsertEvent{1, 3, heavy(top)});
  VertexId next = 4;
  for (int j = top - 1; j >= 0; --j) {
    const VertexId a = next++, c = next++, b = next++, d = next++;
    stream.events.emplace_back(InsertEvent{0, a, light(j)});
    stream.events.emplace_back(InsertEvent{1, b, light(j)});
    stream.events.emplace_back(InsertEvent{a, c, heavy(j)});
    stream.events.emplace_back(InsertEvent{b, d, heavy(j)});
  }
  stream.events.emplace_back(QueryEvent{});
  return stream;
}

}  // namespace

UpdateStream generate_stream(StreamKind kind, const GeneratorParams& params) {
  switch (kind) {
    case StreamKind::kRandom: return random_stream(params);
    case StreamKind::kSlidingWindow: return sliding_window_stream(params);
    case StreamKind::kAdversarialLevels: return adversarial_stream(params);
  }
  throw std::invalid_argument("unknown stream kind");
}

}  // namespace dynmwm
