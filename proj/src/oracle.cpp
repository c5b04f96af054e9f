// Copyright 2026 The gridsink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridsink/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gridsink/completion_time.hpp"
#include "gridsink/errors.hpp"

namespace gridsink::oracle {

namespace {

constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;
// Upper bound on time-expanded node copies for a single max-flow call.
constexpr std::size_t kMaxExpandedNodes = 8'000'000;

// Dinic's blocking-flow max flow on int64 capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : head_(nodes, -1) {}

  void AddArc(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t Run(int source, int sink) {
    std::int64_t total = 0;
    level_.resize(head_.size());
    iter_.resize(head_.size());
    while (Levels(source, sink)) {
      std::copy(head_.begin(), head_.end(), iter_.begin());
      while (std::int64_t pushed = Push(source, sink, kInfinite)) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool Levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue;
    queue.reserve(head_.size());
    queue.push_back(source);
    level_[static_cast<std::size_t>(source)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int a = head_[static_cast<std::size_t>(u)]; a != -1;
           a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] =
              level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  // Iterative DFS along the level graph; returns one augmenting amount.
  std::int64_t Push(int source, int sink, std::int64_t limit) {
    std::vector<int>& path = path_;
    path.clear();
    int u = source;
    while (true) {
      if (u == sink) {
        std::int64_t f = limit;
        for (int a : path) f = std::min(f, arcs_[static_cast<std::size_t>(a)].cap);
        for (int a : path) {
          arcs_[static_cast<std::size_t>(a)].cap -= f;
          arcs_[static_cast<std::size_t>(a ^ 1)].cap += f;
        }
        return f;
      }
      int& it = iter_[static_cast<std::size_t>(u)];
      for (; it != -1; it = arcs_[static_cast<std::size_t>(it)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(it)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] ==
                               level_[static_cast<std::size_t>(u)] + 1) {
          break;
        }
      }
      if (it == -1) {
        if (path.empty()) return 0;
        level_[static_cast<std::size_t>(u)] = -1;  // dead end
        const int back = path.back();
        path.pop_back();
        u = arcs_[static_cast<std::size_t>(back ^ 1)].to;
        int& pit = iter_[static_cast<std::size_t>(u)];
        pit = arcs_[static_cast<std::size_t>(pit)].next;
        continue;
      }
      path.push_back(it);
      u = arcs_[static_cast<std::size_t>(it)].to;
    }
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<int> path_;
};

std::int64_t Lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw GuardError("oracle scaling denominator overflows 64 bits");
  }
  return out;
}

std::int64_t ToScaled(const Rational& value, std::int64_t scale) {
  const Rational s = value * Rational(scale);
  if (!s.is_integer()) throw InternalError("scaling left a fraction");
  return s.num();
}

// Where flow is absorbed in the time-expanded network.
struct SinkModel {
  struct Attachment {
    std::size_t node;
    Rational delay;
    bool unbounded;
  };
  std::vector<Attachment> attachments;
  // Arcs between these two nodes are absent in both directions.
  std::optional<std::pair<std::size_t, std::size_t>> removed;
  // Node sink: supply there has arrived at time zero.
  std::optional<std::size_t> absorbing;
  // Total sink inflow rate is at most this many times the capacity.
  int rate_multiple = 2;
};

SinkModel EdgeSink(const GridNetwork& net, const EdgeRef& edge,
                   const Rational& y) {
  if (!net.contains(edge)) {
    throw std::invalid_argument("edge " + edge.to_string() +
                                " is not in the network");
  }
  if (y.sign() < 0 || net.transit() < y) {
    throw std::out_of_range("sink offset outside [0, transit]");
  }
  SinkModel m;
  const std::size_t p = net.index(edge.a);
  const std::size_t q = net.index(edge.b);
  m.attachments = {{p, y, false}, {q, net.transit() - y, false}};
  m.removed = std::pair{p, q};
  m.rate_multiple = 2;
  return m;
}

bool IsRemoved(const SinkModel& m, std::size_t u, std::size_t v) {
  if (!m.removed) return false;
  const auto [p, q] = *m.removed;
  return (u == p && v == q) || (u == q && v == p);
}

Rational StepMultiple(const Rational& value, const Rational& step,
                      const char* what) {
  const Rational k = value / step;
  if (!k.is_integer()) {
    throw std::invalid_argument(std::string(what) + " " + value.to_string() +
                                " is not a multiple of the time step " +
                                step.to_string());
  }
  return k;
}

// Max flow into the sink by `theta` on the time-expanded network with
// `steps` steps per transit time. `uncapped` marks sources with unlimited
// supply; other nodes in `capped` contribute their own supply.
Rational ExpandedAmount(const GridNetwork& net, const SinkModel& sink,
                        const std::vector<char>& is_source, bool capped,
                        const Rational& theta, int steps, bool allow_waiting) {
  if (steps <= 0) throw std::invalid_argument("steps must be positive");
  if (theta.sign() < 0) throw std::invalid_argument("negative horizon");
  const Rational dt = net.transit() / Rational(steps);
  const std::int64_t levels = StepMultiple(theta, dt, "horizon").num();
  if (levels == 0) return 0;
  const std::size_t n = net.node_count();
  std::vector<std::size_t> sources;
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_source[v] || (sink.absorbing && *sink.absorbing == v)) continue;
    if (capped && net.supplies()[v].is_zero()) continue;
    sources.push_back(v);
  }
  if (sources.empty()) return 0;

  const std::size_t layers = static_cast<std::size_t>(levels);
  const std::size_t reservoirs = allow_waiting ? 0 : sources.size();
  const std::size_t total_nodes = (n + reservoirs) * layers + 2;
  if (total_nodes > kMaxExpandedNodes) {
    throw GuardError("time-expanded network too large (" +
                     std::to_string(total_nodes) + " node copies)");
  }

  const Rational step_cap = net.capacity() * dt;
  std::int64_t scale = step_cap.den();
  if (capped) {
    for (std::size_t v : sources) scale = Lcm(scale, net.supplies()[v].den());
  }
  const std::int64_t arc_cap = ToScaled(step_cap, scale);
  const std::int64_t travel = steps;  // one edge, in steps

  auto copy = [&](std::size_t v, std::int64_t k) {
    return static_cast<int>(static_cast<std::size_t>(k) * n + v);
  };
  const int src = static_cast<int>(total_nodes - 2);
  const int snk = static_cast<int>(total_nodes - 1);
  MaxFlow flow(total_nodes);

  std::array<Node, 4> nb;
  for (std::size_t u = 0; u < n; ++u) {
    const int deg = net.neighbors(net.node_at(u), nb);
    for (int t = 0; t < deg; ++t) {
      const std::size_t v = net.index(nb[static_cast<std::size_t>(t)]);
      if (IsRemoved(sink, u, v)) continue;
      for (std::int64_t k = 0; k + travel <= levels - 1; ++k) {
        flow.AddArc(copy(u, k), copy(v, k + travel), arc_cap);
      }
    }
    if (allow_waiting) {
      for (std::int64_t k = 0; k + 1 < levels; ++k) {
        flow.AddArc(copy(u, k), copy(u, k + 1), kInfinite);
      }
    }
  }
  for (const auto& att : sink.attachments) {
    const std::int64_t delay = StepMultiple(att.delay, dt, "sink delay").num();
    const std::int64_t cap = att.unbounded ? kInfinite : arc_cap;
    for (std::int64_t k = 0; k + delay <= levels - 1; ++k) {
      flow.AddArc(copy(att.node, k), snk, cap);
    }
  }
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const std::size_t v = sources[s];
    const std::int64_t supply =
        capped ? ToScaled(net.supplies()[v], scale) : kInfinite;
    if (allow_waiting) {
      flow.AddArc(src, copy(v, 0), supply);
      continue;
    }
    // Reservoir chain: the source's own supply may wait, transit flow not.
    auto res = [&](std::int64_t k) {
      return static_cast<int>(n * layers + static_cast<std::size_t>(k) *
                                               reservoirs + s);
    };
    flow.AddArc(src, res(0), supply);
    for (std::int64_t k = 0; k < levels; ++k) {
      flow.AddArc(res(k), copy(v, k), kInfinite);
      if (k + 1 < levels) flow.AddArc(res(k), res(k + 1), kInfinite);
    }
  }
  return Rational(flow.Run(src, snk), scale);
}

// Evaluates the supply-capped delivered amount at any rational horizon by
// refining the step until the horizon is on the grid.
class CappedAmount {
 public:
  CappedAmount(const GridNetwork& net, SinkModel sink, int steps,
               bool allow_waiting)
      : net_(net),
        sink_(std::move(sink)),
        steps_(steps),
        allow_waiting_(allow_waiting),
        all_(net.node_count(), 1) {
    if (sink_.absorbing) base_ = net.supplies()[*sink_.absorbing];
  }

  Rational At(const Rational& theta) const {
    const Rational levels = theta * Rational(steps_) / net_.transit();
    const std::int64_t refine = levels.den();
    std::int64_t steps;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(steps_), refine,
                               &steps) ||
        steps > (1 << 20)) {
      throw GuardError("horizon " + theta.to_string() +
                       " needs too fine a time step");
    }
    return base_ + ExpandedAmount(net_, sink_, all_, true, theta,
                                  static_cast<int>(steps), allow_waiting_);
  }

  Rational AtLevel(std::int64_t level) const {
    return At(Rational(level) * net_.transit() / Rational(steps_));
  }

 private:
  const GridNetwork& net_;
  SinkModel sink_;
  int steps_;
  bool allow_waiting_;
  std::vector<char> all_;
  Rational base_;
};

// Smallest theta with amount(theta) >= total. Between consecutive grid
// horizons every set's deliverable amount is affine (path lengths are grid
// multiples), so the capped amount is concave there with slopes that are
// multiples of the capacity, and its global slope never exceeds
// rate_multiple * capacity. Each probe below is therefore a lower bound on
// the answer; the first one that is feasible is exact.
Rational SolveHorizon(const GridNetwork& net, const SinkModel& sink,
                      const Options& options) {
  if (options.steps <= 0) throw std::invalid_argument("steps must be positive");
  const Rational total = net.total_supply();
  CappedAmount amount(net, sink, options.steps, options.allow_waiting);
  const Rational at_zero = amount.At(0);
  if (at_zero >= total) return 0;

  const Rational dt = net.transit() / Rational(options.steps);
  const Rational max_rate = net.capacity() * Rational(sink.rate_multiple);
  // Before (total - at_zero) / max_rate nothing can be feasible.
  const Rational earliest = (total - at_zero) / max_rate;
  const Rational floor_levels = earliest / dt;
  std::int64_t lo = floor_levels.num() / floor_levels.den();
  if (lo > 0 && Rational(lo) * dt >= earliest) --lo;
  if (lo < 0) lo = 0;
  std::int64_t span = 1;
  std::int64_t hi = lo + span;
  while (amount.AtLevel(hi) < total) {
    lo = hi;
    span *= 2;
    hi = lo + span;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (amount.AtLevel(mid) < total ? lo : hi) = mid;
  }

  Rational t = Rational(lo) * dt;
  Rational at = amount.At(t);
  for (int mult = sink.rate_multiple; mult >= 1; --mult) {
    const Rational probe =
        t + (total - at) / (net.capacity() * Rational(mult));
    const Rational got = amount.At(probe);
    if (got >= total) return probe;
    t = probe;
    at = got;
  }
  throw InternalError("horizon search did not converge");
}

void GuardDeskScale(const GridNetwork& net) {
  if (net.node_count() > kDeskScaleNodes) {
    throw GuardError("flow oracle limited to " +
                     std::to_string(kDeskScaleNodes) + " nodes, network has " +
                     std::to_string(net.node_count()));
  }
}

}  // namespace

NodeDistances BfsDistances(const GridNetwork& net, const LocalFrame& frame) {
  const std::size_t n = net.node_count();
  const std::size_t p = net.index(frame.edge().a);
  const std::size_t q = net.index(frame.edge().b);
  auto bfs = [&](std::size_t root) {
    std::vector<int> dist(n, -1);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    std::array<Node, 4> nb;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      const int deg = net.neighbors(net.node_at(u), nb);
      for (int t = 0; t < deg; ++t) {
        const std::size_t v = net.index(nb[static_cast<std::size_t>(t)]);
        if ((u == p && v == q) || (u == q && v == p)) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  };
  // The grid minus an edge pair is symmetric, so distances to a root equal
  // distances from it.
  const auto to_p = bfs(p);
  const auto to_q = bfs(q);
  NodeDistances out;
  out.values.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.values[v] = {to_p[v], to_q[v]};
  return out;
}

std::pair<Rational, Rational> SspLengths(const GridNetwork& net,
                                         const EdgeRef& edge,
                                         const Rational& y,
                                         std::span<const Node> sources) {
  if (sources.empty()) throw std::invalid_argument("empty source set");
  if (y.sign() <= 0 || net.transit() <= y) {
    throw std::out_of_range("successive shortest paths need 0 < y < transit");
  }
  if (!net.contains(edge)) {
    throw std::invalid_argument("edge not in network");
  }
  const std::size_t n = net.node_count();
  const int sink = static_cast<int>(n);
  const int super = static_cast<int>(n + 1);
  struct Arc {
    int to;
    int cap;
    Rational cost;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(n + 2);
  auto add = [&](int u, int v, int cap, const Rational& cost) {
    adj[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap, cost});
    adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0, -cost});
  };
  const std::size_t p = net.index(edge.a);
  const std::size_t q = net.index(edge.b);
  std::array<Node, 4> nb;
  for (std::size_t u = 0; u < n; ++u) {
    const int deg = net.neighbors(net.node_at(u), nb);
    for (int t = 0; t < deg; ++t) {
      const std::size_t v = net.index(nb[static_cast<std::size_t>(t)]);
      if ((u == p && v == q) || (u == q && v == p)) continue;
      add(static_cast<int>(u), static_cast<int>(v), 1, net.transit());
    }
  }
  add(static_cast<int>(p), sink, 1, y);
  add(static_cast<int>(q), sink, 1, net.transit() - y);
  for (const Node& x : sources) {
    if (!net.contains(x)) throw std::invalid_argument("source not in network");
    add(super, static_cast<int>(net.index(x)), 2, 0);
  }

  // Label-correcting shortest path over residual arcs; costs may be negative
  // on reverse arcs but the residual graph has no negative cycle.
  auto shortest = [&]() -> std::optional<Rational> {
    std::vector<std::optional<Rational>> dist(n + 2);
    std::vector<int> via(n + 2, -1);
    std::vector<char> queued(n + 2, 0);
    std::deque<int> queue{super};
    dist[static_cast<std::size_t>(super)] = Rational(0);
    queued[static_cast<std::size_t>(super)] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      queued[static_cast<std::size_t>(u)] = 0;
      for (int a : adj[static_cast<std::size_t>(u)]) {
        const Arc& arc = arcs[static_cast<std::size_t>(a)];
        if (arc.cap <= 0) continue;
        const Rational cand = *dist[static_cast<std::size_t>(u)] + arc.cost;
        auto& dv = dist[static_cast<std::size_t>(arc.to)];
        if (!dv || cand < *dv) {
          dv = cand;
          via[static_cast<std::size_t>(arc.to)] = a;
          if (!queued[static_cast<std::size_t>(arc.to)]) {
            queued[static_cast<std::size_t>(arc.to)] = 1;
            queue.push_back(arc.to);
          }
        }
      }
    }
    if (!dist[static_cast<std::size_t>(sink)]) return std::nullopt;
    for (int v = sink; v != super;) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs[static_cast<std::size_t>(a)].cap -= 1;
      arcs[static_cast<std::size_t>(a ^ 1)].cap += 1;
      v = arcs[static_cast<std::size_t>(a ^ 1)].to;
    }
    return dist[static_cast<std::size_t>(sink)];
  };
  const auto first = shortest();
  const auto second = first ? shortest() : std::nullopt;
  if (!first || !second) {
    throw std::runtime_error("no augmenting path to the sink");
  }
  return {*first, *second};
}

Rational MaxAmount(const GridNetwork& net, const EdgeRef& edge,
                   const Rational& y, std::span<const Node> sources,
                   const Rational& theta, bool supply_capped,
                   const Options& options) {
  GuardDeskScale(net);
  const SinkModel sink = EdgeSink(net, edge, y);
  std::vector<char> is_source(net.node_count(), 0);
  for (const Node& x : sources) {
    if (!net.contains(x)) throw std::invalid_argument("source not in network");
    is_source[net.index(x)] = 1;
  }
  const Rational dt = net.transit() / Rational(options.steps);
  StepMultiple(y, dt, "sink offset");
  return ExpandedAmount(net, sink, is_source, supply_capped, theta,
                        options.steps, options.allow_waiting);
}

Rational ThetaStarOracle(const GridNetwork& net, const EdgeRef& edge,
                         const Rational& y, const Options& options) {
  GuardDeskScale(net);
  const SinkModel sink = EdgeSink(net, edge, y);
  if (options.steps <= 0) throw std::invalid_argument("steps must be positive");
  StepMultiple(y, net.transit() / Rational(options.steps), "sink offset");
  if (net.total_supply().is_zero()) return 0;
  return SolveHorizon(net, sink, options);
}

Rational NodeTime(const GridNetwork& net, Node node, const Options& options) {
  GuardDeskScale(net);
  if (!net.contains(node)) throw std::invalid_argument("node not in network");
  if (net.total_supply().is_zero()) return 0;
  SinkModel sink;
  const std::size_t v = net.index(node);
  sink.attachments = {{v, Rational(0), true}};
  sink.absorbing = v;
  std::array<Node, 4> nb;
  sink.rate_multiple = net.neighbors(node, nb);
  return SolveHorizon(net, sink, options);
}

Rational SubsetMaxTheta(const GridNetwork& net, const EdgeRef& edge,
                        const Rational& y) {
  const std::size_t n = net.node_count();
  if (n > kSubsetEnumerationNodes) {
    throw GuardError("subset enumeration limited to " +
                     std::to_string(kSubsetEnumerationNodes) + " nodes");
  }
  const LocalFrame frame(net, edge);
  const NodeDistances dists = BfsDistances(net, frame);
  const FlowParams params{net.capacity(), net.transit()};
  Rational best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Rational w;
    int dp = std::numeric_limits<int>::max();
    int dq = std::numeric_limits<int>::max();
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask & (1u << v))) continue;
      w += net.supplies()[v];
      dp = std::min(dp, dists[v].dp);
      dq = std::min(dq, dists[v].dq);
    }
    best = Max(best, ThetaCurve(w, dp, dq, params)(y));
  }
  return best;
}

}  // namespace gridsink::oracle
