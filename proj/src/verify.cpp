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

#include "gridsink/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gridsink/completion_time.hpp"
#include "gridsink/dominant_sets.hpp"
#include "gridsink/envelope.hpp"
#include "gridsink/errors.hpp"
#include "gridsink/oracle.hpp"
#include "gridsink/solver.hpp"

namespace gridsink::verify {

namespace {

using Rng = std::mt19937_64;

std::int64_t Uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::string Describe(const GridNetwork& net) {
  return std::to_string(net.rows()) + "x" + std::to_string(net.cols());
}

std::string Describe(Node v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Records one check; keeps the first failure message.
  template <typename MakeMessage>
  void Check(bool ok, MakeMessage&& message) {
    ++result_.checks;
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.counterexample = message();
  }
  bool failed() const { return !result_.passed; }
  SuiteResult Done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

// Networks a suite should run on: the input if present and within the cap,
// otherwise seeded random grids over the requested sizes.
std::vector<GridNetwork> Networks(const Options& options, int max_side,
                                  std::size_t max_nodes, bool wide_only) {
  std::vector<GridNetwork> nets;
  if (options.input) {
    if (options.input->node_count() <= max_nodes) {
      nets.push_back(*options.input);
    }
    return nets;
  }
  std::uint64_t salt = 0;
  for (int m : options.sizes) {
    for (int n : options.sizes) {
      if (m < 2 || n < 2 || m > max_side || n > max_side) continue;
      // Transposed grids are isometric; skip them where runs are costly.
      if (wide_only && m > n) continue;
      if (static_cast<std::size_t>(m * n) > max_nodes) continue;
      nets.push_back(RandomGrid(m, n, options.seed * 1000003 + ++salt));
    }
  }
  return nets;
}

std::vector<Node> RandomSubset(const GridNetwork& net, Rng& rng) {
  std::vector<Node> out;
  while (out.empty()) {
    const auto density = Uniform(rng, 1, 100);
    for (std::size_t k = 0; k < net.node_count(); ++k) {
      if (Uniform(rng, 1, 100) <= density) out.push_back(net.node_at(k));
    }
  }
  return out;
}

Rational RandomRational(Rng& rng, std::int64_t lo, std::int64_t hi,
                        std::int64_t max_den) {
  return Rational(Uniform(rng, lo, hi), Uniform(rng, 1, max_den));
}

}  // namespace

GridNetwork RandomGrid(int rows, int cols, std::uint64_t seed,
                       int max_supply) {
  Rng rng(seed);
  std::vector<Rational> supplies(static_cast<std::size_t>(rows * cols));
  for (auto& w : supplies) w = Rational(Uniform(rng, 0, max_supply));
  return GridNetwork(rows, cols, 1, 1, std::move(supplies));
}

GridNetwork UniformGrid(int rows, int cols, const Rational& supply) {
  return GridNetwork(rows, cols, 1, 1,
                     std::vector<Rational>(static_cast<std::size_t>(rows * cols),
                                           supply));
}

SuiteResult DistanceOracle(const Options& options) {
  Suite suite("distance-oracle");
  for (const auto& net : Networks(options, 64, 1u << 16, false)) {
    for (const auto& edge : EnumerateEdges(net)) {
      const LocalFrame frame(net, edge);
      const NodeDistances bfs = oracle::BfsDistances(net, frame);
      for (std::size_t k = 0; k < net.node_count(); ++k) {
        const Node v = net.node_at(k);
        const LocalPoint pt = frame.ToLocal(v);
        const DistancePair got = options.closed_form(pt);
        suite.Check(got == bfs[k], [&] {
          std::ostringstream os;
          os << "grid " << Describe(net) << " edge " << edge.to_string()
             << " node " << Describe(v) << " local (" << pt.i << "," << pt.j
             << "): closed form (" << got.dp << "," << got.dq << ") vs bfs ("
             << bfs[k].dp << "," << bfs[k].dq << ")";
          return os.str();
        });
        // Isometry: grid neighbours map to unit-distance local points.
        std::array<Node, 4> nb;
        const int deg = net.neighbors(v, nb);
        for (int t = 0; t < deg; ++t) {
          const LocalPoint o = frame.ToLocal(nb[static_cast<std::size_t>(t)]);
          suite.Check(std::abs(o.i - pt.i) + std::abs(o.j - pt.j) == 1, [&] {
            return "frame of edge " + edge.to_string() + " breaks adjacency at " +
                   Describe(v);
          });
        }
      }
    }
  }
  return suite.Done();
}

SuiteResult NodeOffsets(const Options& options) {
  Suite suite("node-offsets");
  for (const auto& net : Networks(options, 8, 64, false)) {
    for (const auto& edge : EnumerateEdges(net)) {
      const NodeDistances bfs = oracle::BfsDistances(net, LocalFrame(net, edge));
      for (std::size_t k = 0; k < net.node_count(); ++k) {
        const int off = bfs[k].dp - bfs[k].dq;
        suite.Check(off == -3 || off == -1 || off == 1 || off == 3, [&] {
          return "grid " + Describe(net) + " edge " + edge.to_string() +
                 " node " + Describe(net.node_at(k)) + " has dp-dq = " +
                 std::to_string(off);
        });
      }
    }
  }
  return suite.Done();
}

SuiteResult SetOffsets(const Options& options, int subsets_per_grid) {
  Suite suite("set-offsets");
  Rng rng(options.seed ^ 0x5e70ff5e7ULL);
  for (const auto& net : Networks(options, 8, 64, false)) {
    const auto edges = EnumerateEdges(net);
    for (int s = 0; s < subsets_per_grid; ++s) {
      const auto& edge = edges[static_cast<std::size_t>(
          Uniform(rng, 0, static_cast<std::int64_t>(edges.size()) - 1))];
      const NodeDistances bfs = oracle::BfsDistances(net, LocalFrame(net, edge));
      const auto members = RandomSubset(net, rng);
      const DistancePair d = SetDistances(members, net, bfs);
      suite.Check(std::abs(d.dp - d.dq) <= 3, [&] {
        return "grid " + Describe(net) + " edge " + edge.to_string() +
               ": subset of " + std::to_string(members.size()) +
               " nodes has d(X,p)-d(X,q) = " + std::to_string(d.dp - d.dq);
      });
    }
  }
  return suite.Done();
}

SuiteResult Weights(const Options& options) {
  Suite suite("weights");
  for (const auto& net : Networks(options, 6, 36, false)) {
    for (const auto& edge : EnumerateEdges(net)) {
      const LocalFrame frame(net, edge);
      NodeDistances closed;
      closed.values.resize(net.node_count());
      for (std::size_t k = 0; k < net.node_count(); ++k) {
        closed.values[k] = options.closed_form(frame.ToLocal(net.node_at(k)));
      }
      BucketTable table;
      try {
        table = Bucketize(net, closed);
      } catch (const std::exception& e) {
        suite.Check(false, [&] { return std::string(e.what()); });
        continue;
      }
      const NodeDistances bfs = oracle::BfsDistances(net, frame);
      const auto family = DominantFamily(table);
      suite.Check(family.size() <=
                      7 * static_cast<std::size_t>(table.max_dp() + 1),
                  [&] { return "family larger than 7*(I_max+1)"; });
      for (int i = 0; i <= table.max_dp(); ++i) {
        for (int j = std::max(0, i - 3); j <= i + 3; ++j) {
          Rational naive;
          for (std::size_t k = 0; k < net.node_count(); ++k) {
            if (bfs[k].dp >= i && bfs[k].dq >= j) naive += net.supplies()[k];
          }
          const Rational w = table.Weight(i, j);
          suite.Check(w == naive, [&] {
            return "grid " + Describe(net) + " edge " + edge.to_string() +
                   " weight(" + std::to_string(i) + "," + std::to_string(j) +
                   ") = " + w.to_string() + ", direct scan " +
                   naive.to_string();
          });
          suite.Check(table.Weight(i + 1, j) <= w && table.Weight(i, j + 1) <= w,
                      [&] { return "weights not monotone"; });
        }
      }
    }
  }
  return suite.Done();
}

SuiteResult ThetaShape(const Options& options, int samples) {
  Suite suite("theta-shape");
  Rng rng(options.seed ^ 0x7e7aULL);
  for (int s = 0; s < samples; ++s) {
    const FlowParams params{RandomRational(rng, 1, 9, 4),
                            RandomRational(rng, 1, 8, 3)};
    const Rational w = RandomRational(rng, 1, 400, 6);
    const int dp = static_cast<int>(Uniform(rng, 0, 30));
    const int dq = std::max(0, dp + static_cast<int>(Uniform(rng, -3, 3)));
    const ThetaCurve curve(w, dp, dq, params);
    const auto segs = CurvesToSegments(std::span(&curve, 1)).segments;
    auto where = [&] {
      std::ostringstream os;
      os << "w=" << w << " dp=" << dp << " dq=" << dq
         << " c=" << params.capacity << " tau=" << params.transit;
      return os.str();
    };
    suite.Check(!segs.empty() && segs.size() <= 3, where);
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const auto& sl = segs[k].slope;
      suite.Check(sl == 1 || sl == 0 || sl == -1, where);
      if (k > 0) suite.Check(sl < segs[k - 1].slope, where);
    }
    const Rational eps = params.transit / Rational(1024);
    for (int t = 0; t < 5; ++t) {
      const Rational y = params.transit * Rational(Uniform(rng, 0, 64), 64);
      const Rational theta = curve(y);
      const Rational at = ArrivalAmount(dp, dq, y, theta, params);
      const Rational before = ArrivalAmount(dp, dq, y, theta - eps, params);
      suite.Check(at == w && before < w, [&] {
        return where() + " y=" + y.to_string() + ": o(theta*)=" +
               at.to_string() + " o(theta*-eps)=" + before.to_string();
      });
    }
  }
  return suite.Done();
}

SuiteResult EnvelopeKernel(const Options& options, int sets, int samples) {
  Suite suite("envelope-kernel");
  Rng rng(options.seed ^ 0xe7e1ULL);
  const Rational tau = 1;
  for (int s = 0; s < sets; ++s) {
    const int count = static_cast<int>(Uniform(rng, 1, 64));
    // Every other set uses total-domain lines, whose envelope is continuous
    // and therefore attains its minimum at a break point.
    const bool total_domain = s % 2 == 0;
    std::vector<Segment> segs;
    for (int k = 0; k < count; ++k) {
      Segment seg{RandomRational(rng, -20, 20, 6),
                  RandomRational(rng, -50, 50, 6), 0, tau};
      if (!total_domain) {
        auto a = Uniform(rng, 0, 32);
        auto b = Uniform(rng, 0, 32);
        if (a > b) std::swap(a, b);
        seg.lo = Rational(a, 32);
        seg.hi = Rational(b, 32);
      }
      segs.push_back(seg);
    }
    const UpperEnvelope env = BuildUpperEnvelope(segs);
    const auto breaks = env.BreakPoints();
    suite.Check(breaks.size() <= 12 * segs.size(),
                [&] { return "too many break points"; });
    for (std::size_t k = 1; k < breaks.size(); ++k) {
      suite.Check(breaks[k - 1].y < breaks[k].y,
                  [&] { return "break points not strictly increasing"; });
    }
    std::vector<Rational> ys;
    for (int t = 0; t < samples; ++t) {
      ys.push_back(tau * Rational(t, samples - 1));
    }
    for (const auto& bp : breaks) ys.push_back(bp.y);
    for (const Rational& y : ys) {
      std::optional<Rational> naive;
      for (const auto& seg : segs) {
        if (seg.covers(y) && (!naive || *naive < seg(y))) naive = seg(y);
      }
      const auto got = env.Value(y);
      suite.Check(got == naive, [&] {
        return "set " + std::to_string(s) + " y=" + y.to_string() +
               ": envelope " + (got ? got->to_string() : "none") +
               " vs pointwise max " + (naive ? naive->to_string() : "none");
      });
    }
    if (!total_domain) continue;
    const Minimum m = MinimizeEnvelope(env);
    suite.Check(env.Value(m.y) == m.value,
                [&] { return "minimum not attained at y*"; });
    for (const Rational& y : ys) {
      const Rational v = *env.Value(y);
      suite.Check(m.value <= v && (y >= m.y || m.value < v), [&] {
        return "set " + std::to_string(s) + ": minimize gave (" +
               m.y.to_string() + "," + m.value.to_string() +
               ") but y=" + y.to_string() + " has " + v.to_string();
      });
    }
  }
  return suite.Done();
}

SuiteResult SuccessivePaths(const Options& options, int subsets_per_grid) {
  Suite suite("ssp-paths");
  Rng rng(options.seed ^ 0x55bULL);
  for (const auto& net : Networks(options, 5, 25, false)) {
    const auto edges = EnumerateEdges(net);
    const FlowParams params{net.capacity(), net.transit()};
    for (int s = 0; s < subsets_per_grid; ++s) {
      const auto& edge = edges[static_cast<std::size_t>(
          Uniform(rng, 0, static_cast<std::int64_t>(edges.size()) - 1))];
      const LocalFrame frame(net, edge);
      NodeDistances closed;
      closed.values.resize(net.node_count());
      for (std::size_t k = 0; k < net.node_count(); ++k) {
        closed.values[k] = options.closed_form(frame.ToLocal(net.node_at(k)));
      }
      const auto members = RandomSubset(net, rng);
      const DistancePair d = SetDistances(members, net, closed);
      for (int quarter = 1; quarter <= 3; ++quarter) {
        const Rational y = net.transit() * Rational(quarter, 4);
        const auto ssp = oracle::SspLengths(net, edge, y, members);
        const auto expect = RouteLengths(d.dp, d.dq, y, params);
        suite.Check(ssp == expect, [&] {
          return "grid " + Describe(net) + " edge " + edge.to_string() +
                 " y=" + y.to_string() + ": paths (" + ssp.first.to_string() +
                 "," + ssp.second.to_string() + ") vs (" +
                 expect.first.to_string() + "," + expect.second.to_string() +
                 ")";
        });
      }
    }
  }
  return suite.Done();
}

SuiteResult Triangle(const Options& options) {
  auto nets = Networks(options, 4, oracle::kSubsetEnumerationNodes, true);
  if (!options.input) {
    const std::size_t random_count = nets.size();
    for (std::size_t k = 0; k < random_count; ++k) {
      nets.push_back(UniformGrid(nets[k].rows(), nets[k].cols()));
    }
  }
  return Triangle(nets);
}

SuiteResult Triangle(std::span<const GridNetwork> nets) {
  Suite suite("triangle");
  for (const auto& net : nets) {
    if (net.node_count() > oracle::kSubsetEnumerationNodes) {
      throw GuardError("subset enumeration is limited to " +
                       std::to_string(oracle::kSubsetEnumerationNodes) +
                       " nodes");
    }
    for (const auto& edge : EnumerateEdges(net)) {
      const EdgeSolution sol = SolveEdgeDetailed(net, edge);
      for (int k = 1; k <= 7; ++k) {
        const Rational y = net.transit() * Rational(k, 8);
        const Rational env = *sol.envelope.Value(y);
        const Rational brute = oracle::SubsetMaxTheta(net, edge, y);
        const Rational flow = oracle::ThetaStarOracle(net, edge, y);
        suite.Check(env == brute && std::abs(env.to_double() -
                                             flow.to_double()) <= 1e-6,
                    [&] {
                      return "grid " + Describe(net) + " edge " +
                             edge.to_string() + " y=" + y.to_string() +
                             ": envelope " + env.to_string() + " subsets " +
                             brute.to_string() + " flow " + flow.to_string();
                    });
      }
    }
  }
  return suite.Done();
}

std::vector<SuiteResult> RunAll(const Options& options) {
  return {DistanceOracle(options), NodeOffsets(options),
          SetOffsets(options),     Weights(options),
          ThetaShape(options),     EnvelopeKernel(options),
          SuccessivePaths(options), Triangle(options)};
}

nlohmann::json ToJson(const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    nlohmann::json row = {
        {"name", r.name}, {"passed", r.passed}, {"checks", r.checks}};
    if (!r.passed) row["counterexample"] = r.counterexample;
    suites.push_back(std::move(row));
  }
  return {{"passed", all}, {"suites", std::move(suites)}};
}

}  // namespace gridsink::verify
