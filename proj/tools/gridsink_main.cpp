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

// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridsink/gridsink.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;

struct Args {
  std::string input;
  std::string edge;
  std::string y;
  std::optional<std::string> node;
  int steps = 0;
  bool include_nodes = false;
  bool no_wait = false;
  std::uint64_t seed = 0;
  std::vector<int> sizes;
  std::string output;
  std::string format = "json";
};

int ExitFor(gs_status status) {
  switch (status) {
    case GS_OK:
      return 0;
    case GS_VERIFY_FAILED:
      return 1;
    case GS_BAD_INPUT:
      return 2;
    case GS_GUARD:
      return 3;
    default:
      return 4;
  }
}

int Report(gs_status status) {
  if (status != GS_OK) std::cerr << "gridsink: " << gs_last_error() << "\n";
  return ExitFor(status);
}

// Owns a string returned by the library.
struct Text {
  char* data = nullptr;
  ~Text() { gs_string_free(data); }
};

struct Network {
  gs_network* handle = nullptr;
  ~Network() { gs_network_free(handle); }
};

gs_status LoadNetwork(const std::string& path, Network& net) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "gridsink: cannot read " << path << "\n";
      return GS_BAD_INPUT;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return gs_network_parse(text.data(), text.size(), &net.handle);
}

int Emit(const Args& args, const char* text) {
  std::string body(text);
  if (body.empty() || body.back() != '\n') body += '\n';
  if (args.output.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!(out << body)) {
    std::cerr << "gridsink: cannot write " << args.output << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int RunSolve(const Args& args) {
  Network net;
  if (gs_status s = LoadNetwork(args.input, net); s != GS_OK) return Report(s);
  Text out;
  gs_status status;
  if (!args.edge.empty()) {
    gs_edge edge;
    if (gs_status s = gs_edge_parse(args.edge.c_str(), &edge); s != GS_OK) {
      return Report(s);
    }
    status = gs_solve_edge_json(net.handle, edge, &out.data);
  } else {
    status = gs_solve_grid_json(net.handle, args.include_nodes, args.steps,
                                &out.data);
  }
  if (status != GS_OK) return Report(status);
  return Emit(args, out.data);
}

int RunEnvelope(const Args& args) {
  Network net;
  if (gs_status s = LoadNetwork(args.input, net); s != GS_OK) return Report(s);
  gs_edge edge;
  if (gs_status s = gs_edge_parse(args.edge.c_str(), &edge); s != GS_OK) {
    return Report(s);
  }
  Text out;
  const gs_format format =
      args.format == "csv" ? GS_FORMAT_CSV : GS_FORMAT_JSON;
  if (gs_status s = gs_envelope_export(net.handle, edge, format, &out.data);
      s != GS_OK) {
    return Report(s);
  }
  return Emit(args, out.data);
}

int RunOracle(const Args& args) {
  Network net;
  if (gs_status s = LoadNetwork(args.input, net); s != GS_OK) return Report(s);
  gs_edge where{};
  gs_rational y{0, 0};
  int node_sink = 0;
  if (args.node) {
    if (!args.edge.empty()) {
      std::cerr << "gridsink: --node and --edge are exclusive\n";
      return kExitBadInput;
    }
    int r = 0, c = 0;
    char comma = 0, extra = 0;
    if (std::sscanf(args.node->c_str(), "%d %c %d %c", &r, &comma, &c,
                    &extra) != 3 ||
        comma != ',') {
      std::cerr << "gridsink: --node must look like r,c\n";
      return kExitBadInput;
    }
    where = {r, c, r, c};
    node_sink = 1;
  } else {
    if (args.edge.empty()) {
      std::cerr << "gridsink: oracle needs --edge or --node\n";
      return kExitBadInput;
    }
    if (gs_status s = gs_edge_parse(args.edge.c_str(), &where); s != GS_OK) {
      return Report(s);
    }
    if (!args.y.empty()) {
      if (gs_status s = gs_rational_parse(args.y.c_str(), &y); s != GS_OK) {
        return Report(s);
      }
    }
  }
  Text out;
  if (gs_status s = gs_oracle_json(net.handle, where, y, node_sink, args.steps,
                                   !args.no_wait, &out.data);
      s != GS_OK) {
    return Report(s);
  }
  return Emit(args, out.data);
}

int RunVerify(const Args& args) {
  Network net;
  if (!args.input.empty()) {
    if (gs_status s = LoadNetwork(args.input, net); s != GS_OK) {
      return Report(s);
    }
  }
  const std::vector<int32_t> sizes(args.sizes.begin(), args.sizes.end());
  Text out;
  const gs_status status =
      gs_verify(net.handle, args.seed, sizes.empty() ? nullptr : sizes.data(),
                sizes.size(), &out.data);
  if (out.data) {
    if (int rc = Emit(args, out.data); rc != kExitOk) return rc;
  }
  return Report(status);
}

int RunBench(const Args& args) {
  const std::vector<int32_t> sizes(args.sizes.begin(), args.sizes.end());
  Text out;
  if (gs_status s = gs_bench(sizes.data(), sizes.size(), args.seed, &out.data);
      s != GS_OK) {
    return Report(s);
  }
  return Emit(args, out.data);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-sink placement on dynamic-flow grid networks"};
  app.require_subcommand(1);
  Args args;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", args.input,
                    "Network document (JSON); stdin when omitted");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", args.output, "Write here instead of stdout");
  };

  auto* solve = app.add_subcommand("solve", "Optimal sink position");
  add_input(solve);
  solve->add_option("--edge", args.edge, "Edge selector r1,c1:r2,c2");
  solve->add_flag("--include-nodes", args.include_nodes,
                  "Also place the sink on every node (flow oracle)");
  solve->add_option("--steps", args.steps, "Oracle time steps per transit")
      ->check(CLI::PositiveNumber);
  add_output(solve);

  auto* envelope = app.add_subcommand("envelope", "Break points of the envelope");
  add_input(envelope);
  envelope->add_option("--edge", args.edge, "Edge selector r1,c1:r2,c2")
      ->required();
  envelope->add_option("--format", args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_output(envelope);

  auto* oracle = app.add_subcommand("oracle", "Flow-based reference values");
  add_input(oracle);
  oracle->add_option("--edge", args.edge, "Edge selector r1,c1:r2,c2");
  oracle->add_option("--node", args.node, "Sink node r,c");
  oracle->add_option("--y", args.y,
                     "Sink offset n or n/d; sweeps the time grid when omitted");
  oracle->add_option("--steps", args.steps, "Time steps per transit")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--no-wait", args.no_wait,
                   "Forbid storage of flow in transit");
  add_output(oracle);

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  add_input(verify);
  verify->add_option("--seed", args.seed, "Random seed");
  verify->add_option("--sizes", args.sizes, "Grid side lengths, e.g. 2,3,4")
      ->delimiter(',');
  add_output(verify);

  auto* bench = app.add_subcommand("bench", "Time the linear-time passes");
  bench->add_option("--sizes", args.sizes, "Grid sides N (>= 16)")
      ->delimiter(',');
  bench->add_option("--seed", args.seed, "Random seed");
  add_output(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  if (*solve) return RunSolve(args);
  if (*envelope) return RunEnvelope(args);
  if (*oracle) return RunOracle(args);
  if (*verify) return RunVerify(args);
  return RunBench(args);
}
