//------------------------------------------------------------------------------
//
//   Copyright 2026 the bidmatch authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "market/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "market/audit.hpp"
#include "market/generator.hpp"
#include "market/io.hpp"
#include "market/oracle.hpp"
#include "market/strategy.hpp"

namespace market {

namespace {

std::string slurp(const std::string &path, std::istream &stdin_stream) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

struct FuzzOptions {
  std::uint64_t seed = 1;
  long count = 100;
  int bidders = 4;
  int items = 3;
  long max_value = 6;
  bool with_oracle = false;
};

int cmd_solve(const std::string &path, const std::string &engine, bool trace,
              std::istream &in, std::ostream &out, std::ostream &err) {
  InstanceFile file = parse_instance(slurp(path, in));
  if (file.is_generalized())
    throw UsageError("instance carries scale fields; run 'reduce' first");
  SolveOptions opts;
  opts.collect_trace = trace;
  SolveResult result =
      engine == "fast" ? solve_fast(file.instance, opts) : solve_simple(file.instance, opts);
  if (trace)
    for (const TraceEvent &event : result.trace) err << to_string(event) << "\n";
  out << emit_outcome(file.instance, result, engine);
  return 0;
}

int cmd_check(const std::string &instance_path, const std::string &outcome_path,
              const std::string &mode, std::istream &in, std::ostream &out) {
  InstanceFile file = parse_instance(slurp(instance_path, in));
  Outcome outcome = parse_outcome(file.instance, slurp(outcome_path, in));
  Report rep;
  if (mode == "feasible")
    rep = check_feasible(file.instance, outcome);
  else if (mode == "stable")
    rep = check_stable(file.instance, outcome);
  else
    rep = check_relaxed_stable(file.instance, outcome);
  if (rep.ok()) {
    out << "ok: " << mode << "\n";
    return 0;
  }
  out << rep.str();
  return 1;
}

int cmd_fuzz(const FuzzOptions &fo, std::ostream &out) {
  if (fo.with_oracle && (fo.bidders > 5 || fo.items > 3))
    throw UsageError("--with-oracle needs bidders <= 5 and items <= 3");

  InstanceGenerator gen(fo.seed, fo.bidders, fo.items, fo.max_value);
  SolveOptions traced;
  traced.collect_trace = true;
  for (long t = 0; t < fo.count; ++t) {
    Instance inst = gen.next();
    auto fail = [&](const std::string &what, const Report &rep) {
      out << "instance " << t << " failed: " << what << "\n"
          << rep.str() << emit_instance(inst);
      return 1;
    };

    SolveResult simple = solve_simple(inst, traced);
    SolveResult fast = solve_fast(inst, traced);

    if (simple.outcome.prices != fast.outcome.prices ||
        simple.outcome.utilities != fast.outcome.utilities)
      return fail("engine disagreement", Report{});

    Report stable = check_stable(inst, simple.outcome);
    if (!stable.ok()) return fail("unstable output", stable);

    Report audit_simple = audit_trace(inst, simple);
    if (!audit_simple.ok()) return fail("trace audit (simple)", audit_simple);
    Report audit_fast = audit_trace(inst, fast);
    if (!audit_fast.ok()) return fail("trace audit (fast)", audit_fast);

    if (fo.with_oracle) {
      StableSet set = enumerate_stable(inst);
      Report optimal = assert_bidder_optimal(inst, simple.outcome, set);
      if (!optimal.ok()) return fail("not bidder optimal", optimal);
    }
  }
  out << "ok: " << fo.count << " instances (bidders=" << fo.bidders << ", items=" << fo.items
      << ", max-value=" << fo.max_value << ", seed=" << fo.seed
      << (fo.with_oracle ? ", oracle on" : "") << ")\n";
  return 0;
}

int cmd_reduce(const std::string &path, std::istream &in, std::ostream &out) {
  InstanceFile file = parse_instance(slurp(path, in));
  if (!file.is_generalized())
    throw UsageError("instance has no scale fields; nothing to reduce");
  out << emit_instance(reduce(file.generalized()));
  return 0;
}

int cmd_misreport(const std::string &path, int bidder, long grid_max, bool restricted,
                  std::istream &in, std::ostream &out) {
  InstanceFile file = parse_instance(slurp(path, in));
  if (file.is_generalized())
    throw UsageError("instance carries scale fields; run 'reduce' first");
  if (restricted) validate_restricted_family(file.instance);

  std::vector<Rat> grid;
  for (long x = 0; x <= grid_max; ++x) grid.push_back(Rat(x));
  std::optional<int> pinned;
  if (bidder >= 0) {
    if (bidder >= file.instance.n) throw UsageError("bidder index out of range");
    pinned = bidder;
  }
  auto hit = find_profitable_misreport_in(file.instance, grid, pinned);
  if (!hit) {
    out << "none\n";
    return 0;
  }
  out << "bidder " << hit->bidder << " reports v[" << hit->bidder << "][" << hit->item
      << "] = " << hit->reported_value.str() << " (true " << hit->instance.v[hit->bidder][hit->item].str()
      << "): true utility " << hit->true_utility_honest.str() << " -> "
      << hit->true_utility_lying.str() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"bidder-optimal stable matching for markets with reserve and maximum prices"};
  app.require_subcommand(1);

  std::string path = "-", outcome_path, engine = "simple", mode = "stable";
  bool trace = false, restricted = false;
  int bidder = -1;
  long grid_max = 10;
  FuzzOptions fo;

  auto *solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("path", path, "instance file, or - for stdin");
  solve->add_option("--engine", engine, "simple or fast")
      ->check(CLI::IsMember({"simple", "fast"}));
  solve->add_flag("--trace", trace, "write the event log to stderr");

  auto *check = app.add_subcommand("check", "check an outcome against an instance");
  check->add_option("instance", path, "instance file")->required();
  check->add_option("outcome", outcome_path, "outcome file")->required();
  check->add_option("--mode", mode, "feasible, stable or relaxed")
      ->check(CLI::IsMember({"feasible", "stable", "relaxed"}));

  auto *fuzz = app.add_subcommand("fuzz", "random cross-checks of the two engines");
  fuzz->add_option("--seed", fo.seed, "generator seed");
  fuzz->add_option("--count", fo.count, "number of instances");
  fuzz->add_option("--bidders", fo.bidders, "bidders per instance");
  fuzz->add_option("--items", fo.items, "items per instance");
  fuzz->add_option("--max-value", fo.max_value, "largest generated value");
  fuzz->add_flag("--with-oracle", fo.with_oracle,
                 "also verify bidder optimality by exhaustive enumeration");

  auto *reduce_cmd = app.add_subcommand("reduce", "reduce a generalized instance");
  reduce_cmd->add_option("path", path, "instance file with scale fields");

  auto *misreport = app.add_subcommand("misreport", "search for a profitable misreport");
  misreport->add_option("path", path, "instance file");
  misreport->add_option("--bidder", bidder, "restrict the search to one bidder");
  misreport->add_option("--max", grid_max, "largest reported value tried");
  misreport->add_flag("--restricted", restricted,
                      "require zero reserves and distinct per-bidder maxima");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(path, engine, trace, in, out, err);
    if (check->parsed()) return cmd_check(path, outcome_path, mode, in, out);
    if (fuzz->parsed()) return cmd_fuzz(fo, out);
    if (reduce_cmd->parsed()) return cmd_reduce(path, in, out);
    if (misreport->parsed()) return cmd_misreport(path, bidder, grid_max, restricted, in, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError &e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

int run_cli(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cin, std::cout, std::cerr);
}

}  // namespace market
