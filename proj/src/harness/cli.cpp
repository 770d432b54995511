// Copyright 2026 The Authors.
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

#include "substream/harness/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "substream/error.hpp"
#include "substream/hard_cardinality.hpp"
#include "substream/hard_matroid.hpp"
#include "substream/harness/audit.hpp"
#include "substream/harness/experiment.hpp"
#include "substream/harness/instance.hpp"
#include "substream/harness/tables.hpp"
#include "substream/verify.hpp"

#ifndef SUBSTREAM_GOLDEN_DIR
#define SUBSTREAM_GOLDEN_DIR "data/golden"
#endif

namespace substream::harness {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

// Instance flags shared by gen, verify, run and audit.
struct InstanceFlags {
  std::string kind;
  std::string file;
  int K = 0, h = 0, m = 0, n = 0, universe = 0;
  bool partition = false;

  void Attach(CLI::App* cmd, const char* kind_flag) {
    cmd->add_option(kind_flag, kind, "cardinality, matroid or coverage");
    cmd->add_option("--instance", file, "instance JSON file");
    cmd->add_option("--K", K, "rank / cardinality bound");
    cmd->add_option("--h", h, "cardinality shape parameter (default K)");
    cmd->add_option("--m", m, "matroid class size (default 2(K-1))");
    cmd->add_option("--n", n, "ground-set size");
    cmd->add_option("--universe", universe, "coverage universe size (default 2n)");
    cmd->add_flag("--partition", partition, "coverage under a partition matroid");
  }

  InstanceSpec Build(std::uint64_t seed) const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + file);
      std::stringstream text;
      text << in.rdbuf();
      return InstanceSpec::FromJson(text.str());
    }
    if (kind.empty()) throw Error(ErrorCode::kInvalidArgument, "give an instance kind or file");
    InstanceSpec spec;
    spec.kind = ParseInstanceKind(kind);
    spec.K = K;
    spec.h = h;
    spec.m = m;
    spec.n = n;
    spec.universe = universe;
    spec.partition = partition;
    spec.seed = seed;
    return spec.Normalized();
  }
};

class Output {
 public:
  Output(const Globals& g, std::ostream& fallback) : path_(g.out), fallback_(fallback) {}

  void Write(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path_);
    file << text;
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

void CheckFormat(const Globals& g) {
  if (g.format != "json" && g.format != "csv") {
    throw Error(ErrorCode::kInvalidArgument, "--format is json or csv");
  }
}

int Verify(const InstanceSpec& spec, bool exhaustive, int limit, std::ostream& out,
           std::ostream& err) {
  const Instance inst = BuildInstance(spec);
  std::optional<std::string> failure;
  if (inst.card) failure = CheckCardProfileStructure(inst.card->params());
  if (inst.mat && spec.K <= 4) failure = CheckMatProfileStructure(spec.K);
  if (failure) {
    err << "profile check failed: " << *failure << "\n";
    return kExitMismatch;
  }
  if (exhaustive) {
    const VerifyReport report = VerifyMonotoneSubmodular(*inst.oracle, limit);
    if (!report.ok) {
      err << "exhaustive check failed: " << report.witness->Describe() << "\n";
      return kExitMismatch;
    }
  }
  out << "ok: " << InstanceKindName(spec.kind) << " n=" << inst.n()
      << (exhaustive ? " (exhaustive)" : " (profile level)") << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming submodular maximization: hard instances and branching algorithms",
               "substream"};
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "base seed");
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--format", g.format, "json or csv");

  // gen
  CLI::App* gen = app.add_subcommand("gen", "write an instance file");
  InstanceFlags gen_flags;
  gen_flags.Attach(gen, "--kind");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "check monotone submodularity");
  InstanceFlags verify_flags;
  verify_flags.Attach(verify, "--constraint");
  bool exhaustive = false;
  int limit = kDefaultExhaustiveLimit;
  verify->add_flag("--exhaustive", exhaustive, "enumerate all subsets");
  verify->add_option("--limit", limit, "largest n for --exhaustive");

  // run
  CLI::App* run = app.add_subcommand("run", "run an experiment");
  InstanceFlags run_flags;
  run_flags.Attach(run, "--kind");
  std::string alg = "branching", epsilon = "1/10", dist;
  int trials = 1;
  std::optional<std::size_t> budget;
  run->add_option("--alg", alg, "branching, greedy, sieve or store-all");
  run->add_option("--epsilon", epsilon, "guess-grid epsilon, e.g. 0.1 or 1/10");
  run->add_option("--trials", trials, "number of trials");
  run->add_option("--dist", dist, "card-D, matroid-D or uniform");
  run->add_option("--budget", budget, "sieve element budget");

  // audit
  CLI::App* audit = app.add_subcommand("audit", "canonical-process audit on a hard instance");
  InstanceFlags audit_flags;
  audit_flags.Attach(audit, "--kind");
  std::string audit_alg = "sieve", audit_eps = "1/10";
  int audit_trials = 100;
  std::optional<std::size_t> audit_budget;
  bool trend = false;
  audit->add_option("--alg", audit_alg, "sieve, store-all or branching");
  audit->add_option("--epsilon", audit_eps, "epsilon");
  audit->add_option("--trials", audit_trials, "number of trials");
  audit->add_option("--budget", audit_budget, "element budget s");
  audit->add_flag("--trend", trend, "also audit at twice the size and compare");

  // tables
  CLI::App* tables = app.add_subcommand("tables", "emit a reference grid as CSV");
  int which = 0;
  bool check = false;
  std::string golden = SUBSTREAM_GOLDEN_DIR;
  tables->add_option("--which", which, "2, 3 or 4")->required();
  tables->add_flag("--check", check, "compare against the golden CSV");
  tables->add_option("--golden", golden, "directory of golden CSVs");

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "limiting-ratio sweep over K");
  std::string sweep_kind = "cardinality";
  int from = 2, to = 50;
  sweep->add_option("--kind", sweep_kind, "cardinality or matroid");
  sweep->add_option("--from", from, "first K");
  sweep->add_option("--to", to, "last K");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    CheckFormat(g);
    Output output(g, out);
    if (gen->parsed()) {
      output.Write(gen_flags.Build(g.seed).ToJson());
      return kExitOk;
    }
    if (verify->parsed()) {
      return Verify(verify_flags.Build(g.seed), exhaustive, limit, out, err);
    }
    if (run->parsed()) {
      if (!IsKnownAlgorithm(alg)) {
        throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + alg + "'");
      }
      ExperimentConfig config;
      config.instance = run_flags.Build(g.seed);
      config.algorithm = alg;
      config.epsilon = ParseRational(epsilon);
      config.trials = trials;
      config.seed = g.seed;
      if (!dist.empty()) config.distribution = ParseDistribution(dist);
      config.budget = budget;
      const RunReport report = RunExperiment(config);
      output.Write(g.format == "json" ? ReportToJson(report) : ReportToCsv(report));
      const bool clean = report.total_violations() == 0 && report.infeasible() == 0 &&
                         report.completed() == report.trials.size();
      return clean ? kExitOk : kExitMismatch;
    }
    if (audit->parsed()) {
      CanonicalAuditConfig config;
      config.instance = audit_flags.Build(g.seed);
      config.algorithm = audit_alg;
      config.epsilon = ParseRational(audit_eps);
      config.trials = audit_trials;
      config.budget = audit_budget;
      config.seed = g.seed;
      const CanonicalAudit result = RunCanonicalAudit(config);
      std::string text = g.format == "json" ? AuditToJson(result) : AuditToCsv(result);
      int code = kExitOk;
      if (trend) {
        CanonicalAuditConfig doubled = config;
        if (doubled.instance.kind == InstanceKind::kMatroid) {
          doubled.instance.m *= 2;
        } else {
          doubled.instance.n *= 2;
        }
        const CanonicalAudit bigger = RunCanonicalAudit(doubled);
        const bool ok = HalvingConsistent(result.deviation, bigger.deviation);
        if (g.format == "json") {
          std::string second = AuditToJson(bigger);
          text.pop_back();
          second.pop_back();
          text = "[\n" + text + ",\n" + second + "\n]\n";
        } else {
          const std::string rows = AuditToCsv(bigger);
          text += rows.substr(rows.find('\n') + 1);  // header once
        }
        std::ostringstream line;
        line << "trend: deviation " << result.deviation.rate() << " -> "
             << bigger.deviation.rate() << (ok ? " consistent" : " inconsistent")
             << " with halving\n";
        err << line.str();
        if (!ok) code = kExitMismatch;
      }
      output.Write(text);
      return code;
    }
    if (tables->parsed()) {
      const std::string csv = EmitTable(which);
      output.Write(csv);
      if (!check) return kExitOk;
      const std::string name = which == 2 ? "table2_p0.csv" : "table" + std::to_string(which) + ".csv";
      std::ifstream in(golden + "/" + name);
      if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + golden + "/" + name);
      std::stringstream want;
      want << in.rdbuf();
      const std::vector<std::string> diffs = DiffCsv(want.str(), csv);
      for (const std::string& d : diffs) err << "mismatch: " << d << "\n";
      if (diffs.empty() && want.str() != csv) err << "mismatch: bytes differ\n";
      return diffs.empty() && want.str() == csv ? kExitOk : kExitMismatch;
    }
    if (sweep->parsed()) {
      output.Write(RatioSweepCsv(sweep_kind, from, to));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kInvalidArgument ||
                       e.code() == ErrorCode::kInvalidParams ||
                       e.code() == ErrorCode::kIncompatibleDistribution ||
                       e.code() == ErrorCode::kWrongK;
    return usage ? kExitUsage : kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace substream::harness
