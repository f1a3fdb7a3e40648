#ifndef COXHECKE_JOB_HPP
#define COXHECKE_JOB_HPP

/*
  Batch driver.  A JobConfig describes one command against one Coxeter
  system; run_job executes it and writes the artifacts into an output
  directory, JSON always and DOT for the graph commands.  Artifacts are
  deterministic byte for byte, embed the config and caps they were run
  with, and carry a completeness statement.

  Word-problem caches persist under <out>/cache keyed by a content hash
  of the Coxeter matrix.  A cache file that fails validation is
  discarded with a warning; cache trouble never fails a run.
*/

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxhecke/coxeter.hpp"
#include "coxhecke/json_io.hpp"
#include "coxhecke/param_poly.hpp"

namespace coxhecke {

inline constexpr const char* kSchemaTag = "coxeter-hecke/v1";

enum class JobCommand {
  Classify,
  Orbit,
  ShiftGraph,
  ClassPoly,
  Centralizer,
  Verify,
  Decompose,
};

const char* job_command_name(JobCommand c);
std::optional<JobCommand> job_command_from_name(const std::string& name);

enum class ArtifactFormat { Json, Dot, Both };

struct JobCaps {
  int length_cap = 6;
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Forwarded to conjugator searches; -1 keeps the library default.
  int search_cap = -1;
};

// Parameter values substituted for (a_c, b_c): either a named form or
// one explicit integer pair per class, with b restricted to +-1 so it
// stays invertible.
struct SpecializationConfig {
  std::string name;  // "group-algebra" | "iwahori" | "" for explicit values
  std::vector<std::pair<long long, long long>> values;

  Specialization realize(int n_classes) const;
  Json to_json() const;
  static SpecializationConfig from_json(const Json& j);
};

struct JobConfig {
  CoxeterMatrix matrix{1};
  std::vector<std::string> names;  // optional; s0, s1, ... when empty
  GeneratorSet J;
  JobCommand command = JobCommand::Classify;
  std::vector<Word> seeds;
  JobCaps caps;
  ArtifactFormat format = ArtifactFormat::Json;
  int threads = 1;
  std::optional<SpecializationConfig> specialization;
  std::optional<Json> element;  // input for the verify command

  static JobConfig from_json(const Json& j);
  Json to_json() const;
  void validate() const;
};

struct JobResult {
  int exit_code = 0;
  std::vector<std::string> artifacts;  // paths written
};

// Exit codes: 0 success, 2 invalid config or input, 3 node budget
// exhausted, 4 verification failed.  Every error is also emitted as a
// one-line JSON object on stderr.
JobResult run_job(const JobConfig& config, const std::string& out_dir);

}  // namespace coxhecke

#endif
