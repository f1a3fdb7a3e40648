// Batch front end: loads a job description, applies flag overrides, and
// runs it.  Exit codes: 0 success, 2 bad config or input, 3 node budget
// exhausted, 4 verification failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "coxhecke/job.hpp"

using namespace coxhecke;

namespace {

void emit_error(const std::string& code, const std::string& message) {
  Json line = Json::object();
  line["schema"] = kSchemaTag;
  line["error"] = Json::object();
  line["error"]["code"] = code;
  line["error"]["message"] = message;
  std::cerr << line.dump() << "\n";
}

Word parse_seed(const std::string& csv) {
  Word out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    const auto from = token.find_first_not_of(" \t");
    const auto to = token.find_last_not_of(" \t");
    if (from == std::string::npos)
      throw CoxError(ErrorCode::BadConfig, "empty entry in --seed");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token.substr(from, to - from + 1), &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != to - from + 1)
      throw CoxError(ErrorCode::BadConfig, "--seed wants comma-separated indices");
    out.push_back(value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hecke algebra computations for Coxeter systems"};
  std::string config_path;
  std::string out_dir = ".";
  std::string format;
  std::string seed_csv;
  int threads = 0;
  int cap_length = 0;
  std::uint64_t cap_nodes = 0;

  app.add_option("--config", config_path, "job description file (JSON)")
      ->required();
  app.add_option("--out", out_dir, "output directory (default: .)");
  app.add_option("--format", format, "artifact formats to write")
      ->check(CLI::IsMember({"json", "dot", "both"}));
  auto* threads_opt =
      app.add_option("--threads", threads, "worker threads for table building")
          ->check(CLI::PositiveNumber);
  auto* cap_length_opt =
      app.add_option("--cap-length", cap_length, "length cap for ball scans")
          ->check(CLI::NonNegativeNumber);
  auto* cap_nodes_opt =
      app.add_option("--cap-nodes", cap_nodes, "node budget for searches")
          ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option(
      "--seed", seed_csv, "single seed word, comma-separated, replacing the config seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("BadConfig", e.what());
    return 2;
  }

  try {
    std::ifstream in(config_path, std::ios::binary);
    if (!in)
      throw CoxError(ErrorCode::IoError, "cannot read config file " + config_path);
    const std::string bytes{std::istreambuf_iterator<char>(in), {}};
    Json parsed = Json::parse(bytes, nullptr, false);
    if (parsed.is_discarded())
      throw CoxError(ErrorCode::BadConfig, "config file is not valid JSON");

    JobConfig cfg = JobConfig::from_json(parsed);
    if (!format.empty()) {
      if (format == "json") cfg.format = ArtifactFormat::Json;
      if (format == "dot") cfg.format = ArtifactFormat::Dot;
      if (format == "both") cfg.format = ArtifactFormat::Both;
    }
    if (threads_opt->count() > 0) cfg.threads = threads;
    if (cap_length_opt->count() > 0) cfg.caps.length_cap = cap_length;
    if (cap_nodes_opt->count() > 0) cfg.caps.node_budget = cap_nodes;
    if (seed_opt->count() > 0) cfg.seeds = {parse_seed(seed_csv)};

    return run_job(cfg, out_dir).exit_code;
  } catch (const CoxError& e) {
    emit_error(error_code_name(e.code()), e.what());
    return e.code() == ErrorCode::ResourceLimit ? 3 : 2;
  } catch (const std::exception& e) {
    emit_error("BadConfig", e.what());
    return 2;
  }
}
