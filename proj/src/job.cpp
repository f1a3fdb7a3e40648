#include "coxhecke/job.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "coxhecke/centralizer.hpp"
#include "coxhecke/class_poly.hpp"
#include "coxhecke/conjugacy.hpp"
#include "coxhecke/hecke.hpp"

namespace coxhecke {

const char* job_command_name(JobCommand c) {
  switch (c) {
    case JobCommand::Classify: return "classify";
    case JobCommand::Orbit: return "orbit";
    case JobCommand::ShiftGraph: return "shift-graph";
    case JobCommand::ClassPoly: return "class-poly";
    case JobCommand::Centralizer: return "centralizer";
    case JobCommand::Verify: return "verify";
    case JobCommand::Decompose: return "decompose";
  }
  return "unknown";
}

std::optional<JobCommand> job_command_from_name(const std::string& name) {
  for (JobCommand c :
       {JobCommand::Classify, JobCommand::Orbit, JobCommand::ShiftGraph,
        JobCommand::ClassPoly, JobCommand::Centralizer, JobCommand::Verify,
        JobCommand::Decompose})
    if (name == job_command_name(c)) return c;
  return std::nullopt;
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw CoxError(ErrorCode::BadConfig, what);
}

const char* format_name(ArtifactFormat f) {
  switch (f) {
    case ArtifactFormat::Json: return "json";
    case ArtifactFormat::Dot: return "dot";
    case ArtifactFormat::Both: return "both";
  }
  return "unknown";
}

ArtifactFormat format_from_name(const std::string& name) {
  if (name == "json") return ArtifactFormat::Json;
  if (name == "dot") return ArtifactFormat::Dot;
  if (name == "both") return ArtifactFormat::Both;
  bad("format must be json, dot, or both");
}

void emit_json_line(const char* key, const std::string& code,
                    const std::string& message) {
  Json line = Json::object();
  line["schema"] = kSchemaTag;
  line[key] = Json::object();
  line[key]["code"] = code;
  line[key]["message"] = message;
  std::cerr << line.dump() << "\n";
}

void emit_error(ErrorCode code, const std::string& message) {
  emit_json_line("error", error_code_name(code), message);
}

void emit_warning(const std::string& code, const std::string& message) {
  emit_json_line("warning", code, message);
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw CoxError(ErrorCode::IoError, "cannot open " + tmp.string());
    out << bytes;
    out.flush();
    if (!out)
      throw CoxError(ErrorCode::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw CoxError(ErrorCode::IoError,
                   "cannot move " + tmp.string() + " into place: " + ec.message());
}

// The cache file carries the schema tag, the matrix hash, and sorted
// (queried word, canonical word) pairs.  A file for another matrix is
// ignored silently; anything malformed is discarded with a warning.
void cache_load(const CoxeterSystem& sys, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  const std::string bytes{std::istreambuf_iterator<char>(in), {}};
  const Json j = Json::parse(bytes, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    emit_warning("CacheDiscarded", "cache file is not valid JSON: " + path.string());
    return;
  }
  if (j.value("schema", "") != kSchemaTag) {
    emit_warning("CacheDiscarded", "cache file has a foreign schema: " + path.string());
    return;
  }
  if (j.value("matrix_hash", "") != hash_hex(sys.matrix().content_hash())) return;
  try {
    if (!j.contains("entries") || !j["entries"].is_array()) bad("missing entries");
    std::vector<std::pair<Word, Word>> entries;
    entries.reserve(j["entries"].size());
    for (const Json& pair : j["entries"]) {
      if (!pair.is_array() || pair.size() != 2) bad("malformed entry");
      entries.emplace_back(word_from_json(pair[0]), word_from_json(pair[1]));
    }
    sys.import_cache(entries);
  } catch (const CoxError& e) {
    emit_warning("CacheDiscarded",
                 "cache file rejected (" + std::string(e.what()) + "): " + path.string());
  }
}

void cache_store(const CoxeterSystem& sys, const std::filesystem::path& path) {
  try {
    Json j = Json::object();
    j["schema"] = kSchemaTag;
    j["matrix_hash"] = hash_hex(sys.matrix().content_hash());
    Json entries = Json::array();
    for (const auto& [key, value] : sys.export_cache())
      entries.push_back(Json::array({word_json(key), word_json(value)}));
    j["entries"] = std::move(entries);
    write_atomic(path, j.dump(2) + "\n");
  } catch (const CoxError& e) {
    emit_warning("CacheNotSaved", e.what());
  }
}

struct CommandOutput {
  std::string completeness;
  Json results;
  std::optional<std::string> dot;
  bool verify_failed = false;
};

std::vector<ShiftArrow> arrows_within(const CoxeterSystem& sys,
                                      const std::vector<Element>& nodes,
                                      const GeneratorSet& J) {
  std::vector<ShiftArrow> out;
  for (const Element& w : nodes)
    for (ShiftArrow& a : shift_neighbors(sys, w, J)) out.push_back(std::move(a));
  return out;
}

Json arrows_json(const std::vector<ShiftArrow>& arrows) {
  Json out = Json::array();
  for (const ShiftArrow& a : arrows) out.push_back(shift_arrow_json(a));
  return out;
}

CommandOutput run_classify(const CoxeterSystem& sys, const JobConfig& cfg) {
  CommandOutput out;
  out.results = Json::array();
  for (const Word& seed : cfg.seeds) {
    const Element w = sys.normalize(seed);
    Json row = Json::object();
    row["seed"] = word_json(seed);
    row["element"] = element_json(w);
    row["report"] =
        class_decision_json(decide_finite(sys, w, cfg.J, cfg.caps.node_budget));
    out.results.push_back(std::move(row));
  }
  out.completeness = "verdicts exact for the listed seeds";
  return out;
}

CommandOutput run_orbit(const CoxeterSystem& sys, const JobConfig& cfg) {
  CommandOutput out;
  out.results = Json::array();
  std::set<Element> all_nodes;
  std::vector<ShiftArrow> all_arrows;
  for (const Word& seed : cfg.seeds) {
    const Element w = sys.normalize(seed);
    const ClassDecision dec = decide_finite(sys, w, cfg.J, cfg.caps.node_budget);
    if (!dec.finite)
      throw CoxError(ErrorCode::NotFinite,
                     "seed has an infinite orbit; classify reports the certificate");
    const std::vector<ShiftArrow> arrows = arrows_within(sys, dec.orbit, cfg.J);
    Json row = Json::object();
    row["seed"] = word_json(seed);
    row["element"] = element_json(w);
    Json orbit = Json::array();
    for (const Element& u : dec.orbit) orbit.push_back(element_json(u));
    row["orbit"] = std::move(orbit);
    Json mins = Json::array();
    for (const Element& u : dec.minimal) mins.push_back(element_json(u));
    row["min"] = std::move(mins);
    Json maxs = Json::array();
    for (const Element& u : dec.maximal) maxs.push_back(element_json(u));
    row["max"] = std::move(maxs);
    row["arrows"] = arrows_json(arrows);
    out.results.push_back(std::move(row));

    const bool fresh = all_nodes.insert(dec.orbit.front()).second;
    if (fresh) {
      all_nodes.insert(dec.orbit.begin(), dec.orbit.end());
      all_arrows.insert(all_arrows.end(), arrows.begin(), arrows.end());
    }
  }
  out.dot = dot_shift_graph({all_nodes.begin(), all_nodes.end()}, all_arrows,
                            cfg.names);
  out.completeness = "orbits fully enumerated for the listed seeds";
  return out;
}

CommandOutput run_shift_graph(const CoxeterSystem& sys, const JobConfig& cfg) {
  CommandOutput out;
  const std::vector<Element> nodes =
      sys.ball(cfg.caps.length_cap, cfg.caps.node_budget);
  const std::vector<ShiftArrow> arrows = arrows_within(sys, nodes, cfg.J);
  out.results = Json::object();
  Json node_list = Json::array();
  for (const Element& w : nodes) node_list.push_back(element_json(w));
  out.results["nodes"] = std::move(node_list);
  out.results["edges"] = arrows_json(arrows);
  out.dot = dot_shift_graph(nodes, arrows, cfg.names);
  out.completeness =
      "nodes complete up to length " + std::to_string(cfg.caps.length_cap);
  return out;
}

CommandOutput run_class_poly(const CoxeterSystem& sys, const JobConfig& cfg) {
  CommandOutput out;
  out.results = Json::array();
  std::optional<Specialization> sp;
  if (cfg.specialization)
    sp = cfg.specialization->realize(sys.generator_class_count());
  for (const Word& seed : cfg.seeds) {
    const Element w = sys.normalize(seed);
    const ClassDecision dec = decide_finite(sys, w, cfg.J, cfg.caps.node_budget);
    const ClassPolyTable table =
        class_poly_max(sys, cfg.J, dec, cfg.caps.node_budget);
    Json row = class_poly_table_json(table);
    if (sp) {
      std::size_t i = 0;
      for (const auto& [u, p] : table.f)
        row["entries"][i++]["value"] = uni_laurent_json(sp->apply(p));
    }
    row["seed"] = word_json(seed);
    out.results.push_back(std::move(row));
  }
  out.completeness = "tables exact over the full recursion domain";
  return out;
}

CommandOutput run_centralizer(const CoxeterSystem& sys, const JobConfig& cfg) {
  CommandOutput out;
  const BasisEnumeration e = enumerate_basis(
      sys, cfg.J, cfg.caps.length_cap, cfg.threads, cfg.caps.node_budget);
  std::optional<Specialization> sp;
  if (cfg.specialization)
    sp = cfg.specialization->realize(sys.generator_class_count());
  out.results = Json::array();
  for (const CentralizerBasisElement& zb : e.basis) {
    Json row = Json::object();
    row["class_rep"] = element_json(zb.rep);
    row["z"] = hecke_element_json(zb.z);
    Json verified = Json::object();
    verified["coeffs"] = check_membership_coeffs(sys, cfg.J, zb.z).pass;
    verified["commutation"] = check_commutation(sys, cfg.J, zb.z).pass;
    row["verified"] = std::move(verified);
    if (sp) row["z_specialized"] = specialized_element_json(specialize(zb.z, *sp));
    out.results.push_back(std::move(row));
  }
  out.completeness =
      e.complete ? "all classes enumerated; the cap reaches the longest element"
                 : "classes complete up to length " +
                       std::to_string(cfg.caps.length_cap);
  return out;
}

const char* coeff_condition_name(CoeffCondition c) {
  switch (c) {
    case CoeffCondition::EqualLengthEdge: return "equal-length-edge";
    case CoeffCondition::StrictArrow: return "strict-arrow";
  }
  return "unknown";
}

Json membership_json(const MembershipReport& mem) {
  Json out = Json::object();
  out["pass"] = mem.pass;
  Json violations = Json::array();
  for (const CoeffViolation& v : mem.violations) {
    Json row = Json::object();
    row["condition"] = coeff_condition_name(v.condition);
    row["word"] = element_json(v.w);
    row["generator"] = v.s;
    violations.push_back(std::move(row));
  }
  out["violations"] = std::move(violations);
  return out;
}

Json commutation_json(const CommutationReport& com) {
  Json out = Json::object();
  out["pass"] = com.pass;
  out["witness"] = com.witness ? Json(*com.witness) : Json(nullptr);
  return out;
}

CommandOutput run_verify(const CoxeterSystem& sys, const JobConfig& cfg) {
  CommandOutput out;
  out.results = Json::object();
  if (cfg.element) {
    const HeckeElement h = hecke_element_from_json(sys, *cfg.element);
    const MembershipReport mem = check_membership_coeffs(sys, cfg.J, h);
    const CommutationReport com = check_commutation(sys, cfg.J, h);
    out.results["input"] = hecke_element_json(h);
    out.results["coeffs"] = membership_json(mem);
    out.results["commutation"] = commutation_json(com);
    out.results["criteria_agree"] = mem.pass == com.pass;
    out.results["pass"] = mem.pass && com.pass;
    out.verify_failed = !(mem.pass && com.pass);
  } else {
    // Self-check: rebuild the basis and put every element through both
    // criteria, then confirm the top length layer of each orbit is
    // connected by length-subtractive conjugations.
    const BasisEnumeration e = enumerate_basis(
        sys, cfg.J, cfg.caps.length_cap, cfg.threads, cfg.caps.node_budget);
    bool all = true;
    Json rows = Json::array();
    for (const CentralizerBasisElement& zb : e.basis) {
      const MembershipReport mem = check_membership_coeffs(sys, cfg.J, zb.z);
      const CommutationReport com = check_commutation(sys, cfg.J, zb.z);
      const ClassDecision dec =
          decide_finite(sys, zb.rep, cfg.J, cfg.caps.node_budget);
      bool connected = true;
      for (std::size_t i = 0; i + 1 < dec.maximal.size(); ++i)
        connected = connected &&
                    strongly_conjugate(sys, dec.maximal[i], dec.maximal[i + 1],
                                       cfg.J, StrongMode::LengthSubtractive,
                                       cfg.caps.search_cap, cfg.caps.node_budget)
                        .related;
      Json row = Json::object();
      row["class_rep"] = element_json(zb.rep);
      row["coeffs"] = mem.pass;
      row["commutation"] = com.pass;
      row["top_layer_connected"] = connected;
      rows.push_back(std::move(row));
      all = all && mem.pass && com.pass && connected;
    }
    out.results["basis"] = std::move(rows);
    out.results["pass"] = all;
    out.verify_failed = !all;
  }
  out.completeness = "checks exact at the configured caps";
  return out;
}

CommandOutput run_decompose(const CoxeterSystem& sys, const JobConfig& cfg) {
  CommandOutput out;
  const std::vector<Element> universe =
      sys.ball(cfg.caps.length_cap, cfg.caps.node_budget);
  out.results = decomposition_json(
      partial_decomposition(sys, cfg.J, universe, cfg.caps.node_budget));
  out.completeness =
      "pieces computed over the ball of radius " +
      std::to_string(cfg.caps.length_cap);
  return out;
}

CommandOutput run_command(const CoxeterSystem& sys, const JobConfig& cfg) {
  switch (cfg.command) {
    case JobCommand::Classify: return run_classify(sys, cfg);
    case JobCommand::Orbit: return run_orbit(sys, cfg);
    case JobCommand::ShiftGraph: return run_shift_graph(sys, cfg);
    case JobCommand::ClassPoly: return run_class_poly(sys, cfg);
    case JobCommand::Centralizer: return run_centralizer(sys, cfg);
    case JobCommand::Verify: return run_verify(sys, cfg);
    case JobCommand::Decompose: return run_decompose(sys, cfg);
  }
  bad("unknown command");
}

}  // namespace

Specialization SpecializationConfig::realize(int n_classes) const {
  if (name == "group-algebra") return Specialization::group_algebra(n_classes);
  if (name == "iwahori") return Specialization::iwahori(n_classes);
  if (!name.empty()) bad("unknown specialization name: " + name);
  if (values.size() != static_cast<std::size_t>(n_classes))
    bad("specialization needs one (a, b) pair per parameter class");
  Specialization sp;
  for (const auto& [a, b] : values) {
    if (b != 1 && b != -1)
      throw CoxError(ErrorCode::NonInvertibleB,
                     "integer specializations need b = 1 or b = -1");
    sp.alpha.push_back(UniLaurent::constant(a));
    sp.beta.push_back(UniLaurent::constant(b));
  }
  return sp;
}

Json SpecializationConfig::to_json() const {
  if (!name.empty()) return name;
  Json out = Json::array();
  for (const auto& [a, b] : values) out.push_back(Json::array({a, b}));
  return out;
}

SpecializationConfig SpecializationConfig::from_json(const Json& j) {
  SpecializationConfig out;
  if (j.is_string()) {
    out.name = j.get<std::string>();
    if (out.name != "group-algebra" && out.name != "iwahori")
      bad("unknown specialization name: " + out.name);
    return out;
  }
  if (!j.is_array()) bad("specialization must be a name or a list of [a, b] pairs");
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      bad("specialization must be a name or a list of [a, b] pairs");
    out.values.emplace_back(pair[0].get<long long>(), pair[1].get<long long>());
  }
  return out;
}

JobConfig JobConfig::from_json(const Json& j) {
  if (!j.is_object()) bad("config must be a JSON object");
  static const std::set<std::string> known = {
      "schema", "matrix", "names",   "J",       "command",        "seeds",
      "caps",   "format", "threads", "element", "specialization",
  };
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) bad("unknown config key: " + key);
  if (j.contains("schema") && j["schema"] != kSchemaTag)
    bad("config schema must be " + std::string(kSchemaTag));

  if (!j.contains("matrix")) bad("config needs a matrix");
  const Json& mj = j["matrix"];
  if (!mj.is_array()) bad("matrix must be a list of integer rows");
  std::vector<std::vector<int>> rows;
  for (const Json& rj : mj) {
    if (!rj.is_array()) bad("matrix must be a list of integer rows");
    std::vector<int> row;
    for (const Json& v : rj) {
      if (!v.is_number_integer()) bad("matrix must be a list of integer rows");
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }

  JobConfig cfg;
  cfg.matrix = CoxeterMatrix::from_rows(rows);

  if (j.contains("names")) {
    if (!j["names"].is_array()) bad("names must be a list of strings");
    for (const Json& v : j["names"]) {
      if (!v.is_string()) bad("names must be a list of strings");
      cfg.names.push_back(v.get<std::string>());
    }
    if (cfg.names.size() != static_cast<std::size_t>(cfg.matrix.rank()))
      bad("names must list one string per generator");
  }

  if (j.contains("J")) {
    std::vector<Gen> gens;
    for (Gen g : word_from_json(j["J"])) gens.push_back(g);
    cfg.J = GeneratorSet(std::move(gens));
  } else {
    cfg.J = GeneratorSet::full(cfg.matrix.rank());
  }

  if (!j.contains("command") || !j["command"].is_string())
    bad("config needs a command");
  const auto cmd = job_command_from_name(j["command"].get<std::string>());
  if (!cmd) bad("unknown command: " + j["command"].get<std::string>());
  cfg.command = *cmd;

  if (j.contains("seeds")) {
    if (!j["seeds"].is_array()) bad("seeds must be a list of words");
    for (const Json& s : j["seeds"]) cfg.seeds.push_back(word_from_json(s));
  }

  if (j.contains("caps")) {
    const Json& cj = j["caps"];
    if (!cj.is_object()) bad("caps must be an object");
    for (const auto& [key, value] : cj.items())
      if (key != "length" && key != "nodes" && key != "search")
        bad("unknown caps key: " + key);
    if (cj.contains("length")) cfg.caps.length_cap = cj["length"].get<int>();
    if (cj.contains("nodes"))
      cfg.caps.node_budget = cj["nodes"].get<std::uint64_t>();
    if (cj.contains("search")) cfg.caps.search_cap = cj["search"].get<int>();
  }

  if (j.contains("format"))
    cfg.format = format_from_name(j["format"].get<std::string>());
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  if (j.contains("specialization"))
    cfg.specialization = SpecializationConfig::from_json(j["specialization"]);
  if (j.contains("element")) cfg.element = j["element"];
  return cfg;
}

Json JobConfig::to_json() const {
  Json out = Json::object();
  Json rows = Json::array();
  for (Gen i = 0; i < matrix.rank(); ++i) {
    Json row = Json::array();
    for (Gen k = 0; k < matrix.rank(); ++k) row.push_back(matrix.order(i, k));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  if (!names.empty()) {
    Json nl = Json::array();
    for (const std::string& n : names) nl.push_back(n);
    out["names"] = std::move(nl);
  }
  out["J"] = generator_set_json(J);
  out["command"] = job_command_name(command);
  Json seed_list = Json::array();
  for (const Word& s : seeds) seed_list.push_back(word_json(s));
  out["seeds"] = std::move(seed_list);
  Json caps_obj = Json::object();
  caps_obj["length"] = caps.length_cap;
  caps_obj["nodes"] = caps.node_budget;
  caps_obj["search"] = caps.search_cap;
  out["caps"] = std::move(caps_obj);
  out["format"] = format_name(format);
  out["threads"] = threads;
  if (specialization) out["specialization"] = specialization->to_json();
  if (element) out["element"] = *element;
  return out;
}

void JobConfig::validate() const {
  matrix.validate();
  if (!J.empty() && J.members().back() >= matrix.rank())
    throw CoxError(ErrorCode::IndexOutOfRange,
                   "J names a generator outside the matrix");
  for (const Word& seed : seeds)
    for (Gen g : seed)
      if (g < 0 || g >= matrix.rank())
        throw CoxError(ErrorCode::IndexOutOfRange,
                       "seed names a generator outside the matrix");
  if (threads < 1) bad("threads must be at least 1");
  if (caps.length_cap < 0) bad("the length cap cannot be negative");
  if (caps.node_budget == 0) bad("the node budget cannot be zero");
  if (caps.search_cap < -1) bad("the search cap cannot go below -1");
  const bool needs_seeds = command == JobCommand::Classify ||
                           command == JobCommand::Orbit ||
                           command == JobCommand::ClassPoly;
  if (needs_seeds && seeds.empty())
    bad(std::string(job_command_name(command)) + " needs at least one seed");
  const bool has_graph =
      command == JobCommand::Orbit || command == JobCommand::ShiftGraph;
  if (format == ArtifactFormat::Dot && !has_graph)
    bad(std::string(job_command_name(command)) + " has no DOT artifact");
  if (element && command != JobCommand::Verify)
    bad("only verify takes an element input");
}

JobResult run_job(const JobConfig& cfg, const std::string& out_dir) {
  JobResult res;
  try {
    cfg.validate();
    const CoxeterSystem sys(cfg.matrix);
    sys.check_subset(cfg.J);

    const std::filesystem::path out(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(out / "cache", ec);
    if (ec)
      throw CoxError(ErrorCode::IoError,
                     "cannot create " + (out / "cache").string() + ": " + ec.message());
    const std::filesystem::path cache_path =
        out / "cache" /
        ("normal-forms-" + hash_hex(cfg.matrix.content_hash()) + ".json");
    cache_load(sys, cache_path);

    const CommandOutput co = run_command(sys, cfg);

    Json artifact = Json::object();
    artifact["schema"] = kSchemaTag;
    artifact["command"] = job_command_name(cfg.command);
    artifact["config"] = cfg.to_json();
    artifact["caps"] = artifact["config"]["caps"];
    artifact["completeness"] = co.completeness;
    artifact["results"] = co.results;

    const std::string base = job_command_name(cfg.command);
    if (cfg.format != ArtifactFormat::Dot) {
      const std::filesystem::path path = out / (base + ".json");
      write_atomic(path, artifact.dump(2) + "\n");
      res.artifacts.push_back(path.string());
    }
    if (co.dot && cfg.format != ArtifactFormat::Json) {
      const std::filesystem::path path = out / (base + ".dot");
      write_atomic(path, *co.dot);
      res.artifacts.push_back(path.string());
    }

    cache_store(sys, cache_path);
    if (co.verify_failed) res.exit_code = 4;
  } catch (const CoxError& e) {
    emit_error(e.code(), e.what());
    res.exit_code = e.code() == ErrorCode::ResourceLimit ? 3 : 2;
  } catch (const std::exception& e) {
    emit_error(ErrorCode::BadConfig, e.what());
    res.exit_code = 2;
  }
  return res;
}

}  // namespace coxhecke
