#include "ldc/cli.hpp"

#include <sys/resource.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "ldc/driver.hpp"
#include "ldc/errors.hpp"
#include "ldc/harness.hpp"
#include "ldc/partition.hpp"

namespace ldc {

namespace {

using nlohmann::json;

constexpr int kExitDecided = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

long max_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void print_vertices(std::ostream& out, const std::vector<Vertex>& vs) {
  for (Vertex v : vs) out << ' ' << v;
}

json answer_to_json(const LdcAnswer& a, std::size_t k, const SolverConfig& cfg) {
  json j;
  j["decision"] = a.yes ? "yes" : "no";
  j["k"] = k;
  j["mode"] = to_string(a.mode);
  j["kpath"] = to_string(a.kpath);
  j["mixed_backend"] = a.mixed_backend;
  j["seed"] = cfg.seed;
  j["amplification"] = cfg.amplification;
  j["provenance"] = to_string(a.provenance);
  j["witness"] = a.witness ? json(a.witness->vertices) : json(nullptr);
  j["scan_length"] = a.scan_length ? json(*a.scan_length) : json(nullptr);
  j["partition_index"] = a.partition_index ? json(*a.partition_index) : json(nullptr);
  j["accepting_pair"] = a.accepting_pair
                            ? json::array({a.accepting_pair->first, a.accepting_pair->second})
                            : json(nullptr);
  j["partition_budget"] = a.partition_budget;
  j["counters"] = {{"kpath_decisions", a.counters.kpath_decisions},
                   {"colorings", a.counters.colorings},
                   {"partitions_tried", a.counters.partitions_tried},
                   {"polyalg_bfs_calls", a.counters.polyalg_bfs_calls}};
  j["max_rss_kb"] = max_rss_kb();
  return j;
}

json report_to_json(const ExperimentReport& r) {
  json j = {{"name", r.name},         {"k", r.k},
            {"n", r.n},               {"trials", r.trials},
            {"seed", r.seed},         {"hits", r.hits},
            {"observed", r.observed}, {"theoretical", r.theoretical},
            {"sigma", r.sigma},       {"interval", {r.interval_low, r.interval_high}},
            {"one_sided", r.one_sided}, {"pass", r.pass}};
  if (r.name == "amplification") {
    j["c"] = r.c;
    j["draws"] = r.draws;
  }
  if (r.exact) j["exact"] = *r.exact;
  return j;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Long Directed Cycle solver: is there a simple cycle on at least k vertices?", "ldc"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Decide the instance and print a cycle witness");
  std::size_t k = 0;
  std::string mode = "det";
  std::uint64_t seed = 0;
  double amplification = 10.0;
  std::string kpath;
  double repetition_constant = 3.0;
  std::string input;
  bool as_json = false;
  bool serial = false;
  solve->add_option("--k", k, "Cycle length threshold (>= 2)")->required();
  solve->add_option("--mode", mode, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  solve->add_option("--seed", seed, "RNG seed");
  solve->add_option("--amplification", amplification, "c in the rand-mode trial count c*4^k");
  solve->add_option("--kpath", kpath, "k-Path backend: color or dp")
      ->check(CLI::IsMember({"color", "dp"}));
  solve->add_option("--repetition-constant", repetition_constant,
                    "Color-coding repetitions per query: ceil(const * e^l)");
  solve->add_option("--input", input, "Edge-list file (default stdin)");
  solve->add_flag("--json", as_json, "Print the full answer record as JSON");
  solve->add_flag("--serial", serial, "Use the serial reference partition loop");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive longest-cycle search (small graphs)");
  std::size_t oracle_cap = kDefaultOracleCap;
  oracle->add_option("--input", input, "Edge-list file (default stdin)");
  oracle->add_option("--cap", oracle_cap, "Maximum vertex count");
  oracle->add_flag("--json", as_json, "JSON output");

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a random instance in edge-list format");
  std::size_t gen_n = 10;
  std::optional<std::size_t> gen_t;
  double density = 0.2;
  bool forbid_short = false;
  std::string output;
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--t", gen_t, "Planted cycle length (omit for a plain random digraph)");
  gen->add_option("--density", density, "Probability of each extra ordered pair")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_flag("--forbid-short", forbid_short, "Reject extra edges that close a cycle shorter than t");
  gen->add_option("--output", output, "Output file (default stdout)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo checks of the partition step");
  std::string name = "split";
  std::uint64_t trials = 100000;
  double c = 1.0;
  std::size_t exp_k = 2;
  experiment->add_option("--name", name, "split or amplification")
      ->check(CLI::IsMember({"split", "amplification"}));
  experiment->add_option("--k", exp_k, "Half the number of constrained vertices");
  experiment->add_option("--trials", trials, "Trials (meta-trials for amplification)");
  experiment->add_option("--c", c, "Amplification constant");
  experiment->add_option("--seed", seed, "RNG seed");
  experiment->add_flag("--json", as_json, "JSON output");

  // verify-universal
  auto* verify = app.add_subcommand("verify-universal", "Build or load an (n,t)-universal set and check it");
  std::size_t fam_n = 0, fam_t = 0;
  std::string family_path, export_path;
  std::size_t t_cap = kDefaultUniversalTCap;
  verify->add_option("--n", fam_n, "Ground-set size (when building)");
  verify->add_option("--t", fam_t, "Subset size t")->required();
  verify->add_option("--family", family_path, "Load the family from this file instead of building");
  verify->add_option("--export", export_path, "Write the family to this file");
  verify->add_option("--t-cap", t_cap, "Construction cap on t");
  verify->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitDecided : kExitUsage;
  }

  try {
    if (*solve) {
      SolverConfig cfg;
      cfg.mode = mode == "rand" ? SolveMode::kRandomized : SolveMode::kDeterministic;
      cfg.seed = seed;
      cfg.amplification = amplification;
      if (!kpath.empty()) cfg.kpath = kpath == "dp" ? KPathKind::kSubsetDp : KPathKind::kColorCoding;
      cfg.repetition_constant = repetition_constant;
      cfg.parallel = !serial;
      const auto parsed = parse_graph(read_all(input, in));
      if (parsed.dropped.self_loops + parsed.dropped.duplicates > 0) {
        err << "warning: dropped " << parsed.dropped.self_loops << " self-loop(s) and "
            << parsed.dropped.duplicates << " duplicate edge(s)\n";
      }
      const auto answer = answer_with_verification(parsed.graph, k, cfg);
      if (as_json) {
        out << answer_to_json(answer, k, cfg).dump() << '\n';
      } else if (answer.yes) {
        out << "YES " << answer.witness->length();
        print_vertices(out, answer.witness->vertices);
        out << '\n';
      } else {
        out << "NO\n";
      }
      return kExitDecided;
    }

    if (*oracle) {
      const auto parsed = parse_graph(read_all(input, in));
      const auto result = brute_force_longest_cycle(parsed.graph, oracle_cap);
      if (as_json) {
        out << json{{"longest", result.longest},
                    {"witness", result.witness ? json(result.witness->vertices) : json(nullptr)}}
                   .dump()
            << '\n';
      } else {
        out << "LONGEST " << result.longest;
        if (result.witness) print_vertices(out, result.witness->vertices);
        out << '\n';
      }
      return kExitDecided;
    }

    if (*gen) {
      Rng rng(seed);
      std::ostringstream text;
      if (gen_t) {
        const auto inst = generate_planted_instance(gen_n, *gen_t, density, rng, forbid_short);
        text << "# planted cycle:";
        print_vertices(text, inst.planted.vertices);
        text << '\n';
        write_graph(text, inst.graph);
      } else {
        write_graph(text, random_digraph(gen_n, density, rng));
      }
      if (output.empty() || output == "-") {
        out << text.str();
      } else {
        std::ofstream file(output);
        if (!file) throw ConfigError("cannot write '" + output + "'");
        file << text.str();
      }
      return kExitDecided;
    }

    if (*experiment) {
      const auto report = name == "split" ? estimate_split_probability(exp_k, trials, seed)
                                          : estimate_amplification(exp_k, c, trials, seed);
      if (as_json) {
        out << report_to_json(report).dump() << '\n';
      } else {
        out << format_report(report) << '\n';
      }
      return kExitDecided;
    }

    if (*verify) {
      UniversalSetFamily fam;
      if (!family_path.empty()) {
        fam = read_family(read_all(family_path, in), fam_t);
        if (fam_n != 0 && fam_n != fam.n) {
          throw ConfigError("--n " + std::to_string(fam_n) + " does not match the family width " +
                            std::to_string(fam.n));
        }
      } else {
        fam = build_universal_set(fam_n, fam_t, UniversalSetOptions{t_cap});
      }
      if (!export_path.empty()) {
        std::ofstream file(export_path);
        if (!file) throw ConfigError("cannot write '" + export_path + "'");
        write_family(file, fam);
      }
      const auto check = verify_universal(fam);
      if (as_json) {
        json j = {{"n", fam.n}, {"t", fam.t}, {"size", fam.size()}, {"universal", check.universal}};
        if (check.violation) {
          j["violation"] = {{"indices", check.violation->indices},
                            {"pattern", check.violation->pattern}};
        }
        out << j.dump() << '\n';
      } else if (check.universal) {
        out << "UNIVERSAL n=" << fam.n << " t=" << fam.t << " size=" << fam.size() << '\n';
      } else {
        out << "NOT-UNIVERSAL n=" << fam.n << " t=" << fam.t << " size=" << fam.size()
            << " indices=";
        for (std::size_t i = 0; i < check.violation->indices.size(); ++i) {
          out << (i ? "," : "") << check.violation->indices[i];
        }
        out << " pattern=";
        for (auto bit : check.violation->pattern) out << static_cast<int>(bit);
        out << '\n';
      }
      return kExitDecided;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ldc
