// ppg: paths, exact distances and diameter bounds in the proper power graph
// of the alternating group.
//
// Exit codes: 0 ok, 2 bad input, 3 hypothesis or cutoff refusal,
// 4 bound violation (a synthesizer bug).

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "ppg/error.hpp"
#include "ppg/json_io.hpp"
#include "ppg/pathsynth.hpp"
#include "ppg/powergraph.hpp"
#include "ppg/random.hpp"

namespace {

using namespace ppg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRefused = 3;
constexpr int kExitBound = 4;

struct Config {
  std::size_t n = 0;
  std::string from, to;
  bool json = false;
  bool force = false;
  bool shortcut = false;
  bool diameter = false;
  bool components = false;
  bool witness = false;
  std::size_t cutoff = AlternatingPowerGraph::kDefaultCutoff;
  std::size_t pairs = 100;
  std::uint64_t seed = 0;
};

void print_path_text(const PathWitness& w) {
  std::cout << "path in A_" << w.n << ": length " << w.length() << " (bound " << w.declared_bound << ", "
            << to_string(w.lemma) << (w.best_effort ? ", best effort" : "") << ")\n";
  if (!w.region.empty()) std::cout << "branch: " << w.region << "\n";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    std::cout << "[" << i << "] " << format_cycles(w.vertices[i]) << "\n";
    if (i < w.certificates.size()) {
      const AdjacencyCertificate& c = w.certificates[i];
      if (c.direction == Direction::SecondIsPowerOfFirst) {
        std::cout << "      [" << i + 1 << "] = [" << i << "]^" << to_string(c.exponent) << "\n";
      } else {
        std::cout << "      [" << i << "] = [" << i + 1 << "]^" << to_string(c.exponent) << "\n";
      }
    }
  }
}

int cmd_path(const Config& cfg) {
  const Permutation x = parse_cycles(cfg.from, cfg.n);
  const Permutation y = parse_cycles(cfg.to, cfg.n);
  PathWitness w = path_any(x, y, cfg.n, SynthesisOptions{cfg.force});
  if (cfg.shortcut) w = shortcut(w);
  std::string why;
  if (!validate(w, &why)) throw BoundViolation("emitted path failed validation: " + why);
  if (cfg.json) {
    std::cout << to_json(w).dump(2) << "\n";
  } else {
    print_path_text(w);
  }
  return kExitOk;
}

void warn_memory(const Config& cfg) {
  if (cfg.cutoff == AlternatingPowerGraph::kDefaultCutoff || cfg.n <= AlternatingPowerGraph::kDefaultCutoff) {
    return;
  }
  const double mb = double(AlternatingPowerGraph::estimated_bytes(cfg.n)) / (1024.0 * 1024.0);
  std::cerr << "note: the index for A_" << cfg.n << " needs about " << std::fixed << std::setprecision(0)
            << mb << " MiB\n";
}

int cmd_exact(const Config& cfg) {
  const bool pair = !cfg.from.empty() || !cfg.to.empty();
  if (pair && (cfg.from.empty() || cfg.to.empty())) throw ParseError("exact needs both endpoints");
  if (pair == (cfg.diameter || cfg.components)) {
    throw ParseError("exact takes either two permutations or one of --diameter, --components");
  }
  Permutation x(cfg.n), y(cfg.n);
  if (pair) {
    x = parse_cycles(cfg.from, cfg.n);
    y = parse_cycles(cfg.to, cfg.n);
  }
  warn_memory(cfg);
  const AlternatingPowerGraph g(cfg.n, cfg.cutoff);
  if (pair) {
    const DistanceResult r = g.distance(x, y, true);
    if (cfg.json) {
      Json j;
      j["n"] = cfg.n;
      j["from"] = format_cycles(x);
      j["to"] = format_cycles(y);
      j["distance"] = r.distance ? Json(*r.distance) : Json(nullptr);
      Json vs = Json::array();
      for (const Permutation& v : r.path) vs.push_back(format_cycles(v));
      j["path"] = std::move(vs);
      std::cout << j.dump(2) << "\n";
    } else if (!r.distance) {
      std::cout << "unreachable: different components of P*(A_" << cfg.n << ")\n";
    } else {
      std::cout << "distance " << *r.distance << "\n";
      for (std::size_t i = 0; i < r.path.size(); ++i) {
        std::cout << "[" << i << "] " << format_cycles(r.path[i]) << "\n";
      }
    }
    return kExitOk;
  }
  const ComponentReport rep = g.components();
  if (cfg.json) {
    Json j = to_json(rep);
    if (!cfg.components) j.erase("components");
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::size_t diam = 0;
  for (const ComponentSummary& c : rep.components) diam = std::max(diam, c.diameter);
  std::cout << "P*(A_" << cfg.n << "): " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
            << rep.components.size() << " component" << (rep.components.size() == 1 ? "" : "s") << "\n";
  if (rep.components.size() == 1) {
    std::cout << "connected, diameter " << diam << "\n";
  } else {
    std::cout << "disconnected, largest component diameter " << diam << "\n";
  }
  if (cfg.components) {
    std::cout << std::setw(10) << "size" << std::setw(10) << "diameter" << "  least member\n";
    for (const ComponentSummary& c : rep.components) {
      std::cout << std::setw(10) << c.size << std::setw(10) << c.diameter << "  " << format_cycles(c.least)
                << "\n";
    }
  }
  return kExitOk;
}

int cmd_bounds(const Config& cfg) {
  const BoundsReport r = diameter_bounds(cfg.n, cfg.witness);
  std::optional<WitnessChecks> checks;
  if (r.witness_pair) checks = verify_witness(r.witness_pair->first, r.witness_pair->second, cfg.n);
  if (cfg.json) {
    Json j = to_json(r);
    if (checks) j["witness_checks"] = to_json(*checks);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n = " << r.n << "\n"
            << "connectivity condition: " << (r.connected_hypothesis ? "holds" : "fails") << "\n";
  if (r.max_prime_factor) {
    std::cout << "largest prime factor of n(n-1)(n-2): " << r.max_prime_factor << "\n"
              << "sharper upper-bound condition: " << (r.diam8_hypothesis ? "holds" : "fails") << "\n";
  }
  if (r.lower && r.upper) {
    std::cout << "diameter bounds: " << *r.lower << " <= diam <= " << *r.upper << "\n";
  } else {
    std::cout << "no bounds: " << r.note << "\n";
  }
  if (r.witness_pair) {
    std::cout << "witness x: " << format_cycles(r.witness_pair->first) << "\n"
              << "witness y: " << format_cycles(r.witness_pair->second) << "\n";
    const Json cj = to_json(*checks);
    for (const auto& [k, v] : cj.items()) std::cout << "  " << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_audit(const Config& cfg) {
  if (!cfg.force && (cfg.n < kMinSynthesisDegree || !connectivity_condition(cfg.n))) {
    throw HypothesisError("audit needs n >= 52 and the connectivity condition (n = " +
                          std::to_string(cfg.n) + ")");
  }
  std::mt19937_64 rng(cfg.seed);
  std::map<std::size_t, std::size_t> histogram;
  std::size_t max_len = 0, failures = 0, bound = 0;
  std::vector<std::string> failure_notes;
  for (std::size_t i = 0; i < cfg.pairs; ++i) {
    const Permutation x = random_even_permutation(cfg.n, rng);
    const Permutation y = random_even_permutation(cfg.n, rng);
    try {
      const PathWitness w = path_any(x, y, cfg.n, SynthesisOptions{cfg.force});
      bound = std::max(bound, w.declared_bound);
      if (!validate(w)) throw BoundViolation("path failed validation");
      ++histogram[w.length()];
      max_len = std::max(max_len, w.length());
    } catch (const std::exception& e) {
      ++failures;
      if (failure_notes.size() < 5) failure_notes.push_back("pair " + std::to_string(i) + ": " + e.what());
    }
  }
  if (cfg.json) {
    Json j;
    j["n"] = cfg.n;
    j["pairs"] = cfg.pairs;
    j["seed"] = cfg.seed;
    j["bound"] = bound;
    Json h = Json::object();
    for (auto [len, count] : histogram) h[std::to_string(len)] = count;
    j["histogram"] = std::move(h);
    j["max"] = max_len;
    j["failures"] = failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "audit A_" << cfg.n << ": " << cfg.pairs << " pairs, seed " << cfg.seed << "\n";
    std::cout << "length  count\n";
    for (auto [len, count] : histogram) std::cout << std::setw(6) << len << std::setw(7) << count << "\n";
    std::cout << "max " << max_len << ", bound " << bound << ", failures " << failures << "\n";
    for (const std::string& s : failure_notes) std::cout << "  " << s << "\n";
  }
  return failures == 0 ? kExitOk : kExitBound;
}

void report_error(const Config& cfg, const std::string& kind, const std::string& msg) {
  if (cfg.json) {
    std::cout << Json{{"error", {{"kind", kind}, {"message", msg}}}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paths and distance bounds in the proper power graph of A_n"};
  app.require_subcommand(1);
  Config cfg;
  auto degree = [&](CLI::App* sub) {
    sub->add_option("n", cfg.n, "degree of the alternating group")->required()->check(CLI::Range(3, 1 << 24));
    sub->add_flag("--json", cfg.json, "machine-readable output");
  };

  CLI::App* path = app.add_subcommand("path", "synthesize a certified path between two elements");
  degree(path);
  path->add_option("from", cfg.from, "cycle notation")->required();
  path->add_option("to", cfg.to, "cycle notation")->required();
  path->add_flag("--shortcut", cfg.shortcut, "greedily shorten the path");
  path->add_flag("--force", cfg.force, "attempt synthesis when the hypothesis on n fails");

  CLI::App* exact = app.add_subcommand("exact", "exhaustive BFS on small n");
  degree(exact);
  exact->add_option("from", cfg.from, "cycle notation");
  exact->add_option("to", cfg.to, "cycle notation");
  exact->add_flag("--diameter", cfg.diameter, "component count and diameter");
  exact->add_flag("--components", cfg.components, "per-component sizes and diameters");
  exact->add_option("--cutoff", cfg.cutoff, "largest n to materialize")->check(CLI::Range(3, 12));

  CLI::App* bounds = app.add_subcommand("bounds", "diameter bounds for P*(A_n)");
  degree(bounds);
  bounds->add_flag("--witness", cfg.witness, "include the lower-bound witness pair and its checks");

  CLI::App* audit = app.add_subcommand("audit", "synthesize and validate paths for random pairs");
  degree(audit);
  audit->add_option("--pairs", cfg.pairs, "number of pairs");
  audit->add_option("--seed", cfg.seed, "RNG seed");
  audit->add_flag("--force", cfg.force, "run even when the hypothesis on n fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*path) return cmd_path(cfg);
    if (*exact) return cmd_exact(cfg);
    if (*bounds) return cmd_bounds(cfg);
    return cmd_audit(cfg);
  } catch (const ParseError& e) {
    report_error(cfg, "parse", e.what());
    return kExitInput;
  } catch (const DomainError& e) {
    report_error(cfg, "input", e.what());
    return kExitInput;
  } catch (const HypothesisError& e) {
    report_error(cfg, "hypothesis", e.what());
    return kExitRefused;
  } catch (const CutoffError& e) {
    report_error(cfg, "cutoff", e.what());
    return kExitRefused;
  } catch (const ConstructionError& e) {
    report_error(cfg, "no_construction", e.what());
    return kExitRefused;
  } catch (const BoundViolation& e) {
    report_error(cfg, "bound_violation", e.what());
    return kExitBound;
  }
}
