// modgraph_tool.cpp
// Single-binary CLI over the library: enumeration, modular graph builds,
// seeded sampling statistics, genus reports, asymptotic envelopes, and a
// random flip walk for smoke testing.  Exit codes: 0 success, 2 domain
// error, 3 capability (cap/budget) error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modgraph/combinatorial_map.hpp"
#include "modgraph/config_model.hpp"
#include "modgraph/enumeration.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/genus_formulas.hpp"
#include "modgraph/genus_search.hpp"
#include "modgraph/modular_graphs.hpp"
#include "modgraph/moves.hpp"
#include "modgraph/rng.hpp"
#include "modgraph/simple_graph.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace modgraph;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string code_tag(const std::string& code) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(code);
  std::string out = "c";
  for (int i = 60; i >= 0; i -= 4) out += hex[(h >> i) & 0xF];
  return out;
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file '" + output_path + "'");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json genus_report_json(const GenusReport& r) {
  json j;
  j["lower"] = r.lower.str();
  j["upper"] = r.upper.str();
  j["lower_int"] = r.lower_int();
  j["upper_int"] = r.upper_int();
  if (r.exact)
    j["exact"] = *r.exact;
  else
    j["exact"] = nullptr;
  j["notes"] = r.method_notes;
  return j;
}

GenusReport graph_report(const SimpleGraph& g, bool exact, long long max_darts) {
  GenusReport r = betti_genus_bounds(g.n, simple_edge_count(g), simple_girth(g));
  if (exact) {
    r.exact = exact_graph_genus(g, max_darts);
    r.method_notes += r.method_notes.empty() ? "" : "; ";
    r.method_notes += "exact via rotation-system search";
  }
  return r;
}

// "K5" -> complete; two digits both >= 2, e.g. "K33", -> complete bipartite
SimpleGraph builtin_graph(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'k')) {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && !digits.empty()) {
      if (digits.size() == 2 && digits[0] >= '2' && digits[1] >= '2')
        return complete_bipartite(digits[0] - '0', digits[1] - '0');
      const int n = std::stoi(digits);
      if (n >= 3 && n <= 12) return complete_graph(n);
      throw DomainError("builtin complete graph supports K3..K12, got " + name);
    }
  }
  throw DomainError("unknown builtin graph '" + name + "' (try K4..K12 or K33, K34, ...)");
}

struct CommonOpts {
  std::string format;
  std::string output;
};

int cmd_enumerate(int n, const std::string& filter_name, const std::string& method,
                  const CommonOpts& io) {
  const GraphFilter filter = graph_filter_from_name(filter_name);
  EnumerationResult r;
  if (method == "orderly")
    r = enumerate_cubic_multigraphs(n, filter);
  else if (method == "brute")
    r = brute_force_classes(n, filter);
  else
    throw DomainError("unknown method '" + method + "' (orderly or brute)");

  if (io.format == "json") {
    json j;
    j["command"] = "enumerate";
    j["n"] = r.n_vertices;
    j["filter"] = graph_filter_name(filter);
    j["method"] = r.method;
    j["seed"] = 0;
    j["counts"]["total"] = r.counts.total;
    j["counts"]["connected"] = r.counts.connected;
    j["counts"]["simple"] = r.counts.simple;
    j["counts"]["simple_connected"] = r.counts.simple_connected;
    j["count"] = static_cast<long long>(r.class_codes.size());
    json tags = json::array();
    for (const auto& code : r.class_codes) tags.push_back(code_tag(code));
    j["class_tags"] = std::move(tags);
    emit(j.dump(2) + "\n", io.output);
  } else if (io.format == "text") {
    std::ostringstream out;
    out << "enumerate n=" << r.n_vertices << " filter=" << graph_filter_name(filter)
        << " method=" << r.method << "\n";
    out << "total " << r.counts.total << ", connected " << r.counts.connected << ", simple "
        << r.counts.simple << ", simple connected " << r.counts.simple_connected << "\n";
    out << "matching classes: " << r.class_codes.size() << "\n";
    for (const auto& code : r.class_codes) out << "  " << code_tag(code) << "\n";
    emit(out.str(), io.output);
  } else {
    throw DomainError("enumerate supports --format json or text");
  }
  return 0;
}

int cmd_modular(const std::string& kind_name, int g, long long max_darts, const CommonOpts& io) {
  const ModularKind kind = modular_kind_from_name(kind_name);
  ModularGraph mg;
  switch (kind) {
    case ModularKind::curve: mg = build_modular_curve_graph(g); break;
    case ModularKind::pants: mg = build_modular_pants_graph(g); break;
    case ModularKind::flip: mg = build_modular_flip_graph(g); break;
  }
  if (io.format == "dot") {
    emit(modular_to_dot(mg), io.output);
    return 0;
  }

  const ModularSummary s = graph_summary(mg);
  GenusReport report = betti_genus_bounds(s.p, s.q_simple, s.girth_simple);
  if (kind == ModularKind::curve) {
    report.exact = genus_modular_curve(g);
    report.method_notes += report.method_notes.empty() ? "" : "; ";
    report.method_notes += "exact from the complete-graph closed form";
  } else {
    try {
      report.exact = exact_graph_genus(modular_simple_graph(mg), max_darts);
      report.method_notes += report.method_notes.empty() ? "" : "; ";
      report.method_notes += "exact via rotation-system search";
    } catch (const CapabilityError&) {
      // quotient too large for the dart budget; bounds still stand
    }
  }

  if (io.format == "json") {
    json j = json::parse(modular_to_json(mg));
    j["seed"] = 0;
    j["genus_report"] = genus_report_json(report);
    emit(j.dump(2) + "\n", io.output);
  } else if (io.format == "text") {
    std::ostringstream out;
    out << "modular " << modular_kind_name(kind) << " genus " << g << ": p=" << s.p
        << " q_simple=" << s.q_simple << " q_multi=" << s.q_multi << " loops=" << s.loop_total
        << "\n";
    out << "multi-degree range [" << s.min_multi_degree << ", " << s.max_multi_degree << "]";
    if (s.girth_simple) out << ", girth " << *s.girth_simple;
    out << "\n";
    out << "genus bounds [" << report.lower.str() << ", " << report.upper.str() << "] -> ["
        << report.lower_int() << ", " << report.upper_int() << "]";
    if (report.exact) out << ", exact " << *report.exact;
    out << "\n";
    emit(out.str(), io.output);
  } else {
    throw DomainError("modular supports --format json, dot, or text");
  }
  return 0;
}

int cmd_sample_stats(int n, int k_max, long long samples, std::uint64_t seed, int workers,
                     bool one_puncture, long long max_attempts, const CommonOpts& io) {
  SampleStats s = one_puncture
                      ? estimate_one_puncture_circuit_stats(n, k_max, samples, seed, workers,
                                                            max_attempts)
                      : estimate_circuit_stats(n, k_max, samples, seed, workers);
  if (io.format == "csv") {
    std::string out = "# n=" + std::to_string(n) + " samples=" + std::to_string(s.n_samples) +
                      " seed=" + std::to_string(seed) +
                      " one_puncture=" + (one_puncture ? "1" : "0") + "\n";
    emit(out + stats_to_csv(s), io.output);
  } else if (io.format == "json") {
    json j = json::parse(stats_to_json(s));
    j["one_puncture"] = one_puncture;
    emit(j.dump(2) + "\n", io.output);
  } else {
    throw DomainError("sample-stats supports --format csv or json");
  }
  return 0;
}

int cmd_genus(const std::string& builtin, const std::string& file, bool exact,
              long long max_darts, const CommonOpts& io) {
  if (builtin.empty() == file.empty())
    throw DomainError("genus needs exactly one of --builtin or --file");
  SimpleGraph g = builtin.empty() ? parse_simple_graph(read_file(file)) : builtin_graph(builtin);
  GenusReport r = graph_report(g, exact, max_darts);

  if (io.format == "json") {
    json j;
    j["command"] = "genus";
    j["graph"] = builtin.empty() ? file : builtin;
    j["p"] = g.n;
    j["q"] = simple_edge_count(g);
    auto girth = simple_girth(g);
    if (girth)
      j["girth"] = *girth;
    else
      j["girth"] = nullptr;
    j["seed"] = 0;
    j["genus_report"] = genus_report_json(r);
    emit(j.dump(2) + "\n", io.output);
  } else if (io.format == "text") {
    std::ostringstream out;
    out << "graph " << (builtin.empty() ? file : builtin) << ": p=" << g.n
        << " q=" << simple_edge_count(g) << "\n";
    out << "genus bounds [" << r.lower.str() << ", " << r.upper.str() << "] -> ["
        << r.lower_int() << ", " << r.upper_int() << "]";
    if (r.exact) out << ", exact " << *r.exact;
    out << "\n";
    emit(out.str(), io.output);
  } else {
    throw DomainError("genus supports --format json or text");
  }
  return 0;
}

int cmd_asymptotics(const std::string& kind_name, long long from, long long to,
                    const CommonOpts& io) {
  const EnvelopeKind kind = envelope_kind_from_name(kind_name);
  if (to < from) to = from;
  std::vector<std::pair<long long, EnvelopeValue>> rows;
  for (long long a = from; a <= to; ++a) {
    // count envelopes walk even N only
    if ((kind == EnvelopeKind::multigraph_count || kind == EnvelopeKind::simple_count ||
         kind == EnvelopeKind::one_puncture_matchings) &&
        a % 2 != 0)
      continue;
    rows.emplace_back(a, envelope(kind, a));
  }
  if (rows.empty()) throw DomainError("asymptotics: empty argument range");

  if (io.format == "csv") {
    std::ostringstream out;
    out << "# kind=" << envelope_kind_name(kind) << " shape=" << rows.front().second.shape
        << " seed=0\n";
    out << "arg,log_value,c1,c2\n";
    for (const auto& [a, e] : rows) {
      out << a << "," << e.log_value << ",";
      if (e.constants) out << e.constants->c1;
      out << ",";
      if (e.constants) out << e.constants->c2;
      out << "\n";
    }
    emit(out.str(), io.output);
  } else if (io.format == "json") {
    json j;
    j["command"] = "asymptotics";
    j["kind"] = envelope_kind_name(kind);
    j["shape"] = rows.front().second.shape;
    j["seed"] = 0;
    if (rows.front().second.constants) {
      j["c1"] = rows.front().second.constants->c1;
      j["c2"] = rows.front().second.constants->c2;
    }
    json arr = json::array();
    for (const auto& [a, e] : rows) {
      json row;
      row["arg"] = a;
      row["log_value"] = e.log_value;
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    emit(j.dump(2) + "\n", io.output);
  } else {
    throw DomainError("asymptotics supports --format csv or json");
  }
  return 0;
}

int cmd_flip_walk(int n, long long steps, std::uint64_t seed, long long max_attempts,
                  const CommonOpts& io) {
  CombinatorialMap m = sample_one_puncture(n, seed, max_attempts);
  const SurfaceInvariants start = surface_invariants(m);
  const std::string initial_tag = code_tag(canonical_map_code(m));
  // the walk stream must not collide with the rejection streams, whose
  // indices stay below max_attempts
  SplitMix64 gen(split_stream(seed, 0xF11FF11F00000000ULL));
  bool preserved = true;
  for (long long i = 0; i < steps; ++i) {
    auto arcs = map_arcs(m);
    const auto [d, d2] = arcs[static_cast<size_t>(uniform_below(gen, arcs.size()))];
    m = flip(m, d);
    const SurfaceInvariants inv = surface_invariants(m);
    if (inv.n_punctures != start.n_punctures || inv.genus != start.genus) preserved = false;
  }

  json j;
  j["command"] = "flip-walk";
  j["n"] = n;
  j["steps"] = steps;
  j["seed"] = seed;
  j["initial_class"] = initial_tag;
  j["final_class"] = code_tag(canonical_map_code(m));
  j["punctures"] = start.n_punctures;
  j["genus"] = start.genus;
  j["invariants_preserved"] = preserved;
  if (io.format == "json") {
    emit(j.dump(2) + "\n", io.output);
  } else if (io.format == "text") {
    std::ostringstream out;
    out << "flip walk n=" << n << " steps=" << steps << " seed=" << seed << ": genus "
        << start.genus << ", punctures " << start.n_punctures << ", invariants "
        << (preserved ? "preserved" : "BROKEN") << "\n";
    emit(out.str(), io.output);
  } else {
    throw DomainError("flip-walk supports --format json or text");
  }
  if (!preserved) throw std::logic_error("flip walk changed surface invariants");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular curve/pants/flip graph toolkit"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "count cubic multigraph classes");
  int en_n = 0;
  std::string en_filter = "all", en_method = "orderly";
  CommonOpts en_io{"json", ""};
  enumerate->add_option("--n", en_n, "number of vertices (even)")->required();
  enumerate->add_option("--filter", en_filter, "all|connected|simple|simple-connected");
  enumerate->add_option("--method", en_method, "orderly|brute");
  enumerate->add_option("--format", en_io.format, "json|text");
  enumerate->add_option("--output", en_io.output, "write to file instead of stdout");

  // modular
  auto* modular = app.add_subcommand("modular", "build a modular graph and report genus bounds");
  std::string mod_kind;
  int mod_g = 0;
  long long mod_darts = kDefaultDartBudget;
  CommonOpts mod_io{"json", ""};
  modular->add_option("kind", mod_kind, "curve|pants|flip")->required();
  modular->add_option("--genus", mod_g, "surface genus g")->required();
  modular->add_option("--max-darts", mod_darts, "rotation-system budget for exact genus");
  modular->add_option("--format", mod_io.format, "json|dot|text");
  modular->add_option("--output", mod_io.output, "write to file instead of stdout");

  // sample-stats
  auto* stats = app.add_subcommand("sample-stats", "seeded circuit statistics");
  int st_n = 0, st_kmax = 3, st_workers = 1;
  long long st_samples = 10000, st_attempts = 1000000;
  std::uint64_t st_seed = 0;
  bool st_one_puncture = false;
  CommonOpts st_io{"json", ""};
  stats->add_option("--n", st_n, "number of vertices (even)")->required();
  stats->add_option("--kmax", st_kmax, "largest circuit length tracked (1..8)");
  stats->add_option("--samples", st_samples, "number of sampled graphs");
  stats->add_option("--seed", st_seed, "master seed");
  stats->add_option("--workers", st_workers, "worker threads (result-invariant)");
  stats->add_flag("--one-puncture", st_one_puncture, "condition on one boundary walk");
  stats->add_option("--max-attempts", st_attempts, "rejection budget per sample");
  stats->add_option("--format", st_io.format, "csv|json");
  stats->add_option("--output", st_io.output, "write to file instead of stdout");

  // genus
  auto* genus = app.add_subcommand("genus", "genus bounds and exact genus of a simple graph");
  std::string ge_builtin, ge_file;
  bool ge_exact = false;
  long long ge_darts = kDefaultDartBudget;
  CommonOpts ge_io{"json", ""};
  genus->add_option("--builtin", ge_builtin, "builtin graph name (K4..K12, K33, K34, ...)");
  genus->add_option("--file", ge_file, "simple graph text file: n, then 'u v' lines");
  genus->add_flag("--exact", ge_exact, "run the rotation-system search");
  genus->add_option("--max-darts", ge_darts, "rotation-system budget");
  genus->add_option("--format", ge_io.format, "json|text");
  genus->add_option("--output", ge_io.output, "write to file instead of stdout");

  // asymptotics
  auto* asym = app.add_subcommand("asymptotics", "asymptotic envelope values (log scale)");
  std::string as_kind;
  long long as_from = 0, as_to = 0;
  CommonOpts as_io{"csv", ""};
  asym->add_option("--kind", as_kind,
                   "pants|flip|multigraph-count|simple-count|triangulation-count|"
                   "one-puncture-matchings")
      ->required();
  asym->add_option("--from", as_from, "first argument value")->required();
  asym->add_option("--to", as_to, "last argument value (default: --from)");
  asym->add_option("--format", as_io.format, "csv|json");
  asym->add_option("--output", as_io.output, "write to file instead of stdout");

  // flip-walk
  auto* walk = app.add_subcommand("flip-walk", "random flip walk on a one-puncture surface");
  int fw_n = 6;
  long long fw_steps = 1000, fw_attempts = 1000000;
  std::uint64_t fw_seed = 0;
  CommonOpts fw_io{"json", ""};
  walk->add_option("--n", fw_n, "number of triangles, N == 2 (mod 4)");
  walk->add_option("--steps", fw_steps, "number of flips");
  walk->add_option("--seed", fw_seed, "master seed");
  walk->add_option("--max-attempts", fw_attempts, "rejection budget for the start map");
  walk->add_option("--format", fw_io.format, "json|text");
  walk->add_option("--output", fw_io.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*enumerate) return cmd_enumerate(en_n, en_filter, en_method, en_io);
    if (*modular) return cmd_modular(mod_kind, mod_g, mod_darts, mod_io);
    if (*stats)
      return cmd_sample_stats(st_n, st_kmax, st_samples, st_seed, st_workers, st_one_puncture,
                              st_attempts, st_io);
    if (*genus) return cmd_genus(ge_builtin, ge_file, ge_exact, ge_darts, ge_io);
    if (*asym) return cmd_asymptotics(as_kind, as_from, as_to, as_io);
    if (*walk) return cmd_flip_walk(fw_n, fw_steps, fw_seed, fw_attempts, fw_io);
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
