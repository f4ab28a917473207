// modular_graphs.cpp
#include "modgraph/modular_graphs.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

#include "json.hpp"

#include "modgraph/enumeration.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/moves.hpp"

namespace modgraph {

ModularKind modular_kind_from_name(const std::string& name) {
  if (name == "curve") return ModularKind::curve;
  if (name == "pants") return ModularKind::pants;
  if (name == "flip") return ModularKind::flip;
  throw DomainError("unknown modular graph kind '" + name + "'");
}

std::string modular_kind_name(ModularKind k) {
  switch (k) {
    case ModularKind::curve: return "curve";
    case ModularKind::pants: return "pants";
    case ModularKind::flip: return "flip";
  }
  throw DomainError("unknown modular graph kind");
}

namespace {

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

// fold raw directed counts (self included) into the ModularGraph edge fields
void fill_edges(ModularGraph& mg,
                const std::map<std::pair<std::string, std::string>, long long>& raw) {
  for (const auto& code : mg.vertex_codes) mg.loop_counts[code] = 0;
  for (const auto& [key, count] : raw) {
    if (key.first == key.second) {
      mg.loop_counts[key.first] += count;
    } else {
      mg.directed_counts[key] = count;
    }
  }
  for (const auto& [key, count] : mg.directed_counts) {
    auto [a, b] = key;
    if (a > b) std::swap(a, b);
    auto it = mg.edge_multiplicities.find({a, b});
    if (it == mg.edge_multiplicities.end())
      mg.edge_multiplicities[{a, b}] = count;
    else
      it->second = std::max(it->second, count);
  }
  for (const auto& [key, count] : mg.edge_multiplicities)
    if (count > 0) mg.simple_edges.insert(key);
}

}  // namespace

ModularGraph build_modular_curve_graph(int g) {
  if (g < 2) throw DomainError("build_modular_curve_graph: g must be >= 2");
  ModularGraph mg;
  mg.kind = ModularKind::curve;
  mg.genus_param = g;
  mg.vertex_codes.push_back("nonseparating");
  for (int i = 1; i <= g / 2; ++i)
    mg.vertex_codes.push_back("separating_" + std::to_string(i));
  mg.vertex_labels = mg.vertex_codes;

  std::map<std::pair<std::string, std::string>, long long> raw;
  const int p = static_cast<int>(mg.vertex_codes.size());
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j) raw[{mg.vertex_codes[i], mg.vertex_codes[j]}] = 1;
  // loops at every type, except the half-half separating type for even g
  for (int i = 0; i < p; ++i) {
    if (g % 2 == 0 && i == g / 2) continue;
    raw[{mg.vertex_codes[i], mg.vertex_codes[i]}] = 1;
  }
  fill_edges(mg, raw);
  return mg;
}

ModularGraph build_modular_pants_graph(int g) {
  if (g < 2) throw DomainError("build_modular_pants_graph: g must be >= 2");
  const int n = 2 * g - 2;
  if (n > 12)
    throw CapabilityError("build_modular_pants_graph: capped at 2g-2 <= 12 vertices, got " +
                          std::to_string(n));
  CubicMultigraph start;
  if (n == 2) {
    start = CubicMultigraph::from_edge_list(2, {{0, 1, 3}});
  } else {
    // circulant C_n(1, n/2): the n-cycle plus diameters, connected and cubic
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n, 1);
    for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2, 1);
    start = CubicMultigraph::from_edge_list(n, edges);
  }

  std::map<std::string, CubicMultigraph> classes;
  std::map<std::pair<std::string, std::string>, long long> raw;
  std::deque<std::string> todo;
  {
    std::string code = start.canonical_code();
    classes.emplace(code, start.canonical_form());
    todo.push_back(std::move(code));
  }
  while (!todo.empty()) {
    const std::string code = std::move(todo.front());
    todo.pop_front();
    const CubicMultigraph rep = classes.at(code);
    for (const auto& outcome : pants_move_neighbors(rep)) {
      std::string tcode = outcome.result.canonical_code();
      raw[{code, tcode}] += 1;
      if (!classes.count(tcode)) {
        classes.emplace(tcode, outcome.result.canonical_form());
        todo.push_back(std::move(tcode));
      }
    }
  }

  ModularGraph mg;
  mg.kind = ModularKind::pants;
  mg.genus_param = g;
  for (auto& [code, rep] : classes) {
    mg.vertex_codes.push_back(code);
    mg.vertex_labels.push_back(code_tag(code));
    mg.pants_reps.push_back(std::move(rep));
  }
  fill_edges(mg, raw);
  return mg;
}

ModularGraph build_modular_flip_graph(int g) {
  const CombinatorialMap start = first_one_vertex_triangulation(g);

  std::map<std::string, CombinatorialMap> classes;
  std::map<std::pair<std::string, std::string>, long long> raw;
  std::deque<std::string> todo;
  {
    std::string code = canonical_map_code(start);
    classes.emplace(code, start);
    todo.push_back(std::move(code));
  }
  while (!todo.empty()) {
    const std::string code = std::move(todo.front());
    todo.pop_front();
    const CombinatorialMap rep = classes.at(code);
    for (const auto& outcome : flip_neighbors(rep)) {
      std::string tcode = canonical_map_code(outcome.result);
      raw[{code, tcode}] += 1;
      if (!classes.count(tcode)) {
        classes.emplace(tcode, outcome.result);
        todo.push_back(std::move(tcode));
      }
    }
  }

  ModularGraph mg;
  mg.kind = ModularKind::flip;
  mg.genus_param = g;
  for (auto& [code, rep] : classes) {
    mg.vertex_codes.push_back(code);
    mg.vertex_labels.push_back(code_tag(code));
    mg.flip_reps.push_back(std::move(rep));
  }
  fill_edges(mg, raw);
  return mg;
}

int modular_vertex_index(const ModularGraph& mg, const std::string& code) {
  for (size_t i = 0; i < mg.vertex_codes.size(); ++i)
    if (mg.vertex_codes[i] == code) return static_cast<int>(i);
  throw DomainError("modular_vertex_index: unknown class code");
}

long long modular_multi_degree(const ModularGraph& mg, int index) {
  if (index < 0 || index >= static_cast<int>(mg.vertex_codes.size()))
    throw DomainError("modular_multi_degree: index out of range");
  const std::string& code = mg.vertex_codes[index];
  long long deg = 0;
  auto it = mg.loop_counts.find(code);
  if (it != mg.loop_counts.end()) deg += it->second;
  for (const auto& [key, count] : mg.directed_counts)
    if (key.first == code) deg += count;
  return deg;
}

int modular_simple_degree(const ModularGraph& mg, int index) {
  if (index < 0 || index >= static_cast<int>(mg.vertex_codes.size()))
    throw DomainError("modular_simple_degree: index out of range");
  const std::string& code = mg.vertex_codes[index];
  int deg = 0;
  for (const auto& [a, b] : mg.simple_edges)
    if (a == code || b == code) ++deg;
  return deg;
}

ModularSummary graph_summary(const ModularGraph& mg) {
  ModularSummary s;
  s.p = static_cast<int>(mg.vertex_codes.size());
  s.q_simple = static_cast<long long>(mg.simple_edges.size());
  for (const auto& [key, count] : mg.edge_multiplicities) s.q_multi += count;
  for (const auto& [code, count] : mg.loop_counts) s.loop_total += count;
  s.girth_simple = simple_girth(modular_simple_graph(mg));
  long long multi_sum = 0;
  long long simple_sum = 0;
  for (int i = 0; i < s.p; ++i) {
    const long long md = modular_multi_degree(mg, i);
    const int sd = modular_simple_degree(mg, i);
    if (i == 0 || md < s.min_multi_degree) s.min_multi_degree = md;
    if (i == 0 || md > s.max_multi_degree) s.max_multi_degree = md;
    if (i == 0 || sd < s.min_simple_degree) s.min_simple_degree = sd;
    if (i == 0 || sd > s.max_simple_degree) s.max_simple_degree = sd;
    multi_sum += md;
    simple_sum += sd;
  }
  if (s.p > 0) {
    s.mean_multi_degree = static_cast<double>(multi_sum) / s.p;
    s.mean_simple_degree = static_cast<double>(simple_sum) / s.p;
  }
  return s;
}

SimpleGraph modular_simple_graph(const ModularGraph& mg) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < mg.vertex_codes.size(); ++i)
    index[mg.vertex_codes[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : mg.simple_edges) edges.emplace_back(index.at(a), index.at(b));
  return simple_graph_from_edges(static_cast<int>(mg.vertex_codes.size()), edges);
}

std::string modular_to_dot(const ModularGraph& mg) {
  std::ostringstream out;
  out << "graph modular_" << modular_kind_name(mg.kind) << "_g" << mg.genus_param << " {\n";
  for (size_t i = 0; i < mg.vertex_codes.size(); ++i) {
    out << "  v" << i << " [label=\"" << mg.vertex_labels[i];
    auto it = mg.loop_counts.find(mg.vertex_codes[i]);
    const long long loops = (it == mg.loop_counts.end()) ? 0 : it->second;
    if (loops > 0) out << " / loops " << loops;
    out << "\"];\n";
  }
  std::map<std::string, int> index;
  for (size_t i = 0; i < mg.vertex_codes.size(); ++i)
    index[mg.vertex_codes[i]] = static_cast<int>(i);
  for (const auto& [key, count] : mg.edge_multiplicities) {
    if (count <= 0) continue;
    out << "  v" << index.at(key.first) << " -- v" << index.at(key.second);
    if (count > 1) out << " [label=\"" << count << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string modular_to_json(const ModularGraph& mg) {
  using json = nlohmann::ordered_json;
  const ModularSummary s = graph_summary(mg);
  json j;
  j["kind"] = modular_kind_name(mg.kind);
  j["genus"] = mg.genus_param;
  j["p"] = s.p;
  j["q_simple"] = s.q_simple;
  j["q_multi"] = s.q_multi;
  j["loop_total"] = s.loop_total;
  if (s.girth_simple)
    j["girth_simple"] = *s.girth_simple;
  else
    j["girth_simple"] = nullptr;
  j["min_multi_degree"] = s.min_multi_degree;
  j["max_multi_degree"] = s.max_multi_degree;
  j["mean_multi_degree"] = s.mean_multi_degree;
  j["min_simple_degree"] = s.min_simple_degree;
  j["max_simple_degree"] = s.max_simple_degree;
  j["mean_simple_degree"] = s.mean_simple_degree;

  std::map<std::string, int> index;
  for (size_t i = 0; i < mg.vertex_codes.size(); ++i)
    index[mg.vertex_codes[i]] = static_cast<int>(i);
  json verts = json::array();
  for (size_t i = 0; i < mg.vertex_codes.size(); ++i) {
    json v;
    v["index"] = i;
    v["label"] = mg.vertex_labels[i];
    auto it = mg.loop_counts.find(mg.vertex_codes[i]);
    v["loops"] = (it == mg.loop_counts.end()) ? 0LL : it->second;
    v["multi_degree"] = modular_multi_degree(mg, static_cast<int>(i));
    v["simple_degree"] = modular_simple_degree(mg, static_cast<int>(i));
    verts.push_back(std::move(v));
  }
  j["vertices"] = std::move(verts);

  json edges = json::array();
  for (const auto& [key, count] : mg.edge_multiplicities) {
    json e;
    e["a"] = index.at(key.first);
    e["b"] = index.at(key.second);
    e["multiplicity"] = count;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);

  json directed = json::array();
  for (const auto& [key, count] : mg.directed_counts) {
    json e;
    e["from"] = index.at(key.first);
    e["to"] = index.at(key.second);
    e["count"] = count;
    directed.push_back(std::move(e));
  }
  j["directed"] = std::move(directed);
  return j.dump(2) + "\n";
}

}  // namespace modgraph
