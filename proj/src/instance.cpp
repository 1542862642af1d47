#include "inddom/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace inddom {

namespace {

using nlohmann::json;

Graph parse_edges(const json& j, const std::string& field, int n) {
  if (!j.is_array())
    throw ParseError("field \"" + field + "\" must be an array of pairs");
  Graph g(n);
  for (size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("field \"" + field + "\" entry " + std::to_string(i) +
                       " is not an integer pair");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("field \"" + field + "\" entry " + std::to_string(i) +
                       " has vertex id out of range");
    if (u == v)
      throw ParseError("field \"" + field + "\" entry " + std::to_string(i) +
                       " is a self-loop");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("field \"n\" missing or not an integer");
  int n = j["n"].get<int>();
  if (n < 0) throw ParseError("field \"n\" must be non-negative");
  if (!j.contains("edges"))
    throw ParseError("field \"edges\" missing");

  Instance inst;
  inst.graph = parse_edges(j["edges"], "edges", n);

  if (j.contains("edges2"))
    inst.second_graph = parse_edges(j["edges2"], "edges2", n);

  if (j.contains("parts")) {
    const json& jp = j["parts"];
    if (!jp.is_array())
      throw ParseError("field \"parts\" must be an array of arrays");
    std::vector<VertexSet> blocks;
    for (size_t i = 0; i < jp.size(); ++i) {
      const json& blk = jp[i];
      if (!blk.is_array())
        throw ParseError("field \"parts\" entry " + std::to_string(i) +
                         " is not an array");
      VertexSet s;
      for (const json& v : blk) {
        if (!v.is_number_integer())
          throw ParseError("field \"parts\" entry " + std::to_string(i) +
                           " has a non-integer vertex");
        s.insert(v.get<int>());
      }
      blocks.push_back(std::move(s));
    }
    try {
      inst.partition = Partition(std::move(blocks), n);
    } catch (const ModelError& e) {
      throw ParseError(std::string("field \"parts\": ") + e.what());
    }
  }

  if (j.contains("weights")) {
    const json& jw = j["weights"];
    if (!jw.is_array() || static_cast<int>(jw.size()) != n)
      throw ParseError("field \"weights\" must be an array of length n");
    std::vector<long> w;
    for (size_t i = 0; i < jw.size(); ++i) {
      if (!jw[i].is_number_integer() || jw[i].get<long>() < 0)
        throw ParseError("field \"weights\" entry " + std::to_string(i) +
                         " must be a non-negative integer");
      w.push_back(jw[i].get<long>());
    }
    inst.weights = WeightVector(std::move(w));
  } else {
    inst.weights = WeightVector::ones(n);
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.graph.n();
  json edges = json::array();
  for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  if (inst.second_graph) {
    json edges2 = json::array();
    for (auto [u, v] : inst.second_graph->edges()) edges2.push_back({u, v});
    j["edges2"] = edges2;
  }
  if (inst.partition) {
    json parts = json::array();
    for (const VertexSet& blk : inst.partition->blocks())
      parts.push_back(std::vector<Vertex>(blk.begin(), blk.end()));
    j["parts"] = parts;
  }
  j["weights"] = inst.weights.w;
  return j.dump();
}

}  // namespace inddom
