#include "amalgam/tree.hpp"

#include <map>
#include <numeric>

#include "json.hpp"

namespace amalgam {
namespace {

std::string rep_str(const std::vector<Syllable>& rep) {
  if (rep.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < rep.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(rep[i].factor);
    s += std::to_string(rep[i].index);
  }
  return s;
}

std::string vertex_label(const TreeVertex& v) {
  return "v:" + std::to_string(v.side) + ":" + rep_str(v.rep);
}

nlohmann::json rep_json(const std::vector<Syllable>& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Syllable& s : rep) arr.push_back({s.factor, s.index});
  return arr;
}

std::vector<Syllable> rep_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("ball json: rep must be an array");
  std::vector<Syllable> rep;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      throw std::invalid_argument("ball json: syllable must be [factor, index]");
    rep.push_back(Syllable{p[0].get<int>(), p[1].get<int>()});
  }
  return rep;
}

}  // namespace

void build_adjacency(TreeBall& ball) {
  std::map<TreeVertex, int> vid;
  for (size_t i = 0; i < ball.vertices.size(); ++i)
    if (!vid.emplace(ball.vertices[i], int(i)).second)
      throw std::logic_error("build_adjacency: duplicate vertex");
  ball.adj.assign(ball.vertices.size(), {});
  for (size_t ei = 0; ei < ball.edges.size(); ++ei) {
    auto u = vid.find(edge_endpoint(ball.edges[ei], 0));
    auto w = vid.find(edge_endpoint(ball.edges[ei], 1));
    if (u == vid.end() || w == vid.end())
      throw std::logic_error("build_adjacency: edge endpoint missing from ball");
    ball.adj[size_t(u->second)].push_back({int(ei), w->second});
    ball.adj[size_t(w->second)].push_back({int(ei), u->second});
  }
}

bool tree_check(const TreeBall& ball) {
  if (ball.edges.size() + 1 != ball.vertices.size()) return false;
  std::vector<int> parent(ball.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  };
  for (const TreeEdge& e : ball.edges) {
    int u = find(ball.vertex_id(edge_endpoint(e, 0)));
    int w = find(ball.vertex_id(edge_endpoint(e, 1)));
    if (u == w) return false;  // cycle
    parent[size_t(u)] = w;
  }
  int root = find(0);
  for (size_t i = 1; i < ball.vertices.size(); ++i)
    if (find(int(i)) != root) return false;  // disconnected
  return true;
}

std::vector<int> ball_distances(const TreeBall& ball, int vid) {
  if (vid < 0 || size_t(vid) >= ball.vertices.size())
    throw std::invalid_argument("ball_distances: vertex id out of range");
  std::vector<int> dist(ball.vertices.size(), -1);
  dist[size_t(vid)] = 0;
  std::vector<int> frontier{vid};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (auto [e, nb] : ball.adj[size_t(v)])
        if (dist[size_t(nb)] < 0) {
          dist[size_t(nb)] = dist[size_t(v)] + 1;
          next.push_back(nb);
        }
    frontier = std::move(next);
  }
  return dist;
}

std::vector<TreeVertex> half_tree(const TreeBall& ball, const TreeEdge& e, int side) {
  if (side != 0 && side != 1)
    throw std::invalid_argument("half_tree: side must be 0 or 1");
  if (ball.edge_id(e) < 0) throw std::invalid_argument("half_tree: edge not in ball");
  std::vector<int> da = ball_distances(ball, ball.vertex_id(edge_endpoint(e, side)));
  std::vector<int> db = ball_distances(ball, ball.vertex_id(edge_endpoint(e, 1 - side)));
  std::vector<TreeVertex> out;
  for (size_t i = 0; i < ball.vertices.size(); ++i)
    if (da[i] < db[i]) out.push_back(ball.vertices[i]);
  return out;
}

std::string export_ball(const TreeBall& ball, const std::string& format) {
  if (format == "dot") {
    std::vector<std::string> stmts;
    for (const TreeEdge& e : ball.edges)
      stmts.push_back("  \"" + vertex_label(edge_endpoint(e, 0)) + "\" -- \"" +
                      vertex_label(edge_endpoint(e, 1)) + "\" [label=\"" +
                      rep_str(e.rep) + "\"];");
    std::sort(stmts.begin(), stmts.end());
    std::string out = "graph {\n";
    for (const std::string& s : stmts) out += s + "\n";
    out += "}\n";
    return out;
  }
  if (format == "json") {
    nlohmann::json j;
    j["radius"] = ball.radius;
    j["vertices"] = nlohmann::json::array();
    for (const TreeVertex& v : ball.vertices)
      j["vertices"].push_back({{"side", v.side}, {"rep", rep_json(v.rep)}});
    j["edges"] = nlohmann::json::array();
    for (const TreeEdge& e : ball.edges)
      j["edges"].push_back({{"rep", rep_json(e.rep)}});
    return j.dump(2) + "\n";
  }
  throw std::invalid_argument("export_ball: unknown format " + format);
}

TreeBall parse_ball_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("ball json: ") + e.what());
  }
  for (const char* key : {"radius", "vertices", "edges"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("ball json: missing key ") + key);
  TreeBall ball;
  ball.radius = j["radius"].get<int>();
  for (const auto& v : j["vertices"]) {
    if (!v.contains("side") || !v.contains("rep"))
      throw std::invalid_argument("ball json: vertex needs side and rep");
    ball.vertices.push_back(TreeVertex{v["side"].get<int>(), rep_from_json(v["rep"])});
  }
  for (const auto& e : j["edges"]) {
    if (!e.contains("rep")) throw std::invalid_argument("ball json: edge needs rep");
    ball.edges.push_back(TreeEdge{rep_from_json(e["rep"])});
  }
  build_adjacency(ball);
  return ball;
}

}  // namespace amalgam
