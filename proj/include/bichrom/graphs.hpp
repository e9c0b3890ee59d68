#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bichrom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;          // first < second
using Triangle = std::array<Vertex, 3>;           // ascending

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// All 3-cliques of a simple graph, ascending within each triple and
/// lexicographic across triples.
inline std::vector<Triangle> triangles_of(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("triangles_of: bad edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<char> mark(n, 0);
  std::vector<Triangle> out;
  for (int u = 0; u < n; ++u) {
    for (int w : adj[u]) mark[w] = 1;
    for (int v : adj[u]) {
      if (v <= u) continue;
      for (int w : adj[v])
        if (w > v && mark[w]) out.push_back({u, v, w});
    }
    for (int w : adj[u]) mark[w] = 0;
  }
  return out;
}

/// A graph together with its explicit triangle list. Immutable once built.
class TriangleGraph {
 public:
  TriangleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("TriangleGraph: duplicate edge");
    triangles_ = triangles_of(n_, edges_);
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  bool has_edge(Vertex u, Vertex v) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_, 0);
    for (auto [u, v] : edges_) ++d[u], ++d[v];
    return d;
  }

  friend bool operator==(const TriangleGraph&, const TriangleGraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

/// Sorted descending.
inline std::vector<int> degree_sequence(const TriangleGraph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

/// Recipe for a 2-tree: vertices 0,1,2 form the seed triangle and attachment i
/// joins vertex i+3 to both endpoints of an existing edge.
struct TwoTreeSeq {
  int n = 3;
  std::vector<Edge> attachments;

  friend bool operator==(const TwoTreeSeq&, const TwoTreeSeq&) = default;
};

inline void require_two_tree_size(int n, const char* what) {
  if (n < 3) throw std::invalid_argument(std::string(what) + ": n must be >= 3 (got " + std::to_string(n) + ")");
}

/// Theta graph: centrals 0 and 1, spokes 2..n-1, all triangles on edge {0,1}.
inline TriangleGraph build_theta(int n) {
  require_two_tree_size(n, "build_theta");
  std::vector<Edge> e{{0, 1}};
  for (int c = 2; c < n; ++c) {
    e.emplace_back(0, c);
    e.emplace_back(1, c);
  }
  return TriangleGraph(n, std::move(e));
}

/// Fan graph: apex 0 over the path 1-2-...-(n-1).
inline TriangleGraph build_fan(int n) {
  require_two_tree_size(n, "build_fan");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return TriangleGraph(n, std::move(e));
}

inline TwoTreeSeq theta_seq(int n) {
  require_two_tree_size(n, "theta_seq");
  return {n, std::vector<Edge>(n - 3, Edge{0, 1})};
}

/// Chains each new vertex to the previous one, giving apex 0 over the path
/// 2-1-3-4-...-(n-1).
inline TwoTreeSeq fan_seq(int n) {
  require_two_tree_size(n, "fan_seq");
  TwoTreeSeq s{n, {}};
  for (int w = 3; w < n; ++w) s.attachments.push_back(w == 3 ? Edge{0, 1} : Edge{0, w - 1});
  return s;
}

inline TriangleGraph build_two_tree(const TwoTreeSeq& seq) {
  require_two_tree_size(seq.n, "build_two_tree");
  if (seq.attachments.size() != static_cast<std::size_t>(seq.n - 3))
    throw std::invalid_argument("build_two_tree: expected " + std::to_string(seq.n - 3) + " attachments, got " +
                                std::to_string(seq.attachments.size()));
  std::set<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t i = 0; i < seq.attachments.size(); ++i) {
    const int w = static_cast<int>(i) + 3;
    auto [u, v] = make_edge(seq.attachments[i].first, seq.attachments[i].second);
    if (u < 0 || v >= w || u == v)
      throw std::invalid_argument("build_two_tree: attachment " + std::to_string(i + 1) + " (" + std::to_string(u) +
                                  "-" + std::to_string(v) + ") references a vertex outside 0.." +
                                  std::to_string(w - 1));
    if (!edges.contains({u, v}))
      throw std::invalid_argument("build_two_tree: attachment " + std::to_string(i + 1) + " references missing edge " +
                                  std::to_string(u) + "-" + std::to_string(v));
    edges.insert({u, w});
    edges.insert({v, w});
  }
  return TriangleGraph(seq.n, {edges.begin(), edges.end()});
}

/// Parses `n;u1-v1;u2-v2;...` (0-based vertices, whitespace ignored).
inline TwoTreeSeq parse_two_tree_seq(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  auto to_int = [&](std::string_view tok, const std::string& field) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("two-tree sequence: " + field + " is not an integer: '" + std::string(tok) + "'");
    return v;
  };
  std::vector<std::string_view> parts;
  std::string_view rest = s;
  while (true) {
    auto pos = rest.find(';');
    parts.push_back(rest.substr(0, pos));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  if (!parts.empty() && parts.back().empty() && parts.size() > 1) parts.pop_back();
  TwoTreeSeq seq;
  seq.n = to_int(parts[0], "vertex count");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto dash = parts[i].find('-');
    if (dash == std::string_view::npos)
      throw std::invalid_argument("two-tree sequence: attachment " + std::to_string(i) + " must look like u-v");
    const std::string field = "attachment " + std::to_string(i);
    seq.attachments.push_back(make_edge(to_int(parts[i].substr(0, dash), field),
                                        to_int(parts[i].substr(dash + 1), field)));
  }
  build_two_tree(seq);  // validates
  return seq;
}

inline std::string format_two_tree_seq(const TwoTreeSeq& seq) {
  std::ostringstream out;
  out << seq.n;
  for (auto [u, v] : seq.attachments) out << ';' << u << '-' << v;
  return out.str();
}

inline constexpr int kMaxIsomorphismVertices = 10;

/// Backtracking search for an edge-preserving bijection, pruned by degree.
inline bool is_isomorphic(const TriangleGraph& g1, const TriangleGraph& g2) {
  if (g1.n() > kMaxIsomorphismVertices || g2.n() > kMaxIsomorphismVertices)
    throw std::out_of_range("is_isomorphic: graphs limited to " + std::to_string(kMaxIsomorphismVertices) +
                            " vertices");
  if (g1.n() != g2.n() || g1.edges().size() != g2.edges().size()) return false;
  if (degree_sequence(g1) != degree_sequence(g2)) return false;
  const int n = g1.n();
  const auto d1 = g1.degrees(), d2 = g2.degrees();
  std::vector<std::vector<char>> a1(n, std::vector<char>(n, 0)), a2 = a1;
  for (auto [u, v] : g1.edges()) a1[u][v] = a1[v][u] = 1;
  for (auto [u, v] : g2.edges()) a2[u][v] = a2[v][u] = 1;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int u) {
    if (u == n) return true;
    for (int x = 0; x < n; ++x) {
      if (used[x] || d1[u] != d2[x]) continue;
      bool ok = true;
      for (int p = 0; p < u && ok; ++p) ok = a1[u][p] == a2[x][map[p]];
      if (!ok) continue;
      map[u] = x;
      used[x] = 1;
      if (extend(u + 1)) return true;
      used[x] = 0;
    }
    return false;
  };
  return extend(0);
}

inline constexpr int kMaxEnumeratedTwoTree = 8;

struct TwoTreeClass {
  TwoTreeSeq seq;  // first sequence (in enumeration order) producing the class
  TriangleGraph graph;
};

/// One representative per isomorphism class of 2-trees on n vertices, found by
/// replaying every attachment sequence in lexicographic order.
inline std::vector<TwoTreeClass> enumerate_two_tree_classes(int n) {
  if (n < 3 || n > kMaxEnumeratedTwoTree)
    throw std::out_of_range("enumerate_two_trees: n must be in 3.." + std::to_string(kMaxEnumeratedTwoTree) +
                            " (got " + std::to_string(n) + ")");
  std::vector<TwoTreeClass> reps;
  TwoTreeSeq seq{n, {}};
  std::function<void(std::set<Edge>&)> walk = [&](std::set<Edge>& edges) {
    const int w = static_cast<int>(seq.attachments.size()) + 3;
    if (w == n) {
      TriangleGraph g(n, {edges.begin(), edges.end()});
      for (const auto& r : reps)
        if (is_isomorphic(r.graph, g)) return;
      reps.push_back({seq, std::move(g)});
      return;
    }
    const std::vector<Edge> current(edges.begin(), edges.end());
    for (auto e : current) {
      seq.attachments.push_back(e);
      edges.insert({e.first, w});
      edges.insert({e.second, w});
      walk(edges);
      edges.erase({e.first, w});
      edges.erase({e.second, w});
      seq.attachments.pop_back();
    }
  };
  std::set<Edge> seed{{0, 1}, {0, 2}, {1, 2}};
  walk(seed);
  return reps;
}

inline std::vector<TriangleGraph> enumerate_two_trees(int n) {
  std::vector<TriangleGraph> out;
  for (auto& c : enumerate_two_tree_classes(n)) out.push_back(std::move(c.graph));
  return out;
}

}  // namespace bichrom
