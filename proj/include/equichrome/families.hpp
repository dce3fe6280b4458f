#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichrome/graph.hpp"

namespace equichrome {

/// Subdivided star B(l_1,...,l_m): hub u plus m legs, leg i being the path
/// u, v_{i,1}, ..., v_{i,l_i}.  Lengths are sorted nondecreasing internally
/// and the sort permutation is recorded in the result's family info.
Graph build_star_subdivision(const std::vector<int>& lengths);

/// Generalized theta graph: hub u and co-hub w joined by m internally
/// disjoint paths, path i being u, v_{i,1}, ..., v_{i,l_i-1}, w.
/// Rejects multigraphs (m >= 2 with second-smallest length 1).
Graph build_theta(const std::vector<int>& lengths);

struct BasicKind {
  enum class Family { path, cycle, star, complete_bipartite };
  Family family;
  int a = 0;
  int b = 0;

  static BasicKind path(int n) { return {Family::path, n, 0}; }
  static BasicKind cycle(int n) { return {Family::cycle, n, 0}; }
  static BasicKind star(int m) { return {Family::star, m, 0}; }
  static BasicKind complete_bipartite(int a, int b) { return {Family::complete_bipartite, a, b}; }
  /// Accepts "path_7", "cycle_5", "star_9", "k3_3" (complete bipartite).
  static BasicKind parse(const std::string& kind);
  std::string str() const;
};

Graph build_basic(const BasicKind& kind);

/// Same vertex set, edges between vertices at graph distance in [1, p].
Graph graph_power(const Graph& g, int p);

/// Replaces each edge {a,b} by a new TotalEdge(a,b) vertex adjacent to both
/// endpoints.  The returned map names every vertex of the subdivision by the
/// total-graph element it stands for: v -> tv(v), te(a,b) -> te(a,b).
std::pair<Graph, LabelMap> subdivide(const Graph& g);

/// Total graph: vertex set V(G) u E(G) as tv/te labels, adjacency by
/// adjacency or incidence in G.  Internally asserted equal to the square of
/// the subdivision of G.
Graph total_graph(const Graph& g);

enum class FamilyKind { star, theta };

/// Explicit bijection between total_graph(build(family, lengths)) labels and
/// the labels of the doubled-lengths square ([B(2l)]^2 or [Theta(2l)]^2):
/// tv(v_{i,j}) -> v_{i,2j}, the edge between positions j and j+1 on path i
/// -> v_{i,2j+1}, the edge at u on path i -> v_{i,1}, u -> u, w -> w, and the
/// edge at w on path i -> v_{i,2l_i-1}.  Verified to be an isomorphism
/// (edge-set equality) before being returned.
LabelMap doubled_label_map(FamilyKind family, const std::vector<int>& lengths);

/// Brute-force isomorphism search with degree pruning; |V| <= 16.
std::optional<LabelMap> graphs_isomorphic(const Graph& g, const Graph& h);

/// [B(lengths)]^2 and [Theta(lengths)]^2 shorthands.
Graph star_square_graph(const std::vector<int>& lengths);
Graph theta_square_graph(const std::vector<int>& lengths);

/// [B(lengths)]^2 plus an edge between the leg tips v_{a,l_a} and v_{b,l_b}.
Graph star_square_plus_edge_graph(const std::vector<int>& lengths, int a, int b);

}  // namespace equichrome
