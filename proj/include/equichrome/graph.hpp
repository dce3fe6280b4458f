#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichrome/vertex_label.hpp"

namespace equichrome {

/// Sort bookkeeping attached to family constructors: lengths are sorted
/// nondecreasing inside the builders and the permutation is recorded so that
/// callers can rekey per-path data.  sort_perm[p] is the position in the
/// caller's vector that ended up as sorted path p (0-based).
struct FamilyInfo {
  std::string family;  // "star" | "theta"
  std::vector<int> sorted_lengths;
  std::vector<int> sort_perm;
};

/// Simple undirected graph over VertexLabels.  Vertices are kept in canonical
/// label order; all values are immutable after construction.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::vector<VertexLabel> vertices,
                     const std::vector<std::pair<VertexLabel, VertexLabel>>& edges);

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const;
  const std::vector<VertexLabel>& vertices() const { return verts_; }
  bool has_vertex(const VertexLabel& v) const { return index_.count(v) != 0; }
  int index_of(const VertexLabel& v) const;
  const VertexLabel& label_of(int idx) const { return verts_.at(idx); }

  bool adjacent(const VertexLabel& a, const VertexLabel& b) const;
  std::vector<VertexLabel> neighbors(const VertexLabel& v) const;
  const std::vector<int>& neighbor_indices(int idx) const { return adj_.at(idx); }
  int degree(const VertexLabel& v) const;

  /// Edges as canonically ordered pairs, sorted.
  std::vector<std::pair<VertexLabel, VertexLabel>> edges() const;

  /// Induced subgraph on the complement of `removed` (family info dropped).
  Graph without(const std::vector<VertexLabel>& removed) const;
  /// Induced subgraph on `keep`.
  Graph induced(const std::vector<VertexLabel>& keep) const;

  /// BFS distances between all vertex pairs; -1 where unreachable.
  std::vector<std::vector<int>> distance_matrix() const;

  const std::optional<FamilyInfo>& family_info() const { return family_; }
  void set_family_info(FamilyInfo info) { family_ = std::move(info); }

  bool operator==(const Graph& o) const;

 private:
  std::vector<VertexLabel> verts_;
  std::map<VertexLabel, int> index_;
  std::vector<std::vector<int>> adj_;
  std::optional<FamilyInfo> family_;
};

/// Copy of `g` with one extra edge.
Graph with_extra_edge(const Graph& g, const VertexLabel& a, const VertexLabel& b);

/// Bijection between labels of a source graph and labels of a target graph.
class LabelMap {
 public:
  void add(const VertexLabel& from, const VertexLabel& to);
  bool has(const VertexLabel& from) const { return fwd_.count(from) != 0; }
  bool has_image(const VertexLabel& to) const { return rev_.count(to) != 0; }
  const VertexLabel& image(const VertexLabel& from) const;
  const VertexLabel& preimage(const VertexLabel& to) const;
  std::size_t size() const { return fwd_.size(); }
  const std::map<VertexLabel, VertexLabel>& pairs() const { return fwd_; }
  LabelMap inverse() const;

  /// True iff the map is a bijection V(source) -> V(target) carrying edges to
  /// edges and non-edges to non-edges.
  bool is_isomorphism(const Graph& source, const Graph& target) const;

 private:
  std::map<VertexLabel, VertexLabel> fwd_;
  std::map<VertexLabel, VertexLabel> rev_;
};

}  // namespace equichrome
