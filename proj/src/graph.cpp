#include "equichrome/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "equichrome/errors.hpp"

namespace equichrome {

Graph Graph::build(std::vector<VertexLabel> vertices,
                   const std::vector<std::pair<VertexLabel, VertexLabel>>& edges) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      fail(Errc::bad_parameter, "duplicate vertex label: " + vertices[i].str());
    }
  }
  g.verts_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(g.verts_.size()); ++i) g.index_[g.verts_[i]] = i;
  g.adj_.assign(g.verts_.size(), {});

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) fail(Errc::bad_parameter, "loop edge at " + a.str());
    auto ia = g.index_.find(a);
    auto ib = g.index_.find(b);
    if (ia == g.index_.end() || ib == g.index_.end()) {
      fail(Errc::bad_parameter, "edge endpoint not a vertex: " + a.str() + "," + b.str());
    }
    int lo = std::min(ia->second, ib->second);
    int hi = std::max(ia->second, ib->second);
    if (!seen.insert({lo, hi}).second) continue;
    g.adj_[lo].push_back(hi);
    g.adj_[hi].push_back(lo);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int Graph::edge_count() const {
  int deg_sum = 0;
  for (const auto& nbrs : adj_) deg_sum += static_cast<int>(nbrs.size());
  return deg_sum / 2;
}

int Graph::index_of(const VertexLabel& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) fail(Errc::bad_parameter, "vertex not in graph: " + v.str());
  return it->second;
}

bool Graph::adjacent(const VertexLabel& a, const VertexLabel& b) const {
  int ia = index_of(a);
  int ib = index_of(b);
  return std::binary_search(adj_[ia].begin(), adj_[ia].end(), ib);
}

std::vector<VertexLabel> Graph::neighbors(const VertexLabel& v) const {
  std::vector<VertexLabel> out;
  for (int j : adj_[index_of(v)]) out.push_back(verts_[j]);
  return out;
}

int Graph::degree(const VertexLabel& v) const {
  return static_cast<int>(adj_[index_of(v)].size());
}

std::vector<std::pair<VertexLabel, VertexLabel>> Graph::edges() const {
  std::vector<std::pair<VertexLabel, VertexLabel>> out;
  for (int i = 0; i < vertex_count(); ++i) {
    for (int j : adj_[i]) {
      if (j > i) out.emplace_back(verts_[i], verts_[j]);
    }
  }
  return out;
}

Graph Graph::without(const std::vector<VertexLabel>& removed) const {
  std::set<VertexLabel> gone(removed.begin(), removed.end());
  for (const auto& v : gone) index_of(v);  // membership check
  std::vector<VertexLabel> keep;
  for (const auto& v : verts_) {
    if (!gone.count(v)) keep.push_back(v);
  }
  return induced(keep);
}

Graph Graph::induced(const std::vector<VertexLabel>& keep) const {
  std::set<VertexLabel> kept(keep.begin(), keep.end());
  std::vector<std::pair<VertexLabel, VertexLabel>> es;
  for (const auto& [a, b] : edges()) {
    if (kept.count(a) && kept.count(b)) es.emplace_back(a, b);
  }
  std::vector<VertexLabel> vs(kept.begin(), kept.end());
  for (const auto& v : vs) index_of(v);
  return build(std::move(vs), es);
}

std::vector<std::vector<int>> Graph::distance_matrix() const {
  int n = vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : adj_[v]) {
        if (dist[s][u] < 0) {
          dist[s][u] = dist[s][v] + 1;
          queue.push_back(u);
        }
      }
    }
  }
  return dist;
}

bool Graph::operator==(const Graph& o) const {
  return verts_ == o.verts_ && adj_ == o.adj_;
}

Graph with_extra_edge(const Graph& g, const VertexLabel& a, const VertexLabel& b) {
  auto es = g.edges();
  es.emplace_back(a, b);
  Graph out = Graph::build(g.vertices(), es);
  if (g.family_info()) out.set_family_info(*g.family_info());
  return out;
}

void LabelMap::add(const VertexLabel& from, const VertexLabel& to) {
  if (fwd_.count(from)) fail(Errc::bad_parameter, "label mapped twice: " + from.str());
  if (rev_.count(to)) fail(Errc::bad_parameter, "label targeted twice: " + to.str());
  fwd_.emplace(from, to);
  rev_.emplace(to, from);
}

const VertexLabel& LabelMap::image(const VertexLabel& from) const {
  auto it = fwd_.find(from);
  if (it == fwd_.end()) fail(Errc::bad_parameter, "label not in map: " + from.str());
  return it->second;
}

const VertexLabel& LabelMap::preimage(const VertexLabel& to) const {
  auto it = rev_.find(to);
  if (it == rev_.end()) fail(Errc::bad_parameter, "label not in map image: " + to.str());
  return it->second;
}

LabelMap LabelMap::inverse() const {
  LabelMap out;
  for (const auto& [from, to] : fwd_) out.add(to, from);
  return out;
}

bool LabelMap::is_isomorphism(const Graph& source, const Graph& target) const {
  if (static_cast<int>(fwd_.size()) != source.vertex_count()) return false;
  if (source.vertex_count() != target.vertex_count()) return false;
  if (source.edge_count() != target.edge_count()) return false;
  for (const auto& v : source.vertices()) {
    auto it = fwd_.find(v);
    if (it == fwd_.end() || !target.has_vertex(it->second)) return false;
  }
  for (const auto& [a, b] : source.edges()) {
    if (!target.adjacent(image(a), image(b))) return false;
  }
  return true;  // edge counts equal, so non-edges map to non-edges
}

}  // namespace equichrome
