#include "skeleton.hpp"

#include <algorithm>

namespace kg {

Skeleton::Skeleton(int rank) : rank_(rank) {
  if (rank < 1) fail(Errc::bad_argument, "rank must be at least 1");
}

int Skeleton::add_vertex(const std::string& id) {
  if (vertex_by_id_.count(id)) fail(Errc::duplicate_id, "duplicate vertex id '" + id + "'");
  int v = (int)vertices_.size();
  vertices_.push_back(id);
  vertex_by_id_[id] = v;
  frozen_ = false;
  return v;
}

int Skeleton::add_edge(const std::string& id, int color, const std::string& range,
                       const std::string& source) {
  if (edge_by_id_.count(id)) fail(Errc::duplicate_id, "duplicate edge id '" + id + "'");
  Edge e;
  e.id = id;
  e.color = color;
  e.range_name = range;
  e.source_name = source;
  if (auto v = find_vertex(range)) e.range = *v;
  if (auto v = find_vertex(source)) e.source = *v;
  int idx = (int)edges_.size();
  edges_.push_back(std::move(e));
  edge_by_id_[id] = idx;
  frozen_ = false;
  return idx;
}

std::optional<int> Skeleton::find_vertex(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Skeleton::find_edge(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

int Skeleton::need_vertex(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) fail(Errc::unknown_vertex, "unknown vertex '" + id + "'");
  return *v;
}

int Skeleton::need_edge(const std::string& id) const {
  auto e = find_edge(id);
  if (!e) fail(Errc::unknown_edge, "unknown edge '" + id + "'");
  return *e;
}

void Skeleton::freeze() const {
  if (frozen_) return;
  int n = vertex_count();
  at_range_.assign(n, std::vector<std::vector<int>>(rank_));
  at_source_.assign(n, std::vector<std::vector<int>>(rank_));
  edge_rank_.assign(edge_count(), 0);

  std::vector<int> order(edge_count());
  for (int e = 0; e < edge_count(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return edges_[a].id < edges_[b].id; });
  for (int pos = 0; pos < (int)order.size(); ++pos) edge_rank_[order[pos]] = pos;

  for (int e : order) {
    const Edge& ed = edges_[e];
    if (ed.color < 1 || ed.color > rank_) continue;
    if (ed.range >= 0) at_range_[ed.range][ed.color - 1].push_back(e);
    if (ed.source >= 0) at_source_[ed.source][ed.color - 1].push_back(e);
  }
  frozen_ = true;
}

const std::vector<int>& Skeleton::edges_at(int v, int color, End end) const {
  if (v < 0 || v >= vertex_count()) fail(Errc::unknown_vertex, "vertex index out of range");
  if (color < 1 || color > rank_) fail(Errc::bad_argument, "color out of range");
  freeze();
  return (end == End::range ? at_range_ : at_source_)[v][color - 1];
}

bool Skeleton::edge_before(int e, int f) const {
  freeze();
  return edge_rank_[e] < edge_rank_[f];
}

ValidationReport Skeleton::validate() const {
  ValidationReport rep;
  bool endpoints_ok = true;
  for (const Edge& e : edges_) {
    if (e.color < 1 || e.color > rank_) {
      rep.add("BadColor", "edge '" + e.id + "' has color " + std::to_string(e.color) +
                              " outside 1.." + std::to_string(rank_));
      endpoints_ok = false;
    }
    if (e.range < 0) {
      rep.add("DanglingEndpoint", "edge '" + e.id + "' range '" + e.range_name + "' not declared");
      endpoints_ok = false;
    }
    if (e.source < 0) {
      rep.add("DanglingEndpoint",
              "edge '" + e.id + "' source '" + e.source_name + "' not declared");
      endpoints_ok = false;
    }
  }
  if (endpoints_ok) {
    freeze();
    for (int v = 0; v < vertex_count(); ++v)
      for (int c = 1; c <= rank_; ++c)
        if (at_range_[v][c - 1].empty())
          rep.add("NoSourceAt",
                  "vertex '" + vertices_[v] + "' has no color-" + std::to_string(c) +
                      " edge at its range");
  }
  return rep;
}

}  // namespace kg
