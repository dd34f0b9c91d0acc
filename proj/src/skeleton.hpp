#pragma once
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "validation.hpp"

namespace kg {

// Endpoints are vertex indices; -1 when the named vertex was never declared
// (kept around so validation can report the dangling name).
struct Edge {
  std::string id;
  int color = 0;  // 1..k
  int range = -1;
  int source = -1;
  std::string range_name;
  std::string source_name;
};

enum class End { range, source };

// k-colored finite directed multigraph. Vertices and edges keep insertion
// order; incidence listings are sorted by id.
class Skeleton {
 public:
  explicit Skeleton(int rank);

  int add_vertex(const std::string& id);
  int add_edge(const std::string& id, int color, const std::string& range,
               const std::string& source);

  int rank() const { return rank_; }
  int vertex_count() const { return (int)vertices_.size(); }
  int edge_count() const { return (int)edges_.size(); }
  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }

  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_edge(const std::string& id) const;
  int need_vertex(const std::string& id) const;
  int need_edge(const std::string& id) const;

  // Edges of one color incident to v at the given end, sorted by edge id.
  // End::range lists v·Λ^{e_i}, End::source lists Λ^{e_i}·v.
  const std::vector<int>& edges_at(int v, int color, End end) const;

  // True if edge e precedes f in id order.
  bool edge_before(int e, int f) const;

  ValidationReport validate() const;

  // Builds incidence tables; called once the skeleton is complete. Reads are
  // const and lock-free afterwards.
  void freeze() const;

 private:
  int rank_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_by_id_;
  std::unordered_map<std::string, int> edge_by_id_;

  mutable bool frozen_ = false;
  mutable std::vector<std::vector<std::vector<int>>> at_range_, at_source_;  // [v][color-1]
  mutable std::vector<int> edge_rank_;  // position of each edge in id order
};

}  // namespace kg
