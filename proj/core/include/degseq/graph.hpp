#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace degseq {

using Vertex = std::uint32_t;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes {a, b} into an Edge. Throws SelfLoop when a == b.
Edge make_edge(Vertex a, Vertex b);

/// A finite simple undirected graph on the dense vertex set 0..n-1.
///
/// Values are immutable once built; the free functions that "modify" a graph
/// (add_edge, the construction module) return new values.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count);
  SimpleGraph(std::size_t vertex_count, std::span<const Edge> edges);
  SimpleGraph(std::size_t vertex_count, std::initializer_list<Edge> edges);

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  // Vertex 0 is the center.
  static SimpleGraph star(std::size_t n);
  // Vertices of `b` are shifted by a.vertex_count().
  static SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  bool has_vertex(Vertex x) const noexcept { return x < vertex_count_; }
  bool has_edge(Vertex a, Vertex b) const;

  std::vector<std::size_t> degrees() const;
  std::size_t min_degree() const;
  // Neighbor lists sorted ascending.
  std::vector<std::vector<Vertex>> adjacency() const;

  // Relabels vertex x as labels[x]; labels must be a permutation of 0..n-1.
  SimpleGraph relabeled(std::span<const Vertex> labels) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  friend SimpleGraph add_edge(const SimpleGraph&, Vertex, Vertex);
  friend SimpleGraph without_edges_with(const SimpleGraph&, std::span<const Edge>, std::span<const Edge>);

  std::size_t vertex_count_ = 0;
  std::set<Edge> edges_;
};

enum class EdgeKind { Open, Closed, AlreadyPresent, Disjoint };

const char* to_string(EdgeKind kind);

// Total classification of a candidate edge relative to host graph h.
// Throws SelfLoop when u == v.
EdgeKind classify_edge(const SimpleGraph& h, Vertex u, Vertex v);

// Returns h with {u, v} added. Open edges must introduce vertex
// h.vertex_count(); anything other than Open or Closed throws InvalidUnion.
SimpleGraph add_edge(const SimpleGraph& h, Vertex u, Vertex v);

// Removes `removed` and inserts `added` in one step. Used by the swap merger.
SimpleGraph without_edges_with(const SimpleGraph& g, std::span<const Edge> removed,
                               std::span<const Edge> added);

bool is_connected(const SimpleGraph& g);

// Component id per vertex, ids numbered by smallest member vertex.
std::vector<std::size_t> component_labels(const SimpleGraph& g);
std::size_t component_count(const SimpleGraph& g);

}  // namespace degseq
