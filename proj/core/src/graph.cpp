#include "degseq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degseq/error.hpp"

namespace degseq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidUnion: return "InvalidUnion";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotConnectedSequence: return "NotConnectedSequence";
    case ErrorCode::NotGraphic: return "NotGraphic";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::CannotMerge: return "CannotMerge";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

std::string_view to_string(StepFault fault) {
  switch (fault) {
    case StepFault::WrongKind: return "wrong-kind";
    case StepFault::DuplicateEdge: return "duplicate-edge";
    case StepFault::DanglingVertex: return "dangling-vertex";
    case StepFault::SelfLoop: return "self-loop";
    case StepFault::BadLabels: return "bad-labels";
  }
  return "unknown";
}

InvalidStepError::InvalidStepError(std::size_t index, StepFault fault, const std::string& detail)
    : Error(ErrorCode::InvalidStep,
            "step " + std::to_string(index) + ": " + std::string(to_string(fault)) +
                (detail.empty() ? "" : " (" + detail + ")")),
      index_(index),
      fault_(fault) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& detail)
    : Error(ErrorCode::ParseError,
            (line > 0 ? "line " + std::to_string(line) + ", " : std::string()) + "column " +
                std::to_string(column) + ": " + detail),
      line_(line),
      column_(column) {}

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

SimpleGraph::SimpleGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : vertex_count_(vertex_count) {
  for (const Edge& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    if (e.v >= vertex_count_) {
      throw Error(ErrorCode::InvalidGraph, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                               "} references a vertex outside 0.." +
                                               std::to_string(vertex_count_ == 0 ? 0 : vertex_count_ - 1));
    }
    if (!edges_.insert(e).second) {
      throw Error(ErrorCode::InvalidGraph,
                  "parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
    : SimpleGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) edges.push_back({u, v});
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DomainTooSmall, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::star(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph out(a.vertex_count_ + b.vertex_count_);
  out.edges_ = a.edges_;
  const auto shift = static_cast<Vertex>(a.vertex_count_);
  for (const Edge& e : b.edges_) out.edges_.insert({e.u + shift, e.v + shift});
  return out;
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return edges_.contains(a < b ? Edge{a, b} : Edge{b, a});
}

std::vector<std::size_t> SimpleGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::size_t SimpleGraph::min_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

std::vector<std::vector<Vertex>> SimpleGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> labels) const {
  if (labels.size() != vertex_count_) {
    throw Error(ErrorCode::InvalidGraph, "relabeling has " + std::to_string(labels.size()) +
                                             " entries for " + std::to_string(vertex_count_) + " vertices");
  }
  std::vector<bool> seen(vertex_count_, false);
  for (Vertex l : labels) {
    if (l >= vertex_count_ || seen[l]) throw Error(ErrorCode::InvalidGraph, "relabeling is not a permutation");
    seen[l] = true;
  }
  SimpleGraph out(vertex_count_);
  for (const Edge& e : edges_) out.edges_.insert(make_edge(labels[e.u], labels[e.v]));
  return out;
}

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Open: return "open";
    case EdgeKind::Closed: return "closed";
    case EdgeKind::AlreadyPresent: return "already-present";
    case EdgeKind::Disjoint: return "disjoint";
  }
  return "unknown";
}

EdgeKind classify_edge(const SimpleGraph& h, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
  const bool has_u = h.has_vertex(u);
  const bool has_v = h.has_vertex(v);
  if (has_u && has_v) return h.has_edge(u, v) ? EdgeKind::AlreadyPresent : EdgeKind::Closed;
  if (has_u || has_v) return EdgeKind::Open;
  return EdgeKind::Disjoint;
}

SimpleGraph add_edge(const SimpleGraph& h, Vertex u, Vertex v) {
  const EdgeKind kind = classify_edge(h, u, v);
  const std::string pair = "{" + std::to_string(u) + "," + std::to_string(v) + "}";
  switch (kind) {
    case EdgeKind::AlreadyPresent:
      throw Error(ErrorCode::InvalidUnion, "edge " + pair + " is already present");
    case EdgeKind::Disjoint:
      throw Error(ErrorCode::InvalidUnion, "edge " + pair + " shares no vertex with the graph");
    case EdgeKind::Open: {
      const Vertex fresh = h.has_vertex(u) ? v : u;
      if (fresh != h.vertex_count()) {
        throw Error(ErrorCode::InvalidUnion, "open edge " + pair + " must introduce vertex " +
                                                 std::to_string(h.vertex_count()));
      }
      SimpleGraph out = h;
      ++out.vertex_count_;
      out.edges_.insert(make_edge(u, v));
      return out;
    }
    case EdgeKind::Closed: {
      SimpleGraph out = h;
      out.edges_.insert(make_edge(u, v));
      return out;
    }
  }
  return h;
}

SimpleGraph without_edges_with(const SimpleGraph& g, std::span<const Edge> removed,
                               std::span<const Edge> added) {
  SimpleGraph out = g;
  for (const Edge& e : removed) {
    if (out.edges_.erase(make_edge(e.u, e.v)) == 0) {
      throw Error(ErrorCode::InvalidGraph, "cannot remove absent edge {" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + "}");
    }
  }
  for (const Edge& raw : added) {
    const Edge e = make_edge(raw.u, raw.v);
    if (e.v >= out.vertex_count_ || !out.edges_.insert(e).second) {
      throw Error(ErrorCode::InvalidGraph,
                  "cannot add edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
  return out;
}

std::vector<std::size_t> component_labels(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  // Union-find keeps this linear-ish without building adjacency.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> root_id(n, n);
  std::vector<std::size_t> label(n);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = find(x);
    if (root_id[r] == n) root_id[r] = next++;
    label[x] = root_id[r];
  }
  return label;
}

std::size_t component_count(const SimpleGraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const SimpleGraph& g) { return component_count(g) == 1; }

}  // namespace degseq
