#pragma once

#include <cstddef>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

enum class StepKind { Open, Closed };

struct TraceStep {
  StepKind kind = StepKind::Open;
  // Open: (anchor, new vertex). Closed: the two existing endpoints.
  Vertex a = 0;
  Vertex b = 0;

  static TraceStep open(Vertex anchor, Vertex fresh) { return {StepKind::Open, anchor, fresh}; }
  static TraceStep closed(Vertex u, Vertex v) { return {StepKind::Closed, u, v}; }

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// A K1-rooted sequence of open/closed edge additions.
//
// Steps address vertices by construction order: the k-th open step introduces
// vertex k. `vertex_labels`, when non-empty, maps construction index to the
// label the vertex carries in the finished graph.
struct ConstructionTrace {
  std::vector<TraceStep> steps;
  std::vector<Vertex> vertex_labels;

  std::size_t open_count() const;
  std::size_t closed_count() const;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

}  // namespace degseq
