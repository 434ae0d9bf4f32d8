#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"
#include "degseq/trace.hpp"

namespace degseq {

struct RealizationResult {
  SimpleGraph graph;
  ConstructionTrace trace;
  std::size_t swaps_used = 0;
};

// Havel-Hakimi: vertex i receives degree s[i]. The vertex with the largest
// residual degree (lowest index on ties) is joined to the next largest ones.
// Throws NotGraphic when the procedure gets stuck.
SimpleGraph havel_hakimi(const DegreeSequence& s);

struct MergeOutcome {
  SimpleGraph graph;
  std::size_t swaps = 0;
};

using MergeObserver = std::function<void(const SimpleGraph&)>;

// Degree-preserving 2-swaps until the graph is connected. Each iteration
// removes a cycle edge (a,b) from a component with |E| >= |V| and an edge
// (c,d) from another component, then adds (a,c) and (b,d). The observer, if
// set, sees the graph after every swap.
// Throws CannotMerge when some vertex is isolated or |E| < |V| - 1.
MergeOutcome merge_components(const SimpleGraph& g, const MergeObserver& observer = {});

inline SimpleGraph merge_components_by_swap(const SimpleGraph& g) { return merge_components(g).graph; }

// Connected realization of s, deterministic. Throws NotConnectedSequence.
RealizationResult realize_connected(const DegreeSequence& s);

// Spanning tree grown from vertex 0 (always attaching the lowest-index
// reachable vertex to its lowest-index tree neighbor), followed by the
// remaining edges in lexicographic order. Throws NotConnected.
ConstructionTrace canonical_trace(const SimpleGraph& g);

// Replays from K1, validating each step's declared kind. Throws
// InvalidStepError on the first bad step.
SimpleGraph replay_trace(const ConstructionTrace& t);

// (K_{n-2} + K_2, connected graph with the same degree sequence). Throws
// DomainTooSmall for n < 5.
std::pair<SimpleGraph, SimpleGraph> extremal_pair(std::size_t n);

}  // namespace degseq
