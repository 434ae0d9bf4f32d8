#include "degseq/construction.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "degseq/analysis.hpp"
#include "degseq/error.hpp"

namespace degseq {

SimpleGraph havel_hakimi(const DegreeSequence& s) {
  const std::size_t n = s.size();
  std::vector<std::int64_t> residual(s.terms().begin(), s.terms().end());
  std::vector<Edge> edges;
  std::vector<Vertex> order(n);

  for (;;) {
    Vertex hub = 0;
    for (Vertex v = 1; v < n; ++v)
      if (residual[v] > residual[hub]) hub = v;
    if (residual[hub] == 0) break;

    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return residual[a] > residual[b]; });
    std::int64_t need = residual[hub];
    residual[hub] = 0;
    for (Vertex v : order) {
      if (need == 0) break;
      if (v == hub) continue;
      if (residual[v] == 0) break;
      edges.push_back(make_edge(hub, v));
      --residual[v];
      --need;
    }
    if (need > 0) throw Error(ErrorCode::NotGraphic, "{" + s.to_string() + "} is not graphic");
  }
  return SimpleGraph(n, edges);
}

namespace {

// Smallest edge of the component that is not in the BFS tree grown from the
// component's lowest vertex. Such an edge always lies on a cycle.
std::optional<Edge> lowest_cycle_edge(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& adj,
                                      Vertex root) {
  std::set<Edge> tree;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> queue{root};
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      tree.insert(make_edge(x, y));
      queue.push_back(y);
    }
  }
  for (const Edge& e : g.edges()) {
    if (seen[e.u] && !tree.contains(e)) return e;
  }
  return std::nullopt;
}

}  // namespace

MergeOutcome merge_components(const SimpleGraph& g, const MergeObserver& observer) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::CannotMerge, "graph has no vertices");
  if (g.min_degree() == 0) throw Error(ErrorCode::CannotMerge, "graph has an isolated vertex");
  if (g.edge_count() + 1 < n) {
    throw Error(ErrorCode::CannotMerge, std::to_string(g.edge_count()) + " edges cannot connect " +
                                            std::to_string(n) + " vertices");
  }

  MergeOutcome out{g, 0};
  for (;;) {
    const auto labels = component_labels(out.graph);
    const std::size_t k = *std::max_element(labels.begin(), labels.end()) + 1;
    if (k == 1) break;

    std::vector<std::size_t> vertices(k, 0), edges(k, 0);
    std::vector<Vertex> lowest(k, static_cast<Vertex>(n));
    for (Vertex v = 0; v < n; ++v) {
      ++vertices[labels[v]];
      lowest[labels[v]] = std::min(lowest[labels[v]], v);
    }
    for (const Edge& e : out.graph.edges()) ++edges[labels[e.u]];

    std::size_t cyclic = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (edges[c] >= vertices[c]) {
        cyclic = c;
        break;
      }
    }
    if (cyclic == k) throw Error(ErrorCode::CannotMerge, "no component contains a cycle");

    const auto adj = out.graph.adjacency();
    const auto cut = lowest_cycle_edge(out.graph, adj, lowest[cyclic]);
    if (!cut) throw std::logic_error("cyclic component without a non-tree edge");

    const std::size_t other = cyclic == 0 ? 1 : 0;
    Edge partner{};
    for (const Edge& e : out.graph.edges()) {
      if (labels[e.u] == other) {
        partner = e;
        break;
      }
    }

    const Edge removed[] = {*cut, partner};
    const Edge added[] = {make_edge(cut->u, partner.u), make_edge(cut->v, partner.v)};
    out.graph = without_edges_with(out.graph, removed, added);
    ++out.swaps;
    if (component_count(out.graph) >= k) throw std::logic_error("swap did not merge components");
    if (observer) observer(out.graph);
  }
  return out;
}

RealizationResult realize_connected(const DegreeSequence& s) {
  if (!is_graphic(s)) {
    throw Error(ErrorCode::NotConnectedSequence, "{" + s.to_string() + "} is not graphic (erdos-gallai)");
  }
  if (!is_connected_sequence(s)) {
    throw Error(ErrorCode::NotConnectedSequence,
                "{" + s.to_string() + "} has too few edges for a spanning tree (lower-bound)");
  }
  const MergeOutcome merged = merge_components(havel_hakimi(s));
  RealizationResult out;
  out.graph = merged.graph;
  out.swaps_used = merged.swaps;
  out.trace = canonical_trace(out.graph);
  return out;
}

ConstructionTrace canonical_trace(const SimpleGraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");
  const std::size_t n = g.vertex_count();
  const auto adj = g.adjacency();
  constexpr auto kUnplaced = static_cast<Vertex>(-1);

  std::vector<Vertex> index_of(n, kUnplaced);
  std::vector<Vertex> labels{0};
  index_of[0] = 0;
  std::set<Vertex> frontier(adj[0].begin(), adj[0].end());
  std::set<Edge> tree;
  ConstructionTrace trace;

  while (labels.size() < n) {
    const Vertex w = *frontier.begin();
    frontier.erase(frontier.begin());
    const auto anchor = *std::find_if(adj[w].begin(), adj[w].end(),
                                      [&](Vertex x) { return index_of[x] != kUnplaced; });
    const auto fresh = static_cast<Vertex>(labels.size());
    index_of[w] = fresh;
    labels.push_back(w);
    tree.insert(make_edge(anchor, w));
    trace.steps.push_back(TraceStep::open(index_of[anchor], fresh));
    for (Vertex y : adj[w])
      if (index_of[y] == kUnplaced) frontier.insert(y);
  }

  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    if (!tree.contains(e)) rest.push_back(make_edge(index_of[e.u], index_of[e.v]));
  }
  std::sort(rest.begin(), rest.end());
  for (const Edge& e : rest) trace.steps.push_back(TraceStep::closed(e.u, e.v));

  bool identity = true;
  for (Vertex k = 0; k < n; ++k) identity = identity && labels[k] == k;
  if (!identity) trace.vertex_labels = std::move(labels);
  return trace;
}

SimpleGraph replay_trace(const ConstructionTrace& t) {
  SimpleGraph h(1);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& step = t.steps[i];
    if (step.a == step.b) throw InvalidStepError(i, StepFault::SelfLoop, "vertex " + std::to_string(step.a));
    const EdgeKind kind = classify_edge(h, step.a, step.b);
    const Vertex next = static_cast<Vertex>(h.vertex_count());
    const std::string detail = std::to_string(step.a) + " " + std::to_string(step.b);

    if (kind == EdgeKind::AlreadyPresent) throw InvalidStepError(i, StepFault::DuplicateEdge, detail);
    if (kind == EdgeKind::Disjoint) throw InvalidStepError(i, StepFault::DanglingVertex, detail);
    if (step.kind == StepKind::Open) {
      if (kind != EdgeKind::Open) throw InvalidStepError(i, StepFault::WrongKind, detail + " is closed");
      if (std::max(step.a, step.b) != next) {
        throw InvalidStepError(i, StepFault::DanglingVertex, "new vertex must be " + std::to_string(next));
      }
    } else if (kind != EdgeKind::Closed) {
      if (std::max(step.a, step.b) == next) throw InvalidStepError(i, StepFault::WrongKind, detail + " is open");
      throw InvalidStepError(i, StepFault::DanglingVertex, detail);
    }
    h = add_edge(h, step.a, step.b);
  }

  if (t.vertex_labels.empty()) return h;
  std::vector<bool> seen(h.vertex_count(), false);
  bool ok = t.vertex_labels.size() == h.vertex_count();
  for (std::size_t k = 0; ok && k < t.vertex_labels.size(); ++k) {
    const Vertex l = t.vertex_labels[k];
    ok = l < h.vertex_count() && !seen[l];
    if (ok) seen[l] = true;
  }
  if (!ok) {
    throw InvalidStepError(t.steps.size(), StepFault::BadLabels,
                           "labels must be a permutation of 0.." + std::to_string(h.vertex_count() - 1));
  }
  return h.relabeled(t.vertex_labels);
}

std::pair<SimpleGraph, SimpleGraph> extremal_pair(std::size_t n) {
  if (n < 5) throw Error(ErrorCode::DomainTooSmall, "extremal pair needs n >= 5");
  SimpleGraph g1 = SimpleGraph::disjoint_union(SimpleGraph::complete(n - 2), SimpleGraph::complete(2));
  const auto a = static_cast<Vertex>(n - 2), b = static_cast<Vertex>(n - 1);
  const Edge removed[] = {{0, 1}, {a, b}};
  const Edge added[] = {{0, b}, {1, a}};
  SimpleGraph g2 = without_edges_with(g1, removed, added);
  return {std::move(g1), std::move(g2)};
}

}  // namespace degseq
