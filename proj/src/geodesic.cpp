#include "cubeplan/geodesic.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace cubeplan {

namespace {

void require_ideal(const Pip& pip, const Bitset& ideal, const char* which) {
  if (!pip.is_consistent_ideal(ideal))
    throw InvalidIdeal(std::string(which) + " endpoint is not a consistent ideal");
}

Bitset toggled(Bitset ideal, const std::vector<std::size_t>& elements) {
  for (std::size_t e : elements) ideal.flip(e);
  return ideal;
}

// Shared skeleton of both planners: schedule the crossing DAG, emitting one
// batch per call to `take`, which receives the ready node set and picks a
// non-empty subset of it (returned as sorted node indices).
template <typename Take>
GeodesicPlan schedule(const Pip& pip, const Bitset& from, const Bitset& to,
                      Metric metric, Take take) {
  CrossingDag dag = crossing_dag(pip, from, to);
  const std::size_t n = dag.nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : dag.arcs) {
    out[a].push_back(b);
    ++indegree[b];
  }

  // Ready nodes keyed by element index, which equals element-name order.
  std::set<std::pair<std::size_t, std::size_t>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert({dag.nodes[i].element, i});

  GeodesicPlan plan;
  plan.metric = metric;
  plan.vertex_trace.push_back(from);
  std::size_t done = 0;
  while (done < n) {
    std::vector<std::size_t> picked = take(ready);
    std::vector<std::size_t> elements;
    for (std::size_t node : picked) {
      ready.erase({dag.nodes[node].element, node});
      elements.push_back(dag.nodes[node].element);
      for (std::size_t succ : out[node])
        if (--indegree[succ] == 0) ready.insert({dag.nodes[succ].element, succ});
    }
    done += picked.size();
    std::sort(elements.begin(), elements.end());
    Bitset next = toggled(plan.vertex_trace.back(), elements);
    if (!pip.is_consistent_ideal(next))
      throw InvariantViolation("geodesic step left the complex");
    plan.batches.push_back(std::move(elements));
    plan.vertex_trace.push_back(std::move(next));
  }
  plan.distance = plan.batches.size();
  return plan;
}

}  // namespace

CrossingDag crossing_dag(const Pip& pip, const Bitset& from, const Bitset& to) {
  require_ideal(pip, from, "start");
  require_ideal(pip, to, "target");

  std::vector<std::size_t> removals = from.minus(to).indices();
  std::vector<std::size_t> additions = to.minus(from).indices();

  CrossingDag dag;
  for (std::size_t e : removals) dag.nodes.push_back({false, e});
  for (std::size_t e : additions) dag.nodes.push_back({true, e});

  const std::size_t nr = removals.size();
  for (std::size_t i = 0; i < removals.size(); ++i)
    for (std::size_t j = 0; j < removals.size(); ++j)
      if (pip.less(removals[j], removals[i])) dag.arcs.push_back({i, j});
  for (std::size_t i = 0; i < additions.size(); ++i)
    for (std::size_t j = 0; j < additions.size(); ++j)
      if (pip.less(additions[i], additions[j]))
        dag.arcs.push_back({nr + i, nr + j});
  for (std::size_t i = 0; i < removals.size(); ++i)
    for (std::size_t j = 0; j < additions.size(); ++j)
      if (pip.inconsistent(removals[i], additions[j]))
        dag.arcs.push_back({i, nr + j});
  std::sort(dag.arcs.begin(), dag.arcs.end());
  return dag;
}

using ReadySet = std::set<std::pair<std::size_t, std::size_t>>;

GeodesicPlan l1_geodesic(const Pip& pip, const Bitset& from, const Bitset& to) {
  // Element index order is element-name order, so taking the first ready
  // entry breaks ties lexicographically by element name.
  return schedule(pip, from, to, Metric::L1, [](const ReadySet& ready) {
    return std::vector<std::size_t>{ready.begin()->second};
  });
}

GeodesicPlan linf_geodesic(const Pip& pip, const Bitset& from, const Bitset& to) {
  GeodesicPlan plan =
      schedule(pip, from, to, Metric::LInf, [](const ReadySet& ready) {
        std::vector<std::size_t> all;
        for (const auto& [element, node] : ready) all.push_back(node);
        return all;
      });
  // Mandatory check: each batch must span a cube at its source, i.e. every
  // subset of the batch must also lead to a consistent ideal.
  for (std::size_t b = 0; b < plan.batches.size(); ++b) {
    const auto& batch = plan.batches[b];
    if (batch.size() > 63)
      throw InvariantViolation("batch too large to verify");
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << batch.size());
         ++mask) {
      Bitset corner = plan.vertex_trace[b];
      for (std::size_t i = 0; i < batch.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) corner.flip(batch[i]);
      if (!pip.is_consistent_ideal(corner))
        throw InvariantViolation("geodesic batch does not span a cube");
    }
  }
  return plan;
}

DistanceOracle::DistanceOracle(const CubeComplex& x) {
  const std::size_t n = x.vertex_count();
  std::vector<std::set<std::size_t>> diag(n);
  skeleton_.resize(n);
  for (const auto& e : x.edges()) {
    skeleton_[e.u].push_back(e.v);
    skeleton_[e.v].push_back(e.u);
    diag[e.u].insert(e.v);
    diag[e.v].insert(e.u);
  }
  for (auto& adj : skeleton_) std::sort(adj.begin(), adj.end());
  for (const auto& cube : x.cubes()) {
    std::vector<std::size_t> corners = x.cube_corners(cube);
    for (std::size_t a : corners)
      for (std::size_t b : corners)
        if (a != b) diag[a].insert(b);
  }
  diagonal_.resize(n);
  for (std::size_t v = 0; v < n; ++v)
    diagonal_[v].assign(diag[v].begin(), diag[v].end());
}

std::vector<std::size_t> DistanceOracle::distances_from(std::size_t u,
                                                        Metric metric) const {
  const auto& adj = graph(metric);
  if (u >= adj.size()) throw InvalidComplex("oracle vertex out of range");
  constexpr std::size_t unreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(adj.size(), unreached);
  std::deque<std::size_t> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v])
      if (dist[w] == unreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::size_t DistanceOracle::distance(std::size_t u, std::size_t w,
                                     Metric metric) const {
  std::vector<std::size_t> dist = distances_from(u, metric);
  if (w >= dist.size()) throw InvalidComplex("oracle vertex out of range");
  if (dist[w] == static_cast<std::size_t>(-1))
    throw InvalidComplex("oracle endpoints are not connected");
  return dist[w];
}

std::size_t oracle_l1(const CubeComplex& x, std::size_t u, std::size_t w) {
  return DistanceOracle(x).distance(u, w, Metric::L1);
}

std::size_t oracle_linf(const CubeComplex& x, std::size_t u, std::size_t w) {
  return DistanceOracle(x).distance(u, w, Metric::LInf);
}

}  // namespace cubeplan
