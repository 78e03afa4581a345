#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cubeplan/bitset.hpp"
#include "cubeplan/common.hpp"
#include "cubeplan/cube_complex.hpp"
#include "cubeplan/pip.hpp"

namespace cubeplan {

enum class Metric { L1, LInf };

// One hyperplane crossing: either leave (remove) or enter (add) the
// half-space of an element.
struct Crossing {
  bool add = false;
  std::size_t element = 0;
  bool operator==(const Crossing&) const = default;
};

// Precedence constraints among the crossings that take ideal `from` to
// ideal `to`:
//   remove(q) -> remove(p)  when p < q    (peel from the top)
//   add(p)    -> add(q)     when p < q    (grow from the bottom)
//   remove(p) -> add(a)     when p <-> a  (clear a conflict before entering)
// No other constraints can occur: a removal target and an addition target
// are never comparable, since both ideals are downward closed.
// Nodes list the removals in ascending element order, then the additions in
// ascending element order; arcs are sorted pairs of node indices.
struct CrossingDag {
  std::vector<Crossing> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

CrossingDag crossing_dag(const Pip& pip, const Bitset& from, const Bitset& to);

struct GeodesicPlan {
  Metric metric = Metric::L1;
  std::size_t distance = 0;
  std::vector<std::vector<std::size_t>> batches;  // element indices, ascending
  std::vector<Bitset> vertex_trace;               // batches.size() + 1 ideals
};

// Shortest path counting one crossing per step. Executes a topological
// order of the crossing DAG with ties broken by element name, so the plan
// is reproducible; distance = |from Δ to|.
GeodesicPlan l1_geodesic(const Pip& pip, const Bitset& from, const Bitset& to);

// Shortest path counting one cube move per step: repeatedly perform every
// crossing whose prerequisites are all done. The number of batches equals
// the length of the longest arc chain in the DAG, which no walk can beat.
// Every batch is verified at run time to span a cube at its source vertex
// (each subset of the batch leads to a consistent ideal); a failure throws
// InvariantViolation and means a non-certified input slipped through.
GeodesicPlan linf_geodesic(const Pip& pip, const Bitset& from, const Bitset& to);

// Breadth-first reference distances over an explicit complex, computed
// independently of the planner: L1 walks the 1-skeleton, LInf walks the
// graph joining every pair of distinct vertices that share a cube.
class DistanceOracle {
 public:
  explicit DistanceOracle(const CubeComplex& x);
  std::size_t distance(std::size_t u, std::size_t w, Metric metric) const;
  std::vector<std::size_t> distances_from(std::size_t u, Metric metric) const;

 private:
  const std::vector<std::vector<std::size_t>>& graph(Metric metric) const {
    return metric == Metric::L1 ? skeleton_ : diagonal_;
  }
  std::vector<std::vector<std::size_t>> skeleton_;
  std::vector<std::vector<std::size_t>> diagonal_;
};

std::size_t oracle_l1(const CubeComplex& x, std::size_t u, std::size_t w);
std::size_t oracle_linf(const CubeComplex& x, std::size_t u, std::size_t w);

}  // namespace cubeplan
