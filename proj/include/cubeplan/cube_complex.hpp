#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubeplan/bitset.hpp"
#include "cubeplan/common.hpp"
#include "cubeplan/pip.hpp"

namespace cubeplan {

struct EdgeRec {
  std::size_t u, v;   // endpoints, stored with u < v
  std::string label;  // move identity; distinct per vertex
};

// A cube of dimension >= 2, stored by one corner and the labels of the
// coordinate directions at that corner. Construction normalizes the corner
// to the smallest vertex id of the cube and sorts the labels.
struct CubeRec {
  std::size_t base;
  std::vector<std::string> labels;
};

// Cubical complex presented by its labelled 1-skeleton plus its cubes of
// dimension >= 2 (storing any generating set of cubes is fine; queries see
// the whole face closure). Construction checks:
//   * vertex names unique and non-empty,
//   * the graph is simple and connected, with at most one edge per label
//     at each vertex,
//   * every stored cube closes up: all 2^k corners exist and every induced
//     edge is present with the matching label.
// Immutable after construction.
class CubeComplex {
 public:
  CubeComplex(std::vector<std::string> vertex_names, std::vector<EdgeRec> edges,
              std::vector<CubeRec> cubes, std::optional<std::size_t> root = {});

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::size_t vertex_index(std::string_view name) const;  // throws InvalidComplex
  std::optional<std::size_t> root() const { return root_; }

  const std::vector<EdgeRec>& edges() const { return edges_; }  // sorted by (u,v)
  const std::vector<CubeRec>& cubes() const { return cubes_; }  // normalized, deduplicated

  // (neighbor, edge index) pairs, ascending by neighbor.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;

  // Global label table, sorted; edge_label_id[e] indexes into it.
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t label_id(std::string_view label) const;  // throws InvalidComplex
  std::size_t edge_label_id(std::size_t edge) const { return edge_label_[edge]; }
  std::optional<std::size_t> neighbor_by_label(std::size_t v, std::size_t label) const;

  // All 2^k corners of a stored cube, indexed by subsets of its label list
  // (bit i of the subset toggles labels[i]).
  std::vector<std::size_t> cube_corners(const CubeRec& cube) const;

  // Label-id sets (sorted) of the stored cubes incident to v. Every subset
  // of an entry spans a cube at v.
  const std::vector<std::vector<std::size_t>>& cube_label_sets_at(std::size_t v) const {
    return vertex_cube_sets_[v];
  }

  // Invokes fn(corners, label_ids) for every distinct cube of dimension
  // >= min_dim in the face closure of the stored cubes. `corners` is
  // indexed by label subsets as in cube_corners.
  template <typename F>
  void for_each_face(std::size_t min_dim, F&& fn) const;

  // V - E + sum over k>=2 of (-1)^k (number of k-cubes).
  long long euler_characteristic() const;

 private:
  void validate_and_normalize(std::vector<CubeRec> cubes);

  std::vector<std::string> names_;
  std::vector<EdgeRec> edges_;
  std::vector<CubeRec> cubes_;
  std::optional<std::size_t> root_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> edge_label_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> label_adjacency_;
  std::vector<std::vector<std::vector<std::size_t>>> vertex_cube_sets_;
};

// Edge classes under the transitive closure of "opposite sides of a common
// square". Classes are listed by ascending smallest edge index (edges are
// themselves sorted by endpoints), each class ascending inside.
std::vector<std::vector<std::size_t>> hyperplanes(const CubeComplex& x);

// --- the order-theoretic encoding, in both directions ----------------------

// Complex of a compiled PIP: one vertex per consistent ideal (the empty
// ideal is the root and vertex 0), an edge labelled e between ideals
// differing exactly by e, and a cube for every ideal J and antichain of
// pairwise-compatible elements addable at J. Vertex ids follow the
// cardinality-then-lexicographic order of the ideals, so the construction
// is deterministic. Throws GuardExceeded when the ideal count passes guard.
struct BuiltComplex {
  CubeComplex complex;
  std::vector<Bitset> vertex_ideals;  // vertex id -> ideal
};
BuiltComplex from_pip(const Pip& pip, std::uint64_t guard = kDefaultGuard);

// Result of reading the encoding back off a rooted complex.
struct Extraction {
  PipData pip_data;                      // closed and valid
  std::vector<std::string> class_names;  // hyperplane id -> element name
  std::vector<std::size_t> edge_class;   // edge index -> hyperplane id
  std::vector<Bitset> vertex_ideals;     // vertex -> crossing set I(w)
};

struct Refutation {
  enum class Kind {
    BadLink,          // some vertex link has a hollow clique
    PathDependent,    // crossing parities differ along different paths
    NonInjective,     // two vertices have equal crossing sets
    InvalidRelation,  // extracted order/conflict relations are degenerate
    Mismatch,         // rebuilt complex differs from the input
  };
  Kind kind;
  std::string witness;                      // human-readable
  std::vector<std::string> witness_items;   // vertices or labels involved
};

struct ExtractionResult {
  std::optional<Extraction> extraction;
  std::optional<Refutation> refutation;
  bool ok() const { return extraction.has_value(); }
};

// Hyperplane crossing sets I(w) from breadth-first search at the root,
// validated over every edge of the complex (crossing parity must be
// path-independent), then the order H < K iff every I(w) containing K
// contains H, and the conflict H ~ K iff no I(w) contains both. Element
// names are h0, h1, ... by hyperplane id, zero-padded so that the
// lexicographic element order agrees with the id order.
ExtractionResult extract_pip(const CubeComplex& x, std::size_t root = 0);

struct Certificate {
  Pip pip;
  std::vector<std::string> class_names;
  std::vector<std::size_t> edge_class;
  std::vector<Bitset> vertex_ideals;
};

struct Cat0Result {
  std::optional<Certificate> certificate;
  std::optional<Refutation> refutation;
  bool certified() const { return certificate.has_value(); }
};

// Certification that (x, root) is the complex of a PIP: every vertex link
// must be a flag complex, extraction must succeed, and rebuilding from the
// extracted PIP must reproduce x vertex-for-vertex, edge-for-edge and
// cube-for-cube under w -> I(w). Either a certificate (the PIP plus the
// correspondence) or a refutation with a concrete witness.
Cat0Result is_cat0(const CubeComplex& x, std::size_t root = 0,
                   std::uint64_t guard = kDefaultGuard);

// --- vertex links -----------------------------------------------------------

// The simplicial complex of directions at a vertex: one link vertex per
// incident edge label, a simplex for every label set spanned by a cube at
// the vertex. maximal_sets lists the stored-cube label sets (plus lone
// edges) as indices into `labels`.
struct LinkComplex {
  std::size_t vertex;
  std::vector<std::string> labels;  // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, sorted
  std::vector<std::vector<std::size_t>> maximal_sets;

  bool has_edge(std::size_t a, std::size_t b) const;
  bool spans_simplex(const std::vector<std::size_t>& set) const;
};

LinkComplex link(const CubeComplex& x, std::size_t v);

struct FlagCheck {
  bool flag;
  std::vector<std::string> witness;  // minimal hollow clique when !flag
};

// A link is flag when every pairwise-joined label set spans a simplex.
// On failure the witness is a smallest hollow clique (its size is always
// >= 3, since link edges are exactly the 2-element simplices).
FlagCheck is_flag(const LinkComplex& l);

// --- inline: face enumeration ----------------------------------------------

template <typename F>
void CubeComplex::for_each_face(std::size_t min_dim, F&& fn) const {
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
  for (const auto& cube : cubes_) {
    const std::size_t k = cube.labels.size();
    const auto corners = cube_corners(cube);
    std::vector<std::size_t> lids(k);
    for (std::size_t i = 0; i < k; ++i) lids[i] = label_id(cube.labels[i]);

    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << k); ++sub) {
      const std::size_t dim = static_cast<std::size_t>(__builtin_popcount(sub));
      if (dim < min_dim || dim == 0) continue;
      std::vector<std::size_t> positions, face_lids;
      for (std::size_t i = 0; i < k; ++i)
        if (sub & (std::uint32_t{1} << i)) {
          positions.push_back(i);
          face_lids.push_back(lids[i]);
        }
      const std::uint32_t comp = ((std::uint32_t{1} << k) - 1) & ~sub;
      std::uint32_t off = comp;
      while (true) {
        std::vector<std::size_t> face_corners(std::size_t{1} << dim);
        std::size_t min_corner = Bitset::npos;
        for (std::uint32_t t = 0; t < (std::uint32_t{1} << dim); ++t) {
          std::uint32_t full = off;
          for (std::size_t b = 0; b < dim; ++b)
            if (t & (std::uint32_t{1} << b)) full |= std::uint32_t{1} << positions[b];
          face_corners[t] = corners[full];
          min_corner = std::min(min_corner, corners[full]);
        }
        if (seen.insert({min_corner, face_lids}).second)
          fn(static_cast<const std::vector<std::size_t>&>(face_corners), face_lids);
        if (off == 0) break;
        off = (off - 1) & comp;
      }
    }
  }
}

}  // namespace cubeplan
