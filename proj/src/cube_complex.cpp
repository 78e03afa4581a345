#include "cubeplan/cube_complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace cubeplan {

namespace {

std::string brace_list(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ", ";
    s += items[i];
  }
  return s + "}";
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Maximal cliques of a small graph given as adjacency bitsets, reported in
// a deterministic order (vertices taken ascending, no pivoting).
void maximal_cliques(const std::vector<Bitset>& adj,
                     const std::function<void(const Bitset&)>& report) {
  const std::size_t n = adj.size();
  Bitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  std::function<void(Bitset, Bitset, Bitset)> bk = [&](Bitset r, Bitset p, Bitset x) {
    if (p.none() && x.none()) {
      report(r);
      return;
    }
    std::vector<std::size_t> candidates = p.indices();
    for (std::size_t v : candidates) {
      Bitset r2 = r;
      r2.set(v);
      bk(r2, p & adj[v], x & adj[v]);
      p.reset(v);
      x.set(v);
    }
  };
  bk(Bitset(n), all, Bitset(n));
}

}  // namespace

CubeComplex::CubeComplex(std::vector<std::string> vertex_names,
                         std::vector<EdgeRec> edges, std::vector<CubeRec> cubes,
                         std::optional<std::size_t> root)
    : names_(std::move(vertex_names)), edges_(std::move(edges)), root_(root) {
  const std::size_t n = names_.size();
  if (n == 0) throw InvalidComplex("complex needs at least one vertex");
  {
    std::set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw InvalidComplex("empty vertex name");
      if (!seen.insert(name).second)
        throw InvalidComplex("duplicate vertex name '" + name + "'");
    }
  }
  if (root_ && *root_ >= n) throw InvalidComplex("root vertex out of range");

  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) throw InvalidComplex("edge endpoint out of range");
    if (e.u == e.v)
      throw InvalidComplex("loop edge at vertex '" + names_[e.u] + "'");
    if (e.label.empty()) throw InvalidComplex("empty edge label");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const EdgeRec& a, const EdgeRec& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw InvalidComplex("parallel edges between '" + names_[edges_[i].u] +
                           "' and '" + names_[edges_[i].v] + "'");

  {
    std::set<std::string> distinct;
    for (const auto& e : edges_) distinct.insert(e.label);
    labels_.assign(distinct.begin(), distinct.end());
  }
  edge_label_.resize(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    edge_label_[i] = label_id(edges_[i].label);

  adjacency_.assign(n, {});
  label_adjacency_.assign(n, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].u].push_back({edges_[i].v, i});
    adjacency_[edges_[i].v].push_back({edges_[i].u, i});
    label_adjacency_[edges_[i].u].push_back({edge_label_[i], edges_[i].v});
    label_adjacency_[edges_[i].v].push_back({edge_label_[i], edges_[i].u});
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
    std::sort(label_adjacency_[v].begin(), label_adjacency_[v].end());
    for (std::size_t i = 1; i < label_adjacency_[v].size(); ++i)
      if (label_adjacency_[v][i - 1].first == label_adjacency_[v][i].first)
        throw InvalidComplex("vertex '" + names_[v] +
                             "' has two edges labelled '" +
                             labels_[label_adjacency_[v][i].first] + "'");
  }

  {  // connectivity
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto [w, e] : adjacency_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
    }
    if (reached != n) throw InvalidComplex("complex is not connected");
  }

  validate_and_normalize(std::move(cubes));
}

void CubeComplex::validate_and_normalize(std::vector<CubeRec> cubes) {
  std::set<std::pair<std::size_t, std::vector<std::string>>> canonical;
  for (auto& cube : cubes) {
    if (cube.base >= names_.size())
      throw InvalidComplex("cube base out of range");
    if (cube.labels.size() < 2)
      throw InvalidComplex("stored cubes must have dimension >= 2");
    if (cube.labels.size() > 20) throw InvalidComplex("cube dimension too large");
    std::sort(cube.labels.begin(), cube.labels.end());
    for (std::size_t i = 1; i < cube.labels.size(); ++i)
      if (cube.labels[i - 1] == cube.labels[i])
        throw InvalidComplex("cube repeats label '" + cube.labels[i] + "'");
    auto corners = cube_corners(cube);  // throws when the cube does not close
    std::size_t base = *std::min_element(corners.begin(), corners.end());
    std::vector<std::size_t> dedupe = corners;
    std::sort(dedupe.begin(), dedupe.end());
    if (std::adjacent_find(dedupe.begin(), dedupe.end()) != dedupe.end())
      throw InvalidComplex("cube at '" + names_[cube.base] +
                           "' revisits a corner");
    canonical.insert({base, cube.labels});
  }
  cubes_.clear();
  for (const auto& [base, labels] : canonical) cubes_.push_back({base, labels});

  vertex_cube_sets_.assign(names_.size(), {});
  std::vector<std::set<std::vector<std::size_t>>> sets(names_.size());
  for (const auto& cube : cubes_) {
    std::vector<std::size_t> lids(cube.labels.size());
    for (std::size_t i = 0; i < lids.size(); ++i) lids[i] = label_id(cube.labels[i]);
    for (std::size_t c : cube_corners(cube)) sets[c].insert(lids);
  }
  for (std::size_t v = 0; v < names_.size(); ++v)
    vertex_cube_sets_[v].assign(sets[v].begin(), sets[v].end());
}

std::size_t CubeComplex::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw InvalidComplex("unknown vertex '" + std::string(name) + "'");
}

std::optional<std::size_t> CubeComplex::edge_between(std::size_t u,
                                                     std::size_t v) const {
  if (u > v) std::swap(u, v);
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), std::make_pair(v, std::size_t{0}));
  if (it != adj.end() && it->first == v) return it->second;
  return std::nullopt;
}

std::size_t CubeComplex::label_id(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw InvalidComplex("unknown edge label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> CubeComplex::neighbor_by_label(std::size_t v,
                                                          std::size_t label) const {
  const auto& adj = label_adjacency_[v];
  auto it = std::lower_bound(adj.begin(), adj.end(),
                             std::make_pair(label, std::size_t{0}));
  if (it != adj.end() && it->first == label) return it->second;
  return std::nullopt;
}

std::vector<std::size_t> CubeComplex::cube_corners(const CubeRec& cube) const {
  const std::size_t k = cube.labels.size();
  std::vector<std::size_t> lids(k);
  for (std::size_t i = 0; i < k; ++i) lids[i] = label_id(cube.labels[i]);
  std::vector<std::size_t> corners(std::size_t{1} << k);
  corners[0] = cube.base;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctz(mask));
    const std::uint32_t prev = mask ^ (std::uint32_t{1} << low);
    auto nbr = neighbor_by_label(corners[prev], lids[low]);
    if (!nbr)
      throw InvalidComplex("cube at '" + names_[cube.base] +
                           "' does not close: missing '" + cube.labels[low] +
                           "' edge at '" + names_[corners[prev]] + "'");
    corners[mask] = *nbr;
  }
  // Every induced edge must be present with the matching label.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask)
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::uint32_t{1} << j)) continue;
      auto nbr = neighbor_by_label(corners[mask], lids[j]);
      if (!nbr || *nbr != corners[mask | (std::uint32_t{1} << j)])
        throw InvalidComplex("cube at '" + names_[cube.base] +
                             "' has a face without a matching '" +
                             cube.labels[j] + "' edge");
    }
  return corners;
}

long long CubeComplex::euler_characteristic() const {
  long long chi = static_cast<long long>(vertex_count()) -
                  static_cast<long long>(edges_.size());
  for_each_face(2, [&](const std::vector<std::size_t>&,
                       const std::vector<std::size_t>& lids) {
    chi += (lids.size() % 2 == 0) ? 1 : -1;
  });
  return chi;
}

std::vector<std::vector<std::size_t>> hyperplanes(const CubeComplex& x) {
  Dsu dsu(x.edges().size());
  x.for_each_face(2, [&](const std::vector<std::size_t>& corners,
                         const std::vector<std::size_t>& lids) {
    if (lids.size() != 2) return;
    // corners: 0 = base, 1 = first label, 2 = second label, 3 = both
    auto e = [&](std::size_t a, std::size_t b) {
      return *x.edge_between(corners[a], corners[b]);
    };
    dsu.unite(e(0, 1), e(2, 3));
    dsu.unite(e(0, 2), e(1, 3));
  });
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < x.edges().size(); ++e)
    groups[dsu.find(e)].push_back(e);
  std::vector<std::vector<std::size_t>> classes;
  classes.reserve(groups.size());
  for (auto& [rep, members] : groups) classes.push_back(std::move(members));
  return classes;  // keyed by smallest member, so already ordered
}

// --- links ------------------------------------------------------------------

bool LinkComplex::has_edge(std::size_t a, std::size_t b) const {
  auto p = std::minmax(a, b);
  return std::binary_search(edges.begin(), edges.end(),
                            std::make_pair(p.first, p.second));
}

bool LinkComplex::spans_simplex(const std::vector<std::size_t>& set) const {
  if (set.size() <= 1) return true;
  std::vector<std::size_t> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& big : maximal_sets)
    if (std::includes(big.begin(), big.end(), sorted.begin(), sorted.end()))
      return true;
  return false;
}

LinkComplex link(const CubeComplex& x, std::size_t v) {
  if (v >= x.vertex_count()) throw InvalidComplex("link vertex out of range");
  LinkComplex l;
  l.vertex = v;
  std::vector<std::size_t> lids;
  for (auto [nbr, e] : x.neighbors(v)) lids.push_back(x.edge_label_id(e));
  std::sort(lids.begin(), lids.end());
  for (std::size_t lid : lids) l.labels.push_back(x.labels()[lid]);

  auto local = [&](std::size_t lid) {
    return static_cast<std::size_t>(
        std::lower_bound(lids.begin(), lids.end(), lid) - lids.begin());
  };

  std::set<std::vector<std::size_t>> sets;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& cube_set : x.cube_label_sets_at(v)) {
    std::vector<std::size_t> local_set;
    for (std::size_t lid : cube_set) local_set.push_back(local(lid));
    for (std::size_t i = 0; i < local_set.size(); ++i)
      for (std::size_t j = i + 1; j < local_set.size(); ++j)
        edges.insert(std::minmax(local_set[i], local_set[j]));
    sets.insert(std::move(local_set));
  }
  // lone directions not on any stored cube
  Bitset covered(lids.size());
  for (const auto& s : sets)
    for (std::size_t i : s) covered.set(i);
  for (std::size_t i = 0; i < lids.size(); ++i)
    if (!covered.test(i)) sets.insert({i});

  l.edges.assign(edges.begin(), edges.end());
  l.maximal_sets.assign(sets.begin(), sets.end());
  return l;
}

FlagCheck is_flag(const LinkComplex& l) {
  const std::size_t n = l.labels.size();
  std::vector<Bitset> adj(n, Bitset(n));
  for (auto [a, b] : l.edges) {
    adj[a].set(b);
    adj[b].set(a);
  }

  FlagCheck result{true, {}};
  maximal_cliques(adj, [&](const Bitset& clique) {
    if (!result.flag) return;
    std::vector<std::size_t> members = clique.indices();
    if (l.spans_simplex(members)) return;
    // Minimal hollow subset; all pairs are joined, so start at triples.
    for (std::size_t size = 3; size <= members.size(); ++size) {
      std::vector<std::size_t> pick(size);
      std::function<bool(std::size_t, std::size_t)> choose =
          [&](std::size_t from, std::size_t depth) -> bool {
        if (depth == size) {
          std::vector<std::size_t> subset(pick.begin(), pick.end());
          if (!l.spans_simplex(subset)) {
            for (std::size_t i : subset) result.witness.push_back(l.labels[i]);
            return true;
          }
          return false;
        }
        for (std::size_t i = from; i < members.size(); ++i) {
          pick[depth] = members[i];
          if (choose(i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (choose(0, 0)) break;
    }
    result.flag = false;
  });
  return result;
}

// --- complex of a PIP -------------------------------------------------------

BuiltComplex from_pip(const Pip& pip, std::uint64_t guard) {
  std::vector<Bitset> ideals = pip.consistent_ideals(guard);
  std::sort(ideals.begin(), ideals.end(), shortlex_less);

  std::unordered_map<Bitset, std::size_t, BitsetHash> id_of;
  id_of.reserve(ideals.size() * 2);
  std::vector<std::string> names(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    id_of[ideals[i]] = i;
    names[i] = brace_list(pip.names_of(ideals[i]));
  }

  std::vector<EdgeRec> edges;
  std::vector<CubeRec> cubes;
  const std::size_t n = pip.size();
  for (std::size_t u = 0; u < ideals.size(); ++u) {
    AvailableMoves mv = pip.available_moves(ideals[u]);
    std::vector<std::size_t> addable = mv.addable.indices();
    for (std::size_t e : addable) {
      Bitset target = ideals[u];
      target.set(e);
      edges.push_back({u, id_of.at(target), pip.elements()[e]});
    }

    // Cubes based at this ideal: maximal sets of pairwise-compatible
    // addable elements, kept only when no maximal element of the ideal
    // could be traded into the set (otherwise the same cube appears with
    // a smaller base and this one is a face of it).
    const std::size_t k = addable.size();
    if (k < 2) continue;
    std::vector<Bitset> compat(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (!pip.inconsistent(addable[i], addable[j])) {
          compat[i].set(j);
          compat[j].set(i);
        }
    Bitset maxima = pip.maximal_of(ideals[u]);
    maximal_cliques(compat, [&](const Bitset& clique) {
      if (clique.count() < 2) return;
      Bitset clique_elements(n);
      clique.for_each([&](std::size_t i) { clique_elements.set(addable[i]); });
      bool base_minimal = true;
      maxima.for_each([&](std::size_t r) {
        if (!pip.strict_up_set(r).intersects(clique_elements)) base_minimal = false;
      });
      if (!base_minimal) return;
      CubeRec cube{u, pip.names_of(clique_elements)};
      cubes.push_back(std::move(cube));
    });
  }

  CubeComplex complex(std::move(names), std::move(edges), std::move(cubes),
                      std::size_t{0});
  return {std::move(complex), std::move(ideals)};
}

// --- extraction -------------------------------------------------------------

ExtractionResult extract_pip(const CubeComplex& x, std::size_t root) {
  if (root >= x.vertex_count()) throw InvalidComplex("root vertex out of range");
  const std::size_t nv = x.vertex_count();

  auto classes = hyperplanes(x);
  const std::size_t nc = classes.size();
  std::vector<std::size_t> edge_class(x.edges().size());
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t e : classes[c]) edge_class[e] = c;

  // Crossing sets along a breadth-first tree.
  std::vector<Bitset> crossing(nv);
  std::vector<char> seen(nv, 0);
  std::deque<std::size_t> queue{root};
  crossing[root] = Bitset(nc);
  seen[root] = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (auto [w, e] : x.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      crossing[w] = crossing[u];
      crossing[w].flip(edge_class[e]);
      queue.push_back(w);
    }
  }

  // Parity must agree along every edge, not just tree edges.
  for (std::size_t e = 0; e < x.edges().size(); ++e) {
    const auto& edge = x.edges()[e];
    Bitset diff = crossing[edge.u] ^ crossing[edge.v];
    if (diff.count() != 1 || !diff.test(edge_class[e])) {
      return {std::nullopt,
              Refutation{Refutation::Kind::PathDependent,
                         "crossing parity is path-dependent along the edge (" +
                             x.vertex_names()[edge.u] + ", " +
                             x.vertex_names()[edge.v] + ")",
                         {x.vertex_names()[edge.u], x.vertex_names()[edge.v]}}};
    }
  }

  {  // distinct vertices must have distinct crossing sets
    std::unordered_map<Bitset, std::size_t, BitsetHash> first;
    for (std::size_t v = 0; v < nv; ++v) {
      auto [it, inserted] = first.insert({crossing[v], v});
      if (!inserted)
        return {std::nullopt,
                Refutation{Refutation::Kind::NonInjective,
                           "vertices '" + x.vertex_names()[it->second] +
                               "' and '" + x.vertex_names()[v] +
                               "' have the same crossing set",
                           {x.vertex_names()[it->second], x.vertex_names()[v]}}};
    }
  }

  // occ[c] = vertices whose crossing set contains c; the order and the
  // conflict relation both fall out of containment of these sets.
  std::vector<Bitset> occ(nc, Bitset(nv));
  for (std::size_t v = 0; v < nv; ++v)
    crossing[v].for_each([&](std::size_t c) { occ[c].set(v); });

  std::size_t width = std::to_string(nc == 0 ? 0 : nc - 1).size();
  std::vector<std::string> class_names(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    std::string digits = std::to_string(c);
    class_names[c] = "h" + std::string(width - digits.size(), '0') + digits;
  }

  std::vector<Bitset> lessrel(nc, Bitset(nc));
  for (std::size_t h = 0; h < nc; ++h)
    for (std::size_t k = 0; k < nc; ++k) {
      if (h == k) continue;
      if (!occ[k].subset_of(occ[h])) continue;
      if (occ[k] == occ[h])
        return {std::nullopt,
                Refutation{Refutation::Kind::InvalidRelation,
                           "hyperplanes " + class_names[h] + " and " +
                               class_names[k] +
                               " lie in exactly the same crossing sets",
                           {class_names[h], class_names[k]}}};
      lessrel[h].set(k);  // h < k
    }

  PipData data;
  data.elements = class_names;
  for (std::size_t h = 0; h < nc; ++h)
    lessrel[h].for_each([&](std::size_t k) {
      // cover when nothing lies strictly between
      bool covered = true;
      lessrel[h].for_each([&](std::size_t m) {
        if (m != k && lessrel[m].test(k)) covered = false;
      });
      if (covered) data.covers.push_back({class_names[h], class_names[k]});
    });
  for (std::size_t h = 0; h < nc; ++h)
    for (std::size_t k = h + 1; k < nc; ++k)
      if (!occ[h].intersects(occ[k]))
        data.inconsistent.push_back({class_names[h], class_names[k]});

  Extraction out{std::move(data), std::move(class_names), std::move(edge_class),
                 std::move(crossing)};
  return {std::move(out), std::nullopt};
}

// --- certification ----------------------------------------------------------

Cat0Result is_cat0(const CubeComplex& x, std::size_t root, std::uint64_t guard) {
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    FlagCheck fc = is_flag(link(x, v));
    if (!fc.flag)
      return {std::nullopt,
              Refutation{Refutation::Kind::BadLink,
                         "link of vertex '" + x.vertex_names()[v] +
                             "' contains the hollow clique " +
                             brace_list(fc.witness),
                         fc.witness}};
  }

  ExtractionResult er = extract_pip(x, root);
  if (!er.ok()) return {std::nullopt, er.refutation};
  Extraction& ex = *er.extraction;

  std::optional<Pip> pip;
  try {
    pip.emplace(ex.pip_data);
  } catch (const InvalidPip& err) {
    return {std::nullopt,
            Refutation{Refutation::Kind::InvalidRelation,
                       std::string("extracted relations are not a valid "
                                   "encoding: ") + err.what(),
                       {}}};
  }

  const std::size_t nv = x.vertex_count();
  try {
    std::uint64_t ideals = pip->count_consistent_ideals(nv);
    if (ideals != nv)
      return {std::nullopt,
              Refutation{Refutation::Kind::Mismatch,
                         "the encoding has " + std::to_string(ideals) +
                             " consistent ideals for " + std::to_string(nv) +
                             " vertices",
                         {}}};
  } catch (const GuardExceeded&) {
    return {std::nullopt,
            Refutation{Refutation::Kind::Mismatch,
                       "the encoding has more consistent ideals than the "
                       "complex has vertices",
                       {}}};
  }

  BuiltComplex rebuilt = from_pip(*pip, guard);
  std::unordered_map<Bitset, std::size_t, BitsetHash> rebuilt_id;
  for (std::size_t i = 0; i < rebuilt.vertex_ideals.size(); ++i)
    rebuilt_id[rebuilt.vertex_ideals[i]] = i;

  std::vector<std::size_t> phi(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto it = rebuilt_id.find(ex.vertex_ideals[v]);
    if (it == rebuilt_id.end())
      return {std::nullopt,
              Refutation{Refutation::Kind::Mismatch,
                         "crossing set of vertex '" + x.vertex_names()[v] +
                             "' is not an ideal of the rebuilt complex",
                         {x.vertex_names()[v]}}};
    phi[v] = it->second;
  }

  if (x.edges().size() != rebuilt.complex.edges().size())
    return {std::nullopt,
            Refutation{Refutation::Kind::Mismatch,
                       "edge counts differ: " + std::to_string(x.edges().size()) +
                           " in the complex, " +
                           std::to_string(rebuilt.complex.edges().size()) +
                           " rebuilt",
                       {}}};

  using FaceKey = std::pair<std::size_t, std::vector<std::size_t>>;
  std::set<FaceKey> faces_x, faces_rebuilt;
  std::optional<Refutation> bad;
  x.for_each_face(2, [&](const std::vector<std::size_t>& corners,
                         const std::vector<std::size_t>& lids) {
    if (bad) return;
    const std::size_t dim = lids.size();
    std::vector<std::size_t> cls(dim);
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t e = *x.edge_between(corners[0], corners[std::size_t{1} << b]);
      cls[b] = ex.edge_class[e];
    }
    std::sort(cls.begin(), cls.end());
    if (std::adjacent_find(cls.begin(), cls.end()) != cls.end()) {
      bad = Refutation{Refutation::Kind::Mismatch,
                       "a cube crosses the same hyperplane twice", {}};
      return;
    }
    std::size_t min_corner = Bitset::npos;
    for (std::size_t c : corners) min_corner = std::min(min_corner, phi[c]);
    faces_x.insert({min_corner, std::move(cls)});
  });
  if (bad) return {std::nullopt, bad};

  rebuilt.complex.for_each_face(2, [&](const std::vector<std::size_t>& corners,
                                       const std::vector<std::size_t>& lids) {
    std::size_t min_corner = *std::min_element(corners.begin(), corners.end());
    faces_rebuilt.insert({min_corner, lids});  // label id == element index
  });

  if (faces_x != faces_rebuilt)
    return {std::nullopt,
            Refutation{Refutation::Kind::Mismatch,
                       "cube structure differs between the complex and its "
                       "rebuilt encoding",
                       {}}};

  return {Certificate{std::move(*pip), std::move(ex.class_names),
                      std::move(ex.edge_class), std::move(ex.vertex_ideals)},
          std::nullopt};
}

}  // namespace cubeplan
