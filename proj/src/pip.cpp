#include "cubeplan/pip.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

namespace cubeplan {

namespace {

struct NameIndex {
  std::vector<std::string> sorted;  // unique, ascending
  std::unordered_map<std::string, std::size_t> at;

  std::optional<std::size_t> find(const std::string& s) const {
    auto it = at.find(s);
    if (it == at.end()) return std::nullopt;
    return it->second;
  }
};

NameIndex index_names(const std::vector<std::string>& elements,
                      std::vector<Violation>* problems) {
  NameIndex ix;
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (e.empty()) {
      if (problems)
        problems->push_back({Violation::Kind::EmptyName, e, "", ""});
      continue;
    }
    if (!seen.insert(e).second) {
      if (problems)
        problems->push_back({Violation::Kind::DuplicateElement, e, "", ""});
    }
  }
  ix.sorted.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < ix.sorted.size(); ++i) ix.at[ix.sorted[i]] = i;
  return ix;
}

// Cover arcs as adjacency over name indices; unknown endpoints reported and
// skipped.
std::vector<std::vector<std::size_t>> cover_adjacency(
    const PipData& data, const NameIndex& ix, std::vector<Violation>* problems) {
  std::vector<std::vector<std::size_t>> adj(ix.sorted.size());
  for (const auto& [lo, hi] : data.covers) {
    auto a = ix.find(lo), b = ix.find(hi);
    if (!a || !b) {
      if (problems)
        problems->push_back(
            {Violation::Kind::UnknownElement, !a ? lo : hi, "", "in covers"});
      continue;
    }
    adj[*a].push_back(*b);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return adj;
}

// Returns a back edge (u, v) of some cycle, or nothing if acyclic.
std::optional<std::pair<std::size_t, std::size_t>> find_cycle(
    const std::vector<std::vector<std::size_t>>& adj) {
  enum { White, Grey, Black };
  std::vector<int> color(adj.size(), White);
  // Iterative DFS: frame = (node, next child position).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (color[s] != White) continue;
    stack.push_back({s, 0});
    color[s] = Grey;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      if (k < adj[u].size()) {
        std::size_t v = adj[u][k++];
        if (color[v] == Grey) return std::make_pair(u, v);
        if (color[v] == White) {
          color[v] = Grey;
          stack.push_back({v, 0});
        }
      } else {
        color[u] = Black;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

// up[i] = {j : i <= j}, via reverse topological order. Requires acyclic adj.
std::vector<Bitset> up_sets(const std::vector<std::vector<std::size_t>>& adj) {
  std::size_t n = adj.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& outs : adj)
    for (auto v : outs) ++indeg[v];
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) order.push_back(i);
  for (std::size_t q = 0; q < order.size(); ++q)
    for (auto v : adj[order[q]])
      if (--indeg[v] == 0) order.push_back(v);

  std::vector<Bitset> up(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t u = *it;
    up[u].set(u);
    for (auto v : adj[u]) up[u] |= up[v];
  }
  return up;
}

std::string kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::EmptyName: return "empty element name";
    case Violation::Kind::DuplicateElement: return "duplicate element";
    case Violation::Kind::UnknownElement: return "unknown element";
    case Violation::Kind::CoverCycle: return "cover cycle";
    case Violation::Kind::ReflexiveConflict: return "reflexive conflict";
    case Violation::Kind::NotUpwardClosed: return "conflict not upward closed";
    case Violation::Kind::ComparableConflict: return "conflict between comparable elements";
  }
  return "violation";
}

}  // namespace

std::string Violation::message() const {
  std::string m = kind_name(kind);
  if (!a.empty() || !b.empty()) {
    m += ": (" + a;
    if (!b.empty()) m += ", " + b;
    m += ")";
  }
  if (!detail.empty()) m += " [" + detail + "]";
  return m;
}

std::string ValidationReport::summary() const {
  if (ok() && warnings.empty()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.message();
  }
  for (const auto& w : warnings) {
    if (!s.empty()) s += "; ";
    s += "warning: " + w.message();
  }
  return s;
}

ValidationReport validate(const PipData& data, const ValidateOptions& options) {
  ValidationReport report;
  NameIndex ix = index_names(data.elements, &report.violations);
  auto adj = cover_adjacency(data, ix, &report.violations);

  bool acyclic = true;
  if (auto back = find_cycle(adj)) {
    acyclic = false;
    report.violations.push_back({Violation::Kind::CoverCycle,
                                 ix.sorted[back->first], ix.sorted[back->second],
                                 ""});
  }

  // Conflict pairs over valid names; reflexive input is always an error.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pair_set;
  for (const auto& [pa, pb] : data.inconsistent) {
    auto a = ix.find(pa), b = ix.find(pb);
    if (!a || !b) {
      report.violations.push_back({Violation::Kind::UnknownElement,
                                   !a ? pa : pb, "", "in inconsistent pairs"});
      continue;
    }
    if (*a == *b) {
      report.violations.push_back({Violation::Kind::ReflexiveConflict, pa, pb, ""});
      continue;
    }
    auto p = std::minmax(*a, *b);
    if (pair_set.insert({p.first, p.second}).second)
      pairs.push_back({p.first, p.second});
  }

  if (!acyclic) return report;  // order-dependent checks need the poset

  auto up = up_sets(adj);
  auto comparable = [&](std::size_t a, std::size_t b) {
    return up[a].test(b) || up[b].test(a);
  };

  std::set<std::pair<std::size_t, std::size_t>> reported_comparable;
  std::set<std::pair<std::size_t, std::size_t>> reported_missing;
  auto note_comparable = [&](std::size_t a, std::size_t b, std::string detail) {
    auto p = std::minmax(a, b);
    if (!reported_comparable.insert({p.first, p.second}).second) return;
    Violation v{Violation::Kind::ComparableConflict, ix.sorted[p.first],
                ix.sorted[p.second], std::move(detail)};
    if (options.allow_comparable_conflicts)
      report.warnings.push_back(std::move(v));
    else
      report.violations.push_back(std::move(v));
  };

  for (auto [p, q] : pairs) {
    if (comparable(p, q)) note_comparable(p, q, "");
    // Every pair implied by upward closure must be present and sane.
    std::vector<std::size_t> ups_p = up[p].indices();
    std::vector<std::size_t> ups_q = up[q].indices();
    for (auto p2 : ups_p) {
      for (auto q2 : ups_q) {
        if (p2 == q2) {
          note_comparable(p, q, "shared upper bound " + ix.sorted[p2]);
          continue;
        }
        auto key = std::minmax(p2, q2);
        if (pair_set.count({key.first, key.second})) continue;
        if (comparable(p2, q2)) {
          note_comparable(p2, q2,
                          "implied by (" + ix.sorted[p] + ", " + ix.sorted[q] + ")");
        } else if (reported_missing.insert({key.first, key.second}).second) {
          report.violations.push_back(
              {Violation::Kind::NotUpwardClosed, ix.sorted[key.first],
               ix.sorted[key.second],
               "implied by (" + ix.sorted[p] + ", " + ix.sorted[q] + ")"});
        }
      }
    }
  }
  return report;
}

PipData close(const PipData& data) {
  std::vector<Violation> problems;
  NameIndex ix = index_names(data.elements, &problems);
  auto adj = cover_adjacency(data, ix, &problems);
  if (auto back = find_cycle(adj))
    throw InvalidPip("close: covers contain a cycle through " +
                     ix.sorted[back->first] + " and " + ix.sorted[back->second]);
  if (!problems.empty()) throw InvalidPip("close: " + problems.front().message());

  auto up = up_sets(adj);
  std::set<std::pair<std::size_t, std::size_t>> closed;
  for (const auto& [pa, pb] : data.inconsistent) {
    auto a = ix.find(pa), b = ix.find(pb);
    if (!a || !b)
      throw InvalidPip("close: unknown element in inconsistent pair (" + pa +
                       ", " + pb + ")");
    if (*a == *b)
      throw InvalidPip("close: reflexive inconsistent pair (" + pa + ")");
    up[*a].for_each([&](std::size_t p2) {
      up[*b].for_each([&](std::size_t q2) {
        if (p2 == q2) return;  // comparable-conflict input; validate reports it
        auto k = std::minmax(p2, q2);
        closed.insert({k.first, k.second});
      });
    });
  }

  PipData out;
  out.elements = data.elements;
  out.covers = data.covers;
  out.inconsistent.reserve(closed.size());
  for (auto [a, b] : closed)
    out.inconsistent.push_back({ix.sorted[a], ix.sorted[b]});
  return out;
}

Pip::Pip(const PipData& data, const ValidateOptions& options) {
  ValidationReport report = validate(data, options);
  if (!report.ok()) throw InvalidPip("invalid PIP: " + report.summary());

  NameIndex ix = index_names(data.elements, nullptr);
  names_ = ix.sorted;
  n_ = names_.size();

  auto adj = cover_adjacency(data, ix, nullptr);
  up_ = up_sets(adj);
  sup_.assign(n_, Bitset(n_));
  down_.assign(n_, Bitset(n_));
  sdown_.assign(n_, Bitset(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    sup_[i] = up_[i];
    sup_[i].reset(i);
    up_[i].for_each([&](std::size_t j) { down_[j].set(i); });
  }
  for (std::size_t i = 0; i < n_; ++i) {
    sdown_[i] = down_[i];
    sdown_[i].reset(i);
  }

  inc_.assign(n_, Bitset(n_));
  for (const auto& [pa, pb] : data.inconsistent) {
    std::size_t a = *ix.find(pa), b = *ix.find(pb);
    inc_[a].set(b);
    inc_[b].set(a);
  }

  blocker_.assign(n_, Bitset(n_));
  for (std::size_t e = 0; e < n_; ++e) {
    for (std::size_t m = e + 1; m < n_; ++m)
      if (!sdown_[e].test(m)) blocker_[e].set(m);
  }
}

std::size_t Pip::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw InvalidPip("unknown element '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool Pip::has_conflicts() const {
  for (const auto& m : inc_)
    if (m.any()) return true;
  return false;
}

std::vector<NamePair> Pip::hasse_covers() const {
  std::vector<NamePair> out;
  for (std::size_t i = 0; i < n_; ++i) {
    sup_[i].for_each([&](std::size_t j) {
      Bitset between = sup_[i] & sdown_[j];
      if (between.none()) out.push_back({names_[i], names_[j]});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NamePair> Pip::minimal_inconsistent() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n_; ++i) {
    inc_[i].for_each([&](std::size_t j) {
      if (i < j) pairs.push_back({i, j});
    });
  }
  std::vector<NamePair> out;
  for (auto [a, b] : pairs) {
    bool dominated = false;
    for (auto [c, d] : pairs) {
      if (c == a && d == b) continue;
      if ((leq(c, a) && leq(d, b)) || (leq(c, b) && leq(d, a))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back({names_[a], names_[b]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PipData Pip::data() const {
  return PipData{names_, hasse_covers(), minimal_inconsistent()};
}

bool Pip::is_consistent_ideal(const Bitset& members) const {
  if (members.universe() != n_)
    throw InvalidIdeal("ideal mask universe does not match PIP size");
  bool ok = true;
  members.for_each([&](std::size_t i) {
    if (!ok) return;
    if (!sdown_[i].subset_of(members) || inc_[i].intersects(members)) ok = false;
  });
  return ok;
}

Bitset Pip::maximal_of(const Bitset& ideal) const {
  Bitset out(n_);
  ideal.for_each([&](std::size_t i) {
    if (!sup_[i].intersects(ideal)) out.set(i);
  });
  return out;
}

// Each ideal is reached along exactly one path: elements are added in the
// unique order that peels, from the full ideal, the largest-index maximal
// element last. Adding e to I is canonical iff every maximal element of I
// is either strictly below e or has a smaller index, i.e. no blocker of e
// is maximal in I.
std::uint64_t Pip::enumerate_impl(std::uint64_t guard,
                                  std::vector<Bitset>* out) const {
  Bitset ideal(n_);
  std::uint64_t count = 1;
  if (count > guard) throw GuardExceeded(guard);
  if (out) out->push_back(ideal);

  // Chain of (element added, maximal-element mask before the addition).
  std::vector<std::pair<std::size_t, Bitset>> spine;
  Bitset maxima(n_);

  auto step = [&](auto&& self, std::size_t depth) -> void {
    for (std::size_t e = 0; e < n_; ++e) {
      if (ideal.test(e)) continue;
      if (!sdown_[e].subset_of(ideal)) continue;
      if (inc_[e].intersects(ideal)) continue;
      if (blocker_[e].intersects(maxima)) continue;
      spine.push_back({e, maxima});
      ideal.set(e);
      maxima = maxima.minus(sdown_[e]);
      maxima.set(e);
      if (++count > guard) throw GuardExceeded(guard);
      if (out) out->push_back(ideal);
      self(self, depth + 1);
      ideal.reset(e);
      maxima = spine.back().second;
      spine.pop_back();
    }
  };
  step(step, 0);
  return count;
}

std::vector<Bitset> Pip::consistent_ideals(std::uint64_t guard) const {
  std::vector<Bitset> out;
  enumerate_impl(guard, &out);
  return out;
}

std::uint64_t Pip::count_consistent_ideals(std::uint64_t guard) const {
  return enumerate_impl(guard, nullptr);
}

AvailableMoves Pip::available_moves(const Bitset& ideal) const {
  if (!is_consistent_ideal(ideal))
    throw InvalidIdeal("available_moves: not a consistent ideal");
  AvailableMoves mv{maximal_of(ideal), Bitset(n_)};
  for (std::size_t e = 0; e < n_; ++e) {
    if (ideal.test(e)) continue;
    if (!sdown_[e].subset_of(ideal)) continue;
    if (inc_[e].intersects(ideal)) continue;
    mv.addable.set(e);
  }
  return mv;
}

Bitset Pip::mask_of(const std::vector<std::string>& names) const {
  Bitset m(n_);
  for (const auto& s : names) m.set(index_of(s));
  return m;
}

std::vector<std::string> Pip::names_of(const Bitset& mask) const {
  std::vector<std::string> out;
  mask.for_each([&](std::size_t i) { out.push_back(names_[i]); });
  return out;
}

}  // namespace cubeplan
