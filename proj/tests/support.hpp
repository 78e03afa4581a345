#pragma once

// Brute-force oracles and generators shared by the unit tests and the
// acceptance gate. Everything here recomputes results from raw data with
// the most literal method available, independent of the library's indexed
// structures, so that library results can be checked against them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubeplan/pip.hpp"

namespace testsupport {

// Reflexive-transitive closure of the cover arcs, computed by plain DFS
// over names. Assumes names are unique and covers acyclic.
class NaiveOrder {
 public:
  explicit NaiveOrder(const cubeplan::PipData& data) {
    for (const auto& e : data.elements) adj_[e];
    for (const auto& [lo, hi] : data.covers) adj_[lo].insert(hi);
    for (const auto& e : data.elements) {
      std::set<std::string>& up = up_[e];
      std::vector<std::string> stack{e};
      while (!stack.empty()) {
        std::string u = stack.back();
        stack.pop_back();
        if (!up.insert(u).second) continue;
        for (const auto& v : adj_[u]) stack.push_back(v);
      }
    }
  }

  bool leq(const std::string& a, const std::string& b) const {
    auto it = up_.find(a);
    return it != up_.end() && it->second.count(b) > 0;
  }

 private:
  std::map<std::string, std::set<std::string>> adj_;
  std::map<std::string, std::set<std::string>> up_;
};

// Every consistent ideal, by filtering all 2^n subsets: downward closed for
// the cover-generated order and containing no inconsistent pair as given.
// (For downward-closed subsets, checking the given pairs is equivalent to
// checking their upward closure.) Intended for n <= ~20.
inline std::vector<std::set<std::string>> brute_ideals(
    const cubeplan::PipData& data) {
  std::vector<std::string> names = data.elements;
  std::sort(names.begin(), names.end());
  NaiveOrder order(data);
  std::size_t n = names.size();
  std::vector<std::set<std::string>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<std::string> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.insert(names[i]);
    bool ok = true;
    // downward closed
    for (const auto& b : subset) {
      for (const auto& a : names)
        if (order.leq(a, b) && !subset.count(a)) { ok = false; break; }
      if (!ok) break;
    }
    // conflict-free
    if (ok) {
      for (const auto& [a, b] : data.inconsistent)
        if (subset.count(a) && subset.count(b)) { ok = false; break; }
    }
    if (ok) out.push_back(std::move(subset));
  }
  return out;
}

// Random PIP description. Covers are generated on an index order, so they
// are acyclic; a conflict pair is only eligible when its two elements have
// disjoint up-sets (otherwise upward closure would demand a conflict
// between comparable elements). The result is valid but generally not
// closed.
inline cubeplan::PipData random_pip_data(std::mt19937_64& rng,
                                         std::size_t max_elements,
                                         bool with_conflicts = true) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_elements);
  std::size_t n = size_dist(rng);
  cubeplan::PipData data;
  for (std::size_t i = 0; i < n; ++i)
    data.elements.push_back(std::string(1, static_cast<char>('a' + i)));

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double p = n > 1 ? std::min(0.5, 1.6 / static_cast<double>(n)) : 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) < p)
        data.covers.push_back({data.elements[i], data.elements[j]});

  if (with_conflicts && n >= 2) {
    NaiveOrder order(data);
    auto up_disjoint = [&](const std::string& a, const std::string& b) {
      for (const auto& x : data.elements)
        if (order.leq(a, x) && order.leq(b, x)) return false;
      return true;
    };
    double q = std::min(0.4, 2.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (up_disjoint(data.elements[i], data.elements[j]) && coin(rng) < q)
          data.inconsistent.push_back({data.elements[i], data.elements[j]});
  }
  return data;
}

// Literal arm validity check: walk the word, collect every joint, and test
// self-avoidance and the tunnel bounds on the whole point set.
inline bool sim_arm_valid(int height, const std::string& word) {
  std::set<std::pair<int, int>> seen;
  int x = 0, y = 0;
  seen.insert({0, 0});
  for (char c : word) {
    if (c == 'R') ++x;
    else if (c == 'U') ++y;
    else if (c == 'D') --y;
    else return false;
    if (y < 0 || y > height || x < 0) return false;
    if (!seen.insert({x, y}).second) return false;
  }
  return true;
}

}  // namespace testsupport
