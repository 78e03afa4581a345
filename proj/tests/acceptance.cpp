// Acceptance gate: every release-blocking property of the planner, one
// verdict line each, checked end to end against brute-force references.
// Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubeplan/arm.hpp"
#include "cubeplan/io.hpp"
#include "support.hpp"

namespace {

using namespace cubeplan;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// First failure wins; the criterion line carries its reason.
struct Check {
  bool ok = true;
  std::string why;
  void expect(bool condition, const std::string& reason) {
    if (!condition && ok) {
      ok = false;
      why = reason;
    }
  }
};

struct Verdict {
  bool pass = false;
  std::string text;
};

std::string format(const char* fmt, ...) {
  char buffer[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buffer, sizeof buffer, fmt, args);
  va_end(args);
  return buffer;
}

std::vector<std::string> words_of_length(std::size_t n) {
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    next.reserve(words.size() * 3);
    for (const auto& w : words)
      for (char c : {'D', 'R', 'U'}) next.push_back(w + c);
    words = std::move(next);
  }
  return words;
}

// 1. Height-1 state counts: brute anchors at n = 1, 2, Fibonacci recurrence
//    up to n = 20, all inside the time budget.
Verdict criterion1() {
  auto start = Clock::now();
  Check c;
  std::vector<std::uint64_t> counts{0};
  for (std::size_t n = 1; n <= 20; ++n)
    counts.push_back(count_states({1, n}, 100000));
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    std::uint64_t brute = 0;
    for (const auto& word : words_of_length(n))
      brute += testsupport::sim_arm_valid(1, word) ? 1 : 0;
    c.expect(counts[n] == brute,
             format("c(%zu) = %llu but exhaustive filtering finds %llu", n,
                    static_cast<unsigned long long>(counts[n]),
                    static_cast<unsigned long long>(brute)));
  }
  for (std::size_t n = 3; n <= 20; ++n)
    c.expect(counts[n] == counts[n - 1] + counts[n - 2],
             format("recurrence fails at n=%zu", n));
  double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0, format("needed %.1fs, budget is 10s", elapsed));
  if (!c.ok) return {false, c.why};
  return {true, format("height-1 counts match brute force at n=1,2 and obey "
                       "c(n)=c(n-1)+c(n-2) up to c(20)=%llu (%.1fs)",
                       static_cast<unsigned long long>(counts[20]), elapsed)};
}

// 2. Every arm state space with at most 2000 states is certified CAT(0),
//    with flag links and Euler characteristic 1, within the time budget.
//    Tunnels taller than the arm duplicate the square case, so sweeping
//    m <= n covers all heights; the duplication itself is spot-checked.
Verdict criterion2() {
  auto start = Clock::now();
  Check c;
  std::size_t certified = 0;
  for (std::size_t n = 1; n <= 15; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      try {
        count_states({m, n}, 2000);
      } catch (const GuardExceeded&) {
        continue;
      }
      ArmPip arm = arm_pip({m, n});  // throws if certification fails
      c.expect(arm.complex.euler_characteristic() == 1,
               format("R_{%zu,%zu} has Euler characteristic != 1", m, n));
      ++certified;
    }
  }
  for (std::size_t n = 1; n <= 4; ++n)
    c.expect(enumerate_states({n + 3, n}) == enumerate_states({n, n}),
             format("R_{%zu,%zu} differs from R_{%zu,%zu}", n + 3, n, n, n));
  c.expect(certified >= 20, "sweep covered suspiciously few systems");
  double elapsed = seconds_since(start);
  c.expect(elapsed < 60.0, format("needed %.1fs, budget is 60s", elapsed));
  if (!c.ok) return {false, c.why};
  return {true,
          format("certified %zu arm complexes with <=2000 states (m<=n<=15; "
                 "taller tunnels repeat m=n), flag links, Euler 1 (%.1fs)",
                 certified, elapsed)};
}

// 3. Height-1 encodings are plain posets: no inconsistent pairs, and their
//    ideals count the states exactly.
Verdict criterion3() {
  Check c;
  std::string sizes;
  for (std::size_t n = 2; n <= 12; ++n) {
    ArmPip arm = arm_pip({1, n});
    c.expect(arm.pip.minimal_inconsistent().empty(),
             format("height-1, n=%zu: conflicts present", n));
    c.expect(arm.pip.count_consistent_ideals() == arm.states.size(),
             format("height-1, n=%zu: ideal count != state count", n));
    sizes += (n > 2 ? "," : "") + std::to_string(arm.pip.size());
  }
  if (!c.ok) return {false, c.why};
  return {true, "height-1 encodings for n=2..12 are conflict-free with "
                "ideals = states (element counts " + sizes + ")"};
}

// 4/5. Planned distances equal breadth-first search on the appropriate
//      graph for every vertex pair of two reference systems; cost distance
//      also equals the symmetric-difference size.
Verdict oracle_criterion(Metric metric) {
  Check c;
  std::size_t pairs = 0;
  for (ArmSpec spec : {ArmSpec{2, 4}, ArmSpec{1, 10}}) {
    ArmPip arm = arm_pip(spec);
    DistanceOracle oracle(arm.complex);
    for (std::size_t u = 0; u < arm.states.size(); ++u) {
      std::vector<std::size_t> reference = oracle.distances_from(u, metric);
      for (std::size_t w = 0; w < arm.states.size(); ++w) {
        GeodesicPlan plan =
            metric == Metric::L1
                ? l1_geodesic(arm.pip, arm.state_ideals[u], arm.state_ideals[w])
                : linf_geodesic(arm.pip, arm.state_ideals[u],
                                arm.state_ideals[w]);
        c.expect(plan.distance == reference[w],
                 format("R_{%zu,%zu} pair (%zu,%zu): plan %zu, BFS %zu",
                        spec.height, spec.length, u, w, plan.distance,
                        reference[w]));
        if (metric == Metric::L1)
          c.expect(plan.distance ==
                       (arm.state_ideals[u] ^ arm.state_ideals[w]).count(),
                   format("pair (%zu,%zu): distance != |I xor J|", u, w));
        ++pairs;
      }
    }
  }
  if (!c.ok) return {false, c.why};
  if (metric == Metric::L1)
    return {true, format("cost distances equal 1-skeleton BFS and |I xor J| "
                         "on all %zu pairs of R_{2,4} and R_{1,10}",
                         pairs)};
  return {true, format("time distances equal cube-diagonal BFS on all %zu "
                       "pairs, every batch passing the 2^k corner check",
                       pairs)};
}

// 6. Build/extract round trip: 500 random encodings come back isomorphic.
Verdict criterion6() {
  Check c;
  std::mt19937_64 rng(20260816);
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    Pip original(close(testsupport::random_pip_data(rng, 10)));
    BuiltComplex built = from_pip(original, 1 << 12);
    ExtractionResult result = extract_pip(built.complex, 0);
    c.expect(result.ok(), format("trial %d: extraction refuted", trial));
    if (!c.ok) break;
    Pip recovered(result.extraction->pip_data);
    c.expect(recovered.size() == original.size(),
             format("trial %d: %zu elements became %zu", trial,
                    original.size(), recovered.size()));
    if (!c.ok) break;

    // Identify elements across the two encodings by their occurrence sets:
    // the vertices whose ideal contains the element. Occurrence sets are
    // injective on any valid encoding.
    const std::size_t nv = built.complex.vertex_count();
    const std::size_t ne = original.size();
    auto occurrences = [&](const std::vector<Bitset>& ideals) {
      std::vector<Bitset> occ(ne, Bitset(nv));
      for (std::size_t v = 0; v < nv; ++v)
        ideals[v].for_each([&](std::size_t e) { occ[e].set(v); });
      return occ;
    };
    std::vector<Bitset> occ_p = occurrences(built.vertex_ideals);
    std::vector<Bitset> occ_e = occurrences(result.extraction->vertex_ideals);
    std::unordered_map<Bitset, std::size_t, BitsetHash> by_occ;
    for (std::size_t k = 0; k < ne; ++k) by_occ.emplace(occ_e[k], k);

    std::vector<std::size_t> image(ne);
    for (std::size_t e = 0; e < ne && c.ok; ++e) {
      auto it = by_occ.find(occ_p[e]);
      c.expect(it != by_occ.end(),
               format("trial %d: element '%s' has no counterpart", trial,
                      original.elements()[e].c_str()));
      if (c.ok) image[e] = it->second;
    }
    for (std::size_t e = 0; e < ne && c.ok; ++e)
      for (std::size_t f = 0; f < ne && c.ok; ++f) {
        c.expect(original.leq(e, f) == recovered.leq(image[e], image[f]),
                 format("trial %d: order disagrees at (%zu,%zu)", trial, e, f));
        c.expect(original.inconsistent(e, f) ==
                     recovered.inconsistent(image[e], image[f]),
                 format("trial %d: conflicts disagree at (%zu,%zu)", trial, e,
                        f));
      }
  }
  if (!c.ok) return {false, c.why};
  return {true, "500 random encodings survive the build/extract round trip "
                "up to isomorphism (order and conflicts preserved)"};
}

// 7. Curvature controls: the three-squares corner is refuted with a hollow
//    triangle witness; the five-squares corner is certified.
Verdict criterion7() {
  Check c;
  CubeComplex three = complex_from_json(
      read_file(std::string(CUBEPLAN_FIXTURES_DIR) + "/three-squares.json"));
  Cat0Result bad = is_cat0(three, three.root().value_or(0));
  c.expect(!bad.certified(), "three-squares was certified");
  if (bad.refutation) {
    c.expect(bad.refutation->kind == Refutation::Kind::BadLink,
             "three-squares refuted for the wrong reason");
    c.expect(bad.refutation->witness_items ==
                 std::vector<std::string>{"A", "B", "C"},
             "three-squares witness is not the hollow triangle {A, B, C}");
  }
  CubeComplex five = complex_from_json(
      read_file(std::string(CUBEPLAN_FIXTURES_DIR) + "/five-squares.json"));
  Cat0Result good = is_cat0(five, five.root().value_or(0));
  c.expect(good.certified(), "five-squares was refuted");
  if (good.certified())
    c.expect(good.certificate->pip.size() == 5,
             "five-squares certificate has the wrong hyperplane count");
  if (!c.ok) return {false, c.why};
  return {true, "three-squares refuted with hollow-triangle witness "
                "{A, B, C}; five-squares certified with 5 hyperplanes"};
}

// 8. Plan validity at scale: consistent traces, symmetric distances, and
//    triangle inequalities across 1000 random pairs in three systems.
Verdict criterion8() {
  Check c;
  std::mt19937_64 rng(20260817);

  struct System {
    std::string name;
    Pip pip;
    std::vector<Bitset> ideals;
    std::size_t pairs;
  };
  std::vector<System> systems;
  {
    ArmPip a24 = arm_pip({2, 4});
    systems.push_back(
        {"R_{2,4}", std::move(a24.pip), std::move(a24.state_ideals), 400});
    ArmPip a110 = arm_pip({1, 10});
    systems.push_back(
        {"R_{1,10}", std::move(a110.pip), std::move(a110.state_ideals), 400});
    CubeComplex five = complex_from_json(
        read_file(std::string(CUBEPLAN_FIXTURES_DIR) + "/five-squares.json"));
    Cat0Result res = is_cat0(five, 0);
    if (!res.certified()) return {false, "five-squares failed to certify"};
    systems.push_back({"five-squares", std::move(res.certificate->pip),
                       std::move(res.certificate->vertex_ideals), 200});
  }

  auto trace_ok = [&](const System& s, const GeodesicPlan& plan,
                      const Bitset& from, const Bitset& to) {
    if (plan.vertex_trace.size() != plan.batches.size() + 1) return false;
    if (!(plan.vertex_trace.front() == from)) return false;
    if (!(plan.vertex_trace.back() == to)) return false;
    for (std::size_t k = 0; k < plan.batches.size(); ++k) {
      Bitset step = plan.vertex_trace[k] ^ plan.vertex_trace[k + 1];
      if (step.count() != plan.batches[k].size()) return false;
      for (std::size_t e : plan.batches[k])
        if (!step.test(e)) return false;
    }
    for (const Bitset& ideal : plan.vertex_trace)
      if (!s.pip.is_consistent_ideal(ideal)) return false;
    return true;
  };

  std::size_t total = 0;
  for (const System& s : systems) {
    std::uniform_int_distribution<std::size_t> pick(0, s.ideals.size() - 1);
    for (std::size_t trial = 0; trial < s.pairs && c.ok; ++trial) {
      std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      for (Metric metric : {Metric::L1, Metric::LInf}) {
        auto plan_between = [&](std::size_t a, std::size_t b) {
          return metric == Metric::L1
                     ? l1_geodesic(s.pip, s.ideals[a], s.ideals[b])
                     : linf_geodesic(s.pip, s.ideals[a], s.ideals[b]);
        };
        GeodesicPlan there = plan_between(i, j);
        GeodesicPlan back = plan_between(j, i);
        c.expect(trace_ok(s, there, s.ideals[i], s.ideals[j]),
                 format("%s: invalid trace on pair %zu", s.name.c_str(),
                        trial));
        c.expect(there.distance == back.distance,
                 format("%s: asymmetric distance on pair %zu", s.name.c_str(),
                        trial));
        GeodesicPlan leg1 = plan_between(i, k), leg2 = plan_between(k, j);
        c.expect(there.distance <= leg1.distance + leg2.distance,
                 format("%s: triangle inequality fails on pair %zu",
                        s.name.c_str(), trial));
      }
      ++total;
    }
  }
  if (!c.ok) return {false, c.why};
  return {true, format("%zu random plans have consistent traces, symmetric "
                       "distances, and triangle inequalities in both metrics",
                       total)};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    Verdict (*fn)();
  };
  const Entry entries[] = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, +[] { return oracle_criterion(Metric::L1); }},
      {5, +[] { return oracle_criterion(Metric::LInf); }},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
  };
  int failures = 0;
  for (const Entry& entry : entries) {
    Verdict verdict;
    try {
      verdict = entry.fn();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %d — %s\n", verdict.pass ? "PASS" : "FAIL",
                entry.id, verdict.text.c_str());
    std::fflush(stdout);
    failures += verdict.pass ? 0 : 1;
  }
  return failures;
}
