#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubeplan/bitset.hpp"
#include "cubeplan/common.hpp"

namespace cubeplan {

using NamePair = std::pair<std::string, std::string>;

// A poset with inconsistent pairs (PIP), as raw data: element names, cover
// relations (lower, upper), and unordered conflict pairs. Nothing is checked
// at this level. validate() reports every violated invariant, close()
// saturates the conflict relation upward, and Pip compiles a closed, valid
// description into the indexed form the rest of the library works with.
//
// The intended invariants are:
//   * element names unique and non-empty,
//   * covers acyclic (they generate a partial order),
//   * inconsistency irreflexive (symmetry is inherent in the unordered
//     representation) and upward closed: p ~ q, p <= p', q <= q'
//     implies p' ~ q',
//   * no conflict between comparable elements.
struct PipData {
  std::vector<std::string> elements;
  std::vector<NamePair> covers;        // (lower, upper)
  std::vector<NamePair> inconsistent;  // unordered pairs
};

struct Violation {
  enum class Kind {
    EmptyName,
    DuplicateElement,
    UnknownElement,
    CoverCycle,
    ReflexiveConflict,
    NotUpwardClosed,
    ComparableConflict,
  };
  Kind kind;
  std::string a;
  std::string b;
  std::string detail;

  std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

struct ValidateOptions {
  // Report conflicts between comparable elements as warnings instead of
  // violations. Such an element can lie in no consistent ideal; allowing it
  // keeps deliberately dead elements representable, which is occasionally
  // useful when editing descriptions by hand.
  bool allow_comparable_conflicts = false;
};

ValidationReport validate(const PipData& data,
                          const ValidateOptions& options = {});

// Upward closure of the conflict relation. Keeps elements and covers as
// given. Idempotent and monotone. Throws InvalidPip on bad names, cyclic
// covers, or reflexive conflict input; non-minimal (already partly closed)
// input is fine.
PipData close(const PipData& data);

struct AvailableMoves {
  Bitset removable;  // maximal elements of the ideal
  Bitset addable;    // minimal elements outside, compatible with the ideal
};

// Compiled PIP. Immutable after construction; all queries are const and
// safe to call concurrently. Elements are indexed 0..size()-1 in
// lexicographic name order, and Bitset arguments/results are masks over
// those indices.
class Pip {
 public:
  // Requires closed, valid data (see validate); throws InvalidPip with the
  // validation summary otherwise.
  explicit Pip(const PipData& data, const ValidateOptions& options = {});

  std::size_t size() const { return n_; }
  const std::vector<std::string>& elements() const { return names_; }
  std::size_t index_of(std::string_view name) const;  // throws InvalidPip

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool inconsistent(std::size_t a, std::size_t b) const {
    return inc_[a].test(b);
  }

  const Bitset& up_set(std::size_t e) const { return up_[e]; }          // incl. e
  const Bitset& strict_up_set(std::size_t e) const { return sup_[e]; }
  const Bitset& down_set(std::size_t e) const { return down_[e]; }      // incl. e
  const Bitset& strict_down_set(std::size_t e) const { return sdown_[e]; }
  const Bitset& conflicts_of(std::size_t e) const { return inc_[e]; }
  bool has_conflicts() const;

  // Hasse diagram / minimal conflict pairs, re-minimized from the stored
  // closed relations; sorted by name, deterministic.
  std::vector<NamePair> hasse_covers() const;
  std::vector<NamePair> minimal_inconsistent() const;

  // Minimized round-trip form (Hasse covers, minimal conflicts). Feed it
  // through close() before rebuilding a Pip.
  PipData data() const;

  // --- consistent order ideals -------------------------------------------

  // True iff the mask is downward closed and conflict-free.
  bool is_consistent_ideal(const Bitset& members) const;

  Bitset maximal_of(const Bitset& ideal) const;

  // Every consistent ideal, deterministically ordered (depth-first, the
  // empty ideal first, children explored in lexicographic name order).
  // Throws GuardExceeded once more than `guard` ideals exist.
  std::vector<Bitset> consistent_ideals(std::uint64_t guard = kDefaultGuard) const;
  std::uint64_t count_consistent_ideals(std::uint64_t guard = kDefaultGuard) const;

  // Single-element moves at a consistent ideal: removable = its maximal
  // elements, addable = minimal elements of the complement whose strict
  // lower set lies inside and which conflict with nothing inside.
  // Throws InvalidIdeal when `ideal` is not a consistent ideal.
  AvailableMoves available_moves(const Bitset& ideal) const;

  Bitset mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const Bitset& mask) const;

 private:
  std::uint64_t enumerate_impl(std::uint64_t guard,
                               std::vector<Bitset>* out) const;

  std::size_t n_ = 0;
  std::vector<std::string> names_;  // sorted
  std::vector<Bitset> up_, sup_, down_, sdown_;
  std::vector<Bitset> inc_;
  // blocker_[e]: elements with larger index not strictly below e; used to
  // emit each ideal exactly once during enumeration.
  std::vector<Bitset> blocker_;
};

}  // namespace cubeplan
