#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubeplan/bitset.hpp"
#include "cubeplan/common.hpp"
#include "cubeplan/cube_complex.hpp"
#include "cubeplan/pip.hpp"

namespace cubeplan {

// A pinned arm of `length` unit links in a tunnel of rows 0..height.
// The base is fixed at the lower-left corner (0,0); links face up, down or
// right, so the arm never extends left and the tunnel needs no right wall.
struct ArmSpec {
  std::size_t height = 1;
  std::size_t length = 1;
};

// States are direction words over {U, D, R}, e.g. "RRURDR". A word is valid
// when its lattice path visits length+1 distinct points, all with
// 0 <= y <= height. Throws InvalidState when the word has the wrong length
// or alphabet; returns false when the shape is fine but the path collides
// with itself or leaves the tunnel.
bool is_valid_state(const ArmSpec& spec, std::string_view word);

// All valid states in lexicographic order (D < R < U). Throws GuardExceeded
// when more than `guard` states exist.
std::vector<std::string> enumerate_states(const ArmSpec& spec,
                                          std::uint64_t guard = kDefaultGuard);
std::uint64_t count_states(const ArmSpec& spec,
                           std::uint64_t guard = kDefaultGuard);

// The straight arm "R...R", valid for every spec.
std::string straight_word(const ArmSpec& spec);

// A local move: either flip two consecutive links facing different
// directions (flip_index is 1-based, naming the first of the two), or
// rotate the last link by 90 degrees to face rotate_to (R<->U or R<->D;
// U<->D would be a 180-degree sweep and is not a move).
struct ArmMove {
  enum class Kind { Flip, Rotate };
  Kind kind = Kind::Flip;
  std::size_t flip_index = 0;
  char rotate_to = 'R';
  bool operator==(const ArmMove&) const = default;
};

// Every move applicable at `word` whose result is again valid, ordered
// flips by index first, then rotations by target direction.
std::vector<ArmMove> moves(const ArmSpec& spec, std::string_view word);

// Applies one move, throwing InvalidState when the move does not apply at
// this word or the result is not a valid state.
std::string apply_move(const ArmSpec& spec, std::string_view word,
                       const ArmMove& move);

// The 1-based link positions a move touches: {i, i+1} for Flip(i), {n} for
// a rotation.
std::vector<std::size_t> move_support(const ArmSpec& spec, const ArmMove& move);

// True when the moves touch pairwise-disjoint links AND every subset of
// them, applied together, yields a valid state — i.e. the moves span a
// cube of the configuration space. Throws InvalidState when any move is
// individually inapplicable at `word`.
bool simultaneous(const ArmSpec& spec, std::string_view word,
                  const std::vector<ArmMove>& moveset);

// Stable edge label of a move: "f3" for Flip(3); rotations are labelled by
// the unordered direction pair, "rDR" or "rRU", so both endpoints of an
// edge and all parallel edges of a cube agree on the label.
std::string move_label(std::string_view word, const ArmMove& move);

struct BuiltArm {
  std::vector<std::string> states;  // lexicographic; index = vertex id
  CubeComplex complex;
};

// The configuration space: a vertex per state, an edge per move, and a cube
// for every maximal set of simultaneously performable moves.
BuiltArm build_complex(const ArmSpec& spec, std::uint64_t guard = kDefaultGuard);

struct ArmPip {
  std::vector<std::string> states;
  CubeComplex complex;
  Pip pip;
  std::vector<Bitset> state_ideals;  // per state: hyperplanes crossed from root
  std::vector<std::string> class_names;
  std::vector<std::size_t> edge_class;
};

// Builds the configuration space, certifies it, and returns the extracted
// encoding rooted at `root` (default: the straight arm). Certification of
// an arm complex cannot fail; if it ever does, InvariantViolation reports
// the refutation, signalling a bug rather than a modelling possibility.
ArmPip arm_pip(const ArmSpec& spec, std::string_view root,
               std::uint64_t guard = kDefaultGuard);
ArmPip arm_pip(const ArmSpec& spec, std::uint64_t guard = kDefaultGuard);

}  // namespace cubeplan
