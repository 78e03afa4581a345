#include "cubeplan/arm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <utility>

namespace cubeplan {

namespace {

void check_spec(const ArmSpec& spec) {
  if (spec.height < 1 || spec.length < 1)
    throw InvalidArmSpec("tunnel height and arm length must be at least 1");
}

void check_shape(const ArmSpec& spec, std::string_view word) {
  if (word.size() != spec.length)
    throw InvalidState("word has length " + std::to_string(word.size()) +
                       ", expected " + std::to_string(spec.length));
  for (char c : word)
    if (c != 'U' && c != 'D' && c != 'R')
      throw InvalidState(std::string("invalid direction '") + c +
                         "' (use U, D, R)");
}

// Geometric validity of a well-formed word: the path from (0,0) stays in
// rows 0..height and never revisits a lattice point.
bool walk_is_valid(std::size_t height, std::string_view word) {
  const int top = static_cast<int>(height);
  std::vector<std::pair<int, int>> points;
  points.reserve(word.size() + 1);
  points.emplace_back(0, 0);
  int x = 0, y = 0;
  for (char c : word) {
    if (c == 'U') ++y;
    else if (c == 'D') --y;
    else ++x;
    if (y < 0 || y > top) return false;
    if (std::find(points.begin(), points.end(), std::make_pair(x, y)) !=
        points.end())
      return false;
    points.emplace_back(x, y);
  }
  return true;
}

void check_flip(std::string_view word, std::size_t index) {
  if (index < 1 || index >= word.size())
    throw InvalidState("flip index " + std::to_string(index) +
                       " out of range");
  if (word[index - 1] == word[index])
    throw InvalidState("links " + std::to_string(index) + " and " +
                       std::to_string(index + 1) + " face the same direction");
}

void check_rotation(std::string_view word, char target) {
  char last = word.back();
  if (target != 'U' && target != 'D' && target != 'R')
    throw InvalidState(std::string("invalid rotation target '") + target + "'");
  if (target == last)
    throw InvalidState("rotation target equals the current direction");
  if (last != 'R' && target != 'R')
    throw InvalidState("a rotation turns 90 degrees, never U<->D");
}

// In-place edit of a word buffer; applicability must be checked first.
void edit(std::string& word, const ArmMove& move) {
  if (move.kind == ArmMove::Kind::Flip)
    std::swap(word[move.flip_index - 1], word[move.flip_index]);
  else
    word.back() = move.rotate_to;
}

}  // namespace

bool is_valid_state(const ArmSpec& spec, std::string_view word) {
  check_spec(spec);
  check_shape(spec, word);
  return walk_is_valid(spec.height, word);
}

std::string straight_word(const ArmSpec& spec) {
  check_spec(spec);
  return std::string(spec.length, 'R');
}

namespace {

template <typename Emit>
void enumerate_impl(const ArmSpec& spec, Emit emit) {
  check_spec(spec);
  const int top = static_cast<int>(spec.height);
  std::string word;
  std::vector<std::pair<int, int>> points{{0, 0}};
  std::function<void()> dfs = [&] {
    if (word.size() == spec.length) {
      emit(word);
      return;
    }
    for (char c : {'D', 'R', 'U'}) {
      auto [x, y] = points.back();
      if (c == 'U') ++y;
      else if (c == 'D') --y;
      else ++x;
      if (y < 0 || y > top) continue;
      if (std::find(points.begin(), points.end(), std::make_pair(x, y)) !=
          points.end())
        continue;
      points.emplace_back(x, y);
      word.push_back(c);
      dfs();
      word.pop_back();
      points.pop_back();
    }
  };
  dfs();
}

}  // namespace

std::vector<std::string> enumerate_states(const ArmSpec& spec,
                                          std::uint64_t guard) {
  std::vector<std::string> states;
  std::uint64_t count = 0;
  enumerate_impl(spec, [&](const std::string& word) {
    if (++count > guard) throw GuardExceeded(guard);
    states.push_back(word);
  });
  return states;
}

std::uint64_t count_states(const ArmSpec& spec, std::uint64_t guard) {
  std::uint64_t count = 0;
  enumerate_impl(spec, [&](const std::string&) {
    if (++count > guard) throw GuardExceeded(guard);
  });
  return count;
}

std::vector<ArmMove> moves(const ArmSpec& spec, std::string_view word) {
  if (!is_valid_state(spec, word))
    throw InvalidState("not a valid arm state: " + std::string(word));
  std::vector<ArmMove> result;
  std::string buffer(word);
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i - 1] == word[i]) continue;
    std::swap(buffer[i - 1], buffer[i]);
    if (walk_is_valid(spec.height, buffer))
      result.push_back({ArmMove::Kind::Flip, i, 'R'});
    std::swap(buffer[i - 1], buffer[i]);
  }
  const char last = word.back();
  for (char target : {'D', 'R', 'U'}) {
    if (target == last) continue;
    if (last != 'R' && target != 'R') continue;  // U<->D is not a move
    buffer.back() = target;
    if (walk_is_valid(spec.height, buffer))
      result.push_back({ArmMove::Kind::Rotate, 0, target});
    buffer.back() = last;
  }
  return result;
}

std::string apply_move(const ArmSpec& spec, std::string_view word,
                       const ArmMove& move) {
  if (!is_valid_state(spec, word))
    throw InvalidState("not a valid arm state: " + std::string(word));
  std::string result(word);
  if (move.kind == ArmMove::Kind::Flip)
    check_flip(word, move.flip_index);
  else
    check_rotation(word, move.rotate_to);
  edit(result, move);
  if (!walk_is_valid(spec.height, result))
    throw InvalidState("move leads out of the valid states: " + result);
  return result;
}

std::vector<std::size_t> move_support(const ArmSpec& spec,
                                      const ArmMove& move) {
  check_spec(spec);
  if (move.kind == ArmMove::Kind::Flip)
    return {move.flip_index, move.flip_index + 1};
  return {spec.length};
}

std::string move_label(std::string_view word, const ArmMove& move) {
  if (move.kind == ArmMove::Kind::Flip)
    return "f" + std::to_string(move.flip_index);
  char a = word.back(), b = move.rotate_to;
  if (a > b) std::swap(a, b);
  return std::string("r") + a + b;
}

bool simultaneous(const ArmSpec& spec, std::string_view word,
                  const std::vector<ArmMove>& moveset) {
  // Individually inapplicable moves are an error, not a "no".
  for (const ArmMove& move : moveset) apply_move(spec, word, move);

  std::vector<std::size_t> support;
  for (const ArmMove& move : moveset)
    for (std::size_t link : move_support(spec, move)) support.push_back(link);
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    return false;

  if (moveset.size() > 20)
    throw InvalidState("moveset too large to verify");
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << moveset.size());
       ++mask) {
    std::string corner(word);
    for (std::size_t i = 0; i < moveset.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) edit(corner, moveset[i]);
    if (!walk_is_valid(spec.height, corner)) return false;
  }
  return true;
}

namespace {

// Enumerates the maximal simultaneous move sets at one state. The property
// "spans a cube" is closed under subsets, so the usual candidates/excluded
// backtracking visits each maximal set exactly once. Corner validity is a
// membership test: a corner word is valid iff it occurs in the state list.
class CubeFinder {
 public:
  CubeFinder(const ArmSpec& spec, const std::vector<std::string>& states,
             const std::unordered_map<std::string, std::size_t>& index)
      : spec_(spec), states_(states), index_(index) {}

  // Calls report(moveset) for every maximal simultaneous set at state u.
  void find(std::size_t u, const std::vector<ArmMove>& applicable,
            const std::function<void(const std::vector<ArmMove>&)>& report) {
    corners_ = {states_[u]};
    used_links_.clear();
    report_ = &report;
    std::vector<std::size_t> all(applicable.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    applicable_ = &applicable;
    grow({}, all, {});
  }

 private:
  // True when adding `move` keeps the current corner set inside the states.
  bool extends(const ArmMove& move) {
    for (std::size_t link : move_support(spec_, move))
      if (used_links_.count(link)) return false;
    for (const std::string& corner : corners_) {
      std::string next = corner;
      edit(next, move);
      if (!index_.count(next)) return false;
    }
    return true;
  }

  void grow(std::vector<std::size_t> chosen, std::vector<std::size_t> cand,
            std::vector<std::size_t> excl) {
    std::vector<std::size_t> cand_ok, excl_ok;
    for (std::size_t c : cand)
      if (extends((*applicable_)[c])) cand_ok.push_back(c);
    for (std::size_t x : excl)
      if (extends((*applicable_)[x])) excl_ok.push_back(x);
    if (cand_ok.empty() && excl_ok.empty()) {
      std::vector<ArmMove> set;
      for (std::size_t i : chosen) set.push_back((*applicable_)[i]);
      (*report_)(set);
      return;
    }
    for (std::size_t pos = 0; pos < cand_ok.size(); ++pos) {
      std::size_t c = cand_ok[pos];
      const ArmMove& move = (*applicable_)[c];

      std::vector<std::string> saved_corners = corners_;
      std::size_t corner_count = corners_.size();
      for (std::size_t k = 0; k < corner_count; ++k) {
        std::string next = corners_[k];
        edit(next, move);
        corners_.push_back(std::move(next));
      }
      std::vector<std::size_t> links = move_support(spec_, move);
      for (std::size_t link : links) used_links_.insert(link);
      chosen.push_back(c);

      std::vector<std::size_t> next_cand(cand_ok.begin() + pos + 1,
                                         cand_ok.end());
      std::vector<std::size_t> next_excl = excl_ok;
      next_excl.insert(next_excl.end(), cand_ok.begin(),
                       cand_ok.begin() + pos);
      grow(chosen, std::move(next_cand), std::move(next_excl));

      chosen.pop_back();
      for (std::size_t link : links) used_links_.erase(link);
      corners_ = std::move(saved_corners);
    }
  }

  const ArmSpec& spec_;
  const std::vector<std::string>& states_;
  const std::unordered_map<std::string, std::size_t>& index_;
  const std::vector<ArmMove>* applicable_ = nullptr;
  const std::function<void(const std::vector<ArmMove>&)>* report_ = nullptr;
  std::vector<std::string> corners_;
  std::set<std::size_t> used_links_;
};

}  // namespace

BuiltArm build_complex(const ArmSpec& spec, std::uint64_t guard) {
  std::vector<std::string> states = enumerate_states(spec, guard);
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(states.size() * 2);
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;

  std::vector<EdgeRec> edges;
  std::vector<CubeRec> cubes;
  CubeFinder finder(spec, states, index);
  for (std::size_t u = 0; u < states.size(); ++u) {
    std::vector<ArmMove> applicable = moves(spec, states[u]);
    for (const ArmMove& move : applicable) {
      std::string target = states[u];
      edit(target, move);
      std::size_t v = index.at(target);
      if (u < v) edges.push_back({u, v, move_label(states[u], move)});
    }
    finder.find(u, applicable, [&](const std::vector<ArmMove>& moveset) {
      if (moveset.size() < 2) return;
      std::vector<std::string> labels;
      for (const ArmMove& move : moveset)
        labels.push_back(move_label(states[u], move));
      std::sort(labels.begin(), labels.end());
      cubes.push_back({u, std::move(labels)});
    });
  }

  CubeComplex complex(states, std::move(edges), std::move(cubes),
                      index.at(straight_word(spec)));
  return {std::move(states), std::move(complex)};
}

ArmPip arm_pip(const ArmSpec& spec, std::string_view root,
               std::uint64_t guard) {
  if (!is_valid_state(spec, root))
    throw InvalidState("root is not a valid arm state: " + std::string(root));
  BuiltArm built = build_complex(spec, guard);
  std::size_t root_id = built.complex.vertex_index(root);
  Cat0Result res = is_cat0(built.complex, root_id, guard);
  if (!res.certified())
    throw InvariantViolation("configuration space failed certification: " +
                             res.refutation->witness);
  return {std::move(built.states),
          std::move(built.complex),
          std::move(res.certificate->pip),
          std::move(res.certificate->vertex_ideals),
          std::move(res.certificate->class_names),
          std::move(res.certificate->edge_class)};
}

ArmPip arm_pip(const ArmSpec& spec, std::uint64_t guard) {
  return arm_pip(spec, straight_word(spec), guard);
}

}  // namespace cubeplan
