#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vlink/gauss_code.hpp"

namespace vlink {

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MoveKind { R1_add, R1_remove, R2_add, R2_remove, R3, F_forbidden };

std::string move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& name);

// An addressable rewriting event. The fields used depend on the kind:
//   R1_add:     gap, over_first, sign
//   R1_remove:  crossing
//   R2_add:     gap (over strand), gap2 (under strand), parallel, sign
//   R2_remove:  crossing, crossing2
//   R3:         triple = start positions of the three adjacent passage pairs
//   F_forbidden: gap = position of the first of two adjacent Over passages
struct MoveSite {
  MoveKind kind = MoveKind::R1_add;
  SemiArc gap{};
  SemiArc gap2{};
  bool over_first = true;
  bool parallel = true;
  int sign = +1;
  int crossing = 0;
  int crossing2 = 0;
  std::array<SemiArc, 3> triple{};

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string format_site(const MoveSite& site);
MoveSite parse_site(const std::string& text);

// Complete, duplicate-free list of applicable sites of one kind. Insertion
// positions for R1_add/R2_add are unconstrained (virtual moves are invisible
// on Gauss codes), so they enumerate every gap/parameter choice.
std::vector<MoveSite> enumerate_sites(const GaussCode& code, MoveKind kind);

// Applies a move; throws MoveError when the site is not applicable.
GaussCode apply_move(const GaussCode& code, const MoveSite& site);

// The second forbidden move: swap of two adjacent Under passages. It is not
// part of any move set here (it is not allowed for welded links either);
// exposed for tests and experiments only.
std::vector<SemiArc> under_swap_sites(const GaussCode& code);
GaussCode apply_under_swap(const GaussCode& code, const SemiArc& at);

// Lexicographic minimum of serialize_code over component rotations,
// component orderings, and crossing relabelings.
std::string canonical_string(const GaussCode& code);
GaussCode canonical_form(const GaussCode& code);

inline const std::vector<MoveKind>& reidemeister_moves() {
  static const std::vector<MoveKind> kinds = {MoveKind::R1_add, MoveKind::R1_remove,
                                              MoveKind::R2_add, MoveKind::R2_remove,
                                              MoveKind::R3};
  return kinds;
}

inline const std::vector<MoveKind>& welded_moves() {
  static const std::vector<MoveKind> kinds = {MoveKind::R1_add,    MoveKind::R1_remove,
                                              MoveKind::R2_add,    MoveKind::R2_remove,
                                              MoveKind::R3,        MoveKind::F_forbidden};
  return kinds;
}

struct SearchResult {
  bool found = false;
  std::vector<MoveSite> sites;        // applies to the canonical form at each step
  std::vector<std::string> states;    // canonical strings, states.size() == sites.size()+1
  std::uint64_t steps = 0;            // candidate codes generated
};

// Bidirectional breadth-first search over canonical forms. Returns a
// verified, replayable move path or an explicit exhausted verdict; never a
// nonequivalence claim. A step is one generated candidate code.
SearchResult search_equivalence(const GaussCode& a, const GaussCode& b,
                                const std::vector<MoveKind>& moves, int max_crossings,
                                std::uint64_t max_steps);

}  // namespace vlink
