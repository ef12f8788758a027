#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlink/algebra.hpp"
#include "vlink/gauss_code.hpp"
#include "vlink/presentation.hpp"

namespace vlink {

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Count = std::uint64_t;

// A finite structure to color into. Exactly one of the three members is set,
// matching `theory`.
struct ColoringTarget {
  Theory theory = Theory::Quandle;
  std::string name;
  std::optional<FiniteGroup> group;
  std::optional<FiniteQuandle> quandle;
  std::optional<FiniteBiquandle> biquandle;

  int order() const;

  static ColoringTarget of(FiniteGroup g);
  static ColoringTarget of(FiniteQuandle q);
  static ColoringTarget of(FiniteBiquandle b);
};

// Exact number of generator assignments satisfying every relation, by
// backtracking in generator order; a relation is checked as soon as all of
// its leaves are assigned. Quandle presentations may also be counted into
// biquandle targets (quandle operations read as the up/upbar pair), which is
// how quandle-promoted biquandles are compared against their quandles.
Count count_colorings(const Presentation& p, const ColoringTarget& target);

// As above, restricted to assignments whose image generates the whole target.
Count count_surjective_colorings(const Presentation& p, const ColoringTarget& target);

// Enumerates all colorings and hands each assignment to the callback.
void for_each_coloring(const Presentation& p, const ColoringTarget& target,
                       const std::function<void(const std::vector<int>&)>& fn);

// Free rank of the abelianized group presentation.
int abelianization_rank(const Presentation& p);

// The standard battery: R_3, R_5, conj(S_3), the coset quandle
// (S_3, <(12)>, (12)), Alexander biquandles over Z_5, and S_3, S_4.
const std::vector<ColoringTarget>& battery();

// Parses "dihedral:n", "alexander:n:s:t", "conj:s3", "coset:s3:12",
// "group:s3", "group:s4", or "enum:<order>:<index>".
ColoringTarget builtin_target(const std::string& spec);

struct InvariantReport {
  std::string code;
  std::vector<std::pair<std::string, Count>> counts;
  int rank = 0;
  int genus = 0;
  int writhe = 0;
};

InvariantReport report(const GaussCode& code);

}  // namespace vlink
