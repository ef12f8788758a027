#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vlink {

enum class Role { Over, Under };

inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

// One pass of a strand through a crossing.
struct Passage {
  int crossing = 0;
  Role role = Role::Over;

  friend bool operator==(const Passage&, const Passage&) = default;
};

// A signed, over/under-decorated Gauss code for a virtual link.
// Components are cyclic sequences of passages; an empty sequence is a
// 0-crossing unknot component. Every crossing id occurs exactly twice,
// once Over and once Under, and has a sign in `crossings`.
struct GaussCode {
  std::vector<std::vector<Passage>> components;
  std::map<int, int> crossings;  // id -> sign (+1/-1)

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

  int total_passages() const;
  int writhe() const;
  // Position of the Over/Under passage of a crossing: (component, index).
  std::pair<int, int> find_passage(int crossing, Role role) const;
};

// Thrown on malformed text or on codes violating the Gauss-code invariants.
struct CodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The segment between a passage and its successor; (component, position)
// names the gap that follows passage `position`. An empty component has the
// single degenerate semi-arc (component, 0).
struct SemiArc {
  int component = 0;
  int position = 0;

  friend bool operator==(const SemiArc&, const SemiArc&) = default;
  friend auto operator<=>(const SemiArc&, const SemiArc&) = default;
};

// A maximal run of semi-arcs not interrupted by an Under passage.
struct Arc {
  int component = 0;
  int start = 0;  // position of the Under passage the arc leaves, 0 if none
  std::vector<SemiArc> semi_arcs;
};

GaussCode parse_code(std::string_view text);
std::string serialize_code(const GaussCode& code);

// Structural validation; throws CodeError with a description on failure.
void validate_code(const GaussCode& code);

std::vector<SemiArc> semi_arcs(const GaussCode& code);
std::vector<Arc> arcs(const GaussCode& code);

// The four semi-arcs meeting at a crossing, read off the component
// traversal: the over strand's outgoing semi-arc follows its Over passage.
struct CrossingGeometry {
  int crossing = 0;
  int sign = 0;
  SemiArc under_in, over_in, over_out, under_out;
};

std::vector<CrossingGeometry> crossing_geometry(const GaussCode& code);

// Index of the arc containing a given semi-arc, under the ordering of arcs().
int arc_of_semi_arc(const std::vector<Arc>& arcs, const SemiArc& s);

enum class MirrorKind {
  Vertical,    // flip all signs and swap all Over/Under roles
  Horizontal,  // flip signs only
};

GaussCode mirror(const GaussCode& code, MirrorKind kind = MirrorKind::Vertical);
GaussCode reverse(const GaussCode& code);

// Renumber crossing ids to 1..n in first-appearance order.
GaussCode normalize_ids(const GaussCode& code);

// Genus of the closed surface obtained by capping the band neighborhood of
// the code's 4-valent graph (one disk per crossing, one band per semi-arc).
// Disconnected codes contribute additively per connected piece.
int carrier_genus(const GaussCode& code);
bool is_realizable(const GaussCode& code);

// Expected invariants frozen with each fixture; checked by selftest.
struct ValidationRecord {
  int genus = 0;
  int rank = 0;
  int writhe = 0;
  std::vector<std::pair<std::string, unsigned long long>> counts;
};

struct CorpusEntry {
  std::string name;
  std::string text;
  ValidationRecord record;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace vlink
