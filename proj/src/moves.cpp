#include "vlink/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace vlink {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1_add: return "R1_add";
    case MoveKind::R1_remove: return "R1_remove";
    case MoveKind::R2_add: return "R2_add";
    case MoveKind::R2_remove: return "R2_remove";
    case MoveKind::R3: return "R3";
    case MoveKind::F_forbidden: return "F_forbidden";
  }
  return "?";
}

MoveKind move_kind_from_name(const std::string& name) {
  for (MoveKind k : {MoveKind::R1_add, MoveKind::R1_remove, MoveKind::R2_add,
                     MoveKind::R2_remove, MoveKind::R3, MoveKind::F_forbidden}) {
    if (move_kind_name(k) == name) return k;
  }
  throw MoveError("unknown move kind '" + name + "'");
}

namespace {

int next_crossing_id(const GaussCode& code) {
  int m = 0;
  for (const auto& [id, sign] : code.crossings) m = std::max(m, id);
  return m + 1;
}

int comp_size(const GaussCode& code, int i) {
  return static_cast<int>(code.components[i].size());
}

// Ordered adjacent passage pair starting at position p: passages (p, p+1 mod k).
struct AdjacentPair {
  int comp, pos;
  Passage first, second;
};

std::vector<AdjacentPair> adjacent_pairs(const GaussCode& code) {
  std::vector<AdjacentPair> out;
  for (int i = 0; i < static_cast<int>(code.components.size()); ++i) {
    int k = comp_size(code, i);
    if (k < 2) continue;
    for (int p = 0; p < k; ++p) {
      out.push_back({i, p, code.components[i][p], code.components[i][(p + 1) % k]});
    }
  }
  return out;
}

void insert_pair_at(GaussCode& code, int comp_index, int at, Passage a, Passage b) {
  auto& comp = code.components[comp_index];
  comp.insert(comp.begin() + at, {a, b});
}

int gap_insert_index(const GaussCode& code, const SemiArc& gap) {
  return code.components[gap.component].empty() ? 0 : gap.position + 1;
}

// ----- Reidemeister 3 patterns -------------------------------------------
//
// The master pattern is the braid relation s1 s2 s1 = s2 s1 s2 with all
// three crossings positive; the legal variant set is its closure under
// reversing any strand and under the mirror.
enum Tag { X = 0, Y = 1, Z = 2 };

struct PairPattern {
  int first_tag;
  Role first_role;
  int second_tag;
  Role second_role;
  friend bool operator==(const PairPattern&, const PairPattern&) = default;
  friend auto operator<=>(const PairPattern&, const PairPattern&) = default;
};

struct R3Pattern {
  PairPattern xy, xz, yz;  // pairs with crossing sets {X,Y}, {X,Z}, {Y,Z}
  std::array<int, 3> sign;
  friend bool operator==(const R3Pattern&, const R3Pattern&) = default;
  friend auto operator<=>(const R3Pattern&, const R3Pattern&) = default;
};

R3Pattern reverse_strand(R3Pattern p, int strand) {
  auto flip_pair = [](PairPattern& pp) {
    std::swap(pp.first_tag, pp.second_tag);
    std::swap(pp.first_role, pp.second_role);
  };
  // Strand 0 carries the {X,Y} pair, strand 1 the {X,Z} pair, strand 2 the
  // {Y,Z} pair; reversing a strand flips its pair and the signs of both of
  // its crossings.
  if (strand == 0) {
    flip_pair(p.xy);
    p.sign[X] = -p.sign[X];
    p.sign[Y] = -p.sign[Y];
  } else if (strand == 1) {
    flip_pair(p.xz);
    p.sign[X] = -p.sign[X];
    p.sign[Z] = -p.sign[Z];
  } else {
    flip_pair(p.yz);
    p.sign[Y] = -p.sign[Y];
    p.sign[Z] = -p.sign[Z];
  }
  return p;
}

R3Pattern mirror_pattern(R3Pattern p) {
  for (PairPattern* pp : {&p.xy, &p.xz, &p.yz}) {
    pp->first_role = opposite(pp->first_role);
    pp->second_role = opposite(pp->second_role);
  }
  for (int& s : p.sign) s = -s;
  return p;
}

const std::vector<R3Pattern>& r3_patterns() {
  static const std::vector<R3Pattern> patterns = [] {
    R3Pattern master{
        {X, Role::Over, Y, Role::Over},    // top strand: over x then over y
        {X, Role::Under, Z, Role::Over},   // middle strand: under x then over z
        {Y, Role::Under, Z, Role::Under},  // bottom strand: under y then under z
        {+1, +1, +1}};
    std::set<R3Pattern> seen = {master};
    std::deque<R3Pattern> queue = {master};
    while (!queue.empty()) {
      R3Pattern cur = queue.front();
      queue.pop_front();
      for (int s = 0; s < 3; ++s) {
        R3Pattern next = reverse_strand(cur, s);
        if (seen.insert(next).second) queue.push_back(next);
      }
      R3Pattern next = mirror_pattern(cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
    return std::vector<R3Pattern>(seen.begin(), seen.end());
  }();
  return patterns;
}

// Does the candidate triple match some legal pattern under some assignment
// of its three crossings to (X, Y, Z)?
bool r3_matches(const GaussCode& code, const AdjacentPair& pxy, const AdjacentPair& pxz,
                const AdjacentPair& pyz, int cx, int cy, int cz) {
  auto pair_fits = [&](const AdjacentPair& cand, const PairPattern& pat, const int ids[3]) {
    return cand.first.crossing == ids[pat.first_tag] && cand.first.role == pat.first_role &&
           cand.second.crossing == ids[pat.second_tag] && cand.second.role == pat.second_role;
  };
  int ids[3] = {cx, cy, cz};
  for (const R3Pattern& pat : r3_patterns()) {
    if (!pair_fits(pxy, pat.xy, ids) || !pair_fits(pxz, pat.xz, ids) ||
        !pair_fits(pyz, pat.yz, ids)) {
      continue;
    }
    if (code.crossings.at(cx) == pat.sign[X] && code.crossings.at(cy) == pat.sign[Y] &&
        code.crossings.at(cz) == pat.sign[Z]) {
      return true;
    }
  }
  return false;
}

std::vector<MoveSite> r3_sites(const GaussCode& code) {
  auto pairs = adjacent_pairs(code);
  // Index pairs by their unordered crossing set.
  std::map<std::pair<int, int>, std::vector<int>> by_set;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    int a = pairs[i].first.crossing, b = pairs[i].second.crossing;
    if (a == b) continue;
    by_set[{std::min(a, b), std::max(a, b)}].push_back(i);
  }

  std::vector<int> ids;
  for (const auto& [id, sign] : code.crossings) ids.push_back(id);

  std::set<std::array<SemiArc, 3>> found;
  std::vector<MoveSite> out;
  int n = static_cast<int>(ids.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        auto it_ab = by_set.find({std::min(ids[a], ids[b]), std::max(ids[a], ids[b])});
        auto it_ac = by_set.find({std::min(ids[a], ids[c]), std::max(ids[a], ids[c])});
        auto it_bc = by_set.find({std::min(ids[b], ids[c]), std::max(ids[b], ids[c])});
        if (it_ab == by_set.end() || it_ac == by_set.end() || it_bc == by_set.end()) continue;
        for (int i : it_ab->second) {
          for (int j : it_ac->second) {
            for (int k : it_bc->second) {
              const AdjacentPair &p1 = pairs[i], &p2 = pairs[j], &p3 = pairs[k];
              // All six passages distinct.
              std::set<std::pair<int, int>> positions;
              for (const AdjacentPair* p : {&p1, &p2, &p3}) {
                int kk = comp_size(code, p->comp);
                positions.insert({p->comp, p->pos});
                positions.insert({p->comp, (p->pos + 1) % kk});
              }
              if (positions.size() != 6) continue;
              // The pair with set {a,b} plays XY; try x,y in both orders and
              // all three choices of which crossing is "z" are fixed by the
              // combination (a,b,c); r3_matches tries one assignment, so try
              // the six (x,y,z) assignments here.
              const int tries[6][3] = {{ids[a], ids[b], ids[c]}, {ids[b], ids[a], ids[c]},
                                       {ids[a], ids[c], ids[b]}, {ids[c], ids[a], ids[b]},
                                       {ids[b], ids[c], ids[a]}, {ids[c], ids[b], ids[a]}};
              for (const auto& t : tries) {
                // Slot the candidate pairs so their crossing sets are
                // {x,y}, {x,z}, {y,z} in this assignment.
                auto set_of = [](const AdjacentPair& p) {
                  return std::pair<int, int>{std::min(p.first.crossing, p.second.crossing),
                                             std::max(p.first.crossing, p.second.crossing)};
                };
                std::pair<int, int> want_xy{std::min(t[0], t[1]), std::max(t[0], t[1])};
                std::pair<int, int> want_xz{std::min(t[0], t[2]), std::max(t[0], t[2])};
                std::pair<int, int> want_yz{std::min(t[1], t[2]), std::max(t[1], t[2])};
                const AdjacentPair* slot[3] = {nullptr, nullptr, nullptr};
                for (const AdjacentPair* p : {&p1, &p2, &p3}) {
                  if (set_of(*p) == want_xy) slot[0] = p;
                  else if (set_of(*p) == want_xz) slot[1] = p;
                  else if (set_of(*p) == want_yz) slot[2] = p;
                }
                if (!slot[0] || !slot[1] || !slot[2]) continue;
                if (r3_matches(code, *slot[0], *slot[1], *slot[2], t[0], t[1], t[2])) {
                  std::array<SemiArc, 3> key = {SemiArc{p1.comp, p1.pos},
                                                SemiArc{p2.comp, p2.pos},
                                                SemiArc{p3.comp, p3.pos}};
                  std::sort(key.begin(), key.end());
                  if (found.insert(key).second) {
                    MoveSite site;
                    site.kind = MoveKind::R3;
                    site.triple = key;
                    out.push_back(site);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<MoveSite> enumerate_sites(const GaussCode& code, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1_add: {
      for (const auto& gap : semi_arcs(code)) {
        for (bool over_first : {true, false}) {
          for (int sign : {+1, -1}) {
            MoveSite s;
            s.kind = kind;
            s.gap = gap;
            s.over_first = over_first;
            s.sign = sign;
            out.push_back(s);
          }
        }
      }
      break;
    }
    case MoveKind::R1_remove: {
      for (const auto& [id, sign] : code.crossings) {
        auto [oc, op] = code.find_passage(id, Role::Over);
        auto [uc, up] = code.find_passage(id, Role::Under);
        if (oc != uc) continue;
        int k = comp_size(code, oc);
        if ((op + 1) % k == up || (up + 1) % k == op) {
          MoveSite s;
          s.kind = kind;
          s.crossing = id;
          out.push_back(s);
        }
      }
      break;
    }
    case MoveKind::R2_add: {
      auto gaps = semi_arcs(code);
      for (const auto& g1 : gaps) {
        for (const auto& g2 : gaps) {
          for (bool parallel : {true, false}) {
            for (int sign : {+1, -1}) {
              MoveSite s;
              s.kind = kind;
              s.gap = g1;
              s.gap2 = g2;
              s.parallel = parallel;
              s.sign = sign;
              out.push_back(s);
            }
          }
        }
      }
      break;
    }
    case MoveKind::R2_remove: {
      auto pairs = adjacent_pairs(code);
      std::set<std::pair<int, int>> seen;
      for (const auto& over : pairs) {
        if (over.first.role != Role::Over || over.second.role != Role::Over) continue;
        int c = over.first.crossing, d = over.second.crossing;
        if (c == d) continue;
        if (code.crossings.at(c) == code.crossings.at(d)) continue;
        for (const auto& under : pairs) {
          if (under.first.role != Role::Under || under.second.role != Role::Under) continue;
          int e = under.first.crossing, f = under.second.crossing;
          if (std::minmax(e, f) != std::minmax(c, d)) continue;
          auto key = std::minmax(c, d);
          if (seen.insert(key).second) {
            MoveSite s;
            s.kind = kind;
            s.crossing = key.first;
            s.crossing2 = key.second;
            out.push_back(s);
          }
        }
      }
      break;
    }
    case MoveKind::R3:
      return r3_sites(code);
    case MoveKind::F_forbidden: {
      for (const auto& p : adjacent_pairs(code)) {
        if (p.first.role == Role::Over && p.second.role == Role::Over &&
            p.first.crossing != p.second.crossing) {
          MoveSite s;
          s.kind = kind;
          s.gap = {p.comp, p.pos};
          out.push_back(s);
        }
      }
      break;
    }
  }
  return out;
}

namespace {

void erase_passages(GaussCode& code, std::vector<std::pair<int, int>> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<>());
  for (const auto& [comp, pos] : positions) {
    code.components[comp].erase(code.components[comp].begin() + pos);
  }
}

void swap_adjacent(GaussCode& code, const SemiArc& at) {
  auto& comp = code.components[at.component];
  int k = static_cast<int>(comp.size());
  std::swap(comp[at.position], comp[(at.position + 1) % k]);
}

}  // namespace

namespace {

// Applies a site assumed to come from enumerate_sites on this exact code.
GaussCode apply_move_unchecked(const GaussCode& code, const MoveSite& site) {
  GaussCode out = code;
  switch (site.kind) {
    case MoveKind::R1_add: {
      int id = next_crossing_id(out);
      Passage over{id, Role::Over}, under{id, Role::Under};
      int at = gap_insert_index(out, site.gap);
      if (site.over_first) {
        insert_pair_at(out, site.gap.component, at, over, under);
      } else {
        insert_pair_at(out, site.gap.component, at, under, over);
      }
      out.crossings[id] = site.sign;
      break;
    }
    case MoveKind::R1_remove: {
      auto [oc, op] = out.find_passage(site.crossing, Role::Over);
      auto [uc, up] = out.find_passage(site.crossing, Role::Under);
      erase_passages(out, {{oc, op}, {uc, up}});
      out.crossings.erase(site.crossing);
      break;
    }
    case MoveKind::R2_add: {
      int c = next_crossing_id(out);
      int d = c + 1;
      Passage oc{c, Role::Over}, od{d, Role::Over};
      Passage uc{c, Role::Under}, ud{d, Role::Under};
      Passage u1 = site.parallel ? uc : ud;
      Passage u2 = site.parallel ? ud : uc;
      int at1 = gap_insert_index(out, site.gap);
      if (site.gap.component == site.gap2.component) {
        int at2 = gap_insert_index(out, site.gap2);
        if (at2 >= at1) at2 += 2;  // the over pair shifts the later gap
        insert_pair_at(out, site.gap.component, at1, oc, od);
        insert_pair_at(out, site.gap.component, at2, u1, u2);
      } else {
        insert_pair_at(out, site.gap.component, at1, oc, od);
        insert_pair_at(out, site.gap2.component, gap_insert_index(out, site.gap2), u1, u2);
      }
      out.crossings[c] = site.sign;
      out.crossings[d] = -site.sign;
      break;
    }
    case MoveKind::R2_remove: {
      auto [oc1, op1] = out.find_passage(site.crossing, Role::Over);
      auto [uc1, up1] = out.find_passage(site.crossing, Role::Under);
      auto [oc2, op2] = out.find_passage(site.crossing2, Role::Over);
      auto [uc2, up2] = out.find_passage(site.crossing2, Role::Under);
      erase_passages(out, {{oc1, op1}, {uc1, up1}, {oc2, op2}, {uc2, up2}});
      out.crossings.erase(site.crossing);
      out.crossings.erase(site.crossing2);
      break;
    }
    case MoveKind::R3: {
      for (const auto& at : site.triple) swap_adjacent(out, at);
      break;
    }
    case MoveKind::F_forbidden: {
      swap_adjacent(out, site.gap);
      break;
    }
  }
  return out;
}

}  // namespace

GaussCode apply_move(const GaussCode& code, const MoveSite& site) {
  auto sites = enumerate_sites(code, site.kind);
  if (std::find(sites.begin(), sites.end(), site) == sites.end()) {
    throw MoveError(move_kind_name(site.kind) + " site '" + format_site(site) +
                    "' is not applicable");
  }
  GaussCode out = apply_move_unchecked(code, site);
  validate_code(out);
  return out;
}

std::vector<SemiArc> under_swap_sites(const GaussCode& code) {
  std::vector<SemiArc> out;
  for (const auto& p : adjacent_pairs(code)) {
    if (p.first.role == Role::Under && p.second.role == Role::Under &&
        p.first.crossing != p.second.crossing) {
      out.push_back({p.comp, p.pos});
    }
  }
  return out;
}

GaussCode apply_under_swap(const GaussCode& code, const SemiArc& at) {
  auto sites = under_swap_sites(code);
  if (std::find(sites.begin(), sites.end(), at) == sites.end()) {
    throw MoveError("under-swap site is not applicable");
  }
  GaussCode out = code;
  swap_adjacent(out, at);
  validate_code(out);
  return out;
}

namespace {

// Serialize one candidate (component order + rotations) with ids renamed in
// appearance order; used for the lexicographic minimum.
std::string candidate_string(const GaussCode& code, const std::vector<int>& order,
                             const std::vector<int>& rotation) {
  std::string out;
  std::map<int, int> relabel;
  for (size_t oi = 0; oi < order.size(); ++oi) {
    if (oi) out += " / ";
    int i = order[oi];
    const auto& comp = code.components[i];
    int k = static_cast<int>(comp.size());
    if (k == 0) {
      out += "0";
      continue;
    }
    for (int j = 0; j < k; ++j) {
      const Passage& pass = comp[(rotation[oi] + j) % k];
      auto [it, fresh] = relabel.try_emplace(pass.crossing,
                                             static_cast<int>(relabel.size()) + 1);
      if (j) out += ' ';
      out += pass.role == Role::Over ? 'O' : 'U';
      out += std::to_string(it->second);
      out += code.crossings.at(pass.crossing) > 0 ? '+' : '-';
    }
  }
  return out;
}

}  // namespace

std::string canonical_string(const GaussCode& code) {
  int m = static_cast<int>(code.components.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  bool first = true;
  do {
    // Rotation vector over the reordered components.
    std::vector<int> rot(m, 0);
    while (true) {
      std::string cand = candidate_string(code, order, rot);
      if (first || cand < best) {
        best = std::move(cand);
        first = false;
      }
      int i = 0;
      for (; i < m; ++i) {
        int k = comp_size(code, order[i]);
        if (k == 0) continue;
        if (++rot[i] < k) break;
        rot[i] = 0;
      }
      if (i == m) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

GaussCode canonical_form(const GaussCode& code) { return parse_code(canonical_string(code)); }

namespace {

struct SearchNode {
  std::string parent;  // canonical string; empty for roots
  MoveSite site;       // move applied to parent to reach this node
};

MoveKind inverse_kind(MoveKind k) {
  switch (k) {
    case MoveKind::R1_add: return MoveKind::R1_remove;
    case MoveKind::R1_remove: return MoveKind::R1_add;
    case MoveKind::R2_add: return MoveKind::R2_remove;
    case MoveKind::R2_remove: return MoveKind::R2_add;
    case MoveKind::R3: return MoveKind::R3;
    case MoveKind::F_forbidden: return MoveKind::F_forbidden;
  }
  throw MoveError("bad kind");
}

// A site on `from` whose application lands on `to` (canonically).
MoveSite find_inverse_site(const std::string& from, const std::string& to, MoveKind kind) {
  GaussCode code = parse_code(from);
  for (const auto& site : enumerate_sites(code, kind)) {
    if (canonical_string(apply_move_unchecked(code, site)) == to) return site;
  }
  throw MoveError("could not invert a search edge");
}

}  // namespace

SearchResult search_equivalence(const GaussCode& a, const GaussCode& b,
                                const std::vector<MoveKind>& moves, int max_crossings,
                                std::uint64_t max_steps) {
  SearchResult result;
  std::string start = canonical_string(a);
  std::string goal = canonical_string(b);

  if (start == goal) {
    result.found = true;
    result.states = {start};
    return result;
  }

  // side 0 grows from `start`, side 1 from `goal`.
  std::unordered_map<std::string, SearchNode> visited[2];
  std::deque<std::string> frontier[2];
  visited[0][start] = {};
  visited[1][goal] = {};
  frontier[0].push_back(start);
  frontier[1].push_back(goal);

  std::string meet;
  int meet_child_side = -1;

  while (meet_child_side < 0 && !frontier[0].empty() && !frontier[1].empty() &&
         result.steps < max_steps) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::deque<std::string> next;
    for (const auto& node : frontier[side]) {
      GaussCode code = parse_code(node);
      for (MoveKind kind : moves) {
        for (const auto& site : enumerate_sites(code, kind)) {
          if (++result.steps > max_steps) break;
          GaussCode child = apply_move_unchecked(code, site);
          if (static_cast<int>(child.crossings.size()) > max_crossings) continue;
          std::string key = canonical_string(child);
          if (visited[side].count(key)) continue;
          visited[side][key] = {node, site};
          next.push_back(key);
          if (visited[1 - side].count(key)) {
            meet = key;
            meet_child_side = side;
            break;
          }
        }
        if (meet_child_side >= 0 || result.steps > max_steps) break;
      }
      if (meet_child_side >= 0 || result.steps > max_steps) break;
    }
    if (meet_child_side >= 0) break;
    frontier[side] = std::move(next);
  }

  if (meet_child_side < 0) return result;  // exhausted within bounds

  // Forward half: start -> meet.
  std::vector<std::pair<std::string, MoveSite>> forward;  // (state, site leading to it)
  for (std::string cur = meet; cur != start;) {
    const SearchNode& n = visited[0].at(cur);
    forward.push_back({cur, n.site});
    cur = n.parent;
  }
  std::reverse(forward.begin(), forward.end());

  result.states.push_back(start);
  for (const auto& [state, site] : forward) {
    result.sites.push_back(site);
    result.states.push_back(state);
  }

  // Backward half: meet -> goal, inverting the goal-side tree edges.
  for (std::string cur = meet; cur != goal;) {
    const SearchNode& n = visited[1].at(cur);
    MoveSite inv = find_inverse_site(cur, n.parent, inverse_kind(n.site.kind));
    result.sites.push_back(inv);
    result.states.push_back(n.parent);
    cur = n.parent;
  }

  // Replay to verify.
  GaussCode cur = parse_code(start);
  for (size_t i = 0; i < result.sites.size(); ++i) {
    cur = canonical_form(apply_move(cur, result.sites[i]));
    if (canonical_string(cur) != result.states[i + 1]) {
      throw MoveError("search produced a path that does not replay");
    }
  }
  if (canonical_string(cur) != goal) throw MoveError("search path does not reach the goal");

  result.found = true;
  return result;
}

std::string format_site(const MoveSite& site) {
  std::ostringstream out;
  auto gap = [](const SemiArc& s) {
    return std::to_string(s.component) + "." + std::to_string(s.position);
  };
  switch (site.kind) {
    case MoveKind::R1_add:
      out << "r1add:" << gap(site.gap) << ":" << (site.over_first ? "OU" : "UO") << ":"
          << (site.sign > 0 ? "+" : "-");
      break;
    case MoveKind::R1_remove:
      out << "r1rm:" << site.crossing;
      break;
    case MoveKind::R2_add:
      out << "r2add:" << gap(site.gap) << ":" << gap(site.gap2) << ":"
          << (site.parallel ? "par" : "anti") << ":" << (site.sign > 0 ? "+" : "-");
      break;
    case MoveKind::R2_remove:
      out << "r2rm:" << site.crossing << ":" << site.crossing2;
      break;
    case MoveKind::R3:
      out << "r3:" << gap(site.triple[0]) << ":" << gap(site.triple[1]) << ":"
          << gap(site.triple[2]);
      break;
    case MoveKind::F_forbidden:
      out << "f:" << gap(site.gap);
      break;
  }
  return out.str();
}

MoveSite parse_site(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  auto gap = [](const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) throw MoveError("bad gap '" + s + "' (want comp.pos)");
    return SemiArc{std::stoi(s.substr(0, dot)), std::stoi(s.substr(dot + 1))};
  };
  auto sign = [](const std::string& s) {
    if (s == "+") return +1;
    if (s == "-") return -1;
    throw MoveError("bad sign '" + s + "'");
  };

  MoveSite site;
  const std::string& kind = parts[0];
  if (kind == "r1add" && parts.size() == 4) {
    site.kind = MoveKind::R1_add;
    site.gap = gap(parts[1]);
    if (parts[2] != "OU" && parts[2] != "UO") throw MoveError("bad kink order");
    site.over_first = parts[2] == "OU";
    site.sign = sign(parts[3]);
  } else if (kind == "r1rm" && parts.size() == 2) {
    site.kind = MoveKind::R1_remove;
    site.crossing = std::stoi(parts[1]);
  } else if (kind == "r2add" && parts.size() == 5) {
    site.kind = MoveKind::R2_add;
    site.gap = gap(parts[1]);
    site.gap2 = gap(parts[2]);
    if (parts[3] != "par" && parts[3] != "anti") throw MoveError("bad direction");
    site.parallel = parts[3] == "par";
    site.sign = sign(parts[4]);
  } else if (kind == "r2rm" && parts.size() == 3) {
    site.kind = MoveKind::R2_remove;
    site.crossing = std::stoi(parts[1]);
    site.crossing2 = std::stoi(parts[2]);
  } else if (kind == "r3" && parts.size() == 4) {
    site.kind = MoveKind::R3;
    site.triple = {gap(parts[1]), gap(parts[2]), gap(parts[3])};
  } else if (kind == "f" && parts.size() == 2) {
    site.kind = MoveKind::F_forbidden;
    site.gap = gap(parts[1]);
  } else {
    throw MoveError("bad site spec '" + text + "'");
  }
  return site;
}

}  // namespace vlink
