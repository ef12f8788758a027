// Independent reference implementations used to freeze expected values.
// Everything here deliberately avoids the library's computation paths:
// counting is plain full enumeration, and the genus oracle walks band sides
// with its own rotation bookkeeping.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "vlink/gauss_code.hpp"
#include "vlink/invariants.hpp"
#include "vlink/presentation.hpp"

namespace vlink_test {

// Full n^g enumeration, every relation checked on every assignment.
inline vlink::Count naive_count_colorings(const vlink::Presentation& p,
                                          const vlink::ColoringTarget& target) {
  using namespace vlink;
  int n = target.order();
  int g = static_cast<int>(p.generators.size());

  std::function<int(const Term&, const std::vector<int>&)> eval =
      [&](const Term& t, const std::vector<int>& a) -> int {
    switch (t.op) {
      case Op::Gen: return a[t.gen];
      case Op::One: return target.group->identity;
      case Op::Mul: return target.group->op(eval(t.args[0], a), eval(t.args[1], a));
      case Op::Inv: return target.group->inv(eval(t.args[0], a));
      case Op::QUp:
        return target.theory == Theory::Quandle
                   ? target.quandle->up(eval(t.args[0], a), eval(t.args[1], a))
                   : target.biquandle->up[eval(t.args[0], a)][eval(t.args[1], a)];
      case Op::QUpBar:
        return target.theory == Theory::Quandle
                   ? target.quandle->upbar(eval(t.args[0], a), eval(t.args[1], a))
                   : target.biquandle->upbar[eval(t.args[0], a)][eval(t.args[1], a)];
      case Op::BUp: return target.biquandle->up[eval(t.args[0], a)][eval(t.args[1], a)];
      case Op::BDown: return target.biquandle->down[eval(t.args[0], a)][eval(t.args[1], a)];
      case Op::BUpBar: return target.biquandle->upbar[eval(t.args[0], a)][eval(t.args[1], a)];
      case Op::BDownBar: return target.biquandle->downbar[eval(t.args[0], a)][eval(t.args[1], a)];
    }
    return -1;
  };

  std::vector<int> assign(g, 0);
  vlink::Count count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relations) {
      if (eval(r.lhs, assign) != eval(r.rhs, assign)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < g && ++assign[i] == n) assign[i++] = 0;
    if (i == g) break;
  }
  return count;
}

// Boundary-circle count of the band surface, by walking band sides from
// corner to corner (clockwise port steps; the face count of a ribbon graph
// is the same for either rotation sense of the walk).
struct PortRef {
  int crossing;
  int port;  // 0 over-out, 1 under-out, 2 over-in, 3 under-in
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

inline int band_walk_boundary_circles(const vlink::GaussCode& code) {
  using namespace vlink;

  std::vector<std::pair<PortRef, PortRef>> bands;  // tail, head per semi-arc
  for (int i = 0; i < static_cast<int>(code.components.size()); ++i) {
    const auto& comp = code.components[i];
    int k = static_cast<int>(comp.size());
    for (int p = 0; p < k; ++p) {
      const Passage& from = comp[p];
      const Passage& to = comp[(p + 1) % k];
      bands.push_back({{from.crossing, from.role == Role::Over ? 0 : 1},
                       {to.crossing, to.role == Role::Over ? 2 : 3}});
    }
  }

  // Counterclockwise port cycles around a crossing disk.
  auto ccw_next = [&](const PortRef& at) {
    static const int pos[4] = {1, 2, 3, 0};  // over-out -> under-out -> over-in -> under-in
    static const int neg[4] = {3, 0, 1, 2};  // over-out -> under-in -> over-in -> under-out
    int sign = code.crossings.at(at.crossing);
    return PortRef{at.crossing, sign > 0 ? pos[at.port] : neg[at.port]};
  };
  // Walking the boundary: cross the corner from this port to the clockwise
  // neighbour, i.e. the port whose ccw_next is this one.
  auto cw_next = [&](const PortRef& at) {
    for (int q = 0; q < 4; ++q) {
      PortRef cand{at.crossing, q};
      if (ccw_next(cand) == at) return cand;
    }
    return at;
  };

  std::map<PortRef, std::pair<int, bool>> band_at;  // port -> (band, leaves_here)
  for (int b = 0; b < static_cast<int>(bands.size()); ++b) {
    band_at[bands[b].first] = {b, true};
    band_at[bands[b].second] = {b, false};
  }

  // A walk state: (band, direction). Travel the band, land on a port, step
  // one corner clockwise, travel the band attached there away from the disk.
  std::set<std::pair<int, bool>> used;
  int circles = 0;
  for (int b = 0; b < static_cast<int>(bands.size()); ++b) {
    for (bool dir : {true, false}) {
      if (used.count({b, dir})) continue;
      int cur = b;
      bool cur_dir = dir;
      while (!used.count({cur, cur_dir})) {
        used.insert({cur, cur_dir});
        PortRef land = cur_dir ? bands[cur].second : bands[cur].first;
        PortRef corner = cw_next(land);
        auto [next_band, leaves] = band_at.at(corner);
        cur = next_band;
        cur_dir = leaves;  // leaving a tail means traveling tail -> head
      }
      ++circles;
    }
  }
  // Each geometric boundary circle was traced once; the walk above traces
  // each circle exactly once because states are (band, direction) and every
  // state belongs to one circle.
  return circles;
}

// Euler-characteristic genus built on the band walk, with its own
// piece decomposition.
inline int oracle_genus(const vlink::GaussCode& code) {
  using namespace vlink;
  std::map<int, int> parent;  // crossing -> representative
  for (const auto& [id, sign] : code.crossings) parent[id] = id;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& comp : code.components) {
    for (size_t i = 1; i < comp.size(); ++i) {
      parent[find(comp[0].crossing)] = find(comp[i].crossing);
    }
  }

  std::set<int> pieces;
  for (const auto& [id, sign] : code.crossings) pieces.insert(find(id));

  int total = 0;
  for (int pc : pieces) {
    GaussCode sub;
    for (const auto& comp : code.components) {
      if (!comp.empty() && find(comp[0].crossing) == pc) sub.components.push_back(comp);
    }
    for (const auto& [id, sign] : code.crossings) {
      if (find(id) == pc) sub.crossings[id] = sign;
    }
    int v = static_cast<int>(sub.crossings.size());
    int e = 0;
    for (const auto& comp : sub.components) e += static_cast<int>(comp.size());
    int f = band_walk_boundary_circles(sub);
    total += (2 - (v - e + f)) / 2;
  }
  return total;
}

// Seeded random valid codes: any placement of O/U passage pairs is a valid
// virtual link code.
struct RandomCodes {
  std::mt19937 rng;
  explicit RandomCodes(std::uint32_t seed) : rng(seed) {}

  vlink::GaussCode next(int max_crossings, int max_components = 2) {
    using namespace vlink;
    std::uniform_int_distribution<int> nc(0, max_crossings);
    std::uniform_int_distribution<int> mc(1, max_components);
    int n = nc(rng);
    int m = mc(rng);
    std::vector<Passage> all;
    GaussCode code;
    for (int id = 1; id <= n; ++id) {
      all.push_back({id, Role::Over});
      all.push_back({id, Role::Under});
      code.crossings[id] = rng() % 2 ? 1 : -1;
    }
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> cut;  // component boundaries
    for (int i = 1; i < m; ++i) {
      cut.push_back(static_cast<int>(rng() % (all.size() + 1)));
    }
    cut.push_back(static_cast<int>(all.size()));
    std::sort(cut.begin(), cut.end());
    int from = 0;
    for (int to : cut) {
      code.components.emplace_back(all.begin() + from, all.begin() + to);
      from = to;
    }
    if (code.components.empty()) code.components.emplace_back();
    return code;
  }
};

inline std::uint32_t test_seed() {
  if (const char* env = std::getenv("VLINK_SEED")) {
    return static_cast<std::uint32_t>(std::stoul(env));
  }
  return 20250810;
}

}  // namespace vlink_test
