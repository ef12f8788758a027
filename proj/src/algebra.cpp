#include "vlink/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace vlink {

namespace {

bool table_shape_ok(const OpTable& t, int n) {
  if (static_cast<int>(t.size()) != n) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row) {
      if (v < 0 || v >= n) return false;
    }
  }
  return true;
}

// Is x -> table[x][b] a bijection for every fixed b?
bool columns_bijective(const OpTable& t, int n, int* bad_b = nullptr) {
  for (int b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (int a = 0; a < n; ++a) {
      if (hit[t[a][b]]) {
        if (bad_b) *bad_b = b;
        return false;
      }
      hit[t[a][b]] = true;
    }
  }
  return true;
}

std::string tuple_detail(std::initializer_list<std::pair<const char*, int>> vals) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : vals) {
    if (!first) out << ' ';
    out << k << '=' << v;
    first = false;
  }
  return out.str();
}

}  // namespace

std::vector<AxiomReport> group_axiom_reports(const FiniteGroup& g) {
  std::vector<AxiomReport> reports;
  int n = g.order;
  auto fail = [&](std::string axiom, std::string detail) {
    reports.push_back({std::move(axiom), false, std::move(detail)});
  };
  if (!table_shape_ok(g.mul, n)) {
    fail("table-shape", "multiplication table is not square over 0..n-1");
    return reports;
  }
  bool assoc = true;
  for (int a = 0; a < n && assoc; ++a) {
    for (int b = 0; b < n && assoc; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) {
          fail("associativity", tuple_detail({{"a", a}, {"b", b}, {"c", c}}));
          assoc = false;
          break;
        }
      }
    }
  }
  if (g.identity < 0 || g.identity >= n) {
    fail("identity", "identity index out of range");
  } else {
    for (int a = 0; a < n; ++a) {
      if (g.mul[g.identity][a] != a || g.mul[a][g.identity] != a) {
        fail("identity", tuple_detail({{"a", a}}));
        break;
      }
    }
  }
  if (static_cast<int>(g.inverse.size()) != n) {
    fail("inverses", "inverse table size mismatch");
  } else {
    for (int a = 0; a < n; ++a) {
      if (g.mul[a][g.inverse[a]] != g.identity || g.mul[g.inverse[a]][a] != g.identity) {
        fail("inverses", tuple_detail({{"a", a}}));
        break;
      }
    }
  }
  if (reports.empty()) reports.push_back({"group-axioms", true, ""});
  return reports;
}

std::vector<AxiomReport> quandle_axiom_reports(const OpTable& star) {
  std::vector<AxiomReport> reports;
  int n = static_cast<int>(star.size());
  auto fail = [&](std::string axiom, std::string detail) {
    reports.push_back({std::move(axiom), false, std::move(detail)});
  };
  if (!table_shape_ok(star, n) || n == 0) {
    fail("table-shape", "operation table is not square over 0..n-1");
    return reports;
  }
  for (int a = 0; a < n; ++a) {
    if (star[a][a] != a) {
      fail("Q1-idempotent", tuple_detail({{"a", a}}));
      break;
    }
  }
  int bad_b = -1;
  if (!columns_bijective(star, n, &bad_b)) {
    fail("Q2-right-invertible", tuple_detail({{"b", bad_b}}));
  }
  bool distributive = true;
  for (int a = 0; a < n && distributive; ++a) {
    for (int b = 0; b < n && distributive; ++b) {
      for (int c = 0; c < n; ++c) {
        if (star[star[a][b]][c] != star[star[a][c]][star[b][c]]) {
          fail("Q3-self-distributive", tuple_detail({{"a", a}, {"b", b}, {"c", c}}));
          distributive = false;
          break;
        }
      }
    }
  }
  if (reports.empty()) reports.push_back({"quandle-axioms", true, ""});
  return reports;
}

std::vector<AxiomReport> biquandle_axiom_reports(const FiniteBiquandle& bq, bool weak) {
  std::vector<AxiomReport> reports;
  int n = bq.order;
  auto fail = [&](std::string axiom, std::string detail) {
    reports.push_back({std::move(axiom), false, std::move(detail)});
  };
  if (n == 0 || !table_shape_ok(bq.up, n) || !table_shape_ok(bq.down, n) ||
      !table_shape_ok(bq.upbar, n) || !table_shape_ok(bq.downbar, n)) {
    fail("table-shape", "all four tables must be square over 0..n-1");
    return reports;
  }
  auto U = [&](int a, int b) { return bq.up[a][b]; };
  auto D = [&](int a, int b) { return bq.down[a][b]; };
  auto Ub = [&](int a, int b) { return bq.upbar[a][b]; };
  auto Db = [&](int a, int b) { return bq.downbar[a][b]; };

  if (!weak) {
    struct {
      const char* name;
      const OpTable* t;
    } tables[] = {{"A1-invertible-up", &bq.up},
                  {"A1-invertible-down", &bq.down},
                  {"A1-invertible-upbar", &bq.upbar},
                  {"A1-invertible-downbar", &bq.downbar}};
    for (const auto& [name, t] : tables) {
      int bad_b = -1;
      if (!columns_bijective(*t, n, &bad_b)) fail(name, tuple_detail({{"b", bad_b}}));
    }
  }

  // A2: c = a_c iff a = c^a, and the barred twin.
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      if ((c == D(a, c)) != (a == U(c, a))) {
        fail("A2-fixed-point", tuple_detail({{"a", a}, {"c", c}}));
        a = n;
        break;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((b == Ub(a, b)) != (a == Db(b, a))) {
        fail("A2-fixed-point-bar", tuple_detail({{"a", a}, {"b", b}}));
        a = n;
        break;
      }
    }
  }

  // A3: the ten identities. 1-4 say the positive and negative crossing
  // switches invert each other; 5-10 are the Yang-Baxter components for the
  // positive and the barred switch.
  using Check2 = std::function<bool(int, int)>;
  struct Pair2 {
    const char* name;
    Check2 check;
  };
  const Pair2 two_var[] = {
      {"A3.1-switch-inverse", [&](int a, int b) { return Ub(U(a, b), D(b, a)) == a; }},
      {"A3.2-switch-inverse", [&](int a, int b) { return Db(D(b, a), U(a, b)) == b; }},
      {"A3.3-switch-inverse", [&](int a, int b) { return U(Ub(a, b), Db(b, a)) == a; }},
      {"A3.4-switch-inverse", [&](int a, int b) { return D(Db(b, a), Ub(a, b)) == b; }},
  };
  for (const auto& [name, check] : two_var) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!check(a, b)) {
          fail(name, tuple_detail({{"a", a}, {"b", b}}));
          ok = false;
          break;
        }
      }
    }
  }

  using Check3 = std::function<bool(int, int, int)>;
  struct Triple {
    const char* name;
    Check3 check;
  };
  const Triple three_var[] = {
      {"A3.5-yang-baxter-up",
       [&](int a, int b, int c) { return U(U(a, b), c) == U(U(a, D(c, b)), U(b, c)); }},
      {"A3.6-yang-baxter-down",
       [&](int a, int b, int c) { return D(D(c, b), a) == D(D(c, U(a, b)), D(b, a)); }},
      {"A3.7-yang-baxter-mixed",
       [&](int a, int b, int c) {
         return U(D(b, a), D(c, U(a, b))) == D(U(b, c), U(a, D(c, b)));
       }},
      {"A3.8-yang-baxter-mixed-bar",
       [&](int a, int b, int c) {
         return Ub(Db(b, a), Db(c, Ub(a, b))) == Db(Ub(b, c), Ub(a, Db(c, b)));
       }},
      {"A3.9-yang-baxter-upbar",
       [&](int a, int b, int c) { return Ub(Ub(a, b), c) == Ub(Ub(a, Db(c, b)), Ub(b, c)); }},
      {"A3.10-yang-baxter-downbar",
       [&](int a, int b, int c) {
         return Db(Db(c, b), a) == Db(Db(c, Ub(a, b)), Db(b, a));
       }},
  };
  for (const auto& [name, check] : three_var) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        for (int c = 0; c < n; ++c) {
          if (!check(a, b, c)) {
            fail(name, tuple_detail({{"a", a}, {"b", b}, {"c", c}}));
            ok = false;
            break;
          }
        }
      }
    }
  }

  if (reports.empty()) reports.push_back({"biquandle-axioms", true, ""});
  return reports;
}

bool validate_group(const FiniteGroup& g) {
  auto reports = group_axiom_reports(g);
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

bool validate_quandle(const OpTable& star) {
  auto reports = quandle_axiom_reports(star);
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

bool validate_biquandle(const FiniteBiquandle& b, bool weak) {
  auto reports = biquandle_axiom_reports(b, weak);
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

FiniteGroup make_group(std::string name, OpTable mul) {
  FiniteGroup g;
  g.name = std::move(name);
  g.order = static_cast<int>(mul.size());
  g.mul = std::move(mul);
  if (!table_shape_ok(g.mul, g.order) || g.order == 0) {
    throw AlgebraError("group '" + g.name + "': bad table shape");
  }
  g.identity = -1;
  for (int e = 0; e < g.order; ++e) {
    bool is_id = true;
    for (int a = 0; a < g.order; ++a) {
      if (g.mul[e][a] != a || g.mul[a][e] != a) {
        is_id = false;
        break;
      }
    }
    if (is_id) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw AlgebraError("group '" + g.name + "': no identity");
  g.inverse.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] < 0) throw AlgebraError("group '" + g.name + "': missing inverse");
  }
  for (const auto& r : group_axiom_reports(g)) {
    if (!r.holds) throw AlgebraError("group '" + g.name + "': " + r.axiom + " fails: " + r.detail);
  }
  return g;
}

FiniteQuandle make_quandle(std::string name, OpTable star) {
  FiniteQuandle q;
  q.name = std::move(name);
  q.order = static_cast<int>(star.size());
  q.star = std::move(star);
  for (const auto& r : quandle_axiom_reports(q.star)) {
    if (!r.holds) {
      throw AlgebraError("quandle '" + q.name + "': " + r.axiom + " fails: " + r.detail);
    }
  }
  q.star_inv.assign(q.order, std::vector<int>(q.order, -1));
  for (int a = 0; a < q.order; ++a) {
    for (int b = 0; b < q.order; ++b) q.star_inv[q.star[a][b]][b] = a;
  }
  return q;
}

FiniteQuandle dihedral_quandle(int n) {
  if (n < 1) throw AlgebraError("dihedral quandle needs n >= 1");
  OpTable star(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) star[a][b] = ((2 * b - a) % n + n) % n;
  }
  return make_quandle("dihedral:" + std::to_string(n), std::move(star));
}

FiniteQuandle conjugation_quandle(const FiniteGroup& g) {
  OpTable star(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) star[a][b] = g.op(g.op(g.inv(b), a), b);
  }
  return make_quandle("conj:" + g.name, std::move(star));
}

FiniteQuandle coset_quandle(const SubgroupWithCenterElement& ctx) {
  const FiniteGroup& g = *ctx.group;
  const auto& p = ctx.subgroup;
  int m = ctx.center_element;

  std::vector<bool> in_p(g.order, false);
  for (int x : p) {
    if (x < 0 || x >= g.order) throw AlgebraError("coset quandle: subgroup element out of range");
    in_p[x] = true;
  }
  if (!in_p[g.identity]) throw AlgebraError("coset quandle: P does not contain the identity");
  for (int x : p) {
    if (!in_p[g.inv(x)]) throw AlgebraError("coset quandle: P is not closed under inverse");
    for (int y : p) {
      if (!in_p[g.op(x, y)]) throw AlgebraError("coset quandle: P is not closed under product");
    }
  }
  if (!in_p[m]) throw AlgebraError("coset quandle: m is not in P");
  for (int x : p) {
    if (g.op(m, x) != g.op(x, m)) {
      throw AlgebraError(
          "coset quandle: m is not central in P, so Pg^(Ph) = P(g h^-1 m h) "
          "would depend on the coset representative");
    }
  }

  // Right cosets Pg, represented by their smallest element.
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] != -1) continue;
    int rep_index = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : p) coset_of[g.op(h, x)] = rep_index;
  }

  int k = static_cast<int>(reps.size());
  OpTable star(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int gg = reps[i], hh = reps[j];
      star[i][j] = coset_of[g.op(g.op(gg, g.inv(hh)), g.op(m, hh))];
    }
  }
  return make_quandle("coset:" + g.name, std::move(star));
}

FiniteBiquandle quandle_to_biquandle(const FiniteQuandle& q) {
  FiniteBiquandle b;
  b.name = "promoted:" + q.name;
  b.order = q.order;
  b.up = q.star;
  b.upbar = q.star_inv;
  b.down.assign(q.order, std::vector<int>(q.order));
  b.downbar.assign(q.order, std::vector<int>(q.order));
  for (int a = 0; a < q.order; ++a) {
    for (int c = 0; c < q.order; ++c) b.down[a][c] = b.downbar[a][c] = a;
  }
  if (!validate_biquandle(b)) {
    throw AlgebraError("promotion of '" + q.name + "' failed the biquandle axioms");
  }
  return b;
}

namespace {

int mod_inverse(int a, int n) {
  int t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
  while (new_r != 0) {
    int q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) return -1;
  return ((t % n) + n) % n;
}

}  // namespace

FiniteBiquandle alexander_biquandle(int n, int s, int t) {
  if (n < 1) throw AlgebraError("alexander biquandle needs n >= 1");
  int s_inv = mod_inverse(s, n);
  int t_inv = mod_inverse(t, n);
  if (n > 1 && s_inv < 0) throw AlgebraError(std::to_string(s) + " is not a unit mod " + std::to_string(n));
  if (n > 1 && t_inv < 0) throw AlgebraError(std::to_string(t) + " is not a unit mod " + std::to_string(n));
  if (n == 1) s_inv = t_inv = 0;

  auto mod = [n](long long v) { return static_cast<int>(((v % n) + n) % n); };
  FiniteBiquandle b;
  b.name = "alexander:" + std::to_string(n) + ":" + std::to_string(s) + ":" + std::to_string(t);
  b.order = n;
  b.up.assign(n, std::vector<int>(n));
  b.down.assign(n, std::vector<int>(n));
  b.upbar.assign(n, std::vector<int>(n));
  b.downbar.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      b.up[a][c] = mod(1LL * t * a + (1LL - 1LL * s * t) * c);
      b.down[a][c] = mod(1LL * s * a);
      b.upbar[a][c] = mod(1LL * t_inv * a + (1LL - 1LL * s_inv * t_inv) * c);
      b.downbar[a][c] = mod(1LL * s_inv * a);
    }
  }
  if (!validate_biquandle(b)) {
    throw AlgebraError(b.name + " failed the biquandle axioms");
  }
  return b;
}

bool biquandles_isomorphic(const FiniteBiquandle& a, const FiniteBiquandle& b) {
  if (a.order != b.order) return false;
  int n = a.order;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto matches = [&](const OpTable& ta, const OpTable& tb) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (perm[ta[x][y]] != tb[perm[x]][perm[y]]) return false;
      }
    }
    return true;
  };
  do {
    if (matches(a.up, b.up) && matches(a.down, b.down) && matches(a.upbar, b.upbar) &&
        matches(a.downbar, b.downbar)) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<FiniteBiquandle> enumerate_biquandles(int order) {
  if (order < 1 || order > 3) {
    throw AlgebraError("enumerate_biquandles supports orders 1..3");
  }
  int n = order;

  // Tables whose columns are permutations, enumerated column by column.
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto tables_from_choice = [&](const std::vector<int>& choice) {
    OpTable t(n, std::vector<int>(n));
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) t[a][b] = perms[choice[b]][a];
    }
    return t;
  };

  int np = static_cast<int>(perms.size());
  std::vector<std::vector<int>> choices;
  std::vector<int> cur(n, 0);
  while (true) {
    choices.push_back(cur);
    int i = 0;
    while (i < n && ++cur[i] == np) cur[i++] = 0;
    if (i == n) break;
  }

  std::vector<FiniteBiquandle> found;
  for (const auto& uc : choices) {
    OpTable up = tables_from_choice(uc);
    for (const auto& dc : choices) {
      OpTable down = tables_from_choice(dc);

      // The barred tables are forced: axioms A3.1-A3.4 say the negative
      // switch is the inverse of S(a,b) = (b_a, a^b).
      bool bijective = true;
      OpTable upbar(n, std::vector<int>(n, -1));
      OpTable downbar(n, std::vector<int>(n, -1));
      for (int a = 0; a < n && bijective; ++a) {
        for (int b = 0; b < n; ++b) {
          int c = down[b][a], d = up[a][b];
          if (upbar[d][c] != -1) {
            bijective = false;
            break;
          }
          upbar[d][c] = a;
          downbar[c][d] = b;
        }
      }
      if (!bijective) continue;

      FiniteBiquandle cand;
      cand.order = n;
      cand.up = up;
      cand.down = down;
      cand.upbar = std::move(upbar);
      cand.downbar = std::move(downbar);
      if (!validate_biquandle(cand)) continue;

      bool fresh = true;
      for (const auto& known : found) {
        if (biquandles_isomorphic(cand, known)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        cand.name = "enum:" + std::to_string(n) + ":" + std::to_string(found.size());
        found.push_back(std::move(cand));
      }
    }
  }
  return found;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  OpTable mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return make_group("z" + std::to_string(n), std::move(mul));
}

FiniteGroup dihedral_group(int n) {
  // Elements r^i s^j, index i + n*j; s r s = r^-1.
  int order = 2 * n;
  auto idx = [n](int i, int j) { return ((i % n + n) % n) + n * (j & 1); };
  OpTable mul(order, std::vector<int>(order));
  for (int i1 = 0; i1 < n; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < n; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          mul[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
        }
      }
    }
  }
  return make_group("d" + std::to_string(n), std::move(mul));
}

FiniteGroup symmetric_group(int n) {
  auto perms = all_permutations(n);
  int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  OpTable mul(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> comp(n);  // (a b)(x) = a(b(x))
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      mul[a][b] = index.at(comp);
    }
  }
  return make_group("s" + std::to_string(n), std::move(mul));
}

FiniteGroup quaternion_group() {
  // Elements: 1, -1, i, -i, j, -j, k, -k as (axis, sign) with axis 0..3.
  auto enc = [](int axis, int neg) { return 2 * axis + neg; };
  OpTable mul(8, std::vector<int>(8));
  // axis products: table[a][b] = (axis, extra sign) for a*b, axes 1=i,2=j,3=k
  static const int axis_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_prod[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_prod[a][b]: 1 when the axis product carries a minus (i*i=-1, j*i=-k, ...)
  for (int a = 0; a < 4; ++a) {
    for (int sa = 0; sa < 2; ++sa) {
      for (int b = 0; b < 4; ++b) {
        for (int sb = 0; sb < 2; ++sb) {
          int axis = axis_prod[a][b];
          int neg = (sa ^ sb ^ sign_prod[a][b]) & 1;
          mul[enc(a, sa)][enc(b, sb)] = enc(axis, neg);
        }
      }
    }
  }
  return make_group("q8", std::move(mul));
}

FiniteGroup alternating_group_4() {
  auto perms = all_permutations(4);
  std::vector<std::vector<int>> even;
  for (const auto& p : perms) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    }
    if (inv % 2 == 0) even.push_back(p);
  }
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < even.size(); ++i) index[even[i]] = static_cast<int>(i);
  OpTable mul(even.size(), std::vector<int>(even.size()));
  for (size_t a = 0; a < even.size(); ++a) {
    for (size_t b = 0; b < even.size(); ++b) {
      std::vector<int> comp(4);
      for (int x = 0; x < 4; ++x) comp[x] = even[a][even[b][x]];
      mul[a][b] = index.at(comp);
    }
  }
  return make_group("a4", std::move(mul));
}

std::vector<FiniteGroup> builtin_groups(int max_order) {
  std::vector<FiniteGroup> all;
  for (int n = 1; n <= 12; ++n) all.push_back(cyclic_group(n));
  for (int n = 3; n <= 6; ++n) all.push_back(dihedral_group(n));
  all.push_back(symmetric_group(3));
  all.push_back(quaternion_group());
  all.push_back(alternating_group_4());
  all.push_back(symmetric_group(4));
  std::vector<FiniteGroup> out;
  for (auto& g : all) {
    if (g.order <= max_order) out.push_back(std::move(g));
  }
  return out;
}

namespace {

OpTable read_table(std::istringstream& in, int n, const char* what) {
  OpTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!(in >> t[a][b])) throw AlgebraError(std::string("table file truncated in ") + what);
    }
  }
  return t;
}

std::string write_table(const OpTable& t) {
  std::ostringstream out;
  for (const auto& row : t) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace

ParsedTable parse_table(const std::string& text, bool validate) {
  std::istringstream in(text);
  std::string kind;
  int n = 0;
  if (!(in >> kind >> n) || n < 1) throw AlgebraError("table file needs a 'kind order' header");
  ParsedTable out{};
  if (kind == "group") {
    out.kind = TableKind::Group;
    OpTable mul = read_table(in, n, "mul");
    if (validate) {
      out.group = make_group("file", std::move(mul));
    } else {
      FiniteGroup g;
      g.name = "file";
      g.order = n;
      g.mul = std::move(mul);
      g.identity = 0;
      for (int e = 0; e < n; ++e) {
        bool is_id = true;
        for (int a = 0; a < n && is_id; ++a) is_id = g.mul[e][a] == a && g.mul[a][e] == a;
        if (is_id) {
          g.identity = e;
          break;
        }
      }
      g.inverse.assign(n, g.identity);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) {
            g.inverse[a] = b;
            break;
          }
        }
      }
      out.group = std::move(g);
    }
  } else if (kind == "quandle") {
    out.kind = TableKind::Quandle;
    OpTable star = read_table(in, n, "star");
    if (validate) {
      out.quandle = make_quandle("file", std::move(star));
    } else {
      FiniteQuandle q;
      q.name = "file";
      q.order = n;
      q.star = std::move(star);
      q.star_inv.assign(n, std::vector<int>(n, 0));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          int v = q.star[a][b];
          if (v >= 0 && v < n) q.star_inv[v][b] = a;
        }
      }
      out.quandle = std::move(q);
    }
  } else if (kind == "biquandle") {
    out.kind = TableKind::Biquandle;
    FiniteBiquandle b;
    b.name = "file";
    b.order = n;
    b.up = read_table(in, n, "up");
    b.down = read_table(in, n, "down");
    b.upbar = read_table(in, n, "upbar");
    b.downbar = read_table(in, n, "downbar");
    if (validate) {
      for (const auto& r : biquandle_axiom_reports(b)) {
        if (!r.holds) throw AlgebraError("biquandle table: " + r.axiom + " fails: " + r.detail);
      }
    }
    out.biquandle = std::move(b);
  } else {
    throw AlgebraError("unknown table kind '" + kind + "'");
  }
  return out;
}

std::string serialize_group(const FiniteGroup& g) {
  return "group " + std::to_string(g.order) + "\n" + write_table(g.mul);
}

std::string serialize_quandle(const FiniteQuandle& q) {
  return "quandle " + std::to_string(q.order) + "\n" + write_table(q.star);
}

std::string serialize_biquandle(const FiniteBiquandle& b) {
  return "biquandle " + std::to_string(b.order) + "\n" + write_table(b.up) +
         write_table(b.down) + write_table(b.upbar) + write_table(b.downbar);
}

}  // namespace vlink
