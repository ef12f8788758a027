#include "vlink/invariants.hpp"

#include <algorithm>
#include <functional>

namespace vlink {

int ColoringTarget::order() const {
  switch (theory) {
    case Theory::Group: return group->order;
    case Theory::Quandle: return quandle->order;
    case Theory::Biquandle: return biquandle->order;
  }
  return 0;
}

ColoringTarget ColoringTarget::of(FiniteGroup g) {
  ColoringTarget t;
  t.theory = Theory::Group;
  t.name = "group:" + g.name;
  t.group = std::move(g);
  return t;
}

ColoringTarget ColoringTarget::of(FiniteQuandle q) {
  ColoringTarget t;
  t.theory = Theory::Quandle;
  t.name = q.name;
  t.quandle = std::move(q);
  return t;
}

ColoringTarget ColoringTarget::of(FiniteBiquandle b) {
  ColoringTarget t;
  t.theory = Theory::Biquandle;
  t.name = b.name;
  t.biquandle = std::move(b);
  return t;
}

namespace {

// Term evaluator against a target, with quandle ops accepted by biquandle
// targets (promotion reading).
struct Evaluator {
  const ColoringTarget& target;

  int eval(const Term& t, const std::vector<int>& assign) const {
    switch (t.op) {
      case Op::Gen:
        return assign[t.gen];
      case Op::One:
        if (target.theory != Theory::Group) break;
        return target.group->identity;
      case Op::Mul:
        if (target.theory != Theory::Group) break;
        return target.group->op(eval(t.args[0], assign), eval(t.args[1], assign));
      case Op::Inv:
        if (target.theory != Theory::Group) break;
        return target.group->inv(eval(t.args[0], assign));
      case Op::QUp:
        if (target.theory == Theory::Quandle) {
          return target.quandle->up(eval(t.args[0], assign), eval(t.args[1], assign));
        }
        if (target.theory == Theory::Biquandle) {
          return target.biquandle->up[eval(t.args[0], assign)][eval(t.args[1], assign)];
        }
        break;
      case Op::QUpBar:
        if (target.theory == Theory::Quandle) {
          return target.quandle->upbar(eval(t.args[0], assign), eval(t.args[1], assign));
        }
        if (target.theory == Theory::Biquandle) {
          return target.biquandle->upbar[eval(t.args[0], assign)][eval(t.args[1], assign)];
        }
        break;
      case Op::BUp:
        if (target.theory != Theory::Biquandle) break;
        return target.biquandle->up[eval(t.args[0], assign)][eval(t.args[1], assign)];
      case Op::BDown:
        if (target.theory != Theory::Biquandle) break;
        return target.biquandle->down[eval(t.args[0], assign)][eval(t.args[1], assign)];
      case Op::BUpBar:
        if (target.theory != Theory::Biquandle) break;
        return target.biquandle->upbar[eval(t.args[0], assign)][eval(t.args[1], assign)];
      case Op::BDownBar:
        if (target.theory != Theory::Biquandle) break;
        return target.biquandle->downbar[eval(t.args[0], assign)][eval(t.args[1], assign)];
    }
    throw InvariantError("term does not fit the target's theory");
  }
};

void check_theories(const Presentation& p, const ColoringTarget& target) {
  bool ok = (p.theory == target.theory) ||
            (p.theory == Theory::Quandle && target.theory == Theory::Biquandle);
  if (!ok) {
    throw InvariantError("theory mismatch: " + theory_name(p.theory) + " presentation vs " +
                         theory_name(target.theory) + " target");
  }
}

int max_gen(const Term& t) {
  if (t.op == Op::Gen) return t.gen;
  int m = -1;
  for (const auto& a : t.args) m = std::max(m, max_gen(a));
  return m;
}

void backtrack(const Presentation& p, const ColoringTarget& target,
               const std::function<void(const std::vector<int>&)>& fn) {
  check_theories(p, target);
  int n = target.order();
  int g = static_cast<int>(p.generators.size());
  Evaluator ev{target};

  // Relations indexed by the last generator they mention.
  std::vector<std::vector<const Relation*>> trigger(g + 1);
  for (const auto& r : p.relations) {
    int m = std::max(max_gen(r.lhs), max_gen(r.rhs));
    trigger[m < 0 ? 0 : m].push_back(&r);
  }
  // Generator-free relations: either hold vacuously or kill everything.
  if (g == 0) {
    bool ok = true;
    std::vector<int> empty;
    for (const auto& r : p.relations) ok = ok && ev.eval(r.lhs, empty) == ev.eval(r.rhs, empty);
    if (ok) fn(empty);
    return;
  }

  std::vector<int> assign(g, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == g) {
      fn(assign);
      return;
    }
    for (int v = 0; v < n; ++v) {
      assign[k] = v;
      bool ok = true;
      for (const Relation* r : trigger[k]) {
        if (ev.eval(r->lhs, assign) != ev.eval(r->rhs, assign)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(k + 1);
    }
  };
  rec(0);

  // Relations mentioning no generator at all still have trigger slot 0; they
  // were checked above only when g == 0. Re-check here is unnecessary: a
  // constant relation evaluates identically for every assignment, and slot 0
  // includes it in the k == 0 pass.
}

// Closure of the assigned values under the target's operations.
bool generates_whole(const ColoringTarget& target, const std::vector<int>& assign) {
  int n = target.order();
  std::vector<bool> in(n, false);
  std::vector<int> stack;
  auto add = [&](int v) {
    if (!in[v]) {
      in[v] = true;
      stack.push_back(v);
    }
  };
  for (int v : assign) add(v);
  if (target.theory == Theory::Group) add(target.group->identity);

  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < n; ++b) {
      if (!in[b]) continue;
      switch (target.theory) {
        case Theory::Group:
          add(target.group->op(a, b));
          add(target.group->op(b, a));
          add(target.group->inv(a));
          break;
        case Theory::Quandle:
          add(target.quandle->up(a, b));
          add(target.quandle->up(b, a));
          add(target.quandle->upbar(a, b));
          add(target.quandle->upbar(b, a));
          break;
        case Theory::Biquandle:
          add(target.biquandle->up[a][b]);
          add(target.biquandle->up[b][a]);
          add(target.biquandle->down[a][b]);
          add(target.biquandle->down[b][a]);
          add(target.biquandle->upbar[a][b]);
          add(target.biquandle->upbar[b][a]);
          add(target.biquandle->downbar[a][b]);
          add(target.biquandle->downbar[b][a]);
          break;
      }
    }
  }
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

}  // namespace

void for_each_coloring(const Presentation& p, const ColoringTarget& target,
                       const std::function<void(const std::vector<int>&)>& fn) {
  backtrack(p, target, fn);
}

Count count_colorings(const Presentation& p, const ColoringTarget& target) {
  Count count = 0;
  backtrack(p, target, [&](const std::vector<int>&) { ++count; });
  return count;
}

Count count_surjective_colorings(const Presentation& p, const ColoringTarget& target) {
  Count count = 0;
  backtrack(p, target, [&](const std::vector<int>& assign) {
    if (generates_whole(target, assign)) ++count;
  });
  return count;
}

int abelianization_rank(const Presentation& p) {
  if (p.theory != Theory::Group) {
    throw InvariantError("abelianization rank needs a group presentation");
  }
  int g = static_cast<int>(p.generators.size());
  std::vector<std::vector<__int128>> rows;
  for (const auto& r : p.relations) {
    auto l = exponent_vector(r.lhs, g);
    auto rr = exponent_vector(r.rhs, g);
    std::vector<__int128> row(g);
    bool nonzero = false;
    for (int i = 0; i < g; ++i) {
      row[i] = static_cast<__int128>(l[i]) - rr[i];
      nonzero = nonzero || row[i] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }

  // Fraction-free elimination; the matrix rank over Q.
  int rank = 0;
  for (int col = 0; col < g && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      __int128 a = rows[rank][col], b = rows[r][col];
      for (int c = col; c < g; ++c) rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
      // Keep entries small.
      __int128 gcd = 0;
      auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
      for (int c = col; c < g; ++c) {
        __int128 x = abs128(rows[r][c]);
        while (x) {
          __int128 t = gcd % x;
          gcd = x;
          x = t;
        }
      }
      if (gcd > 1) {
        for (int c = col; c < g; ++c) rows[r][c] /= gcd;
      }
    }
    ++rank;
  }
  return g - rank;
}

const std::vector<ColoringTarget>& battery() {
  static const std::vector<ColoringTarget> targets = [] {
    std::vector<ColoringTarget> t;
    t.push_back(ColoringTarget::of(dihedral_quandle(3)));
    t.push_back(ColoringTarget::of(dihedral_quandle(5)));
    FiniteGroup s3 = symmetric_group(3);
    t.push_back(ColoringTarget::of(conjugation_quandle(s3)));
    // (12) swaps the first two points: the permutation [1,0,2], index 2 in
    // the lexicographic listing of S_3.
    SubgroupWithCenterElement ctx{&s3, {s3.identity, 2}, 2};
    auto coset = ColoringTarget::of(coset_quandle(ctx));
    coset.name = "coset:s3:12";
    t.push_back(std::move(coset));
    t.push_back(ColoringTarget::of(alexander_biquandle(5, 2, 3)));
    t.push_back(ColoringTarget::of(alexander_biquandle(5, 3, 2)));
    t.push_back(ColoringTarget::of(alexander_biquandle(5, 2, 1)));
    // (2,2) is the one Z_5 Alexander structure here with s,t,st-1 all units;
    // the three above have st = 1 or t = 1 and cannot see forbidden-move
    // changes at desk scale.
    t.push_back(ColoringTarget::of(alexander_biquandle(5, 2, 2)));
    t.push_back(ColoringTarget::of(symmetric_group(3)));
    t.push_back(ColoringTarget::of(symmetric_group(4)));
    return t;
  }();
  return targets;
}

namespace {

std::vector<std::string> split_colons(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ':') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ColoringTarget builtin_target(const std::string& spec) {
  auto parts = split_colons(spec);
  const std::string& kind = parts[0];
  auto num = [&](size_t i) {
    if (i >= parts.size()) throw InvariantError("target spec '" + spec + "' is missing a field");
    return std::stoi(parts[i]);
  };
  if (kind == "dihedral") return ColoringTarget::of(dihedral_quandle(num(1)));
  if (kind == "alexander") return ColoringTarget::of(alexander_biquandle(num(1), num(2), num(3)));
  if (kind == "conj") {
    if (parts.size() != 2 || parts[1] != "s3") throw InvariantError("only conj:s3 is built in");
    return ColoringTarget::of(conjugation_quandle(symmetric_group(3)));
  }
  if (kind == "coset") {
    if (parts.size() != 3 || parts[1] != "s3" || parts[2] != "12") {
      throw InvariantError("only coset:s3:12 is built in");
    }
    FiniteGroup s3 = symmetric_group(3);
    SubgroupWithCenterElement ctx{&s3, {s3.identity, 2}, 2};
    return ColoringTarget::of(coset_quandle(ctx));
  }
  if (kind == "group") {
    if (parts.size() != 2) throw InvariantError("group target needs a name");
    if (parts[1] == "s3") return ColoringTarget::of(symmetric_group(3));
    if (parts[1] == "s4") return ColoringTarget::of(symmetric_group(4));
    throw InvariantError("only group:s3 and group:s4 are built in");
  }
  if (kind == "enum") {
    auto list = enumerate_biquandles(num(1));
    int idx = num(2);
    if (idx < 0 || idx >= static_cast<int>(list.size())) {
      throw InvariantError("enum target index out of range");
    }
    return ColoringTarget::of(list[idx]);
  }
  throw InvariantError("unknown builtin target '" + spec + "'");
}

InvariantReport report(const GaussCode& code) {
  InvariantReport rep;
  rep.code = serialize_code(code);
  Presentation group_pres = wirtinger_group(code);
  Presentation quandle_pres = quandle_presentation(code);
  Presentation biquandle_pres = biquandle_presentation(code);
  for (const auto& target : battery()) {
    const Presentation* p = nullptr;
    switch (target.theory) {
      case Theory::Group: p = &group_pres; break;
      case Theory::Quandle: p = &quandle_pres; break;
      case Theory::Biquandle: p = &biquandle_pres; break;
    }
    rep.counts.emplace_back(target.name, count_colorings(*p, target));
  }
  rep.rank = abelianization_rank(group_pres);
  rep.genus = carrier_genus(code);
  rep.writhe = code.writhe();
  return rep;
}

}  // namespace vlink
