#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "vlink/invariants.hpp"

using namespace vlink;

// Hand-written tricoloring oracle for the trefoil: arcs A, B, C with
// B = A*C, A = C*B, C = B*A in R_3 (a*b = 2b - a mod 3). Enumerates all 27
// assignments with the equations written out directly.
static int trefoil_tricolorings() {
  int count = 0;
  auto star = [](int a, int b) { return ((2 * b - a) % 3 + 3) % 3; };
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        if (b == star(a, c) && a == star(c, b) && c == star(b, a)) ++count;
      }
    }
  }
  return count;
}

// Hand-written dihedral oracle for the figure eight: arcs A1..A4 with
// A1 = A4 *bar A3, A2 = A1 * A4, A3 = A2 *bar A1, A4 = A3 * A2 (in R_n the
// operation is its own inverse).
static int figure8_dihedral(int n) {
  int count = 0;
  auto star = [n](int a, int b) { return ((2 * b - a) % n + n) % n; };
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < n; ++a2) {
      for (int a3 = 0; a3 < n; ++a3) {
        for (int a4 = 0; a4 < n; ++a4) {
          if (a1 == star(a4, a3) && a2 == star(a1, a4) && a3 == star(a2, a1) &&
              a4 == star(a3, a2)) {
            ++count;
          }
        }
      }
    }
  }
  return count;
}

TEST_CASE("frozen coloring numerics match the hand oracles") {
  CHECK(trefoil_tricolorings() == 9);
  CHECK(figure8_dihedral(3) == 3);
  CHECK(figure8_dihedral(5) == 25);

  ColoringTarget r3 = builtin_target("dihedral:3");
  ColoringTarget r5 = builtin_target("dihedral:5");
  GaussCode tre = parse_code(corpus_entry("trefoil").text);
  GaussCode fig8 = parse_code(corpus_entry("figure-8").text);
  CHECK(count_colorings(quandle_presentation(tre), r3) == 9);
  CHECK(count_colorings(quandle_presentation(fig8), r3) == 3);
  CHECK(count_colorings(quandle_presentation(fig8), r5) == 25);
}

TEST_CASE("the unknot takes n colorings from any order-n target") {
  GaussCode u = parse_code("0");
  for (const auto& t : battery()) {
    Presentation p = t.theory == Theory::Group ? wirtinger_group(u)
                     : t.theory == Theory::Quandle ? quandle_presentation(u)
                                                   : biquandle_presentation(u);
    CHECK(count_colorings(p, t) == static_cast<Count>(t.order()));
  }
}

TEST_CASE("backtracking equals naive enumeration within the budget") {
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    for (const auto& t : battery()) {
      Presentation p = t.theory == Theory::Group ? wirtinger_group(c)
                       : t.theory == Theory::Quandle ? quandle_presentation(c)
                                                     : biquandle_presentation(c);
      double space = std::pow(t.order(), static_cast<double>(p.generators.size()));
      if (space > 1e6) continue;
      CHECK(count_colorings(p, t) == vlink_test::naive_count_colorings(p, t));
    }
  }
}

TEST_CASE("counts ignore generator and relation order") {
  GaussCode fig8 = parse_code(corpus_entry("figure-8").text);
  Presentation p = quandle_presentation(fig8);
  ColoringTarget r5 = builtin_target("dihedral:5");
  Count base = count_colorings(p, r5);

  Presentation shuffled = p;
  std::reverse(shuffled.relations.begin(), shuffled.relations.end());
  CHECK(count_colorings(shuffled, r5) == base);

  // Reverse the generator order (relabel every term).
  int n = static_cast<int>(p.generators.size());
  Presentation relabeled = p;
  std::reverse(relabeled.generators.begin(), relabeled.generators.end());
  std::function<Term(const Term&)> flip = [&](const Term& t) {
    if (t.op == Op::Gen) return Term::make_gen(n - 1 - t.gen);
    Term out = t;
    for (auto& a : out.args) a = flip(a);
    return out;
  };
  for (auto& r : relabeled.relations) r = {flip(r.lhs), flip(r.rhs)};
  CHECK(count_colorings(relabeled, r5) == base);
}

TEST_CASE("global constants color every quandle presentation") {
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    Presentation p = quandle_presentation(c);
    for (const auto& t : battery()) {
      if (t.theory != Theory::Quandle) continue;
      CHECK(count_colorings(p, t) >= static_cast<Count>(t.order()));
    }
  }
  // The split unlink takes component-wise constants: n^m of them.
  Presentation unlink = quandle_presentation(parse_code("0 / 0"));
  CHECK(count_colorings(unlink, builtin_target("dihedral:3")) == 9);
}

TEST_CASE("surjective counts") {
  GaussCode u = parse_code("0");
  GaussCode tre = parse_code(corpus_entry("trefoil").text);
  ColoringTarget r3 = builtin_target("dihedral:3");
  CHECK(count_surjective_colorings(quandle_presentation(u), r3) == 0);
  CHECK(count_surjective_colorings(quandle_presentation(tre), r3) == 6);
  ColoringTarget r1 = builtin_target("dihedral:1");
  CHECK(count_surjective_colorings(quandle_presentation(tre), r1) == 1);
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    Presentation p = quandle_presentation(c);
    CHECK(count_surjective_colorings(p, r3) <= count_colorings(p, r3));
  }
}

TEST_CASE("theory mismatches are rejected") {
  GaussCode u = parse_code("0");
  CHECK_THROWS_AS(count_colorings(wirtinger_group(u), builtin_target("dihedral:3")),
                  InvariantError);
  CHECK_THROWS_AS(count_colorings(biquandle_presentation(u), builtin_target("group:s3")),
                  InvariantError);
  // Quandle presentations may be counted into biquandle targets (promotion).
  FiniteBiquandle promoted = quandle_to_biquandle(dihedral_quandle(3));
  CHECK(count_colorings(quandle_presentation(u), ColoringTarget::of(promoted)) == 3);
}

TEST_CASE("promoted biquandle counts equal quandle counts on the corpus") {
  for (const auto& spec : {"dihedral:3", "dihedral:5", "conj:s3"}) {
    ColoringTarget q = builtin_target(spec);
    ColoringTarget b = ColoringTarget::of(quandle_to_biquandle(*q.quandle));
    for (const auto& e : corpus()) {
      GaussCode c = parse_code(e.text);
      CHECK(count_colorings(quandle_presentation(c), q) ==
            count_colorings(biquandle_presentation(c), b));
    }
  }
}

TEST_CASE("abelianization rank equals the component count") {
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    CHECK(abelianization_rank(wirtinger_group(c)) ==
          static_cast<int>(c.components.size()));
  }
  CHECK_THROWS_AS(abelianization_rank(quandle_presentation(parse_code("0"))), InvariantError);
}

TEST_CASE("reports carry the documented fields") {
  InvariantReport rep = report(parse_code(corpus_entry("trefoil").text));
  CHECK(rep.code == corpus_entry("trefoil").text);
  CHECK(rep.rank == 1);
  CHECK(rep.genus == 0);
  CHECK(rep.writhe == 3);
  bool has_r3 = false;
  for (const auto& [name, count] : rep.counts) {
    if (name == "dihedral:3") {
      has_r3 = true;
      CHECK(count == 9);
    }
  }
  CHECK(has_r3);
  CHECK(rep.counts.size() == battery().size());
}

TEST_CASE("kishino's quandle counts equal the unknot's across the battery") {
  InvariantReport k = report(parse_code(corpus_entry("kishino").text));
  InvariantReport u = report(parse_code("0"));
  for (size_t i = 0; i < battery().size(); ++i) {
    if (battery()[i].theory != Theory::Quandle) continue;
    CHECK(k.counts[i].second == u.counts[i].second);
  }
}
