#include "doctest.h"
#include "oracles.hpp"
#include "vlink/invariants.hpp"
#include "vlink/presentation.hpp"

using namespace vlink;

TEST_CASE("generator and relation counts follow the diagram") {
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    size_t n = c.crossings.size();
    Presentation g = wirtinger_group(c);
    Presentation q = quandle_presentation(c);
    Presentation b = biquandle_presentation(c);
    CHECK(g.generators.size() == arcs(c).size());
    CHECK(g.relations.size() == n);
    CHECK(q.generators.size() == arcs(c).size());
    CHECK(q.relations.size() == n);
    CHECK(b.generators.size() == semi_arcs(c).size());
    CHECK(b.relations.size() == 2 * n);
    CHECK(g.meridian == 0);
  }
}

TEST_CASE("empty unknot and unlink presentations") {
  Presentation u = wirtinger_group(parse_code("0"));
  CHECK(u.generators.size() == 1);
  CHECK(u.relations.empty());
  CHECK(abelianization_rank(u) == 1);

  Presentation l = wirtinger_group(parse_code("0 / 0"));
  CHECK(l.generators.size() == 2);
  CHECK(l.relations.empty());
  CHECK(abelianization_rank(l) == 2);
}

TEST_CASE("trefoil: three conjugation relations, rank 1") {
  Presentation g = wirtinger_group(parse_code(corpus_entry("trefoil").text));
  CHECK(g.generators.size() == 3);
  CHECK(g.relations.size() == 3);
  CHECK(abelianization_rank(g) == 1);
}

TEST_CASE("adconj turns the quandle presentation into the Wirtinger one") {
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    Presentation from_quandle = adconj(quandle_presentation(c));
    Presentation direct = wirtinger_group(c);
    CHECK(from_quandle.theory == Theory::Group);
    CHECK(from_quandle.generators == direct.generators);
    CHECK(from_quandle.relations == direct.relations);
    CHECK(from_quandle.meridian == direct.meridian);
  }
  CHECK_THROWS_AS(adconj(wirtinger_group(parse_code("0"))), PresentationError);
}

TEST_CASE("longitude words have exponent sum zero") {
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    if (c.components.size() != 1) continue;
    Term l = longitude_word(c);
    auto exps = exponent_vector(l, static_cast<int>(arcs(c).size()));
    long long sum = 0;
    for (long long v : exps) sum += v;
    CHECK(sum == 0);
  }
  CHECK(longitude_word(parse_code("0")) == Term::one());
  CHECK_THROWS_AS(longitude_word(parse_code("0 / 0")), PresentationError);
}

TEST_CASE("meridian and longitude commute in every S_3 coloring") {
  ColoringTarget s3 = builtin_target("group:s3");
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    if (c.components.size() != 1) continue;
    Presentation g = wirtinger_group(c);
    g.longitude = longitude_word(c);
    for_each_coloring(g, s3, [&](const std::vector<int>& assign) {
      // Evaluate m and l in the group and check they commute.
      std::function<int(const Term&)> eval = [&](const Term& t) -> int {
        switch (t.op) {
          case Op::Gen: return assign[t.gen];
          case Op::One: return s3.group->identity;
          case Op::Mul: return s3.group->op(eval(t.args[0]), eval(t.args[1]));
          case Op::Inv: return s3.group->inv(eval(t.args[0]));
          default: throw PresentationError("group term expected");
        }
      };
      int m = assign[*g.meridian];
      int l = eval(*g.longitude);
      CHECK(s3.group->op(m, l) == s3.group->op(l, m));
    });
  }
}

TEST_CASE("simplify eliminates aliases and preserves counts") {
  Presentation p;
  p.theory = Theory::Quandle;
  p.generators = {"g", "h"};
  p.relations.push_back({Term::make_gen(0), Term::make_gen(1)});
  Presentation s = simplify(p);
  CHECK(s.generators.size() == 1);
  CHECK(s.relations.empty());

  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    Presentation q = quandle_presentation(c);
    Presentation sq = simplify(q);
    // Idempotent.
    Presentation sq2 = simplify(sq);
    CHECK(sq2.generators.size() == sq.generators.size());
    CHECK(sq2.relations.size() == sq.relations.size());
    // Counts survive across the whole battery.
    for (const auto& t : battery()) {
      if (t.theory == Theory::Group) continue;
      CHECK(count_colorings(sq, t) == count_colorings(q, t));
    }
  }
}

TEST_CASE("presentation text format round-trips") {
  for (const auto& e : corpus()) {
    GaussCode c = parse_code(e.text);
    for (auto make : {wirtinger_group, quandle_presentation, biquandle_presentation}) {
      Presentation p = make(c);
      if (p.theory == Theory::Group && c.components.size() == 1) {
        p.longitude = longitude_word(c);
      }
      Presentation back = parse_presentation(format_presentation(p));
      CHECK(back.theory == p.theory);
      CHECK(back.generators == p.generators);
      CHECK(back.relations == p.relations);
      CHECK(back.meridian == p.meridian);
      CHECK(back.longitude == p.longitude);
    }
  }
  CHECK_THROWS_AS(parse_presentation("gens a\nrel a = a\n"), PresentationError);  // no theory
  CHECK_THROWS_AS(parse_presentation("theory group\nrel a = a\n"), PresentationError);
}

TEST_CASE("negative crossings use the inverse conjugation") {
  GaussCode neg = parse_code("O1- U1-");
  Presentation g = wirtinger_group(neg);
  REQUIRE(g.relations.size() == 1);
  // x = y^-1 z y shape: the relation's right side starts with an inverse.
  CHECK(g.relations[0].rhs.op == Op::Mul);
  CHECK(g.relations[0].rhs.args[0].op == Op::Inv);
}
