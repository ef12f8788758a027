#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlink/gauss_code.hpp"

namespace vlink {

struct SurfacePresentation;  // surface.hpp

struct PresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Theory { Group, Quandle, Biquandle };

std::string theory_name(Theory t);

// Term operations. Mul/Inv/One are group symbols; QUp/QUpBar quandle; the
// B* four are biquandle. A term uses symbols of exactly one theory.
enum class Op { Gen, One, Mul, Inv, QUp, QUpBar, BUp, BDown, BUpBar, BDownBar };

struct Term {
  Op op = Op::One;
  int gen = -1;  // only for Op::Gen
  std::vector<Term> args;

  friend bool operator==(const Term&, const Term&) = default;

  static Term make_gen(int g) { return {Op::Gen, g, {}}; }
  static Term one() { return {Op::One, -1, {}}; }
  static Term mul(Term a, Term b) { return {Op::Mul, -1, {std::move(a), std::move(b)}}; }
  static Term inv(Term a) { return {Op::Inv, -1, {std::move(a)}}; }
  static Term binary(Op o, Term a, Term b) { return {o, -1, {std::move(a), std::move(b)}}; }
};

struct Relation {
  Term lhs, rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  Theory theory = Theory::Group;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  std::optional<int> meridian;    // index into generators
  std::optional<Term> longitude;  // group theory only
};

// Wirtinger-style presentations read off a Gauss code. Generators are arcs
// (group/quandle) or semi-arcs (biquandle); one conjugation relation per
// crossing, resp. the two relations c = b_a, d = a^b per crossing, with
// barred operations at negative crossings. Meridian: first arc/semi-arc of
// the first component.
Presentation wirtinger_group(const GaussCode& code);
Presentation quandle_presentation(const GaussCode& code);
Presentation biquandle_presentation(const GaussCode& code);

Presentation presentation_from_surface(const SurfacePresentation& sp, Theory theory);

// Rewrites a quandle presentation as a group presentation, reading the
// quandle operation as conjugation: z qup y -> y z y^-1, z qupbar y -> y^-1 z y.
Presentation adconj(const Presentation& quandle_pres);

// The longitude word of a knot code: the product of the over-arc generators
// (to the power of the crossing sign) at the under-passages in traversal
// order, corrected by meridian^-writhe so the exponent sum is zero.
Term longitude_word(const GaussCode& code);

// Tietze-lite: repeatedly eliminates a generator g with a relation g = T,
// g not in T, substituting T elsewhere. The meridian generator is kept.
Presentation simplify(const Presentation& p);

bool term_uses_gen(const Term& t, int gen);
Term substitute(const Term& t, int gen, const Term& replacement);

// Exponent sum per generator (group terms only).
std::vector<long long> exponent_vector(const Term& t, int n_gens);

std::string term_to_string(const Term& t, const std::vector<std::string>& gens);
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

}  // namespace vlink
