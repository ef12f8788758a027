#include "vlink/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vlink {

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::Group: return "group";
    case Theory::Quandle: return "quandle";
    case Theory::Biquandle: return "biquandle";
  }
  return "?";
}

namespace {

Term conjugate(Term z, Term y, int sign) {
  if (sign > 0) return Term::mul(y, Term::mul(std::move(z), Term::inv(y)));
  return Term::mul(Term::inv(y), Term::mul(std::move(z), y));
}

// Per-crossing data in arc generators: x = under_out, z = under_in, y = over.
struct ArcRelation {
  int x, z, y, sign;
};

std::vector<ArcRelation> arc_relations(const GaussCode& code) {
  auto as = arcs(code);
  std::map<SemiArc, int> arc_at;
  for (int i = 0; i < static_cast<int>(as.size()); ++i) {
    for (const auto& sa : as[i].semi_arcs) arc_at[sa] = i;
  }
  std::vector<ArcRelation> out;
  for (const auto& [id, sign] : code.crossings) {
    auto [oc, op] = code.find_passage(id, Role::Over);
    auto [uc, up] = code.find_passage(id, Role::Under);
    int uk = static_cast<int>(code.components[uc].size());
    ArcRelation r{};
    r.x = arc_at.at({uc, up});
    r.z = arc_at.at({uc, (up + uk - 1) % uk});
    r.y = arc_at.at({oc, op});
    r.sign = sign;
    out.push_back(r);
  }
  return out;
}

std::vector<std::string> arc_names(const GaussCode& code) {
  std::vector<std::string> names;
  for (size_t i = 0; i < arcs(code).size(); ++i) names.push_back("a" + std::to_string(i));
  return names;
}

}  // namespace

Presentation wirtinger_group(const GaussCode& code) {
  validate_code(code);
  Presentation p;
  p.theory = Theory::Group;
  p.generators = arc_names(code);
  for (const auto& r : arc_relations(code)) {
    p.relations.push_back(
        {Term::make_gen(r.x), conjugate(Term::make_gen(r.z), Term::make_gen(r.y), r.sign)});
  }
  p.meridian = 0;  // arcs() lists the first component's arcs first
  return p;
}

Presentation quandle_presentation(const GaussCode& code) {
  validate_code(code);
  Presentation p;
  p.theory = Theory::Quandle;
  p.generators = arc_names(code);
  for (const auto& r : arc_relations(code)) {
    p.relations.push_back({Term::make_gen(r.x),
                           Term::binary(r.sign > 0 ? Op::QUp : Op::QUpBar,
                                        Term::make_gen(r.z), Term::make_gen(r.y))});
  }
  p.meridian = 0;
  return p;
}

Presentation biquandle_presentation(const GaussCode& code) {
  validate_code(code);
  Presentation p;
  p.theory = Theory::Biquandle;
  auto sas = semi_arcs(code);
  std::map<SemiArc, int> sa_index;
  for (int i = 0; i < static_cast<int>(sas.size()); ++i) {
    sa_index[sas[i]] = i;
    p.generators.push_back("s" + std::to_string(i));
  }
  for (const auto& cg : crossing_geometry(code)) {
    Term a = Term::make_gen(sa_index.at(cg.under_in));
    Term b = Term::make_gen(sa_index.at(cg.over_in));
    Term c = Term::make_gen(sa_index.at(cg.over_out));
    Term d = Term::make_gen(sa_index.at(cg.under_out));
    if (cg.sign > 0) {
      p.relations.push_back({std::move(c), Term::binary(Op::BDown, b, a)});
      p.relations.push_back({std::move(d), Term::binary(Op::BUp, a, b)});
    } else {
      p.relations.push_back({std::move(c), Term::binary(Op::BDownBar, b, a)});
      p.relations.push_back({std::move(d), Term::binary(Op::BUpBar, a, b)});
    }
  }
  p.meridian = 0;
  return p;
}

namespace {

Term adconj_term(const Term& t) {
  switch (t.op) {
    case Op::Gen:
    case Op::One:
      return t;
    case Op::QUp:
      return conjugate(adconj_term(t.args[0]), adconj_term(t.args[1]), +1);
    case Op::QUpBar:
      return conjugate(adconj_term(t.args[0]), adconj_term(t.args[1]), -1);
    default:
      throw PresentationError("adconj: term is not in the quandle theory");
  }
}

}  // namespace

Presentation adconj(const Presentation& quandle_pres) {
  if (quandle_pres.theory != Theory::Quandle) {
    throw PresentationError("adconj expects a quandle presentation");
  }
  Presentation p;
  p.theory = Theory::Group;
  p.generators = quandle_pres.generators;
  p.meridian = quandle_pres.meridian;
  for (const auto& r : quandle_pres.relations) {
    p.relations.push_back({adconj_term(r.lhs), adconj_term(r.rhs)});
  }
  return p;
}

Term longitude_word(const GaussCode& code) {
  validate_code(code);
  if (code.components.size() != 1) {
    throw PresentationError("longitude is defined for single-component codes");
  }
  auto as = arcs(code);
  std::map<SemiArc, int> arc_at;
  for (int i = 0; i < static_cast<int>(as.size()); ++i) {
    for (const auto& sa : as[i].semi_arcs) arc_at[sa] = i;
  }

  std::optional<Term> word;
  auto append = [&](Term t) {
    if (!word) {
      word = std::move(t);
    } else {
      word = Term::mul(std::move(*word), std::move(t));
    }
  };

  const auto& comp = code.components[0];
  for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
    if (comp[p].role != Role::Under) continue;
    auto [oc, op] = code.find_passage(comp[p].crossing, Role::Over);
    Term y = Term::make_gen(arc_at.at({oc, op}));
    int sign = code.crossings.at(comp[p].crossing);
    append(sign > 0 ? y : Term::inv(y));
  }
  int w = code.writhe();
  Term m = Term::make_gen(0);
  for (int i = 0; i < std::abs(w); ++i) append(w > 0 ? Term::inv(m) : m);
  return word.value_or(Term::one());
}

bool term_uses_gen(const Term& t, int gen) {
  if (t.op == Op::Gen) return t.gen == gen;
  return std::any_of(t.args.begin(), t.args.end(),
                     [&](const Term& a) { return term_uses_gen(a, gen); });
}

Term substitute(const Term& t, int gen, const Term& replacement) {
  if (t.op == Op::Gen) return t.gen == gen ? replacement : t;
  Term out = t;
  for (auto& a : out.args) a = substitute(a, gen, replacement);
  return out;
}

namespace {

Term shift_gens(const Term& t, int removed) {
  if (t.op == Op::Gen) return Term::make_gen(t.gen > removed ? t.gen - 1 : t.gen);
  Term out = t;
  for (auto& a : out.args) a = shift_gens(a, removed);
  return out;
}

}  // namespace

Presentation simplify(const Presentation& p) {
  Presentation cur = p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cur.relations.size(); ++i) {
      const auto& rel = cur.relations[i];
      int gen = -1;
      const Term* body = nullptr;
      if (rel.lhs.op == Op::Gen && !term_uses_gen(rel.rhs, rel.lhs.gen)) {
        gen = rel.lhs.gen;
        body = &rel.rhs;
      } else if (rel.rhs.op == Op::Gen && !term_uses_gen(rel.lhs, rel.rhs.gen)) {
        gen = rel.rhs.gen;
        body = &rel.lhs;
      }
      if (gen < 0) continue;
      if (cur.meridian && *cur.meridian == gen) continue;  // keep the basepoint data

      Term replacement = *body;
      Presentation next;
      next.theory = cur.theory;
      next.generators = cur.generators;
      next.generators.erase(next.generators.begin() + gen);
      next.meridian = cur.meridian;
      if (next.meridian && *next.meridian > gen) --*next.meridian;
      for (size_t j = 0; j < cur.relations.size(); ++j) {
        if (j == i) continue;
        Relation r{substitute(cur.relations[j].lhs, gen, replacement),
                   substitute(cur.relations[j].rhs, gen, replacement)};
        next.relations.push_back({shift_gens(r.lhs, gen), shift_gens(r.rhs, gen)});
      }
      if (cur.longitude) {
        next.longitude = shift_gens(substitute(*cur.longitude, gen, replacement), gen);
      }
      cur = std::move(next);
      changed = true;
      break;
    }
  }
  return cur;
}

std::vector<long long> exponent_vector(const Term& t, int n_gens) {
  std::vector<long long> out(n_gens, 0);
  auto walk = [&](auto&& self, const Term& term, int sign) -> void {
    switch (term.op) {
      case Op::Gen:
        out[term.gen] += sign;
        return;
      case Op::One:
        return;
      case Op::Mul:
        self(self, term.args[0], sign);
        self(self, term.args[1], sign);
        return;
      case Op::Inv:
        self(self, term.args[0], -sign);
        return;
      default:
        throw PresentationError("exponent vector needs a group term");
    }
  };
  walk(walk, t, 1);
  return out;
}

namespace {

const std::map<std::string, Op>& op_symbols() {
  static const std::map<std::string, Op> table = {
      {"one", Op::One},       {"mul", Op::Mul},     {"inv", Op::Inv},
      {"qup", Op::QUp},       {"qupbar", Op::QUpBar}, {"bup", Op::BUp},
      {"bdown", Op::BDown},   {"bupbar", Op::BUpBar}, {"bdownbar", Op::BDownBar},
  };
  return table;
}

std::string op_symbol(Op op) {
  for (const auto& [name, o] : op_symbols()) {
    if (o == op) return name;
  }
  throw PresentationError("no symbol for op");
}

}  // namespace

std::string term_to_string(const Term& t, const std::vector<std::string>& gens) {
  switch (t.op) {
    case Op::Gen:
      return gens.at(t.gen);
    case Op::One:
      return "one";
    case Op::Inv:
      return "inv " + term_to_string(t.args[0], gens);
    default:
      return op_symbol(t.op) + " " + term_to_string(t.args[0], gens) + " " +
             term_to_string(t.args[1], gens);
  }
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "theory " << theory_name(p.theory) << "\n";
  out << "gens";
  for (const auto& g : p.generators) out << ' ' << g;
  out << "\n";
  for (const auto& r : p.relations) {
    out << "rel " << term_to_string(r.lhs, p.generators) << " = "
        << term_to_string(r.rhs, p.generators) << "\n";
  }
  if (p.meridian) out << "meridian " << p.generators.at(*p.meridian) << "\n";
  if (p.longitude) out << "longitude " << term_to_string(*p.longitude, p.generators) << "\n";
  return out.str();
}

namespace {

Term parse_term_tokens(const std::vector<std::string>& toks, size_t& pos,
                       const std::map<std::string, int>& gen_index) {
  if (pos >= toks.size()) throw PresentationError("term ends unexpectedly");
  const std::string& tok = toks[pos++];
  auto it = op_symbols().find(tok);
  if (it == op_symbols().end()) {
    auto g = gen_index.find(tok);
    if (g == gen_index.end()) throw PresentationError("unknown generator '" + tok + "'");
    return Term::make_gen(g->second);
  }
  switch (it->second) {
    case Op::One:
      return Term::one();
    case Op::Inv:
      return Term::inv(parse_term_tokens(toks, pos, gen_index));
    default: {
      Term a = parse_term_tokens(toks, pos, gen_index);
      Term b = parse_term_tokens(toks, pos, gen_index);
      return Term::binary(it->second, std::move(a), std::move(b));
    }
  }
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::map<std::string, int> gen_index;
  bool have_theory = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto toks = words(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& key = toks[0];
    if (key == "theory") {
      if (toks.size() != 2) throw PresentationError("bad theory line");
      if (toks[1] == "group") p.theory = Theory::Group;
      else if (toks[1] == "quandle") p.theory = Theory::Quandle;
      else if (toks[1] == "biquandle") p.theory = Theory::Biquandle;
      else throw PresentationError("unknown theory '" + toks[1] + "'");
      have_theory = true;
    } else if (key == "gens") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (gen_index.count(toks[i])) throw PresentationError("duplicate generator " + toks[i]);
        gen_index[toks[i]] = static_cast<int>(p.generators.size());
        p.generators.push_back(toks[i]);
      }
    } else if (key == "rel") {
      auto eq = std::find(toks.begin(), toks.end(), "=");
      if (eq == toks.end()) throw PresentationError("relation needs '='");
      std::vector<std::string> lhs(toks.begin() + 1, eq), rhs(eq + 1, toks.end());
      size_t pos = 0;
      Term l = parse_term_tokens(lhs, pos, gen_index);
      if (pos != lhs.size()) throw PresentationError("trailing tokens in relation");
      pos = 0;
      Term r = parse_term_tokens(rhs, pos, gen_index);
      if (pos != rhs.size()) throw PresentationError("trailing tokens in relation");
      p.relations.push_back({std::move(l), std::move(r)});
    } else if (key == "meridian") {
      if (toks.size() != 2 || !gen_index.count(toks[1])) {
        throw PresentationError("meridian must name a declared generator");
      }
      p.meridian = gen_index.at(toks[1]);
    } else if (key == "longitude") {
      std::vector<std::string> body(toks.begin() + 1, toks.end());
      size_t pos = 0;
      p.longitude = parse_term_tokens(body, pos, gen_index);
      if (pos != body.size()) throw PresentationError("trailing tokens in longitude");
    } else {
      throw PresentationError("unknown line '" + key + "'");
    }
  }
  if (!have_theory) throw PresentationError("presentation needs a theory line");
  return p;
}

}  // namespace vlink
